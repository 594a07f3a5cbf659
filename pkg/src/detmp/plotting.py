"""Minimal SVG rendering of sampled trajectories.

Jumps are drawn the cadlag way: a filled dot at the value, an open dot at the
left limit.  Only the jumps of a known path are marked; sampled processes get
a plain polyline that breaks where the path is killed.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from . import scalar as sc
from .path import DivergentInventory, PathSpec
from .process import Killed

W, H, PAD = 640, 360, 40
COLORS = ("#1f77b4", "#d62728")


def _scale(lo, hi, a, b):
    span = (hi - lo) or 1.0
    return lambda v: a + (v - lo) / span * (b - a)


def svg_plot(P, x, times, path: PathSpec | None = None) -> str:
    samples = []
    for t in times:
        y = P.evaluate(x, t)
        if isinstance(y, Killed):
            break
        samples.append((t, y))
    jumps = []
    if path is not None and samples:
        inv = path.jumps_in(times[0], samples[-1][0], include_lo=False)
        if not isinstance(inv, DivergentInventory):
            jumps = list(inv)
    vals = [sc.to_float(c) for _, y in samples for c in y]
    vals += [sc.to_float(c) for j in jumps for c in j.left_limit + j.value]
    if not vals:
        vals = [0.0]
    fx = _scale(sc.to_float(times[0]), sc.to_float(times[-1]), PAD, W - PAD)
    fy = _scale(min(vals), max(vals), H - PAD, PAD)
    jump_times = {j.time for j in jumps}
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" '
           f'viewBox="0 0 {W} {H}">',
           f'<rect width="{W}" height="{H}" fill="white"/>',
           f'<line x1="{PAD}" y1="{H - PAD}" x2="{W - PAD}" y2="{H - PAD}" stroke="black"/>',
           f'<line x1="{PAD}" y1="{PAD}" x2="{PAD}" y2="{H - PAD}" stroke="black"/>',
           f'<text x="{PAD}" y="{PAD - 10}" font-size="12">x = ({escape(", ".join(sc.fmt(c) for c in x))})</text>']
    dim = len(samples[0][1]) if samples else 0
    for c in range(dim):
        color = COLORS[c % len(COLORS)]
        run = []
        for (t0, y0), (t1, y1) in zip(samples, samples[1:]):
            broken = any(t0 < jt <= t1 for jt in jump_times)
            run.append(f"{fx(sc.to_float(t0)):.2f},{fy(sc.to_float(y0[c])):.2f}")
            if broken:
                out.append(f'<polyline fill="none" stroke="{color}" points="{" ".join(run)}"/>')
                run = []
        if samples:
            t, y = samples[-1]
            run.append(f"{fx(sc.to_float(t)):.2f},{fy(sc.to_float(y[c])):.2f}")
            out.append(f'<polyline fill="none" stroke="{color}" points="{" ".join(run)}"/>')
        for j in jumps:
            px = fx(sc.to_float(j.time))
            out.append(f'<circle cx="{px:.2f}" cy="{fy(sc.to_float(j.value[c])):.2f}" r="3" fill="{color}"/>')
            out.append(f'<circle cx="{px:.2f}" cy="{fy(sc.to_float(j.left_limit[c])):.2f}" r="3" '
                       f'fill="white" stroke="{color}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
