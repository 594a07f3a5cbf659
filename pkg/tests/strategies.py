"""Random path specifications for property tests.

``injective_case`` builds an injective d = 1 path together with its exact
variation worked out from the construction data alone (band widths, junction
jumps, geometric closed forms), so the library's answer can be compared with
an independent value.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction as F
from typing import Optional

from hypothesis import strategies as st

from detmp.families import GeometricFamily, HarmonicFamily
from detmp.path import ConstantTail, PathSpec, PeriodicRepeat, UnboundedPrimitive
from detmp.primitives import Affine, Constant


def aff(k, c) -> Affine:
    return Affine((F(k),), (F(c),))


def rand_frac(rng: random.Random, lo: int, hi: int, den: int = 8) -> F:
    return F(rng.randint(lo * den, hi * den), den)


# --- general specs -------------------------------------------------------------------

def random_spec(rng: random.Random, dim: Optional[int] = None) -> PathSpec:
    """Finite affine/constant pieces with a random tail; may be anything."""
    d = dim or rng.choice((1, 1, 1, 2))
    k = rng.randint(1, 4)
    t, pieces = F(0), []
    for _ in range(k):
        L = F(rng.randint(1, 8), rng.choice((1, 2, 4)))
        if rng.random() < 0.2:
            prim = Constant(tuple(rand_frac(rng, -3, 3) for _ in range(d)))
        else:
            prim = Affine(tuple(rand_frac(rng, -3, 3, 2) for _ in range(d)),
                          tuple(rand_frac(rng, -3, 3) for _ in range(d)))
        pieces.append((t, t + L, prim))
        t += L
    r = rng.random()
    if r < 0.3:
        tail = ConstantTail(t, tuple(rand_frac(rng, -3, 3) for _ in range(d)))
    elif r < 0.6:
        t0 = rng.choice([p[0] for p in pieces])
        tail = PeriodicRepeat(t0, t - t0)
    else:
        tail = UnboundedPrimitive(t, Affine(tuple(rand_frac(rng, -2, 2, 2) for _ in range(d)),
                                            tuple(rand_frac(rng, -3, 3) for _ in range(d))))
    return PathSpec.build(d, pieces, tail=tail)


@st.composite
def specs(draw, dim=None):
    seed = draw(st.integers(0, 2 ** 32 - 1))
    return random_spec(random.Random(seed), dim)


# --- injective specs with independent variation --------------------------------------

@dataclass
class InjectiveCase:
    path: PathSpec
    T: F
    finite: bool
    variation: Optional[F]      # exact variation on [0, T] when finite
    jump_sum: Optional[F]
    jump_const: Optional[F] = None  # harmonic families: |jump n| = jump_const / (n + 1)


def injective_case(rng: random.Random, family: Optional[str] = None) -> InjectiveCase:
    """Pieces mapped onto disjoint value bands in random order, optionally
    followed by a family accumulating at ``T`` around a band centre.

    ``family`` is None, "geometric" or "harmonic"; by default it is random.
    """
    if family is None:
        family = rng.choice((None, "geometric", "harmonic"))
    k = rng.randint(1, 5)
    cuts = sorted(rng.sample(range(-60, 60), 2 * (k + 1)))
    bands = [(F(cuts[2 * i], 4), F(cuts[2 * i + 1], 4)) for i in range(k + 1)]
    rng.shuffle(bands)
    t, pieces, cont, jumps, prev_end = F(0), [], F(0), F(0), None
    for lo, hi in bands[:k]:
        L = F(rng.randint(1, 6), rng.choice((1, 2, 3)))
        up = rng.random() < 0.5
        start, end = (lo, hi) if up else (hi, lo)
        slope = (end - start) / L
        pieces.append((t, t + L, aff(slope, start - slope * t)))
        cont += hi - lo
        if prev_end is not None:
            jumps += abs(start - prev_end)
        prev_end, t = end, t + L
    lo, hi = bands[k]
    v = (lo + hi) / 2
    if family is None:
        # tail value: the free band's centre, reached by a jump at t
        jumps += abs(v - prev_end)
        return InjectiveCase(PathSpec.build(1, pieces, tail=ConstantTail(t, (v,))), t,
                             True, cont + jumps, jumps)
    w = (hi - lo) / 2
    scale = F(rng.randint(1, 4), 2)
    acc = t + scale
    ke = -F(rng.randint(1, 4), 4) * w / scale      # even pieces above v
    ko = F(rng.randint(1, 4), 4) * w / scale       # odd pieces below v
    even, odd = aff(ke, v - ke * acc), aff(ko, v - ko * acc)
    if family == "harmonic":
        fam = HarmonicFamily(acc, scale, even, odd)
        return InjectiveCase(PathSpec.build(1, pieces, [fam], ConstantTail(acc, (v,))), acc,
                             False, None, None, abs(ke - ko) * scale)
    r = F(1, rng.choice((2, 3, 4)))
    fam = GeometricFamily.alternating("dyadic_alternating", acc, scale, r, "left", even, odd)
    # piece n lives on [acc - s r^n, acc - s r^(n+1)); slope alternates ke, ko
    fam_cont = scale * (1 - r) * (abs(ke) + abs(ko) * r) / (1 - r * r)
    fam_jumps = scale * abs(ke - ko) * r / (1 - r)
    entry = v - ke * scale                           # even piece 0 at acc - scale
    jumps += abs(entry - prev_end) + fam_jumps
    path = PathSpec.build(1, pieces, [fam], ConstantTail(acc, (v,)))
    return InjectiveCase(path, acc, True, cont + fam_cont + jumps, jumps)
