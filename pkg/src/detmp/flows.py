"""Two-parameter flows, their space-time lifts and the lifted symbol."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import analysis as an
from . import scalar as sc
from .path import PathSpec, vadd, vsub
from .process import AmbiguousRegion, FunctionProcess, Killed, Process, ProcessError, vec


class NotOnAnyPath(ProcessError):
    pass


class DerivativeUndefined(ProcessError):
    pass


class SymbolMismatch(ProcessError):
    pass


@dataclass(frozen=True)
class InhomogeneousFlow:
    """``flow(s, t, x)``: started in ``x`` at time ``s``, the position at ``t >= s``."""

    fn: Callable
    dim: int = 1
    deriv: Optional[Callable] = None
    name: str = ""

    def __call__(self, s, t, x):
        s, t = sc.as_scalar(s), sc.as_scalar(t)
        if t < s:
            raise ProcessError("flow needs t >= s")
        if t == s:
            return vec(x)
        return self.fn(s, t, vec(x))

    def right_derivative(self, s, t, x):
        """``d+/dt flow(s, t, x)`` or None."""
        if self.deriv is None:
            return None
        d = self.deriv(sc.as_scalar(s), sc.as_scalar(t), vec(x))
        return None if d is None else vec(d)


def space_homogeneous_expansion(f: PathSpec) -> InhomogeneousFlow:
    """``flow(s, t, x) = x + f(t) - f(s)``; no expandability needed."""
    f.require_valid()

    def fn(s, t, x):
        return vadd(x, vsub(f.evaluate(t), f.evaluate(s)))

    def deriv(s, t, x):
        return an.right_derivative(f, t).value

    return InhomogeneousFlow(fn, f.dim, deriv, "space-homogeneous expansion")


def process_flow(P: Process) -> InhomogeneousFlow:
    """A time-homogeneous process read as the flow ``X_{t-s}^x``."""

    def fn(s, t, x):
        return P.evaluate(x, t - s)

    def deriv(s, t, x):
        return P.right_derivative(x, t - s)

    return InhomogeneousFlow(fn, P.dim, deriv, getattr(P, "name", ""))


def flow_process(flow: InhomogeneousFlow) -> FunctionProcess:
    """The flow started at time 0, read as ``X_t^x = flow(0, t, x)``.

    Time homogeneity is not implied; that is what the verifiers are for.
    """
    return FunctionProcess(lambda x, t: flow(0, t, x), flow.dim, flow.name,
                           lambda x, t: flow.right_derivative(0, t, x))


@dataclass(frozen=True)
class LiftedProcess(Process):
    """``Y_t^{(x, s)} = (flow(s, s+t, x), s+t)`` on ``R^d x [0, inf)``."""

    flow: InhomogeneousFlow

    @property
    def dim(self):
        return self.flow.dim + 1

    def evaluate(self, y, t):
        y, t = vec(y), sc.as_scalar(t)
        x, s = y[:-1], y[-1]
        if s < 0:
            raise ProcessError("time coordinate must be nonnegative")
        z = self.flow(s, s + t, x)
        if isinstance(z, Killed):
            return z
        return tuple(z) + (s + t,)

    def right_derivative(self, y, t):
        y = vec(y)
        x, s = y[:-1], y[-1]
        d = self.flow.right_derivative(s, s + t, x)
        return None if d is None else tuple(d) + (Fraction(1),)


def space_time_lift(P) -> LiftedProcess:
    if isinstance(P, InhomogeneousFlow):
        flow = P
    elif isinstance(P, PathSpec):
        flow = space_homogeneous_expansion(P)
    else:
        flow = process_flow(P)
    if flow.dim != 1:
        raise ProcessError("space-time lifts take one-dimensional input")
    return LiftedProcess(flow)


@dataclass(frozen=True)
class SymbolValue:
    """``re + i * im`` with exact parts where possible."""

    re: object
    im: object

    def to_complex(self) -> complex:
        return complex(sc.to_float(self.re), sc.to_float(self.im))

    def __eq__(self, other):
        if isinstance(other, (complex, int, float, Fraction)):
            c = complex(other)
            return self.re == c.real and self.im == c.imag
        if not isinstance(other, SymbolValue):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    __hash__ = None

    def __str__(self) -> str:
        return f"{sc.fmt(self.re)}{'+' if not sc.sign(self.im) < 0 else '-'}{sc.fmt(abs(self.im))}i"


def _derivative_at(Y: LiftedProcess, y, starts):
    y = vec(y)
    y1, y2 = y[:-1], y[-1]
    if starts is None:
        try:
            return Y.flow.right_derivative(y2, y2, y1)
        except AmbiguousRegion as e:
            raise NotOnAnyPath(str(e)) from None
    found = []
    for x in starts:
        x = vec(x)
        try:
            if Y.flow(0, y2, x) != y1:
                continue
        except AmbiguousRegion:
            continue
        found.append((x, Y.flow.right_derivative(0, y2, x)))
    if not found:
        raise NotOnAnyPath(f"no listed start reaches {y}")
    if any(d != found[0][1] for _, d in found):
        raise SymbolMismatch(f"right derivatives at {y} differ between starts")
    return found[0][1]


def symbol_eval(Y: LiftedProcess, y, xi, starts=None) -> SymbolValue:
    """``-i (xi_1 d+f(t*) + xi_2)`` at the lifted state ``y = (x, t*)``.

    With ``starts`` the derivative is taken along every listed path through
    ``y`` and the values must agree.
    """
    xi = vec(xi)
    d = _derivative_at(Y, y, starts)
    if d is None:
        raise DerivativeUndefined(f"no right derivative at {vec(y)}")
    return SymbolValue(Fraction(0), -(xi[0] * d[0] + xi[1]))


def time_dependent_symbol(flow: InhomogeneousFlow, t, x, eta) -> SymbolValue:
    """``p_t(x, eta) = -i eta d+f(t)`` for the path through ``x`` at time ``t``."""
    d = flow.right_derivative(t, t, x)
    if d is None:
        raise DerivativeUndefined(f"no right derivative at t = {sc.fmt(t)}")
    return SymbolValue(Fraction(0), -sc.as_scalar(eta) * d[0])
