"""Affine complex 1-jets with a rigorous uniform error bound.

A Jet (f, f0, f1, f2, e) represents the class of all functions g on the
closed tri-disk A = { z in C^3 : |z_i| <= 1 } with

    |g(z) - (f + f0*z0 + f1*z1 + f2*z2)| < e.

Arithmetic on jets returns a jet whose class contains every pointwise
result of members of the operand classes.  Division and square root first
check a feasibility gap; an infeasible division returns the absorbing
sentinel jet (all coefficients zero, e = +inf), and an infeasible square
root returns a pure-error jet that still bounds every possible root.

The cached `size` field is an upper bound for |f0| + |f1| + |f2|, computed
once by the constructor with a fixed expression; several error formulas
consume it, so every construction path must go through this class.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import roundoff
from .roundoff import EPS
from .complex_ball import (
    BallComplex,
    ExactComplex,
    abs_lb_x,
    abs_ub_x,
    add_aa,
    add_xd,
    add_xx,
    div_dx,
    div_xd,
    div_xx,
    mul_xd,
    mul_xx,
    neg_x,
    sqrt_x,
    sub_aa,
    sub_xd,
    sub_xx,
)

_ENV = roundoff.environment()
_ZERO = ExactComplex(0.0, 0.0)


@dataclass(frozen=True, slots=True)
class Jet:
    f: ExactComplex
    f0: ExactComplex
    f1: ExactComplex
    f2: ExactComplex
    e: float
    size: float = field(init=False)

    def __post_init__(self):
        size = (1.0 + 2.0 * EPS) * (abs_ub_x(self.f0) + (abs_ub_x(self.f1) + abs_ub_x(self.f2)))
        object.__setattr__(self, "size", size)
        env = _ENV
        record = roundoff.record_value
        record(env, self.f.re)
        record(env, self.f.im)
        record(env, self.f0.re)
        record(env, self.f0.im)
        record(env, self.f1.re)
        record(env, self.f1.im)
        record(env, self.f2.re)
        record(env, self.f2.im)
        record(env, self.e)
        record(env, size)

    def __neg__(self):
        return neg_j(self)

    def __add__(self, other):
        if isinstance(other, Jet):
            return add_jj(self, other)
        if isinstance(other, (int, float)):
            return add_jd(self, float(other))
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, Jet):
            return sub_jj(self, other)
        if isinstance(other, (int, float)):
            return sub_jd(self, float(other))
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Jet):
            return mul_jj(self, other)
        if isinstance(other, (int, float)):
            return mul_jd(self, float(other))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return div_jj(self, other)
        if isinstance(other, (int, float)):
            return div_jd(self, float(other))
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, float)):
            return div_dj(float(other), self)
        return NotImplemented


def _as_exact(v) -> ExactComplex:
    if isinstance(v, ExactComplex):
        return v
    if isinstance(v, complex):
        return ExactComplex(v.real, v.imag)
    if isinstance(v, (int, float)):
        return ExactComplex(float(v), 0.0)
    if isinstance(v, tuple):
        return ExactComplex(float(v[0]), float(v[1]))
    raise TypeError(f"cannot interpret {v!r} as an exact complex number")


def jet(f, f0=0.0, f1=0.0, f2=0.0, e: float = 0.0) -> Jet:
    """Convenience constructor; coefficients may be ExactComplex, complex,
    real numbers, or (re, im) pairs."""
    return Jet(_as_exact(f), _as_exact(f0), _as_exact(f1), _as_exact(f2), float(e))


def sentinel_jet() -> Jet:
    """The absorbing failure value: zero coefficients, infinite error."""
    return Jet(_ZERO, _ZERO, _ZERO, _ZERO, math.inf)


def is_sentinel(x: Jet) -> bool:
    return x.e == math.inf


def neg_j(x: Jet) -> Jet:
    return Jet(neg_x(x.f), neg_x(x.f0), neg_x(x.f1), neg_x(x.f2), x.e)


def add_jj(x: Jet, y: Jet) -> Jet:
    r_f = add_xx(x.f, y.f)
    r_f0 = add_xx(x.f0, y.f0)
    r_f1 = add_xx(x.f1, y.f1)
    r_f2 = add_xx(x.f2, y.f2)
    r_error = (1.0 + 3.0 * EPS) * ((x.e + y.e) + ((r_f.e + r_f0.e) + (r_f1.e + r_f2.e)))
    return Jet(r_f.z, r_f0.z, r_f1.z, r_f2.z, r_error)


def sub_jj(x: Jet, y: Jet) -> Jet:
    r_f = sub_xx(x.f, y.f)
    r_f0 = sub_xx(x.f0, y.f0)
    r_f1 = sub_xx(x.f1, y.f1)
    r_f2 = sub_xx(x.f2, y.f2)
    r_error = (1.0 + 3.0 * EPS) * ((x.e + y.e) + ((r_f.e + r_f0.e) + (r_f1.e + r_f2.e)))
    return Jet(r_f.z, r_f0.z, r_f1.z, r_f2.z, r_error)


def add_jd(x: Jet, y: float) -> Jet:
    r_f = add_xd(x.f, y)
    return Jet(r_f.z, x.f0, x.f1, x.f2, (1.0 + EPS) * (x.e + r_f.e))


def sub_jd(x: Jet, y: float) -> Jet:
    r_f = sub_xd(x.f, y)
    return Jet(r_f.z, x.f0, x.f1, x.f2, (1.0 + EPS) * (x.e + r_f.e))


def mul_jj(x: Jet, y: Jet) -> Jet:
    """First-order product; the dropped second-order terms are absorbed by
    the (size + e) * (size + e) term of the error bound."""
    xdist = size_j(x)
    ydist = size_j(y)
    ax = abs_ub_x(x.f)
    ay = abs_ub_x(y.f)
    r_f = mul_xx(x.f, y.f)
    r_f0 = add_aa(mul_xx(x.f, y.f0), mul_xx(x.f0, y.f))
    r_f1 = add_aa(mul_xx(x.f, y.f1), mul_xx(x.f1, y.f))
    r_f2 = add_aa(mul_xx(x.f, y.f2), mul_xx(x.f2, y.f))
    a = (xdist + x.e) * (ydist + y.e)
    b = ax * y.e + ay * x.e
    c = (r_f.e + r_f0.e) + (r_f1.e + r_f2.e)
    r_error = (1.0 + 3.0 * EPS) * (a + (b + c))
    return Jet(r_f.z, r_f0.z, r_f1.z, r_f2.z, r_error)


def mul_jd(x: Jet, y: float) -> Jet:
    r_f = mul_xd(x.f, y)
    r_f0 = mul_xd(x.f0, y)
    r_f1 = mul_xd(x.f1, y)
    r_f2 = mul_xd(x.f2, y)
    r_error = (1.0 + 3.0 * EPS) * ((x.e * math.fabs(y))
                                   + ((r_f.e + r_f0.e) + (r_f1.e + r_f2.e)))
    return Jet(r_f.z, r_f0.z, r_f1.z, r_f2.z, r_error)


def div_jd(x: Jet, y: float) -> Jet:
    r_f = div_xd(x.f, y)
    r_f0 = div_xd(x.f0, y)
    r_f1 = div_xd(x.f1, y)
    r_f2 = div_xd(x.f2, y)
    r_error = (1.0 + 3.0 * EPS) * ((x.e / math.fabs(y))
                                   + ((r_f.e + r_f0.e) + (r_f1.e + r_f2.e)))
    return Jet(r_f.z, r_f0.z, r_f1.z, r_f2.z, r_error)


def div_jj(x: Jet, y: Jet) -> Jet:
    """Quotient; returns the sentinel when the denominator class is not
    provably bounded away from zero."""
    xdist = size_j(x)
    ydist = size_j(y)
    ax = abs_ub_x(x.f)
    ay = abs_lb_x(y.f)
    gap = ay - (1.0 + EPS) * (y.e + ydist)
    if not gap > 0.0:
        return sentinel_jet()
    den = mul_xx(y.f, y.f)
    r_f = div_xx(x.f, y.f)
    r_f0 = sub_aa(mul_xx(x.f0, y.f), mul_xx(x.f, y.f0)) / den
    r_f1 = sub_aa(mul_xx(x.f1, y.f), mul_xx(x.f, y.f1)) / den
    r_f2 = sub_aa(mul_xx(x.f2, y.f), mul_xx(x.f, y.f2)) / den
    a = (ax + (xdist + x.e)) / gap
    b = (ax / ay + xdist / ay) + (ydist * ax) / (ay * ay)
    c = (r_f.e + r_f0.e) + (r_f1.e + r_f2.e)
    r_error = (1.0 + 3.0 * EPS) * (((1.0 + 3.0 * EPS) * a - (1.0 - 3.0 * EPS) * b) + c)
    return Jet(r_f.z, r_f0.z, r_f1.z, r_f2.z, r_error)


def div_dj(x: float, y: Jet) -> Jet:
    ydist = size_j(y)
    ax = math.fabs(x)
    ay = abs_lb_x(y.f)
    gap = ay - (1.0 + EPS) * (y.e + ydist)
    if not gap > 0.0:
        return sentinel_jet()
    den = mul_xx(y.f, y.f)
    r_f = div_dx(x, y.f)
    r_f0 = mul_xx(ExactComplex(-x, 0.0), y.f0) / den
    r_f1 = mul_xx(ExactComplex(-x, 0.0), y.f1) / den
    r_f2 = mul_xx(ExactComplex(-x, 0.0), y.f2) / den
    b = ax / ay + (ydist * ax) / (ay * ay)
    c = (r_f.e + r_f0.e) + (r_f1.e + r_f2.e)
    r_error = (1.0 + 3.0 * EPS) * (((1.0 + 2.0 * EPS) * (ax / gap) - (1.0 - 3.0 * EPS) * b) + c)
    return Jet(r_f.z, r_f0.z, r_f1.z, r_f2.z, r_error)


def sqrt_j(x: Jet) -> Jet:
    """Square root.  When the class may reach zero, falls back to a
    pure-error jet whose bound covers every root of every member; both
    branches are total."""
    xdist = size_j(x)
    ax = abs_ub_x(x.f)
    gap = ax - (1.0 + EPS) * (xdist + x.e)
    if not gap > 0.0:
        e = (1.0 + 2.0 * EPS) * math.sqrt(ax + (xdist + x.e))
        roundoff.record_value(_ENV, e)
        return Jet(_ZERO, _ZERO, _ZERO, _ZERO, e)
    r_f = sqrt_x(x.f)
    t = add_aa(r_f, r_f)
    # Linear coefficients divide as zero-radius balls; dividing a ball with
    # nonzero radius would book the error differently.
    r_f0 = BallComplex(x.f0, 0.0) / t
    r_f1 = BallComplex(x.f1, 0.0) / t
    r_f2 = BallComplex(x.f2, 0.0) / t
    r_error = (1.0 + 3.0 * EPS) * (((1.0 + EPS) * math.sqrt(ax)
               - (1.0 - 3.0 * EPS) * (xdist / (2.0 * math.sqrt(ax)) + math.sqrt(gap)))
               + ((r_f.e + r_f0.e) + (r_f1.e + r_f2.e)))
    return Jet(r_f.z, r_f0.z, r_f1.z, r_f2.z, r_error)


def abs_ub_j(x: Jet) -> float:
    """Upper bound for |g(z)| over all members g and all z in the tri-disk."""
    v = (1.0 + 2.0 * EPS) * (abs_ub_x(x.f) + (size_j(x) + x.e))
    roundoff.record_value(_ENV, v)
    return v


def abs_lb_j(x: Jet) -> float:
    """Lower bound for |g(z)|, clamped at zero (sentinels land here)."""
    v = (1.0 - EPS) * (abs_lb_x(x.f) - (1.0 + EPS) * (size_j(x) + x.e))
    roundoff.record_value(_ENV, v)
    return v if v > 0.0 else 0.0


def size_j(x: Jet) -> float:
    return x.size
