"""Exact complex numbers and complex balls (center plus error radius).

An ExactComplex holds a complex number exactly in a pair of binary64
reals.  A BallComplex is a closed disk: every complex number within its
radius of the center.  Each operation below returns a ball whose radius
follows a fixed round-to-nearest error formula; the parenthesization of
those formulas is load-bearing and must not be rearranged.

Division by a zero center and the square root of an exact zero are
documented preconditions, not checked here: the jet layer's feasibility
gap rejects such inputs before they can reach these kernels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import roundoff
from .roundoff import EPS, HALFEPS

_ENV = roundoff.environment()


@dataclass(frozen=True, slots=True)
class ExactComplex:
    re: float
    im: float

    def __neg__(self):
        return neg_x(self)

    def __add__(self, other):
        if isinstance(other, ExactComplex):
            return add_xx(self, other)
        if isinstance(other, (int, float)):
            return add_xd(self, float(other))
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, ExactComplex):
            return sub_xx(self, other)
        if isinstance(other, (int, float)):
            return sub_xd(self, float(other))
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, ExactComplex):
            return mul_xx(self, other)
        if isinstance(other, (int, float)):
            return mul_xd(self, float(other))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, ExactComplex):
            return div_xx(self, other)
        if isinstance(other, (int, float)):
            return div_xd(self, float(other))
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, float)):
            return div_dx(float(other), self)
        return NotImplemented


@dataclass(frozen=True, slots=True)
class BallComplex:
    z: ExactComplex
    e: float

    def __add__(self, other):
        if isinstance(other, BallComplex):
            return add_aa(self, other)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, BallComplex):
            return sub_aa(self, other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, BallComplex):
            return div_aa(self, other)
        return NotImplemented


def _ball(re: float, im: float, e: float) -> BallComplex:
    # Underflow monitoring covers every component and radius we emit.
    roundoff.record_value(_ENV, re)
    roundoff.record_value(_ENV, im)
    roundoff.record_value(_ENV, e)
    return BallComplex(ExactComplex(re, im), e)


def neg_x(x: ExactComplex) -> ExactComplex:
    """Negation is exact: no ball, no radius."""
    return ExactComplex(-x.re, -x.im)


def add_xd(x: ExactComplex, y: float) -> BallComplex:
    re = x.re + y
    e = HALFEPS * math.fabs(re)
    return _ball(re, x.im, e)


def sub_xd(x: ExactComplex, y: float) -> BallComplex:
    re = x.re - y
    e = HALFEPS * math.fabs(re)
    return _ball(re, x.im, e)


def add_xx(x: ExactComplex, y: ExactComplex) -> BallComplex:
    re = x.re + y.re
    im = x.im + y.im
    e = HALFEPS * ((1.0 + EPS) * (math.fabs(re) + math.fabs(im)))
    return _ball(re, im, e)


def sub_xx(x: ExactComplex, y: ExactComplex) -> BallComplex:
    re = x.re - y.re
    im = x.im - y.im
    e = HALFEPS * ((1.0 + EPS) * (math.fabs(re) + math.fabs(im)))
    return _ball(re, im, e)


def add_aa(x: BallComplex, y: BallComplex) -> BallComplex:
    re = x.z.re + y.z.re
    im = x.z.im + y.z.im
    e = (1.0 + 2.0 * EPS) * (HALFEPS * (math.fabs(re) + math.fabs(im)) + (x.e + y.e))
    return _ball(re, im, e)


def sub_aa(x: BallComplex, y: BallComplex) -> BallComplex:
    re = x.z.re - y.z.re
    im = x.z.im - y.z.im
    e = (1.0 + 2.0 * EPS) * (HALFEPS * (math.fabs(re) + math.fabs(im)) + (x.e + y.e))
    return _ball(re, im, e)


def mul_xd(x: ExactComplex, y: float) -> BallComplex:
    re = x.re * y
    im = x.im * y
    return _ball(re, im, HALFEPS * ((1.0 + EPS) * (math.fabs(re) + math.fabs(im))))


def div_xd(x: ExactComplex, y: float) -> BallComplex:
    re = x.re / y
    im = x.im / y
    return _ball(re, im, HALFEPS * ((1.0 + EPS) * (math.fabs(re) + math.fabs(im))))


def mul_xx(x: ExactComplex, y: ExactComplex) -> BallComplex:
    re1 = x.re * y.re
    re2 = x.im * y.im
    im1 = x.re * y.im
    im2 = x.im * y.re
    e = EPS * ((1.0 + 2.0 * EPS) * ((math.fabs(re1) + math.fabs(re2))
                                    + (math.fabs(im1) + math.fabs(im2))))
    return _ball(re1 - re2, im1 + im2, e)


def div_dx(x: float, y: ExactComplex) -> BallComplex:
    nrm = y.re * y.re + y.im * y.im
    re = (x * y.re) / nrm
    im = -(x * y.im) / nrm
    e = (2.0 * EPS) * ((1.0 + 2.0 * EPS) * (math.fabs(re) + math.fabs(im)))
    return _ball(re, im, e)


def div_xx(x: ExactComplex, y: ExactComplex) -> BallComplex:
    nrm = y.re * y.re + y.im * y.im
    xryr = x.re * y.re
    xiyi = x.im * y.im
    xiyr = x.im * y.re
    xryi = x.re * y.im
    re = (xryr + xiyi) / nrm
    im = (xiyr - xryi) / nrm
    a = ((math.fabs(xryr) + math.fabs(xiyi)) + (math.fabs(xiyr) + math.fabs(xryi))) / nrm
    e = (5.0 * HALFEPS) * ((1.0 + 3.0 * EPS) * a)
    return _ball(re, im, e)


def div_aa(x: BallComplex, y: BallComplex) -> BallComplex:
    """Ball division; requires the denominator radius to be tiny relative
    to its center (y.e^2 < 10000*EPS^2*|y.z|^2).  Violating that is a
    programming error, hence the hard assertion."""
    nrm = y.z.re * y.z.re + y.z.im * y.z.im
    xryr = x.z.re * y.z.re
    xiyi = x.z.im * y.z.im
    xiyr = x.z.im * y.z.re
    xryi = x.z.re * y.z.im
    if not y.e * y.e < (10000.0 * EPS * EPS) * nrm:
        raise AssertionError("ball division: denominator radius too large for its center")
    a = (math.fabs(xryr) + math.fabs(xiyi)) + (math.fabs(xiyr) + math.fabs(xryi))
    b = x.e * (math.fabs(y.z.re) + math.fabs(y.z.im)) + y.e * (math.fabs(x.z.re) + math.fabs(x.z.im))
    e = (1.0 + 4.0 * EPS) * (((5.0 * HALFEPS) * a + (1.0 + 103.0 * EPS) * b) / nrm)
    return _ball((xryr + xiyi) / nrm, (xiyr - xryi) / nrm, e)


def sqrt_x(x: ExactComplex) -> BallComplex:
    """Square root of an exact nonzero complex number.

    The returned center is (s, d) for re > 0 and (d, s) otherwise, with
    s >= 0; so the result lies in the right half-plane when re > 0 and in
    the closed upper half-plane otherwise.  Precondition: x != 0.
    """
    s = math.sqrt((math.fabs(x.re) + _hypot(x.re, x.im)) * 0.5)
    d = (x.im / s) * 0.5
    k = 4.0 if _HYPOT_FAITHFUL else 6.0
    e = EPS * ((1.0 + k * EPS) * (1.25 * s + 1.75 * math.fabs(d)))
    if x.re > 0.0:
        return _ball(s, d, e)
    return _ball(d, s, e)


def abs_ub_x(x: ExactComplex) -> float:
    """Rigorous upper bound on |x|."""
    if _HYPOT_FAITHFUL:
        v = (1.0 + 2.0 * EPS) * math.hypot(x.re, x.im)
    else:
        v = (1.0 + 3.0 * EPS) * math.sqrt(x.re * x.re + x.im * x.im)
    roundoff.record_value(_ENV, v)
    return v


def abs_lb_x(x: ExactComplex) -> float:
    """Rigorous lower bound on |x|."""
    if _HYPOT_FAITHFUL:
        v = (1.0 - 2.0 * EPS) * math.hypot(x.re, x.im)
    else:
        v = (1.0 - 3.0 * EPS) * math.sqrt(x.re * x.re + x.im * x.im)
    roundoff.record_value(_ENV, v)
    return v


# The (1 +- 2*EPS) factors above assume hypot is faithful: no representable
# number lies strictly between hypot(a, b) and the true sqrt(a^2 + b^2).
# We verify that on probe values at import; if the platform fails, every
# user of hypot switches to two-step sqrt(a^2 + b^2) with widened factors.

def _hypot_probes_ok() -> bool:
    pairs = (
        (3.0, 4.0), (5.0, 12.0), (1.0, 1.0), (0.1, 0.2), (0.7, 0.9),
        (1.0, 2.0 ** -30), (1e-8, 1.0), (123456789.0, 987654321.0),
        (1e154, 1e154), (2.0 ** -511, 2.0 ** -513),
    )
    for a, b in pairs:
        h = math.hypot(a, b)
        true_sq = Fraction(a) ** 2 + Fraction(b) ** 2
        h_sq = Fraction(h) ** 2
        if h_sq == true_sq:
            continue
        if h_sq > true_sq:
            below = math.nextafter(h, 0.0)
            if not Fraction(below) ** 2 < true_sq:
                return False
        else:
            above = math.nextafter(h, math.inf)
            if not Fraction(above) ** 2 > true_sq:
                return False
    return True


_HYPOT_FAITHFUL = _hypot_probes_ok()


def _hypot(a: float, b: float) -> float:
    if _HYPOT_FAITHFUL:
        return math.hypot(a, b)
    return math.sqrt(a * a + b * b)


def hypot_is_faithful() -> bool:
    """Result of the import-time hypot faithfulness probes."""
    return _HYPOT_FAITHFUL
