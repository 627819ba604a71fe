"""High-precision ground truth for containment testing.

Test support only; nothing here is part of the library's public surface,
and nothing in the library depends on it.  Values are evaluated with
mpmath at well over twice binary64 precision, so oracle rounding is
negligible against every radius under test.

A "member" of a jet class is realized as its affine part plus a constant
perturbation delta with |delta| <= e * (1 - 2^-20); the margin keeps the
strict inequality in the class definition out of play at the boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from random import Random

import mpmath
from mpmath import mp

from .complex_ball import BallComplex, ExactComplex
from .jet import Jet, is_sentinel

PRECISION_BITS = 120  # > 2 * 53, so oracle error is far below tested radii
MARGIN = 2.0 ** -20
DENOM_FLOOR = 2.0 ** -40


class ResampleNeeded(Exception):
    """A sampled denominator was too close to zero for a fair check."""


def to_mpc(x) -> mpmath.mpc:
    if isinstance(x, ExactComplex):
        return mpmath.mpc(x.re, x.im)
    if isinstance(x, (int, float, complex)):
        return mpmath.mpc(x)
    return x


@dataclass
class JetSample:
    """A concrete member of a jet class: affine part plus constant delta."""
    f: mpmath.mpc
    f0: mpmath.mpc
    f1: mpmath.mpc
    f2: mpmath.mpc
    delta: mpmath.mpc

    def value_at(self, z) -> mpmath.mpc:
        with mp.workprec(PRECISION_BITS):
            return (self.f + self.f0 * z[0] + self.f1 * z[1] + self.f2 * z[2]
                    + self.delta)


def _sample_delta(bound: float, rng: Random) -> mpmath.mpc:
    if bound == 0.0:
        return mpmath.mpc(0)
    u = rng.random()
    if u < 0.125:
        rho = 0.0
    elif u < 0.25:
        rho = 1.0  # extremal: |delta| == bound * (1 - MARGIN)
    else:
        rho = rng.random()
    theta = rng.uniform(0.0, 2.0 * math.pi)
    with mp.workprec(PRECISION_BITS):
        mag = mpmath.mpf(bound) * (1.0 - MARGIN) * rho
        return mag * mpmath.mpc(math.cos(theta), math.sin(theta))


def sample_member(x: Jet, rng: Random) -> JetSample:
    """A random member of the class of x, extremal cases included."""
    if is_sentinel(x):
        raise ValueError("sentinel jets cannot be sampled")
    return JetSample(to_mpc(x.f), to_mpc(x.f0), to_mpc(x.f1), to_mpc(x.f2),
                     _sample_delta(x.e, rng))


def sample_ball_member(x: BallComplex, rng: Random) -> mpmath.mpc:
    """A random point of the closed disk of x (margin applied to the radius)."""
    with mp.workprec(PRECISION_BITS):
        return to_mpc(x.z) + _sample_delta(x.e, rng)


def disk_point(rng: Random, boundary_chance: float = 0.25) -> complex:
    """A binary64 point of the closed unit disk, sometimes (near) the rim."""
    theta = rng.uniform(0.0, 2.0 * math.pi)
    r = 1.0 if rng.random() < boundary_chance else rng.random()
    re = r * math.cos(theta)
    im = r * math.sin(theta)
    while Fraction(re) ** 2 + Fraction(im) ** 2 > 1:
        re *= 1.0 - 2.0 ** -50
        im *= 1.0 - 2.0 ** -50
    return complex(re, im)


def tridisk_point(rng: Random) -> tuple[complex, complex, complex]:
    return disk_point(rng), disk_point(rng), disk_point(rng)


def sqrt_exact_branch(v) -> mpmath.mpc:
    """Square root with the kernel's convention: the right-half-plane root
    when Re v > 0, otherwise the closed-upper-half-plane root."""
    with mp.workprec(PRECISION_BITS):
        v = to_mpc(v)
        w = mpmath.sqrt(v)
        if v.real > 0:
            return w
        return w if w.imag >= 0 else -w


def sqrt_toward(v, ref) -> mpmath.mpc:
    """The square root of v lying in the half-plane of ref: the branch a
    member picks up by continuation from the class center's root."""
    with mp.workprec(PRECISION_BITS):
        v = to_mpc(v)
        ref = to_mpc(ref)
        w = mpmath.sqrt(v)
        if (w * mpmath.conj(ref)).real >= 0:
            return w
        return -w


def hp_eval(op: str, operands, z=None) -> mpmath.mpc:
    """True result of one operation at >= PRECISION_BITS.

    Operands may be JetSample (evaluated at z), or anything to_mpc
    accepts.  Division raises ResampleNeeded when the denominator lands
    within 2^-40 of zero, where a containment check would probe the guard
    boundary rather than the arithmetic.
    """
    vals = []
    for operand in operands:
        if isinstance(operand, JetSample):
            vals.append(operand.value_at(z))
        else:
            vals.append(to_mpc(operand))
    with mp.workprec(PRECISION_BITS):
        if op == "neg":
            return -vals[0]
        if op == "add":
            return vals[0] + vals[1]
        if op == "sub":
            return vals[0] - vals[1]
        if op == "mul":
            return vals[0] * vals[1]
        if op == "div":
            if abs(vals[1]) < DENOM_FLOOR:
                raise ResampleNeeded(f"denominator {vals[1]} too small")
            return vals[0] / vals[1]
        if op == "sqrt":
            return sqrt_exact_branch(vals[0])
        raise ValueError(f"unknown oracle operation {op!r}")


def assert_contained(value, result: Jet, z) -> bool:
    """Membership of a true value in a result class at one tri-disk point:
    |value - (f + f0 z0 + f1 z1 + f2 z2)| < e.  Sentinels contain all."""
    if result.e == math.inf:
        return True
    with mp.workprec(PRECISION_BITS):
        affine = (to_mpc(result.f) + to_mpc(result.f0) * z[0]
                  + to_mpc(result.f1) * z[1] + to_mpc(result.f2) * z[2])
        return abs(to_mpc(value) - affine) < result.e


def ball_contains(result: BallComplex, value) -> bool:
    """Membership of a true value in a result ball: |value - center| <= e."""
    with mp.workprec(PRECISION_BITS):
        return abs(to_mpc(value) - to_mpc(result.z)) <= result.e
