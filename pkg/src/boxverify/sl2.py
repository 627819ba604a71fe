"""2x2 matrices of jets: classes of PSL(2,C)-valued functions.

Entrywise jet classes model boxes of isometries.  Besides the algebra
(product, inverse) this provides the geometric invariants used by the
condition dispatcher: complex translation length and ortholength (both as
squared-eigenvalue expressions), certified identity exclusion, and the
two parameterized generators.
"""

from __future__ import annotations

from dataclasses import dataclass

from .jet import Jet, abs_lb_j, jet, sqrt_j


@dataclass(frozen=True, slots=True)
class JetMatrix:
    a: Jet
    b: Jet
    c: Jet
    d: Jet

    def __mul__(self, other):
        if isinstance(other, JetMatrix):
            return mat_mul(self, other)
        return NotImplemented


def identity_matrix() -> JetMatrix:
    return JetMatrix(jet(1.0), jet(0.0), jet(0.0), jet(1.0))


def mat_mul(x: JetMatrix, y: JetMatrix) -> JetMatrix:
    return JetMatrix(
        x.a * y.a + x.b * y.c,
        x.a * y.b + x.b * y.d,
        x.c * y.a + x.d * y.c,
        x.c * y.b + x.d * y.d,
    )


def mat_inverse(x: JetMatrix) -> JetMatrix:
    """Inverse of a determinant-one representative: (d, -b; -c, a).  Exact."""
    return JetMatrix(x.d, -x.b, -x.c, x.a)


def orthodist(x: JetMatrix) -> Jet:
    """Squared-eigenvalue form of the ortholength invariant ad + bc +- sqrt((ad+bc)^2 - 1),
    taking the branch whose center has modulus at least one."""
    t = x.a * x.d + x.b * x.c
    r = sqrt_j(t * t - 1.0)
    r1 = t + r
    if r1.f.re * r1.f.re + r1.f.im * r1.f.im >= 1.0:
        return t + r
    return t - r


def mat_length(x: JetMatrix) -> Jet:
    """Squared large eigenvalue from the half-trace; the exponential of the
    complex translation length."""
    t = (x.a + x.d) * 0.5
    r = sqrt_j(t * t - 1.0)
    r1 = t + r
    if r1.f.re * r1.f.re + r1.f.im * r1.f.im >= 1.0:
        return (t + r) * (t + r)
    return (t - r) * (t - r)


def not_identity(x: JetMatrix) -> bool:
    """True only when the class provably excludes both +I and -I."""
    return (abs_lb_j(x.b) > 0.0 or abs_lb_j(x.c) > 0.0
            or (abs_lb_j(x.a - 1.0) > 0.0 and abs_lb_j(x.a + 1.0) > 0.0)
            or (abs_lb_j(x.d - 1.0) > 0.0 and abs_lb_j(x.d + 1.0) > 0.0))


def not_f_power(x: JetMatrix) -> bool:
    """True only when the class provably excludes every diagonal matrix
    (a stronger condition than excluding powers of the short generator)."""
    return abs_lb_j(x.b) > 0.0 or abs_lb_j(x.c) > 0.0


def short_generator(z: Jet) -> JetMatrix:
    """diag(sqrt(z), 1/sqrt(z)): translation by log(z) along the core axis."""
    sz = sqrt_j(z)
    zero = jet(0.0)
    return JetMatrix(sz, zero, zero, 1.0 / sz)


def close_generator(x: Jet, z: Jet) -> JetMatrix:
    """The second generator, parameterized by ortho (x) and whirle (z)."""
    sx = sqrt_j(x)
    sz = sqrt_j(z)
    sh = (sx - 1.0 / sx) * 0.5
    ch = (sx + 1.0 / sx) * 0.5
    return JetMatrix(ch * sz, sh / sz, sh * sz, ch / sz)
