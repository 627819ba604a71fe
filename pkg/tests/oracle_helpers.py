"""Shared oracle plumbing for matrix-level containment tests.

Member matrices are sampled entrywise; the length/orthodist helpers
mirror the implementation's branch choices (which are made from class
centers) while evaluating the member itself at full oracle precision.
"""

from __future__ import annotations

import mpmath
from mpmath import mp

from boxverify.jet import sqrt_j
from boxverify.oracle import PRECISION_BITS, JetSample, assert_contained, sample_member, to_mpc
from boxverify.sl2 import JetMatrix


def sample_matrix(m: JetMatrix, rng) -> dict:
    return {name: sample_member(getattr(m, name), rng) for name in "abcd"}


def matrix_values(sample: dict, z) -> dict:
    return {name: s.value_at(z) for name, s in sample.items()}


def hp_mat_mul(x: dict, y: dict) -> dict:
    with mp.workprec(PRECISION_BITS):
        return {
            "a": x["a"] * y["a"] + x["b"] * y["c"],
            "b": x["a"] * y["b"] + x["b"] * y["d"],
            "c": x["c"] * y["a"] + x["d"] * y["c"],
            "d": x["c"] * y["b"] + x["d"] * y["d"],
        }


def contains_matrix(result: JetMatrix, values: dict, z) -> bool:
    return all(assert_contained(values[name], getattr(result, name), z)
               for name in "abcd")


def _sqrt_following(value, ref_center):
    """Root of `value` in the half-plane of the class-center root; when the
    center root is zero (pure-error branch) either root is in-class."""
    with mp.workprec(PRECISION_BITS):
        w = mpmath.sqrt(to_mpc(value))
        ref = to_mpc(ref_center)
        if ref == 0:
            return w
        return w if (w * mpmath.conj(ref)).real >= 0 else -w


def member_length(x: JetMatrix, values: dict, z) -> mpmath.mpc:
    """Squared-eigenvalue length of one member matrix, taking the same
    half-trace square root branch the implementation took."""
    t_jet = (x.a + x.d) * 0.5
    r_jet = sqrt_j(t_jet * t_jet - 1.0)
    r1 = t_jet + r_jet
    plus = r1.f.re * r1.f.re + r1.f.im * r1.f.im >= 1.0
    with mp.workprec(PRECISION_BITS):
        t = (values["a"] + values["d"]) / 2
        r = _sqrt_following(t * t - 1, r_jet.f)
        v = t + r if plus else t - r
        return v * v


def member_orthodist(x: JetMatrix, values: dict, z) -> mpmath.mpc:
    t_jet = x.a * x.d + x.b * x.c
    r_jet = sqrt_j(t_jet * t_jet - 1.0)
    r1 = t_jet + r_jet
    plus = r1.f.re * r1.f.re + r1.f.im * r1.f.im >= 1.0
    with mp.workprec(PRECISION_BITS):
        t = values["a"] * values["d"] + values["b"] * values["c"]
        r = _sqrt_following(t * t - 1, r_jet.f)
        return t + r if plus else t - r
