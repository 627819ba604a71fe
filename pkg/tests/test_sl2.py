import math
from fractions import Fraction as Fr

from hypothesis import given, settings
from hypothesis import strategies as st

import oracle_helpers as oh
from boxverify.jet import abs_lb_j, is_sentinel, jet, sentinel_jet
from boxverify.oracle import assert_contained, tridisk_point
from boxverify.sl2 import (
    JetMatrix,
    close_generator,
    identity_matrix,
    mat_inverse,
    mat_length,
    mat_mul,
    not_f_power,
    not_identity,
    orthodist,
    short_generator,
)

coef = st.one_of(
    st.just(0.0),
    st.floats(min_value=1e-20, max_value=1e20),
    st.floats(min_value=-1e20, max_value=-1e-20),
)
small_radius = st.one_of(st.just(0.0), st.floats(min_value=1e-30, max_value=1e-2))

jets = st.builds(
    lambda fr, fi, a, b, e: jet((fr, fi), (a, b), 0.0, 0.0, e),
    coef, coef, coef, coef, small_radius,
)
matrices = st.builds(JetMatrix, jets, jets, jets, jets)


def jt(x):
    return (x.f.re, x.f.im, x.f0.re, x.f0.im, x.f1.re, x.f1.im,
            x.f2.re, x.f2.im, x.e, x.size)


def mt(m):
    return tuple(jt(getattr(m, k)) for k in "abcd")


class TestInverse:
    def test_identity_inverse_bitwise(self):
        eye = identity_matrix()
        assert mt(mat_inverse(eye)) == mt(eye)

    def test_swaps_diagonal_bitwise(self):
        m = JetMatrix(jet(2.0), jet((0.0, 1.0)), jet(-3.0), jet(0.5))
        inv = mat_inverse(m)
        assert jt(inv.a) == jt(m.d) and jt(inv.d) == jt(m.a)

    @given(matrices)
    @settings(max_examples=200)
    def test_involution_bitwise(self, m):
        assert mt(mat_inverse(mat_inverse(m))) == mt(m)


class TestProduct:
    def test_identity_times_identity(self):
        eye = identity_matrix()
        out = mat_mul(eye, eye)
        assert (out.a.f.re, out.d.f.re) == (1.0, 1.0)
        # off-diagonals are identically zero jets
        assert (out.b.f.re, out.b.f.im, out.b.e) == (0.0, 0.0, 0.0)
        assert (out.c.f.re, out.c.f.im, out.c.e) == (0.0, 0.0, 0.0)

    def test_times_identity_keeps_centers(self):
        m = JetMatrix(jet((2.0, 1.0), (0.5, 0.0)), jet(0.25), jet(-1.0), jet((0.0, 3.0)))
        out = mat_mul(m, identity_matrix())
        for k in "abcd":
            assert getattr(out, k).f == getattr(m, k).f
            assert getattr(out, k).e >= getattr(m, k).e

    def test_short_generator_squared_centers(self):
        g = short_generator(jet(4.0))
        out = mat_mul(g, g)
        assert (out.a.f.re, out.a.f.im) == (4.0, 0.0)
        assert (out.d.f.re, out.d.f.im) == (0.25, 0.0)

    def test_product_containment_oracle(self, rng):
        g = short_generator(jet(4.0, (0.125, 0.0)))
        h = close_generator(jet((2.0, 0.5), 0.0, (0.05, 0.0)), jet((1.5, -0.25)))
        out = mat_mul(g, h)
        for _ in range(25):
            z = tridisk_point(rng)
            sg, sh = oh.sample_matrix(g, rng), oh.sample_matrix(h, rng)
            values = oh.hp_mat_mul(oh.matrix_values(sg, z), oh.matrix_values(sh, z))
            assert oh.contains_matrix(out, values, z)


class TestLengthOrthodist:
    def test_length_at_identity(self):
        out = mat_length(identity_matrix())
        assert (out.f.re, out.f.im) == (1.0, 0.0)
        assert 0.0 < out.e < 1e-7

    def test_orthodist_at_identity(self):
        out = orthodist(identity_matrix())
        assert (out.f.re, out.f.im) == (1.0, 0.0)
        assert out.e < 1e-7

    def test_length_of_short_generator(self):
        out = mat_length(short_generator(jet(4.0)))
        assert (out.f.re, out.f.im) == (4.0, 0.0)

    def test_negative_trace_takes_minus_branch(self):
        # t = -1.25, r = +0.75: |t+r| = 0.5 < 1 forces (t-r)^2 = 4
        m = JetMatrix(jet(-2.0), jet(0.0), jet(0.0), jet(-0.5))
        out = mat_length(m)
        assert abs(out.f.re - 4.0) < 1e-10 and abs(out.f.im) < 1e-10

    def test_length_containment_oracle(self, rng):
        m = short_generator(jet((4.0, 0.5), (0.03, 0.01)))
        out = mat_length(m)
        for _ in range(25):
            z = tridisk_point(rng)
            values = oh.matrix_values(oh.sample_matrix(m, rng), z)
            assert assert_contained(oh.member_length(m, values, z), out, z)

    def test_orthodist_containment_oracle(self, rng):
        m = close_generator(jet((2.2, 0.3), 0.0, (0.02, 0.0)), jet((1.4, -0.2)))
        out = orthodist(m)
        for _ in range(25):
            z = tridisk_point(rng)
            values = oh.matrix_values(oh.sample_matrix(m, rng), z)
            assert assert_contained(oh.member_orthodist(m, values, z), out, z)


class TestIdentityExclusion:
    def test_identity_is_not_excluded(self):
        assert not_identity(identity_matrix()) is False

    def test_identity_with_slack_is_not_excluded(self):
        eye = JetMatrix(jet(1.0, e=1e-6), jet(0.0, e=1e-6),
                        jet(0.0, e=1e-6), jet(1.0, e=1e-6))
        assert not_identity(eye) is False

    def test_minus_identity_is_not_excluded(self):
        m = JetMatrix(jet(-1.0), jet(0.0), jet(0.0), jet(-1.0))
        assert not_identity(m) is False

    def test_offdiagonal_witness(self):
        m = JetMatrix(jet(1.0), jet(1.0), jet(0.0), jet(1.0))
        assert not_identity(m) is True
        assert not_f_power(m) is True

    def test_diagonal_witness(self):
        m = JetMatrix(jet(3.0), jet(0.0), jet(0.0), jet(1.0 / 3.0))
        assert not_identity(m) is True
        assert not_f_power(m) is False  # diagonal matrices are f-powers

    def test_sentinel_matrix_never_witnesses(self):
        s = sentinel_jet()
        m = JetMatrix(s, s, s, s)
        assert not_identity(m) is False
        assert not_f_power(m) is False

    @given(matrices)
    @settings(max_examples=150)
    def test_exclusion_is_sound_on_witness_entries(self, m):
        if not_identity(m):
            # some stated witness must genuinely exclude the identity value
            assert (abs_lb_j(m.b) > 0.0 or abs_lb_j(m.c) > 0.0
                    or (abs_lb_j(m.a - 1.0) > 0.0 and abs_lb_j(m.a + 1.0) > 0.0)
                    or (abs_lb_j(m.d - 1.0) > 0.0 and abs_lb_j(m.d + 1.0) > 0.0))


class TestGenerators:
    def test_short_generator_unit(self):
        g = short_generator(jet(1.0))
        assert (g.a.f.re, g.d.f.re) == (1.0, 1.0)

    def test_short_generator_four(self):
        g = short_generator(jet(4.0))
        assert (g.a.f.re, g.a.f.im) == (2.0, 0.0)
        assert (g.d.f.re, g.d.f.im) == (0.5, 0.0)

    def test_short_generator_offdiagonals_are_exact_zero(self):
        g = short_generator(jet((2.5, 1.0)))
        for entry in (g.b, g.c):
            assert (entry.f.re, entry.f.im, entry.e, entry.size) == (0.0, 0.0, 0.0, 0.0)
        assert not_f_power(g) is False

    def test_short_generator_infeasible_argument(self):
        g = short_generator(jet(0.0, e=1.0))
        assert is_sentinel(g.d)  # 1/sqrt(class containing 0)

    def test_close_generator_unit(self):
        g = close_generator(jet(1.0), jet(1.0))
        assert (g.a.f.re, g.b.f.re, g.c.f.re, g.d.f.re) == (1.0, 0.0, 0.0, 1.0)

    def test_close_generator_four_one(self):
        g = close_generator(jet(4.0), jet(1.0))
        # sh = (2 - 1/2)/2 = 0.75, ch = (2 + 1/2)/2 = 1.25
        assert (g.a.f.re, g.b.f.re, g.c.f.re, g.d.f.re) == (1.25, 0.75, 0.75, 1.25)

    def test_close_generator_determinant_one(self, rng):
        # exact inputs with exact square roots: member determinant is 1
        g = close_generator(jet(4.0), jet(2.25))
        sx, sz = Fr(2), Fr(3, 2)
        ch, sh = (sx + 1 / sx) / 2, (sx - 1 / sx) / 2
        true = {"a": ch * sz, "b": sh / sz, "c": sh * sz, "d": ch / sz}
        assert true["a"] * true["d"] - true["b"] * true["c"] == 1
        z = tridisk_point(rng)
        for name, value in true.items():
            assert assert_contained(complex(value), getattr(g, name), z)
