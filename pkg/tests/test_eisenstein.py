import math

import mpmath
import numpy as np
import pytest

from kronlim import (
    DomainError,
    PoleError,
    SeriesTag,
    TruncationSpec,
    completion_prefactor,
    dedekind_eta_abs,
    det_tau,
    direct_tail_bound,
    e_prime_direct,
    e_prime_fast,
    e_primitive_direct,
    e_star_direct,
    e_star_fast,
    g_of_tau,
    laurent_at_1,
    make_point,
    z_to_point,
)

I2 = z_to_point(0.0, 1.0)

# [DERIVED] E*_2(i, 2) = 4 zeta(2) beta(2) pi^{-2} Gamma(2) = (2/3) * Catalan,
# frozen from mpmath: 4*zeta(2)*catalan/pi**2
E_STAR_I2_AT_2 = 0.6106437294514797

# [DERIVED] Laurent constants at the identity n=2 point, frozen from the
# closed forms with |eta(i)| = Gamma(1/4) / (2 pi^{3/4}):
#   E*: gamma - log(4 pi) - 4 log|eta(i)|  (y-term vanishes at y=1)
#   E': pi (2 gamma - log 4 - 4 log|eta(i)|)
LAURENT_ESTAR_CONST_I2 = -0.8991203010720865
LAURENT_EPRIME_CONST_I2 = 2.584981759579253


def test_derived_constants_recomputable():
    ref = float(4 * mpmath.zeta(2) * mpmath.catalan / mpmath.pi ** 2)
    assert math.isclose(E_STAR_I2_AT_2, ref, rel_tol=1e-15)
    eta_i = float(mpmath.gamma(0.25) / (2 * mpmath.pi ** 0.75))
    g = float(mpmath.euler)
    assert math.isclose(
        LAURENT_ESTAR_CONST_I2, g - math.log(4 * math.pi) - 4 * math.log(eta_i), rel_tol=1e-13
    )
    assert math.isclose(
        LAURENT_EPRIME_CONST_I2,
        math.pi * (2 * g - math.log(4.0) - 4 * math.log(eta_i)),
        rel_tol=1e-13,
    )


class TestDirectSums:
    def test_identity_point_value(self):
        t = TruncationSpec(lattice_radius=400)
        val = e_star_direct(I2, 2.0, t)
        bound = completion_prefactor(2, 2.0) * direct_tail_bound(I2, 2.0, 400)
        assert abs(val - E_STAR_I2_AT_2) <= bound + 1e-12

    def test_two_loop_cross_check(self):
        # independent double loop, no numpy vectorization
        p = z_to_point(0.3, 1.4)
        s, radius = 2.5, 30
        y, x = 1.4, 0.3
        acc = 0.0
        for m1 in range(-radius, radius + 1):
            for m2 in range(-radius, radius + 1):
                if m1 == 0 and m2 == 0:
                    continue
                norm2 = (m1 * y) ** 2 + (m1 * x + m2) ** 2
                acc += norm2 ** (-s)
        expected = y ** s * acc
        t = TruncationSpec(lattice_radius=radius)
        assert math.isclose(e_prime_direct(p, s, t), expected, rel_tol=1e-12)

    def test_primitive_relation(self):
        # zeta(ns) * E_n = E'_n in the limit; truncated sums agree loosely
        p = z_to_point(0.1, 1.1)
        s = 2.0
        t = TruncationSpec(lattice_radius=80)
        full = e_prime_direct(p, s, t)
        prim = e_primitive_direct(p, s, t)
        assert math.isclose(float(mpmath.zeta(2 * s)) * prim, full, rel_tol=1e-3)

    def test_radius_one_primitive_count(self):
        # at radius 1 the primitive n=2 vectors are the 8 nonzero ones
        t = TruncationSpec(lattice_radius=1)
        val = e_primitive_direct(I2, 2.0, t)
        # vectors (0,±1),(±1,0): norm 1; (±1,±1): norm 2 -> 4 + 4/4
        assert math.isclose(val, 4.0 + 4.0 / 4.0, rel_tol=1e-14)

    def test_prefactor_factorization_bitwise(self):
        p = make_point(3, {(1, 2): 0.2}, (1.3, 0.9))
        t = TruncationSpec(lattice_radius=25)
        s = 1.7
        assert e_star_direct(p, s, t) == completion_prefactor(3, s) * e_prime_direct(p, s, t)

    def test_divergence_guard(self):
        for fn in (e_prime_direct, e_primitive_direct, e_star_direct):
            with pytest.raises(DomainError):
                fn(I2, 1.0)
            with pytest.raises(DomainError):
                fn(I2, 0.9)

    def test_tail_bound_is_a_bound(self):
        p = z_to_point(0.2, 1.2)
        s = 2.0
        small = e_prime_direct(p, s, TruncationSpec(lattice_radius=40))
        big = e_prime_direct(p, s, TruncationSpec(lattice_radius=200))
        assert abs(big - small) <= direct_tail_bound(p, s, 40)


class TestFastEvaluator:
    def test_identity_point_value(self):
        assert math.isclose(e_star_fast(I2, 2.0), E_STAR_I2_AT_2, rel_tol=1e-12)

    @pytest.mark.parametrize("s", [1.8, 2.0, 2.5, 3.5])
    def test_matches_direct_n2(self, s):
        p = z_to_point(-0.3, 0.9)
        t = TruncationSpec(lattice_radius=150)
        direct = e_star_direct(p, s, t)
        tol = completion_prefactor(2, s) * direct_tail_bound(p, s, 150) + 1e-10
        assert abs(e_star_fast(p, s) - direct) <= tol

    @pytest.mark.parametrize("s", [1.8, 2.2])
    def test_matches_direct_n3(self, s):
        p = make_point(3, {(1, 2): 0.3, (1, 3): -0.2, (2, 3): 0.4}, (1.2, 0.8))
        t = TruncationSpec(lattice_radius=60)
        direct = e_star_direct(p, s, t)
        tol = completion_prefactor(3, s) * direct_tail_bound(p, s, 60) + 1e-8
        assert abs(e_star_fast(p, s) - direct) <= tol

    def test_matches_direct_n4(self):
        p = make_point(4, {(1, 2): 0.2, (2, 4): -0.3}, (1.1, 0.9, 1.3))
        s = 1.9
        t = TruncationSpec(lattice_radius=16)
        direct = e_star_direct(p, s, t)
        tol = completion_prefactor(4, s) * direct_tail_bound(p, s, 16) + 1e-8
        assert abs(e_star_fast(p, s) - direct) <= tol

    def test_continuation_below_one(self):
        # finite values on both sides of the pole, blowing up near s=1
        near = e_star_fast(I2, 1.01)
        far = e_star_fast(I2, 0.9)
        assert near > 50.0
        assert math.isfinite(far)

    def test_functional_smoothness_across_switch(self):
        # values on a fine s-grid around 1 follow pole/(s-1) + const
        from kronlim import laurent_at_1 as lau

        data = lau(I2, SeriesTag.E_STAR)
        for eps in (2e-3, 1e-3, 5e-4):
            v = e_star_fast(I2, 1.0 + eps)
            model = data.pole_coefficient / eps + data.constant_term
            assert abs(v - model) < 5.0 * eps

    def test_pole_and_domain_errors(self):
        with pytest.raises(PoleError):
            e_star_fast(I2, 1.0)
        with pytest.raises(DomainError):
            e_star_fast(I2, 0.7)  # below 1 - 1/(2n) = 0.75
        p3 = make_point(3, {}, (1.0, 1.0))
        with pytest.raises(DomainError):
            e_star_fast(p3, 0.8)  # below 1 - 1/6


class TestEPrimeFast:
    def test_bridge_n2(self):
        p = z_to_point(0.2, 1.3)
        for s in (1.3, 2.0, 2.8):
            lhs = e_prime_fast(p, s)
            rhs = e_star_fast(p, s) / completion_prefactor(2, s)
            assert math.isclose(lhs, rhs, rel_tol=1e-10)

    def test_bridge_n3(self):
        p = make_point(3, {(1, 2): 0.1, (2, 3): -0.2}, (1.1, 1.4))
        for s in (1.25, 1.9):
            lhs = e_prime_fast(p, s)
            rhs = e_star_fast(p, s) / completion_prefactor(3, s)
            assert math.isclose(lhs, rhs, rel_tol=1e-10)

    def test_matches_direct(self):
        p = z_to_point(-0.1, 1.1)
        s = 2.2
        t = TruncationSpec(lattice_radius=150)
        direct = e_prime_direct(p, s, t)
        assert abs(e_prime_fast(p, s) - direct) <= direct_tail_bound(p, s, 150) + 1e-10


class TestGeneralizedEta:
    @pytest.mark.parametrize("x,y", [(0.0, 1.0), (0.5, 1.2), (-0.3, 0.8)])
    def test_equals_dedekind_eta_n2(self, x, y):
        g = g_of_tau(z_to_point(x, y))
        assert math.isclose(g, dedekind_eta_abs(x, y), rel_tol=1e-12)

    def test_eta_at_i_closed_form(self):
        eta_i = float(mpmath.gamma(0.25) / (2 * mpmath.pi ** 0.75))
        assert math.isclose(g_of_tau(I2), eta_i, rel_tol=1e-12)

    def test_n3_consistency_with_laurent(self):
        # g only enters through the constant term; check it against the
        # symmetric average of the continued series near s = 1
        p = make_point(3, {(1, 2): 0.2, (1, 3): 0.1, (2, 3): -0.3}, (1.2, 0.9))
        const = laurent_at_1(p, SeriesTag.E_STAR).constant_term
        eps = 1e-3
        avg = (e_star_fast(p, 1.0 + eps) + e_star_fast(p, 1.0 - eps)) / 2.0
        assert abs(avg - const) < 10.0 * eps * eps

    def test_domain(self):
        from kronlim import HalfPlanePoint

        p1 = HalfPlanePoint(n=1, unipotent=np.eye(1), y=())
        with pytest.raises(DomainError):
            g_of_tau(p1)


class TestLaurent:
    def test_identity_point_constants(self):
        star = laurent_at_1(I2, SeriesTag.E_STAR)
        prime = laurent_at_1(I2, SeriesTag.E_PRIME)
        assert math.isclose(star.pole_coefficient, 1.0, rel_tol=1e-15)
        assert math.isclose(prime.pole_coefficient, math.pi, rel_tol=1e-15)
        assert math.isclose(star.constant_term, LAURENT_ESTAR_CONST_I2, rel_tol=1e-11)
        assert math.isclose(prime.constant_term, LAURENT_EPRIME_CONST_I2, rel_tol=1e-11)

    def test_pole_coefficients_by_n(self):
        for n in (2, 3, 4):
            p = make_point(n, {}, (1.0,) * (n - 1))
            assert laurent_at_1(p, SeriesTag.E_STAR).pole_coefficient == 2.0 / n
            assert laurent_at_1(p, SeriesTag.E_PRIME).pole_coefficient == 2.0 * math.pi / n

    def test_series_lines_consistent_n2(self):
        # multiplying the E* expansion by pi^{s}Gamma(s)^{-1} at n=2 must
        # reproduce the E' line: pole pi * (2/n) and the stated constant
        p = z_to_point(0.25, 1.6)
        star = laurent_at_1(p, SeriesTag.E_STAR)
        prime = laurent_at_1(p, SeriesTag.E_PRIME)
        # d/ds [pi^s / Gamma(s)] at s=1 = pi (log pi + gamma)
        derived_const = math.pi * (star.constant_term + star.pole_coefficient * (math.log(math.pi) + float(mpmath.euler)))
        assert math.isclose(prime.pole_coefficient, math.pi * star.pole_coefficient, rel_tol=1e-15)
        assert math.isclose(prime.constant_term, derived_const, rel_tol=1e-10)

    def test_y_dependence(self):
        # constant term shifts by -(2/n) * sum i log y_i relative to y = 1
        y = (1.7,)
        p = z_to_point(0.0, y[0])
        base = laurent_at_1(I2, SeriesTag.E_STAR)
        shifted = laurent_at_1(p, SeriesTag.E_STAR)
        eta_term = -4.0 * (math.log(g_of_tau(p)) - math.log(g_of_tau(I2)))
        assert math.isclose(
            shifted.constant_term - base.constant_term,
            -math.log(y[0]) + eta_term,
            rel_tol=1e-10,
        )


def test_truncation_spec_validation():
    with pytest.raises(DomainError):
        TruncationSpec(lattice_radius=0)
    with pytest.raises(DomainError):
        TruncationSpec(tail_threshold=0.0)


def test_det_tau_identity_point():
    assert det_tau(I2) == 1.0
