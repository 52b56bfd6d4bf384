"""Barrier region, shielded matching and the shielded-string eigenfunctions."""

import cmath
import math

import numpy as np
import pytest

from abdirac import bare_tube as bt
from abdirac import shielded as sh
from abdirac import specfun as sf
from abdirac.errors import RegimeError
from abdirac.model import (
    BarrierConfig,
    Coupling,
    TubeConfig,
    barrier_kappa,
    make_kinematics,
)
from abdirac.numerics import loglog_slope

C03 = Coupling(0.3)


class TestBarrierRadial:
    def test_non_anomalous_order(self):
        b, kin = sh.shielded_sweep_point(kR0=0.05, kappaR0=10.0)
        r = 0.4 * b.R0
        got = sh.barrier_radial_limit(1, 1, C03, kin, r)
        want = sf.bessel_j(0.7, 1j * kin.kappa * r)
        assert abs(got - want) < 1e-13 * abs(want)

    def test_anomalous_order_swap(self):
        b, kin = sh.shielded_sweep_point(kR0=0.05, kappaR0=10.0)
        r = 0.4 * b.R0
        got = sh.barrier_radial_limit(0, 1, C03, kin, r)
        want = sf.bessel_j(-0.3, 1j * kin.kappa * r)
        assert abs(got - want) < 1e-13 * abs(want)

    def test_imaginary_argument_route(self):
        # J_nu(i kappa r) must agree with the e^{i pi nu/2} I_nu route
        b, kin = sh.shielded_sweep_point(kR0=0.05, kappaR0=10.0)
        r = 0.5 * b.R0
        x = kin.kappa * r
        got = sh.barrier_radial_limit(1, 1, C03, kin, r)
        want = np.exp(1j * math.pi * 0.7 / 2) * sf.bessel_i(0.7, x)
        assert abs(got - want) < 1e-11 * abs(want)

    def test_finite_tube_ratio_converges_to_swapped_order(self):
        b, kin = sh.shielded_sweep_point(kR0=0.01, kappaR0=10.0)
        kappa = barrier_kappa(kin, b.U)
        r_a, r_b = 0.3 * b.R0, 0.6 * b.R0
        tube = TubeConfig(r0=1e-5 / kin.k, coupling=C03)
        got = sh.finite_tube_barrier_ratio(0, 1, tube, kin, b, r_a, r_b)
        swapped = sf.bessel_j(-0.3, 1j * kappa * r_a) / sf.bessel_j(
            -0.3, 1j * kappa * r_b
        )
        unswapped = sf.bessel_j(0.3, 1j * kappa * r_a) / sf.bessel_j(
            0.3, 1j * kappa * r_b
        )
        assert abs(got / swapped - 1) < 1e-4
        assert abs(got / unswapped - 1) > 1e-3


class TestFFactor:
    def test_lambda_tends_to_one(self):
        b, kin = sh.shielded_sweep_point(kR0=0.01, kappaR0=50.0)
        for l, ch in [(0, 1), (1, 1), (-1, 2), (0, 2), (2, 1)]:
            lam = sh.barrier_log_derivative(l, ch, C03, kin, b.R0)
            assert abs(lam - 1.0) < 0.02, (l, ch)

    def test_formula_structure(self):
        # f (E + Mc^2 - U) - U * step == (E + Mc^2) * Lambda; the barrier-height
        # term carries -(l - alpha) for channel 1 and +(l + 1 - alpha) for 2
        b, kin = sh.shielded_sweep_point(kR0=0.05, kappaR0=10.0)
        kappa = barrier_kappa(kin, b.U)
        ew = kin.energy_E + kin.rest_energy
        for l, ch in [(0, 1), (1, 1), (-2, 2), (0, 2)]:
            f = sh.f_factor(l, ch, b, kin, C03)
            lam = sh.barrier_log_derivative(l, ch, C03, kin, b.R0)
            step = (
                -(l - C03.alpha) / (kappa * b.R0)
                if ch == 1
                else (l + 1 - C03.alpha) / (kappa * b.R0)
            )
            assert abs(f * (ew - b.U) - b.U * step - ew * lam) < 1e-12 * abs(ew * lam)

    def test_exact_log_derivative_value(self):
        # l = 0, alpha = 0.3: Lambda from the modified-Bessel ratio of the
        # swapped order, computed by an independent positive-term series
        b, kin = sh.shielded_sweep_point(kR0=0.05, kappaR0=10.0)
        x = barrier_kappa(kin, b.U) * b.R0
        h = 1e-6
        want = (
            (sf.bessel_i(-0.3, x + h) - sf.bessel_i(-0.3, x - h))
            / (2 * h)
            / sf.bessel_i(-0.3, x)
        )
        got = sh.barrier_log_derivative(0, 1, C03, kin, b.R0)
        assert abs(got - want) < 1e-8

    def test_excluded_height(self):
        kin = make_kinematics(E=1.5, U=1.0)
        with pytest.raises(RegimeError):
            sh.f_factor(0, 1, BarrierConfig(R0=10.0, U=kin.energy_E + 1.0), kin, C03)


class TestShieldedMatching:
    def test_anomalous_channel_slope(self):
        xs = [1e-2, 1e-3, 1e-4]
        As = []
        for x in xs:
            b, kin = sh.shielded_sweep_point(kR0=x, kappaR0=50.0)
            As.append(sh.shielded_matching(0, 1, b, kin, C03).value)
        slope = loglog_slope(xs, As)
        assert abs(slope - 0.6) < 0.02 * 0.6

    def test_flux_free_limit_still_vanishes(self):
        # at zero coupling the l = 0 order is exactly zero, where the decay of
        # the barrier coefficient is logarithmic rather than a power
        c0 = Coupling(0.0)
        xs = [1e-2, 1e-4, 1e-8]
        As = []
        for x in xs:
            b, kin = sh.shielded_sweep_point(kR0=x, kappaR0=50.0)
            As.append(abs(sh.shielded_matching(0, 1, b, kin, c0).value))
        assert As[2] < As[1] < As[0]
        assert As[2] < 0.55 * As[0]
        # 1/log scaling: |A| * ln(1/kR0) roughly constant
        scaled = [a * math.log(1.0 / x) for a, x in zip(As, xs)]
        assert max(scaled) / min(scaled) < 1.6

    def test_denominator_leading_form(self):
        c5 = Coupling(0.5)
        b, kin = sh.shielded_sweep_point(kR0=0.16, kappaR0=50.0)
        exact = sh.shielded_matching_denominator(0, 1, b, kin, c5)
        lead = sh.denominator_leading_form(0, 1, b, kin, c5)
        assert abs(exact / lead - 1) < 0.10

    def test_dichotomy_against_bare_string(self):
        # shielded: A -> 0 for every channel including l = [alpha];
        # bare: the anomalous weight converges to a finite phase factor
        alpha = 0.3
        want = 1j * math.sin(math.pi * alpha) * cmath.exp(1j * math.pi * alpha)
        b, kin_sh = sh.shielded_sweep_point(kR0=1e-4, kappaR0=50.0)
        A_sh = sh.shielded_matching(0, 1, b, kin_sh, C03).value
        kin = make_kinematics(E=math.sqrt(2.0))
        tube = TubeConfig(r0=1e-4 / kin.k, coupling=C03)
        A_bare = bt.matching_coefficient(0, 1, tube, kin).value
        assert abs(A_sh) < 1e-2
        assert abs(A_bare - want) < 1e-3
        assert abs(A_bare) > 0.75

    def test_ode_oracle_agreement_with_barrier(self):
        # full finite-tube + barrier integration against the r0 -> 0 formula;
        # residual finite-r0 effects limit agreement, so the tube is tiny
        b, kin = sh.shielded_sweep_point(kR0=0.2, kappaR0=6.0)
        tube = TubeConfig(r0=1e-6 / kin.k, coupling=C03)
        for l, ch in [(0, 1), (-1, 2), (1, 1)]:
            sol = bt.ode_radial_oracle(
                l, ch, tube, kin, r_max=2 * b.R0, barrier=b
            )
            A_ode = sol.matching_from_interior()
            A_f = sh.shielded_matching(l, ch, b, kin, C03).value
            assert abs(A_ode - A_f) < 1e-3 * max(abs(A_f), 1e-6), (l, ch)


class TestShieldedEigenfunction:
    KIN = make_kinematics(E=math.sqrt(2.0))

    def test_positive_orders_only(self):
        r = 2.0
        comp = sh.shielded_eigenfunction(0, C03, self.KIN, r)
        want = sf.bessel_j(0.3, self.KIN.k * r)
        assert abs(comp.chi1 - want) < 1e-13

    def test_chi4_divergent_order(self):
        r = 2.0
        comp = sh.shielded_eigenfunction(0, C03, self.KIN, r)
        cfac = -1j / (self.KIN.energy_E + 1.0) * self.KIN.k
        want = cfac * sf.bessel_j(-0.7, self.KIN.k * r)
        assert abs(comp.chi4 - want) < 1e-13

    def test_ladder_consistency(self):
        h = 1e-5
        r = 2.7
        kin = self.KIN
        for alpha in (0.25, 0.5, 0.75):
            c = Coupling(alpha)
            for l in range(-3, 4):
                f0 = sh.shielded_eigenfunction(l, c, kin, r)
                fp = sh.shielded_eigenfunction(l, c, kin, r + h)
                fm = sh.shielded_eigenfunction(l, c, kin, r - h)
                cfac = -1j * kin.hbar * kin.c / (kin.energy_E + kin.rest_energy)
                chi4_fd = cfac * (
                    (fp.chi1 - fm.chi1) / (2 * h) - ((l - alpha) / r) * f0.chi1
                )
                chi3_fd = cfac * (
                    (fp.chi2 - fm.chi2) / (2 * h) + ((l + 1 - alpha) / r) * f0.chi2
                )
                assert abs(chi4_fd - f0.chi4) < 1e-7
                assert abs(chi3_fd - f0.chi3) < 1e-7

    def test_all_components_vanish_at_small_kr_except_anomalous(self):
        # pointwise decay toward the origin for every l except [alpha]; the
        # slowest component goes like (kr)^min-order, so compare two radii
        kin = self.KIN
        for l in (-2, -1, 1, 2):
            far = sh.shielded_eigenfunction(l, C03, kin, 1e-4 / kin.k)
            near = sh.shielded_eigenfunction(l, C03, kin, 1e-8 / kin.k)
            for v_near, v_far in zip(near.as_tuple(), far.as_tuple()):
                assert abs(v_near) <= 0.5 * abs(v_far) + 1e-30, l
        # l = [alpha]: the lower pair diverges at the origin instead
        anom_far = sh.shielded_eigenfunction(0, C03, kin, 1e-4 / kin.k)
        anom_near = sh.shielded_eigenfunction(0, C03, kin, 1e-8 / kin.k)
        assert abs(anom_near.chi4) > 1e2 * abs(anom_far.chi4)

    def test_attenuation_scale_inside_barrier(self):
        b, kin = sh.shielded_sweep_point(kR0=0.01, kappaR0=50.0)
        kappa = barrier_kappa(kin, b.U)
        r = b.R0 - 2.0 / kappa
        ratio = abs(
            sh.barrier_radial_limit(1, 1, C03, kin, r)
            / sh.barrier_radial_limit(1, 1, C03, kin, b.R0)
        )
        assert abs(ratio / math.exp(-kappa * (b.R0 - r)) - 1) < 0.05


class TestBareVsShieldedL0:
    KIN = make_kinematics(E=math.sqrt(2.0))

    def test_channel2_tower_identical(self):
        pair = sh.bare_vs_shielded_l0(C03, self.KIN, 2.0)
        assert pair.bare.chi2 == pair.shielded.chi2
        assert pair.bare.chi3 == pair.shielded.chi3

    def test_channel1_tower_orders(self):
        r = 2.0
        x = self.KIN.k * r
        pair = sh.bare_vs_shielded_l0(C03, self.KIN, r)
        assert abs(pair.bare.chi1 - sf.bessel_j(-0.3, x)) < 1e-13
        assert abs(pair.shielded.chi1 - sf.bessel_j(0.3, x)) < 1e-13

    def test_small_kr_power_ratio(self):
        # chi1 bare / chi1 shielded ~ (kr)^(-2 alpha) * const at small kr
        alpha = 0.3
        r1, r2 = 1e-4 / self.KIN.k, 1e-5 / self.KIN.k
        q1 = sh.bare_vs_shielded_l0(C03, self.KIN, r1)
        q2 = sh.bare_vs_shielded_l0(C03, self.KIN, r2)
        ratio1 = q1.bare.chi1 / q1.shielded.chi1
        ratio2 = q2.bare.chi1 / q2.shielded.chi1
        slope = math.log(abs(ratio2) / abs(ratio1)) / math.log(r2 / r1)
        assert abs(slope + 2 * alpha) < 1e-3

    def test_chi3_value_against_specfun(self):
        r = 1.0 / self.KIN.k
        pair = sh.bare_vs_shielded_l0(C03, self.KIN, r)
        w = self.KIN.k / (self.KIN.energy_E + 1.0)
        want = -1j * w * sf.bessel_j(-0.3, 1.0)
        assert abs(pair.bare.chi3 - want) < 1e-14

    def test_matches_generic_radial_paths(self):
        r = 2.0
        pair = sh.bare_vs_shielded_l0(C03, self.KIN, r)
        gen_b = bt.bare_string_radial(0, C03, self.KIN, r)
        gen_s = sh.shielded_eigenfunction(0, C03, self.KIN, r)
        for a, b_ in zip(pair.bare.as_tuple(), gen_b.as_tuple()):
            assert abs(a - b_) < 1e-12
        for a, b_ in zip(pair.shielded.as_tuple(), gen_s.as_tuple()):
            assert abs(a - b_) < 1e-12

    def test_range_rejected(self):
        with pytest.raises(RegimeError):
            sh.bare_vs_shielded_l0(Coupling(1.3), self.KIN, 1.0)
