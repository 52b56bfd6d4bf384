"""Special-function layer: closed-form values, independent oracles, identities."""

import math
from fractions import Fraction

import numpy as np
import pytest

from abdirac import specfun as sf
from abdirac.errors import OutOfRangeError, PoleError, SingularArgumentError


def series_j_oracle(nu, z, terms=30, with_scale=False):
    """Plain 30-term ascending series, written independently of the library.

    `with_scale` also returns the sum of term magnitudes, which bounds the
    oracle's own float64 round-off when the series alternates.
    """
    total = 0.0 + 0.0j
    scale = 0.0
    for k in range(terms):
        term = (-1) ** k * (z / 2.0) ** (nu + 2 * k) / (
            math.gamma(k + 1) * math.gamma(nu + k + 1)
        )
        total += term
        scale += abs(term)
    if with_scale:
        return total, scale
    return total


def kummer_oracle(a, c, z, terms=50):
    """Kummer series with exact rational Pochhammer products."""
    a = Fraction(a).limit_denominator(10**6)
    c = Fraction(c).limit_denominator(10**6)
    zf = Fraction(z).limit_denominator(10**6)
    total = Fraction(0)
    term = Fraction(1)
    for n in range(terms):
        if n > 0:
            term = term * (a + n - 1) * zf / ((c + n - 1) * n)
        total += term
    return float(total)


class TestBesselJ:
    def test_j0_at_origin(self):
        assert sf.bessel_j(0.0, 0.0) == 1.0

    def test_half_order_closed_form(self):
        # J_{1/2}(z) = sqrt(2/(pi z)) sin z; at z = pi/2 this is 2/pi
        val = sf.bessel_j(0.5, math.pi / 2)
        assert abs(val - 2.0 / math.pi) < 1e-13

    def test_negative_order_against_series_oracle(self):
        want = series_j_oracle(-0.3, 1.0)
        got = sf.bessel_j(-0.3, 1.0)
        assert abs(got - want) < 1e-13 * abs(want)

    @pytest.mark.parametrize("nu", [-1.3, -0.5, 0.0, 0.3, 0.7, 2.5])
    @pytest.mark.parametrize("z", [0.2, 1.7, 9.0, 14.5])
    def test_series_region_against_oracle(self, nu, z):
        want, scale = series_j_oracle(nu, z, terms=60, with_scale=True)
        got = sf.bessel_j(nu, z)
        # second term covers the float64 oracle's own alternation round-off
        assert abs(got - want) < 1e-12 * abs(want) + 5e-15 * scale

    def test_complex_argument(self):
        want = series_j_oracle(0.3, 2.0 + 1.5j, terms=60)
        got = sf.bessel_j(0.3, 2.0 + 1.5j)
        assert abs(got - want) < 1e-12 * abs(want)

    def test_negative_integer_order_reflection(self):
        assert abs(sf.bessel_j(-2.0, 3.1) - sf.bessel_j(2.0, 3.1)) < 1e-14
        assert abs(sf.bessel_j(-3.0, 3.1) + sf.bessel_j(3.0, 3.1)) < 1e-14

    def test_array_argument_matches_scalars(self):
        z = np.array([0.3, 5.0, 40.0, 2.0 + 1.0j])
        vec = sf.bessel_j(0.7, z)
        for i, zz in enumerate(z):
            assert vec[i] == sf.bessel_j(0.7, complex(zz))

    def test_order_cap_enforced(self):
        with pytest.raises(OutOfRangeError):
            sf.bessel_j(250.0, 1.0)
        # explicit override admits larger orders
        assert np.isfinite(sf.bessel_j(250.0, 10.0, max_order=300.0).real)

    def test_singular_negative_order_at_origin(self):
        with pytest.raises(SingularArgumentError):
            sf.bessel_j(-0.3, 0.0)

    def test_ladder_matches_direct(self):
        vals = sf.bessel_j_ladder(0.3, 40, 55.0, max_order=50.0)
        for m in [0, 1, 7, 25, 39]:
            direct = sf.bessel_j(0.3 + m, 55.0, max_order=50.0)
            scale = max(abs(direct), 1e-30)
            assert abs(vals[m] - direct) < 1e-11 * max(scale, 0.3)


class TestBesselJPrime:
    def test_at_origin(self):
        assert sf.bessel_j_prime(0.0, 0.0) == 0.0
        assert sf.bessel_j_prime(1.0, 0.0) == 0.5

    def test_against_central_difference(self):
        h = 1e-6
        want = (sf.bessel_j(0.7, 2.0 + h) - sf.bessel_j(0.7, 2.0 - h)) / (2 * h)
        got = sf.bessel_j_prime(0.7, 2.0)
        assert abs(got - want) < 1e-8


class TestHankel:
    def test_half_order_closed_form(self):
        # H^(1)_{1/2}(z) = -i sqrt(2/(pi z)) e^{iz}
        want = -1j * math.sqrt(2.0 / math.pi) * np.exp(1j)
        got = sf.hankel1(0.5, 1.0)
        assert abs(got - want) < 1e-13

    def test_reflection_construction(self):
        nu, z = 0.3, 2.0
        want = (1j / math.sin(math.pi * nu)) * (
            np.exp(-1j * math.pi * nu) * series_j_oracle(nu, z, 60)
            - series_j_oracle(-nu, z, 60)
        )
        got = sf.hankel1(nu, z)
        assert abs(got - want) < 1e-12 * abs(want)

    @pytest.mark.parametrize("nu", [0.25, 0.3, 0.5, 1.3, 2.7, -0.7, -2.3])
    @pytest.mark.parametrize("x", [0.05, 0.8, 5.0, 30.0, 99.0])
    def test_reflection_identity(self, nu, x):
        # i sin(pi nu) H1_nu = J_{-nu} - e^{-i pi nu} J_nu
        lhs = 1j * math.sin(math.pi * nu) * sf.hankel1(nu, x)
        rhs = sf.bessel_j(-nu, x) - np.exp(-1j * math.pi * nu) * sf.bessel_j(nu, x)
        assert abs(lhs - rhs) <= 1e-10 * max(abs(lhs), abs(rhs))

    def test_hankel2_mirror(self):
        # on the real axis H^(2) is the conjugate of H^(1) for real order
        a = sf.hankel1(0.5, 1.0)
        b = sf.hankel2(0.5, 1.0)
        assert abs(b - np.conj(a)) < 1e-13

    def test_h1_plus_h2_is_2j(self):
        for nu, z in [(0.3, 3.0), (0.3, 2.0), (1.7, 25.0)]:
            lhs = sf.hankel1(nu, z) + sf.hankel2(nu, z)
            rhs = 2.0 * sf.bessel_j(nu, z)
            assert abs(lhs - rhs) < 1e-12 * abs(rhs)

    def test_hankel2_from_h1_and_j(self):
        nu, z = 0.3, 2.0
        want = 2.0 * sf.bessel_j(nu, z) - sf.hankel1(nu, z)
        assert abs(sf.hankel2(nu, z) - want) < 1e-14

    def test_singular_at_zero(self):
        with pytest.raises(SingularArgumentError):
            sf.hankel1(0.3, 0.0)

    def test_integer_order_consistent_with_neighbours(self):
        # integer-order path must be the limit of nearby non-integer orders
        for x in [0.5, 4.0, 8.0]:
            mid = sf.hankel1(1.0, x)
            lo = sf.hankel1(1.0 - 1e-7, x)
            hi = sf.hankel1(1.0 + 1e-7, x)
            assert abs(0.5 * (lo + hi) - mid) < 2e-7 * abs(mid)


class TestIdentitySuite:
    """The dual-route identity grid shared with the acceptance suite."""

    NU_GRID = [-2.7, -2.0, -1.5, -1.0, -0.7, -0.3, 0.0, 0.3, 0.5, 1.0, 1.3, 2.0, 2.7]

    def test_wronskian(self):
        for nu in self.NU_GRID:
            for x in np.geomspace(0.1, 100.0, 17):
                j = sf.bessel_j(nu, x)
                jp = sf.bessel_j_prime(nu, x)
                h = sf.hankel1(nu, x)
                hp = sf.hankel1_prime(nu, x)
                ref = 2j / (math.pi * x)
                # the guard term covers unavoidable cancellation of the two
                # products when both factors are large (negative orders, small x)
                bound = 1e-10 * abs(ref) + 2e-14 * (abs(j * hp) + abs(jp * h))
                assert abs(j * hp - jp * h - ref) <= bound, (nu, x)

    def test_recurrence(self):
        for nu in self.NU_GRID:
            for x in np.geomspace(0.1, 100.0, 17):
                lhs = sf.bessel_j(nu - 1, x) + sf.bessel_j(nu + 1, x)
                rhs = (2 * nu / x) * sf.bessel_j(nu, x)
                scale = max(abs(lhs), abs(rhs), abs(sf.bessel_j(nu, x)), 1e-3)
                assert abs(lhs - rhs) <= 1e-10 * scale, (nu, x)

    def test_imaginary_argument_matches_modified_series(self):
        # J_nu(ix) = e^{i pi nu / 2} I_nu(x), with I_nu summed by its own
        # positive-term series
        for nu in [-0.3, 0.3, 0.7, 1.3, 2.5]:
            for x in np.geomspace(0.1, 60.0, 12):
                lhs = sf.bessel_j(nu, 1j * x)
                rhs = np.exp(1j * math.pi * nu / 2) * sf.bessel_i(nu, x)
                assert abs(lhs - rhs) <= 1e-11 * abs(rhs), (nu, x)

    def test_series_asymptotic_crossover_continuity(self):
        # both internal evaluation paths must agree in an overlap window
        # around the switch radius (series round-off grows beyond it)
        for nu in [-0.7, 0.0, 0.3, 1.3]:
            for x in [16.0, 16.5, 17.0]:
                zarr = np.array([x], dtype=complex)
                a = sf._series_j(nu, zarr)[0]
                b = sf._asym_j(nu, zarr)[0]
                envelope = math.sqrt(2.0 / (math.pi * x))
                assert abs(a - b) <= 1e-10 * envelope, (nu, x)


class TestKummer:
    def test_at_zero(self):
        assert sf.kummer_f(0.37, 2.2, 0.0) == 1.0

    def test_equal_parameters_exponential(self):
        assert abs(sf.kummer_f(1.7, 1.7, 1.5) - math.exp(1.5)) < 1e-13 * math.exp(1.5)

    def test_against_rational_oracle(self):
        want = kummer_oracle(0.25, 1.0, 0.8)
        got = sf.kummer_f(0.25, 1.0, 0.8)
        assert abs(got - want) < 1e-13 * abs(want)

    def test_pole_rejected(self):
        with pytest.raises(PoleError):
            sf.kummer_f(0.3, -2.0, 0.5)

    def test_derivative_contiguous_relation(self):
        a, c, z = 0.25, 1.0, 0.8
        h = 1e-6
        fd = (sf.kummer_f(a, c, z + h) - sf.kummer_f(a, c, z - h)) / (2 * h)
        assert abs(sf.kummer_f_prime(a, c, z) - fd) < 1e-9


class TestGamma:
    def test_against_math_gamma(self):
        for x in [0.1, 0.5, 1.0, 2.5, 4.7, 12.3, 33.0]:
            assert abs(sf.gamma_fn(x) - math.gamma(x)) < 1e-13 * math.gamma(x)

    def test_reflection_negative_axis(self):
        for x in [-0.3, -1.7, -2.3]:
            assert abs(sf.gamma_fn(x) - math.gamma(x)) < 1e-12 * abs(math.gamma(x))

    def test_pole(self):
        with pytest.raises(PoleError):
            sf.gamma_fn(-3.0)

    def test_log_gamma_large(self):
        assert abs(sf.log_gamma(200.5).real - math.lgamma(200.5)) < 1e-12 * math.lgamma(200.5)
