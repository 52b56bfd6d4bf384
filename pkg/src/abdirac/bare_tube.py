"""Finite-radius flux tube and the bare-string limit.

A tube of radius r0 carries flux with coupling alpha.  Inside, the two spin
channels solve a 2-d oscillator-type radial problem whose regular solution is
a power * Gaussian * Kummer-F product; outside, the radial solution is
J_nu + A H^(1)_nu with nu = |l - alpha| (channel 1) or |l + 1 - alpha|
(channel 2).  Continuity of the four spinor components at r0 reduces, channel
by channel, to continuity of the radial logarithmic derivative and fixes the
outgoing-wave weight A.

As k r0 -> 0 every weight dies off as a power of k r0 except in one channel,
l = [alpha] (channel 1 for alpha > 0, channel 2 for alpha < 0), where A tends
to the finite value +/- i sin(pi alpha) e^{+/- i pi alpha} and the radial
solution swaps to the negative-order Bessel function.  The independent check
for all of this is direct high-order integration of the radial equations with
a piecewise-constant field and barrier profile.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from . import specfun as sf
from .errors import RegimeError, RegionError, SingularArgumentError
from .model import BarrierConfig, Coupling, Kinematics, TubeConfig

__all__ = [
    "MatchingCoefficient",
    "RadialComponents",
    "RadialOdeSolution",
    "anomalous_channel",
    "anomalous_limit",
    "interior_chi",
    "log_derivative_interior",
    "matching_coefficient",
    "matching_from_log_derivative",
    "bare_string_radial",
    "exterior_order",
    "ode_radial_oracle",
]

# when |denominator| falls below this fraction of its natural scale the ratio
# sits on the anomalous-channel resonance and the limit value is reported
_RESONANCE_GUARD = 1e-12


@dataclass(frozen=True)
class MatchingCoefficient:
    """Outgoing-Hankel weight of one (l, channel) exterior solution."""

    l: int
    channel: int
    value: complex


@dataclass(frozen=True)
class RadialComponents:
    """The four radial spinor components evaluated at one radius."""

    chi1: complex
    chi2: complex
    chi3: complex
    chi4: complex

    def as_tuple(self) -> tuple[complex, complex, complex, complex]:
        return (self.chi1, self.chi2, self.chi3, self.chi4)


def _channel_m(l: int, channel: int) -> int:
    """Regular-solution power at the origin: |l| (channel 1) or |l+1| (channel 2)."""
    if channel == 1:
        return abs(l)
    if channel == 2:
        return abs(l + 1)
    raise RegimeError("channel must be 1 or 2")


def exterior_order(l: int, channel: int, alpha: float) -> float:
    """Exterior Bessel order of a partial-wave channel."""
    if channel == 1:
        return abs(l - alpha)
    if channel == 2:
        return abs(l + 1 - alpha)
    raise RegimeError("channel must be 1 or 2")


def _kummer_args(l: int, channel: int, tube: TubeConfig, kin: Kinematics,
                 U: float) -> tuple[float, float]:
    """Kummer parameters (a, c) of the interior regular solution."""
    alpha = tube.coupling.alpha
    m = _channel_m(l, channel)
    ksq = tube.interior_ksq(channel, kin, U)
    if channel == 1:
        a = 0.5 * (m + 1 - l) - ksq * tube.r0 ** 2 / (4.0 * alpha)
    else:
        a = 0.5 * (m - l) - ksq * tube.r0 ** 2 / (4.0 * alpha)
    return a, float(m + 1)


def interior_chi(l: int, channel: int, tube: TubeConfig, kin: Kinematics,
                 r: float, U: float = 0.0) -> complex:
    """Regular interior radial solution at r <= r0, unnormalized.

    Power * Gaussian * Kummer-F; with U = 0 this is the bare-tube interior,
    otherwise the barrier-interior analogue.  Zero coupling degenerates to the
    free Bessel solution.
    """
    if r < 0 or r > tube.r0:
        raise RegionError(f"r={r} outside the tube interior [0, {tube.r0}]")
    alpha = tube.coupling.alpha
    m = _channel_m(l, channel)
    ksq = tube.interior_ksq(channel, kin, U)
    k_ch = cmath.sqrt(complex(ksq))
    if alpha == 0.0:
        if r == 0.0:
            return 1.0 + 0.0j if m == 0 else 0.0j
        # free interior; normalized to the same (k_ch r)^m leading power
        val = sf.bessel_j(float(m), k_ch * r)
        return complex(val * sf.gamma_fn(m + 1.0) * 2.0 ** m)
    if r == 0.0:
        return 1.0 + 0.0j if m == 0 else 0.0j
    a, c = _kummer_args(l, channel, tube, kin, U)
    z = alpha * (r / tube.r0) ** 2
    pref = (k_ch * r) ** m * math.exp(-0.5 * alpha * (r / tube.r0) ** 2)
    return complex(pref * sf.kummer_f(a, c, z))


def _interior_dlog(l: int, channel: int, tube: TubeConfig, kin: Kinematics,
                   U: float = 0.0) -> float:
    """d(ln chi)/dr of the interior solution at r = r0 (real, may be +/-inf)."""
    alpha = tube.coupling.alpha
    m = _channel_m(l, channel)
    r0 = tube.r0
    if alpha == 0.0:
        ksq = tube.interior_ksq(channel, kin, U)
        k_ch = cmath.sqrt(complex(ksq))
        x = k_ch * r0
        val = sf.bessel_j(float(m), x)
        if val == 0:
            return math.inf
        ratio = k_ch * sf.bessel_j_prime(float(m), x) / val
        return float(ratio.real)
    a, c = _kummer_args(l, channel, tube, kin, U)
    f0 = sf.kummer_f(a, c, alpha).real
    f1 = sf.kummer_f_prime(a, c, alpha).real
    if f0 == 0.0:
        return math.inf if f1 > 0 else -math.inf
    return (m - alpha + 2.0 * alpha * (f1 / f0)) / r0


def log_derivative_interior(l: int, channel: int, tube: TubeConfig,
                            kin: Kinematics, U: float = 0.0) -> complex:
    """Interior logarithmic derivative Lambda = (d chi / (k_ch dr)) / chi at r0.

    Complex in general: the channel whose spin opposes the flux has an
    imaginary interior wavenumber, so Lambda picks up a factor 1/i even though
    d(ln chi)/dr itself stays real.  A zero of chi at r0 (interior resonance)
    is reported as an infinite value rather than raising.
    """
    d = _interior_dlog(l, channel, tube, kin, U)
    ksq = tube.interior_ksq(channel, kin, U)
    k_ch = cmath.sqrt(complex(ksq))
    if math.isinf(d):
        return complex(d, 0.0)
    return complex(d / k_ch)


def matching_from_log_derivative(l: int, channel: int, coupling: Coupling,
                                 kin: Kinematics, r_match: float,
                                 dlog: float, resonance: str = "limit") -> complex:
    """Outgoing-wave weight from a known interior d(ln chi)/dr at r_match.

    Shared by the closed-form interior, the ODE oracle and the shielded
    matching; `dlog` has units 1/length.  When the denominator sits on the
    anomalous-channel resonance, `resonance="limit"` reports the limiting
    value while `resonance="raise"` treats it as a parameter error.
    """
    nu = exterior_order(l, channel, coupling.alpha)
    x = kin.k * r_match
    if x <= 0:
        raise RegimeError("matching needs k * r_match > 0")
    g = dlog / kin.k  # d(ln chi)/d(kr)
    j = sf.bessel_j(nu, x)
    jp = sf.bessel_j_prime(nu, x)
    h = sf.hankel1(nu, x)
    hp = sf.hankel1_prime(nu, x)
    if math.isinf(g):
        num, den = j, h
        scale = abs(h)
    else:
        num = jp - g * j
        den = hp - g * h
        scale = abs(hp) + abs(g * h)
    if abs(den) < _RESONANCE_GUARD * scale:
        if resonance == "raise":
            raise RegimeError("matching denominator vanished (parameter error)")
        return anomalous_limit(coupling, channel)
    return complex(-num / den)


def matching_coefficient(l: int, channel: int, tube: TubeConfig,
                         kin: Kinematics) -> MatchingCoefficient:
    """Outgoing-Hankel weight A of the exterior solution for a bare tube."""
    dlog = _interior_dlog(l, channel, tube, kin, U=0.0)
    value = matching_from_log_derivative(
        l, channel, tube.coupling, kin, tube.r0, dlog
    )
    return MatchingCoefficient(l=l, channel=channel, value=value)


def anomalous_channel(coupling: Coupling) -> tuple[int, int] | None:
    """The one (l, channel) whose weight survives the string limit.

    Channel 1 for alpha > 0, channel 2 for alpha < 0, and none at integer
    coupling (the effect carries a sin(pi alpha) factor).  The angular
    momentum is always l = [alpha].
    """
    if coupling.is_integer:
        return None
    if coupling.alpha > 0:
        return coupling.int_part, 1
    return coupling.int_part, 2


def anomalous_limit(coupling: Coupling, channel: int) -> complex:
    """Limit of the anomalous-channel weight as k r0 -> 0."""
    alpha = coupling.alpha
    if channel == 1:
        return 1j * math.sin(math.pi * alpha) * cmath.exp(1j * math.pi * alpha)
    if channel == 2:
        return -1j * math.sin(math.pi * alpha) * cmath.exp(-1j * math.pi * alpha)
    raise RegimeError("channel must be 1 or 2")


def _principal_order(l: int, channel: int, coupling: Coupling) -> float:
    """Bessel order of a bare-string radial component, anomalous swap included."""
    alpha = coupling.alpha
    anomalous = anomalous_channel(coupling)
    if anomalous == (l, channel):
        if channel == 1:
            return coupling.int_part - alpha  # in (-1, 0)
        return alpha - coupling.int_part - 1.0  # in (-1, 0)
    return exterior_order(l, channel, alpha)


def _power_limit_at_origin(order: float) -> complex:
    """Value of J_order(kr) as r -> 0+, as a 0 / 1 / infinity flag."""
    if order > 0:
        return 0.0 + 0.0j
    if order == 0:
        return 1.0 + 0.0j
    return complex(math.inf, 0.0)


def bare_string_radial(l: int, coupling: Coupling, kin: Kinematics,
                       r: float) -> RadialComponents:
    """Four radial components of a bare-string partial wave (a_l1 = a_l2 = 1).

    The principal components are Bessel functions of order |l - alpha| and
    |l + 1 - alpha|, except in the anomalous channel where the negative-order
    solution survives; the lower pair follows from the first-order ladder
    relations with the string's 1/r vector potential.  At r = 0 divergent
    components are reported as infinities.
    """
    if r < 0:
        raise RegionError("r must be >= 0")
    alpha = coupling.alpha
    k = kin.k
    cfac = -1j * kin.hbar * kin.c / (kin.energy_E + kin.rest_energy)
    nu1 = _principal_order(l, 1, coupling)
    nu2 = _principal_order(l, 2, coupling)
    if r == 0.0:
        chi1 = _power_limit_at_origin(nu1)
        chi2 = _power_limit_at_origin(nu2)
        # ladder shifts the leading power by one either way
        chi3 = _power_limit_at_origin(min(nu2 - 1.0, nu2 + 1.0) if nu2 <= 0 else nu2 - 1.0)
        chi4 = _power_limit_at_origin(min(nu1 - 1.0, nu1 + 1.0) if nu1 <= 0 else nu1 - 1.0)
        return RadialComponents(chi1, chi2, chi3, chi4)
    x = k * r
    j1 = sf.bessel_j(nu1, x)
    j2 = sf.bessel_j(nu2, x)
    dj1 = sf.bessel_j_prime(nu1, x)
    dj2 = sf.bessel_j_prime(nu2, x)
    chi1 = j1
    chi2 = j2
    chi3 = cfac * (k * dj2 + ((l + 1 - alpha) / r) * j2)
    chi4 = cfac * (k * dj1 - ((l - alpha) / r) * j1)
    return RadialComponents(complex(chi1), complex(chi2), complex(chi3), complex(chi4))


class RadialOdeSolution:
    """Piecewise dense solution of the radial problem, with extraction helpers."""

    def __init__(self, l, channel, tube, kin, barrier, segments, scales):
        self.l = l
        self.channel = channel
        self.tube = tube
        self.kin = kin
        self.barrier = barrier
        self._segments = segments  # list of (r_lo, r_hi, OdeSolution)
        self._scales = scales  # per-segment multiplicative factor

    def chi(self, r: float) -> float:
        return self._eval(r)[0]

    def dchi(self, r: float) -> float:
        return self._eval(r)[1]

    def _eval(self, r: float):
        for (lo, hi, sol), s in zip(self._segments, self._scales):
            if lo <= r <= hi * (1 + 1e-12):
                y = sol(min(r, hi))
                return y[0] * s, y[1] * s
        raise RegionError(f"r={r} outside the integrated range")

    def log_derivative(self, r: float) -> float:
        chi, dchi = self._eval(r)
        if chi == 0.0:
            return math.inf
        return dchi / chi

    def extract_matching(self, r_fit: float | None = None) -> complex:
        """Outgoing-Hankel weight from a two-point exterior fit.

        Decomposes the (real) numerical solution over {J_nu, H^(1)_nu} at two
        radii a quarter period apart and returns the weight ratio.  Precision
        is limited by the integrator tolerance when |A| is very small; prefer
        `matching_from_interior` for strongly suppressed channels.
        """
        kin = self.kin
        nu = exterior_order(self.l, self.channel, self.tube.coupling.alpha)
        edge = self.barrier.R0 if self.barrier is not None else self.tube.r0
        if r_fit is None:
            r_fit = max(1.5 * edge, (nu + 2.0) / kin.k, 2.0 / kin.k)
        r_b = r_fit + 0.5 * math.pi / kin.k
        top = self._segments[-1][1]
        if r_b > top:
            raise RegionError("fit radii beyond the integrated range")
        chi_a = self.chi(r_fit)
        chi_b = self.chi(r_b)
        mat = np.array(
            [
                [sf.bessel_j(nu, kin.k * r_fit), sf.hankel1(nu, kin.k * r_fit)],
                [sf.bessel_j(nu, kin.k * r_b), sf.hankel1(nu, kin.k * r_b)],
            ],
            dtype=complex,
        )
        p, q = np.linalg.solve(mat, np.array([chi_a, chi_b], dtype=complex))
        return complex(q / p)

    def matching_from_interior(self) -> complex:
        """Outgoing-Hankel weight from the ODE interior log-derivative at the
        matching radius (r0 for a bare tube, R0 for a shielded one, with the
        spinor-continuity jump applied there)."""
        kin = self.kin
        coupling = self.tube.coupling
        if self.barrier is None:
            d = self.log_derivative(self.tube.r0)
            return matching_from_log_derivative(
                self.l, self.channel, coupling, kin, self.tube.r0, d
            )
        R0, U = self.barrier.R0, self.barrier.U
        d_in = self.log_derivative(R0)
        d_out = _jump_log_derivative(self.l, self.channel, coupling.alpha, kin, R0, U, d_in)
        return matching_from_log_derivative(
            self.l, self.channel, coupling, kin, R0, d_out
        )


def _jump_log_derivative(l, channel, alpha, kin, R0, U, dlog_in) -> float:
    """Transform d(ln chi)/dr across the potential step at R0.

    Continuity of the lower spinor components with a discontinuous potential
    makes chi' jump while chi stays continuous.
    """
    ew = kin.energy_E + kin.rest_energy
    fac = ew / (ew - U)
    g = -(l - alpha) if channel == 1 else (l + 1 - alpha)
    return fac * dlog_in + (U / (ew - U)) * g / R0


def ode_radial_oracle(l: int, channel: int, tube: TubeConfig, kin: Kinematics,
                      r_max: float, barrier: BarrierConfig | None = None,
                      rtol: float = 1e-12) -> RadialOdeSolution:
    """Direct integration of the second-order radial equation.

    Starts from the regular power behaviour near the origin, integrates
    through the tube wall (vector-potential kink) and, when a barrier is
    present, applies the spinor-continuity derivative jump at R0.  Serves as
    the convention-free oracle for every boundary-matching formula.
    """
    if channel not in (1, 2):
        raise RegimeError("channel must be 1 or 2")
    alpha = tube.coupling.alpha
    r0 = tube.r0
    hbarc = kin.hbar * kin.c
    rest = kin.rest_energy
    E = kin.energy_E
    l_ch = l if channel == 1 else l + 1
    spin = 1.0 if channel == 1 else -1.0
    m = _channel_m(l, channel)
    U = barrier.U if barrier is not None else 0.0
    R0 = barrier.R0 if barrier is not None else None
    if barrier is not None and R0 <= r0:
        raise RegimeError("barrier radius must exceed the tube radius")

    def rhs(r, y, inside_tube: bool, in_barrier: bool):
        phi = U if in_barrier else 0.0
        esq = ((E - phi) ** 2 - rest * rest) / (hbarc * hbarc)
        if inside_tube:
            a_term = alpha * (r / r0) ** 2
            spin_term = spin * tube.qB_over_hbar
        else:
            a_term = alpha
            spin_term = 0.0
        q = esq - ((l_ch - a_term) / r) ** 2 + spin_term
        return [y[1], -y[1] / r - q * y[0]]

    segments = []
    scales = []
    carry = 1.0

    def integrate(r_lo, r_hi, y0, inside_tube, in_barrier):
        sol = solve_ivp(
            lambda r, y: rhs(r, y, inside_tube, in_barrier),
            (r_lo, r_hi),
            y0,
            method="DOP853",
            rtol=rtol,
            atol=1e-210,
            dense_output=True,
        )
        if not sol.success:
            raise RegimeError(f"radial integration failed: {sol.message}")
        return sol.sol

    r_start = 1e-6 * r0
    # regular start chi ~ r^m (1 + c2 r^2 + ...); the curvature coefficient
    # keeps the m = 0 derivative away from an exact zero
    phi0 = U if barrier is not None else 0.0
    q_smooth = (
        ((E - phi0) ** 2 - rest * rest) / (hbarc * hbarc)
        + spin * tube.qB_over_hbar
        + 2.0 * l_ch * alpha / (r0 * r0)
    )
    c2 = -q_smooth / (4.0 * (m + 1))
    y = [1.0, m / r_start + 2.0 * c2 * r_start]
    edges = [(r_start, r0, True, barrier is not None)]
    if barrier is not None:
        edges.append((r0, R0, False, True))
        edges.append((R0, r_max, False, False))
    else:
        edges.append((r0, r_max, False, False))

    for (r_lo, r_hi, inside, in_bar) in edges:
        if r_hi <= r_lo:
            continue
        dense = integrate(r_lo, r_hi, y, inside, in_bar)
        segments.append((r_lo, r_hi, dense))
        scales.append(carry)
        y_end = dense(r_hi)
        # renormalize between segments; the equation is linear
        mag = max(abs(y_end[0]), abs(y_end[1]) * r_hi, 1e-280)
        carry *= mag
        y = [y_end[0] / mag, y_end[1] / mag]
        if in_bar and not inside and barrier is not None and math.isclose(r_hi, R0):
            d_in = y[1] / y[0] if y[0] != 0 else math.inf
            d_out = _jump_log_derivative(l, channel, alpha, kin, R0, U, d_in)
            y = [y[0], d_out * y[0]]

    return RadialOdeSolution(l, channel, tube, kin, barrier, segments, scales)
