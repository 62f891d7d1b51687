"""Engine-side closed forms in the high-temperature limit.

Everything here is a function of the reduced coordinates alone: the
compression ratio z and either the temperature ratio tau or the Carnot
efficiency eta_c = 1 - tau.  The trade-off objective maximized throughout is

    Omega(z) = 2 w(z) - eta_max * q_h(z),

with eta_max the same-regime maximum attainable efficiency.  For both
asymmetric regimes the stationarity condition collapses to
z^3 = tau (2 - eta_max)/2, so the optimizer z* admits a closed form; the
expanded expressions for z* and for the efficiency at maximum Omega are
kept in full and cross-checked against each other and against the numeric
oracle by the verification suite.

Each closed-form evaluation also returns a trace of its named intermediate
quantities (angles, cube roots, radicals) so tests can pin the intermediates
independently of the final value; expressions this long fail in ways a
single end value can hide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .cycle import (
    ASYMMETRIC_REGIMES,
    Device,
    Regime,
    ReducedParams,
    feasible_interval,
    high_t_engine_quantities,
)
from .errors import DomainError

__all__ = [
    "TracedValue",
    "EnginePoint",
    "TaylorCoeffs",
    "eta_ht",
    "z_star_max_eta",
    "eta_max",
    "omega_objective",
    "z_star_max_omega",
    "eta_at_max_omega",
    "eta_max_work",
    "taylor_coeffs",
    "fractional_loss",
    "fractional_loss_max_work",
    "point_at",
]

#: the closed forms degenerate at both ends of the eta_c axis
EDGE = 1e-6

#: numeric slack admitted at feasibility boundaries
BOUNDARY_SLACK = 1e-12


class TracedValue(NamedTuple):
    """A closed-form result plus its named intermediate quantities."""

    value: float
    trace: dict[str, float]


@dataclass(frozen=True)
class EnginePoint:
    """One operating point: ratio, efficiency, work, heat, Omega value."""

    z: float
    eta: float
    w: float
    q_h: float
    omega_value: float


@dataclass(frozen=True)
class TaylorCoeffs:
    """Coefficients of eta_c, eta_c^2, eta_c^3 in the near-equilibrium
    expansion of the efficiency at maximum Omega."""

    c1: float
    c2: float
    c3: float


def _require_asymmetric(regime: Regime) -> None:
    if regime not in ASYMMETRIC_REGIMES:
        raise DomainError(f"operation defined for the sc/se regimes only, got {regime}")


def _check_eta_c(eta_c: float) -> None:
    if not EDGE <= eta_c <= 1.0 - EDGE:
        raise DomainError(
            f"eta_c={eta_c!r} outside [{EDGE}, {1.0 - EDGE}]; the closed forms "
            f"degenerate at both ends"
        )


def _check_tau(tau: float, allow_unity: bool = False) -> None:
    hi = 1.0 if allow_unity else 1.0 - EDGE
    if not EDGE <= tau <= hi:
        raise DomainError(f"tau={tau!r} outside [{EDGE}, {hi}]")


def _cos_acos_third(x: float) -> float:
    """cos(arccos(x)/3), continued as cosh(arccosh(x)/3) for x > 1.

    Arguments above 1 arise on the single-real-root side of the
    sudden-expansion cubic (tau < 1/2); the hyperbolic continuation is that
    root's standard closed form.
    """
    if x >= 1.0:
        return math.cosh(math.acosh(x) / 3.0)
    if x < -1.0:
        if x < -1.0 - 1e-12:
            raise DomainError(f"arccos argument {x!r} below -1")
        x = -1.0
    return math.cos(math.acos(x) / 3.0)


def _checked_quantities(regime: Regime, z: float, tau: float) -> tuple[float, float]:
    """(q_h, w) at an operating point, rejecting points outside the engine
    window with the violated condition spelled out."""
    _require_asymmetric(regime)
    _check_tau(tau)
    if not 0.0 < z <= 1.0:
        raise DomainError(f"compression ratio z={z!r} outside (0, 1]")
    q_h, w = high_t_engine_quantities(regime, ReducedParams(z, tau))
    if w < -BOUNDARY_SLACK:
        raise DomainError(
            f"positive work condition violated at z={z}, tau={tau} "
            f"(w={w!r} < 0); engine window is {feasible_interval(Device.ENGINE, regime, tau)}"
        )
    if q_h < -BOUNDARY_SLACK:
        raise DomainError(
            f"input heat is not positive at z={z}, tau={tau} (q_h={q_h!r} < 0)"
        )
    return q_h, w


def eta_ht(regime: Regime, z: float, tau: float) -> float:
    """High-temperature efficiency of the asymmetric engine at ratio z."""
    _checked_quantities(regime, z, tau)
    if regime is Regime.SUDDEN_COMPRESSION:
        return (2.0 * z * z - tau * z - tau) * (1.0 - z) / (z * z * (2.0 - tau) - tau)
    return (z * z - 2.0 * tau + z) * (z - 1.0) / (2.0 * (tau - z))


def z_star_max_eta(regime: Regime, tau: float) -> TracedValue:
    """Ratio maximizing the efficiency: the relevant real root of the
    stationarity cubic, in trigonometric form."""
    _require_asymmetric(regime)
    _check_tau(tau, allow_unity=True)
    if regime is Regime.SUDDEN_COMPRESSION:
        arg = -math.sqrt(tau * (2.0 - tau))
        angle = math.acos(arg) / 3.0
        z = 2.0 * math.sqrt(tau / (2.0 - tau)) * math.cos(angle)
        return TracedValue(z, {"arccos_arg": arg, "angle": angle})
    arg = (2.0 - (4.0 - tau) * tau) / (tau * tau)
    cos_term = _cos_acos_third(arg)
    offset = tau * cos_term
    z = tau / 2.0 + offset
    return TracedValue(z, {"arccos_arg": arg, "cos_term": cos_term, "offset_term": offset})


def eta_max(regime: Regime, tau: float) -> TracedValue:
    """Maximum attainable efficiency of the asymmetric engine."""
    _require_asymmetric(regime)
    _check_tau(tau)
    if regime is Regime.SUDDEN_COMPRESSION:
        arg = -math.sqrt(tau * (2.0 - tau))
        angle = math.acos(arg) / 3.0
        c = math.cos(angle)
        cos_double = 2.0 * c * c - 1.0
        num = 16.0 * math.sqrt(tau / (2.0 - tau)) * c**3 - tau - 4.0 * (tau + 2.0) * c * c + 2.0
        den = (1.0 + 2.0 * cos_double) * (tau - 2.0)
        return TracedValue(
            num / den,
            {
                "arccos_arg": arg,
                "angle": angle,
                "z_at_max": 2.0 * math.sqrt(tau / (2.0 - tau)) * c,
            },
        )
    arg = (2.0 - (4.0 - tau) * tau) / (tau * tau)
    cos_term = _cos_acos_third(arg)
    f = tau * cos_term
    value = (
        (2.0 - tau - 2.0 * f)
        * (4.0 * f * (tau + 1.0) - tau * (6.0 - tau) + 4.0 * f * f)
        / (16.0 * f - 8.0 * tau)
    )
    return TracedValue(
        value,
        {
            "arccos_arg": arg,
            "cos_term": cos_term,
            "offset_term": f,
            "z_at_max": tau / 2.0 + f,
        },
    )


def omega_objective(regime: Regime, z: float, tau: float) -> float:
    """Omega(z) = 2 w - eta_max * q_h, the useful-vs-lost energy trade-off."""
    q_h, w = _checked_quantities(regime, z, tau)
    return 2.0 * w - eta_max(regime, tau).value * q_h


def z_star_max_omega(regime: Regime, tau: float) -> TracedValue:
    """Ratio maximizing Omega, via the standalone optimizer expression (its
    equivalence with the cube-root intermediate of ``eta_at_max_omega`` is
    asserted in tests, not assumed)."""
    _require_asymmetric(regime)
    _check_tau(tau)
    if regime is Regime.SUDDEN_COMPRESSION:
        eta_c = 1.0 - tau
        arg = -math.sqrt(1.0 - eta_c * eta_c)
        angle = math.acos(arg) / 3.0
        c = math.cos(angle)
        cos_double = 2.0 * c * c - 1.0
        cube = tau + tau * (
            tau - 2.0 + 4.0 * (2.0 + tau) * c * c
            - 16.0 * (math.sqrt(tau / (2.0 - tau)) * c**3)
        ) / (2.0 * (tau - 2.0) * (1.0 + 2.0 * cos_double))
        return TracedValue(
            cube ** (1.0 / 3.0), {"arccos_arg": arg, "angle": angle, "z_cubed": cube}
        )
    arg = (2.0 + (tau - 4.0) * tau) / (tau * tau)
    cos_term = _cos_acos_third(arg)
    cos_double = 2.0 * cos_term * cos_term - 1.0
    cube = tau + tau * (tau - 2.0 + 2.0 * tau * cos_term) * (
        3.0 * tau - 6.0 + 4.0 * (1.0 + tau) * cos_term + 2.0 * tau * cos_double
    ) / (32.0 * cos_term - 16.0)
    return TracedValue(
        cube ** (1.0 / 3.0), {"arccos_arg": arg, "cos_term": cos_term, "z_cubed": cube}
    )


def eta_at_max_omega(regime: Regime, eta_c: float) -> TracedValue:
    """Efficiency at the maximum of the Omega function.

    Covers both asymmetric regimes and the two symmetric benchmarks; only
    the Carnot efficiency enters.
    """
    _check_eta_c(eta_c)
    if regime is Regime.SUDDEN_COMPRESSION:
        arg = -math.sqrt(1.0 - eta_c * eta_c)
        angle = math.acos(arg) / 3.0
        c = math.cos(angle)
        cos_double = 2.0 * c * c - 1.0
        inner = (
            -1.0
            - 4.0 * (eta_c - 3.0) * c * c
            - eta_c
            - 16.0 * math.sqrt((1.0 - eta_c) / (1.0 + eta_c)) * c**3
        )
        cube = (1.0 - eta_c) - (1.0 - eta_c) * inner / (
            2.0 * (1.0 + 2.0 * cos_double) * (1.0 + eta_c)
        )
        k = cube ** (1.0 / 3.0)
        value = (
            (k - 1.0)
            * (2.0 * k * k - (1.0 - eta_c) * (k + 1.0))
            / ((1.0 - eta_c) - (1.0 + eta_c) * k * k)
        )
        return TracedValue(value, {"arccos_arg": arg, "angle": angle, "z_opt": k})
    if regime is Regime.SUDDEN_EXPANSION:
        arg = (eta_c * eta_c + 2.0 * eta_c - 1.0) / ((eta_c - 1.0) ** 2)
        cos_term = _cos_acos_third(arg)
        cos_double = 2.0 * cos_term * cos_term - 1.0
        cube = (1.0 - eta_c) + (
            (1.0 / (32.0 * cos_term - 16.0))
            * (-3.0 - 4.0 * cos_term * (eta_c - 2.0) - 2.0 * cos_double * (eta_c - 1.0) - 3.0 * eta_c)
            * (1.0 - eta_c)
            * (-1.0 - eta_c - 2.0 * cos_term * (eta_c - 1.0))
        )
        copt = cube ** (1.0 / 3.0)
        value = (
            (1.0 - copt)
            * (2.0 * (eta_c - 1.0) + copt * (copt + 1.0))
            / (2.0 * (copt + eta_c - 1.0))
        )
        return TracedValue(value, {"arccos_arg": arg, "cos_term": cos_term, "z_opt": copt})
    if regime is Regime.ADIABATIC:
        radicand = (2.0 - eta_c) * (1.0 - eta_c) / 2.0
        z_opt = math.sqrt(radicand)
        return TracedValue(1.0 - z_opt, {"radicand": radicand, "z_opt": z_opt})
    # symmetric sudden switch: the optimizer variable is z^2, hence the
    # square root in the radical (and a quartic rather than cubic behind it)
    radical = math.sqrt(
        2.0
        * (1.0 - eta_c)
        * (2.0 + 3.0 * eta_c * eta_c + 2.0 * eta_c * math.sqrt(2.0 * (1.0 - eta_c)) + eta_c)
    )
    value = (
        (2.0 - radical - 2.0 * eta_c * eta_c)
        * (2.0 - radical + 2.0 * eta_c)
        / (2.0 * (2.0 - radical - 2.0 * eta_c) * (1.0 + eta_c) ** 2)
    )
    z_opt = math.sqrt(radical / (2.0 * (1.0 + eta_c)))
    return TracedValue(value, {"radical_term": radical, "z_opt": z_opt})


def eta_max_work(regime: Regime, eta_c: float) -> float:
    """Efficiency at maximum work output (the work optimum sits at
    z = tau^(1/3) in both asymmetric regimes)."""
    _require_asymmetric(regime)
    _check_eta_c(eta_c)
    root = (1.0 - eta_c) ** (1.0 / 3.0)
    if regime is Regime.SUDDEN_COMPRESSION:
        return (3.0 * root - 3.0 + eta_c) / (root - 1.0 - eta_c)
    gap = 1.0 - root * root
    return (3.0 * gap - 2.0 * eta_c) / (2.0 * gap)


_SQRT3 = math.sqrt(3.0)


def taylor_coeffs(regime: Regime) -> TaylorCoeffs:
    """Near-equilibrium expansion coefficients of the efficiency at maximum
    Omega; the linear term is regime-independent."""
    _require_asymmetric(regime)
    c1 = 11.0 * _SQRT3 / 4.0 - 9.0 / 2.0
    if regime is Regime.SUDDEN_COMPRESSION:
        return TaylorCoeffs(
            c1,
            (8339.0 - 4804.0 * _SQRT3) / 144.0,
            5.0 * (-179246.0 + 103503.0 * _SQRT3) / 1728.0,
        )
    return TaylorCoeffs(
        c1,
        (1414.0 - 815.0 * _SQRT3) / 36.0,
        (-93262.0 + 53853.0 * _SQRT3) / 432.0,
    )


def fractional_loss(eta: float, eta_c: float) -> float:
    """Fractional loss of work, eta_c/eta - 1: lost work per unit extracted."""
    if not 0.0 < eta_c < 1.0:
        raise DomainError(f"eta_c={eta_c!r} outside (0, 1)")
    if eta <= 0.0:
        raise DomainError(f"efficiency must be positive, got {eta!r}")
    if eta > eta_c + BOUNDARY_SLACK:
        raise DomainError(f"efficiency {eta!r} exceeds the Carnot bound {eta_c!r}")
    return eta_c / eta - 1.0


def fractional_loss_max_work(regime: Regime, eta_c: float) -> float:
    """Closed form of the fractional work loss at maximum work output."""
    _require_asymmetric(regime)
    _check_eta_c(eta_c)
    root = (1.0 - eta_c) ** (1.0 / 3.0)
    if regime is Regime.SUDDEN_COMPRESSION:
        return (root * (3.0 - eta_c) + eta_c * (2.0 + eta_c) - 3.0) / (
            3.0 - eta_c - 3.0 * root
        )
    root2 = root * root
    return (root2 * (2.0 * eta_c - 3.0) - 4.0 * eta_c + 3.0) / (
        3.0 * root2 + 2.0 * eta_c - 3.0
    )


def point_at(regime: Regime, z: float, tau: float) -> EnginePoint:
    """Assemble the full operating record at one (z, tau)."""
    q_h, w = _checked_quantities(regime, z, tau)
    eta = eta_ht(regime, z, tau)
    omega = 2.0 * w - eta_max(regime, tau).value * q_h
    return EnginePoint(z=z, eta=eta, w=w, q_h=q_h, omega_value=omega)
