"""Refrigerator-side closed forms in the high-temperature limit.

The optimization variable is again the compression ratio z, the control
parameter is the Carnot COP zeta_c = tau/(1 - tau), and the trade-off
objective is Omega(z) = 2 q_c - zeta_max * w_in with zeta_max the
same-regime maximum COP.

Branch selection: the COP stationarity cubics are the *same* cubics as the
engine-side efficiency optima, but the cooling window selects a different
real root -- the branch with phase offset 4 pi/3 (k = 2) instead of k = 0.
The root expressions can equally be written with sin(pi/6 - theta), which
equals -cos(theta + 4 pi/3); everything here is evaluated on the
cosine-with-offset branch (the identity is asserted in tests).

Feasibility: the sudden-expansion fridge needs q_c = tau - (1 + z^2)/2 > 0
somewhere, i.e. tau > 1/2 (zeta_c > 1); the symmetric sudden-switch fridge
has the same cooling load and the same restriction.  Both raise
InfeasibleDeviceError below that threshold, distinct from a plain bad
argument.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cycle import (
    ASYMMETRIC_REGIMES,
    Device,
    Regime,
    ReducedParams,
    feasible_interval,
    high_t_fridge_quantities,
)
from .engine import BOUNDARY_SLACK, TracedValue
from .errors import DomainError, InfeasibleDeviceError

__all__ = [
    "FridgePoint",
    "cop_ht",
    "z_star_max_cop",
    "cop_max",
    "omega_objective",
    "cop_at_max_omega",
    "point_at",
]

_OFFSET = 4.0 * math.pi / 3.0


@dataclass(frozen=True)
class FridgePoint:
    """One operating point: ratio, COP, cooling load, work input, Omega."""

    z: float
    zeta: float
    q_c: float
    w_in: float
    omega_value: float


def _require_asymmetric(regime: Regime) -> None:
    if regime not in ASYMMETRIC_REGIMES:
        raise DomainError(f"operation defined for the sc/se regimes only, got {regime}")


def _check_zeta_c(regime: Regime, zeta_c: float) -> None:
    if zeta_c <= 0.0:
        raise DomainError(f"zeta_c={zeta_c!r} must be positive")
    if regime in (Regime.SUDDEN_EXPANSION, Regime.SUDDEN_SWITCH) and zeta_c <= 1.0:
        raise InfeasibleDeviceError(
            f"the {regime.value} fridge has an empty cooling window for "
            f"zeta_c={zeta_c!r}; it requires zeta_c > 1 (tau > 1/2)"
        )


def _checked_quantities(regime: Regime, z: float, tau: float) -> tuple[float, float]:
    _require_asymmetric(regime)
    if not 0.0 < tau < 1.0:
        raise DomainError(f"tau={tau!r} outside (0, 1)")
    if regime is Regime.SUDDEN_EXPANSION and tau <= 0.5:
        raise InfeasibleDeviceError(
            f"the se fridge has an empty cooling window for tau={tau!r} <= 1/2"
        )
    if not 0.0 < z <= 1.0:
        raise DomainError(f"compression ratio z={z!r} outside (0, 1]")
    q_c, w_in = high_t_fridge_quantities(regime, ReducedParams(z, tau))
    if q_c < -BOUNDARY_SLACK:
        raise DomainError(
            f"cooling condition violated at z={z}, tau={tau} (q_c={q_c!r} < 0); "
            f"cooling window is {feasible_interval(Device.FRIDGE, regime, tau)}"
        )
    if w_in < -BOUNDARY_SLACK:
        raise DomainError(
            f"work input is not positive at z={z}, tau={tau} (w_in={w_in!r} < 0)"
        )
    return q_c, w_in


def cop_ht(regime: Regime, z: float, tau: float) -> float:
    """High-temperature COP of the asymmetric refrigerator at ratio z."""
    _checked_quantities(regime, z, tau)
    if regime is Regime.SUDDEN_COMPRESSION:
        return (
            2.0 * z * z * (z - tau) / ((1.0 - z) * (2.0 * z * z - tau * (1.0 + z)))
        )
    return (
        z * (2.0 * tau - (z * z + 1.0)) / ((z - 1.0) * (z * (1.0 + z) - 2.0 * tau))
    )


def z_star_max_cop(regime: Regime, zeta_c: float) -> TracedValue:
    """Ratio maximizing the COP: the k = 2 branch of the stationarity cubic."""
    _require_asymmetric(regime)
    _check_zeta_c(regime, zeta_c)
    if regime is Regime.SUDDEN_COMPRESSION:
        arg = -math.sqrt(zeta_c * (2.0 + zeta_c)) / (1.0 + zeta_c)
        angle = math.acos(arg) / 3.0
        sine_term = math.sin(math.pi / 6.0 - angle)
        z = 2.0 * math.sqrt(zeta_c / (2.0 + zeta_c)) * math.cos(angle + _OFFSET)
        return TracedValue(
            z, {"arccos_arg": arg, "angle": angle, "sine_term": sine_term}
        )
    arg = (2.0 - zeta_c * zeta_c) / (zeta_c * zeta_c)
    angle = math.acos(arg) / 3.0
    sine_term = math.sin(math.pi / 6.0 - angle)
    z = zeta_c / (2.0 * (1.0 + zeta_c)) + (zeta_c / (1.0 + zeta_c)) * math.cos(
        angle + _OFFSET
    )
    return TracedValue(z, {"arccos_arg": arg, "angle": angle, "sine_term": sine_term})


def cop_max(regime: Regime, zeta_c: float) -> TracedValue:
    """Maximum attainable COP of the asymmetric refrigerator."""
    _require_asymmetric(regime)
    _check_zeta_c(regime, zeta_c)
    if regime is Regime.SUDDEN_COMPRESSION:
        arg = -math.sqrt(zeta_c * (2.0 + zeta_c)) / (1.0 + zeta_c)
        angle = math.acos(arg) / 3.0
        g = -math.cos(angle + _OFFSET)  # equals sin(pi/6 - angle)
        s = math.sqrt(zeta_c / (2.0 + zeta_c))
        num = 8.0 * g * g * zeta_c * (zeta_c + 2.0 * g * (1.0 + zeta_c) * s)
        den = (
            (2.0 + zeta_c)
            * (1.0 + 2.0 * g * s)
            * (
                zeta_c * (1.0 - 2.0 * g * s)
                - 8.0 * g * g * zeta_c * (1.0 + zeta_c) / (2.0 + zeta_c)
            )
        )
        return TracedValue(
            num / den,
            {
                "arccos_arg": arg,
                "angle": angle,
                "sine_term": g,
                "z_at_max": -2.0 * g * s,
            },
        )
    arg = (2.0 - zeta_c * zeta_c) / (zeta_c * zeta_c)
    angle = math.acos(arg) / 3.0
    j = zeta_c / (2.0 * (1.0 + zeta_c)) + zeta_c * math.cos(angle + _OFFSET) / (
        1.0 + zeta_c
    )
    value = (
        j
        * (2.0 * zeta_c - (1.0 + zeta_c) * (1.0 + j * j))
        / ((j - 1.0) * (j * (j + 1.0) * (1.0 + zeta_c) - 2.0 * zeta_c))
    )
    return TracedValue(value, {"arccos_arg": arg, "angle": angle, "z_at_max": j})


def omega_objective(regime: Regime, z: float, tau: float) -> float:
    """Omega(z) = 2 q_c - zeta_max * w_in, the cooling-vs-lost-load trade-off."""
    q_c, w_in = _checked_quantities(regime, z, tau)
    zeta_c = tau / (1.0 - tau)
    return 2.0 * q_c - cop_max(regime, zeta_c).value * w_in


def cop_at_max_omega(regime: Regime, zeta_c: float) -> TracedValue:
    """COP at the maximum of the Omega function, all four regimes."""
    if regime in ASYMMETRIC_REGIMES:
        _check_zeta_c(regime, zeta_c)
        peak = cop_max(regime, zeta_c)
        z_opt = (peak.value * zeta_c / ((1.0 + zeta_c) * (2.0 + peak.value))) ** (
            1.0 / 3.0
        )
        if regime is Regime.SUDDEN_COMPRESSION:
            value = (
                2.0 * z_opt * z_opt * (zeta_c - z_opt * (1.0 + zeta_c))
                / (
                    (1.0 - z_opt)
                    * (zeta_c * (z_opt + 1.0) - 2.0 * z_opt * z_opt * (1.0 + zeta_c))
                )
            )
        else:
            value = (
                z_opt
                * (2.0 * zeta_c - (z_opt * z_opt + 1.0) * (1.0 + zeta_c))
                / (
                    (z_opt - 1.0)
                    * (z_opt * (1.0 + z_opt) * (1.0 + zeta_c) - 2.0 * zeta_c)
                )
            )
        trace = dict(peak.trace, cop_max=peak.value, z_opt=z_opt)
        return TracedValue(value, trace)
    if regime is Regime.ADIABATIC:
        if zeta_c <= 0.0:
            raise DomainError(f"zeta_c={zeta_c!r} must be positive")
        radicand = (2.0 + zeta_c) * (1.0 + zeta_c)
        value = zeta_c / (math.sqrt(radicand) - zeta_c)
        return TracedValue(
            value, {"radicand": radicand, "z_opt": zeta_c / math.sqrt(radicand)}
        )
    # symmetric sudden switch: optimizer variable is z^2 = radical_term
    _check_zeta_c(regime, zeta_c)
    root = math.sqrt(2.0 * zeta_c * (1.0 + zeta_c))
    radical = math.sqrt(
        zeta_c
        * (2.0 * root - 3.0 * zeta_c - 1.0)
        / ((1.0 + zeta_c) * (2.0 * root - 3.0 * (1.0 + zeta_c)))
    )
    value = (
        radical
        * (1.0 + radical * (1.0 + zeta_c) - zeta_c)
        / ((1.0 - radical) * (radical * (1.0 + zeta_c) - zeta_c))
    )
    return TracedValue(value, {"radical_term": radical, "z_opt": math.sqrt(radical)})


def point_at(regime: Regime, z: float, tau: float) -> FridgePoint:
    """Assemble the full operating record at one (z, tau)."""
    q_c, w_in = _checked_quantities(regime, z, tau)
    zeta_c = tau / (1.0 - tau)
    zeta = cop_ht(regime, z, tau)
    omega = 2.0 * q_c - cop_max(regime, zeta_c).value * w_in
    return FridgePoint(z=z, zeta=zeta, q_c=q_c, w_in=w_in, omega_value=omega)
