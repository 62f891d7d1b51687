"""Four-stroke harmonic-oscillator cycle: energies, heats, work, feasibility.

The working medium is a harmonic oscillator cycled between a low frequency
``omega_c`` (in contact with a cold bath, inverse temperature ``beta_c``) and
a high frequency ``omega_h`` (hot bath, ``beta_h``).  The two work strokes
are each driven either quasistatically or by an instantaneous frequency
quench; a quench excites the oscillator by the adiabaticity factor

    lambda = (omega_c**2 + omega_h**2) / (2 * omega_c * omega_h)  >=  1.

Vertex energies follow the coth form; the high-temperature limit replaces
coth(x) by 1/x and reduces everything to two dimensionless numbers, the
compression ratio z = omega_c/omega_h and the temperature ratio
tau = beta_h/beta_c.  Units: hbar = k_B = 1; high-temperature heats and
works are reported in units of 1/beta_h.

Sign convention: energy flowing into the working medium is positive, so
``w_net = q_h + q_c`` is positive when the cycle runs as an engine, and the
refrigerator's work input is ``-w_net``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError

__all__ = [
    "StrokeProtocol",
    "Regime",
    "Device",
    "ASYMMETRIC_REGIMES",
    "CycleConfig",
    "ReducedParams",
    "EnergyLedger",
    "Interval",
    "adiabaticity",
    "energy_ledger",
    "high_t_engine_quantities",
    "high_t_fridge_quantities",
    "feasible_interval",
]


class StrokeProtocol(Enum):
    """How a work stroke is driven."""

    ADIABATIC = "adiabatic"
    SUDDEN_SWITCH = "sudden_switch"


class Regime(str, Enum):
    """Which work strokes are sudden.

    The asymmetric cycles quench exactly one stroke: SUDDEN_COMPRESSION
    quenches A->B and expands quasistatically, SUDDEN_EXPANSION the reverse.
    ADIABATIC and SUDDEN_SWITCH drive both strokes alike and serve as the
    symmetric benchmarks.
    """

    SUDDEN_COMPRESSION = "sc"
    SUDDEN_EXPANSION = "se"
    ADIABATIC = "adi"
    SUDDEN_SWITCH = "ss"


class Device(str, Enum):
    ENGINE = "engine"
    FRIDGE = "fridge"


ASYMMETRIC_REGIMES = (Regime.SUDDEN_COMPRESSION, Regime.SUDDEN_EXPANSION)


def _coth(x: float) -> float:
    # 1 + 2/(exp(2x) - 1): exact via expm1 for small x, saturates to 1 well
    # before exp overflows.
    if x > 19.0:
        return 1.0
    return 1.0 + 2.0 / math.expm1(2.0 * x)


@dataclass(frozen=True)
class CycleConfig:
    """Physical specification of one cycle.

    ``beta_c > beta_h > 0`` (the cold bath is colder) and
    ``0 < omega_c <= omega_h``.  Equal frequencies are admitted as the
    degenerate cycle, which exchanges no net work.
    """

    beta_c: float
    beta_h: float
    omega_c: float
    omega_h: float
    protocol_compression: StrokeProtocol = StrokeProtocol.ADIABATIC
    protocol_expansion: StrokeProtocol = StrokeProtocol.ADIABATIC

    def __post_init__(self) -> None:
        if not self.beta_c > self.beta_h > 0.0:
            raise DomainError(
                f"bath temperatures must satisfy beta_c > beta_h > 0, "
                f"got beta_c={self.beta_c}, beta_h={self.beta_h}"
            )
        if not 0.0 < self.omega_c <= self.omega_h:
            raise DomainError(
                f"frequencies must satisfy 0 < omega_c <= omega_h, "
                f"got omega_c={self.omega_c}, omega_h={self.omega_h}"
            )

    @property
    def reduced(self) -> "ReducedParams":
        return ReducedParams(self.omega_c / self.omega_h, self.beta_h / self.beta_c)


@dataclass(frozen=True)
class ReducedParams:
    """Dimensionless coordinates of all high-temperature analytics."""

    z: float
    tau: float

    def __post_init__(self) -> None:
        if not 0.0 < self.z <= 1.0:
            raise DomainError(f"compression ratio z={self.z} outside (0, 1]")
        if not 0.0 < self.tau < 1.0:
            raise DomainError(f"temperature ratio tau={self.tau} outside (0, 1)")

    @property
    def eta_c(self) -> float:
        """Carnot efficiency, 1 - tau."""
        return 1.0 - self.tau

    @property
    def zeta_c(self) -> float:
        """Carnot coefficient of performance, tau/(1 - tau)."""
        return self.tau / (1.0 - self.tau)

    @classmethod
    def from_eta_c(cls, z: float, eta_c: float) -> "ReducedParams":
        return cls(z, 1.0 - eta_c)

    @classmethod
    def from_zeta_c(cls, z: float, zeta_c: float) -> "ReducedParams":
        return cls(z, zeta_c / (1.0 + zeta_c))


@dataclass(frozen=True)
class EnergyLedger:
    """Mean energies at the four cycle vertices, the two heats, and net work.

    ``q_h = h_c - h_b`` (hot isochore), ``q_c = h_a - h_d`` (cold isochore),
    ``w_net = q_h + q_c`` by the first law.
    """

    h_a: float
    h_b: float
    h_c: float
    h_d: float
    q_h: float
    q_c: float
    w_net: float


def adiabaticity(protocol: StrokeProtocol, omega_c: float, omega_h: float) -> float:
    """Adiabaticity parameter of one work stroke: 1 if quasistatic, else
    (omega_c^2 + omega_h^2)/(2 omega_c omega_h) for an instantaneous quench."""
    if omega_c <= 0.0 or omega_h <= 0.0:
        raise DomainError(f"frequencies must be positive, got ({omega_c}, {omega_h})")
    if omega_c > omega_h:
        raise DomainError(f"expected omega_c <= omega_h, got ({omega_c}, {omega_h})")
    if protocol is StrokeProtocol.ADIABATIC:
        return 1.0
    return (omega_c * omega_c + omega_h * omega_h) / (2.0 * omega_c * omega_h)


def energy_ledger(config: CycleConfig) -> EnergyLedger:
    """Evaluate the exact coth-form vertex energies and energy flows."""
    lam_ab = adiabaticity(config.protocol_compression, config.omega_c, config.omega_h)
    lam_cd = adiabaticity(config.protocol_expansion, config.omega_c, config.omega_h)
    cold = _coth(config.beta_c * config.omega_c / 2.0)
    hot = _coth(config.beta_h * config.omega_h / 2.0)
    h_a = 0.5 * config.omega_c * cold
    h_b = 0.5 * config.omega_h * lam_ab * cold
    h_c = 0.5 * config.omega_h * hot
    h_d = 0.5 * config.omega_c * lam_cd * hot
    q_h = h_c - h_b
    q_c = h_a - h_d
    return EnergyLedger(h_a, h_b, h_c, h_d, q_h, q_c, q_h + q_c)


def high_t_engine_quantities(regime: Regime, p: ReducedParams) -> tuple[float, float]:
    """High-temperature (q_h, w_net) in units of 1/beta_h for the asymmetric
    regimes.  Valid for any z in (0, 1]; the sign of w tells engine from
    non-engine operation."""
    z, tau = p.z, p.tau
    if regime is Regime.SUDDEN_COMPRESSION:
        q_h = 1.0 - (tau / 2.0) * (1.0 + 1.0 / (z * z))
        w = (1.0 - z) * (1.0 - (1.0 + z) * tau / (2.0 * z * z))
    elif regime is Regime.SUDDEN_EXPANSION:
        q_h = 1.0 - tau / z
        w = (z - 1.0) * (tau / z - (1.0 + z) / 2.0)
    else:
        raise DomainError(f"high-temperature quantities cover sc/se only, got {regime}")
    return q_h, w


def high_t_fridge_quantities(regime: Regime, p: ReducedParams) -> tuple[float, float]:
    """High-temperature (q_c, w_in) in units of 1/beta_h.

    ``w_in`` is the positive work input, -(q_c + q_h); both quantities are
    positive exactly on the cooling window of ``feasible_interval``.
    """
    z, tau = p.z, p.tau
    if regime is Regime.SUDDEN_COMPRESSION:
        q_c = tau - z
        w_in = (1.0 - z) * (tau * (1.0 + z) / (2.0 * z * z) - 1.0)
    elif regime is Regime.SUDDEN_EXPANSION:
        q_c = tau - (1.0 + z * z) / 2.0
        w_in = (1.0 - z) * (tau / z - (z + 1.0) / 2.0)
    else:
        raise DomainError(f"high-temperature quantities cover sc/se only, got {regime}")
    return q_c, w_in


@dataclass(frozen=True)
class Interval:
    """An open interval (lo, hi); lo >= hi encodes the empty interval."""

    lo: float
    hi: float

    @property
    def empty(self) -> bool:
        return not self.lo < self.hi

    def contains(self, x: float, slack: float = 0.0) -> bool:
        """Membership in the closure, widened by ``slack`` on both sides."""
        return (not self.empty) and self.lo - slack <= x <= self.hi + slack

    def shrunk(self, rel_margin: float = 1e-9) -> "Interval":
        """Pull both endpoints in by ``rel_margin`` of the width (for
        optimizers that must avoid boundary singularities)."""
        m = rel_margin * (self.hi - self.lo)
        return Interval(self.lo + m, self.hi - m)


_EMPTY = Interval(0.0, 0.0)


def feasible_interval(device: Device, regime: Regime, tau: float) -> Interval:
    """Open z-window where the device operates.

    Engine: net work and input heat both positive.  Fridge: cooling load and
    work input both positive.  Endpoints are closed-form quadratic roots.
    An empty window (sudden-expansion fridge with tau <= 1/2) is reported as
    an empty Interval, not an exception.
    """
    if not 0.0 < tau < 1.0:
        raise DomainError(f"temperature ratio tau={tau} outside (0, 1)")
    if regime not in ASYMMETRIC_REGIMES:
        raise DomainError(f"feasible_interval covers sc/se only, got {regime}")
    sudden_compression = regime is Regime.SUDDEN_COMPRESSION
    if device is Device.ENGINE:
        if sudden_compression:
            # positive root of 2 z^2 - tau z - tau = 0; q_h > 0 is implied
            lo = (tau + math.sqrt(tau * tau + 8.0 * tau)) / 4.0
        else:
            # positive root of z^2 + z - 2 tau = 0, always above tau
            lo = max(tau, (-1.0 + math.sqrt(1.0 + 8.0 * tau)) / 2.0)
        return Interval(lo, 1.0)
    if sudden_compression:
        return Interval(0.0, tau)
    if tau <= 0.5:
        return _EMPTY
    return Interval(0.0, math.sqrt(2.0 * tau - 1.0))
