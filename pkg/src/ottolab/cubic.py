"""Trigonometric solution of cubics with three real roots.

Covers the casus-irreducibilis regime only: when the discriminant of
a y^3 + b y^2 + c y + d is positive, the three real roots of the monic form
y^3 + B y^2 + C y + D are

    y_k = -B/3 + (2/3) sqrt(B^2 - 3C)
          * cos[ (1/3) arccos( -(2B^3 - 9BC + 27D) / (2 (B^2 - 3C)^{3/2}) )
                 + 2 pi k / 3 ],           k in {0, 1, 2}.

No Cardano/complex path is provided; a cubic outside this regime is a
domain error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = ["MonicCubic", "discriminant", "trig_root", "all_roots"]

#: arccos arguments within this distance outside [-1, 1] are clamped;
#: anything farther means the cubic is genuinely outside the trig regime.
ACOS_CLAMP_TOL = 1e-12


def discriminant(a: float, b: float, c: float, d: float) -> float:
    """Discriminant of a y^3 + b y^2 + c y + d (positive iff three distinct
    real roots).  Note it scales as a^4: the monic form of the same cubic has
    a different discriminant value."""
    if a == 0.0:
        raise DomainError("leading coefficient is zero; not a cubic")
    return (
        18.0 * a * b * c * d
        - 4.0 * b**3 * d
        + b * b * c * c
        - 4.0 * a * c**3
        - 27.0 * a * a * d * d
    )


@dataclass(frozen=True)
class MonicCubic:
    """y^3 + b y^2 + c y + d, remembering the discriminant of the original
    (pre-division) coefficients, which is the scale-free regime test."""

    b: float
    c: float
    d: float
    discriminant: float

    @classmethod
    def from_coefficients(cls, a: float, b: float, c: float, d: float) -> "MonicCubic":
        disc = discriminant(a, b, c, d)
        return cls(b / a, c / a, d / a, disc)

    def __call__(self, y: float) -> float:
        """Residual of the monic polynomial at y (Horner)."""
        return ((y + self.b) * y + self.c) * y + self.d


def _clamped_acos_arg(x: float) -> float:
    if x > 1.0 + ACOS_CLAMP_TOL or x < -1.0 - ACOS_CLAMP_TOL:
        raise DomainError(
            f"arccos argument {x!r} outside [-1, 1]: cubic is not in the "
            f"three-real-root regime"
        )
    return min(1.0, max(-1.0, x))


def trig_root(cubic: MonicCubic, branch: int) -> float:
    """Real root on the given branch, k in {0, 1, 2} (phase offset 2 pi k/3).

    The returned root carries residual at most ~1e-10 * max(1, |d|); a single
    guarded Newton step removes the rounding accumulated in the trig path
    without ever increasing the residual.
    """
    if branch not in (0, 1, 2):
        raise DomainError(f"branch must be 0, 1 or 2, got {branch!r}")
    b, c = cubic.b, cubic.c
    p = b * b - 3.0 * c
    if p <= 0.0:
        raise DomainError(
            f"b^2 - 3c = {p!r} is not positive: cubic has no trig solution"
        )
    arg = _clamped_acos_arg(
        -(2.0 * b**3 - 9.0 * b * c + 27.0 * cubic.d) / (2.0 * p**1.5)
    )
    phase = math.acos(arg) / 3.0 + 2.0 * math.pi * branch / 3.0
    y = -b / 3.0 + (2.0 / 3.0) * math.sqrt(p) * math.cos(phase)

    residual = cubic(y)
    slope = (3.0 * y + 2.0 * b) * y + c
    if slope != 0.0:
        refined = y - residual / slope
        if abs(cubic(refined)) < abs(residual):
            return refined
    return y


def all_roots(cubic: MonicCubic) -> tuple[float, float, float]:
    """The three branch roots, sorted ascending (distinct iff the
    discriminant is positive)."""
    r = sorted(trig_root(cubic, k) for k in (0, 1, 2))
    return r[0], r[1], r[2]
