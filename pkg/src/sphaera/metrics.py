"""Lower bounds on bi-Lipschitz distance between cone surfaces.

Only lower bounds are computed: upper bounds would need explicit
bi-Lipschitz maps, which are out of scope.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .angles import RationalLike, as_rational
from .torus import TorusRecord

__all__ = [
    "BoundReport",
    "angle_dilatation_bound",
    "systole_distance_bound",
    "lipschitz_lower_bound",
    "injectivity_lower_bound",
    "mobius_dilatation",
]


@dataclass(frozen=True)
class BoundReport:
    value: float
    kind: str  # "lower" | "upper"
    source: str

    def __post_init__(self):
        if not (math.isfinite(self.value) and self.value >= 0):
            raise ValueError(f"bound must be finite and non-negative, got {self.value}")


def angle_dilatation_bound(theta_a: RationalLike, theta_b: RationalLike) -> BoundReport:
    """Lower bound on Lipschitz distance from differing cone angles.

    A bi-Lipschitz map between cone neighbourhoods of angles 2*pi*a and
    2*pi*b has dilatation at least ``max(a/b, b/a)**0.5``, hence distance at
    least half the absolute log-ratio.
    """
    a, b = as_rational(theta_a), as_rational(theta_b)
    if a <= 0 or b <= 0:
        raise ValueError("cone parameters must be positive")
    return BoundReport(abs(math.log(float(a / b))) / 2, "lower", "angle-continuity")


def systole_distance_bound(s1: float, s2: float) -> BoundReport:
    """Lower bound ``|log(s1/s2)|`` from the systole ratio."""
    if s1 <= 0 or s2 <= 0:
        raise ValueError("systoles must be positive")
    return BoundReport(abs(math.log(s1 / s2)), "lower", "systole-continuity")


def lipschitz_lower_bound(T1: TorusRecord, T2: TorusRecord) -> BoundReport:
    """Best of the angle and systole lower bounds for two tori."""
    a = angle_dilatation_bound(T1.cone_parameter, T2.cone_parameter)
    s = systole_distance_bound(T1.systole, T2.systole)
    best = max(a, s, key=lambda r: r.value)
    return BoundReport(best.value, "lower", best.source)


def injectivity_lower_bound(sys: float, voronoi_value: float, theta_min: RationalLike) -> float:
    """min(sys, V, theta_min * V): injectivity radius at a point with Voronoi
    function value V on a surface with smallest cone parameter theta_min."""
    if sys <= 0 or voronoi_value <= 0:
        raise ValueError("systole and Voronoi value must be positive")
    t = float(as_rational(theta_min))
    if t <= 0:
        raise ValueError("theta_min must be positive")
    return min(sys, voronoi_value, t * voronoi_value)


def mobius_dilatation(t: float) -> float:
    """Bi-Lipschitz constant cosh(t) of the projective flow at time t.

    Along the invariant circle the pointwise Lipschitz constant is
    1/cosh(t); the global constant is attained transversally.
    """
    if not math.isfinite(t):
        raise ValueError("t must be finite")
    return math.cosh(t)
