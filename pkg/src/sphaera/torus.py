"""Triangle/torus correspondence and torus-level invariants.

A one-cone spherical torus is represented by its generating balanced
triangle plus an orientation sign: gluing two congruent copies of the
triangle side-to-side produces the torus, and for non-odd total angle this
gluing inverts the canonical decomposition of the torus into two congruent
balanced triangles, so no independent surface data is needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .angles import (
    AngleVector,
    BalanceTag,
    ExistenceTag,
    RationalLike,
    as_rational,
    classify_existence,
    d1_to_multiples,
)
from .triangles import DomainError, TriangleRecord, VoronoiType, triangle_systole

__all__ = [
    "TorusRecord",
    "TorusVoronoi",
    "AutomorphismReport",
    "VoronoiEdgeParity",
    "build_torus",
    "torus_voronoi",
    "automorphism_group",
    "voronoi_edge_parity_check",
    "projective_deformation_bounds",
]


@dataclass(frozen=True)
class TorusRecord:
    """Spherical torus glued from two signed copies of a balanced triangle.

    The marking convention is fixed: the 2-torsion point ``p_i`` is the
    midpoint of the geodesic loop coming from the triangle side opposite
    vertex i.
    """

    triangle: TriangleRecord
    orientation: int  # +1 or -1

    @property
    def cone_parameter(self) -> Fraction:
        return self.triangle.angles.total

    @property
    def cone_angle(self) -> float:
        return 2 * math.pi * float(self.cone_parameter)

    @property
    def area(self) -> float:
        return 2 * math.pi * float(self.cone_parameter - 1)

    @property
    def systole(self) -> float:
        # Same stored number as the triangle systole: the shortest geodesic
        # between cone points survives the gluing unchanged.
        return triangle_systole(self.triangle)


@dataclass(frozen=True)
class TorusVoronoi:
    tag: VoronoiType
    vertices: int
    edges: int
    has_rectangular_involution: bool


@dataclass(frozen=True)
class AutomorphismReport:
    z6_exists: bool
    z6_witness: AngleVector
    z4_exists: bool
    z4_witness: AngleVector
    generic_order: int = 2


@dataclass(frozen=True)
class VoronoiEdgeParity:
    """Each Voronoi edge of an integral-angle torus is an odd multiple of pi."""

    all_odd_multiples: bool
    multipliers: tuple[int, int, int] | None  # odd multiplier of the edge dual to side i


def build_torus(t: TriangleRecord, sign: int = 1) -> TorusRecord:
    if sign not in (1, -1):
        raise ValueError("orientation sign must be +1 or -1")
    if not t.balance.is_balanced:
        raise DomainError("only balanced triangles glue to a one-cone torus")
    return TorusRecord(triangle=t, orientation=sign)


def torus_voronoi(T: TorusRecord) -> TorusVoronoi:
    if T.triangle.balance.tag is BalanceTag.STRICT:
        return TorusVoronoi(VoronoiType.TREFOIL, vertices=2, edges=3,
                            has_rectangular_involution=False)
    return TorusVoronoi(VoronoiType.EIGHT, vertices=1, edges=2,
                        has_rectangular_involution=True)


def automorphism_group(theta: RationalLike) -> AutomorphismReport:
    """Which automorphism groups occur among tori with cone angle 2*pi*theta.

    The generic group has order 2.  An order-6 torus exists iff theta keeps
    L1 distance > 1 from the multiples of 6 (witnessed by the equilateral
    triangle), an order-4 torus iff the same holds for multiples of 4
    (witnessed by the isosceles semi-balanced triangle); each is unique.
    """
    theta = as_rational(theta)
    if theta <= 1:
        raise ValueError("cone parameter must exceed 1")
    if theta.denominator == 1 and theta % 2 == 1:
        raise ValueError("odd integral cone parameter has a different moduli structure")
    return AutomorphismReport(
        z6_exists=d1_to_multiples(theta, 6) > 1,
        z6_witness=AngleVector(theta / 3, theta / 3, theta / 3),
        z4_exists=d1_to_multiples(theta, 4) > 1,
        z4_witness=AngleVector(theta / 2, theta / 4, theta / 4),
    )


def voronoi_edge_parity_check(T: TorusRecord) -> VoronoiEdgeParity:
    """Odd-multiple-of-pi structure of the Voronoi edges of an integral torus.

    The edge dual to the side opposite vertex i crosses the two glued digon
    stacks of angle ``pi*n_i`` plus a half-circle on each side of the central
    hemispheres, giving length ``(2*n_i + 1) * pi``.
    """
    existence = T.triangle.existence
    if existence.tag is not ExistenceTag.FAMILY_THREE_INTEGRAL:
        raise DomainError("Voronoi edge parity applies to three-integral tori only")
    if existence.n is None:
        return VoronoiEdgeParity(all_odd_multiples=True, multipliers=None)
    mult = tuple(2 * ni + 1 for ni in existence.n)
    # Total graph length (2m+1)*pi for a torus of area 4*m*pi.
    assert sum(mult) == int(T.cone_parameter)
    return VoronoiEdgeParity(all_odd_multiples=True, multipliers=mult)


def projective_deformation_bounds(T: TorusRecord, t: float) -> dict[str, float]:
    """Bounds along the projective one-parameter deformation of an odd torus.

    Moving time ``t`` along the deformation is cosh(t)-bi-Lipschitz, so the
    Lipschitz distance moved is at most ``log cosh t`` and the systole stays
    at least ``sys / cosh t``.
    """
    theta = T.cone_parameter
    if not (theta.denominator == 1 and theta % 2 == 1):
        raise DomainError("projective deformations act on odd integral cone parameters")
    ch = math.cosh(t)
    return {
        "lipschitz_distance_upper": math.log(ch),
        "systole_lower": T.systole / ch,
    }
