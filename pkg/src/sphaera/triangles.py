"""Geometric realization of classified spherical triangles.

Side lengths come from the cosine rule for the unique non-integral triangle,
and from the digon decompositions for the integral families.  Records store
reduced side lengths ``min(l, 2*pi - l)`` (the quantity entering systole and
cell-structure formulas); full lengths are stored only for the integral
families, where the digon parity rule pins them down.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from .angles import (
    AngleVector,
    BalanceClass,
    BalanceTag,
    ExistenceClass,
    ExistenceTag,
    classify_balance,
    classify_existence,
)

__all__ = [
    "DomainError",
    "VoronoiType",
    "CircumcenterKind",
    "CircumcenterClass",
    "TriangleRecord",
    "reduced_sides_nonintegral",
    "realize_nonintegral",
    "realize_three_integral",
    "realize_one_integral",
    "circumcenter_class",
    "voronoi_type_of_double",
    "triangle_systole",
]

DEFAULT_COS_TOLERANCE = 1e-9


class DomainError(ValueError):
    """Raised when a geometric formula is applied outside its domain."""


class VoronoiType(Enum):
    TREFOIL = "trefoil"
    EIGHT = "eight"
    EYEGLASSES = "eyeglasses"


class CircumcenterKind(Enum):
    INTERIOR = "interior"
    MIDPOINT_OPPOSITE_DOMINANT = "midpoint_opposite_dominant"
    NONE = "none"


@dataclass(frozen=True)
class CircumcenterClass:
    kind: CircumcenterKind
    dominant: int | None = None


@dataclass(frozen=True)
class TriangleRecord:
    """A classified triangle together with its realized side data.

    ``reduced_sides[i]`` is the reduced length of the side opposite vertex i,
    always in [0, pi].  ``full_sides`` is populated for the integral families
    only.  ``family_params`` holds the free parameters of a family member:
    the interval parameter ``s`` for the one-integral family, or the disk
    boundary arcs ``(l12, l23, l13)`` for the three-integral family.
    """

    angles: AngleVector
    existence: ExistenceClass
    balance: BalanceClass
    reduced_sides: tuple[float, float, float]
    full_sides: tuple[float, float, float] | None = None
    family_params: float | tuple[float, float, float] | None = None
    degenerate: bool = False

    @property
    def area(self) -> float:
        return math.pi * float(self.angles.total - 1)


def _cos_side(v: AngleVector, i: int, tol: float) -> float:
    j, k = [a for a in range(3) if a != i]
    ti, tj, tk = v.as_floats()[i], v.as_floats()[j], v.as_floats()[k]
    denom = math.sin(math.pi * tj) * math.sin(math.pi * tk)
    c = (math.cos(math.pi * ti) + math.cos(math.pi * tj) * math.cos(math.pi * tk)) / denom
    if abs(c) > 1 + tol:
        raise DomainError(
            f"cosine of side {i} is {c}: angle vector {v} admits no triangle"
        )
    return max(-1.0, min(1.0, c))


def reduced_sides_nonintegral(
    v: AngleVector, tol: float = DEFAULT_COS_TOLERANCE
) -> tuple[float, float, float]:
    """Reduced side lengths of the unique triangle with non-integral angles.

    ``cos(l_i) sin(pi*tj) sin(pi*tk) = cos(pi*ti) + cos(pi*tj) cos(pi*tk)``;
    the arccosine lands in [0, pi], which is exactly the reduced length.
    """
    cls = classify_existence(v)
    if cls.tag is not ExistenceTag.UNIQUE_NONINTEGRAL:
        raise DomainError(
            f"cosine rule needs a unique non-integral triangle, got {cls.tag.value} for {v}"
        )
    return tuple(math.acos(_cos_side(v, i, tol)) for i in range(3))


def realize_nonintegral(v: AngleVector, tol: float = DEFAULT_COS_TOLERANCE) -> TriangleRecord:
    sides = reduced_sides_nonintegral(v, tol)
    return TriangleRecord(
        angles=v,
        existence=classify_existence(v),
        balance=classify_balance(v),
        reduced_sides=sides,
    )


def realize_three_integral(
    n: Sequence[int],
    arcs: Sequence[float],
    tol: float = DEFAULT_COS_TOLERANCE,
    degeneracy_tol: float = 1e-12,
) -> TriangleRecord:
    """Triangle with integral angles from its central-disk decomposition.

    The triangle is a hemisphere with boundary arcs ``(l12, l23, l13)``
    summing to ``2*pi``, with a digon of angle ``pi*n_i`` glued over the arc
    opposite vertex i.  The full side opposite vertex i equals the arc when
    ``n_i`` is even and its complement to ``2*pi`` when odd.
    """
    n = tuple(int(x) for x in n)
    if len(n) != 3 or any(x < 0 for x in n):
        raise ValueError(f"digon parameters must be three non-negative integers, got {n}")
    arcs = tuple(float(a) for a in arcs)
    if len(arcs) != 3 or any(a <= 0 for a in arcs):
        raise ValueError(f"arcs must be three positive lengths, got {arcs}")
    if abs(sum(arcs) - 2 * math.pi) > tol:
        raise ValueError(f"arcs must sum to 2*pi, got sum {sum(arcs)!r}")
    angles = AngleVector(n[1] + n[2] + 1, n[2] + n[0] + 1, n[0] + n[1] + 1)
    l12, l23, l13 = arcs
    arc_opposite = (l23, l13, l12)
    full = tuple(
        arc if ni % 2 == 0 else 2 * math.pi - arc
        for ni, arc in zip(n, arc_opposite)
    )
    reduced = tuple(min(l, 2 * math.pi - l) for l in full)
    return TriangleRecord(
        angles=angles,
        existence=classify_existence(angles),
        balance=classify_balance(angles),
        reduced_sides=reduced,
        full_sides=full,
        family_params=arcs,
        degenerate=min(arcs) < degeneracy_tol,
    )


def realize_one_integral(
    v: AngleVector,
    s: float,
    degeneracy_tol: float = 1e-12,
) -> TriangleRecord:
    """Member of the one-integral family with interior parameter ``s``.

    The side opposite the integral vertex i has length exactly pi.  Cutting
    along the two segments through vertex i that prolong each other splits
    the triangle into a middle triangle with sides ``s`` and ``pi - s`` and
    two digon stacks of angles ``pi*n_k`` and ``pi*n_j``; the digon parities
    decide whether a full side is the segment or its complement to ``2*pi``.
    """
    existence = classify_existence(v)
    if existence.tag is not ExistenceTag.FAMILY_ONE_INTEGRAL or "a" not in existence.branches:
        raise DomainError(f"{v} is not a one-integral family of difference type")
    balance = classify_balance(v)
    if not balance.is_balanced:
        raise DomainError(f"{v} is unbalanced; the family carries no balanced member")
    if not 0 < s < math.pi:
        raise ValueError(f"family parameter must lie in (0, pi), got {s}")
    if existence.n is None:
        raise DomainError(f"{v} admits no digon decomposition with n >= 0")
    i = existence.integral_index
    j, k = (i + 1) % 3, (i + 2) % 3
    n = existence.n
    reduced = [0.0, 0.0, 0.0]
    reduced[i] = math.pi
    reduced[j] = math.pi - s
    reduced[k] = s
    full = [0.0, 0.0, 0.0]
    full[i] = math.pi
    full[j] = (math.pi - s) if n[j] % 2 == 0 else (math.pi + s)
    full[k] = s if n[k] % 2 == 0 else (2 * math.pi - s)
    return TriangleRecord(
        angles=v,
        existence=existence,
        balance=balance,
        reduced_sides=tuple(reduced),
        full_sides=tuple(full),
        family_params=s,
        degenerate=min(s, math.pi - s) < degeneracy_tol,
    )


def circumcenter_class(v: AngleVector) -> CircumcenterClass:
    """Location of the point equidistant from the three vertices."""
    if not classify_existence(v).exists:
        raise DomainError(f"{v} admits no triangle")
    balance = classify_balance(v)
    if balance.tag is BalanceTag.STRICT:
        return CircumcenterClass(CircumcenterKind.INTERIOR)
    if balance.tag is BalanceTag.SEMI:
        return CircumcenterClass(
            CircumcenterKind.MIDPOINT_OPPOSITE_DOMINANT, dominant=balance.dominant
        )
    return CircumcenterClass(CircumcenterKind.NONE)


def voronoi_type_of_double(v: AngleVector) -> VoronoiType:
    """Shape of the Voronoi graph of the sphere doubled from the triangle."""
    if not classify_existence(v).exists:
        raise DomainError(f"{v} admits no triangle")
    tag = classify_balance(v).tag
    return {
        BalanceTag.STRICT: VoronoiType.TREFOIL,
        BalanceTag.SEMI: VoronoiType.EIGHT,
        BalanceTag.UNBALANCED: VoronoiType.EYEGLASSES,
    }[tag]


def triangle_systole(t: TriangleRecord) -> float:
    """Half the minimal reduced side; at most pi/3 for balanced triangles."""
    if not t.balance.is_balanced:
        raise DomainError("systole formula requires a balanced triangle")
    return min(t.reduced_sides) / 2
