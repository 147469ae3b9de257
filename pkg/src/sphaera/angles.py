"""Exact rational arithmetic on angle vectors of spherical triangles.

An angle vector ``(t1, t2, t3)`` encodes a triangle whose angle at vertex i
is ``pi * ti``.  Existence and balance of such triangles are decided by
integrality, parity and an L1 lattice-distance predicate, none of which are
decidable in floating point, so everything in this module works with
:class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Iterable, Union

Rational = Fraction
RationalLike = Union[int, str, float, Fraction]

__all__ = [
    "Rational",
    "AngleVector",
    "ExistenceTag",
    "ExistenceClass",
    "BalanceTag",
    "BalanceClass",
    "as_rational",
    "snap_to_rational",
    "d1_to_even_lattice",
    "d1_to_multiples",
    "classify_existence",
    "classify_balance",
]


def as_rational(x: RationalLike) -> Fraction:
    """Convert ``x`` to an exact Fraction.  Floats are rejected: use
    :func:`snap_to_rational` so the snap is explicit."""
    if isinstance(x, float):
        raise TypeError(
            "refusing to convert a float silently; use snap_to_rational()"
        )
    return Fraction(x)


def snap_to_rational(x: float, max_denominator: int = 10**6) -> tuple[Fraction, bool]:
    """Snap a float to the closest rational with bounded denominator.

    Returns ``(value, snapped)`` where ``snapped`` is True when the float was
    not already an exact dyadic rational within the bound.
    """
    if max_denominator < 1:
        raise ValueError("max_denominator must be >= 1")
    exact = Fraction(x)
    snapped = exact.limit_denominator(max_denominator)
    return snapped, snapped != exact


@dataclass(frozen=True)
class AngleVector:
    """Triple of positive rational angle parameters (angle i is ``pi*theta[i]``)."""

    theta: tuple[Fraction, Fraction, Fraction]

    def __init__(self, t1: RationalLike, t2: RationalLike, t3: RationalLike):
        ts = (as_rational(t1), as_rational(t2), as_rational(t3))
        if any(t <= 0 for t in ts):
            raise ValueError(f"angle parameters must be positive, got {ts}")
        object.__setattr__(self, "theta", ts)

    def __getitem__(self, i: int) -> Fraction:
        return self.theta[i]

    def __iter__(self):
        return iter(self.theta)

    @property
    def total(self) -> Fraction:
        return sum(self.theta, Fraction(0))

    def integral_indices(self) -> tuple[int, ...]:
        return tuple(i for i, t in enumerate(self.theta) if t.denominator == 1)

    def permuted(self, perm: Iterable[int]) -> "AngleVector":
        p = tuple(perm)
        return AngleVector(*(self.theta[p[i]] for i in range(3)))

    def as_floats(self) -> tuple[float, float, float]:
        return tuple(float(t) for t in self.theta)

    def __repr__(self) -> str:
        return "AngleVector({}, {}, {})".format(*self.theta)


class ExistenceTag(Enum):
    NONE_EXISTS = "none"
    UNIQUE_NONINTEGRAL = "unique_nonintegral"
    FAMILY_ONE_INTEGRAL = "family_one_integral"
    FAMILY_THREE_INTEGRAL = "family_three_integral"


@dataclass(frozen=True)
class ExistenceClass:
    """Outcome of the triangle-existence classification.

    For the one-integral family, ``integral_index`` is the 0-based position
    of the integral coordinate and ``branches`` records which of the two
    difference/sum conditions held ("a": |tj - tk| integral, "b": tj + tk
    integral).  ``n`` and ``frac`` store the digon decomposition
    ``t_i = n_j + n_k + 1``, ``t_j = n_i + n_k + frac``, ``t_k = n_i + n_j +
    frac`` when it has a non-negative solution (it always does on branch "a"
    unless the vector is badly unbalanced).  For the three-integral family
    ``n`` solves ``t_i = n_j + n_k + 1``.
    """

    tag: ExistenceTag
    integral_index: int | None = None
    branches: frozenset[str] = frozenset()
    n: tuple[int, int, int] | None = None
    frac: Fraction | None = None

    @property
    def exists(self) -> bool:
        return self.tag is not ExistenceTag.NONE_EXISTS


class BalanceTag(Enum):
    STRICT = "strict"
    SEMI = "semi"
    UNBALANCED = "unbalanced"


@dataclass(frozen=True)
class BalanceClass:
    tag: BalanceTag
    dominant: int | None = None  # index i with theta_i >= theta_j + theta_k

    @property
    def is_balanced(self) -> bool:
        return self.tag is not BalanceTag.UNBALANCED


def d1_to_even_lattice(v: AngleVector) -> Fraction:
    """L1 distance from ``v`` to the integer points with even coordinate sum.

    The minimum is attained inside the box of nearest integers (the distance
    is convex and piecewise linear), so scanning offsets -1..+2 around the
    floor of each coordinate is exhaustive.
    """
    floors = [math.floor(t) for t in v.theta]
    best: Fraction | None = None
    ranges = [range(f - 1, f + 3) for f in floors]
    for n in product(*ranges):
        if (n[0] + n[1] + n[2]) % 2 != 0:
            continue
        d = sum((abs(t - k) for t, k in zip(v.theta, n)), Fraction(0))
        if best is None or d < best:
            best = d
    assert best is not None
    return best


def d1_to_multiples(x: RationalLike, k: int) -> Fraction:
    """Distance from ``x`` to the nearest multiple of ``k``."""
    if k <= 0:
        raise ValueError("k must be a positive integer")
    x = as_rational(x)
    j = math.floor(x / k)
    return min(abs(x - j * k), abs(x - (j + 1) * k))


def classify_balance(v: AngleVector) -> BalanceClass:
    total = v.total
    for i in range(3):
        excess = 2 * v[i] - total  # theta_i - (theta_j + theta_k)
        if excess > 0:
            return BalanceClass(BalanceTag.UNBALANCED, dominant=i)
        if excess == 0:
            return BalanceClass(BalanceTag.SEMI, dominant=i)
    return BalanceClass(BalanceTag.STRICT)


def _one_integral_class(v: AngleVector, i: int) -> ExistenceClass:
    j, k = [a for a in range(3) if a != i]
    ti, tj, tk = v[i], v[j], v[k]
    branches = set()
    diff = abs(tj - tk)
    if diff.denominator == 1 and (diff - ti) % 2 != 0 and diff <= ti - 1:
        branches.add("a")
    tot = tj + tk
    if tot.denominator == 1 and (tot - ti) % 2 != 0 and tot <= ti - 1:
        branches.add("b")
    if not branches:
        return ExistenceClass(ExistenceTag.NONE_EXISTS)

    n = frac = None
    if "a" in branches:
        frac_candidate = tj - math.floor(tj)
        # Digon decomposition t_i = n_j + n_k + 1 etc.; n_i can be negative
        # for unbalanced vectors, in which case no decomposition is stored.
        ni2 = tj + tk - 2 * frac_candidate - ti + 1
        nj2 = ti - 1 + tk - tj
        nk2 = ti - 1 + tj - tk
        if ni2 >= 0 and ni2 % 2 == 0 and nj2 % 2 == 0 and nk2 % 2 == 0:
            ns = [0, 0, 0]
            ns[i], ns[j], ns[k] = int(ni2 // 2), int(nj2 // 2), int(nk2 // 2)
            n = tuple(ns)
            frac = frac_candidate
    return ExistenceClass(
        ExistenceTag.FAMILY_ONE_INTEGRAL,
        integral_index=i,
        branches=frozenset(branches),
        n=n,
        frac=frac,
    )


def _three_integral_class(v: AngleVector) -> ExistenceClass:
    m = [int(t) for t in v.theta]
    ns = []
    for i in range(3):
        j, k = [a for a in range(3) if a != i]
        twice = m[j] + m[k] - m[i] - 1
        if twice < 0 or twice % 2 != 0:
            return ExistenceClass(ExistenceTag.NONE_EXISTS)
        ns.append(twice // 2)
    return ExistenceClass(ExistenceTag.FAMILY_THREE_INTEGRAL, n=tuple(ns))


def classify_existence(v: AngleVector) -> ExistenceClass:
    """Decide whether a spherical triangle with angle vector ``v`` exists.

    No integral coordinate: a unique triangle exists iff the L1 distance to
    the even integer lattice exceeds 1.  Exactly one integral coordinate:
    a one-parameter family exists iff the difference or the sum of the other
    two coordinates is an integer of opposite parity bounded by the integral
    coordinate minus one.  Two integral coordinates: nothing exists.  Three:
    a two-parameter family exists iff the digon system t_i = n_j + n_k + 1
    has a non-negative integer solution.
    """
    idx = v.integral_indices()
    if len(idx) == 0:
        if d1_to_even_lattice(v) > 1:
            return ExistenceClass(ExistenceTag.UNIQUE_NONINTEGRAL)
        return ExistenceClass(ExistenceTag.NONE_EXISTS)
    if len(idx) == 1:
        return _one_integral_class(v, idx[0])
    if len(idx) == 2:
        return ExistenceClass(ExistenceTag.NONE_EXISTS)
    return _three_integral_class(v)
