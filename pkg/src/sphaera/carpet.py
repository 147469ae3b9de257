"""Exact enumeration of angle carpets and the associated cell complexes.

Fix a total angle parameter ``theta > 1`` that is not an odd integer and
write ``theta = 2m + c`` with ``c`` in (-1, 1).  The carpet is the set of
realizable angle vectors in the plane ``t1 + t2 + t3 = theta``: a union of
``4m**2`` open triangles (plane sections of the open tetrahedra complementary
to the unit L1 balls around even integer points) together with ``3m**2``
isolated nodes with one integral coordinate.  All geometry here is computed
with exact rationals in the (t1, t2) projection, so incidence needs no
tolerances.

The space of balanced triangles of this area is modeled by blowing up the
balanced part of the carpet at its nodes: every node becomes a 1-cell glued
between the two polygons touching it, every semi-balanced boundary piece a
boundary 1-cell, and the ideal edges (where triangles degenerate) become the
3m strip ends.  Doubling two signed copies along the semi-balanced cells
yields a closed oriented punctured surface; capping the punctures gives the
compact model used for the even-angle covering structure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Optional, Sequence

from .angles import RationalLike, as_rational

__all__ = [
    "InvariantError",
    "Point",
    "CarpetTriangle",
    "CarpetNode",
    "Carpet",
    "Polygon",
    "BalancedCarpet",
    "EdgeCell",
    "FaceCell",
    "VertexCell",
    "CellComplex",
    "IntegralNode",
    "enumerate_carpet",
    "enumerate_balanced_carpet",
    "build_blowup_complex",
    "build_doubled_complex",
    "cap_doubled_complex",
    "s3_orbits_on_punctures",
    "enumerate_integral_carpet",
]

Point = tuple[Fraction, Fraction, Fraction]
StripId = tuple[int, int]  # (coordinate index i, level a): the line t_i = a + (c+1)/2


class InvariantError(AssertionError):
    """A structural count disagreed with its closed form: hard failure."""


def _carpet_parameters(theta: RationalLike) -> tuple[Fraction, int, Fraction, Fraction]:
    theta = as_rational(theta)
    if theta <= 1:
        raise ValueError(f"total angle parameter must exceed 1, got {theta}")
    if theta.denominator == 1 and theta % 2 == 1:
        raise ValueError(
            f"theta = {theta} is an odd integer; use enumerate_integral_carpet((theta-1)/2)"
        )
    m = math.floor((theta + 1) / 2)
    c = theta - 2 * m
    t = (c + 1) / 2
    return theta, m, c, t


@dataclass(frozen=True)
class CarpetTriangle:
    """Open carpet triangle cut out of the unit cell at ``cube``.

    ``parity`` is the cube coordinate sum mod 2; it distinguishes the two
    families of cells (and gives the fold sign of the angle projection on
    the blown-up surface).  Vertex i carries the integral i-th coordinate.
    """

    cube: tuple[int, int, int]
    parity: int
    vertices: tuple[Point, Point, Point]


@dataclass(frozen=True)
class CarpetNode:
    """Isolated carpet point with one integral coordinate.

    ``q`` is the integral value at ``integral_index``; ``wings`` are the
    integer parts of the two remaining coordinates in position order.
    """

    point: Point
    integral_index: int
    q: int
    wings: tuple[int, int]


@dataclass
class Carpet:
    theta: Fraction
    m: int
    c: Fraction
    triangles: list[CarpetTriangle]
    nodes: list[CarpetNode]


def _cube_triangles(theta: Fraction, m: int, t: Fraction) -> list[CarpetTriangle]:
    triangles = []
    for s in (2 * m - 2, 2 * m - 1):
        delta = 1 if s % 2 == 0 else 0
        for n1 in range(s + 1):
            for n2 in range(s - n1 + 1):
                cube = (n1, n2, s - n1 - n2)
                verts = []
                for i in range(3):
                    v = tuple(
                        Fraction(cube[a]) + (delta if a == i else 0) + (0 if a == i else t)
                        for a in range(3)
                    )
                    verts.append(v)
                triangles.append(CarpetTriangle(cube, s % 2, tuple(verts)))
    return triangles


def _carpet_nodes(theta: Fraction, m: int, t: Fraction) -> list[CarpetNode]:
    nodes = []
    s = 2 * m - 1  # q + wing_j + wing_k for every triangle vertex
    for i in range(3):
        j, k = [a for a in range(3) if a != i]
        for q in range(1, s + 1):
            for nj in range(s - q + 1):
                nk = s - q - nj
                if abs(nj - nk) > q - 1:
                    continue
                pt = [Fraction(0)] * 3
                pt[i] = Fraction(q)
                pt[j] = nj + t
                pt[k] = nk + t
                nodes.append(CarpetNode(tuple(pt), i, q, (nj, nk)))
    nodes.sort(key=lambda nd: (nd.integral_index, nd.point))
    return nodes


def enumerate_carpet(theta: RationalLike) -> Carpet:
    """All carpet triangles and nodes for a non-odd total angle.

    Counts are checked against the closed forms ``4*m**2`` and ``3*m**2``;
    a mismatch raises :class:`InvariantError`.
    """
    theta, m, c, t = _carpet_parameters(theta)
    triangles = _cube_triangles(theta, m, t)
    nodes = _carpet_nodes(theta, m, t)
    if len(triangles) != 4 * m * m:
        raise InvariantError(
            f"carpet triangle count {len(triangles)} != 4m^2 = {4 * m * m} for theta={theta}"
        )
    if len(nodes) != 3 * m * m:
        raise InvariantError(
            f"carpet node count {len(nodes)} != 3m^2 = {3 * m * m} for theta={theta}"
        )
    return Carpet(theta, m, c, triangles, nodes)


# ---------------------------------------------------------------------------
# Balanced carpet: clipping triangles by the three balance half-planes.

EdgeLabel = tuple  # ("ideal", i, a)  or  ("semibal", i)


@dataclass(frozen=True)
class Polygon:
    """Convex intersection of one carpet triangle with the balanced region.

    ``ring`` lists the boundary vertices counterclockwise in the (t1, t2)
    projection; ``edge_labels[k]`` labels the edge from ``ring[k]`` to the
    next vertex: either an ideal line ("ideal", i, a) or a semi-balanced
    chord ("semibal", i).
    """

    index: int
    triangle: CarpetTriangle
    ring: tuple[Point, ...]
    edge_labels: tuple[EdgeLabel, ...]


def _cross2(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _ring_area2(ring: Sequence[Point]) -> Fraction:
    total = Fraction(0)
    for k in range(len(ring)):
        p, q = ring[k], ring[(k + 1) % len(ring)]
        total += p[0] * q[1] - q[0] * p[1]
    return total


def _clip_halfplane(
    ring: list[tuple[Point, EdgeLabel]], coord: int, bound: Fraction
) -> list[tuple[Point, EdgeLabel]]:
    """Sutherland-Hodgman clip of a labeled convex ring by ``x[coord] <= bound``."""
    out: list[tuple[Point, EdgeLabel]] = []
    n = len(ring)
    for k in range(n):
        p, lab = ring[k]
        q, _ = ring[(k + 1) % n]
        p_in = p[coord] <= bound
        q_in = q[coord] <= bound
        if p_in:
            if q_in:
                out.append((p, lab))
            else:
                out.append((p, lab))
                x = _intersect(p, q, coord, bound)
                out.append((x, ("semibal", coord)))
        elif q_in:
            x = _intersect(p, q, coord, bound)
            out.append((x, lab))
    # drop zero-length edges produced by vertices sitting exactly on the line
    cleaned: list[tuple[Point, EdgeLabel]] = []
    for pt, lab in out:
        if cleaned and cleaned[-1][0] == pt:
            cleaned[-1] = (pt, lab)
            continue
        cleaned.append((pt, lab))
    while len(cleaned) > 1 and cleaned[0][0] == cleaned[-1][0]:
        cleaned[0] = (cleaned[0][0], cleaned[-1][1])
        cleaned.pop()
    return cleaned


def _intersect(p: Point, q: Point, coord: int, bound: Fraction) -> Point:
    s = (bound - p[coord]) / (q[coord] - p[coord])
    return tuple(p[a] + s * (q[a] - p[a]) for a in range(3))


@dataclass
class BalancedCarpet:
    theta: Fraction
    m: int
    c: Fraction
    polygons: list[Polygon]
    internal_nodes: list[CarpetNode]
    boundary_nodes: list[CarpetNode]
    semi_balanced_arcs: list[tuple]
    strips: list[StripId]

    @property
    def E(self) -> int:
        return len(self.polygons)

    @property
    def N(self) -> int:
        return len(self.internal_nodes)


def _expected_EN(theta: Fraction, m: int) -> tuple[int, int]:
    if theta <= 2 * m:
        return m * m, 3 * m * (m - 1) // 2
    return m * m + 3 * m, 3 * m * (m + 1) // 2


def enumerate_balanced_carpet(theta: RationalLike) -> BalancedCarpet:
    """Clip the carpet to the balanced region and collect its cell data.

    Polygon and internal-node counts are checked against their closed forms,
    the strip set against {1,2,3} x {0..m-1}, and the polygon adjacency
    graph through internal nodes against connectivity.
    """
    carpet = enumerate_carpet(theta)
    theta, m, c = carpet.theta, carpet.m, carpet.c
    half = theta / 2
    node_by_point = {nd.point: nd for nd in carpet.nodes}

    polygons: list[Polygon] = []
    for tri in carpet.triangles:
        v = tri.vertices
        assert _cross2(v[0], v[1], v[2]) > 0
        ring = [
            (v[0], ("ideal", 2, tri.cube[2])),
            (v[1], ("ideal", 0, tri.cube[0])),
            (v[2], ("ideal", 1, tri.cube[1])),
        ]
        for coord in range(3):
            ring = _clip_halfplane(ring, coord, half)
            if len(ring) < 3:
                ring = []
                break
        if not ring or _ring_area2([p for p, _ in ring]) <= 0:
            continue
        polygons.append(
            Polygon(
                index=len(polygons),
                triangle=tri,
                ring=tuple(p for p, _ in ring),
                edge_labels=tuple(lab for _, lab in ring),
            )
        )

    internal: dict[Point, CarpetNode] = {}
    boundary: dict[Point, CarpetNode] = {}
    incident: dict[Point, list[int]] = {}
    arcs: list[tuple] = []
    strips: set[StripId] = set()
    for poly in polygons:
        tri_vertices = set(poly.triangle.vertices)
        for pt, lab in zip(poly.ring, poly.edge_labels):
            if any(x <= 0 for x in pt):
                raise InvariantError(f"non-positive carpet point {pt} survived clipping")
            if pt in tri_vertices:
                on_boundary = [i for i in range(3) if pt[i] == half]
                node = node_by_point.get(pt)
                if node is None:
                    raise InvariantError(
                        f"balanced carpet vertex {pt} is not an admissible node"
                    )
                if len(on_boundary) == 0:
                    internal[pt] = node
                    incident.setdefault(pt, []).append(poly.index)
                elif len(on_boundary) == 1:
                    if c != 0:
                        raise InvariantError(
                            f"boundary node {pt} can only occur at even integral theta"
                        )
                    boundary[pt] = node
                    arcs.append(("node", pt, poly.index))
                else:
                    raise InvariantError(f"degenerate balance corner at {pt}")
            if lab[0] == "ideal":
                i, a = lab[1], lab[2]
                if not 0 <= a < m:
                    raise InvariantError(f"strip level {lab} out of range for m={m}")
                strips.add((i, a))
            else:
                arcs.append(("chord", poly.index, lab[1]))

    E_exp, N_exp = _expected_EN(theta, m)
    if len(polygons) != E_exp:
        raise InvariantError(f"E = {len(polygons)} != {E_exp} for theta={theta}")
    if len(internal) != N_exp:
        raise InvariantError(f"N = {len(internal)} != {N_exp} for theta={theta}")
    if strips != {(i, a) for i in range(3) for a in range(m)}:
        raise InvariantError(f"strip set {sorted(strips)} incomplete for theta={theta}")
    if len(arcs) != 3 * m:
        raise InvariantError(f"found {len(arcs)} semi-balanced arcs, expected {3 * m}")
    for pt, polys in incident.items():
        if len(polys) != 2:
            raise InvariantError(f"internal node {pt} touches {len(polys)} polygons")
    _assert_connected(len(polygons), incident.values())

    return BalancedCarpet(
        theta=theta,
        m=m,
        c=c,
        polygons=polygons,
        internal_nodes=sorted(internal.values(), key=lambda nd: nd.point),
        boundary_nodes=sorted(boundary.values(), key=lambda nd: nd.point),
        semi_balanced_arcs=arcs,
        strips=sorted(strips),
    )


def _assert_connected(n_vertices: int, edges: Iterable[Sequence[int]]) -> None:
    if n_vertices == 0:
        raise InvariantError("balanced carpet has no polygons")
    adj: dict[int, set[int]] = {i: set() for i in range(n_vertices)}
    for pair in edges:
        a, b = pair
        adj[a].add(b)
        adj[b].add(a)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n_vertices:
        raise InvariantError("balanced carpet polygon graph is disconnected")


# ---------------------------------------------------------------------------
# Cell complexes.

WalkItem = tuple  # ("e", edge_index) or ("v", StripId)


@dataclass(frozen=True)
class EdgeCell:
    index: int
    kind: str  # "node" | "semibalanced"
    key: tuple
    faces: tuple[int, ...]
    ends: tuple[StripId, StripId]


@dataclass(frozen=True)
class FaceCell:
    index: int
    polygon: int
    sign: int  # +1 / -1 copy label (+1 throughout a bordered complex)
    ccw: bool  # True when the boundary walk follows the planar ccw ring
    walk: tuple[WalkItem, ...]


@dataclass(frozen=True)
class VertexCell:
    index: int
    strip: StripId
    link_faces: tuple[int, ...]  # counterclockwise cyclic order
    link_edges: tuple[int, ...]

    @property
    def ramification(self) -> int:
        return len(self.link_faces) // 2


@dataclass
class CellComplex:
    """Vertices, edges and faces with walk incidence.

    ``kind`` is "bordered" (one copy, semi-balanced cells on the boundary),
    "doubled" (two signed copies glued, punctures left open, no 0-cells) or
    "capped" (punctures filled by vertex cells, rotation system available).
    """

    theta: Fraction
    m: int
    kind: str
    faces: list[FaceCell]
    edges: list[EdgeCell]
    vertices: list[VertexCell]
    punctures: list[StripId]
    boundary_edges: list[int]  # bordered complexes only
    carpet: BalancedCarpet

    @property
    def chi(self) -> int:
        internal = [e for e in self.edges if e.index not in set(self.boundary_edges)]
        return len(self.vertices) - len(internal) + len(self.faces)

    @property
    def genus(self) -> int:
        if self.kind == "bordered":
            raise ValueError("genus is defined for the doubled/capped complexes")
        chi_closed = self.chi + (len(self.punctures) if self.kind == "doubled" else 0)
        g2 = 2 - chi_closed
        assert g2 % 2 == 0
        return g2 // 2


def _face_items(poly: Polygon, theta: Fraction, sign: int) -> list[tuple]:
    """Alternating boundary items of one signed polygon copy.

    Items are ("cell", key) for 1-cells (blown-up nodes, semi-balanced
    chords, boundary nodes) and ("cap", strip) for the ideal 0-cells; chord
    corners contribute nothing.  The walk is emitted counterclockwise and
    reversed by the caller according to the face orientation.
    """
    half = theta / 2
    tri_vertices = set(poly.triangle.vertices)
    items: list[tuple] = []
    for pt, lab in zip(poly.ring, poly.edge_labels):
        if pt in tri_vertices:
            if all(x < half for x in pt):
                items.append(("cell", ("node", pt, sign)))
            else:
                items.append(("cell", ("bnode", pt)))
        if lab[0] == "ideal":
            items.append(("cap", (lab[1], lab[2])))
        else:
            items.append(("cell", ("chord", poly.index, lab[1])))
    kinds = [it[0] for it in items]
    if len(items) % 2 != 0 or any(k == kinds[(i + 1) % len(kinds)] for i, k in enumerate(kinds)):
        raise InvariantError(f"polygon {poly.index} walk does not alternate: {kinds}")
    return items


def _build_complex(theta: RationalLike, doubled: bool) -> CellComplex:
    bal = enumerate_balanced_carpet(theta)
    theta, m = bal.theta, bal.m
    signs = (1, -1) if doubled else (1,)

    edge_index: dict[tuple, int] = {}
    edge_faces: dict[int, list[int]] = {}
    edge_darts: dict[int, list[tuple[StripId, StripId]]] = {}
    edge_ends: dict[int, tuple[StripId, StripId]] = {}
    faces: list[FaceCell] = []

    for sign in signs:
        for poly in bal.polygons:
            items = _face_items(poly, theta, sign if doubled else 1)
            ccw = (sign if doubled else 1) * (1 if poly.triangle.parity == 0 else -1) > 0
            if not ccw:
                items = items[::-1]
            face_idx = len(faces)
            walk: list[WalkItem] = []
            n = len(items)
            for pos, item in enumerate(items):
                if item[0] == "cap":
                    walk.append(("v", item[1]))
                    continue
                key = item[1]
                if key not in edge_index:
                    edge_index[key] = len(edge_index)
                e = edge_index[key]
                prev_cap = items[(pos - 1) % n]
                next_cap = items[(pos + 1) % n]
                assert prev_cap[0] == "cap" and next_cap[0] == "cap"
                dart = (prev_cap[1], next_cap[1])
                edge_faces.setdefault(e, []).append(face_idx)
                edge_darts.setdefault(e, []).append(dart)
                edge_ends.setdefault(e, tuple(sorted(dart)))
                walk.append(("e", e))
            faces.append(
                FaceCell(index=face_idx, polygon=poly.index,
                         sign=sign if doubled else 1, ccw=ccw, walk=tuple(walk))
            )

    edges: list[EdgeCell] = []
    boundary: list[int] = []
    for key, e in edge_index.items():
        kind = "node" if key[0] == "node" else "semibalanced"
        fs = tuple(edge_faces[e])
        darts = edge_darts[e]
        if doubled:
            if len(fs) != 2:
                raise InvariantError(f"1-cell {key} bounds {len(fs)} faces, expected 2")
            if darts[0] != (darts[1][1], darts[1][0]):
                raise InvariantError(f"1-cell {key} darts are not opposed: {darts}")
            if darts[0][0] == darts[0][1]:
                raise InvariantError(f"1-cell {key} joins a strip to itself")
        else:
            expected = 2 if kind == "node" else 1
            if len(fs) != expected:
                raise InvariantError(
                    f"bordered 1-cell {key} bounds {len(fs)} faces, expected {expected}"
                )
            if kind == "semibalanced":
                boundary.append(e)
        edges.append(EdgeCell(index=e, kind=kind, key=key, faces=fs, ends=edge_ends[e]))

    cc = CellComplex(
        theta=theta,
        m=m,
        kind="doubled" if doubled else "bordered",
        faces=faces,
        edges=edges,
        vertices=[],
        punctures=sorted(bal.strips),
        boundary_edges=boundary,
        carpet=bal,
    )
    if doubled:
        expected_edges = 2 * bal.N + 3 * m
        if len(edges) != expected_edges:
            raise InvariantError(f"doubled complex has {len(edges)} 1-cells, expected {expected_edges}")
        if cc.chi != -m * m:
            raise InvariantError(f"doubled chi = {cc.chi}, expected {-m * m}")
        cap_doubled_complex(cc)  # validates links, genus, puncture count
    else:
        if cc.chi != -m * (m - 3) // 2:
            raise InvariantError(f"bordered chi = {cc.chi}, expected {-m * (m - 3) // 2}")
        if len(boundary) != 3 * m:
            raise InvariantError(f"{len(boundary)} boundary intervals, expected {3 * m}")
    return cc


def build_blowup_complex(theta: RationalLike) -> CellComplex:
    """Bordered complex of the blown-up balanced carpet.

    Faces are the balanced polygons, internal 1-cells the blown-up internal
    nodes (two incident faces each), boundary 1-cells the 3m semi-balanced
    intervals.  chi counts interior cells only: F - N = -m(m-3)/2.
    """
    return _build_complex(theta, doubled=False)


def build_doubled_complex(theta: RationalLike) -> CellComplex:
    """Closed punctured complex of two signed copies glued along the boundary.

    Each polygon contributes a (+) and a (-) face; the (-) copy and the
    odd-parity cells reverse the planar walk, implementing the orientation
    fold of the angle projection.  No 0-cells: chi = F - E = -m**2, genus
    (m-1)(m-2)/2, punctures 3m.
    """
    return _build_complex(theta, doubled=True)


def cap_doubled_complex(cc: CellComplex) -> CellComplex:
    """Fill the punctures of a doubled complex with vertex cells.

    Walks the corner rotation around every ideal point: the corners around a
    cap must close into a single cycle whose faces alternate orientation.
    Returns a new "capped" complex carrying the rotation system.
    """
    if cc.kind != "doubled":
        raise ValueError("only doubled complexes can be capped")
    corners: dict[tuple[int, int], tuple] = {}
    by_out: dict[tuple[int, int], tuple[int, int]] = {}
    for face in cc.faces:
        n = len(face.walk)
        for pos, item in enumerate(face.walk):
            if item[0] != "v":
                continue
            e_in = face.walk[(pos - 1) % n][1]
            e_out = face.walk[(pos + 1) % n][1]
            corners[(face.index, pos)] = (item[1], e_in, e_out)
            by_out[(face.index, e_out)] = (face.index, pos)

    edge_other_face = {}
    for e in cc.edges:
        f1, f2 = e.faces
        edge_other_face[(e.index, f1)] = f2
        edge_other_face[(e.index, f2)] = f1

    unvisited = set(corners)
    vertices: list[VertexCell] = []
    seen_caps: dict[StripId, int] = {}
    while unvisited:
        start = min(unvisited)
        cycle_faces: list[int] = []
        cycle_edges: list[int] = []
        cap = corners[start][0]
        cur = start
        while True:
            unvisited.discard(cur)
            strip, e_in, e_out = corners[cur]
            if strip != cap:
                raise InvariantError(f"corner rotation mixes caps {cap} and {strip}")
            cycle_faces.append(cur[0])
            cycle_edges.append(e_in)
            nxt_face = edge_other_face[(e_in, cur[0])]
            cur = by_out[(nxt_face, e_in)]
            if cur == start:
                break
        if cap in seen_caps:
            raise InvariantError(f"cap {cap} split into several surface points")
        orientations = [cc.faces[f].ccw for f in cycle_faces]
        if any(orientations[i] == orientations[(i + 1) % len(orientations)]
               for i in range(len(orientations))):
            raise InvariantError(f"face orientations fail to alternate around {cap}")
        seen_caps[cap] = len(vertices)
        vertices.append(
            VertexCell(index=len(vertices), strip=cap,
                       link_faces=tuple(cycle_faces), link_edges=tuple(cycle_edges))
        )
    if sorted(seen_caps) != sorted(cc.punctures):
        raise InvariantError("capped vertex set differs from the puncture set")

    capped = CellComplex(
        theta=cc.theta,
        m=cc.m,
        kind="capped",
        faces=cc.faces,
        edges=cc.edges,
        vertices=sorted(vertices, key=lambda v: v.strip),
        punctures=cc.punctures,
        boundary_edges=[],
        carpet=cc.carpet,
    )
    m = cc.m
    if capped.chi != 2 - 2 * capped.genus or capped.genus != (m - 1) * (m - 2) // 2:
        raise InvariantError(
            f"capped complex chi={capped.chi}, genus={capped.genus} inconsistent for m={m}"
        )
    return capped


def s3_orbits_on_punctures(cc: CellComplex) -> list[tuple[StripId, StripId, StripId]]:
    """Orbits of the coordinate-relabelling action: one per strip level."""
    orbits = []
    for a in range(cc.m):
        orbit = tuple((i, a) for i in range(3))
        if any(s not in cc.punctures for s in orbit):
            raise InvariantError(f"strip level {a} is incomplete")
        orbits.append(orbit)
    return orbits


# ---------------------------------------------------------------------------
# Odd integral total angle: the carpet degenerates to isolated integer nodes.


@dataclass(frozen=True)
class IntegralNode:
    """Balanced integer angle vector of sum 2m+1 with its parameter domain.

    Each node carries a two-parameter family of triangles: the boundary arcs
    of the central disk, an open 2-simplex {l12 + l23 + l13 = 2*pi, l > 0}.
    """

    angles: tuple[int, int, int]
    digons: tuple[int, int, int]

    @property
    def parameter_domain(self) -> str:
        return "open 2-simplex: arc triples (l12, l23, l13) with sum 2*pi"


def enumerate_integral_carpet(m: int) -> list[IntegralNode]:
    """Balanced carpet for total angle 2m+1: the m(m+1)/2 integer triples
    with sum 2m+1 and every coordinate at most m."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    total = 2 * m + 1
    nodes = []
    for a1 in range(1, m + 1):
        for a2 in range(1, m + 1):
            a3 = total - a1 - a2
            if 1 <= a3 <= m:
                digons = tuple(
                    (sum((a1, a2, a3)) - 2 * ai - 1) // 2 for ai in (a1, a2, a3)
                )
                nodes.append(IntegralNode((a1, a2, a3), digons))
    if len(nodes) != m * (m + 1) // 2:
        raise InvariantError(
            f"integral carpet has {len(nodes)} nodes, expected {m * (m + 1) // 2}"
        )
    return sorted(nodes, key=lambda nd: nd.angles)
