"""Exact primitives for low-dimensional polytope geometry.

Coordinates are ``fractions.Fraction`` throughout, so every predicate and
volume computed here is exact. Points and vectors are plain tuples and the
two container types are frozen dataclasses; nothing is mutated after
construction, which keeps all functions in this module pure.

The convex-hull volume routine enumerates candidate facet planes by brute
force over point triples. At the scale this package works with (a few
dozen points) that is fast enough, and it avoids the degeneracy handling
an incremental hull algorithm would need to get exact answers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import DegenerateHull, DegenerateTetrahedron, EmptyPolytope

__all__ = [
    "Vec3",
    "Vec4",
    "Point3",
    "Point4",
    "Tetrahedron",
    "FacetNormalSet",
    "point3",
    "point4",
    "add3",
    "sub3",
    "scale3",
    "dot3",
    "cross3",
    "sub4",
    "dot4",
    "cross4",
    "det3",
    "det4",
    "orient",
    "facet_normal_set",
    "support",
    "tetra_volume",
    "hull_volume_3d",
    "primitive_form",
]

Vec3 = tuple[Fraction, Fraction, Fraction]
Vec4 = tuple[Fraction, Fraction, Fraction, Fraction]
Point3 = Vec3
Point4 = Vec4


def point3(x: object, y: object, z: object) -> Point3:
    """Build an exact 3D point, coercing each coordinate to Fraction."""
    return (Fraction(x), Fraction(y), Fraction(z))


def point4(w: object, x: object, y: object, z: object) -> Point4:
    """Build an exact 4D point, coercing each coordinate to Fraction."""
    return (Fraction(w), Fraction(x), Fraction(y), Fraction(z))


def add3(u: Vec3, v: Vec3) -> Vec3:
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


def sub3(u: Vec3, v: Vec3) -> Vec3:
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2])


def scale3(u: Vec3, s: Fraction) -> Vec3:
    return (u[0] * s, u[1] * s, u[2] * s)


def dot3(u: Vec3, v: Vec3) -> Fraction:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross3(u: Vec3, v: Vec3) -> Vec3:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def sub4(u: Vec4, v: Vec4) -> Vec4:
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2], u[3] - v[3])


def dot4(u: Vec4, v: Vec4) -> Fraction:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3]


def cross4(u: Vec4, v: Vec4, w: Vec4) -> Vec4:
    """Vector orthogonal to u, v and w; zero iff they are linearly dependent."""
    rows = (u, v, w)
    comps = []
    for i in range(4):
        minor = [[r[j] for j in range(4) if j != i] for r in rows]
        d = det3(minor)
        comps.append(d if i % 2 == 0 else -d)
    return (comps[0], comps[1], comps[2], comps[3])


def det3(m: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant of a 3x3 matrix given as three rows."""
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def det4(m: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant of a 4x4 matrix given as four rows (first-row expansion)."""
    total = Fraction(0)
    for j in range(4):
        if m[0][j] == 0:
            continue
        minor = [[row[k] for k in range(4) if k != j] for row in m[1:]]
        term = m[0][j] * det3(minor)
        total += term if j % 2 == 0 else -term
    return total


def _aug_det(vertices: Sequence[Point3]) -> Fraction:
    """Determinant of the vertex columns under a leading row of ones.

    Equals det[v1 - v0, v2 - v0, v3 - v0]; six times the signed volume.
    """
    ones = (Fraction(1), Fraction(1), Fraction(1), Fraction(1))
    rows = [ones] + [tuple(v[i] for v in vertices) for i in range(3)]
    return det4(rows)


@dataclass(frozen=True)
class Tetrahedron:
    """Four ordered vertices with strictly positive orientation.

    Positive orientation means the ones-augmented determinant of the
    vertex columns is positive. Use :func:`orient` to construct one from
    an arbitrarily ordered vertex tuple.
    """

    vertices: tuple[Point3, Point3, Point3, Point3]

    def __post_init__(self) -> None:
        d = _aug_det(self.vertices)
        if d == 0:
            raise DegenerateTetrahedron(f"affinely dependent vertices: {self.vertices}")
        if d < 0:
            raise ValueError("negatively oriented vertex order; build via orient()")


@dataclass(frozen=True)
class FacetNormalSet:
    """Outward facet normals of a polytope, each scaled to its facet's area.

    The squared length of each vector equals the squared area of its
    facet, and the vectors of any closed polytope sum to zero. For a
    tetrahedron the order is: facet opposite vertex 3, then opposite
    vertex 2, 1 and 0.
    """

    normals: tuple[Vec3, ...]


def orient(vertices: Sequence[Point3]) -> Tetrahedron:
    """Build a positively oriented tetrahedron from four points.

    A negatively oriented input is repaired by swapping the first two
    vertices; coplanar input raises :class:`DegenerateTetrahedron`.
    """
    if len(vertices) != 4:
        raise ValueError(f"expected 4 vertices, got {len(vertices)}")
    vs = tuple(vertices)
    d = _aug_det(vs)
    if d == 0:
        raise DegenerateTetrahedron(f"affinely dependent vertices: {vs}")
    if d < 0:
        vs = (vs[1], vs[0], vs[2], vs[3])
    return Tetrahedron(vs)


def facet_normal_set(t: Tetrahedron) -> FacetNormalSet:
    """Outward facet normals of ``t``, each scaled to its facet's area.

    Each normal is half the edge cross product of its facet, signed so it
    points away from the omitted vertex. Positive orientation of the
    tetrahedron makes the fixed sign pattern below outward-correct, with
    no per-facet side tests needed.
    """
    v0, v1, v2, v3 = t.vertices

    def half_cross(p: Point3, q: Point3, r: Point3, sign: int) -> Vec3:
        n = cross3(sub3(q, p), sub3(r, p))
        return scale3(n, Fraction(sign, 2))

    return FacetNormalSet((
        half_cross(v0, v1, v2, -1),  # facet opposite v3
        half_cross(v3, v0, v1, +1),  # facet opposite v2
        half_cross(v2, v3, v0, -1),  # facet opposite v1
        half_cross(v1, v2, v3, +1),  # facet opposite v0
    ))


def support(vertices: Iterable[Point3], u: Vec3) -> Fraction:
    """Support value of the hull of ``vertices`` in direction ``u``.

    The maximum of the dot product over the vertices; positively
    homogeneous in ``u``.
    """
    best: Fraction | None = None
    for v in vertices:
        d = dot3(v, u)
        if best is None or d > best:
            best = d
    if best is None:
        raise EmptyPolytope("support of an empty vertex list")
    return best


def tetra_volume(t: Tetrahedron) -> Fraction:
    """Volume of a tetrahedron: one sixth of the augmented determinant."""
    return _aug_det(t.vertices) / 6


def primitive_form(values: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector by the positive factor making it primitive.

    Returns coprime integers; the sign pattern of the input is preserved
    (only positive scaling is applied). An all-zero input stays zero.
    """
    denom_lcm = 1
    for v in values:
        denom_lcm = lcm(denom_lcm, Fraction(v).denominator)
    ints = [int(v * denom_lcm) for v in values]
    g = 0
    for z in ints:
        g = gcd(g, z)
    if g == 0:
        return tuple(ints)
    return tuple(z // g for z in ints)


def _dedupe(points: Iterable[Sequence[Fraction]]) -> list:
    seen = set()
    out = []
    for p in points:
        t = tuple(p)
        if t not in seen:
            seen.add(t)
            out.append(t)
    return out


def _parallel(u: Sequence[Fraction], v: Sequence[Fraction]) -> bool:
    n = len(u)
    for i in range(n):
        for j in range(i + 1, n):
            if u[i] * v[j] != u[j] * v[i]:
                return False
    return True


def _extends_basis(basis: list, v: Sequence[Fraction]) -> bool:
    """True when v is linearly independent of the (independent) basis."""
    if all(c == 0 for c in v):
        return False
    k = len(basis)
    if k == 0:
        return True
    if k == 1:
        return not _parallel(basis[0], v)
    if k == 2:
        if len(v) == 3:
            return det3([basis[0], basis[1], v]) != 0
        return any(c != 0 for c in cross4(basis[0], basis[1], v))
    return det4([basis[0], basis[1], basis[2], v]) != 0


def _full_dimensional(points: Sequence[Sequence[Fraction]], dim: int) -> bool:
    """True when the points affinely span ``dim`` dimensions (greedy basis)."""
    if not points:
        return False
    base = points[0]
    basis: list = []
    for p in points[1:]:
        v = tuple(a - b for a, b in zip(p, base))
        if _extends_basis(basis, v):
            basis.append(v)
            if len(basis) == dim:
                return True
    return False


def _centroid(points: Sequence[Sequence[Fraction]]) -> tuple[Fraction, ...]:
    n = len(points)
    return tuple(sum(col, Fraction(0)) / n for col in zip(*points))


def _hull_facet_planes_3d(pts: list[Point3]) -> list[tuple[Vec3, Fraction, list[Point3]]]:
    """All facet planes of the hull, as (outward normal, offset, incident points).

    A point triple spans a facet plane when every point lies on one closed
    side of it. Coincident planes from different triples are deduplicated
    through their primitive integer form.
    """
    found: dict[tuple[int, ...], tuple[Vec3, Fraction, list[Point3]]] = {}
    for i, j, k in combinations(range(len(pts)), 3):
        n = cross3(sub3(pts[j], pts[i]), sub3(pts[k], pts[i]))
        if n[0] == 0 and n[1] == 0 and n[2] == 0:
            continue
        c = dot3(n, pts[i])
        below = above = False
        for p in pts:
            d = dot3(n, p)
            if d < c:
                below = True
            elif d > c:
                above = True
            if below and above:
                break
        if below and above:
            continue
        if above:
            n = scale3(n, Fraction(-1))
            c = -c
        key = primitive_form((n[0], n[1], n[2], c))
        if key in found:
            continue
        normal = (Fraction(key[0]), Fraction(key[1]), Fraction(key[2]))
        offset = Fraction(key[3])
        incident = [p for p in pts if dot3(normal, p) == offset]
        found[key] = (normal, offset, incident)
    return list(found.values())


def _polygon_fan(points: list[Point3], plane_normal: Vec3) -> list[tuple[Point3, Point3, Point3]]:
    """Triangulate the convex polygon spanned by coplanar points.

    Edge lines are found by brute force: a point pair spans one when every
    polygon point lies on a single side of it within the plane. Fanning
    from one vertex over the edge lines that miss it tiles the polygon,
    including when extra input points sit on edges or in the interior.
    """
    apex = min(points)
    lines: dict[tuple[int, ...], tuple[Vec3, Fraction, Point3, Point3]] = {}
    for i, j in combinations(range(len(points)), 2):
        direction = sub3(points[j], points[i])
        m = cross3(plane_normal, direction)  # in-plane normal of the candidate line
        c = dot3(m, points[i])
        below = above = False
        for p in points:
            d = dot3(m, p)
            if d < c:
                below = True
            elif d > c:
                above = True
            if below and above:
                break
        if below and above:
            continue
        if above:
            m = scale3(m, Fraction(-1))
            c = -c
        key = primitive_form((m[0], m[1], m[2], c))
        if key in lines:
            continue
        on_line = sorted(p for p in points if dot3(m, p) == c)
        # collinear points sort monotonically along the line, so the
        # lexicographic extremes are the segment's endpoints
        lines[key] = (m, c, on_line[0], on_line[-1])
    triangles = []
    for m, c, e0, e1 in lines.values():
        if dot3(m, apex) == c:
            continue  # apex sits on this edge line; the fan triangle is flat
        triangles.append((apex, e0, e1))
    return triangles


def hull_volume_3d(points: Iterable[Point3]) -> Fraction:
    """Exact volume of the convex hull of a 3D point set.

    Duplicated points are ignored. A set that does not span three
    dimensions raises :class:`DegenerateHull`; flat input never reports
    volume zero.
    """
    pts = _dedupe(points)
    if not pts or not _full_dimensional(pts, 3):
        raise DegenerateHull("points do not span three dimensions")
    origin = _centroid(pts)
    total = Fraction(0)
    for normal, _offset, incident in _hull_facet_planes_3d(pts):
        for t0, t1, t2 in _polygon_fan(incident, normal):
            total += abs(det3([sub3(t1, t0), sub3(t2, t0), sub3(origin, t0)]))
    return total / 6
