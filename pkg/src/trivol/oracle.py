"""Brute-force verification oracles: exact volumes with no cleverness.

The routines here trade speed for trustworthiness. Facets of a 4D hull
are found by testing every 4-point subset: the hyperplane through an
affinely independent 4-subset is a facet iff all points lie weakly on
one side of it. Facet volumes come from enumerating ridges and edges the
same exhaustive way (every 3-subset, every pair), fanning each face into
simplices from its lexicographically smallest vertex, and summing cone
determinants from the global centroid. Everything is exact rational; the
only float code is the Monte Carlo sanity estimator at the bottom, which
never participates in any agreement verdict.

Being O(n^4) and worse, this is usable for the eight-point hulls this
package cares about and for small test polytopes, nothing bigger.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .errors import DegenerateHull, InvalidBounds
from .geometry import (
    Point4,
    Vec4,
    _centroid,
    _dedupe,
    _full_dimensional,
    cross4,
    det4,
    dot4,
    hull_volume_3d,
    primitive_form,
    scale3,
    sub4,
)
from .mixed_volume import minkowski_sum_vertices
from .trilinear import Box3Bounds, omega_normalize, q_vertex_points, r_vertex_points

__all__ = [
    "Facet4",
    "hull_facets_4d",
    "hull_volume_4d",
    "cross_section_volume",
    "quadrature_volume",
    "monte_carlo_volume",
]


@dataclass(frozen=True)
class Facet4:
    """One facet hyperplane of a 4D hull: normal, offset, incident points.

    The normal is outward in primitive integer form (coprime entries,
    positively scaled only, so outwardness is preserved); every hull
    point x satisfies normal . x <= offset, with equality exactly on the
    ``incident`` indices into the deduplicated point list.
    """

    normal: Vec4
    offset: Fraction
    incident: tuple[int, ...]


def hull_facets_4d(points: list[Point4]) -> tuple[list[Point4], list[Facet4]]:
    """Deduplicated points and all facets of their 4D convex hull.

    Every 4-subset that spans a hyperplane is tested against the whole
    point set with an early exit on the first straddle; surviving
    hyperplanes are oriented outward and deduplicated by primitive form.
    """
    pts: list[Point4] = _dedupe(points)
    if len(pts) < 5 or not _full_dimensional(pts, 4):
        raise DegenerateHull("points do not span four dimensions")
    found: dict[tuple[int, ...], Facet4] = {}
    for i, j, k, l in combinations(range(len(pts)), 4):
        base = pts[i]
        n = cross4(sub4(pts[j], base), sub4(pts[k], base), sub4(pts[l], base))
        if all(c == 0 for c in n):
            continue
        c = dot4(n, base)
        below = above = False
        for p in pts:
            d = dot4(n, p)
            if d < c:
                below = True
            elif d > c:
                above = True
            if below and above:
                break
        if below and above:
            continue
        if above:
            n = tuple(-x for x in n)
            c = -c
        key = primitive_form((n[0], n[1], n[2], n[3], c))
        if key in found:
            continue
        normal: Vec4 = (
            Fraction(key[0]),
            Fraction(key[1]),
            Fraction(key[2]),
            Fraction(key[3]),
        )
        offset = Fraction(key[4])
        incident = tuple(t for t, p in enumerate(pts) if dot4(normal, p) == offset)
        found[key] = Facet4(normal, offset, incident)
    return pts, list(found.values())


def _ridge_triangles(
    rpts: list[Point4], n: Vec4, m: Vec4
) -> list[tuple[Point4, Point4, Point4]]:
    """Fan-triangulate a 2D face given its two independent normals n, m.

    Edge lines of the polygon are found by pairwise brute force: the pair
    (s, u) spans an edge when every face point lies weakly on one side of
    the in-face normal cross4(u - s, n, m). Lexicographic extremes of the
    collinear points are the edge endpoints.
    """
    apex = min(rpts)
    lines: dict[tuple[int, ...], tuple[Point4, Point4]] = {}
    for s_idx, u_idx in combinations(range(len(rpts)), 2):
        e = cross4(sub4(rpts[u_idx], rpts[s_idx]), n, m)
        if all(c == 0 for c in e):
            continue
        c = dot4(e, rpts[s_idx])
        below = above = False
        for p in rpts:
            d = dot4(e, p)
            if d < c:
                below = True
            elif d > c:
                above = True
            if below and above:
                break
        if below and above:
            continue
        if above:
            e = tuple(-x for x in e)
            c = -c
        key = primitive_form((e[0], e[1], e[2], e[3], c))
        if key in lines:
            continue
        if dot4(e, apex) == c:
            continue  # apex lies on this edge line; the fan triangle is flat
        on_line = sorted(p for p in rpts if dot4(e, p) == c)
        lines[key] = (on_line[0], on_line[-1])
    return [(apex, e0, e1) for e0, e1 in lines.values()]


def _facet_tetrahedra(
    fpts: list[Point4], normal: Vec4
) -> list[tuple[Point4, Point4, Point4, Point4]]:
    """Tetrahedralize a 3D facet of a 4D hull, given its outward normal.

    Ridges (2D faces of the facet) are found by testing every 3-subset's
    in-facet plane, then each ridge polygon is fan-triangulated and its
    triangles coned to the facet's lexicographically smallest vertex.
    """
    apex = min(fpts)
    ridges: dict[tuple[int, ...], tuple[Vec4, list[Point4]]] = {}
    for i, j, k in combinations(range(len(fpts)), 3):
        base = fpts[i]
        m = cross4(sub4(fpts[j], base), sub4(fpts[k], base), normal)
        if all(c == 0 for c in m):
            continue
        c = dot4(m, base)
        below = above = False
        for p in fpts:
            d = dot4(m, p)
            if d < c:
                below = True
            elif d > c:
                above = True
            if below and above:
                break
        if below and above:
            continue
        if above:
            m = tuple(-x for x in m)
            c = -c
        key = primitive_form((m[0], m[1], m[2], m[3], c))
        if key in ridges:
            continue
        if dot4(m, apex) == c:
            continue  # apex lies on this ridge; its cone is flat
        incident = [p for p in fpts if dot4(m, p) == c]
        ridges[key] = (m, incident)
    tetras = []
    for m, rpts in ridges.values():
        for t0, t1, t2 in _ridge_triangles(rpts, normal, m):
            tetras.append((apex, t0, t1, t2))
    return tetras


def hull_volume_4d(points: list[Point4]) -> Fraction:
    """Exact 4-volume of the convex hull of a 4D point set.

    Sums cone determinants from the centroid over a tetrahedralization of
    every facet. Input that lies in a hyperplane raises
    :class:`DegenerateHull`; flat input never reports volume zero.
    """
    pts, facets = hull_facets_4d(points)
    origin = _centroid(pts)
    total = Fraction(0)
    for facet in facets:
        fpts = [pts[i] for i in facet.incident]
        for t0, t1, t2, t3 in _facet_tetrahedra(fpts, facet.normal):
            total += abs(
                det4([sub4(t1, t0), sub4(t2, t0), sub4(t3, t0), sub4(origin, t0)])
            )
    return total / 24


def cross_section_volume(box: Box3Bounds, t: object) -> Fraction:
    """Exact 3-volume of the hull's slice at third-coordinate value t.

    The axes are reordered internally (see :func:`omega_normalize`); t
    refers to the third axis after that reordering and must lie within
    its bounds. The slice is the Minkowski combination of the bottom and
    top slice tetrahedra weighted by where t sits in the range, computed
    geometrically from the summed vertex sets. The t = a3 = 0 section is
    flat and returns 0; every other section is full-dimensional.
    """
    nb = omega_normalize(box).bounds
    a3, b3 = nb.a[2], nb.b[2]
    pos = Fraction(t)
    if not a3 <= pos <= b3:
        raise InvalidBounds(f"section position {pos} outside [{a3}, {b3}]")
    if pos == a3 == 0:
        return Fraction(0)
    h = b3 - a3
    wq = (b3 - pos) / h
    wr = (pos - a3) / h
    scaled_q = [scale3(p, wq) for p in q_vertex_points(nb)]
    scaled_r = [scale3(p, wr) for p in r_vertex_points(nb)]
    return hull_volume_3d(minkowski_sum_vertices(scaled_q, scaled_r))


def quadrature_volume(box: Box3Bounds) -> Fraction:
    """Hull volume by Simpson quadrature over geometric cross-sections.

    Three sections (ends and midpoint of the third-axis range after
    normalization) determine the integral exactly because the section
    volume is a cubic in the position. Shares no volume formulas with the
    pipeline: each section volume is a genuine 3D hull computation.
    Requires a3 > 0 after normalization so all sections are
    full-dimensional.
    """
    nb = omega_normalize(box).bounds
    a3, b3 = nb.a[2], nb.b[2]
    if a3 == 0:
        raise InvalidBounds("quadrature needs a3 > 0 after normalization")
    mid = (a3 + b3) / 2
    f0 = cross_section_volume(nb, a3)
    f1 = cross_section_volume(nb, mid)
    f2 = cross_section_volume(nb, b3)
    return (b3 - a3) * (f0 + 4 * f1 + f2) / 6


def monte_carlo_volume(
    points: list[Point4], samples: int, seed: int
) -> tuple[float, float]:
    """Monte Carlo volume estimate and its standard error, floats.

    Uniform rejection sampling over the coordinate bounding box, with
    membership tested against the exact facets (converted to floats).
    Deterministic for a fixed seed. A smoke test only: results carry
    sampling error and never feed any exactness check.
    """
    if samples <= 0:
        raise ValueError("need a positive sample count")
    pts, facets = hull_facets_4d(points)
    lo = np.array([float(min(p[i] for p in pts)) for i in range(4)])
    hi = np.array([float(max(p[i] for p in pts)) for i in range(4)])
    normals = np.array([[float(c) for c in f.normal] for f in facets])
    offsets = np.array([float(f.offset) for f in facets])
    rng = np.random.default_rng(seed)
    xs = rng.uniform(lo, hi, size=(samples, 4))
    inside = np.all(xs @ normals.T <= offsets, axis=1)
    box_vol = float(np.prod(hi - lo))
    p_hat = float(np.count_nonzero(inside)) / samples
    estimate = p_hat * box_vol
    stderr = box_vol * float(np.sqrt(p_hat * (1.0 - p_hat) / samples))
    return estimate, stderr
