"""Mixed volumes of 3D convex bodies, two independent ways.

For a polytope P and convex body K, the mixed volume V(P, P, K) equals one
third of K's support function summed over P's area-scaled outward facet
normals. ``mixed_volume_against`` evaluates that sum directly for a
tetrahedron P.

Independently, Vol(K + tL) is a cubic polynomial in t >= 0 whose
coefficients carry the mixed volumes:

    c0 = Vol(K), c1 = 3 V(K,K,L), c2 = 3 V(K,L,L), c3 = Vol(L).

``volume_cubic`` recovers the coefficients by exact interpolation of hull
volumes at t = 0, 1, 2, 3, giving a route to the same quantities that
never touches a support function.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DegenerateHull, EmptyPolytope
from .geometry import (
    Point3,
    Tetrahedron,
    _dedupe,
    _full_dimensional,
    add3,
    facet_normal_set,
    hull_volume_3d,
    scale3,
    support,
)

__all__ = [
    "VolumeCubic",
    "mixed_volume_against",
    "minkowski_sum_vertices",
    "volume_cubic",
    "fit_cubic",
]


@dataclass(frozen=True)
class VolumeCubic:
    """Coefficients of Vol(K + tL) = c0 + c1*t + c2*t^2 + c3*t^3."""

    c0: Fraction
    c1: Fraction
    c2: Fraction
    c3: Fraction

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.c0, self.c1, self.c2, self.c3)

    @property
    def v_kkl(self) -> Fraction:
        """Mixed volume V(K, K, L)."""
        return self.c1 / 3

    @property
    def v_kll(self) -> Fraction:
        """Mixed volume V(K, L, L)."""
        return self.c2 / 3

    def value_at(self, t: object) -> Fraction:
        s = Fraction(t)
        return self.c0 + self.c1 * s + self.c2 * s * s + self.c3 * s * s * s


def mixed_volume_against(p: Tetrahedron, k: Sequence[Point3]) -> Fraction:
    """Mixed volume V(P, P, K) for a tetrahedron P and vertex set K.

    One third of K's support summed over P's area-scaled facet normals.
    K may be lower-dimensional (even a single point); it only enters
    through its support values.
    """
    if not k:
        raise EmptyPolytope("mixed volume against an empty vertex list")
    total = Fraction(0)
    for u in facet_normal_set(p).normals:
        total += support(k, u)
    return total / 3


def minkowski_sum_vertices(k: Sequence[Point3], l: Sequence[Point3]) -> list[Point3]:
    """All pairwise vertex sums of two point sets, deduplicated.

    The result is a superset of the vertices of the Minkowski sum of the
    two hulls; non-extreme sums are harmless to downstream hull code.
    Order is deterministic (first occurrence, k-major).
    """
    if not k or not l:
        raise EmptyPolytope("Minkowski sum of an empty vertex list")
    seen = set()
    out: list[Point3] = []
    for p in k:
        for q in l:
            s = add3(p, q)
            if s not in seen:
                seen.add(s)
                out.append(s)
    return out


def _solve_linear(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve a small exact linear system by Gaussian elimination."""
    n = len(rhs)
    m = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular interpolation system")
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def fit_cubic(ts: Sequence[object], values: Sequence[Fraction]) -> VolumeCubic:
    """Exact degree-3 interpolation through four (t, value) pairs."""
    if len(ts) != 4 or len(values) != 4:
        raise ValueError("cubic interpolation needs exactly four nodes")
    nodes = [Fraction(t) for t in ts]
    if len(set(nodes)) != 4:
        raise ValueError("interpolation nodes must be distinct")
    vandermonde = [[t**p for p in range(4)] for t in nodes]
    c0, c1, c2, c3 = _solve_linear(vandermonde, list(values))
    return VolumeCubic(c0, c1, c2, c3)


def volume_cubic(k: Sequence[Point3], l: Sequence[Point3]) -> VolumeCubic:
    """Coefficients of Vol(K + tL) by interpolation at t = 0, 1, 2, 3.

    Both vertex sets must span three dimensions; a flat body raises
    :class:`DegenerateHull` rather than being special-cased.
    """
    for name, body in (("k", k), ("l", l)):
        if not body:
            raise EmptyPolytope(f"empty vertex list for body {name}")
        if not _full_dimensional(_dedupe(body), 3):
            raise DegenerateHull(f"body {name} does not span three dimensions")
    values = []
    for t in range(4):
        scaled = [scale3(p, Fraction(t)) for p in l]
        values.append(hull_volume_3d(minkowski_sum_vertices(k, scaled)))
    return fit_cubic((0, 1, 2, 3), values)
