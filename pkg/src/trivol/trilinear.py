"""Volume of the convex hull of the graph of y = x1*x2*x3 over a box.

For bounds 0 <= a_i < b_i, the hull of {(x1*x2*x3, x1, x2, x3)} over the
box [a1,b1] x [a2,b2] x [a3,b3] is a 4-polytope with eight extreme points,
one per corner of the box. Its volume is computed here two exact ways:

* ``closed_form_volume`` evaluates a single polynomial formula, valid
  after the axes are reordered so that a1/b1 <= a2/b2 <= a3/b3 (the
  ordering condition checked by :func:`omega_check`).
* ``pipeline_volume`` slices the hull along the third axis. Each slice is
  a weighted Minkowski combination of two tetrahedra: the slice Q at the
  bottom of the axis range and the slice R at the top. The slice volume
  is therefore a cubic in the slice position whose coefficients are the
  volumes and mixed volumes of Q and R, and the hull volume is its
  integral. The mixed volumes come from closed-form support maxima (the
  ``support_max_z`` table) and are cross-checked against the generic
  support-sum evaluation; the integral is evaluated analytically and
  cross-checked against Simpson's rule, which is exact for cubics.

Every redundant pair of computation paths must agree exactly; a mismatch
raises :class:`InternalDisagreement` rather than returning anything.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial

from .errors import (
    DegenerateTetrahedron,
    InternalDisagreement,
    InvalidBounds,
    OmegaViolated,
)
from .geometry import Point3, Point4, Tetrahedron, Vec3, orient, tetra_volume
from .mixed_volume import mixed_volume_against

__all__ = [
    "Box3Bounds",
    "OmegaBox",
    "PipelineIntermediates",
    "VolumeReport",
    "ordering_values",
    "omega_normalize",
    "omega_check",
    "omega_prime_check",
    "omega_dprime_check",
    "q_vertex_points",
    "r_vertex_points",
    "build_Q",
    "build_R",
    "q_facet_directions",
    "r_facet_directions",
    "facet_prefactor",
    "support_max_z",
    "mixed_volumes_QR",
    "integrate_cross_sections",
    "hull_volume_formula",
    "closed_form_volume",
    "pipeline_volume",
    "extreme_points",
]


@dataclass(frozen=True)
class Box3Bounds:
    """Axis-aligned box [a1,b1] x [a2,b2] x [a3,b3] with 0 <= a_i < b_i."""

    a: tuple[Fraction, Fraction, Fraction]
    b: tuple[Fraction, Fraction, Fraction]

    def __post_init__(self) -> None:
        if len(self.a) != 3 or len(self.b) != 3:
            raise InvalidBounds("bounds need exactly three intervals")
        object.__setattr__(self, "a", tuple(Fraction(x) for x in self.a))
        object.__setattr__(self, "b", tuple(Fraction(x) for x in self.b))
        for axis, (lo, hi) in enumerate(zip(self.a, self.b), start=1):
            if not (0 <= lo < hi):
                raise InvalidBounds(f"need 0 <= a{axis} < b{axis}, got a{axis}={lo}, b{axis}={hi}")


def ordering_values(box: Box3Bounds) -> tuple[Fraction, Fraction, Fraction]:
    """Per-axis sort keys whose ascending order is the ordering condition.

    The key for axis i is a_i*b_j*b_k + b_i*a_j*a_k over the other two
    axes j, k; :func:`omega_check` is exactly "these are nondecreasing".
    """
    a, b = box.a, box.b
    keys = []
    for i in range(3):
        j, k = [t for t in range(3) if t != i]
        keys.append(a[i] * b[j] * b[k] + b[i] * a[j] * a[k])
    return (keys[0], keys[1], keys[2])


def omega_check(box: Box3Bounds) -> bool:
    """Ordering condition in sort-key form: nondecreasing axis keys."""
    o1, o2, o3 = ordering_values(box)
    return o1 <= o2 <= o3


def omega_prime_check(box: Box3Bounds) -> bool:
    """Ordering condition in ratio form: a1/b1 <= a2/b2 <= a3/b3.

    Evaluated cross-multiplied so it stays exact without division.
    """
    a, b = box.a, box.b
    return a[0] * b[1] <= a[1] * b[0] and a[1] * b[2] <= a[2] * b[1]


def omega_dprime_check(box: Box3Bounds) -> bool:
    """Ordering condition in pairwise difference form.

    Requires b_i*a_j - a_i*b_j >= 0 for each i < j; equivalent to the
    other two checks for every valid box.
    """
    a, b = box.a, box.b
    return (
        b[0] * a[1] - a[0] * b[1] >= 0
        and b[0] * a[2] - a[0] * b[2] >= 0
        and b[1] * a[2] - a[1] * b[2] >= 0
    )


@dataclass(frozen=True)
class OmegaBox:
    """A box whose axes already satisfy the ordering condition.

    ``perm`` records where each original axis went: perm[i] is the
    1-based normalized position of original axis i+1.
    """

    bounds: Box3Bounds
    perm: tuple[int, int, int]

    def __post_init__(self) -> None:
        if sorted(self.perm) != [1, 2, 3]:
            raise ValueError(f"perm must be a permutation of (1, 2, 3), got {self.perm}")
        if not omega_check(self.bounds):
            raise OmegaViolated(f"bounds do not satisfy the ordering condition: {self.bounds}")


def omega_normalize(box: Box3Bounds) -> OmegaBox:
    """Reorder the axes so the ordering condition holds.

    Axes are stably sorted by their :func:`ordering_values` key, so ties
    keep their original relative order and the result is deterministic.
    """
    keys = ordering_values(box)
    order = sorted(range(3), key=lambda i: (keys[i], i))
    a = tuple(box.a[i] for i in order)
    b = tuple(box.b[i] for i in order)
    perm = [0, 0, 0]
    for pos, original in enumerate(order):
        perm[original] = pos + 1
    return OmegaBox(Box3Bounds(a, b), (perm[0], perm[1], perm[2]))


def _slice_points(bounds: Box3Bounds, level: Fraction) -> list[Point3]:
    """Vertices of the hull slice at x3 = level, in (y, x1, x2) coordinates."""
    (a1, a2, _), (b1, b2, _) = bounds.a, bounds.b
    return [
        (b1 * b2 * level, b1, b2),
        (a1 * a2 * level, a1, a2),
        (b1 * a2 * level, b1, a2),
        (a1 * b2 * level, a1, b2),
    ]


def q_vertex_points(bounds: Box3Bounds) -> list[Point3]:
    """Vertices of the bottom slice (x3 = a3); flat when a3 == 0."""
    return _slice_points(bounds, bounds.a[2])


def r_vertex_points(bounds: Box3Bounds) -> list[Point3]:
    """Vertices of the top slice (x3 = b3); always a genuine tetrahedron."""
    return _slice_points(bounds, bounds.b[2])


def build_Q(box: OmegaBox) -> Tetrahedron:
    """Oriented tetrahedron of the bottom slice.

    Raises :class:`DegenerateTetrahedron` when a3 == 0, where the bottom
    slice collapses into the y = 0 plane.
    """
    if box.bounds.a[2] == 0:
        raise DegenerateTetrahedron("bottom slice is flat when a3 == 0")
    return orient(q_vertex_points(box.bounds))


def build_R(box: OmegaBox) -> Tetrahedron:
    """Oriented tetrahedron of the top slice."""
    return orient(r_vertex_points(box.bounds))


def _slice_directions(bounds: Box3Bounds, level: Fraction) -> tuple[Vec3, Vec3, Vec3, Vec3]:
    one = Fraction(1)
    (a1, a2, _), (b1, b2, _) = bounds.a, bounds.b
    return (
        (one, -a2 * level, -b1 * level),
        (one, -b2 * level, -a1 * level),
        (-one, b2 * level, b1 * level),
        (-one, a2 * level, a1 * level),
    )


def q_facet_directions(bounds: Box3Bounds) -> tuple[Vec3, Vec3, Vec3, Vec3]:
    """Facet directions of the bottom slice, with the common area factor
    (see :func:`facet_prefactor`) divided out."""
    return _slice_directions(bounds, bounds.a[2])


def r_facet_directions(bounds: Box3Bounds) -> tuple[Vec3, Vec3, Vec3, Vec3]:
    """Facet directions of the top slice, area prefactor divided out."""
    return _slice_directions(bounds, bounds.b[2])


def facet_prefactor(bounds: Box3Bounds) -> Fraction:
    """Common scale of all slice facet normals: (b1-a1)*(b2-a2)/2."""
    (a1, a2, _), (b1, b2, _) = bounds.a, bounds.b
    return (b1 - a1) * (b2 - a2) / 2


def _z_values(bounds: Box3Bounds) -> tuple[Fraction, ...]:
    """Closed-form support maxima behind :func:`support_max_z`.

    Entry i-1 is the support of the opposite slice's vertex set against
    the i-th facet direction (bottom slice's directions for i <= 4, top
    slice's for i >= 5), with the area prefactor divided out. Each entry
    is the winner of a four-way maximum; the winning corner is pinned
    down by the ordering condition.
    """
    (a1, a2, a3), (b1, b2, b3) = bounds.a, bounds.b
    return (
        b1 * b2 * b3 - b1 * a2 * a3 - b1 * b2 * a3,
        b1 * b2 * b3 - a1 * b2 * a3 - b1 * b2 * a3,
        a1 * b2 * a3 + b1 * b2 * a3 - a1 * b2 * b3,
        2 * a1 * a2 * a3 - a1 * a2 * b3,
        a1 * a2 * a3 - a1 * a2 * b3 - b1 * a2 * b3,
        a1 * a2 * a3 - a1 * a2 * b3 - a1 * b2 * b3,
        2 * b1 * b2 * b3 - b1 * b2 * a3,
        a1 * a2 * b3 + b1 * a2 * b3 - b1 * a2 * a3,
    )


def support_max_z(i: int, box: OmegaBox) -> Fraction:
    """Closed form of the i-th slice support maximum, i in 1..8.

    For i <= 4 this is the top slice's support against the i-th bottom
    slice facet direction; for i >= 5 the bottom slice's support against
    the (i-4)-th top slice direction. Valid only under the ordering
    condition, which the :class:`OmegaBox` type guarantees.
    """
    if not 1 <= i <= 8:
        raise ValueError(f"index must be in 1..8, got {i}")
    return _z_values(box.bounds)[i - 1]


def _mixed_volume_closed_form(bounds: Box3Bounds) -> Fraction:
    (a1, a2, a3), (b1, b2, b3) = bounds.a, bounds.b
    return (
        (b1 - a1)
        * (b2 - a2)
        * ((b1 - a1) * (b2 * b3 - a2 * a3) + (b3 - a3) * (b1 * b2 - a1 * a2))
        / 6
    )


def _mixed_volumes_from_z(bounds: Box3Bounds) -> tuple[Fraction, Fraction]:
    z = _z_values(bounds)
    pref = facet_prefactor(bounds)
    v_qqr = pref * (z[0] + z[1] + z[2] + z[3]) / 3
    v_qrr = pref * (z[4] + z[5] + z[6] + z[7]) / 3
    return v_qqr, v_qrr


def mixed_volumes_QR(box: OmegaBox) -> tuple[Fraction, Fraction]:
    """Mixed volumes (V(Q,Q,R), V(Q,R,R)) of the two slice tetrahedra.

    Computed from the closed-form support maxima with the area prefactor
    applied once per sum, then checked against the direct product
    formula; for these two tetrahedra the pair is always equal.
    """
    if box.bounds.a[2] == 0:
        raise DegenerateTetrahedron("bottom slice is flat when a3 == 0")
    v_qqr, v_qrr = _mixed_volumes_from_z(box.bounds)
    expected = _mixed_volume_closed_form(box.bounds)
    if v_qqr != expected or v_qrr != expected:
        raise InternalDisagreement(
            f"support-sum mixed volumes {v_qqr}, {v_qrr} != closed form {expected}"
        )
    return v_qqr, v_qrr


def integrate_cross_sections(
    vol_q: Fraction,
    v_qqr: Fraction,
    v_qrr: Fraction,
    vol_r: Fraction,
    a3: object,
    b3: object,
    method: str = "beta",
) -> Fraction:
    """Integrate the slice-volume cubic over [a3, b3].

    The slice at position t has volume
    sum_k C(3,k) * (b3-t)^(3-k) * (t-a3)^k * m_k / (b3-a3)^3 with
    m = (vol_q, v_qqr, v_qrr, vol_r). The default evaluates the Beta
    integrals of each term analytically; ``method="simpson"`` is a second
    exact evaluator (Simpson's rule is exact for cubics), kept for
    debugging the analytic path.
    """
    lo, hi = Fraction(a3), Fraction(b3)
    if not lo < hi:
        raise InvalidBounds(f"need a3 < b3, got {lo} >= {hi}")
    h = hi - lo
    weights = (vol_q, 3 * v_qqr, 3 * v_qrr, vol_r)
    if method == "beta":
        # integral of (b3-t)^(3-k) (t-a3)^k over [a3, b3] is h^4*(3-k)!k!/4!
        total = Fraction(0)
        for k, w in enumerate(weights):
            total += w * Fraction(factorial(3 - k) * factorial(k), factorial(4))
        return h * total
    if method == "simpson":

        def section(t: Fraction) -> Fraction:
            s, u = hi - t, t - lo
            return (
                weights[0] * s**3 + weights[1] * s**2 * u + weights[2] * s * u**2 + weights[3] * u**3
            ) / h**3

        mid = (lo + hi) / 2
        return h * (section(lo) + 4 * section(mid) + section(hi)) / 6
    raise ValueError(f"unknown integration method {method!r}")


def hull_volume_formula(a: tuple[Fraction, Fraction, Fraction], b: tuple[Fraction, Fraction, Fraction]) -> Fraction:
    """Closed-form hull volume for bounds satisfying the ordering condition.

    The expression is symmetric in axes 2 and 3 but not in axis 1; apply
    it only to normalized bounds (or use :func:`closed_form_volume`).
    """
    (a1, a2, a3), (b1, b2, b3) = a, b
    core = b1 * (5 * b2 * b3 - a2 * b3 - b2 * a3 - 3 * a2 * a3) + a1 * (
        5 * a2 * a3 - b2 * a3 - a2 * b3 - 3 * b2 * b3
    )
    return (b1 - a1) * (b2 - a2) * (b3 - a3) * core / 24


def closed_form_volume(box: Box3Bounds) -> Fraction:
    """Hull volume by formula: normalize the axis order, then evaluate."""
    nb = omega_normalize(box).bounds
    return hull_volume_formula(nb.a, nb.b)


@dataclass(frozen=True)
class PipelineIntermediates:
    """Slice data behind a pipeline volume: two volumes, two mixed volumes."""

    vol_q: Fraction
    vol_r: Fraction
    v_qqr: Fraction
    v_qrr: Fraction


@dataclass(frozen=True)
class VolumeReport:
    """Result of computing one box's hull volume by several methods.

    ``agree`` is true iff every volume present is exactly equal; no
    tolerance is involved anywhere.
    """

    box: Box3Bounds
    vol_formula: Fraction
    vol_pipeline: Fraction
    vol_oracle: Fraction | None
    agree: bool
    intermediates: PipelineIntermediates


def _require_equal(got: Fraction, expected: Fraction, what: str) -> None:
    if got != expected:
        raise InternalDisagreement(f"{what}: {got} != {expected}")


def pipeline_volume(box: Box3Bounds) -> VolumeReport:
    """Hull volume via slice integration, with every step double-checked.

    Slice volumes and mixed volumes are computed both from closed forms
    and from generic geometry (determinants, support sums), and the
    integral is evaluated analytically and by Simpson's rule. When
    a3 == 0 after normalization the bottom slice is flat; its volume is 0
    and the closed forms, which remain well-defined, stand in for the
    paths that would need a nondegenerate tetrahedron.
    """
    norm = omega_normalize(box)
    nb = norm.bounds
    (a1, a2, a3), (b1, b2, b3) = nb.a, nb.b

    vol_q = a3 * (b1 - a1) ** 2 * (b2 - a2) ** 2 / 6
    vol_r = b3 * (b1 - a1) ** 2 * (b2 - a2) ** 2 / 6
    v_qqr, v_qrr = _mixed_volumes_from_z(nb)
    closed = _mixed_volume_closed_form(nb)
    _require_equal(v_qqr, closed, "bottom-slice mixed volume vs product form")
    _require_equal(v_qrr, closed, "top-slice mixed volume vs product form")

    r_tet = build_R(norm)
    _require_equal(tetra_volume(r_tet), vol_r, "top slice volume vs determinant")
    if a3 > 0:
        q_tet = build_Q(norm)
        _require_equal(tetra_volume(q_tet), vol_q, "bottom slice volume vs determinant")
        _require_equal(
            mixed_volume_against(q_tet, list(r_tet.vertices)),
            v_qqr,
            "V(Q,Q,R) vs generic support sum",
        )
        _require_equal(
            mixed_volume_against(r_tet, list(q_tet.vertices)),
            v_qrr,
            "V(Q,R,R) vs generic support sum",
        )
    else:
        # the flat bottom slice still has well-defined support values, so
        # one generic cross-check survives the degeneracy
        _require_equal(
            mixed_volume_against(r_tet, q_vertex_points(nb)),
            v_qrr,
            "V(Q,R,R) vs generic support sum (flat bottom slice)",
        )

    vol_pipeline = integrate_cross_sections(vol_q, v_qqr, v_qrr, vol_r, a3, b3)
    _require_equal(
        integrate_cross_sections(vol_q, v_qqr, v_qrr, vol_r, a3, b3, method="simpson"),
        vol_pipeline,
        "analytic integral vs Simpson",
    )

    vol_formula = hull_volume_formula(nb.a, nb.b)
    return VolumeReport(
        box=box,
        vol_formula=vol_formula,
        vol_pipeline=vol_pipeline,
        vol_oracle=None,
        agree=vol_pipeline == vol_formula,
        intermediates=PipelineIntermediates(vol_q, vol_r, v_qqr, v_qrr),
    )


def extreme_points(box: Box3Bounds) -> tuple[Point4, ...]:
    """The hull's eight extreme points (y, x1, x2, x3), one per box corner.

    Corners are enumerated in lexicographic order of the choice vector
    (low before high per axis), so the first point uses all lower bounds
    and the last all upper bounds.
    """
    pts = []
    for v1, v2, v3 in product(
        (box.a[0], box.b[0]), (box.a[1], box.b[1]), (box.a[2], box.b[2])
    ):
        pts.append((v1 * v2 * v3, v1, v2, v3))
    return tuple(pts)
