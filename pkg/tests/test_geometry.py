"""Exact linear algebra and polytope primitives."""

import random
from fractions import Fraction as F
from itertools import permutations, product

import pytest

from trivol import (
    DegenerateHull,
    DegenerateTetrahedron,
    EmptyPolytope,
    Tetrahedron,
    det3,
    det4,
    facet_normal_set,
    hull_volume_3d,
    orient,
    support,
    tetra_volume,
)
from trivol.geometry import add3, cross3, dot3, primitive_form, sub3

from testutil import random_points, random_tetrahedron

ORIGIN = (F(0), F(0), F(0))
E1 = (F(1), F(0), F(0))
E2 = (F(0), F(1), F(0))
E3 = (F(0), F(0), F(1))
SIMPLEX = [ORIGIN, E1, E2, E3]


def _det_by_permutation_sum(m):
    n = len(m)
    total = F(0)
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = F(1)
        for i in range(n):
            term *= m[i][perm[i]]
        total += sign * term
    return total


def test_det3_small_cases():
    identity = [[F(1), F(0), F(0)], [F(0), F(1), F(0)], [F(0), F(0), F(1)]]
    assert det3(identity) == 1
    repeated = [[F(1), F(2), F(3)], [F(1), F(2), F(3)], [F(4), F(5), F(6)]]
    assert det3(repeated) == 0
    m = [[F(1), F(2), F(3)], [F(0), F(1), F(4)], [F(5), F(6), F(0)]]
    assert det3(m) == 1


def test_det4_small_cases():
    identity = [[F(1 if i == j else 0) for j in range(4)] for i in range(4)]
    assert det4(identity) == 1
    # an odd permutation matrix (single transposition of rows 0 and 1)
    swap = [identity[1], identity[0], identity[2], identity[3]]
    assert det4(swap) == -1
    ones = [F(1)] * 4
    lifted = [ones] + [[v[i] for v in SIMPLEX] for i in range(3)]
    assert det4(lifted) == 1


def test_determinants_match_permutation_expansion():
    rng = random.Random(31)
    for _ in range(100):
        m3 = [[F(rng.randint(-4, 4)) for _ in range(3)] for _ in range(3)]
        assert det3(m3) == _det_by_permutation_sum(m3)
        m4 = [[F(rng.randint(-4, 4)) for _ in range(4)] for _ in range(4)]
        assert det4(m4) == _det_by_permutation_sum(m4)


def test_orient_keeps_positive_input():
    t = orient(SIMPLEX)
    assert t.vertices == tuple(SIMPLEX)


def test_orient_repairs_by_swapping_first_pair():
    t = orient([E1, ORIGIN, E2, E3])
    assert t.vertices == (ORIGIN, E1, E2, E3)


def test_orient_rejects_coplanar_points():
    flat = [ORIGIN, E1, E2, (F(1), F(1), F(0))]
    with pytest.raises(DegenerateTetrahedron):
        orient(flat)


def test_tetrahedron_constructor_rejects_negative_orientation():
    with pytest.raises(ValueError):
        Tetrahedron((E1, ORIGIN, E2, E3))


def test_facet_normals_of_standard_simplex():
    got = sorted(facet_normal_set(orient(SIMPLEX)).normals)
    want = sorted(
        [
            (F(0), F(0), F(-1, 2)),
            (F(0), F(-1, 2), F(0)),
            (F(-1, 2), F(0), F(0)),
            (F(1, 2), F(1, 2), F(1, 2)),
        ]
    )
    assert got == want


def test_facet_normals_sum_to_zero_and_carry_facet_area():
    rng = random.Random(7)
    for _ in range(100):
        t = random_tetrahedron(rng)
        normals = facet_normal_set(t).normals
        assert len(normals) == 4
        total = (F(0), F(0), F(0))
        for n in normals:
            total = add3(total, n)
        assert total == (0, 0, 0)
        # squared length of each normal = squared area of its facet
        v0, v1, v2, v3 = t.vertices
        facets = [(v0, v1, v2), (v3, v0, v1), (v2, v3, v0), (v1, v2, v3)]
        for n, (p, q, r) in zip(normals, facets):
            twice_area = cross3(sub3(q, p), sub3(r, p))
            assert 4 * dot3(n, n) == dot3(twice_area, twice_area)


def test_facet_normals_invariant_under_translation_and_even_permutation():
    rng = random.Random(8)
    for _ in range(25):
        t = random_tetrahedron(rng)
        base = sorted(facet_normal_set(t).normals)
        shift = tuple(F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(3))
        moved = Tetrahedron(tuple(add3(v, shift) for v in t.vertices))
        assert sorted(facet_normal_set(moved).normals) == base
        v0, v1, v2, v3 = t.vertices
        # one 3-cycle and one double transposition cover both even classes
        rotated = Tetrahedron((v1, v2, v0, v3))
        assert sorted(facet_normal_set(rotated).normals) == base
        swapped = Tetrahedron((v1, v0, v3, v2))
        assert sorted(facet_normal_set(swapped).normals) == base


def test_support_on_cube_and_octahedron():
    cube = [tuple(map(F, c)) for c in product((0, 1), repeat=3)]
    assert support(cube, (F(1), F(1), F(1))) == 3
    octa = [E1, E2, E3, (F(-1), F(0), F(0)), (F(0), F(-1), F(0)), (F(0), F(0), F(-1))]
    assert support(octa, (F(2), F(-5), F(1))) == 5


def test_support_is_positively_homogeneous():
    rng = random.Random(11)
    for _ in range(50):
        pts = random_points(rng, 6)
        u = tuple(F(rng.randint(-5, 5)) for _ in range(3))
        lam = F(rng.randint(0, 7), rng.randint(1, 4))
        assert support(pts, tuple(lam * c for c in u)) == lam * support(pts, u)


def test_support_of_nothing_is_an_error():
    with pytest.raises(EmptyPolytope):
        support([], (F(1), F(0), F(0)))


def test_tetra_volume_values():
    assert tetra_volume(orient(SIMPLEX)) == F(1, 6)
    # bottom slice shape with a1 = a2 = 0, b1 = b2 = 1 has volume level/6
    level = F(5, 7)
    slice_pts = [(level, F(1), F(1)), ORIGIN, (F(0), F(1), F(0)), (F(0), F(0), F(1))]
    assert tetra_volume(orient(slice_pts)) == level / 6


def test_tetra_volume_matches_hull_volume():
    rng = random.Random(13)
    for _ in range(50):
        t = random_tetrahedron(rng)
        assert tetra_volume(t) == hull_volume_3d(list(t.vertices))


def test_hull_volume_3d_cube_and_simplex():
    cube = [tuple(map(F, c)) for c in product((0, 1), repeat=3)]
    assert hull_volume_3d(cube) == 1
    assert hull_volume_3d(SIMPLEX) == F(1, 6)


def test_hull_volume_3d_ignores_duplicates_and_interior_points():
    cube = [tuple(map(F, c)) for c in product((0, 1), repeat=3)]
    noisy = cube + cube[:3] + [(F(1, 2), F(1, 2), F(1, 2)), (F(1, 4), F(1, 2), F(3, 4))]
    assert hull_volume_3d(noisy) == 1


def test_hull_volume_3d_rejects_flat_input():
    square = [ORIGIN, E1, E2, (F(1), F(1), F(0))]
    with pytest.raises(DegenerateHull):
        hull_volume_3d(square)
    with pytest.raises(DegenerateHull):
        hull_volume_3d([ORIGIN, E1])


def test_primitive_form_scales_and_keeps_signs():
    assert primitive_form((F(2, 3), F(-4, 3), F(0))) == (1, -2, 0)
    assert primitive_form((F(6), F(9))) == (2, 3)
    assert primitive_form((F(0), F(0))) == (0, 0)
    assert primitive_form((F(-5),)) == (-1,)
