import random
from fractions import Fraction
from itertools import permutations

import pytest

from homlab.linalg import (
    clear_denominators,
    cone_extreme_rays,
    det_int,
    dot,
    integer_kernel_basis,
    nullspace,
    orthogonal_complement,
    rank,
    rref,
    solve_combination,
    solve_square,
)


def det_by_permutations(rows):
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        # parity via inversion count
        inv = sum(
            1 for i in range(n) for j in range(i + 1, n) if seen[i] > seen[j]
        )
        sign = -1 if inv % 2 else 1
        prod = 1
        for i in range(n):
            prod *= rows[i][perm[i]]
        total += sign * prod
    return total


def test_rref_pivots():
    m, pivots = rref([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert pivots == [0, 1]
    assert m[0][0] == 1 and m[1][1] == 1


def test_rank():
    assert rank([[1, 1], [2, 2]]) == 1
    assert rank([[1, 0], [0, 1]]) == 2
    assert rank([]) == 0


def test_solve_combination():
    assert solve_combination([(1, 1)], (2, 2)) == [2]
    assert solve_combination([(1, 1)], (1, 0)) is None
    assert solve_combination([], (0, 0)) == []
    alpha = solve_combination([(1, 0, 1), (0, 1, 1)], (2, 3, 5))
    assert alpha == [2, 3]


def test_solve_combination_dimension_mismatch():
    with pytest.raises(ValueError):
        solve_combination([(1, 1, 1)], (1, 0))


def test_nullspace_orthogonal_complement():
    comp = orthogonal_complement([(1, 1)], 2)
    assert len(comp) == 1
    assert dot(comp[0], (1, 1)) == 0
    assert orthogonal_complement([], 3) == [
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
    ] or len(orthogonal_complement([], 3)) == 3


def test_nullspace_solutions_check_out():
    m = [[1, 2, 3], [0, 1, 1]]
    for vec in nullspace(m):
        assert all(dot(row, vec) == 0 for row in m)
    assert len(nullspace(m)) == 1


def test_solve_square_and_singular():
    x = solve_square([[2, 0], [1, 1]], [4, 5])
    assert x == [2, 3]
    with pytest.raises(ValueError):
        solve_square([[1, 1], [2, 2]], [1, 2])


def test_det_matches_permutation_oracle():
    rng = random.Random(4)
    for _ in range(200):
        n = rng.randint(0, 4)
        m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        assert det_int(m) == det_by_permutations(m)


def test_integer_kernel_saturated():
    # x with 2x0 = 0 includes (0, 1); a non-saturated basis would miss it
    basis = integer_kernel_basis([[2, 0]], 2)
    assert sorted(map(tuple, basis)) == [(0, 1)]
    basis = integer_kernel_basis([[1, -1]], 2)
    assert [tuple(b) for b in basis] in ([(1, 1)], [(-1, -1)])
    # kernel of an invertible map is trivial
    assert integer_kernel_basis([[1, 0], [0, 1]], 2) == []
    # no constraints: all of Z^2
    assert len(integer_kernel_basis([], 2)) == 2


def test_integer_kernel_property_random():
    rng = random.Random(8)
    for _ in range(100):
        nrows, ncols = rng.randint(0, 3), rng.randint(1, 4)
        m = [[rng.randint(-3, 3) for _ in range(ncols)] for _ in range(nrows)]
        basis = integer_kernel_basis(m, ncols)
        for vec in basis:
            assert all(dot(row, vec) == 0 for row in m)
        # rank-nullity over Q
        assert len(basis) == ncols - rank(m)


def test_clear_denominators():
    assert clear_denominators([Fraction(1, 2), Fraction(1, 3)]) == [3, 2]
    assert clear_denominators([Fraction(2), Fraction(4)]) == [1, 2]
    assert clear_denominators([Fraction(-1, 2), Fraction(1, 2)]) == [-1, 1]


def test_cone_extreme_rays_quadrant():
    # {y : y0 >= 0, y1 >= 0} has rays e0, e1
    rays = cone_extreme_rays([[1, 0], [0, 1]], 2)
    assert sorted(map(tuple, rays)) == [(0, 1), (1, 0)]


def test_cone_extreme_rays_halfline():
    # x = t*(1,1), x >= 0 <=> t >= 0
    rays = cone_extreme_rays([[1], [1]], 1)
    assert [tuple(r) for r in rays] == [(1,)]


def test_cone_extreme_rays_tilted():
    # {y : y0 >= 0, y1 - y0 >= 0}: rays (0,1) and (1,1)
    rays = cone_extreme_rays([[1, 0], [-1, 1]], 2)
    assert sorted(map(tuple, rays)) == [(0, 1), (1, 1)]
