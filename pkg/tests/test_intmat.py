import random

import pytest
from hypothesis import given, settings, strategies as st

from lensbound.intmat import IntMatrix, cokernel_invariants, smith_normal_form
from oracles import det_by_permutations, determinantal_invariants


def small_matrices(max_dim=4, bound=9):
    return st.integers(1, max_dim).flatmap(
        lambda r: st.integers(1, max_dim).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(-bound, bound), min_size=c, max_size=c),
                min_size=r, max_size=r,
            )
        )
    )


def check_decomposition(M):
    snf = smith_normal_form(M)
    L, R = snf.left_transform, snf.right_transform
    assert L @ M @ R == snf.diagonal()
    assert abs(L.determinant()) == 1
    assert abs(R.determinant()) == 1
    d = snf.invariant_factors
    nonzero = [x for x in d if x]
    assert d[:len(nonzero)] == tuple(nonzero)
    assert all(x > 0 for x in nonzero)
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    return snf


@pytest.mark.parametrize("rows, expected", [
    ([[1, 0], [0, 1]], (1, 1)),
    ([[2, 0], [0, 3]], (1, 6)),
    ([[2, 0], [0, 2]], (2, 2)),
])
def test_smith_examples(rows, expected):
    snf = check_decomposition(IntMatrix.from_rows(rows))
    assert snf.invariant_factors == expected
    assert list(expected) == determinantal_invariants(rows, 2)


def test_cokernel_examples():
    for n in range(2, 10):
        c = cokernel_invariants(IntMatrix.from_rows([[n]]))
        assert (c.torsion, c.free_rank) == ((n,), 0)
    c = cokernel_invariants(IntMatrix.zeros(1, 2))
    assert (c.torsion, c.free_rank) == ((), 2)
    # relations 5x, 5y, x - (x + y) in generators x, y
    c = cokernel_invariants(IntMatrix.from_rows([[5, 0], [0, 5], [0, -1]]))
    assert (c.torsion, c.free_rank) == ((5,), 0)


def test_empty_matrices():
    c = cokernel_invariants(IntMatrix.zeros(0, 3))
    assert (c.torsion, c.free_rank) == ((), 3)
    assert smith_normal_form(IntMatrix.zeros(2, 0)).invariant_factors == ()


def test_determinant_matches_permutation_expansion():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 5)
        rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert IntMatrix.from_rows(rows).determinant() == det_by_permutations(rows)


@settings(max_examples=300, deadline=None)
@given(small_matrices())
def test_smith_matches_determinantal_divisors(rows):
    M = IntMatrix.from_rows(rows)
    snf = check_decomposition(M)
    assert list(snf.invariant_factors) == determinantal_invariants(rows, M.cols)


def test_random_six_by_six_transforms_are_unimodular():
    rng = random.Random(2024)
    for _ in range(100):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        M = IntMatrix.from_rows([[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)])
        check_decomposition(M)


@settings(max_examples=200, deadline=None)
@given(small_matrices(), st.randoms(use_true_random=False))
def test_factors_invariant_under_shuffles_and_negation(rows, rnd):
    base = smith_normal_form(IntMatrix.from_rows(rows)).invariant_factors
    rows2 = [list(r) for r in rows]
    rnd.shuffle(rows2)
    perm = list(range(len(rows2[0])))
    rnd.shuffle(perm)
    rows2 = [[r[j] for j in perm] for r in rows2]
    rows2[0] = [-x for x in rows2[0]]
    assert smith_normal_form(IntMatrix.from_rows(rows2)).invariant_factors == base


def test_shape_validation():
    with pytest.raises(ValueError):
        IntMatrix(2, 2, (1, 2, 3))
    with pytest.raises(ValueError):
        IntMatrix.from_rows([[1, 2], [3]])
