"""Exit criteria.  Every check is exact; each prints a PASS/FAIL line in the summary."""

import random
import time
from math import gcd

import pytest

from conftest import record_criterion
from lensbound import (
    BoundaryProblem,
    CircleSurgery,
    Closed4,
    FreeQuotient,
    GlueBoundaryPair,
    IntMatrix,
    LensSpace,
    RemoveBalls,
    WeightedCP2Action,
    abelianization,
    brute_force_cobound,
    canonical_form,
    chib_lower_bound,
    contains_degree,
    cyclic_presentation,
    d_min_divisor,
    degree_set,
    euler_ledger,
    fixed_point_types,
    homotopy_equivalent_oriented,
    i3_trivial_in_semidirect,
    ob_lens_prime,
    orbifold_boundary,
    pi1_cobordant_pair,
    pi1_cobound,
    power_map_action_on_H,
    semidirect_group,
    sigma_presentation,
    smith_normal_form,
    verify_action_consistency,
)
from lensbound.errors import TheoremViolation
from lensbound.groups import multiplicative_order
from lensbound.zmod import units
from oracles import divisors_at_least_three, primes_up_to

TIME_LIMIT = 5.0


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line and enforce the time limit."""
    name = request.node.get_closest_marker("criterion").args[0]
    start = time.perf_counter()
    state = {"ok": False}
    yield state
    elapsed = time.perf_counter() - start
    passed = state["ok"] and elapsed < TIME_LIMIT
    record_criterion(name, passed, f"{elapsed:.2f}s")
    assert elapsed < TIME_LIMIT, f"{name} took {elapsed:.2f}s"


@pytest.mark.criterion("1 worked example: CP^2 action mod 5 end to end")
def test_worked_example(criterion):
    A = WeightedCP2Action(5, (4, 0, 1))
    canon = [canonical_form(L) for L in fixed_point_types(A)]
    # L(5,2), L(5,-1), L(5,2)
    assert canon == [LensSpace(5, 2), LensSpace(5, -1), LensSpace(5, 2)]
    boundary = orbifold_boundary(A)
    assert boundary.q == (3, 1, 2)
    # L(5,-2) u L(5,1) u L(5,-2), up to oriented homeomorphism
    assert [canonical_form(L) for L in boundary.lens_spaces()] == [
        canonical_form(LensSpace(5, -2)), LensSpace(5, 1), canonical_form(LensSpace(5, -2))]
    assert pi1_cobound(boundary) is not None
    assert pi1_cobound(BoundaryProblem(5, (-2, 1, -2))) is not None
    assert semidirect_group(5, 2, 4).order == 20
    assert ob_lens_prime(LensSpace(5, 1)) == 4
    steps = [Closed4(3), RemoveBalls(3), FreeQuotient(5), GlueBoundaryPair(), CircleSurgery()]
    assert euler_ledger(steps) == 2
    assert chib_lower_bound(LensSpace(5, 1)) == 2
    criterion["ok"] = True


@pytest.mark.criterion("2 cobordant pairs coincide with oriented homotopy equivalence, n <= 30")
def test_cobordism_equals_homotopy(criterion):
    count = 0
    for n in range(2, 31):
        spaces = [LensSpace(n, q) for q in units(n)]
        for L1 in spaces:
            for L2 in spaces:
                assert pi1_cobordant_pair(L1, L2) == bool(homotopy_equivalent_oriented(L1, L2))
                count += 1
    assert count > 0
    criterion["ok"] = True


def _check_agreement(problem):
    w = pi1_cobound(problem)
    oracle = brute_force_cobound(problem)
    assert (w is None) == (oracle is None), problem
    for witness in (w, oracle):
        if witness is not None:
            witness.verify(problem)
            assert sum(q * k * k for q, k in zip(problem.q, witness.k)) % problem.n == 0


@pytest.mark.criterion("3 dynamic programming agrees with brute force (sweep + 500 random)")
def test_oracle_equivalence(criterion):
    import itertools
    for n in range(2, 16):
        us = units(n)
        for m in range(1, 4):
            for q in itertools.product(us, repeat=m):
                _check_agreement(BoundaryProblem(n, q))
    rng = random.Random(20261016)
    for _ in range(500):
        n = rng.randint(2, 25)
        m = rng.randint(1, 4)
        _check_agreement(BoundaryProblem(n, [rng.choice(units(n)) for _ in range(m)]))
    criterion["ok"] = True


@pytest.mark.criterion("4 200 random CP^2 actions (n <= 50) all admit witnesses")
def test_actions_consistent(criterion):
    rng = random.Random(4)
    checked = 0
    while checked < 200:
        n = rng.randint(2, 50)
        a = tuple(rng.randrange(n) for _ in range(3))
        if not all(gcd(a[j] - a[i], n) == 1 for i in range(3) for j in range(i + 1, 3)):
            continue
        A = WeightedCP2Action(n, a)
        try:
            w = verify_action_consistency(A)
        except TheoremViolation:
            pytest.fail(f"no witness for {A}")
        w.verify(orbifold_boundary(A))
        checked += 1
    criterion["ok"] = True


@pytest.mark.criterion("5 degree-set structure and classical homotopy spot checks")
def test_degree_structure(criterion):
    for n in range(2, 21):
        spaces = [LensSpace(n, q) for q in units(n)]
        sets = {(a, b): degree_set(a, b) for a in spaces for b in spaces}
        for a in spaces:
            assert 1 in sets[a, a]
            for b in spaces:
                assert a.q * b.q in sets[a, b]
                for c in spaces:
                    composed = {(x * y) % n for x in sets[a, b] for y in sets[b, c]}
                    assert composed <= set(sets[a, c])
    assert homotopy_equivalent_oriented(LensSpace(7, 1), LensSpace(7, 2))
    assert not homotopy_equivalent_oriented(LensSpace(5, 1), LensSpace(5, 2))
    assert contains_degree(LensSpace(7, 1), LensSpace(7, 2), 1)
    criterion["ok"] = True


@pytest.mark.criterion("6 bounding-index divisor table for primes 5..1000")
def test_ob_table(criterion):
    for p in primes_up_to(1000):
        if p >= 5:
            assert d_min_divisor(p) == divisors_at_least_three(p - 1)[0]
    assert [d_min_divisor(p) for p in (5, 7, 11, 13)] == [4, 3, 5, 3]
    criterion["ok"] = True


@pytest.mark.criterion("7 group theory: power-map identity, metacyclic axioms, H_3 criterion")
def test_group_suite(criterion):
    for n in range(2, 51):
        for u in units(n):
            assert power_map_action_on_H(n, u, 3) == power_map_action_on_H(n, u, 1) ** 2 % n
    for p, u, d in [(5, 2, 4), (7, 2, 3), (11, 3, 5)]:
        G = semidirect_group(p, u, d)
        els = list(G.elements())
        for a in els:
            assert G.mul(a, G.inv(a)) == G.identity == G.mul(G.inv(a), a)
            for b in els:
                ab = G.mul(a, b)
                for c in els:
                    assert G.mul(ab, c) == G.mul(a, G.mul(b, c))
        assert G.is_normal(G.rotation_subgroup())
    for p in primes_up_to(97):
        if p < 5:
            continue
        d = d_min_divisor(p)
        twists = [u for u in units(p) if multiplicative_order(u, p) == d]
        assert twists
        assert all(i3_trivial_in_semidirect(p, u, d) for u in twists)
    criterion["ok"] = True


@pytest.mark.criterion("8 sigma abelianization for n <= 12 and Smith form on 1000 random matrices")
def test_sigma_and_smith(criterion):
    for n in range(2, 13):
        ab = abelianization(sigma_presentation(cyclic_presentation(n)))
        assert ab.torsion == (n,) and ab.free_rank == 1
        assert ab.is_trivial_image("y")
    rng = random.Random(8)
    for _ in range(1000):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        M = IntMatrix.from_rows([[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)])
        snf = smith_normal_form(M)
        assert snf.left_transform @ M @ snf.right_transform == snf.diagonal()
        assert abs(snf.left_transform.determinant()) == 1
        assert abs(snf.right_transform.determinant()) == 1
        d = [x for x in snf.invariant_factors if x]
        assert snf.invariant_factors[:len(d)] == tuple(d)
        assert all(b % a == 0 for a, b in zip(d, d[1:]))
    criterion["ok"] = True
