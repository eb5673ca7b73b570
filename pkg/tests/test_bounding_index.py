import pytest

from lensbound.bounding_index import (
    CircleSurgery,
    Closed4,
    FreeQuotient,
    GlueBoundaryPair,
    RemoveBalls,
    chib_lower_bound,
    d_min_divisor,
    euler_ledger,
    is_prime,
    ob_lens_prime,
    step_from_json,
    step_to_json,
)
from lensbound.errors import (
    InvalidLedger,
    NonDivisible,
    NotPrime,
    PrimeTooSmall,
    UnsupportedOrder,
)
from lensbound.lens import LensSpace
from lensbound.zmod import units
from oracles import divisors_at_least_three, primes_up_to

CONSTRUCTION = [Closed4(3), RemoveBalls(3), FreeQuotient(5), GlueBoundaryPair(), CircleSurgery()]


def test_is_prime_matches_sieve():
    primes = set(primes_up_to(2000))
    assert all(is_prime(n) == (n in primes) for n in range(-3, 2001))


@pytest.mark.parametrize("p, expected", [(5, 4), (7, 3), (11, 5), (13, 3)])
def test_d_min_divisor_examples(p, expected):
    assert d_min_divisor(p) == expected


def test_d_min_divisor_errors():
    with pytest.raises(NotPrime):
        d_min_divisor(9)
    with pytest.raises(PrimeTooSmall):
        d_min_divisor(3)


def test_d_min_divisor_properties():
    for p in primes_up_to(1000):
        if p < 5:
            continue
        d = d_min_divisor(p)
        assert (p - 1) % d == 0 and d >= 3
        assert d == divisors_at_least_three(p - 1)[0]
        assert (d == 3) == (p % 3 == 1)


def test_ob_lens_prime():
    assert ob_lens_prime(LensSpace(5, 1)) == 4
    assert ob_lens_prime(LensSpace(7, 3)) == 3
    assert ob_lens_prime(LensSpace(13, 2)) == 3
    for p in primes_up_to(97):
        if p >= 5:
            assert len({ob_lens_prime(LensSpace(p, q)) for q in units(p)}) == 1
    for n in (2, 3, 4, 9, 15):
        with pytest.raises(UnsupportedOrder):
            ob_lens_prime(LensSpace(n, 1))


@pytest.mark.parametrize("L, expected", [(LensSpace(5, 1), 2), (LensSpace(4, 1), 1), (LensSpace(7, 2), 2)])
def test_chib_lower_bound(L, expected):
    assert chib_lower_bound(L) == expected


def test_euler_ledger_examples():
    assert euler_ledger(CONSTRUCTION) == 2
    assert euler_ledger([Closed4(-7)]) == -7
    assert euler_ledger([Closed4(4), FreeQuotient(2)]) == 2


def test_euler_ledger_glue_insertion_invariant():
    for i in range(1, len(CONSTRUCTION) + 1):
        steps = CONSTRUCTION[:i] + [GlueBoundaryPair()] + CONSTRUCTION[i:]
        assert euler_ledger(steps) == 2


def test_euler_ledger_errors():
    with pytest.raises(NonDivisible):
        euler_ledger([Closed4(3), FreeQuotient(2)])
    with pytest.raises(InvalidLedger):
        euler_ledger([RemoveBalls(1)])
    with pytest.raises(InvalidLedger):
        euler_ledger([])
    with pytest.raises(InvalidLedger):
        euler_ledger([Closed4(2), Closed4(2)])
    with pytest.raises(InvalidLedger):
        RemoveBalls(0)
    with pytest.raises(InvalidLedger):
        FreeQuotient(0)


def test_step_json_round_trip():
    for step in CONSTRUCTION:
        assert step_from_json(step_to_json(step)) == step
    assert step_from_json("CircleSurgery") == CircleSurgery()
    with pytest.raises(InvalidLedger):
        step_from_json({"kind": "Handle"})
    with pytest.raises(InvalidLedger):
        step_from_json({"kind": "Closed4", "chi": "3"})
