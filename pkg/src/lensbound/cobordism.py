"""pi_1-isomorphic cobordism of lens spaces with a common fundamental group.

A collection ``L(n, q_1), ..., L(n, q_m)`` pi_1-isomorphically bounds a
4-manifold exactly when there are units ``k_i`` with
``sum(q_i * k_i**2) == 0 (mod n)``.  :func:`pi1_cobound` decides this by
dynamic programming over Z/n; :func:`brute_force_cobound` is an
independent enumeration used as an oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Any, Optional, Sequence

from .errors import BudgetExceeded, InvalidWitness, LensboundError
from .lens import LensSpace, contains_degree
from .zmod import units


@dataclass(frozen=True)
class BoundaryProblem:
    n: int
    q: tuple[int, ...]

    def __post_init__(self):
        n = int(self.n)
        q = tuple(int(x) for x in self.q)
        if n < 2:
            raise LensboundError(f"modulus must be >= 2, got {n}")
        if not q:
            raise LensboundError("a boundary needs at least one lens space")
        bad = [x for x in q if gcd(x, n) != 1]
        if bad:
            raise LensboundError(f"residues {bad} are not units mod {n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "q", tuple(x % n for x in q))

    @property
    def m(self) -> int:
        return len(self.q)

    def lens_spaces(self) -> list[LensSpace]:
        return [LensSpace(self.n, x) for x in self.q]

    @classmethod
    def from_json(cls, obj: dict[str, Any]) -> "BoundaryProblem":
        try:
            return cls(obj["n"], obj["q"])
        except (KeyError, TypeError) as exc:
            raise LensboundError(f"expected {{'n': int, 'q': [int, ...]}}, got {obj!r}") from exc

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "q": list(self.q)}


@dataclass(frozen=True)
class CobordismWitness:
    """Units ``k``, integers ``x`` and degrees ``d_i = q_i k_i**2 + n x_i`` summing to 0."""

    k: tuple[int, ...]
    x: tuple[int, ...]
    degrees: tuple[int, ...]

    def verify(self, problem: BoundaryProblem) -> None:
        n, q = problem.n, problem.q
        if not (len(self.k) == len(self.x) == len(self.degrees) == len(q)):
            raise InvalidWitness("witness length does not match the problem")
        if any(gcd(k, n) != 1 for k in self.k):
            raise InvalidWitness(f"k = {self.k} contains a non-unit mod {n}")
        if sum(qi * ki * ki for qi, ki in zip(q, self.k)) % n:
            raise InvalidWitness("sum of q_i k_i^2 is not divisible by n")
        for qi, ki, xi, di in zip(q, self.k, self.x, self.degrees):
            if di != qi * ki * ki + n * xi:
                raise InvalidWitness(f"degree {di} != {qi}*{ki}^2 + {n}*{xi}")
        if sum(self.degrees) != 0:
            raise InvalidWitness(f"degrees {self.degrees} do not sum to zero")

    def to_json(self) -> dict[str, Any]:
        return {"k": list(self.k), "x": list(self.x), "degrees": list(self.degrees)}


def degree_witness(problem: BoundaryProblem, k: Sequence[int]) -> list[int]:
    """Degrees of maps ``L(n, q_i) -> L(n, 1)`` summing to zero.

    With ``sum(q_i k_i**2) = x * n`` the first degree absorbs ``-x * n``.
    """
    n, q = problem.n, problem.q
    if len(k) != len(q):
        raise InvalidWitness(f"need {len(q)} values of k, got {len(k)}")
    if any(gcd(ki, n) != 1 for ki in k):
        raise InvalidWitness(f"k = {tuple(k)} contains a non-unit mod {n}")
    terms = [qi * ki * ki for qi, ki in zip(q, k)]
    total = sum(terms)
    if total % n:
        raise InvalidWitness(f"sum {total} of q_i k_i^2 is not divisible by {n}")
    terms[0] -= total
    return terms


def _witness(problem: BoundaryProblem, k: Sequence[int]) -> CobordismWitness:
    n = problem.n
    degrees = degree_witness(problem, k)
    x = [(d - qi * ki * ki) // n for d, qi, ki in zip(degrees, problem.q, k)]
    w = CobordismWitness(tuple(k), tuple(x), tuple(degrees))
    w.verify(problem)
    for d, L in zip(degrees, problem.lens_spaces()):
        assert contains_degree(L, LensSpace(n, 1), d)
    return w


def pi1_cobound(problem: BoundaryProblem) -> Optional[CobordismWitness]:
    """Return a cobordism witness, or ``None`` when none exists.

    ``layers[i]`` is the set of sums ``q_1 k_1^2 + ... + q_i k_i^2`` mod n.
    The witness is read backwards from residue 0, taking at each term the
    smallest unit ``k_i`` whose predecessor is reachable.
    """
    n, q = problem.n, problem.q
    squares = sorted(set(k * k % n for k in units(n)))
    layers = [{0}]
    for qi in q:
        prev = layers[-1]
        layers.append({(s + qi * sq) % n for s in prev for sq in squares})
    if 0 not in layers[-1]:
        return None

    k = [0] * len(q)
    target = 0
    for i in range(len(q) - 1, -1, -1):
        for ki in units(n):
            pred = (target - q[i] * ki * ki) % n
            if pred in layers[i]:
                k[i] = ki
                target = pred
                break
    return _witness(problem, k)


DEFAULT_MAX_TERMS = 5
DEFAULT_MAX_MODULUS = 30


def brute_force_cobound(
    problem: BoundaryProblem,
    max_terms: int = DEFAULT_MAX_TERMS,
    max_modulus: int = DEFAULT_MAX_MODULUS,
) -> Optional[CobordismWitness]:
    """Full enumeration of unit tuples; the first solution in lexicographic order wins."""
    n, q = problem.n, problem.q
    if problem.m > max_terms or n > max_modulus:
        raise BudgetExceeded(
            f"enumeration over units^{problem.m} mod {n} exceeds the budget "
            f"(m <= {max_terms}, n <= {max_modulus})"
        )
    for k in itertools.product(units(n), repeat=problem.m):
        if sum(qi * ki * ki for qi, ki in zip(q, k)) % n == 0:
            return _witness(problem, k)
    return None


def pi1_cobordant_pair(L1: LensSpace, L2: LensSpace) -> bool:
    """``L1`` and ``L2`` co-bound with both inclusions pi_1-isomorphic."""
    if L1.n != L2.n:
        return False
    return pi1_cobound(BoundaryProblem(L1.n, (L1.q, -L2.q))) is not None


__all__ = [
    "BoundaryProblem",
    "CobordismWitness",
    "brute_force_cobound",
    "degree_witness",
    "pi1_cobordant_pair",
    "pi1_cobound",
]
