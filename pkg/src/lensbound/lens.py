"""Oriented lens spaces, degree sets of pi_1-isomorphic maps, homotopy type.

A lens space ``L(n, q)`` carries its orientation in the residue ``q``:
reversing orientation negates ``q`` mod ``n``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Optional

from .errors import LensboundError, ModulusMismatch
from .zmod import Residue, mod_inv, unit_squares, units

_LITERAL = re.compile(r"^\s*L\s*\(\s*(\d+)\s*,\s*([+-]?\s*\d+)\s*\)\s*$")


@dataclass(frozen=True, order=True)
class LensSpace:
    n: int
    q: int

    def __post_init__(self):
        n, q = int(self.n), int(self.q)
        if n < 2:
            raise LensboundError(f"lens space order must be >= 2, got {n}")
        if gcd(q, n) != 1:
            raise LensboundError(f"q = {q} is not coprime to n = {n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "q", q % n)

    @classmethod
    def parse(cls, text: str) -> "LensSpace":
        """Parse the literal form ``L(n,q)``; ``q`` may carry a sign."""
        m = _LITERAL.match(text)
        if not m:
            raise LensboundError(f"not a lens space literal: {text!r}")
        return cls(int(m.group(1)), int(m.group(2).replace(" ", "")))

    def __str__(self) -> str:
        return f"L({self.n},{self.q})"


def reverse_orientation(L: LensSpace) -> LensSpace:
    return LensSpace(L.n, -L.q)


def canonical_form(L: LensSpace) -> LensSpace:
    """Representative ``L(n, min(q, q^-1))`` of the oriented homeomorphism class."""
    return LensSpace(L.n, min(L.q, mod_inv(L.q, L.n)))


@dataclass(frozen=True)
class DegreeSet:
    modulus: int
    residues: frozenset[Residue]

    def __contains__(self, d: object) -> bool:
        if not isinstance(d, int):
            return False
        return d % self.modulus in self.residues

    def __iter__(self):
        return iter(sorted(self.residues))

    def __len__(self) -> int:
        return len(self.residues)


def _same_order(L1: LensSpace, L2: LensSpace) -> int:
    if L1.n != L2.n:
        raise ModulusMismatch(
            f"{L1} and {L2} have different fundamental groups; no pi_1-isomorphic map exists"
        )
    return L1.n


def degree_set(L1: LensSpace, L2: LensSpace) -> DegreeSet:
    """Residues mod n of degrees of pi_1-isomorphic maps ``L1 -> L2``.

    These are the classes ``q1 * q2 * s`` with ``s`` a unit square mod n.
    """
    n = _same_order(L1, L2)
    qq = L1.q * L2.q
    return DegreeSet(n, frozenset(Residue(qq * s, n) for s in unit_squares(n)))


def contains_degree(L1: LensSpace, L2: LensSpace, d: int) -> bool:
    return d in degree_set(L1, L2)


@dataclass(frozen=True)
class HomotopyVerdict:
    equivalent: bool
    witness: Optional[tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.equivalent


def homotopy_equivalent_oriented(L1: LensSpace, L2: LensSpace) -> HomotopyVerdict:
    """Decide whether an orientation-preserving homotopy equivalence exists.

    Looks for units with ``q1 * x1**2 == q2 * x2**2 (mod n)``.  Any solution
    rescales to one with ``x2 = 1``, so ``x2`` is the outer loop and the
    witness is the first hit in (x2, x1) order.
    """
    if L1.n != L2.n:
        return HomotopyVerdict(False)
    n = L1.n
    us = units(n)
    for x2 in us:
        target = L2.q * x2 * x2 % n
        for x1 in us:
            if L1.q * x1 * x1 % n == target:
                return HomotopyVerdict(True, (x1, x2))
    return HomotopyVerdict(False)
