"""Exact arithmetic in Z/n: units, inverses and unit squares."""

from __future__ import annotations

from math import gcd, isqrt

from .errors import NotAUnit


class Residue(int):
    """An integer reduced into ``[0, modulus)`` that remembers its modulus.

    ``Residue`` is an ``int`` subclass, so it compares and hashes like its
    value: ``Residue(-2, 5) == 3``.  Arithmetic returns plain ints.
    """

    modulus: int

    def __new__(cls, value: int, modulus: int) -> "Residue":
        if modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {modulus}")
        self = super().__new__(cls, value % modulus)
        self.modulus = modulus
        return self

    @property
    def value(self) -> int:
        return int(self)

    def __repr__(self) -> str:
        return f"Residue({int(self)}, {self.modulus})"

    def __reduce__(self):
        return (Residue, (int(self), self.modulus))


def _check_modulus(n: int) -> None:
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")


def is_unit(a: int, n: int) -> bool:
    _check_modulus(n)
    return gcd(a, n) == 1


def units(n: int) -> list[int]:
    """Units of Z/n in increasing order (``[0]`` for n = 1)."""
    _check_modulus(n)
    if n == 1:
        return [0]
    return [x for x in range(1, n) if gcd(x, n) == 1]


def mod_inv(a: int, n: int) -> Residue:
    _check_modulus(n)
    if gcd(a, n) != 1:
        raise NotAUnit(f"{a} is not invertible mod {n}")
    return Residue(pow(a, -1, n), n)


def unit_squares(n: int) -> frozenset[Residue]:
    """The subgroup ``{x**2 mod n : x a unit}`` of the unit group, by enumeration."""
    return frozenset(Residue(x * x, n) for x in units(n))


def is_unit_square(a: int, n: int) -> bool:
    return a % n in unit_squares(n)


def is_perfect_square(m: int) -> bool:
    if m < 0:
        raise ValueError(f"expected a nonnegative integer, got {m}")
    r = isqrt(m)
    return r * r == m
