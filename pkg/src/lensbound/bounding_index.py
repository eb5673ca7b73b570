"""Minimal bounding index of prime-order lens spaces and Euler characteristic bookkeeping."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Union

from .errors import (
    InvalidLedger,
    LensboundError,
    NonDivisible,
    NotPrime,
    PrimeTooSmall,
    UnsupportedOrder,
)
from .lens import LensSpace
from .zmod import is_perfect_square


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def d_min_divisor(p: int) -> int:
    """Smallest divisor ``d >= 3`` of ``p - 1``."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p < 5:
        raise PrimeTooSmall(f"need p >= 5, got {p}")
    return next(d for d in range(3, p) if (p - 1) % d == 0)


def ob_lens_prime(L: LensSpace) -> int:
    """Minimal index of ``pi_1(L(p, q))`` in a 4-manifold it pi_1-injectively bounds.

    Only prime orders ``p >= 5`` are supported; the value does not depend on q.
    """
    if not is_prime(L.n) or L.n < 5:
        raise UnsupportedOrder(f"bounding index is only known for prime orders >= 5, got {L.n}")
    return d_min_divisor(L.n)


def chib_lower_bound(L: LensSpace) -> int:
    # A rational homology ball (chi = 1) forces |H_1| to be a square.
    return 1 if is_perfect_square(L.n) else 2


@dataclass(frozen=True)
class Closed4:
    chi: int


@dataclass(frozen=True)
class RemoveBalls:
    count: int

    def __post_init__(self):
        if self.count < 1:
            raise InvalidLedger(f"ball count must be positive, got {self.count}")


@dataclass(frozen=True)
class FreeQuotient:
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise InvalidLedger(f"quotient order must be positive, got {self.order}")


@dataclass(frozen=True)
class GlueBoundaryPair:
    pass


@dataclass(frozen=True)
class CircleSurgery:
    pass


ChiLedgerStep = Union[Closed4, RemoveBalls, FreeQuotient, GlueBoundaryPair, CircleSurgery]

_STEP_TYPES = {cls.__name__: cls for cls in (Closed4, RemoveBalls, FreeQuotient, GlueBoundaryPair, CircleSurgery)}
_STEP_FIELDS = {"Closed4": "chi", "RemoveBalls": "count", "FreeQuotient": "order"}


def step_from_json(obj: Any) -> ChiLedgerStep:
    """Decode ``{"kind": "FreeQuotient", "order": 5}`` style tagged unions."""
    if isinstance(obj, str):
        obj = {"kind": obj}
    if not isinstance(obj, dict) or obj.get("kind") not in _STEP_TYPES:
        raise InvalidLedger(f"unknown ledger step {obj!r}; kinds are {sorted(_STEP_TYPES)}")
    kind = obj["kind"]
    field = _STEP_FIELDS.get(kind)
    if field is None:
        return _STEP_TYPES[kind]()
    value = obj.get(field)
    if not isinstance(value, int) or isinstance(value, bool):
        raise InvalidLedger(f"{kind} needs an integer {field!r}")
    return _STEP_TYPES[kind](value)


def step_to_json(step: ChiLedgerStep) -> dict[str, Any]:
    kind = type(step).__name__
    out: dict[str, Any] = {"kind": kind}
    field = _STEP_FIELDS.get(kind)
    if field:
        out[field] = getattr(step, field)
    return out


def euler_ledger(steps: Iterable[ChiLedgerStep]) -> int:
    """Fold Euler characteristic through a cut, quotient and glue construction.

    Boundary gluing along closed 3-manifolds changes nothing (they have
    chi = 0); surgery on a circle trades ``S^1 x D^3`` (chi 0) for
    ``D^2 x S^2`` (chi 2).
    """
    steps = list(steps)
    if not steps or not isinstance(steps[0], Closed4):
        raise InvalidLedger("a ledger must start with Closed4")
    chi = steps[0].chi
    for step in steps[1:]:
        if isinstance(step, Closed4):
            raise InvalidLedger("Closed4 may only appear as the first step")
        elif isinstance(step, RemoveBalls):
            chi -= step.count
        elif isinstance(step, FreeQuotient):
            if chi % step.order:
                raise NonDivisible(f"chi = {chi} is not divisible by the quotient order {step.order}")
            chi //= step.order
        elif isinstance(step, GlueBoundaryPair):
            pass
        elif isinstance(step, CircleSurgery):
            chi += 2
        else:
            raise LensboundError(f"not a ledger step: {step!r}")
    return chi
