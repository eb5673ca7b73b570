"""Diagonal Z_n actions on CP^2 with isolated fixed points.

The generator acts by ``[z1 : z2 : z3] -> [w^a1 z1 : w^a2 z2 : w^a3 z3]``
with ``w = exp(2 pi i / n)``.  At the fixed point ``P_i`` the action on
the tangent space has weights ``(a_j - a_i, a_k - a_i)`` with
``(j, k) = (i + 1, i + 2) mod 3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Any

from .cobordism import BoundaryProblem, CobordismWitness, pi1_cobound
from .errors import LensboundError, NonIsolated, TheoremViolation
from .lens import LensSpace
from .zmod import mod_inv


@dataclass(frozen=True)
class WeightedCP2Action:
    n: int
    weights: tuple[int, int, int]

    def __post_init__(self):
        n = int(self.n)
        if n < 2:
            raise LensboundError(f"need n >= 2, got {n}")
        w = tuple(int(a) % n for a in self.weights)
        if len(w) != 3:
            raise LensboundError(f"need exactly three weights, got {len(w)}")
        for i in range(3):
            for j in range(i + 1, 3):
                if gcd(w[j] - w[i], n) != 1:
                    raise NonIsolated(
                        f"weights {w[i]} and {w[j]} differ by a non-unit mod {n}; "
                        "fixed points are not isolated or the action is not free on linking spheres"
                    )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "weights", w)

    @classmethod
    def from_json(cls, obj: dict[str, Any]) -> "WeightedCP2Action":
        try:
            return cls(obj["n"], tuple(obj["weights"]))
        except (KeyError, TypeError) as exc:
            raise LensboundError(f"expected {{'n': int, 'weights': [a1, a2, a3]}}, got {obj!r}") from exc

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "weights": list(self.weights)}

    def local_weights(self, i: int) -> tuple[int, int]:
        a, n = self.weights, self.n
        return ((a[(i + 1) % 3] - a[i]) % n, (a[(i + 2) % 3] - a[i]) % n)


def fixed_point_types(A: WeightedCP2Action) -> list[LensSpace]:
    """Orbit types of the linking spheres of the three fixed points."""
    types = []
    for i in range(3):
        w1, w2 = A.local_weights(i)
        types.append(LensSpace(A.n, w2 * mod_inv(w1, A.n)))
    return types


def orbifold_boundary(A: WeightedCP2Action) -> BoundaryProblem:
    # The quotient's boundary sees each linking sphere with reversed orientation.
    return BoundaryProblem(A.n, tuple(-L.q for L in fixed_point_types(A)))


def verify_action_consistency(A: WeightedCP2Action) -> CobordismWitness:
    problem = orbifold_boundary(A)
    witness = pi1_cobound(problem)
    if witness is None:
        raise TheoremViolation(
            f"fixed-point types of {A} admit no cobordism witness for boundary {problem}"
        )
    return witness
