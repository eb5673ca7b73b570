"""Finite presentations, the sigma(G) HNN construction, metacyclic groups
``Z_p x|_u Z_d`` and the homology of cyclic groups.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Any, Iterator, Sequence

from .errors import EvenDegree, IncompatibleTwist, LensboundError, NotAUnit, NotPrime
from .intmat import IntMatrix, smith_normal_form

Word = tuple[int, ...]


@dataclass(frozen=True)
class FinitePresentation:
    """Generators and relators; letter ``+i`` is generator ``i - 1``, ``-i`` its inverse."""

    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        gens = tuple(self.generators)
        if len(set(gens)) != len(gens):
            raise LensboundError(f"duplicate generator names in {gens}")
        rels = tuple(tuple(int(x) for x in r) for r in self.relators)
        for r in rels:
            for x in r:
                if x == 0 or abs(x) > len(gens):
                    raise LensboundError(f"letter {x} out of range for {len(gens)} generators")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", rels)

    def word_str(self, word: Word) -> str:
        if not word:
            return "1"
        return " ".join(self.generators[x - 1] if x > 0 else self.generators[-x - 1] + "^-1"
                        for x in word)

    def __str__(self) -> str:
        rels = ", ".join(self.word_str(r) for r in self.relators)
        return f"< {', '.join(self.generators)} | {rels} >"

    @classmethod
    def from_json(cls, obj: dict[str, Any]) -> "FinitePresentation":
        """Decode ``{"gens": ["a"], "rels": [["a", "a", "A"]]}``.

        The case-swapped name (``"A"`` for ``"a"``) denotes the inverse letter.
        """
        try:
            gens = [str(g) for g in obj["gens"]]
            raw_rels = obj.get("rels", [])
        except (KeyError, TypeError, AttributeError) as exc:
            raise LensboundError(f"expected {{'gens': [...], 'rels': [[...], ...]}}, got {obj!r}") from exc
        index = {g: i + 1 for i, g in enumerate(gens)}
        for g in gens:
            inv = g.swapcase()
            if inv == g or inv in index:
                raise LensboundError(f"generator name {g!r} has no distinct inverse letter")
            index[inv] = -index[g]
        rels = []
        for r in raw_rels:
            try:
                rels.append(tuple(index[letter] for letter in r))
            except KeyError as exc:
                raise LensboundError(f"unknown letter {exc.args[0]!r} in relator {r!r}") from exc
        return cls(tuple(gens), tuple(rels))

    def to_json(self) -> dict[str, Any]:
        def letter(x):
            g = self.generators[abs(x) - 1]
            return g if x > 0 else g.swapcase()
        return {"gens": list(self.generators),
                "rels": [[letter(x) for x in r] for r in self.relators]}


def cyclic_presentation(n: int, name: str = "a") -> FinitePresentation:
    return FinitePresentation((name,), ((1,) * n,))


def _inverse(word: Word) -> Word:
    return tuple(-x for x in reversed(word))


def sigma_presentation(P: FinitePresentation) -> FinitePresentation:
    """Presentation of ``sigma(G) = <G x G, t | t (g,1) t^-1 = (g,g)>``.

    The HNN relation is imposed on generators only.  Generators are two
    copies ``x``, ``y`` of those of ``P`` (suffixed by index when ``P`` has
    more than one) followed by the stable letter ``t``.
    """
    k = len(P.generators)
    if k == 1:
        xs, ys = ["x"], ["y"]
    else:
        xs = [f"x{i + 1}" for i in range(k)]
        ys = [f"y{i + 1}" for i in range(k)]
    x = lambda i: i + 1  # noqa: E731
    y = lambda i: k + i + 1  # noqa: E731
    t = 2 * k + 1

    def relabel(word, shift):
        return tuple(a + shift if a > 0 else a - shift for a in word)

    rels: list[Word] = []
    rels += [relabel(r, 0) for r in P.relators]
    rels += [relabel(r, k) for r in P.relators]
    rels += [(x(i), y(j), -x(i), -y(j)) for i in range(k) for j in range(k)]
    rels += [(t, x(i), -t) + _inverse((x(i), y(i))) for i in range(k)]
    return FinitePresentation(tuple(xs + ys + ["t"]), tuple(rels))


def exponent_matrix(P: FinitePresentation) -> IntMatrix:
    """Exponent sums: one row per relator, one column per generator."""
    g = len(P.generators)
    rows = []
    for r in P.relators:
        row = [0] * g
        for a in r:
            row[abs(a) - 1] += 1 if a > 0 else -1
        rows.append(row)
    return IntMatrix.from_rows(rows, g)


@dataclass(frozen=True)
class Abelianization:
    """``Z_{t1} + ... + Z_{tk} + Z^free_rank`` with the image of every generator.

    ``images[name]`` lists coordinates: one residue per torsion factor, then
    one integer per free summand.
    """

    torsion: tuple[int, ...]
    free_rank: int
    images: dict[str, tuple[int, ...]]

    def is_trivial_image(self, name: str) -> bool:
        return not any(self.images[name])

    def __str__(self) -> str:
        parts = [f"Z_{t}" for t in self.torsion] + ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "0"


def abelianization(P: FinitePresentation) -> Abelianization:
    M = exponent_matrix(P)
    snf = smith_normal_form(M)
    d = snf.invariant_factors
    g = M.cols
    R = snf.right_transform
    diag = [d[i] if i < len(d) else 0 for i in range(g)]
    torsion_cols = [i for i in range(g) if diag[i] > 1]
    free_cols = [i for i in range(g) if diag[i] == 0]
    images = {}
    for j, name in enumerate(P.generators):
        coords = [R[j, i] % diag[i] for i in torsion_cols] + [R[j, i] for i in free_cols]
        images[name] = tuple(coords)
    return Abelianization(tuple(diag[i] for i in torsion_cols), len(free_cols), images)


Element = tuple[int, int]


@dataclass(frozen=True)
class ConcreteMetacyclic:
    """``Z_p x|_u Z_d`` on pairs ``(a mod p, b mod d)``.

    ``(a1, b1) * (a2, b2) = (a1 + u**b1 * a2, b1 + b2)``, i.e. the generator
    ``(0, 1)`` conjugates ``(1, 0)`` to its ``u``-th power.
    """

    p: int
    u: int
    d: int

    def __post_init__(self):
        if self.p < 2 or self.d < 1:
            raise LensboundError(f"need p >= 2 and d >= 1, got p={self.p}, d={self.d}")
        if gcd(self.u, self.p) != 1:
            raise NotAUnit(f"twist {self.u} is not a unit mod {self.p}")
        if pow(self.u, self.d, self.p) != 1:
            raise IncompatibleTwist(f"{self.u}^{self.d} is not 1 mod {self.p}")
        object.__setattr__(self, "u", self.u % self.p)

    @property
    def order(self) -> int:
        return self.p * self.d

    @property
    def identity(self) -> Element:
        return (0, 0)

    def element(self, a: int, b: int) -> Element:
        return (a % self.p, b % self.d)

    def elements(self) -> Iterator[Element]:
        for a in range(self.p):
            for b in range(self.d):
                yield (a, b)

    def mul(self, g: Element, h: Element) -> Element:
        return ((g[0] + pow(self.u, g[1], self.p) * h[0]) % self.p, (g[1] + h[1]) % self.d)

    def inv(self, g: Element) -> Element:
        b = (-g[1]) % self.d
        return ((-pow(self.u, b, self.p) * g[0]) % self.p, b)

    def power(self, g: Element, e: int) -> Element:
        if e < 0:
            g, e = self.inv(g), -e
        out = self.identity
        for _ in range(e):
            out = self.mul(out, g)
        return out

    def is_abelian(self) -> bool:
        return self.u == 1 % self.p

    def is_normal(self, subgroup: Sequence[Element]) -> bool:
        H = set(subgroup)
        return all(self.mul(self.mul(g, h), self.inv(g)) in H for g in self.elements() for h in H)

    def rotation_subgroup(self) -> list[Element]:
        return [(a, 0) for a in range(self.p)]

    def evaluate(self, word: Word, images: Sequence[Element]) -> Element:
        out = self.identity
        for a in word:
            g = images[abs(a) - 1]
            out = self.mul(out, g if a > 0 else self.inv(g))
        return out

    def presentation(self) -> FinitePresentation:
        """``<alpha, beta | alpha^p, beta^d, beta alpha beta^-1 alpha^-u>``."""
        return FinitePresentation(
            ("alpha", "beta"),
            ((1,) * self.p, (2,) * self.d, (2, 1, -2) + (-1,) * self.u),
        )

    def satisfies(self, P: FinitePresentation, images: Sequence[Element]) -> bool:
        return all(self.evaluate(r, images) == self.identity for r in P.relators)


def semidirect_group(p: int, u: int, d: int) -> ConcreteMetacyclic:
    return ConcreteMetacyclic(p, u, d)


def element_order(G: ConcreteMetacyclic, g: Element) -> int:
    g = G.element(*g)
    e, h = 1, g
    while h != G.identity:
        h = G.mul(h, g)
        e += 1
    return e


def multiplicative_order(u: int, n: int) -> int:
    if gcd(u, n) != 1:
        raise NotAUnit(f"{u} is not a unit mod {n}")
    e, x = 1, u % n
    while x != 1 % n:
        x = x * u % n
        e += 1
    return e


@dataclass(frozen=True)
class CyclicHomologyEntry:
    """``H_k(Z_n; Z)``; ``order`` is 0 for Z, n for Z_n and 1 for the trivial group."""

    degree: int
    order: int

    def __str__(self) -> str:
        if self.order == 0:
            return "Z"
        if self.order == 1:
            return "0"
        return f"Z_{self.order}"


def cyclic_homology(n: int, k: int) -> CyclicHomologyEntry:
    if n < 2 or k < 0:
        raise LensboundError(f"need n >= 2 and k >= 0, got n={n}, k={k}")
    if k == 0:
        return CyclicHomologyEntry(k, 0)
    return CyclicHomologyEntry(k, n if k % 2 else 1)


def power_map_action_on_H(n: int, u: int, k: int) -> int:
    """Multiplier of ``alpha -> alpha**u`` on ``H_k(Z_n) = Z_n`` for odd ``k``.

    Equals ``u**((k + 1) // 2)``.  Degrees 1 and 3 are the established cases;
    higher odd degrees follow the same pattern (see :func:`is_extrapolated_degree`).
    """
    if k < 1 or k % 2 == 0:
        raise EvenDegree(f"H_{k}(Z_{n}) is not Z_n; need an odd degree")
    if gcd(u, n) != 1:
        raise NotAUnit(f"{u} is not a unit mod {n}")
    return pow(u, (k + 1) // 2, n)


def is_extrapolated_degree(k: int) -> bool:
    return k > 3


def i3_trivial_in_semidirect(p: int, u: int, d: int) -> bool:
    """Sufficient test that ``Z_p -> Z_p x|_u Z_d`` is zero on ``H_3``.

    Conjugation by the ``Z_d`` generator is inner, hence trivial on homology,
    yet multiplies ``H_3(Z_p)`` by ``u**2``; so ``u**2 != 1`` kills the image.
    ``False`` means the test is inconclusive.
    """
    from .bounding_index import is_prime

    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    semidirect_group(p, u, d)
    return pow(u, 2, p) != 1
