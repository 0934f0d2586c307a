"""Simply-laced root systems, Weyl group elements, and closed root subsets.

Positive roots are integer coordinate vectors over the simple roots, paired
by the (symmetric) Cartan matrix normalized so every root has self-pairing 2.
This keeps all arithmetic integral and uniform across the A, D, E families
and directly exposes heights and supports.

Weyl group elements are stored by their signed action on the positive roots,
which determines them uniquely; inversion sets, lengths, descents, and
reduced words all read off that table.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .budgets import enumeration_budget


class InvalidType(ValueError):
    """Family/rank combination outside A_n (n>=1), D_n (n>=4), E_6/E_7/E_8."""


class UnknownRoot(KeyError):
    """A coordinate vector that is not a positive root of this system."""


class NotClosed(ValueError):
    """A root subset violating closure under root addition."""


class TooLarge(RuntimeError):
    """An enumeration would exceed the configured budget."""


_E_CHAIN = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)]


@dataclass(frozen=True)
class TypeSpec:
    """A simply-laced diagram: family in {A, D, E} plus rank."""

    family: str
    rank: int

    def validate(self) -> "TypeSpec":
        fam, n = self.family, self.rank
        if fam == "A" and n >= 1:
            return self
        if fam == "D" and n >= 4:
            return self
        if fam == "E" and n in (6, 7, 8):
            return self
        raise InvalidType(f"no simply-laced type {fam}{n}")

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def edges(self) -> list[tuple[int, int]]:
        """Diagram edges on nodes 1..rank, Bourbaki numbering."""
        n = self.rank
        if self.family == "A":
            return [(i, i + 1) for i in range(1, n)]
        if self.family == "D":
            return [(i, i + 1) for i in range(1, n - 2)] + [(n - 2, n - 1), (n - 2, n)]
        return [(2, 4)] + [e for e in _E_CHAIN if e[1] <= n]

    def positive_root_count(self) -> int:
        n = self.rank
        if self.family == "A":
            return n * (n + 1) // 2
        if self.family == "D":
            return n * (n - 1)
        return {6: 36, 7: 63, 8: 120}[n]


def cartan_matrix(spec: TypeSpec) -> list[list[int]]:
    n = spec.rank
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in spec.edges():
        c[i - 1][j - 1] = -1
        c[j - 1][i - 1] = -1
    return c


class RootSystem:
    """The positive roots of a fixed ADE type with all derived tables.

    Immutable after ``build``; every query is pure.  Roots are indexed
    0..num_roots-1 in (height, lexicographic-coordinate) order, and that
    index order is the matrix index order everywhere downstream.
    """

    def __init__(self, spec: TypeSpec, cartan, roots):
        self.spec = spec
        self.rank = spec.rank
        self.cartan = cartan
        self.roots: tuple[tuple[int, ...], ...] = roots
        self.num_roots = len(roots)
        self.index = {r: i for i, r in enumerate(roots)}
        self.heights = tuple(sum(r) for r in roots)
        self.supports = tuple(
            frozenset(k + 1 for k, c in enumerate(r) if c) for r in roots
        )
        self.simple_index = {k: self.index[_unit(self.rank, k)] for k in range(1, self.rank + 1)}
        self._inner = self._pairing_table()
        self._sum_index = self._sum_table()
        self._reflections = self._reflection_tables()
        self._below = self._dominance_lists()
        self._closure_triples = tuple(
            (i, j, k)
            for (i, j), k in self._sum_index.items()
            if i < j
        )
        self._identity: WeylElement | None = None
        self._simples: dict[int, WeylElement] = {}
        self._w0: WeylElement | None = None
        self._weyl: tuple[WeylElement, ...] | None = None
        self._check_build()

    # -- construction --------------------------------------------------------

    @classmethod
    def build(cls, spec: TypeSpec) -> "RootSystem":
        spec.validate()
        n = spec.rank
        cartan = cartan_matrix(spec)

        def pair_with_simple(coords: tuple[int, ...], k: int) -> int:
            col = cartan[k]
            return sum(c * col[i] for i, c in enumerate(coords) if c)

        found = {_unit(n, k) for k in range(1, n + 1)}
        frontier = list(found)
        while frontier:
            fresh = []
            for beta in frontier:
                for k in range(n):
                    if pair_with_simple(beta, k) == -1:
                        gamma = list(beta)
                        gamma[k] += 1
                        gamma = tuple(gamma)
                        if gamma not in found:
                            found.add(gamma)
                            fresh.append(gamma)
            frontier = fresh
        roots = tuple(sorted(found, key=lambda r: (sum(r), r)))
        return cls(spec, cartan, roots)

    def _pairing_table(self) -> list[list[int]]:
        n, c = self.rank, self.cartan
        paired = [
            tuple(sum(r[i] * c[i][j] for i in range(n) if r[i]) for j in range(n))
            for r in self.roots
        ]
        return [
            [sum(p[i] * s[i] for i in range(n) if s[i]) for s in self.roots]
            for p in paired
        ]

    def _sum_table(self) -> dict[tuple[int, int], int]:
        out = {}
        for i, a in enumerate(self.roots):
            for j, b in enumerate(self.roots):
                if i <= j:
                    s = tuple(x + y for x, y in zip(a, b))
                    k = self.index.get(s)
                    if k is not None:
                        out[(i, j)] = k
                        out[(j, i)] = k
        return out

    def _reflection_tables(self) -> dict[int, tuple[tuple[int, int], ...]]:
        out = {}
        for k in range(1, self.rank + 1):
            sk = self.simple_index[k]
            table = []
            for i, beta in enumerate(self.roots):
                if i == sk:
                    table.append((sk, -1))
                    continue
                ip = self._inner[sk][i]
                gamma = list(beta)
                gamma[k - 1] -= ip
                table.append((self.index[tuple(gamma)], 1))
            out[k] = tuple(table)
        return out

    def _dominance_lists(self) -> tuple[tuple[int, ...], ...]:
        # below[j] = indices of roots <= root j in the coordinatewise order
        out = []
        for b in self.roots:
            out.append(
                tuple(i for i, g in enumerate(self.roots) if all(x <= y for x, y in zip(g, b)))
            )
        return tuple(out)

    def _check_build(self) -> None:
        assert self.num_roots == self.spec.positive_root_count()
        for i in range(self.num_roots):
            assert self._inner[i][i] == 2
            for j in range(i):
                v = self._inner[i][j]
                assert v == self._inner[j][i] and -1 <= v <= 1
        # every non-simple positive root admits a simple root pairing to 1,
        # which the triangular-matrix construction relies on
        for i in range(self.num_roots):
            if self.heights[i] > 1:
                assert any(
                    self.inner_simple(k, i) == 1 for k in range(1, self.rank + 1)
                ), f"no descent direction at root {self.roots[i]}"

    # -- scalar queries --------------------------------------------------------

    def inner(self, i: int, j: int) -> int:
        """Pairing of two positive roots by index, normalized to (b, b) = 2."""
        return self._inner[i][j]

    def inner_simple(self, k: int, i: int) -> int:
        return self._inner[self.simple_index[k]][i]

    def cartan_entry(self, k: int, l: int) -> int:
        return self.cartan[k - 1][l - 1]

    def adjacent(self, k: int, l: int) -> bool:
        return self.cartan[k - 1][l - 1] == -1

    def height(self, i: int) -> int:
        return self.heights[i]

    def support(self, i: int) -> frozenset[int]:
        return self.supports[i]

    def root_index(self, coords: Sequence[int]) -> int:
        try:
            return self.index[tuple(coords)]
        except KeyError:
            raise UnknownRoot(f"{tuple(coords)} is not a positive root of {self.spec.name}") from None

    def reflect(self, k: int, i: int) -> tuple[int, int]:
        """Image of positive root i under the simple reflection k: (index, sign)."""
        return self._reflections[k][i]

    def shifted(self, i: int, k: int, step: int) -> int:
        """Index of root_i + step * alpha_k (UnknownRoot if not a root)."""
        coords = list(self.roots[i])
        coords[k - 1] += step
        return self.root_index(coords)

    def sum_index(self, i: int, j: int) -> int | None:
        return self._sum_index.get((i, j))

    def below(self, j: int) -> tuple[int, ...]:
        """Roots <= root j in the coordinatewise dominance order."""
        return self._below[j]

    def leq(self, i: int, j: int) -> bool:
        return all(x <= y for x, y in zip(self.roots[i], self.roots[j]))

    # -- closed subsets ----------------------------------------------------------

    def closure_defect(self, subset: frozenset[int]) -> tuple[int, int, int] | None:
        """A witness (i, j, missing_sum) if the subset is not closed, else None."""
        for i, j, k in self._closure_triples:
            if i in subset and j in subset and k not in subset:
                return (i, j, k)
        return None

    def is_closed(self, subset: frozenset[int]) -> bool:
        return self.closure_defect(subset) is None

    def require_closed(self, subset: frozenset[int]) -> None:
        defect = self.closure_defect(subset)
        if defect is not None:
            i, j, k = defect
            raise NotClosed(
                f"{self.roots[i]} + {self.roots[j]} = {self.roots[k]} missing from subset"
            )

    def closed_sets(self, budget: int | None = None) -> Iterator[frozenset[int]]:
        """All closed subsets, by brute-force filter over the power set."""
        cap = enumeration_budget(budget)
        n = self.num_roots
        if 1 << n > cap:
            raise TooLarge(f"2^{n} subsets exceed the budget {cap}")
        triples = self._closure_triples
        for mask in range(1 << n):
            ok = True
            for i, j, k in triples:
                if (mask >> i) & 1 and (mask >> j) & 1 and not (mask >> k) & 1:
                    ok = False
                    break
            if ok:
                yield frozenset(i for i in range(n) if (mask >> i) & 1)

    # -- Weyl group ---------------------------------------------------------------

    def identity_element(self) -> "WeylElement":
        if self._identity is None:
            self._identity = WeylElement(
                self, tuple((i, 1) for i in range(self.num_roots))
            )
        return self._identity

    def simple_reflection(self, k: int) -> "WeylElement":
        w = self._simples.get(k)
        if w is None:
            w = WeylElement(self, self._reflections[k])
            self._simples[k] = w
        return w

    def longest_element(self) -> "WeylElement":
        """The unique element whose inversion set is all of the positive roots."""
        if self._w0 is None:
            w = self.identity_element()
            while True:
                for k in range(1, self.rank + 1):
                    idx, sign = w.apply(self.simple_index[k])
                    if sign > 0:
                        w = w * self.simple_reflection(k)
                        break
                else:
                    break
            assert w.length() == self.num_roots
            self._w0 = w
        return self._w0

    def weyl_group(self, budget: int | None = None) -> tuple["WeylElement", ...]:
        """Every Weyl group element, by closure under the simple reflections."""
        if self._weyl is None:
            cap = enumeration_budget(budget)
            gens = [self.simple_reflection(k) for k in range(1, self.rank + 1)]
            ident = self.identity_element()
            seen = {ident.images: ident}
            frontier = [ident]
            while frontier:
                fresh = []
                for w in frontier:
                    for g in gens:
                        x = w * g
                        if x.images not in seen:
                            if len(seen) >= cap:
                                raise TooLarge(f"Weyl group exceeds the budget {cap}")
                            seen[x.images] = x
                            fresh.append(x)
                frontier = fresh
            self._weyl = tuple(seen.values())
        return self._weyl

    def __repr__(self) -> str:
        return f"RootSystem({self.spec.name}, {self.num_roots} positive roots)"


def _unit(n: int, k: int) -> tuple[int, ...]:
    return tuple(1 if i == k - 1 else 0 for i in range(n))


class WeylElement:
    """A Coxeter group element, stored by its signed action on positive roots.

    ``images[i] = (j, sign)`` means the element maps root i to sign * root j.
    The action on the whole root system (hence the element itself) is
    determined by this table, so equality and hashing use it directly.
    """

    __slots__ = ("rs", "images", "_word", "_hash")

    def __init__(self, rs: RootSystem, images: tuple[tuple[int, int], ...]):
        self.rs = rs
        self.images = images
        self._word: tuple[int, ...] | None = None
        self._hash: int | None = None

    def apply(self, i: int) -> tuple[int, int]:
        return self.images[i]

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        assert self.rs is other.rs
        mine = self.images
        out = []
        for m, s2 in other.images:
            p, s1 = mine[m]
            out.append((p, s1 * s2))
        return WeylElement(self.rs, tuple(out))

    def inverse(self) -> "WeylElement":
        inv: list[tuple[int, int]] = [(0, 0)] * len(self.images)
        for j, (m, s) in enumerate(self.images):
            inv[m] = (j, s)
        return WeylElement(self.rs, tuple(inv))

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.images == other.images

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.images)
        return self._hash

    def is_identity(self) -> bool:
        return all(s > 0 and j == i for i, (j, s) in enumerate(self.images))

    def inversion_set(self) -> frozenset[int]:
        """Positive roots sent negative by the inverse element."""
        return frozenset(j for j, s in self.images if s < 0)

    def length(self) -> int:
        return sum(1 for _, s in self.images if s < 0)

    def reduced_word(self) -> tuple[int, ...]:
        """The lexicographically smallest reduced word, by greedy descent."""
        if self._word is None:
            rs = self.rs
            word: list[int] = []
            w = self
            winv = self.inverse()
            while True:
                for k in range(1, rs.rank + 1):
                    if winv.images[rs.simple_index[k]][1] < 0:
                        word.append(k)
                        rk = rs.simple_reflection(k)
                        w = rk * w
                        winv = winv * rk
                        break
                else:
                    break
            assert w.is_identity()
            self._word = tuple(word)
        return self._word

    def weak_leq(self, other: "WeylElement") -> bool:
        """Weak-order comparison, decided on inversion sets."""
        return self.inversion_set() <= other.inversion_set()

    def __repr__(self) -> str:
        word = " ".join(map(str, self.reduced_word()))
        return f"WeylElement({word or 'e'})"


def weyl_from_word(rs: RootSystem, word: Sequence[int]) -> WeylElement:
    """Product of simple reflections, leftmost factor applied last."""
    w = rs.identity_element()
    for k in word:
        w = w * rs.simple_reflection(k)
    return w


def max_inversion_subset(rs: RootSystem, closed: frozenset[int]) -> WeylElement:
    """The element whose inversion set is the largest one inside ``closed``.

    Greedy ascent: while some w(alpha_k) is a positive root lying in the
    subset, extend w by that reflection.  The family of inversion sets inside
    a closed set is directed, so the greedy walk reaches its unique maximum.
    """
    rs.require_closed(closed)
    w = rs.identity_element()
    progress = True
    while progress:
        progress = False
        for k in range(1, rs.rank + 1):
            idx, sign = w.apply(rs.simple_index[k])
            if sign > 0 and idx in closed:
                w = w * rs.simple_reflection(k)
                progress = True
                break
    return w
