"""Artin monoid word machinery built on the positivity cone.

Positive words act on closed root subsets by a * action mirroring how the
evaluated generator matrices move the pieces of the positivity cone; the
greedy head of a positive word (the longest Weyl lift dividing it on the
left) is read off that action.  Charney length is computed two ways: from
the t-degree window of the representing matrix, and by an independent BFS
over products of lifted Weyl elements for cross-checking.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .budgets import enumeration_budget
from .laurent import TPoly
from .matrix import RingMatrix
from .representation import KrammerRep, t_window
from .roots import RootSystem, WeylElement, max_inversion_subset

HALF = Fraction(1, 2)


class NotInCone(ValueError):
    """A vector with a negative constant term or a negative t-power."""


class BudgetExceeded(RuntimeError):
    """A word enumeration or search would exceed the configured budget."""


class NotFound(RuntimeError):
    """BFS exhausted the requested factor count without reaching the target."""

    def __init__(self, maxlen: int):
        super().__init__(f"not expressible within {maxlen} factors")
        self.maxlen = maxlen


class NegativeLetter(ValueError):
    """A signed letter where a positive word was required."""


def check_positive_word(rs: RootSystem, word: Sequence[int]) -> None:
    for letter in word:
        if letter < 0:
            raise NegativeLetter(f"letter {letter} in a positive word")
        if not 1 <= letter <= rs.rank:
            raise ValueError(f"letter {letter} out of range 1..{rs.rank}")


def check_signed_word(rs: RootSystem, word: Sequence[int]) -> None:
    for letter in word:
        if letter == 0 or abs(letter) > rs.rank:
            raise ValueError(f"letter {letter} out of range for rank {rs.rank}")


def simple_word(w: WeylElement) -> tuple[int, ...]:
    """The positive word lifting a Weyl element into the monoid.

    Any reduced word works (they are all braid-equivalent); the
    lexicographically smallest one is returned for determinism.
    """
    return w.reduced_word()


def star_act(rs: RootSystem, k: int, closed: frozenset[int], validate: bool = True) -> frozenset[int]:
    """Action of the generator k on a closed subset of the positive roots.

    Membership of beta in the image depends on the pairing with alpha_k:
    pairing 1 needs beta - alpha_k in the input, pairing 0 needs beta itself,
    pairing -1 needs both beta and beta + alpha_k; alpha_k always joins.
    The result is again closed.
    """
    if validate:
        rs.require_closed(closed)
    alpha_k = rs.simple_index[k]
    out = {alpha_k}
    for b in range(rs.num_roots):
        ip = rs.inner_simple(k, b)
        if ip == 2:
            continue
        if ip == 1:
            if rs.reflect(k, b)[0] in closed:
                out.add(b)
        elif ip == 0:
            if b in closed:
                out.add(b)
        else:
            if b in closed and rs.reflect(k, b)[0] in closed:
                out.add(b)
    result = frozenset(out)
    if validate:
        rs.require_closed(result)
    return result


def star_act_word(rs: RootSystem, word: Sequence[int], closed: frozenset[int]) -> frozenset[int]:
    """Monoid action of a positive word: the rightmost letter acts first,
    so that (xy) * A = x * (y * A)."""
    check_positive_word(rs, word)
    rs.require_closed(closed)
    for letter in reversed(word):
        closed = star_act(rs, letter, closed, validate=False)
    return closed


def head(rs: RootSystem, word: Sequence[int]) -> WeylElement:
    """The longest Weyl lift dividing the positive word on the left.

    Computed as the maximal inversion set inside the orbit of the empty set
    under the word's * action.
    """
    return max_inversion_subset(rs, star_act_word(rs, word, frozenset()))


def is_delta_free(rs: RootSystem, word: Sequence[int]) -> bool:
    """True iff the positive word is not left-divisible by the Garside element."""
    return head(rs, word) != rs.longest_element()


# -- cone vectors -------------------------------------------------------------


def probe_vector(rs: RootSystem, marked: Iterable[int] = ()) -> list[TPoly]:
    """A generic cone vector: constant term 1 off ``marked``, a bare t on it."""
    marked = set(marked)
    t = TPoly.t_power(1)
    one = TPoly.one()
    return [t if i in marked else one for i in range(rs.num_roots)]


def classify_cone(coords: Sequence[TPoly]) -> frozenset[int]:
    """The set of coordinates with vanishing constant term.

    Raises NotInCone when any coordinate has a negative t-power or a negative
    constant term, i.e. when the vector left the cone.
    """
    out = set()
    for i, p in enumerate(coords):
        if p.has_negative_power():
            raise NotInCone(f"coordinate {i} has a negative t-power: {p}")
        c0 = p.constant_term()
        if c0 < 0:
            raise NotInCone(f"coordinate {i} has negative constant term {c0}")
        if c0 == 0:
            out.add(i)
    return frozenset(out)


def faithfulness_probe(rep: KrammerRep, word: Sequence[int], r0: Fraction = HALF) -> WeylElement:
    """Recover the head of a positive word from the representation alone.

    A generic vector with all constant terms 1 is pushed through the word at
    r = r0, the image's vanishing pattern is classified, and the maximal
    inversion set inside it is returned.  This must agree with ``head``.
    """
    rs = rep.rs
    check_positive_word(rs, word)
    if not 0 < r0 < 1:
        raise ValueError("r0 must lie strictly between 0 and 1")
    vec = probe_vector(rs)
    for letter in reversed(word):
        vec = rep.sigma_evaluated(letter, r0).apply(vec)
    return max_inversion_subset(rs, classify_cone(vec))


# -- word combinatorics ---------------------------------------------------------


def rewrite_neighbors(rs: RootSystem, word: tuple[int, ...]) -> Iterable[tuple[int, ...]]:
    """Words reachable by one defining-relation substitution."""
    for pos in range(len(word) - 1):
        a, b = word[pos], word[pos + 1]
        if a != b and not rs.adjacent(a, b):
            yield word[:pos] + (b, a) + word[pos + 2 :]
    for pos in range(len(word) - 2):
        a, b, c = word[pos], word[pos + 1], word[pos + 2]
        if a == c and a != b and rs.adjacent(a, b):
            yield word[:pos] + (b, a, b) + word[pos + 3 :]


def word_classes(
    rs: RootSystem, max_len: int, budget: int | None = None
) -> list[frozenset[tuple[int, ...]]]:
    """Partition all positive words of length <= max_len into monoid classes.

    The defining relations preserve length, so the rewrite closure inside
    each fixed length decides monoid equality exactly.
    """
    n = rs.rank
    cap = enumeration_budget(budget)
    total = sum(n**length for length in range(max_len + 1))
    if total > cap:
        raise BudgetExceeded(f"{total} words exceed the budget {cap}")
    classes: list[frozenset[tuple[int, ...]]] = []
    letters = range(1, n + 1)
    for length in range(max_len + 1):
        unseen = set(product(letters, repeat=length))
        while unseen:
            seed = unseen.pop()
            component = {seed}
            frontier = [seed]
            while frontier:
                fresh = []
                for w in frontier:
                    for v in rewrite_neighbors(rs, w):
                        if v not in component:
                            component.add(v)
                            unseen.discard(v)
                            fresh.append(v)
                frontier = fresh
            classes.append(frozenset(component))
    return classes


# -- Charney length ----------------------------------------------------------------


def charney_length(rep: KrammerRep, word: Sequence[int]) -> int:
    """Charney length from the t-degree window (lo, hi) of the image matrix:
    max(hi - lo, hi, -lo)."""
    check_signed_word(rep.rs, word)
    lo, hi = t_window(rep.rho(word))
    return max(hi - lo, hi, -lo)


def _omega_generators(rep: KrammerRep, budget: int | None) -> list[RingMatrix]:
    """Matrices of the nontrivial lifted Weyl elements and their inverses."""
    cached = rep._cache.get("omega_gens")
    if cached is None:
        gens: list[RingMatrix] = []
        seen = set()
        for w in rep.rs.weyl_group(budget):
            word = w.reduced_word()
            if not word:
                continue
            for m in (rep.rho(word), rep.rho([-k for k in reversed(word)])):
                key = m.key()
                if key not in seen:
                    seen.add(key)
                    gens.append(m)
        cached = gens
        rep._cache["omega_gens"] = cached
    return cached


def _ball_from(
    rep: KrammerRep, start: RingMatrix, radius: int, budget: int
) -> dict[tuple, int]:
    gens = _omega_generators(rep, budget)
    dist = {start.key(): 0}
    frontier = [start]
    for d in range(1, radius + 1):
        fresh = []
        for m in frontier:
            for g in gens:
                x = m * g
                key = x.key()
                if key not in dist:
                    if len(dist) >= budget:
                        raise BudgetExceeded(f"BFS ball exceeds the budget {budget}")
                    dist[key] = d
                    fresh.append(x)
        frontier = fresh
    return dist


def charney_length_bfs(
    rep: KrammerRep, word: Sequence[int], maxlen: int = 3, budget: int | None = None
) -> int:
    """Minimal number of lifted-Weyl factors (or inverses) expressing the word.

    Group elements are compared through their exact representing matrices.
    Bidirectional BFS: a ball of radius ceil(maxlen/2) around the identity
    (cached per representation) meets a ball of radius floor(maxlen/2) grown
    from the target.  Raises NotFound past ``maxlen``.
    """
    rs = rep.rs
    check_signed_word(rs, word)
    cap = enumeration_budget(budget)
    target = rep.rho(word)
    if target == rep.identity_matrix():
        return 0
    left_radius = (maxlen + 1) // 2
    right_radius = maxlen // 2
    balls = rep._cache.setdefault("charney_balls", {})
    left = balls.get(left_radius)
    if left is None:
        left = _ball_from(rep, rep.identity_matrix(), left_radius, cap)
        balls[left_radius] = left
    right = _ball_from(rep, target, right_radius, cap)
    best = None
    for key, d_right in right.items():
        d_left = left.get(key)
        if d_left is not None:
            total = d_left + d_right
            if best is None or total < best:
                best = total
    if best is None or best > maxlen:
        raise NotFound(maxlen)
    return best
