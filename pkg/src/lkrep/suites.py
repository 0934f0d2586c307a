"""Named verification suites aggregating the identity checks.

Each suite takes a representation (already built for a type/rank), runs one
family of exact checks, and returns (passed, detail).  The CLI composes them
into a report; the test suite calls them directly.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable

from . import garside
from .representation import KrammerRep, solve_t_table, solve_t_table_closed_form, table_equation_violations
from .laurent import ONE, R
from .roots import max_inversion_subset

HALF = Fraction(1, 2)


def suite_braid(rep: KrammerRep, **_) -> tuple[bool, str]:
    failures = rep.braid_relation_failures(include_tau=True)
    if failures:
        return False, f"{len(failures)} failing pair(s), first: {failures[0]}"
    pairs = rep.rs.rank * (rep.rs.rank - 1) // 2
    return True, f"{pairs} generator pair(s), sigma and tau"


def suite_ttable(rep: KrammerRep, **_) -> tuple[bool, str]:
    rs = rep.rs
    t_min = solve_t_table(rs, "min")
    t_max = solve_t_table(rs, "max")
    t_closed, _ = solve_t_table_closed_form(rs)
    if not (t_min == t_max == t_closed):
        return False, "tie-break policies or closed form disagree"
    bad = table_equation_violations(rs, t_min)
    if bad:
        return False, bad[0]
    r2m1 = R**2 - 1
    for idx in range(rs.num_roots):
        ht = rs.heights[idx]
        for k in range(1, rs.rank + 1):
            v = t_min.value(k, idx)
            in_supp = k in rs.supports[idx]
            if not in_supp:
                if v:
                    return False, f"nonzero off support at (k={k}, {rs.roots[idx]})"
                continue
            if v.r_degree_range()[1] != 3 + ht:
                return False, f"degree != ht+3 at (k={k}, {rs.roots[idx]})"
            if idx != rs.simple_index[k] and not v.divisible_by(r2m1):
                return False, f"not divisible by r^2-1 at (k={k}, {rs.roots[idx]})"
            if rs.inner_simple(k, idx) == 1 and v != R ** (ht + 1) * r2m1:
                return False, f"pairing-1 closed form fails at (k={k}, {rs.roots[idx]})"
    # equal columns across perpendicular adjacent generators
    for idx in range(rs.num_roots):
        for k in range(1, rs.rank + 1):
            for l in range(k + 1, rs.rank + 1):
                if (
                    rs.adjacent(k, l)
                    and rs.inner_simple(k, idx) == 0
                    and rs.inner_simple(l, idx) == 0
                    and t_min.value(k, idx) != t_min.value(l, idx)
                ):
                    return False, f"perpendicular pair values differ at ({k},{l},{rs.roots[idx]})"
    return True, f"{rs.num_roots * rs.rank} entries, three solvers agree"


def suite_det(rep: KrammerRep, **_) -> tuple[bool, str]:
    for k in range(1, rep.rs.rank + 1):
        got = rep.determinant_sigma(k)
        want = rep.expected_determinant_sigma(k)
        if got != want:
            return False, f"det sigma_{k} = {got}, expected {want}"
    return True, f"all {rep.rs.rank} generators match elimination"


def suite_w0(rep: KrammerRep, **_) -> tuple[bool, str]:
    scalar, perm = rep.longest_scalar_permutation()
    want = rep.expected_garside_scalar()
    if scalar != want:
        return False, f"scalar {scalar}, expected {want}"
    if perm != rep.minus_w0_permutation():
        return False, "permutation does not match -w0"
    e_plus_3 = rep.nonorthogonal_count() + 3
    if want.r_degree_range() != (e_plus_3, e_plus_3):
        return False, f"r-exponent differs from e+3 = {e_plus_3}"
    return True, f"scalar {scalar}"


def suite_umatrix(rep: KrammerRep, **_) -> tuple[bool, str]:
    u = rep.invariant_matrix()  # AmbiguousRule propagates
    rs = rep.rs
    for j in range(rs.num_roots):
        for i, v in u.column(j).items():
            if i == j:
                if v != ONE:
                    return False, f"diagonal entry at {rs.roots[j]} is {v}"
            elif not rs.leq(i, j):
                return False, f"entry above the dominance order at ({rs.roots[i]}, {rs.roots[j]})"
    bad = rep.invariant_matrix_failures()
    if bad:
        return False, f"sigma_k U sigma_k-bar != U for k in {bad}"
    return True, f"unitriangular, invariant under all {rs.rank} generators"


def suite_equivariance(rep: KrammerRep, budget=None, **_) -> tuple[bool, str]:
    rs = rep.rs
    count = 0
    for closed in rs.closed_sets(budget):
        g_a = max_inversion_subset(rs, closed)
        for k in range(1, rs.rank + 1):
            lhs = max_inversion_subset(rs, garside.star_act(rs, k, closed))
            rhs = garside.head(rs, (k,) + g_a.reduced_word())
            if lhs != rhs:
                return False, f"fails at k={k}, A={sorted(rs.roots[i] for i in closed)}"
            count += 1
    return True, f"{count} (generator, closed set) pairs, exhaustive"


def suite_cone(rep: KrammerRep, seed: int = 0, count: int = 50, max_len: int = 12, r0: Fraction = HALF, **_) -> tuple[bool, str]:
    rng = random.Random(seed)
    rs = rep.rs
    for _ in range(count):
        word = [rng.randint(1, rs.rank) for _ in range(rng.randint(1, max_len))]
        bad = rep.cone_violations(word, r0)
        if bad:
            return False, f"word {word}: {bad[0]}"
    return True, f"{count} random positive words of length <= {max_len} at r0 = {r0}"


def suite_charney(rep: KrammerRep, seed: int = 0, count: int = 25, max_len: int = 3, budget=None, **_) -> tuple[bool, str]:
    rng = random.Random(seed)
    rs = rep.rs
    letters = [k for k in range(1, rs.rank + 1)] + [-k for k in range(1, rs.rank + 1)]
    for _ in range(count):
        word = [rng.choice(letters) for _ in range(rng.randint(0, max_len))]
        got = garside.charney_length(rep, word)
        want = garside.charney_length_bfs(rep, word, maxlen=max_len, budget=budget)
        if got != want:
            return False, f"word {word}: matrix formula {got}, BFS {want}"
    return True, f"{count} random signed words of length <= {max_len} vs BFS"


SUITES: dict[str, Callable] = {
    "braid": suite_braid,
    "ttable": suite_ttable,
    "det": suite_det,
    "w0": suite_w0,
    "umatrix": suite_umatrix,
    "equivariance": suite_equivariance,
    "cone": suite_cone,
    "charney": suite_charney,
}
