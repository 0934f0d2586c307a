"""Acceptance gate: every headline identity at its exact tolerance.

Each criterion prints one pass/fail line (run pytest with -s to see them all).
Everything is exact arithmetic; there are no numeric tolerances anywhere.
The two E_7/E_8 extensions run only when LK_EXTENDED is set.
"""

import itertools
import os
import random
from fractions import Fraction

import pytest

from conftest import rep, rsys
from lkrep import (
    charney_length,
    charney_length_bfs,
    faithfulness_probe,
    head,
    is_delta_free,
    max_inversion_subset,
    simple_word,
    solve_t_table,
    solve_t_table_closed_form,
    star_act,
    t_window,
    word_classes,
)
from lkrep.laurent import R, ZERO

HALF = Fraction(1, 2)
EXTENDED = bool(os.environ.get("LK_EXTENDED"))

BRAID_TYPES = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("A", 5), ("D", 4), ("D", 5), ("E", 6)]
ALL_RANK8_TYPES = (
    [("A", n) for n in range(1, 9)] + [("D", n) for n in range(4, 9)] + [("E", n) for n in (6, 7, 8)]
)


def report(num: int, name: str, failures: list):
    status = "PASS" if not failures else "FAIL"
    print(f"criterion {num:02d} {name}: {status}")
    assert not failures, f"criterion {num} {name}: {failures[:5]}"


def test_criterion_01_braid_relations():
    failures = []
    for family, rank in BRAID_TYPES:
        failures += [(family, rank, f) for f in rep(family, rank).braid_relation_failures()]
    report(1, "braid relations", failures)


@pytest.mark.skipif(not EXTENDED, reason="E7/E8 run under LK_EXTENDED=1")
def test_criterion_01x_braid_relations_extended():
    failures = []
    for family, rank in [("E", 7), ("E", 8)]:
        failures += [(family, rank, f) for f in rep(family, rank).braid_relation_failures()]
    report(1, "braid relations (E7/E8)", failures)


def test_criterion_02_ttable_uniqueness():
    failures = []
    for family, rank in ALL_RANK8_TYPES:
        rs = rsys(family, rank)
        tables = [
            solve_t_table(rs, "min"),
            solve_t_table(rs, "max"),
            solve_t_table_closed_form(rs)[0],
        ]
        blobs = {repr(t.to_json_obj()).encode() for t in tables}
        if len(blobs) != 1:
            failures.append((family, rank))
    report(2, "coefficient table uniqueness", failures)


def test_criterion_03_anchored_values():
    failures = []
    r2m1 = R**2 - 1
    for family, rank in ALL_RANK8_TYPES:
        rs = rsys(family, rank)
        table = solve_t_table(rs)
        for k in range(1, rank + 1):
            ak = rs.simple_index[k]
            if table.value(k, ak) != R**4:
                failures.append((family, rank, k, "diagonal seed"))
            for l in range(1, rank + 1):
                if l != k and table.value(k, rs.simple_index[l]) != ZERO:
                    failures.append((family, rank, k, l, "off-diagonal simple"))
                if rs.adjacent(k, l):
                    pair = rs.sum_index(ak, rs.simple_index[l])
                    if table.value(k, pair) != R**5 - R**3:
                        failures.append((family, rank, k, l, "height-2 value"))
        for idx in range(rs.num_roots):
            ht = rs.heights[idx]
            for k in range(1, rank + 1):
                v = table.value(k, idx)
                if k not in rs.supports[idx]:
                    if v != ZERO:
                        failures.append((family, rank, k, rs.roots[idx], "support"))
                    continue
                if v.r_degree_range()[1] != 3 + ht:
                    failures.append((family, rank, k, rs.roots[idx], "degree"))
                if idx != rs.simple_index[k] and not v.divisible_by(r2m1):
                    failures.append((family, rank, k, rs.roots[idx], "divisibility"))
                if rs.inner_simple(k, idx) == 1 and v != R ** (ht + 1) * r2m1:
                    failures.append((family, rank, k, rs.roots[idx], "pairing-1 form"))
    report(3, "anchored values and table structure", failures)


def test_criterion_04_determinants():
    failures = []
    for family, rank in BRAID_TYPES:
        rp = rep(family, rank)
        for k in range(1, rank + 1):
            if rp.determinant_sigma(k) != rp.expected_determinant_sigma(k):
                failures.append((family, rank, k))
    report(4, "determinant formula vs elimination", failures)


def _check_longest(family: int, rank: int, failures: list):
    rp = rep(family, rank)
    scalar, perm = rp.longest_scalar_permutation()
    if scalar != rp.expected_garside_scalar():
        failures.append((family, rank, "scalar", str(scalar)))
    if perm != rp.minus_w0_permutation():
        failures.append((family, rank, "permutation"))
    e3 = rp.nonorthogonal_count() + 3
    if scalar.r_degree_range() != (e3, e3):
        failures.append((family, rank, "orthogonality count", e3))


def test_criterion_05_longest_element():
    failures = []
    for family, rank in BRAID_TYPES:
        _check_longest(family, rank, failures)
    report(5, "Garside element image", failures)


@pytest.mark.skipif(not EXTENDED, reason="E7/E8 run under LK_EXTENDED=1")
def test_criterion_05x_longest_element_extended():
    failures = []
    for family, rank in [("E", 7), ("E", 8)]:
        _check_longest(family, rank, failures)
    report(5, "Garside element image (E7/E8)", failures)


def test_criterion_06_invariant_matrix():
    failures = []
    for family, rank in [("A", 2), ("A", 3), ("D", 4), ("E", 6)]:
        rp = rep(family, rank)
        bad = rp.invariant_matrix_failures()  # AmbiguousRule would propagate
        if bad:
            failures.append((family, rank, bad))
    report(6, "invariant matrix identity", failures)


def test_criterion_07_equivariance():
    failures = []
    for family, rank in [("A", 2), ("A", 3)]:
        rs = rsys(family, rank)
        for closed in rs.closed_sets():
            g_a = max_inversion_subset(rs, closed)
            for k in range(1, rank + 1):
                lhs = max_inversion_subset(rs, star_act(rs, k, closed))
                rhs = head(rs, (k,) + simple_word(g_a))
                if lhs != rhs:
                    failures.append((family, rank, k, sorted(closed)))
    report(7, "head equivariance (exhaustive)", failures)


def test_criterion_08_cone_preservation():
    failures = []
    for family, rank in [("A", 3), ("D", 4)]:
        rp = rep(family, rank)
        rng = random.Random(2024)
        for _ in range(200):
            word = [rng.randint(1, rank) for _ in range(rng.randint(1, 12))]
            bad = rp.cone_violations(word, HALF)
            if bad:
                failures.append((family, rank, word, bad[0]))
    report(8, "cone preservation", failures)


def test_criterion_09_faithfulness_desk_scale():
    failures = []
    for family, rank, max_len in [("A", 2, 6), ("A", 3, 5)]:
        rs = rsys(family, rank)
        rp = rep(family, rank)
        images = {(): rp.identity_matrix()}
        for length in range(1, max_len + 1):
            for word in itertools.product(range(1, rank + 1), repeat=length):
                images[word] = images[word[:-1]] * rp.sigma(word[-1])
        class_of_key = {}
        for cls in word_classes(rs, max_len):
            words = sorted(cls)
            keys = {images[w].key() for w in words}
            if len(keys) != 1:
                failures.append((family, rank, "not constant on class", words[0]))
                continue
            key = keys.pop()
            if key in class_of_key:
                failures.append((family, rank, "collision", class_of_key[key], words[0]))
            class_of_key[key] = words[0]
        for word in images:
            if faithfulness_probe(rp, word) != head(rs, word):
                failures.append((family, rank, "probe vs head", word))
    report(9, "faithfulness at desk scale", failures)


def test_criterion_10_charney_length():
    failures = []
    rp = rep("A", 2)
    rs = rp.rs
    letters = [1, 2, -1, -2]
    words = [()]
    for length in (1, 2, 3):
        words += list(itertools.product(letters, repeat=length))
    rng = random.Random(77)
    for _ in range(50):
        words.append(tuple(rng.choice(letters) for _ in range(rng.randint(1, 4))))
    for word in words:
        got = charney_length(rp, list(word))
        want = charney_length_bfs(rp, list(word), maxlen=max(len(word), 1))
        if got != want:
            failures.append(("formula vs BFS", word, got, want))
    # positive words below the Garside element: window starts at 0 and the
    # upper end is the BFS length
    for length in range(1, 7):
        for word in itertools.product((1, 2), repeat=length):
            if not is_delta_free(rs, word):
                continue
            lo, hi = t_window(rp.rho(word))
            if lo != 0:
                failures.append(("nonzero lower degree", word, lo))
                continue
            if hi != charney_length_bfs(rp, list(word), maxlen=length):
                failures.append(("upper degree vs BFS", word, hi))
    report(10, "Charney length", failures)
