"""The generalized Lawrence-Krammer representation over Z[r^{+-1}, t^{+-1}].

Each Artin generator s_k acts on the free module with basis {x_beta} indexed
by the positive roots as sigma_k = tau_k + t*T_k, where tau_k is determined
by the pairing of beta with alpha_k:

    (alpha_k, beta) =  2:  x_beta -> 0
    (alpha_k, beta) =  1:  x_beta -> r x_{beta - alpha_k}
    (alpha_k, beta) =  0:  x_beta -> x_beta
    (alpha_k, beta) = -1:  x_beta -> (1 - r^2) x_beta + r x_{beta + alpha_k}

and T_k sends x_beta to T(k, beta) * x_{alpha_k} for a polynomial table T
solved here by recursion over root height.  Matrices are column-action:
entry[gamma][beta] is the coefficient of x_gamma in the image of x_beta.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .laurent import LaurentPoly, TPoly, ONE, R, T, ZERO
from .matrix import RingMatrix
from .roots import RootSystem

_R4 = R**4
_R2_MINUS_1 = R**2 - 1
_ONE_MINUS_R2 = ONE - R**2
_R_MINUS_RINV = R - R**-1
_RINV = R**-1


class InconsistentSystem(RuntimeError):
    """The defining equations failed to determine a coefficient.

    This must never fire: the system has a unique solution.  Firing means an
    implementation bug and is surfaced with the offending (k, root) witness.
    """


class RuleNotApplicable(RuntimeError):
    """No exponent recursion case matched the given (k, root) pair."""


class NotMonomialMatrix(RuntimeError):
    """A matrix expected to be scalar * permutation failed to factor."""


class AmbiguousRule(RuntimeError):
    """Two admissible column-recursion choices gave different entries."""


class TTable:
    """The table of t-linear coefficients T(k, beta), one polynomial in r per
    generator/positive-root pair.  Entries off the support are zero and are
    not stored."""

    def __init__(self, rs: RootSystem, values: dict[tuple[int, int], LaurentPoly]):
        self.rs = rs
        self._values = {kv: p for kv, p in values.items() if p}

    def value(self, k: int, root_idx: int) -> LaurentPoly:
        return self._values.get((k, root_idx), ZERO)

    def items(self):
        return self._values.items()

    def __eq__(self, other) -> bool:
        if not isinstance(other, TTable):
            return NotImplemented
        return self.rs.spec == other.rs.spec and self._values == other._values

    def to_json_obj(self) -> list:
        rs = self.rs
        out = []
        for k in range(1, rs.rank + 1):
            for i in range(rs.num_roots):
                p = self.value(k, i)
                if p:
                    out.append({"k": k, "root": list(rs.roots[i]), "poly": p.to_json_obj()})
        return out


class ExponentTable:
    """Closed-form exponents: a for pairing 0, the pair {c, d} for pairing -1.

    All exponents default to 0 off the support of the root.
    """

    def __init__(self, a: dict[tuple[int, int], int], cd: dict[tuple[int, int], tuple[int, int]]):
        self._a = a
        self._cd = cd

    def a(self, k: int, root_idx: int) -> int:
        return self._a.get((k, root_idx), 0)

    def c(self, k: int, root_idx: int) -> int:
        return self._cd.get((k, root_idx), (0, 0))[0]

    def d(self, k: int, root_idx: int) -> int:
        return self._cd.get((k, root_idx), (0, 0))[1]

    def cd(self, k: int, root_idx: int) -> tuple[int, int]:
        return self._cd.get((k, root_idx), (0, 0))


def solve_t_table(rs: RootSystem, tie_break: str = "min") -> TTable:
    """Solve the defining equations for T by recursion over root height.

    ``tie_break`` picks which admissible reduction direction is used when
    several exist ("min" or "max" generator index); the solution is unique,
    so both policies give the same table.
    """
    if tie_break not in ("min", "max"):
        raise ValueError(f"unknown tie_break policy {tie_break!r}")
    pick = min if tie_break == "min" else max
    n = rs.rank
    values: dict[tuple[int, int], LaurentPoly] = {}

    def get(k: int, idx: int) -> LaurentPoly:
        return values.get((k, idx), ZERO)

    for idx in range(rs.num_roots):  # index order is height order
        ht = rs.heights[idx]
        supp = rs.supports[idx]
        for k in supp:
            if ht == 1:
                values[(k, idx)] = _R4
                continue
            if ht == 2:
                # both support nodes are adjacent ends of the root
                values[(k, idx)] = R**5 - R**3
                continue
            down_perp = [
                l
                for l in range(1, n + 1)
                if rs.cartan_entry(k, l) == 0 and rs.inner_simple(l, idx) == 1
            ]
            if down_perp:
                l = pick(down_perp)
                values[(k, idx)] = R * get(k, rs.shifted(idx, l, -1))
                continue
            down_adj = [
                l for l in range(1, n + 1) if rs.adjacent(k, l) and rs.inner_simple(l, idx) == 1
            ]
            if down_adj:
                l = pick(down_adj)
                ip_k = rs.inner_simple(k, idx)
                below_l = rs.shifted(idx, l, -1)
                if ip_k == 0:
                    below_kl = rs.shifted(below_l, k, -1)
                    values[(k, idx)] = get(l, below_kl) + _R_MINUS_RINV * get(k, below_l)
                elif ip_k == -1:
                    values[(k, idx)] = _RINV * get(l, below_l) + _R_MINUS_RINV * get(k, below_l)
                else:
                    raise InconsistentSystem(
                        f"pairing {ip_k} with an adjacent descent at (k={k}, {rs.roots[idx]})"
                    )
                continue
            # only k itself pairs to 1 with the root
            if rs.inner_simple(k, idx) != 1:
                raise InconsistentSystem(f"no descent direction at (k={k}, {rs.roots[idx]})")
            side = [
                l for l in range(1, n + 1) if rs.adjacent(k, l) and rs.inner_simple(l, idx) == 0
            ]
            if not side:
                raise InconsistentSystem(f"no perpendicular neighbor at (k={k}, {rs.roots[idx]})")
            l = pick(side)
            values[(k, idx)] = R * get(l, rs.shifted(idx, k, -1))
    return TTable(rs, values)


def solve_t_table_closed_form(rs: RootSystem) -> tuple[TTable, ExponentTable]:
    """Build T from the closed form

        T(k, beta) = r^(ht+1) (r^2 - 1) * F,
        F = 1                                 if (alpha_k, beta) = 1
        F = 1 - r^-a                          if (alpha_k, beta) = 0
        F = (1 - r^-c)(1 - r^-d)              if (alpha_k, beta) = -1

    with the exponents a, {c, d} computed by recursion over height.
    """
    n = rs.rank
    a_tab: dict[tuple[int, int], int] = {}
    cd_tab: dict[tuple[int, int], tuple[int, int]] = {}
    values: dict[tuple[int, int], LaurentPoly] = {}

    def aval(k: int, idx: int) -> int:
        return a_tab.get((k, idx), 0)

    def cdval(k: int, idx: int) -> tuple[int, int]:
        return cd_tab.get((k, idx), (0, 0))

    for idx in range(rs.num_roots):
        ht = rs.heights[idx]
        supp = rs.supports[idx]
        scale = R ** (ht + 1) * _R2_MINUS_1
        # pairing-zero exponents first: the pairing -1 cases at this height
        # may refer to them
        for k in supp:
            if rs.inner_simple(k, idx) != 0:
                continue
            found = None
            for l in range(1, n + 1):
                if rs.inner_simple(l, idx) != 1:
                    continue
                below = rs.shifted(idx, l, -1)
                if not rs.adjacent(k, l):
                    found = aval(k, below)
                else:
                    found = aval(l, rs.shifted(below, k, -1)) + 2
                break
            if found is None:
                raise RuleNotApplicable(f"no exponent rule for a at (k={k}, {rs.roots[idx]})")
            a_tab[(k, idx)] = found
        for k in supp:
            ip = rs.inner_simple(k, idx)
            if ip == 2:
                values[(k, idx)] = _R4
            elif ip == 1:
                values[(k, idx)] = scale
            elif ip == 0:
                values[(k, idx)] = scale * (ONE - R ** (-a_tab[(k, idx)]))
            else:
                pair = None
                for l in range(1, n + 1):
                    if rs.inner_simple(l, idx) != 1:
                        continue
                    below = rs.shifted(idx, l, -1)
                    if not rs.adjacent(k, l):
                        pair = cdval(k, below)
                        break
                    a_star = aval(k, below)
                    if l not in rs.supports[below]:
                        # the adjacent reference vanishes; the remaining term
                        # forces the factor pair {2, a}
                        pair = (2, a_star) if a_star >= 2 else (a_star, 2)
                        break
                    prev = cdval(l, below)
                    if prev[1] == a_star:
                        rest = prev[0]
                    elif prev[0] == a_star:
                        rest = prev[1]
                    else:
                        continue
                    pair = tuple(sorted((a_star, rest + 2)))
                    break
                if pair is None:
                    flanks = [
                        l
                        for l in range(1, n + 1)
                        if rs.adjacent(k, l) and rs.inner_simple(l, idx) == 0
                    ]
                    if len(flanks) >= 2:
                        pair = tuple(sorted((a_tab[(flanks[0], idx)], a_tab[(flanks[1], idx)])))
                if pair is None:
                    raise RuleNotApplicable(
                        f"no exponent rule for c, d at (k={k}, {rs.roots[idx]})"
                    )
                cd_tab[(k, idx)] = pair
                c, d = pair
                values[(k, idx)] = scale * (ONE - R**-c) * (ONE - R**-d)
    return TTable(rs, values), ExponentTable(a_tab, cd_tab)


def table_equation_violations(rs: RootSystem, table: TTable) -> list[str]:
    """Check every defining equation of the table by direct substitution.

    Returns human-readable witnesses for any failures (empty when the table
    is a solution, which is always for a solved table).
    """
    n = rs.rank
    bad: list[str] = []

    def note(msg: str) -> None:
        bad.append(msg)

    for idx in range(rs.num_roots):
        ht = rs.heights[idx]
        for k in range(1, n + 1):
            tk = table.value(k, idx)
            if ht == 1:
                want = _R4 if idx == rs.simple_index[k] else ZERO
                if tk != want:
                    note(f"simple-root value wrong at (k={k}, {rs.roots[idx]})")
                continue
            if ht == 2 and k in rs.supports[idx]:
                if tk != R**5 - R**3:
                    note(f"height-2 value wrong at (k={k}, {rs.roots[idx]})")
            for l in range(1, n + 1):
                if l == k or rs.inner_simple(l, idx) != 1:
                    continue
                below = rs.shifted(idx, l, -1)
                if rs.cartan_entry(k, l) == 0:
                    if tk != R * table.value(k, below):
                        note(f"perpendicular descent fails at (k={k}, l={l}, {rs.roots[idx]})")
                    continue
                ip_k = rs.inner_simple(k, idx)
                if ip_k == 0:
                    lhs = table.value(l, rs.shifted(below, k, -1)) + _R_MINUS_RINV * table.value(
                        k, below
                    )
                    if tk != lhs:
                        note(f"adjacent descent (pairing 0) fails at (k={k}, l={l}, {rs.roots[idx]})")
                elif ip_k == -1:
                    lhs = _RINV * table.value(l, below) + _R_MINUS_RINV * table.value(k, below)
                    if tk != lhs:
                        note(f"adjacent descent (pairing -1) fails at (k={k}, l={l}, {rs.roots[idx]})")
                elif ip_k == 1 and rs.inner_simple(l, idx) == 0:
                    pass  # covered below by the symmetric scan
            if rs.inner_simple(k, idx) == 1:
                for l in range(1, n + 1):
                    if rs.adjacent(k, l) and rs.inner_simple(l, idx) == 0:
                        if tk != R * table.value(l, rs.shifted(idx, k, -1)):
                            note(
                                f"adjacent descent (pairing 1) fails at (k={k}, l={l}, {rs.roots[idx]})"
                            )
    return bad


def monomial_factor(m: RingMatrix) -> tuple[LaurentPoly, tuple[int, ...]]:
    """Factor a matrix as scalar * permutation, or raise NotMonomialMatrix.

    Requires exactly one entry per column, all entries equal; returns the
    shared scalar and the map column -> row.
    """
    n = m.n
    perm: list[int] = [-1] * n
    scalar: LaurentPoly | None = None
    count = 0
    for i, row in enumerate(m.rows):
        for j, v in row.items():
            if perm[j] != -1:
                raise NotMonomialMatrix(f"two entries in column {j}")
            perm[j] = i
            count += 1
            if scalar is None:
                scalar = v
            elif v != scalar:
                raise NotMonomialMatrix(f"entry mismatch in column {j}")
    if count != n or scalar is None:
        raise NotMonomialMatrix("empty column")
    return scalar, tuple(perm)


def t_window(m: RingMatrix) -> tuple[int, int]:
    """Smallest and largest t-exponent over all nonzero entries."""
    lo: int | None = None
    hi: int | None = None
    for row in m.rows:
        for p in row.values():
            a, b = p.t_degree_range()
            lo = a if lo is None else min(lo, a)
            hi = b if hi is None else max(hi, b)
    if lo is None:
        raise NotMonomialMatrix("zero matrix has no t-window")
    return lo, hi


class KrammerRep:
    """The representation of one ADE Artin group, with all derived matrices.

    Matrices are cached per generator; everything is exact and immutable, so
    instances are safe to share.
    """

    def __init__(self, rs: RootSystem, table: TTable | None = None):
        self.rs = rs
        self.table = table if table is not None else solve_t_table(rs)
        n = rs.num_roots
        self._identity = RingMatrix.identity(n, ONE, ZERO)
        self._tau: dict[int, RingMatrix] = {}
        self._sigma: dict[int, RingMatrix] = {}
        self._sigma_inv: dict[int, RingMatrix] = {}
        self._sigma_eval: dict[tuple[int, Fraction], RingMatrix] = {}
        self._u_matrix: RingMatrix | None = None
        self._cache: dict = {}  # scratch for the oracle layers

    # -- generator matrices ------------------------------------------------

    def identity_matrix(self) -> RingMatrix:
        return self._identity

    def tau(self, k: int) -> RingMatrix:
        m = self._tau.get(k)
        if m is None:
            rs = self.rs
            rows: list[dict[int, LaurentPoly]] = [{} for _ in range(rs.num_roots)]
            for b in range(rs.num_roots):
                ip = rs.inner_simple(k, b)
                if ip == 2:
                    continue
                if ip == 1:
                    rows[rs.reflect(k, b)[0]][b] = R
                elif ip == 0:
                    rows[b][b] = ONE
                else:
                    rows[b][b] = _ONE_MINUS_R2
                    rows[rs.reflect(k, b)[0]][b] = R
            m = RingMatrix(rs.num_roots, rows, ZERO)
            self._tau[k] = m
        return m

    def sigma(self, k: int) -> RingMatrix:
        m = self._sigma.get(k)
        if m is None:
            rs = self.rs
            m = self.tau(k)
            rows = [dict(row) for row in m.rows]
            target = rs.simple_index[k]
            acc = rows[target]
            for b in range(rs.num_roots):
                tkb = self.table.value(k, b)
                if tkb:
                    add = T * tkb
                    s = acc.get(b)
                    s = add if s is None else s + add
                    if s:
                        acc[b] = s
                    else:
                        del acc[b]
            m = RingMatrix(rs.num_roots, rows, ZERO)
            self._sigma[k] = m
        return m

    def sigma_inverse(self, k: int) -> RingMatrix:
        """Inverse generator, from the quadratic relation satisfied by sigma_k.

        Q = sigma^2 + (r^2-1) sigma - r^2 collapses onto the x_{alpha_k} line,
        where sigma scales by t r^4; unwinding gives an explicit inverse,
        which is then verified against the identity on both sides.
        """
        m = self._sigma_inv.get(k)
        if m is None:
            rs = self.rs
            s = self.sigma(k)
            q = self.quadratic_residue(k)
            ident = self._identity
            m = (s + ident.scaled(_R2_MINUS_1) - q.scaled(T**-1 * R**-4)).scaled(R**-2)
            assert s * m == ident and m * s == ident
            self._sigma_inv[k] = m
        return m

    def quadratic_residue(self, k: int) -> RingMatrix:
        """sigma_k^2 + (r^2 - 1) sigma_k - r^2; lands in the x_{alpha_k} line."""
        s = self.sigma(k)
        return s * s + s.scaled(_R2_MINUS_1) - self._identity.scaled(R**2)

    def generator(self, letter: int) -> RingMatrix:
        """Matrix of a signed letter: positive k -> sigma_k, negative -> inverse."""
        if letter > 0:
            return self.sigma(letter)
        if letter < 0:
            return self.sigma_inverse(-letter)
        raise ValueError("letter 0 is not a generator")

    # -- words ---------------------------------------------------------------

    def rho(self, word: Sequence[int]) -> RingMatrix:
        """Image of a signed word, leftmost letter leftmost in the product."""
        m = self._identity
        for letter in word:
            m = m * self.generator(letter)
        return m

    def sigma_evaluated(self, letter: int, r0: Fraction) -> RingMatrix:
        """Generator matrix with r specialized to an exact rational."""
        key = (letter, r0)
        m = self._sigma_eval.get(key)
        if m is None:
            m = self.generator(letter).map_entries(lambda p: p.eval_r(r0), zero=TPoly.zero())
            self._sigma_eval[key] = m
        return m

    def rho_evaluated(self, word: Sequence[int], r0: Fraction) -> RingMatrix:
        m = RingMatrix.identity(self.rs.num_roots, TPoly.one(), TPoly.zero())
        for letter in word:
            m = m * self.sigma_evaluated(letter, r0)
        return m

    # -- structural checks ------------------------------------------------------

    def braid_relation_failures(self, include_tau: bool = True) -> list[dict]:
        """Exact check of every pairwise braid relation; returns witnesses.

        For each generator pair the defining relation (commutation when the
        nodes are non-adjacent, length-3 braiding when adjacent) is tested as
        a matrix identity for sigma and, optionally, for tau alone.
        """
        rs = self.rs
        failures: list[dict] = []
        kinds = [("sigma", self.sigma)]
        if include_tau:
            kinds.append(("tau", self.tau))
        for name, gen in kinds:
            for i in range(1, rs.rank + 1):
                for j in range(i + 1, rs.rank + 1):
                    a, b = gen(i), gen(j)
                    if rs.adjacent(i, j):
                        lhs, rhs = a * b * a, b * a * b
                    else:
                        lhs, rhs = a * b, b * a
                    if lhs != rhs:
                        col = next(
                            c
                            for c in range(rs.num_roots)
                            if lhs.column(c) != rhs.column(c)
                        )
                        failures.append(
                            {"kind": name, "pair": (i, j), "witness_column": rs.roots[col]}
                        )
        return failures

    def determinant_sigma(self, k: int) -> LaurentPoly:
        """Exact determinant of sigma_k by fraction-free elimination."""
        return self.sigma(k).det_fraction_free()

    def expected_determinant_sigma(self, k: int) -> LaurentPoly:
        """(-1)^c t r^(4+2c) with c = #{beta : (alpha_k, beta) = -1}."""
        rs = self.rs
        c = sum(1 for b in range(rs.num_roots) if rs.inner_simple(k, b) == -1)
        sign = 1 if c % 2 == 0 else -1
        return LaurentPoly.monomial(sign, 4 + 2 * c, 1)

    # -- the Garside element -------------------------------------------------------

    def longest_scalar_permutation(self) -> tuple[LaurentPoly, tuple[int, ...]]:
        """Factor the image of the lifted longest element as scalar * permutation.

        Raises NotMonomialMatrix unless every column has exactly one entry and
        all entries agree.
        """
        return monomial_factor(self.rho(self.rs.longest_element().reduced_word()))

    def expected_garside_scalar(self) -> LaurentPoly:
        """t r^(e+3) where e counts positive roots not orthogonal to a fixed one."""
        spec = self.rs.spec
        if spec.family == "A":
            e3 = 2 * (spec.rank + 1)
        elif spec.family == "D":
            e3 = 4 * (spec.rank - 1)
        else:
            e3 = {6: 24, 7: 36, 8: 60}[spec.rank]
        return LaurentPoly.monomial(1, e3, 1)

    def nonorthogonal_count(self) -> int:
        """#{beta positive : (beta, gamma) != 0} for a fixed root gamma."""
        rs = self.rs
        return sum(1 for b in range(rs.num_roots) if rs.inner(0, b) != 0)

    def minus_w0_permutation(self) -> tuple[int, ...]:
        """The permutation beta -> -w0(beta) of the positive roots."""
        w0 = self.rs.longest_element()
        out = []
        for i in range(self.rs.num_roots):
            j, sign = w0.apply(i)
            assert sign < 0
            out.append(j)
        return tuple(out)

    # -- the invariant matrix ---------------------------------------------------------

    def invariant_matrix(self) -> RingMatrix:
        """The unitriangular matrix U with sigma_k U sigma_k-bar = U for all k.

        Column beta is built from column beta - alpha_k for an index k pairing
        to 1 with beta; every admissible k is tried and compared, and any
        disagreement raises AmbiguousRule instead of silently picking one.
        """
        if self._u_matrix is None:
            rs = self.rs
            n = rs.num_roots
            columns: list[dict[int, LaurentPoly]] = [{} for _ in range(n)]
            r4 = R**4
            rinv_minus_r = R**-1 - R
            for b in range(n):  # height order
                if rs.heights[b] == 1:
                    columns[b][b] = ONE
                    continue
                ks = [k for k in range(1, rs.rank + 1) if rs.inner_simple(k, b) == 1]
                built: list[dict[int, LaurentPoly]] = []
                for k in ks:
                    prev = columns[rs.shifted(b, k, -1)]
                    col: dict[int, LaurentPoly] = {}
                    alpha_k = rs.simple_index[k]
                    for g in rs.below(b):
                        if g == b:
                            col[g] = ONE
                            continue
                        if g == alpha_k:
                            v = self.table.value(k, b).bar() * r4
                        else:
                            ip = rs.inner_simple(k, g)
                            if ip == 1:
                                v = prev.get(rs.reflect(k, g)[0], ZERO)
                            elif ip == 0:
                                v = _RINV * prev.get(g, ZERO)
                            else:
                                v = prev.get(rs.reflect(k, g)[0], ZERO) + rinv_minus_r * prev.get(
                                    g, ZERO
                                )
                        if v:
                            col[g] = v
                    built.append(col)
                for other in built[1:]:
                    if other != built[0]:
                        raise AmbiguousRule(
                            f"column {rs.roots[b]} differs between admissible recursion indices {ks}"
                        )
                columns[b] = built[0]
            rows: list[dict[int, LaurentPoly]] = [{} for _ in range(n)]
            for j, col in enumerate(columns):
                for i, v in col.items():
                    rows[i][j] = v
            self._u_matrix = RingMatrix(n, rows, ZERO)
        return self._u_matrix

    def invariant_matrix_failures(self) -> list[int]:
        """Generators k for which sigma_k U sigma_k-bar differs from U."""
        u = self.invariant_matrix()
        bad = []
        for k in range(1, self.rs.rank + 1):
            s = self.sigma(k)
            if s * u * s.map_entries(lambda p: p.bar()) != u:
                bad.append(k)
        return bad

    # -- positivity --------------------------------------------------------------------

    def cone_violations(self, word: Sequence[int], r0: Fraction) -> list[dict]:
        """Entries of the evaluated image breaking cone positivity.

        The word must be positive and 0 < r0 < 1; every matrix entry must
        then have no negative t-powers and a nonnegative constant term.
        """
        if any(letter <= 0 for letter in word):
            raise ValueError("cone preservation only concerns positive words")
        if not 0 < r0 < 1:
            raise ValueError("r0 must lie strictly between 0 and 1")
        m = self.rho_evaluated(word, r0)
        rs = self.rs
        bad = []
        for i, row in enumerate(m.rows):
            for j, p in row.items():
                if p.has_negative_power():
                    bad.append({"entry": (rs.roots[i], rs.roots[j]), "reason": "negative t-power"})
                elif p.constant_term() < 0:
                    bad.append(
                        {"entry": (rs.roots[i], rs.roots[j]), "reason": "negative constant term"}
                    )
        return bad

    def __repr__(self) -> str:
        return f"KrammerRep({self.rs.spec.name})"
