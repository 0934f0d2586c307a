"""Exact arithmetic in Z[r^{+-1}, t^{+-1}] and its rational specializations.

``LaurentPoly`` is the scalar ring for every matrix in this package: an
immutable sparse map from exponent pairs to arbitrary-precision integers,
kept canonical (no zero coefficients) so that ``==`` is exact ring equality.

``TPoly`` is a Laurent polynomial in t alone with ``Fraction`` coefficients.
It is the image of a ``LaurentPoly`` under an exact substitution r -> r0 and
carries the sign information used by the positivity cone: a coordinate lies
in the cone iff it has no negative t-powers and a nonnegative constant term.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

# Exact rational scalars.  Fraction is already canonical: gcd-reduced with
# positive denominator, which is exactly the invariant the cone tests need.
Rational = Fraction


class ZeroPolynomial(ValueError):
    """An operation required a nonzero polynomial."""


class ZeroSubstitution(ValueError):
    """r was substituted by 0, which is not a unit of the image ring."""


class InexactDivision(ArithmeticError):
    """The divisor does not exactly divide the dividend."""


def parse_rational(text: str) -> Fraction:
    """Parse a string like ``"1/2"`` or ``"-3"`` into an exact Fraction."""
    return Fraction(text.strip())


class LaurentPoly:
    """A Laurent polynomial in r and t with integer coefficients.

    Terms are stored sparsely as ``{(e_r, e_t): coeff}`` with every stored
    coefficient nonzero, so two values are equal iff their term maps are.

    >>> str((ONE - R**2) * (ONE + R**2))
    '1 - r^4'
    >>> str(T * R**4)
    'r^4 t'
    """

    __slots__ = ("_terms", "_key")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        data: dict[tuple[int, int], int] = {}
        if terms:
            for (er, et), c in terms.items():
                if c:
                    data[(er, et)] = c
        self._terms = data
        self._key: tuple | None = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return _ZERO

    @classmethod
    def one(cls) -> "LaurentPoly":
        return _ONE

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, c: int, e_r: int = 0, e_t: int = 0) -> "LaurentPoly":
        return cls({(e_r, e_t): c})

    # -- canonical form ----------------------------------------------------

    def key(self) -> tuple:
        """Hashable canonical form: terms sorted by (e_t, e_r)."""
        if self._key is None:
            self._key = tuple(
                (er, et, c)
                for (er, et), c in sorted(
                    self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0])
                )
            )
        return self._key

    def terms(self) -> Iterable[tuple[int, int, int]]:
        """Iterate (e_r, e_t, coeff) in canonical (e_t, e_r) order."""
        return self.key()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self.key())

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly.const(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res._terms = out
        res._key = None
        return res

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        res = LaurentPoly.__new__(LaurentPoly)
        res._terms = {m: -c for m, c in self._terms.items()}
        res._key = None
        return res

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return _ZERO
        if len(a) > len(b):
            a, b = b, a
        out: dict[tuple[int, int], int] = {}
        for (er1, et1), c1 in a.items():
            for (er2, et2), c2 in b.items():
                m = (er1 + er2, et1 + et2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        res = LaurentPoly.__new__(LaurentPoly)
        res._terms = out
        res._key = None
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n >= 0:
            result = _ONE
            base = self
            e = n
            while e:
                if e & 1:
                    result = result * base
                base = base * base
                e >>= 1
            return result
        # negative powers only make sense for unit monomials
        if len(self._terms) != 1:
            raise InexactDivision("negative power of a non-monomial")
        ((er, et), c) = next(iter(self._terms.items()))
        if c not in (1, -1):
            raise InexactDivision("negative power of a non-unit coefficient")
        return LaurentPoly({(er * n, et * n): c if n % 2 else 1})

    # -- structure queries ---------------------------------------------------

    def t_degree_range(self) -> tuple[int, int]:
        """Lowest and highest t-exponent carrying a nonzero coefficient."""
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no t-degree range")
        ets = [et for (_, et) in self._terms]
        return min(ets), max(ets)

    def r_degree_range(self) -> tuple[int, int]:
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no r-degree range")
        ers = [er for (er, _) in self._terms]
        return min(ers), max(ers)

    def coefficient(self, e_r: int, e_t: int) -> int:
        return self._terms.get((e_r, e_t), 0)

    # -- homomorphisms -------------------------------------------------------

    def bar(self) -> "LaurentPoly":
        """The ring involution sending r -> r^-1 and t -> t^-1."""
        res = LaurentPoly.__new__(LaurentPoly)
        res._terms = {(-er, -et): c for (er, et), c in self._terms.items()}
        res._key = None
        return res

    def eval_r(self, r0: Fraction) -> "TPoly":
        """Substitute an exact rational for r, leaving t formal."""
        r0 = Fraction(r0)
        if r0 == 0:
            raise ZeroSubstitution("r must be substituted by a nonzero rational")
        out: dict[int, Fraction] = {}
        for (er, et), c in self._terms.items():
            v = out.get(et, _F0) + c * r0**er
            if v:
                out[et] = v
            else:
                out.pop(et, None)
        return TPoly(out)

    # -- exact division ------------------------------------------------------

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self/other; raises InexactDivision if it fails.

        Laurent units are monomials, so both operands are shifted to honest
        polynomials, divided by leading terms in lex order, and shifted back.
        """
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return _ZERO
        a_min_r, _ = self.r_degree_range()
        a_min_t, _ = self.t_degree_range()
        b_min_r, _ = other.r_degree_range()
        b_min_t, _ = other.t_degree_range()
        rem = {(er - a_min_r, et - a_min_t): c for (er, et), c in self._terms.items()}
        div = {(er - b_min_r, et - b_min_t): c for (er, et), c in other._terms.items()}
        lead_b = max(div)
        cb = div[lead_b]
        quot: dict[tuple[int, int], int] = {}
        while rem:
            lead_a = max(rem)
            ca = rem[lead_a]
            dr, dt = lead_a[0] - lead_b[0], lead_a[1] - lead_b[1]
            if dr < 0 or dt < 0 or ca % cb:
                raise InexactDivision(f"{other} does not divide {self}")
            qc = ca // cb
            quot[(dr, dt)] = qc
            for (er, et), c in div.items():
                m = (er + dr, et + dt)
                s = rem.get(m, 0) - qc * c
                if s:
                    rem[m] = s
                else:
                    rem.pop(m, None)
        shift_r = a_min_r - b_min_r
        shift_t = a_min_t - b_min_t
        return LaurentPoly({(er + shift_r, et + shift_t): c for (er, et), c in quot.items()})

    def divisible_by(self, other: "LaurentPoly") -> bool:
        try:
            self.exact_div(other)
        except InexactDivision:
            return False
        return True

    # -- serialization -------------------------------------------------------

    def to_json_obj(self) -> list:
        """Monomial list ``[[coeff_string, e_r, e_t], ...]`` sorted by (e_t, e_r)."""
        return [[str(c), er, et] for (er, et, c) in self.key()]

    @classmethod
    def from_json_obj(cls, obj: list) -> "LaurentPoly":
        return cls({(int(er), int(et)): int(cs) for cs, er, et in obj})

    # -- printing --------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for er, et, c in self.key():
            factors = []
            if er:
                factors.append("r" if er == 1 else f"r^{er}")
            if et:
                factors.append("t" if et == 1 else f"t^{et}")
            body = " ".join(factors)
            mag = abs(c)
            if not body:
                word = str(mag)
            elif mag == 1:
                word = body
            else:
                word = f"{mag} {body}"
            if not parts:
                parts.append(f"-{word}" if c < 0 else word)
            else:
                parts.append(f"- {word}" if c < 0 else f"+ {word}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


_ZERO = LaurentPoly()
_ONE = LaurentPoly({(0, 0): 1})
_F0 = Fraction(0)

ZERO = _ZERO
ONE = _ONE
R = LaurentPoly({(1, 0): 1})
T = LaurentPoly({(0, 1): 1})


class TPoly:
    """A Laurent polynomial in t with exact rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, Fraction] | None = None):
        data: dict[int, Fraction] = {}
        if coeffs:
            for et, c in coeffs.items():
                c = Fraction(c)
                if c:
                    data[int(et)] = c
        self._coeffs = data

    @classmethod
    def zero(cls) -> "TPoly":
        return _T_ZERO

    @classmethod
    def one(cls) -> "TPoly":
        return _T_ONE

    @classmethod
    def const(cls, c) -> "TPoly":
        return cls({0: Fraction(c)})

    @classmethod
    def t_power(cls, n: int, c=1) -> "TPoly":
        return cls({n: Fraction(c)})

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._coeffs.items())))

    @staticmethod
    def _coerce(x) -> "TPoly":
        if isinstance(x, TPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return TPoly({0: Fraction(x)})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            s = out.get(e, _F0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = TPoly.__new__(TPoly)
        res._coeffs = out
        return res

    __radd__ = __add__

    def __neg__(self) -> "TPoly":
        res = TPoly.__new__(TPoly)
        res._coeffs = {e: -c for e, c in self._coeffs.items()}
        return res

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, Fraction] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                s = out.get(e, _F0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        res = TPoly.__new__(TPoly)
        res._coeffs = out
        return res

    __rmul__ = __mul__

    def constant_term(self) -> Fraction:
        """Coefficient of t^0 (zero for the zero polynomial)."""
        return self._coeffs.get(0, _F0)

    def min_degree(self) -> int | None:
        """Lowest t-exponent present, or None for the zero polynomial."""
        return min(self._coeffs) if self._coeffs else None

    def max_degree(self) -> int | None:
        return max(self._coeffs) if self._coeffs else None

    def has_negative_power(self) -> bool:
        return any(e < 0 for e in self._coeffs)

    def coefficient(self, e_t: int) -> Fraction:
        return self._coeffs.get(e_t, _F0)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in sorted(self._coeffs.items()):
            body = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            mag = abs(c)
            if not body:
                word = str(mag)
            elif mag == 1:
                word = body
            else:
                word = f"{mag} {body}"
            if not parts:
                parts.append(f"-{word}" if c < 0 else word)
            else:
                parts.append(f"- {word}" if c < 0 else f"+ {word}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"TPoly({self})"


_T_ZERO = TPoly()
_T_ONE = TPoly({0: Fraction(1)})
