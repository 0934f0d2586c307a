"""Exact Lawrence-Krammer representations of ADE Artin groups.

The package builds, for any type A_n (n >= 1), D_n (n >= 4), E_6, E_7, E_8:

* the positive root system and its Weyl group combinatorics,
* the representation matrices sigma_k = tau_k + t T_k over Z[r^{+-1}, t^{+-1}],
* the Garside-side machinery (head of a positive word, action on closed root
  subsets, positivity cone probes, Charney length),

together with exact verification of the algebraic identities the construction
satisfies: braid relations, determinants, the invariant unitriangular matrix,
the monomial image of the lifted longest element, cone preservation, and
equivariance of the greedy head.
"""

from .laurent import (
    LaurentPoly,
    TPoly,
    Rational,
    ONE,
    R,
    T,
    ZERO,
    InexactDivision,
    ZeroPolynomial,
    ZeroSubstitution,
    parse_rational,
)
from .matrix import RingMatrix
from .roots import (
    InvalidType,
    NotClosed,
    RootSystem,
    TooLarge,
    TypeSpec,
    UnknownRoot,
    WeylElement,
    max_inversion_subset,
    weyl_from_word,
)
from .representation import (
    AmbiguousRule,
    ExponentTable,
    InconsistentSystem,
    KrammerRep,
    NotMonomialMatrix,
    RuleNotApplicable,
    TTable,
    solve_t_table,
    solve_t_table_closed_form,
    table_equation_violations,
    t_window,
)
from .garside import (
    BudgetExceeded,
    NegativeLetter,
    NotFound,
    NotInCone,
    charney_length,
    charney_length_bfs,
    classify_cone,
    faithfulness_probe,
    head,
    is_delta_free,
    probe_vector,
    simple_word,
    star_act,
    star_act_word,
    word_classes,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguousRule",
    "BudgetExceeded",
    "ExponentTable",
    "InconsistentSystem",
    "InexactDivision",
    "InvalidType",
    "KrammerRep",
    "LaurentPoly",
    "NegativeLetter",
    "NotClosed",
    "NotFound",
    "NotInCone",
    "NotMonomialMatrix",
    "ONE",
    "R",
    "Rational",
    "RingMatrix",
    "RootSystem",
    "RuleNotApplicable",
    "T",
    "TPoly",
    "TTable",
    "TooLarge",
    "TypeSpec",
    "UnknownRoot",
    "WeylElement",
    "ZERO",
    "ZeroPolynomial",
    "ZeroSubstitution",
    "charney_length",
    "charney_length_bfs",
    "classify_cone",
    "faithfulness_probe",
    "head",
    "is_delta_free",
    "max_inversion_subset",
    "parse_rational",
    "probe_vector",
    "simple_word",
    "solve_t_table",
    "solve_t_table_closed_form",
    "star_act",
    "star_act_word",
    "t_window",
    "table_equation_violations",
    "weyl_from_word",
    "word_classes",
]
