"""Finite p-adic Sylvester (Egyptian fraction) expansions, exactly.

The library provides exact arithmetic on Z[1/p] and real quadratic fields,
a p^k division algorithm with jump detection, and four greedy expansion
algorithms together with verification and cross-checks against the
classical Fibonacci-Sylvester algorithm.
"""

from .digits import (
    DigitExpansion,
    digits_of,
    frac_part,
    frac_part_k,
    hensel_sqrt,
    sqrt_mod_p,
)
from .division import (
    DivisionStep,
    RationalDivisionStep,
    brute_force_divide,
    check_scaling_correspondence,
    classical_divide,
    pk_divide,
    pk_divide_rational,
)
from .errors import (
    BudgetExceeded,
    DivByZero,
    EmbeddingMismatch,
    EvenPrime,
    HypothesisViolated,
    KTooSmall,
    NonPositiveDivisor,
    NotAResidue,
    NotInRing,
    NotPrime,
    PadicSylvesterError,
    PrecisionExhausted,
    PreconditionViolated,
    ZeroInput,
)
from .expansion import (
    CAP_REACHED,
    CERTIFIED_NONTERMINATING,
    Expansion,
    FAILS_WITH_JUMP,
    HOLDS,
    HOLDS_DESPITE_JUMP,
    NoJumpCorrespondence,
    StepRecord,
    TERMINATED,
    VerificationReport,
    adaptive_pk_greedy,
    certify_nontermination,
    check_nojump_correspondence,
    fs_greedy,
    knopfmacher_sylvester,
    modified_sylvester,
    pk_greedy,
    value_operands,
    verify_expansion,
)
from .quadratic import (
    QuadElement,
    quad_digits,
    quad_frac_part_k,
    quad_ord,
    real_ceil,
    real_compare,
    real_floor,
)
from .valuation import PLocal, POS_INF, Prime, as_plocal, ord_p, p_abs, unit_part

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CAP_REACHED",
    "CERTIFIED_NONTERMINATING",
    "DigitExpansion",
    "DivByZero",
    "DivisionStep",
    "EmbeddingMismatch",
    "EvenPrime",
    "Expansion",
    "FAILS_WITH_JUMP",
    "HOLDS",
    "HOLDS_DESPITE_JUMP",
    "HypothesisViolated",
    "KTooSmall",
    "NoJumpCorrespondence",
    "NonPositiveDivisor",
    "NotAResidue",
    "NotInRing",
    "NotPrime",
    "PLocal",
    "POS_INF",
    "PadicSylvesterError",
    "PrecisionExhausted",
    "PreconditionViolated",
    "Prime",
    "QuadElement",
    "RationalDivisionStep",
    "StepRecord",
    "TERMINATED",
    "VerificationReport",
    "ZeroInput",
    "adaptive_pk_greedy",
    "as_plocal",
    "brute_force_divide",
    "certify_nontermination",
    "check_nojump_correspondence",
    "check_scaling_correspondence",
    "classical_divide",
    "digits_of",
    "frac_part",
    "frac_part_k",
    "fs_greedy",
    "hensel_sqrt",
    "knopfmacher_sylvester",
    "modified_sylvester",
    "ord_p",
    "p_abs",
    "pk_divide",
    "pk_divide_rational",
    "pk_greedy",
    "quad_digits",
    "quad_frac_part_k",
    "quad_ord",
    "real_ceil",
    "real_compare",
    "real_floor",
    "sqrt_mod_p",
    "unit_part",
    "value_operands",
    "verify_expansion",
]
