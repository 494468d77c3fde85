"""Division algorithms over Z and Z[1/p].

classical_divide realizes b = a*q - r with 0 <= r < a. pk_divide realizes
the p-adic analogue: for a, b in Z[1/p] with a > 0 it finds the unique
q, r in Z[1/p] with

    b = a*q - r,    0 <= r < a*p**k,    |r|_p <= |a*p**k|_p.

brute_force_divide is an independent enumeration oracle for the same triple
of conditions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetExceeded, HypothesisViolated, NonPositiveDivisor
from .valuation import PLocal, Prime, ord_p

CASE_1 = "case1"
CASE_2 = "case2"


@dataclass(frozen=True)
class DivisionStep:
    """One application of the p**k division algorithm.

    rbar is the canonical residue in [0, unit(a)) that generates the
    remainder; a jump is the event that p divides a nonzero rbar, which is
    what breaks the naive correspondence with classical division.
    """

    p: Prime
    k: int
    a: PLocal
    b: PLocal
    q: PLocal
    r: PLocal
    rbar: int
    jumped: bool
    case: str


@dataclass(frozen=True)
class RationalDivisionStep:
    """pk_divide extended to arbitrary rational operands by clearing denominators."""

    p: Prime
    k: int
    a: Fraction
    b: Fraction
    q: PLocal
    r: Fraction
    inner: DivisionStep


def classical_divide(a: int, b: int) -> tuple[int, int]:
    """q, r with b = a*q - r and 0 <= r < a; q is the least integer with a*q >= b."""
    if a <= 0:
        raise NonPositiveDivisor(f"divisor must be positive, got {a}")
    q = -((-b) // a)
    return q, a * q - b


def _as_plocal(p: Prime, value) -> PLocal:
    if isinstance(value, PLocal):
        if value.p != p:
            raise ValueError(f"operand has prime {value.p}, expected {p}")
        return value
    return PLocal.from_fraction(p, value)


def pk_divide(p: Prime, k: int, a, b) -> DivisionStep:
    """The unique division step b = a*q - r with 0 <= r < a*p**k and
    |r|_p <= |a*p**k|_p, computed constructively.

    With alpha = ord(a), beta = ord(b), the canonical residue is
    rbar = -unit(b)*p**(beta-alpha-k) mod unit(a); powers of p are taken mod
    unit(a) through a modular inverse when the exponent is negative. Then
    r = rbar * p**(alpha+k) and q follows from exact cancellation.
    """
    a = _as_plocal(p, a)
    b = _as_plocal(p, b)
    if a.unit <= 0:
        raise NonPositiveDivisor(f"divisor must be positive, got {a}")
    if b.is_zero():
        zero = PLocal.zero(p)
        return DivisionStep(p, k, a, b, zero, zero, 0, False, CASE_2)
    alpha, ahat = a.exp, a.unit
    beta, bhat = b.exp, b.unit
    rbar = -bhat * pow(p, beta - alpha - k, ahat) % ahat
    if k > beta - alpha:
        num = rbar * p ** (alpha + k - beta) + bhat
        case = CASE_1
        q_exp = beta - alpha
    else:
        num = rbar + bhat * p ** (beta - alpha - k)
        case = CASE_2
        q_exp = k
    assert num % ahat == 0
    q = PLocal(p, num // ahat, q_exp)
    r = PLocal(p, rbar, alpha + k)
    jumped = rbar != 0 and rbar % p == 0
    return DivisionStep(p, k, a, b, q, r, rbar, jumped, case)


def pk_divide_rational(p: Prime, k: int, a, b) -> RationalDivisionStep:
    """pk_divide for arbitrary positive rational a and rational b.

    Denominators are cleared: with b = s/t and a = u/v the step is computed
    on b' = s*v, a' = u*t and the remainder rescaled by 1/(v*t). The returned
    q and r satisfy all three division conditions for the original operands.
    """
    a = Fraction(a)
    b = Fraction(b)
    if a <= 0:
        raise NonPositiveDivisor(f"divisor must be positive, got {a}")
    s, t = b.numerator, b.denominator
    u, v = a.numerator, a.denominator
    inner = pk_divide(p, k, PLocal(p, u * t), PLocal(p, s * v))
    r = inner.r.to_fraction() / (v * t)
    return RationalDivisionStep(p, k, a, b, inner.q, r, inner)


def brute_force_divide(p: Prime, k: int, a, b, budget: int = 10**6) -> DivisionStep:
    """Enumeration oracle for pk_divide.

    Tries every candidate remainder r = j*p**(alpha+k) for j in [0, unit(a));
    these are exactly the values satisfying both division bounds. Keeps the
    unique j for which (b + r)/a stays in Z[1/p]. Independent of the
    constructive path: no modular inverses, just divisibility tests.
    """
    a = _as_plocal(p, a)
    b = _as_plocal(p, b)
    if a.unit <= 0:
        raise NonPositiveDivisor(f"divisor must be positive, got {a}")
    ahat, alpha = a.unit, a.exp
    if ahat > budget:
        raise BudgetExceeded(f"unit(a) = {ahat} exceeds the oracle budget {budget}")
    if b.is_zero():
        base, step = 0, 1
    else:
        mu = min(b.exp, alpha + k)
        base = b.unit * p ** (b.exp - mu) % ahat
        step = pow(p, alpha + k - mu, ahat)
    hits = [j for j in range(ahat) if (base + j * step) % ahat == 0]
    assert len(hits) == 1, f"expected a unique remainder, found {len(hits)}"
    j = hits[0]
    r = PLocal(p, j, alpha + k)
    q = (b + r) / a
    if b.is_zero():
        case = CASE_2
    else:
        case = CASE_1 if k > b.exp - alpha else CASE_2
    return DivisionStep(p, k, a, b, q, r, j, j != 0 and j % p == 0, case)


def check_scaling_correspondence(p: Prime, k: int, a: int, b: int) -> bool:
    """Whether the p**k quotient of (a, b) equals p**k times the classical
    quotient of (a*p**k, b). Requires k <= ord(b) - ord(a).
    """
    a, b = int(a), int(b)
    if a <= 0:
        raise NonPositiveDivisor(f"a must be positive, got {a}")
    if b != 0 and k > ord_p(p, b) - ord_p(p, a):
        raise HypothesisViolated(
            f"need k <= ord(b) - ord(a) = {ord_p(p, b) - ord_p(p, a)}, got k = {k}"
        )
    if k >= 0:
        q_inf = -((-b) // (a * p**k))
    else:
        q_inf = -((-b * p ** (-k)) // a)
    q_p = pk_divide(p, k, PLocal(p, a), PLocal(p, b)).q
    return q_p.to_fraction() == q_inf * Fraction(p) ** k
