"""Base-p digit windows of rational values and square-root lifting mod p**m.

Digits of a rational are computed by repeated exact modular arithmetic
(multiply by the inverse of the denominator mod p, subtract, divide by p),
never through floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import EvenPrime, NotAResidue
from .valuation import PLocal, Prime, ord_p


@dataclass(frozen=True)
class DigitExpansion:
    """A finite window of base-p digits c_n, n = start, start+1, ...

    The first digit is nonzero unless the expanded value is zero, in which
    case the window is empty.
    """

    p: Prime
    start: int
    digits: tuple[int, ...]

    def value(self) -> Fraction:
        """Sum of c_n * p**n over the window."""
        total = Fraction(0)
        q = Fraction(self.p) ** self.start
        for c in self.digits:
            total += c * q
            q *= self.p
        return total

    def __str__(self) -> str:
        body = ",".join(str(c) for c in self.digits)
        return f"[{body}] from p^{self.start}"


def digits_of(p: Prime, r, count: int) -> DigitExpansion:
    """First `count` base-p digits of a rational, starting at n = ord_p(r).

    The reconstruction Sum c_n p**n agrees with r modulo p**(start+count).
    A zero input yields the empty window.
    """
    if count <= 0:
        raise ValueError("count must be positive")
    r = Fraction(r)
    if r == 0:
        return DigitExpansion(p, 0, ())
    start = ord_p(p, r)
    x = r / Fraction(p) ** start
    digits = []
    for _ in range(count):
        c = x.numerator * pow(x.denominator, -1, p) % p
        digits.append(c)
        x = (x - c) / p
    return DigitExpansion(p, start, tuple(digits))


def frac_part_k(p: Prime, k: int, r) -> PLocal:
    """The digit sum Sum c_n p**n for n from ord_p(r) through k-1.

    This is the mod-p**k projection into Z[1/p]: the result lies in
    [0, p**k) as a real number and r minus the result has order >= k.
    k may be any integer; an empty window gives zero.
    """
    r = Fraction(r)
    if r == 0:
        return PLocal.zero(p)
    start = ord_p(p, r)
    if start >= k:
        return PLocal.zero(p)
    window = digits_of(p, r, k - start)
    n = 0
    for c in reversed(window.digits):
        n = n * p + c
    return PLocal(p, n, start)


def frac_part(p: Prime, r) -> PLocal:
    """Fractional part: digits from ord_p(r) through 0, i.e. the k = 1 window."""
    return frac_part_k(p, 1, r)


def _residue(p: Prime, d, modulus: int) -> int:
    d = Fraction(d)
    return d.numerator * pow(d.denominator, -1, modulus) % modulus


def sqrt_mod_p(p: Prime, d) -> int:
    """Some square root of d modulo an odd prime p (Tonelli-Shanks).

    Raises NotAResidue when d is a quadratic non-residue mod p, and
    EvenPrime for p = 2.
    """
    if p == 2:
        raise EvenPrime("square roots mod 2 are not supported")
    a = _residue(p, d, p)
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        raise NotAResidue(f"{d} is not a square mod {int(p)}")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # Tonelli-Shanks for p = 1 mod 4
    s, e = p - 1, 0
    while s % 2 == 0:
        s //= 2
        e += 1
    n = 2
    while pow(n, (p - 1) // 2, p) != p - 1:
        n += 1
    x = pow(a, (s + 1) // 2, p)
    b = pow(a, s, p)
    g = pow(n, s, p)
    rr = e
    while True:
        t, m = b, 0
        while t != 1:
            t = t * t % p
            m += 1
        if m == 0:
            return x
        gs = pow(g, 1 << (rr - m - 1), p)
        g = gs * gs % p
        x = x * gs % p
        b = b * g % p
        rr = m


def hensel_sqrt(p: Prime, d, r0: int, m: int) -> int:
    """Newton-lift the simple root r0 of x**2 = d (mod p) to modulus p**m.

    Returns the unique s in [0, p**m) with s**2 = d (mod p**m) and
    s = r0 (mod p). Requires odd p, ord_p(d) = 0 and r0**2 = d (mod p).
    """
    if p == 2:
        raise EvenPrime("Hensel square-root lifting requires odd p")
    if m <= 0:
        raise ValueError("precision m must be positive")
    d = Fraction(d)
    if ord_p(p, d) != 0:
        raise ValueError(f"ord_{int(p)}({d}) must be 0")
    r0 = int(r0) % p
    if (r0 * r0 - _residue(p, d, p)) % p != 0:
        raise NotAResidue(f"{r0}**2 is not {d} mod {int(p)}")
    if r0 == 0:
        raise NotAResidue("root 0 is not simple; ord of d would be positive")
    s = r0
    prec = 1
    while prec < m:
        prec = min(2 * prec, m)
        modulus = p**prec
        dm = _residue(p, d, modulus)
        s = (s - (s * s - dm) * pow(2 * s, -1, modulus)) % modulus
    return s
