"""Exact p-adic valuation arithmetic on rationals and the subring Z[1/p].

Everything here is arbitrary-precision integer and `fractions.Fraction`
arithmetic; no floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DivByZero, NotInRing, NotPrime, ZeroInput

# Witness set making Miller-Rabin deterministic for n < 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for w in _MR_WITNESSES:
        if n % w == 0:
            return n == w
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Prime(int):
    """A prime base; primality is verified once at construction."""

    def __new__(cls, p) -> "Prime":
        p = int(p)
        if not _is_prime(p):
            raise NotPrime(f"{p} is not prime")
        return super().__new__(cls, p)

    def __repr__(self) -> str:
        return f"Prime({int(self)})"


class _PositiveInfinity:
    """Order of zero. Compares greater than every integer."""

    __slots__ = ()

    def __eq__(self, other) -> bool:
        return isinstance(other, _PositiveInfinity)

    def __hash__(self) -> int:
        return hash("padic-order-of-zero")

    def __gt__(self, other) -> bool:
        return not isinstance(other, _PositiveInfinity)

    def __ge__(self, other) -> bool:
        return True

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return isinstance(other, _PositiveInfinity)

    def __repr__(self) -> str:
        return "+Infinity"


POS_INF = _PositiveInfinity()


def _int_ord(p: int, n: int) -> int:
    # n must be nonzero
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def ord_p(p: Prime, r) -> "int | _PositiveInfinity":
    """p-adic order: the nu with r = (a/b) * p**nu, p dividing neither a nor b.

    Returns POS_INF for r = 0 so that min/max and >= comparisons against the
    zero case work without special-casing.
    """
    r = Fraction(r)
    if r == 0:
        return POS_INF
    return _int_ord(p, r.numerator) - _int_ord(p, r.denominator)


def unit_part(p: Prime, r) -> Fraction:
    """The order-zero cofactor r_hat with r = r_hat * p**ord_p(p, r)."""
    r = Fraction(r)
    if r == 0:
        raise ZeroInput("zero has no unit part")
    return r / Fraction(p) ** ord_p(p, r)


def p_abs(p: Prime, r) -> Fraction:
    """p-adic absolute value p**(-ord_p(r)); 0 maps to 0."""
    r = Fraction(r)
    if r == 0:
        return Fraction(0)
    return Fraction(p) ** (-ord_p(p, r))


class PLocal:
    """An element unit * p**exp of Z[1/p] in canonical form.

    Canonical means p does not divide unit, and zero is stored as
    (unit=0, exp=0). Instances are immutable after construction and safe to
    share across threads.
    """

    __slots__ = ("p", "unit", "exp")

    def __init__(self, p: Prime, unit: int, exp: int = 0):
        unit = int(unit)
        exp = int(exp)
        if unit == 0:
            exp = 0
        else:
            while unit % p == 0:
                unit //= p
                exp += 1
        self.p = p
        self.unit = unit
        self.exp = exp

    @classmethod
    def zero(cls, p: Prime) -> "PLocal":
        return cls(p, 0, 0)

    @classmethod
    def one(cls, p: Prime) -> "PLocal":
        return cls(p, 1, 0)

    @classmethod
    def from_fraction(cls, p: Prime, r) -> "PLocal":
        """Exact conversion from a rational; raises NotInRing if the reduced
        denominator is not a power of p."""
        r = Fraction(r)
        if r == 0:
            return cls(p, 0, 0)
        den = r.denominator
        e = 0
        while den % p == 0:
            den //= p
            e += 1
        if den != 1:
            raise NotInRing(f"{r} is not in Z[1/{int(p)}]")
        return cls(p, r.numerator, -e)

    def to_fraction(self) -> Fraction:
        return Fraction(self.unit) * Fraction(self.p) ** self.exp

    def is_zero(self) -> bool:
        return self.unit == 0

    def __bool__(self) -> bool:
        return self.unit != 0

    def ord(self) -> "int | _PositiveInfinity":
        return POS_INF if self.unit == 0 else self.exp

    def _coerce(self, other):
        if isinstance(other, PLocal):
            if other.p != self.p:
                raise ValueError(f"mixed primes {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return PLocal(self.p, other, 0)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.unit == 0:
            return other
        if other.unit == 0:
            return self
        e = min(self.exp, other.exp)
        u = self.unit * self.p ** (self.exp - e) + other.unit * self.p ** (other.exp - e)
        return PLocal(self.p, u, e)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return PLocal(self.p, -self.unit, self.exp)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return PLocal(self.p, self.unit * other.unit, self.exp + other.exp)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.unit == 0:
            raise DivByZero("division by zero in Z[1/p]")
        if self.unit == 0:
            return PLocal.zero(self.p)
        if self.unit % other.unit != 0:
            raise NotInRing(
                f"{self} / {other} leaves Z[1/{int(self.p)}]"
            )
        return PLocal(self.p, self.unit // other.unit, self.exp - other.exp)

    def _cmp_value(self, other):
        if isinstance(other, PLocal):
            return other.to_fraction()
        if isinstance(other, (int, Fraction)):
            return other
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, PLocal):
            return self.p == other.p and self.unit == other.unit and self.exp == other.exp
        v = self._cmp_value(other)
        if v is None:
            return NotImplemented
        return self.to_fraction() == v

    def __hash__(self) -> int:
        return hash(self.to_fraction())

    def __lt__(self, other) -> bool:
        v = self._cmp_value(other)
        if v is None:
            return NotImplemented
        return self.to_fraction() < v

    def __le__(self, other) -> bool:
        v = self._cmp_value(other)
        if v is None:
            return NotImplemented
        return self.to_fraction() <= v

    def __gt__(self, other) -> bool:
        v = self._cmp_value(other)
        if v is None:
            return NotImplemented
        return self.to_fraction() > v

    def __ge__(self, other) -> bool:
        v = self._cmp_value(other)
        if v is None:
            return NotImplemented
        return self.to_fraction() >= v

    def __str__(self) -> str:
        if self.exp == 0:
            return str(self.unit)
        return f"{self.unit}*{int(self.p)}^{self.exp}"

    def __repr__(self) -> str:
        return f"PLocal(p={int(self.p)}, unit={self.unit}, exp={self.exp})"


def as_plocal(p: Prime, r) -> PLocal:
    """Canonical PLocal form of a rational, NotInRing if r is not in Z[1/p]."""
    return PLocal.from_fraction(p, r)


def coprime_units(a: PLocal, b: PLocal) -> bool:
    return gcd(abs(a.unit), abs(b.unit)) == 1
