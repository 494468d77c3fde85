import random
from fractions import Fraction

import pytest

from padic_sylvester import (
    NotInRing,
    NotPrime,
    PLocal,
    POS_INF,
    Prime,
    ZeroInput,
    as_plocal,
    ord_p,
    p_abs,
    unit_part,
)
from padic_sylvester.errors import DivByZero


def rand_fraction(rng, bound=500, nonzero=False):
    num = rng.randint(-bound, bound)
    while nonzero and num == 0:
        num = rng.randint(-bound, bound)
    return Fraction(num, rng.randint(1, bound))


class TestPrime:
    def test_accepts_primes(self):
        for p in (2, 3, 5, 7, 11, 13, 104729, 2**61 - 1):
            assert Prime(p) == p

    def test_rejects_composites_and_small(self):
        for n in (0, 1, 4, 9, 91, 561, 2**61 - 3):
            with pytest.raises(NotPrime):
                Prime(n)

    def test_behaves_like_int(self):
        p = Prime(7)
        assert p**2 == 49 and p % 2 == 1


class TestOrd:
    def test_paper_values(self):
        assert ord_p(Prime(11), Fraction(5, 121)) == -2
        assert ord_p(Prime(7), Fraction(1, 11)) == 0
        assert ord_p(Prime(3), Fraction(1150, 19683)) == -9

    def test_zero_is_positive_infinity(self):
        o = ord_p(Prime(3), 0)
        assert o == POS_INF
        assert o > 10**9
        assert o >= POS_INF
        assert not o > POS_INF
        assert min(5, o) == 5

    def test_multiplicative(self):
        rng = random.Random(101)
        p = Prime(5)
        for _ in range(300):
            x = rand_fraction(rng, nonzero=True)
            y = rand_fraction(rng, nonzero=True)
            assert ord_p(p, x * y) == ord_p(p, x) + ord_p(p, y)

    def test_ultrametric(self):
        rng = random.Random(102)
        p = Prime(3)
        for _ in range(300):
            x = rand_fraction(rng, nonzero=True)
            y = rand_fraction(rng, nonzero=True)
            ox, oy, os = ord_p(p, x), ord_p(p, y), ord_p(p, x + y)
            assert os >= min(ox, oy)
            if ox != oy:
                assert os == min(ox, oy)


class TestUnitPart:
    def test_examples(self):
        assert unit_part(Prime(11), Fraction(5, 121)) == 5
        # 921 = 307 * 3, and 3 does not divide 307
        assert 921 == 307 * 3 and 307 % 3 != 0
        assert unit_part(Prime(3), 921) == 307
        assert unit_part(Prime(3), Fraction(50, 27)) == 50

    def test_zero_raises(self):
        with pytest.raises(ZeroInput):
            unit_part(Prime(3), 0)

    def test_reconstruction(self):
        rng = random.Random(103)
        p = Prime(7)
        for _ in range(200):
            r = rand_fraction(rng, nonzero=True)
            assert unit_part(p, r) * Fraction(p) ** ord_p(p, r) == r


class TestPAbs:
    def test_examples(self):
        assert p_abs(Prime(3), 0) == 0
        assert p_abs(Prime(3), 18) == Fraction(1, 9)
        assert p_abs(Prime(7), Fraction(1, 11)) == 1


class TestPLocal:
    def test_as_plocal_examples(self):
        p = Prime(3)
        x = as_plocal(p, Fraction(115, 81))
        assert (x.unit, x.exp) == (115, -4)
        with pytest.raises(NotInRing):
            as_plocal(p, Fraction(5, 7))
        z = as_plocal(p, 0)
        assert (z.unit, z.exp) == (0, 0) and z.is_zero()

    def test_canonical_form(self):
        p = Prime(3)
        x = PLocal(p, 18, -1)  # 18 * 3^-1 = 2 * 3^1
        assert (x.unit, x.exp) == (2, 1)
        assert PLocal(p, 0, 5).exp == 0

    def test_arith_examples(self):
        p = Prime(3)
        assert PLocal(p, 2) * PLocal(p, 5, -1) == PLocal(p, 10, -1)
        assert (PLocal(p, 1) - PLocal(p, 1)).is_zero()
        q = PLocal(p, 921) / PLocal(p, 307)
        assert (q.unit, q.exp) == (1, 1)

    def test_arith_matches_fractions(self):
        # oracle: exact Fraction arithmetic on the same values
        rng = random.Random(104)
        p = Prime(5)
        for _ in range(300):
            x = PLocal(p, rng.randint(-200, 200), rng.randint(-4, 4))
            y = PLocal(p, rng.randint(-200, 200), rng.randint(-4, 4))
            assert (x + y).to_fraction() == x.to_fraction() + y.to_fraction()
            assert (x - y).to_fraction() == x.to_fraction() - y.to_fraction()
            assert (x * y).to_fraction() == x.to_fraction() * y.to_fraction()

    def test_division_exactness(self):
        p = Prime(3)
        with pytest.raises(NotInRing):
            PLocal(p, 5) / PLocal(p, 2)
        with pytest.raises(DivByZero):
            PLocal(p, 5) / PLocal(p, 0)
        # (10 * 3^2) / (5 * 3^-1) = 2 * 3^3
        assert PLocal(p, 10, 2) / PLocal(p, 5, -1) == PLocal(p, 2, 3)

    def test_round_trip(self):
        rng = random.Random(105)
        p = Prime(7)
        for _ in range(200):
            x = PLocal(p, rng.randint(-10**6, 10**6), rng.randint(-6, 6))
            assert PLocal.from_fraction(p, x.to_fraction()) == x

    def test_comparisons(self):
        p = Prime(3)
        assert PLocal(p, 5, -1) < 2
        assert PLocal(p, 5, -1) > Fraction(3, 2)
        assert PLocal(p, 2) == 2

    def test_mixed_primes_rejected(self):
        with pytest.raises(ValueError):
            PLocal(Prime(3), 1) + PLocal(Prime(5), 1)

    def test_ord(self):
        p = Prime(3)
        assert PLocal(p, 45).ord() == 2
        assert PLocal.zero(p).ord() == POS_INF
