import random
from fractions import Fraction

import pytest

from padic_sylvester import (
    EvenPrime,
    NotAResidue,
    Prime,
    digits_of,
    frac_part,
    frac_part_k,
    hensel_sqrt,
    ord_p,
    sqrt_mod_p,
)


def rand_fraction(rng, bound=400, nonzero=False):
    num = rng.randint(-bound, bound)
    while nonzero and num == 0:
        num = rng.randint(-bound, bound)
    return Fraction(num, rng.randint(1, bound))


class TestDigitsOf:
    def test_four_thirds(self):
        d = digits_of(Prime(3), Fraction(4, 3), 2)
        assert d.start == -1 and d.digits == (1, 1)
        assert d.value() == Fraction(1, 3) + 1

    def test_power(self):
        d = digits_of(Prime(3), 9, 1)
        assert d.start == 2 and d.digits == (1,)

    def test_first_digit_via_modular_inverse(self):
        # oracle: 25 * 473^-1 mod 3 by extended gcd
        expected = 25 * pow(473, -1, 3) % 3
        assert expected == 2
        d = digits_of(Prime(3), Fraction(25, 473), 1)
        assert d.start == 0 and d.digits == (expected,)

    def test_zero(self):
        d = digits_of(Prime(5), 0, 3)
        assert d.digits == () and d.value() == 0

    def test_reconstruction_property(self):
        rng = random.Random(201)
        for _ in range(200):
            p = Prime(rng.choice([3, 5, 7]))
            r = rand_fraction(rng, nonzero=True)
            count = rng.randint(1, 10)
            d = digits_of(p, r, count)
            assert all(0 <= c < p for c in d.digits)
            assert d.digits[0] != 0
            assert ord_p(p, r - d.value()) >= d.start + count


class TestFracPart:
    def test_examples(self):
        assert frac_part(Prime(3), Fraction(2, 5)).to_fraction() == 1
        assert frac_part(Prime(3), Fraction(4, 3)).to_fraction() == Fraction(4, 3)
        assert frac_part(Prime(5), 7).to_fraction() == 2
        assert frac_part(Prime(3), 0).is_zero()

    def test_equals_window_one(self):
        rng = random.Random(202)
        p = Prime(7)
        for _ in range(100):
            r = rand_fraction(rng, nonzero=True)
            assert frac_part(p, r) == frac_part_k(p, 1, r)


class TestFracPartK:
    def test_examples(self):
        p = Prime(3)
        assert frac_part_k(p, 1, Fraction(25, 473)).to_fraction() == 2
        assert frac_part_k(p, 1, 9).is_zero()
        assert frac_part_k(p, 2, Fraction(25, 473)).to_fraction() == 5

    def test_nonpositive_k(self):
        p = Prime(3)
        # digits of 4/9 start at -2, so even k = 0 has a window
        got = frac_part_k(p, 0, Fraction(4, 9))
        assert ord_p(p, Fraction(4, 9) - got.to_fraction()) >= 0
        assert frac_part_k(p, -5, Fraction(4, 9)).is_zero()

    def test_defining_properties(self):
        rng = random.Random(203)
        for _ in range(300):
            p = Prime(rng.choice([3, 5, 11]))
            r = rand_fraction(rng, nonzero=True)
            k = rng.randint(-3, 6)
            got = frac_part_k(p, k, r).to_fraction()
            assert 0 <= got < Fraction(p) ** k
            assert ord_p(p, r - got) >= k


class TestSqrtModP:
    def test_finds_roots(self):
        rng = random.Random(204)
        for _ in range(100):
            p = Prime(rng.choice([3, 5, 7, 11, 13, 10007]))
            x = rng.randint(1, p - 1)
            r = sqrt_mod_p(p, x * x % p)
            assert r * r % p == x * x % p

    def test_nonresidue(self):
        with pytest.raises(NotAResidue):
            sqrt_mod_p(Prime(7), 3)  # squares mod 7 are {0,1,2,4}

    def test_even_prime(self):
        with pytest.raises(EvenPrime):
            sqrt_mod_p(Prime(2), 1)


class TestHenselSqrt:
    def test_examples(self):
        assert hensel_sqrt(Prime(7), 11, 2, 1) == 2
        s = hensel_sqrt(Prime(7), 11, 2, 2)
        assert s * s % 49 == 11 and s % 7 == 2
        assert hensel_sqrt(Prime(5), 4, 2, 3) == 2

    def test_consistent_with_embedding_choice(self):
        # 1/sqrt(11) = 4 mod 7 pairs with sqrt(11) = 2 mod 7: 4 * 2 = 1 mod 7
        assert 4 * 2 % 7 == 1

    def test_lift_property(self):
        rng = random.Random(205)
        for _ in range(100):
            p = Prime(rng.choice([3, 5, 7, 11, 13]))
            r0 = rng.randint(1, p - 1)
            d = Fraction(r0 * r0 % p)
            if d == 0:
                continue
            m = rng.randint(1, 12)
            s = hensel_sqrt(p, d, r0, m)
            assert (s * s - d) % p**m == 0
            assert s % p == r0

    def test_rational_d(self):
        # root 4 of d = 1/11 mod 7: 4*4*11 = 176 = 1 (mod 7)
        p = Prime(7)
        s = hensel_sqrt(p, Fraction(1, 11), 4, 3)
        d_mod = pow(11, -1, 7**3)
        assert s * s % 7**3 == d_mod % 7**3

    def test_rejects_bad_inputs(self):
        with pytest.raises(EvenPrime):
            hensel_sqrt(Prime(2), 1, 1, 2)
        with pytest.raises(NotAResidue):
            hensel_sqrt(Prime(7), 11, 3, 2)  # 3^2 = 2, not 11 = 4 mod 7
        with pytest.raises(ValueError):
            hensel_sqrt(Prime(7), 14, 0, 2)  # ord_7(14) = 1
