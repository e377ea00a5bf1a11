import random
from fractions import Fraction

import pytest

from chordcubic.scalars import (
    PrimeField,
    PrimeFieldScalar,
    field_inv,
    is_prime,
    make_rational,
    rational_sqrt,
    squares_table,
)


def test_make_rational_reduces():
    assert make_rational(2, 4) == Fraction(1, 2)
    assert make_rational(0, 5) == Fraction(0, 1)
    assert make_rational(-3, -6) == Fraction(1, 2)


def test_make_rational_sign_on_numerator():
    q = make_rational(3, -6)
    assert q.numerator == -1 and q.denominator == 2


def test_make_rational_rejects_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        make_rational(1, 0)


def test_make_rational_rejects_non_integers():
    with pytest.raises(ValueError):
        make_rational(1.5, 2)


def test_field_inv_examples():
    assert field_inv(PrimeFieldScalar(3, 7)) == PrimeFieldScalar(5, 7)
    assert field_inv(PrimeFieldScalar(1, 7)) == PrimeFieldScalar(1, 7)
    assert field_inv(Fraction(1)) == 1
    assert field_inv(Fraction(-2, 3)) == Fraction(-3, 2)
    with pytest.raises(ZeroDivisionError):
        field_inv(PrimeFieldScalar(0, 7))
    with pytest.raises(ZeroDivisionError):
        field_inv(Fraction(0))


def test_field_inv_is_involutive():
    rng = random.Random(7)
    for p in (5, 7, 101, 409):
        for _ in range(20):
            s = PrimeFieldScalar(rng.randrange(1, p), p)
            assert field_inv(field_inv(s)) == s
    for _ in range(20):
        q = Fraction(rng.randrange(-40, 40) or 1, rng.randrange(1, 40))
        assert field_inv(field_inv(q)) == q


def test_fermat_little_theorem_sampled():
    rng = random.Random(11)
    for p in (5, 13, 101, 65521):
        for _ in range(10):
            s = PrimeFieldScalar(rng.randrange(1, p), p)
            assert s ** (p - 1) == 1


def test_rational_arithmetic_is_exact():
    rng = random.Random(3)
    for _ in range(100):
        a = Fraction(rng.randrange(-99, 99), rng.randrange(1, 99))
        c = Fraction(rng.randrange(-99, 99), rng.randrange(1, 99))
        assert (a + c) - c == a
        assert (a * c) / c == a if c else True


def test_squares_table_p7():
    table = squares_table(7)
    assert set(table) == {0, 1, 2, 4}
    assert table[2] == (3, 4)
    assert 3 not in table


def test_squares_table_shape():
    for p in (5, 7, 101, 211):
        table = squares_table(p)
        assert len(table) == (p + 1) // 2
        roots = [y for ys in table.values() for y in ys]
        assert sorted(roots) == list(range(p))
        for r, ys in table.items():
            for y in ys:
                assert y * y % p == r


@pytest.mark.parametrize("bad", [1, 2, 3, 4, 9, 91, 1 << 16, 65537, (1 << 16) + 3])
def test_bad_moduli_rejected(bad):
    with pytest.raises(ValueError):
        squares_table(bad)
    with pytest.raises(ValueError):
        PrimeField(bad)


def test_is_prime_small():
    primes = [n for n in range(60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


def test_prime_field_scalar_mixes_with_int():
    s = PrimeFieldScalar(3, 7)
    assert s + 5 == 1
    assert 5 + s == 1
    assert s - 5 == 5
    assert 5 - s == 2
    assert 2 * s == 6
    assert s / 3 == 1
    assert 1 / s == 5
    assert -s == 4
    assert s ** 0 == 1
    assert s ** -1 == 5


def test_prime_field_scalar_rejects_mixed_moduli():
    with pytest.raises(ValueError):
        PrimeFieldScalar(1, 5) + PrimeFieldScalar(1, 7)


def test_prime_field_from_rational():
    field = PrimeField(7)
    assert field(Fraction(1, 2)) == 4
    with pytest.raises(ZeroDivisionError):
        field(Fraction(1, 7))


def test_renderings():
    assert str(PrimeFieldScalar(3, 7)) == "3 mod 7"
    assert str(Fraction(-3, 6)) == "-1/2"
    assert str(Fraction(4, 2)) == "2"


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(0)) == 0
    assert rational_sqrt(Fraction(2)) is None
    assert rational_sqrt(Fraction(-4)) is None
