"""Exact field arithmetic shared by every other module.

Two coefficient fields are supported:

* arbitrary-precision rationals, represented directly by
  :class:`fractions.Fraction` (always stored reduced, denominator positive),
* prime fields F_p for odd primes 3 < p < 2**16, via
  :class:`PrimeFieldScalar`.

Both kinds of scalar support ``+ - * / **`` against each other and against
plain ``int``, so the curve, polynomial and plane-geometry code runs
unchanged over either field.  Characteristic 2 and 3 are rejected outright:
the y^2 = f(x) curve model and the Hessian flex criterion both degenerate
there.  All values are immutable, all operations pure.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import isqrt

MAX_PRIME = 1 << 16


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (moduli are desk scale)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@lru_cache(maxsize=None)
def check_modulus(p: int) -> int:
    """Validate an odd prime modulus with 3 < p < 2**16 and return it."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise ValueError(f"modulus must be an integer, got {p!r}")
    if p <= 3 or p >= MAX_PRIME or not is_prime(p):
        raise ValueError(f"modulus must be a prime with 3 < p < 2**16, got {p}")
    return p


class PrimeFieldScalar:
    """A residue in F_p; mixes freely with ``int`` operands."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        check_modulus(modulus)
        self.value = value % modulus
        self.modulus = modulus

    def _coerce(self, other):
        if isinstance(other, PrimeFieldScalar):
            if other.modulus != self.modulus:
                raise ValueError(
                    f"mixed moduli: {self.modulus} vs {other.modulus}"
                )
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other % self.modulus
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return PrimeFieldScalar(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return PrimeFieldScalar(self.value - v, self.modulus)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return PrimeFieldScalar(v - self.value, self.modulus)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return PrimeFieldScalar(self.value * v, self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self * PrimeFieldScalar(v, self.modulus).inverse()

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return PrimeFieldScalar(v, self.modulus) * self.inverse()

    def __neg__(self):
        return PrimeFieldScalar(-self.value, self.modulus)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return PrimeFieldScalar(
            pow(self.value, exponent, self.modulus), self.modulus
        )

    def inverse(self) -> PrimeFieldScalar:
        """Multiplicative inverse via Fermat's little theorem."""
        if self.value == 0:
            raise ZeroDivisionError(f"0 mod {self.modulus} has no inverse")
        return PrimeFieldScalar(
            pow(self.value, self.modulus - 2, self.modulus), self.modulus
        )

    def __eq__(self, other):
        if isinstance(other, PrimeFieldScalar):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __str__(self):
        return f"{self.value} mod {self.modulus}"

    def __repr__(self):
        return f"PrimeFieldScalar({self.value}, {self.modulus})"


class PrimeField:
    """The field F_p; builds scalars from ints or exact rationals."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        self.p = check_modulus(p)

    def __call__(self, value) -> PrimeFieldScalar:
        if isinstance(value, PrimeFieldScalar):
            if value.modulus != self.p:
                raise ValueError(f"scalar mod {value.modulus} is not in F_{self.p}")
            return value
        if isinstance(value, Fraction):
            return self.from_rational(value)
        if isinstance(value, int) and not isinstance(value, bool):
            return PrimeFieldScalar(value, self.p)
        raise ValueError(f"cannot coerce {value!r} into F_{self.p}")

    def from_rational(self, q: Fraction) -> PrimeFieldScalar:
        """Reduce an exact rational mod p; the denominator must be invertible."""
        if q.denominator % self.p == 0:
            raise ZeroDivisionError(
                f"denominator {q.denominator} is not invertible mod {self.p}"
            )
        num = PrimeFieldScalar(q.numerator, self.p)
        return num * PrimeFieldScalar(q.denominator, self.p).inverse()

    @property
    def zero(self) -> PrimeFieldScalar:
        return PrimeFieldScalar(0, self.p)

    @property
    def one(self) -> PrimeFieldScalar:
        return PrimeFieldScalar(1, self.p)

    def sqrt_table(self):
        return squares_table(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


@lru_cache(maxsize=None)
def _squares_cached(p: int) -> dict:
    table: dict[int, list[int]] = {}
    for y in range(p):
        table.setdefault(y * y % p, []).append(y)
    return {r: tuple(ys) for r, ys in table.items()}


def squares_table(p: int) -> dict:
    """Map each quadratic residue mod p to the tuple of its square roots.

    Roots are listed in increasing order; non-residues are absent.  The
    table has exactly (p+1)/2 keys and the root tuples partition 0..p-1.
    """
    check_modulus(p)
    return dict(_squares_cached(p))


def make_rational(n: int, d: int = 1) -> Fraction:
    """Exact reduced fraction n/d; the sign is carried on the numerator."""
    for part in (n, d):
        if not isinstance(part, int) or isinstance(part, bool):
            raise ValueError(f"rational parts must be integers, got {part!r}")
    if d == 0:
        raise ZeroDivisionError("zero denominator")
    return Fraction(n, d)


def field_inv(s):
    """Multiplicative inverse of a nonzero scalar, in its own field."""
    if isinstance(s, PrimeFieldScalar):
        return s.inverse()
    q = Fraction(s)
    if q == 0:
        raise ZeroDivisionError("0 has no inverse")
    return 1 / q


def rational_sqrt(q) -> Fraction | None:
    """Exact square root of a rational if it is a perfect square, else None."""
    q = Fraction(q)
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)
