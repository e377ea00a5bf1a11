"""Sparse exact polynomial arithmetic in the fixed variables {x, y, a, b}.

A polynomial is a dictionary mapping exponent quadruples
(e_x, e_y, e_a, e_b) to nonzero Fraction coefficients.  This exact
representation makes polynomial identity testing fully reliable: two
polynomials are equal exactly when their term tables coincide, and the zero
polynomial is the empty table.

The one rewriting rule this module knows is reduction modulo the curve
relation y^2 = x^3 + a x^2 + b x: every term is rewritten until its
y-degree is at most 1.  Coefficients stay rational throughout;
specialisation into a prime field happens only at substitution time.

Canonical term order is descending lexicographic on (e_y, e_x, e_a, e_b),
which fixes the textual form used in serialised output.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import PrimeField, PrimeFieldScalar

VARIABLES = ("x", "y", "a", "b")
_VAR_INDEX = {name: i for i, name in enumerate(VARIABLES)}


def _check_key(key):
    if (
        not isinstance(key, tuple)
        or len(key) != 4
        or any(not isinstance(e, int) or e < 0 for e in key)
    ):
        raise ValueError(f"exponent key must be 4 nonnegative ints, got {key!r}")
    return key


class MultiPoly:
    """Immutable sparse polynomial over the rationals in x, y, a, b."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[tuple, Fraction] = {}
        for key, coeff in (terms or {}).items():
            _check_key(key)
            c = Fraction(coeff)
            if c:
                clean[key] = c
        self.terms = clean

    @classmethod
    def zero(cls) -> MultiPoly:
        return cls()

    @classmethod
    def const(cls, value) -> MultiPoly:
        return cls({(0, 0, 0, 0): Fraction(value)})

    @classmethod
    def variable(cls, name: str) -> MultiPoly:
        if name not in _VAR_INDEX:
            raise ValueError(f"unknown variable {name!r}; expected one of {VARIABLES}")
        key = [0, 0, 0, 0]
        key[_VAR_INDEX[name]] = 1
        return cls({tuple(key): Fraction(1)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return MultiPoly.const(other)
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self.terms)
        for key, coeff in rhs.terms.items():
            out[key] = out.get(key, Fraction(0)) + coeff
        return MultiPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __neg__(self):
        return MultiPoly({key: -coeff for key, coeff in self.terms.items()})

    def __mul__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out: dict[tuple, Fraction] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in rhs.terms.items():
                key = (k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2], k1[3] + k2[3])
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = MultiPoly.const(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self.terms == rhs.terms

    def sorted_terms(self):
        """Terms in canonical order: descending lex on (e_y, e_x, e_a, e_b)."""
        return sorted(
            self.terms.items(),
            key=lambda item: (item[0][1], item[0][0], item[0][2], item[0][3]),
            reverse=True,
        )

    def occurring(self) -> set:
        """Names of the variables present with positive exponent."""
        names = set()
        for key in self.terms:
            for i, e in enumerate(key):
                if e:
                    names.add(VARIABLES[i])
        return names

    def __str__(self):
        if not self.terms:
            return "0"
        rendered = []
        for key, coeff in self.sorted_terms():
            parts = [str(coeff)]
            for i, e in enumerate(key):
                if e == 1:
                    parts.append(VARIABLES[i])
                elif e > 1:
                    parts.append(f"{VARIABLES[i]}^{e}")
            rendered.append("·".join(parts))
        return " + ".join(rendered)

    def __repr__(self):
        return f"MultiPoly({self})"


X = MultiPoly.variable("x")
Y = MultiPoly.variable("y")
A = MultiPoly.variable("a")
B = MultiPoly.variable("b")


def f_curve() -> MultiPoly:
    """The cubic x^3 + a x^2 + b x whose square-root locus is the curve."""
    return X ** 3 + A * X ** 2 + B * X


def poly_mul(lhs: MultiPoly, rhs: MultiPoly) -> MultiPoly:
    return lhs * rhs


def is_zero(q) -> bool:
    return q == 0


def reduce_mod_curve(q: MultiPoly) -> MultiPoly:
    """Rewrite y^2 -> x^3 + a x^2 + b x until every term has y-degree <= 1."""
    f = f_curve()
    powers = {0: MultiPoly.const(1)}
    out = MultiPoly.zero()
    for (ex, ey, ea, eb), coeff in q.terms.items():
        half, rem = divmod(ey, 2)
        term = MultiPoly({(ex, rem, ea, eb): coeff})
        if half:
            while half not in powers:
                k = max(powers)
                powers[k + 1] = powers[k] * f
            term = term * powers[half]
        out = out + term
    return out


def poly_substitute(q: MultiPoly, bindings: dict):
    """Substitute values for some or all of x, y, a, b.

    Binding values may be ints, Fractions, other polynomials, or
    prime-field scalars.  A prime-field assignment must cover every
    variable occurring in ``q`` and yields a scalar; each rational
    coefficient is reduced mod p, which fails if its denominator is
    divisible by p.  A rational assignment yields a Fraction when every
    occurring variable is bound to a scalar, and a polynomial otherwise.
    """
    for name in bindings:
        if name not in _VAR_INDEX:
            raise ValueError(f"unknown variable {name!r} in substitution")

    modulus = None
    for value in bindings.values():
        if isinstance(value, PrimeFieldScalar):
            if modulus is not None and value.modulus != modulus:
                raise ValueError("bindings mix different prime fields")
            modulus = value.modulus

    occurring = q.occurring()
    if modulus is not None:
        missing = occurring - set(bindings)
        if missing:
            raise ValueError(
                f"prime-field substitution leaves {sorted(missing)} unbound"
            )
        field = PrimeField(modulus)
        values = {}
        for name, value in bindings.items():
            if isinstance(value, MultiPoly):
                raise ValueError(
                    "cannot substitute a polynomial under a prime-field assignment"
                )
            values[_VAR_INDEX[name]] = field(value)
        acc = field.zero
        for key, coeff in q.terms.items():
            term = field.from_rational(coeff)
            for i, e in enumerate(key):
                if e:
                    term = term * values[i] ** e
            acc = acc + term
        return acc

    values = {}
    all_scalar = True
    for name, value in bindings.items():
        if isinstance(value, MultiPoly):
            values[_VAR_INDEX[name]] = value
            all_scalar = False
        else:
            values[_VAR_INDEX[name]] = MultiPoly.const(value)
    out = MultiPoly.zero()
    for key, coeff in q.terms.items():
        term = MultiPoly.const(coeff)
        for i, e in enumerate(key):
            if not e:
                continue
            if i in values:
                term = term * values[i] ** e
            else:
                term = term * MultiPoly({_unit_key(i): Fraction(1)}) ** e
        out = out + term
    if all_scalar and occurring <= set(bindings):
        return out.terms.get((0, 0, 0, 0), Fraction(0))
    return out


def _unit_key(i: int) -> tuple:
    key = [0, 0, 0, 0]
    key[i] = 1
    return tuple(key)
