"""The chord map p -> line(p, p + beta) and the cubic its image satisfies.

For an affine point p = (x, y) other than beta itself, the line through p
and p + beta = (b/x, -b y/x^2) is

    [U : V : W] = [y (x^2 + b) : b x - x^3 : -2 b x y],

where [U : V : W] names the line U X + V Y + W Z = 0.  The two remaining
inputs O and beta form a single fiber of the map and go to [1 : 0 : 0],
the line X = 0 through both.  Smoothness (b (a^2 - 4b) != 0) guarantees
the formula never degenerates to [0 : 0 : 0].

Every chord satisfies one cubic equation G(U, V, W) = 0 with

    G = 4 b^2 T V^2 - (4b - a^2) W^3 + 2 a T W^2 + T^2 W,   T = 2 b U - a W.

This denominator-free form stays valid at a = 0 and over any field where
the curve is smooth; expanded it is
8 b^3 UV^2 + 4 b^2 U^2 W - 4 a b^2 V^2 W - 4 b W^3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .curve import CurveParams, CurvePoint, beta
from .scalars import PrimeField, PrimeFieldScalar


def coerce_triple(coords) -> tuple:
    """Lift a 3-tuple of ints/Fractions/prime-field scalars into one field."""
    coords = tuple(coords)
    if len(coords) != 3:
        raise ValueError(f"expected a projective triple, got {coords!r}")
    modulus = None
    for c in coords:
        if isinstance(c, PrimeFieldScalar):
            if modulus is not None and c.modulus != modulus:
                raise ValueError("triple mixes different prime fields")
            modulus = c.modulus
    if modulus is not None:
        field = PrimeField(modulus)
        return tuple(field(c) for c in coords)
    return tuple(Fraction(c) for c in coords)


def normalize_triple(coords) -> tuple:
    """Scale a projective triple so its first nonzero entry is 1."""
    coords = coerce_triple(coords)
    for c in coords:
        if c != 0:
            return tuple(v / c for v in coords)
    raise ValueError("projective coordinates must not all vanish")


def as_triple(obj) -> tuple:
    """Accept a raw triple or anything exposing normalized ``coords``."""
    return getattr(obj, "coords", obj)


class DualPoint:
    """A projective triple [U:V:W] naming the line U X + V Y + W Z = 0."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = normalize_triple(coords)

    def __eq__(self, other):
        if not isinstance(other, DualPoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __str__(self):
        return "[" + ":".join(_coord_str(c) for c in self.coords) + "]"

    def __repr__(self):
        return f"DualPoint({self})"


def _coord_str(c) -> str:
    return str(c.value) if isinstance(c, PrimeFieldScalar) else str(c)


class TernaryForm:
    """Homogeneous form in (U, V, W) as a sparse coefficient table.

    Keys are exponent triples (i, j, k) with i + j + k = degree; zero
    coefficients are dropped.  Coefficients may be Fractions, prime-field
    scalars, or any exact ring values supporting + - * and comparison
    with 0 (polynomial coefficients are used for symbolic checks).
    Forms defining curves always have at least one nonzero coefficient;
    the empty table (zero form) may appear in intermediate arithmetic.
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs):
        if not isinstance(degree, int) or degree < 0:
            raise ValueError(f"degree must be a nonnegative int, got {degree!r}")
        clean = {}
        for key, coeff in (coeffs or {}).items():
            if (
                not isinstance(key, tuple)
                or len(key) != 3
                or any(not isinstance(e, int) or e < 0 for e in key)
            ):
                raise ValueError(f"bad monomial key {key!r}")
            if sum(key) != degree:
                raise ValueError(f"monomial {key} does not have degree {degree}")
            if coeff != 0:
                clean[key] = coeff
        self.degree = degree
        self.coeffs = clean

    @classmethod
    def monomial(cls, i: int, j: int, k: int, coeff) -> TernaryForm:
        return cls(i + j + k, {(i, j, k): coeff})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def sorted_items(self):
        return sorted(self.coeffs.items(), reverse=True)

    def __add__(self, other):
        if not isinstance(other, TernaryForm):
            return NotImplemented
        if self.degree != other.degree and not (self.is_zero or other.is_zero):
            raise ValueError("cannot add forms of different degrees")
        degree = other.degree if self.is_zero else self.degree
        out = dict(self.coeffs)
        for key, coeff in other.coeffs.items():
            out[key] = out[key] + coeff if key in out else coeff
        return TernaryForm(degree, out)

    def __sub__(self, other):
        if not isinstance(other, TernaryForm):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return TernaryForm(self.degree, {k: -c for k, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, TernaryForm):
            out = {}
            for k1, c1 in self.coeffs.items():
                for k2, c2 in other.coeffs.items():
                    key = (k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2])
                    prod = c1 * c2
                    out[key] = out[key] + prod if key in out else prod
            return TernaryForm(self.degree + other.degree, out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, factor) -> TernaryForm:
        return TernaryForm(
            self.degree, {k: factor * c for k, c in self.coeffs.items()}
        )

    def partial(self, axis: int) -> TernaryForm:
        """Exact partial derivative along U (0), V (1) or W (2)."""
        out = {}
        for key, coeff in self.coeffs.items():
            e = key[axis]
            if not e:
                continue
            new = list(key)
            new[axis] = e - 1
            out[tuple(new)] = coeff * e
        return TernaryForm(max(self.degree - 1, 0), out)

    def evaluate(self, coords):
        """Exact value at a projective triple (zero/nonzero is projective)."""
        u, v, w = as_triple(coords)
        acc = None
        for (i, j, k), coeff in self.coeffs.items():
            term = coeff * u ** i * v ** j * w ** k
            acc = term if acc is None else acc + term
        return 0 if acc is None else acc

    def canonical(self) -> TernaryForm:
        """Content-normalized copy for deterministic comparison.

        Rational tables are scaled to coprime integers with the leading
        (descending-lex) coefficient positive; prime-field tables are made
        monic in the leading coefficient.  Tables with ring coefficients
        are returned unchanged.
        """
        if self.is_zero:
            return self
        lead_key = max(self.coeffs)
        lead = self.coeffs[lead_key]
        if isinstance(lead, PrimeFieldScalar):
            return self.scale(lead.inverse())
        if isinstance(lead, (int, Fraction)):
            fracs = {k: Fraction(c) for k, c in self.coeffs.items()}
            den = lcm(*(c.denominator for c in fracs.values()))
            num = gcd(*(abs(c.numerator * den // c.denominator) for c in fracs.values()))
            factor = Fraction(den, num)
            if fracs[lead_key] < 0:
                factor = -factor
            return TernaryForm(self.degree, {k: c * factor for k, c in fracs.items()})
        return self

    def as_json_table(self) -> dict:
        return {
            f"U{i}V{j}W{k}": _coord_str(c) for (i, j, k), c in self.sorted_items()
        }

    def __eq__(self, other):
        if not isinstance(other, TernaryForm):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __str__(self):
        if self.is_zero:
            return "0"
        rendered = []
        for (i, j, k), coeff in self.sorted_items():
            parts = [_coord_str(coeff)]
            for name, e in (("U", i), ("V", j), ("W", k)):
                if e == 1:
                    parts.append(name)
                elif e > 1:
                    parts.append(f"{name}^{e}")
            rendered.append("·".join(parts))
        return " + ".join(rendered)

    def __repr__(self):
        return f"TernaryForm({self.degree}, {self})"


def line_through(p, q) -> DualPoint:
    """The unique line through two distinct projective points (cross product)."""
    p = coerce_triple(as_triple(p))
    q = coerce_triple(as_triple(q))
    cross = (
        p[1] * q[2] - p[2] * q[1],
        p[2] * q[0] - p[0] * q[2],
        p[0] * q[1] - p[1] * q[0],
    )
    if all(c == 0 for c in cross):
        raise ValueError("no unique line: the points coincide")
    return DualPoint(cross)


def chord_map(p: CurvePoint) -> DualPoint:
    """The line through p and p + beta, as a dual-plane point."""
    params = p.params
    if p.is_infinity or p == beta(params):
        one, zero = params.scalar(1), params.scalar(0)
        return DualPoint((one, zero, zero))
    x, y, b = p.x, p.y, params.b
    return DualPoint((y * (x * x + b), b * x - x ** 3, -2 * b * x * y))


def chord_cubic_generic(a, b, one) -> TernaryForm:
    """The image cubic G over any commutative ring containing a, b, one."""
    u = TernaryForm.monomial(1, 0, 0, one)
    v = TernaryForm.monomial(0, 1, 0, one)
    w = TernaryForm.monomial(0, 0, 1, one)
    t = (2 * b) * u - a * w
    return (
        (4 * b * b) * (t * v * v)
        - (4 * b - a * a) * (w * w * w)
        + (2 * a) * (t * w * w)
        + t * t * w
    )


def chord_cubic(params: CurveParams) -> TernaryForm:
    """The content-normalized cubic vanishing on every chord of the curve."""
    return chord_cubic_generic(params.a, params.b, params.scalar(1)).canonical()


def weierstrass_form(params: CurveParams) -> TernaryForm:
    """The curve's own defining cubic Y^2 Z - X^3 - a X^2 Z - b X Z^2."""
    one = params.scalar(1)
    return TernaryForm(
        3,
        {
            (0, 2, 1): one,
            (3, 0, 0): -one,
            (2, 0, 1): -params.a,
            (1, 0, 2): -params.b,
        },
    )


@dataclass(frozen=True)
class CubicInvariants:
    """Closed-form parameters of the image cubic.

    e and mu_inv pin the flex-tangent normalization, c1 and c2 the two
    rational coefficients of the depressed equation
    e (U - mu_inv W) V^2 = W^3 - c1 (U - mu_inv W) W^2 - c2 (U - mu_inv W)^2 W.
    """

    e: object
    c1: object
    c2: object
    mu_inv: object

    def as_dict(self) -> dict:
        return {
            "e": _coord_str(self.e),
            "c1": _coord_str(self.c1),
            "c2": _coord_str(self.c2),
            "muInv": _coord_str(self.mu_inv),
        }


def cubic_invariants(params: CurveParams) -> CubicInvariants:
    """e = -8b^3/(a^2-4b), c1 = 4ab/(4b-a^2), c2 = 4b^2/(4b-a^2), muInv = a/(2b)."""
    a, b = params.a, params.b
    d = a * a - 4 * b
    return CubicInvariants(
        e=-8 * b ** 3 / d,
        c1=4 * a * b / (4 * b - a * a),
        c2=4 * b * b / (4 * b - a * a),
        mu_inv=a / (2 * b),
    )


def invariants_form(params: CurveParams) -> TernaryForm:
    """The cubic defined by the closed-form invariants, content-normalized.

    Projectively this is the same curve as :func:`chord_cubic`; the two
    tables agree exactly after normalization.
    """
    inv = cubic_invariants(params)
    one = params.scalar(1)
    u = TernaryForm.monomial(1, 0, 0, one)
    v = TernaryForm.monomial(0, 1, 0, one)
    w = TernaryForm.monomial(0, 0, 1, one)
    s = u - inv.mu_inv * w
    h = inv.e * (s * v * v) - w * w * w + inv.c1 * (s * w * w) + inv.c2 * (s * s * w)
    return h.canonical()
