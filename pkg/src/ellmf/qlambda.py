"""Exact rational functions in one parameter over the rationals.

A Scalar is num/den with both univariate polynomials in the parameter
(coefficient tuples over Fraction, low degree first), kept coprime with a
monic denominator.  This is the coefficient field for all matrix work, so
identities proved here hold for every admissible parameter value at once.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Poly = tuple[Fraction, ...]        # coefficient of lambda^k at index k

P_ZERO: Poly = ()
P_ONE: Poly = (Fraction(1),)


def p_trim(c) -> Poly:
    c = [Fraction(v) for v in c]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def p_add(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return p_trim([(a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0)
                   for k in range(n)])


def p_neg(a: Poly) -> Poly:
    return tuple(-v for v in a)


def p_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return P_ZERO
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return p_trim(out)


def p_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b):
        c = r[-1] / b[-1]
        k = len(r) - len(b)
        q[k] = c
        for i, v in enumerate(b):
            r[k + i] -= c * v
        while r and r[-1] == 0:
            r.pop()
    return p_trim(q), p_trim(r)


def p_gcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, p_divmod(a, b)[1]
    if a:
        lead = a[-1]
        a = tuple(v / lead for v in a)
    return a


def p_eval(a: Poly, x: Fraction) -> Fraction:
    out = Fraction(0)
    for v in reversed(a):
        out = out * x + v
    return out


def p_const(v) -> Poly:
    return p_trim([Fraction(v)])


@dataclass(frozen=True)
class Scalar:
    """num/den in canonical form: coprime, den monic and nonzero."""

    num: Poly
    den: Poly = P_ONE

    def __post_init__(self):
        num, den = p_trim(self.num), p_trim(self.den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            den = P_ONE
        else:
            g = p_gcd(num, den)
            if len(g) > 1 or g[0] != 1:
                num = p_divmod(num, g)[0]
                den = p_divmod(den, g)[0]
            lead = den[-1]
            if lead != 1:
                num = tuple(v / lead for v in num)
                den = tuple(v / lead for v in den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def of(cls, v) -> "Scalar":
        if isinstance(v, Scalar):
            return v
        return cls(p_const(v))

    def __bool__(self) -> bool:
        return bool(self.num)

    def __add__(self, other):
        other = Scalar.of(other)
        return Scalar(p_add(p_mul(self.num, other.den),
                            p_mul(other.num, self.den)),
                      p_mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(p_neg(self.num), self.den)

    def __sub__(self, other):
        return self + (-Scalar.of(other))

    def __rsub__(self, other):
        return Scalar.of(other) + (-self)

    def __mul__(self, other):
        other = Scalar.of(other)
        return Scalar(p_mul(self.num, other.num), p_mul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self.num:
            raise ZeroDivisionError("inverting zero")
        return Scalar(self.den, self.num)

    def __truediv__(self, other):
        return self * Scalar.of(other).inverse()

    def is_rational(self) -> bool:
        return len(self.num) <= 1 and self.den == P_ONE

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("scalar depends on the parameter")
        return self.num[0] if self.num else Fraction(0)

    def specialize(self, value: Fraction) -> "Scalar":
        value = Fraction(value)
        d = p_eval(self.den, value)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at {value}")
        return Scalar.of(p_eval(self.num, value) / d)

    def lambda_coeffs(self) -> Poly:
        """Numerator coefficients; requires a polynomial (denominator 1)."""
        if self.den != P_ONE:
            raise ValueError("scalar is not polynomial in the parameter")
        return self.num


ZERO = Scalar(P_ZERO)
ONE = Scalar(P_ONE)
LAMBDA = Scalar((Fraction(0), Fraction(1)))
