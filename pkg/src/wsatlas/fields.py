"""Coefficient fields: exact rationals and prime fields.

Rational arithmetic uses gmpy2.mpq, falling back to fractions.Fraction
when gmpy2 is unavailable.  Prime-field elements are plain ints in
[0, p); all arithmetic goes through the field object so polynomial code
stays field-agnostic.
"""

from __future__ import annotations

import operator

try:
    from gmpy2 import mpq as _rat
except ImportError:  # pragma: no cover
    from fractions import Fraction as _rat

DEFAULT_PRIME = 31991


class RationalField:
    """The field of rational numbers."""

    p = None

    zero = _rat(0)
    one = _rat(1)

    of = staticmethod(_rat)
    add = staticmethod(operator.add)
    sub = staticmethod(operator.sub)
    mul = staticmethod(operator.mul)
    neg = staticmethod(operator.neg)

    @staticmethod
    def div(a, b):
        return a / b

    @staticmethod
    def inv(a):
        return 1 / _rat(a)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    """The field with p elements, p prime."""

    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def of(self, v):
        p = self.p
        if isinstance(v, int):
            return v % p
        # rational input: numerator * denominator^(-1) mod p
        num, den = v.numerator, v.denominator
        if den % p == 0:
            raise ZeroDivisionError(f"denominator of {v} vanishes mod {p}")
        return num * pow(den, p - 2, p) % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def div(self, a, b):
        return a * pow(b, self.p - 2, self.p) % self.p

    def inv(self, a):
        return pow(a, self.p - 2, self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()


def field_from_spec(spec: str):
    """Parse a field descriptor: "q" for rationals, "fp" or "fp:P" for GF(P)."""
    spec = spec.strip().lower()
    if spec in ("q", "qq", "rational"):
        return QQ
    if spec in ("fp", "f_p"):
        return PrimeField(DEFAULT_PRIME)
    if spec.startswith("fp:"):
        return PrimeField(int(spec[3:]))
    raise ValueError(f"unknown field spec {spec!r}")
