"""Exact scalar arithmetic over the rationals and prime fields GF(p).

Elements are plain Python values owned by a :class:`FieldSpec`:
``fractions.Fraction`` for the rationals and ``int`` residues in ``[0, p)``
for GF(p).  All arithmetic goes through the field object so that residues
stay canonical, in the style of a computer-algebra "domain".

    >>> Q = FieldSpec.rational()
    >>> Q.parse("-3/5")
    Fraction(-3, 5)
    >>> F7 = FieldSpec.prime(7)
    >>> fe_inv(F7, 2)
    4
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, int]

_LITERAL = re.compile(r"^\s*([+-]?)\s*(\d+)\s*(?:/\s*(\d+))?\s*$")


class FieldError(ValueError):
    pass


class FieldMismatch(FieldError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``kind`` is ``"rational"`` or ``"prime"``."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "rational":
            if self.p is not None:
                raise FieldError("rational field takes no modulus")
        elif self.kind == "prime":
            if not isinstance(self.p, int) or not _is_prime(self.p):
                raise FieldError(f"modulus {self.p!r} is not a prime")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rational(cls) -> FieldSpec:
        return cls("rational")

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls("prime", p)

    @property
    def is_prime(self) -> bool:
        return self.kind == "prime"

    @property
    def characteristic(self) -> int:
        return self.p if self.is_prime else 0

    @property
    def zero(self) -> Scalar:
        return 0 if self.is_prime else Fraction(0)

    @property
    def one(self) -> Scalar:
        return 1 if self.is_prime else Fraction(1)

    def __str__(self):
        return f"GF({self.p})" if self.is_prime else "QQ"

    # -- construction ---------------------------------------------------

    def convert(self, value) -> Scalar:
        """Coerce an int, Fraction or literal string into this field."""
        if isinstance(value, str):
            return self.parse(value)
        if self.is_prime:
            if isinstance(value, Fraction):
                return self.div(value.numerator % self.p, value.denominator % self.p)
            return int(value) % self.p
        return Fraction(value)

    def parse(self, text: str) -> Scalar:
        """Parse ``[sign] digits [/ digits]``; GF(p) reduces mod p."""
        m = _LITERAL.match(text)
        if m is None:
            raise FieldError(f"malformed scalar literal {text!r}")
        sign, num, den = m.groups()
        n = int(num) * (-1 if sign == "-" else 1)
        d = int(den) if den is not None else 1
        if d == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        if self.is_prime:
            return self.div(n % self.p, d % self.p)
        return Fraction(n, d)

    def format(self, a: Scalar) -> str:
        if self.is_prime:
            return str(a)
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def random(self, rng, bound: int = 10) -> Scalar:
        """A random element; rationals have numerator/denominator up to ``bound``."""
        if self.is_prime:
            return rng.randrange(self.p)
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    # -- arithmetic -----------------------------------------------------

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return (a + b) % self.p if self.is_prime else a + b

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return (a - b) % self.p if self.is_prime else a - b

    def neg(self, a: Scalar) -> Scalar:
        return (-a) % self.p if self.is_prime else -a

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return (a * b) % self.p if self.is_prime else a * b

    def inv(self, a: Scalar) -> Scalar:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        if self.is_prime:
            return pow(a, -1, self.p)
        return 1 / a

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def pow(self, a: Scalar, e: int) -> Scalar:
        # 0**0 == 1 so that c_1(y, z) = 1 for every y, z.
        if e < 0:
            raise ValueError("negative exponent")
        if self.is_prime:
            return pow(a, e, self.p)
        return a**e

    def is_zero(self, a: Scalar) -> bool:
        return a == 0

    def contains(self, a) -> bool:
        """True if ``a`` is a canonical element of this field."""
        if self.is_prime:
            return type(a) is int and 0 <= a < self.p
        return isinstance(a, Fraction)


def fe_inv(field: FieldSpec, a: Scalar) -> Scalar:
    return field.inv(a)


def fe_pow(field: FieldSpec, a: Scalar, e: int) -> Scalar:
    return field.pow(a, e)


def parse_field(text: str) -> FieldSpec:
    """Parse CLI field syntax: ``q``/``rational`` or ``p:7``/``gf7``."""
    t = text.strip().lower()
    if t in ("q", "qq", "rational"):
        return FieldSpec.rational()
    m = re.match(r"^(?:p:|gf\(?)(\d+)\)?$", t)
    if m:
        return FieldSpec.prime(int(m.group(1)))
    raise FieldError(f"unrecognised field {text!r}")
