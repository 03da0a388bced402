"""Exact ground fields: the rationals and prime fields.

Scalars are plain Python objects (Fraction for Q, int residues for F_p);
a Field instance supplies the arithmetic so that matrix code stays
field-agnostic.  No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction

DEFAULT_PRIME = 32003


class Field:
    """Common interface for exact fields."""

    name = "field"

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def of_int(self, n):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def div(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        return self.div(self.one(), a)

    def is_zero(self, a):
        return a == self.zero()

    def random(self, rng, span=9):
        """A random scalar, drawn from a small symmetric integer range."""
        return self.of_int(rng.randint(-span, span))

    def __repr__(self):
        return self.name


class RationalField(Field):
    """The field Q, scalars stored as Fraction in lowest terms."""

    name = "Q"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def of_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in Q")
        return a / b

    def neg(self, a):
        return -a

    def is_zero(self, a):
        return a == 0

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


class PrimeField(Field):
    """The field F_p, scalars stored as residues in [0, p)."""

    def __init__(self, p=DEFAULT_PRIME):
        if p < 2:
            raise ValueError("modulus must be a prime >= 2")
        for d in range(2, min(p, 1 + int(p ** 0.5) + 1)):
            if d < p and p % d == 0:
                raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self.name = f"F{p}"

    def zero(self):
        return 0

    def one(self):
        return 1 % self.p

    def of_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def div(self, a, b):
        if b % self.p == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return (a * pow(b, self.p - 2, self.p)) % self.p

    def neg(self, a):
        return (-a) % self.p

    def is_zero(self, a):
        return a % self.p == 0

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


QQ = RationalField()


def parse_field(spec: str) -> Field:
    """Parse a field flag: "q" for the rationals, "fp:<prime>" for F_p."""
    s = spec.strip().lower()
    if s in ("q", "qq", "rational", "rationals"):
        return QQ
    if s in ("fp", "f_p"):
        return PrimeField(DEFAULT_PRIME)
    if s.startswith("fp:"):
        return PrimeField(int(s[3:]))
    raise ValueError(f"unknown field spec {spec!r}; use 'q' or 'fp:<prime>'")
