"""Exact coefficient fields: the rationals and prime fields F_p.

A field object owns the arithmetic; elements are plain Python values
(`fractions.Fraction` for the rationals, least nonnegative `int` residues
for F_p).  Keeping elements unwrapped makes the dense elimination loops in
:mod:`cellalg.linalg` cheap, and `bool(x)` doubles as a fast zero test for
both representations.

Scalars serialize as strings: rationals as ``num/den`` with the denominator
omitted when it is 1, prime-field elements as their decimal residue.
"""

from __future__ import annotations

from fractions import Fraction


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


class RationalField:
    """The field of rationals; elements are reduced `Fraction` values."""

    kind = "rational"
    p = None
    characteristic = 0

    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero")
        return a / b

    def parse(self, s: str) -> Fraction:
        return Fraction(s.strip())

    def format(self, a) -> str:
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "RationalField()"


class PrimeField:
    """The field F_p; elements are ints normalized to [0, p)."""

    kind = "prime"

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if not a % self.p:
            raise ZeroDivisionError("inverse of zero")
        # pow runs the extended gcd internally
        return pow(a, -1, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def parse(self, s: str) -> int:
        s = s.strip()
        if "/" in s:
            num, den = s.split("/", 1)
            return self.div(int(num) % self.p, int(den) % self.p)
        return int(s) % self.p

    def format(self, a) -> str:
        return str(a % self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


Field = RationalField | PrimeField

QQ = RationalField()


def make_field(kind: str, p: int | None = None) -> Field:
    """Build a field from its serialized description."""
    if kind == "rational":
        return RationalField()
    if kind == "prime":
        if p is None:
            raise ValueError("prime field needs p")
        return PrimeField(p)
    raise ValueError(f"unknown field kind {kind!r}")
