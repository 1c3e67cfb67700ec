"""Exact coefficient rings for series arithmetic.

Four rings are supported: arbitrary-precision integers, rationals,
integers modulo m, and the quadratic ring Z[sqrt(-3)].  A ring object
holds the scalar operations; elements themselves are plain immutable
values (``int``, ``Fraction``, ``QuadInt``), so they can be shared
freely across threads.  Mixed-ring arithmetic is never coerced: series
code checks ring equality and rejects mismatches, and the only sanctioned
conversions are each ring's ``from_int``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "QuadInt",
    "Ring",
    "IntegerRing",
    "RationalRing",
    "ModRing",
    "QuadRing",
    "ZZ",
    "QQ",
    "QUAD",
    "ring_from_tag",
    "kronecker",
    "bernoulli",
    "quad_conj",
    "is_prime",
    "primes_up_to",
]


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n), defined for all integer pairs.

    Extends the Legendre symbol multiplicatively with the standard
    conventions: (a|2) is 0 for even a, +1 for a = +-1 mod 8, -1 for
    a = +-3 mod 8; (a|-1) is -1 exactly for a < 0; (a|0) is 1 only
    for a = +-1.  For odd prime n it is the Legendre symbol.
    """
    if n == 0:
        return 1 if a in (1, -1) else 0
    k = 1
    if n < 0:
        n = -n
        if a < 0:
            k = -k
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 and a % 8 in (3, 5):
            k = -k
    # n now odd and positive: quadratic reciprocity loop (Jacobi)
    a %= n
    while a:
        v = 0
        while a % 2 == 0:
            a //= 2
            v += 1
        if v % 2 and n % 8 in (3, 5):
            k = -k
        if a % 4 == 3 and n % 4 == 3:
            k = -k
        a, n = n % a, a
    return k if n == 1 else 0


@lru_cache(maxsize=None)
def _bernoulli_list(m: int) -> tuple[Fraction, ...]:
    # sum_{j<=i} C(i+1, j) B_j = 0 for i >= 1, solved for B_i
    vals = [Fraction(1)]
    for i in range(1, m + 1):
        s = sum(math.comb(i + 1, j) * vals[j] for j in range(i))
        vals.append(Fraction(-s, i + 1))
    return tuple(vals)


def bernoulli(k: int) -> Fraction:
    """k-th Bernoulli number, for even k >= 0."""
    if k < 0 or k % 2 == 1:
        raise ValueError(f"bernoulli requires an even k >= 0, got {k}")
    return _bernoulli_list(k)[k]


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (intended for n < 10**6)."""
    if n < 2:
        return False
    for p in (2, 3):
        if n % p == 0:
            return n == p
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


def primes_up_to(n: int) -> list[int]:
    """All primes <= n by sieve."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, n + 1, p)))
    return [i for i in range(n + 1) if sieve[i]]


# The quadratic ring is specialised to discriminant -3 (sqrt(-3)), but the
# multiplication is written against this stored constant.
_QUAD_D = -3


@dataclass(frozen=True)
class QuadInt:
    """Element re + im*sqrt(-3) of Z[sqrt(-3)]."""

    re: int
    im: int

    def __add__(self, other: "QuadInt") -> "QuadInt":
        return QuadInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "QuadInt") -> "QuadInt":
        return QuadInt(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "QuadInt":
        return QuadInt(-self.re, -self.im)

    def __mul__(self, other: "QuadInt") -> "QuadInt":
        return QuadInt(
            self.re * other.re + _QUAD_D * self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def conj(self) -> "QuadInt":
        return QuadInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re - _QUAD_D * self.im * self.im

    def __str__(self) -> str:
        return f"{self.re},{self.im}"


def quad_conj(x: QuadInt) -> QuadInt:
    """Conjugation a + b*sqrt(-3) -> a - b*sqrt(-3)."""
    return x.conj()


class Ring:
    """Scalar operations of one coefficient ring.

    Subclasses are frozen dataclasses so that rings compare by value
    (two ModRing(7) are the same ring).  ``conj`` defaults to the
    identity; only the quadratic ring overrides it.
    """

    tag: str
    zero: object
    one: object

    def add(self, x, y):
        raise NotImplementedError

    def sub(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def from_int(self, n: int):
        """The sanctioned conversion from a plain integer into this ring."""
        raise NotImplementedError

    def is_unit(self, x) -> bool:
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def conj(self, x):
        return x

    def format_elem(self, x) -> str:
        return str(x)

    def parse_elem(self, s: str):
        raise NotImplementedError


@dataclass(frozen=True)
class IntegerRing(Ring):
    tag = "int"
    zero = 0
    one = 1

    def add(self, x: int, y: int) -> int:
        return x + y

    def sub(self, x: int, y: int) -> int:
        return x - y

    def neg(self, x: int) -> int:
        return -x

    def mul(self, x: int, y: int) -> int:
        return x * y

    def from_int(self, n: int) -> int:
        return n

    def is_unit(self, x: int) -> bool:
        return x in (1, -1)

    def inv(self, x: int) -> int:
        if x not in (1, -1):
            raise ValueError(f"{x} is not a unit in Z")
        return x

    def parse_elem(self, s: str) -> int:
        return int(s)

    def __repr__(self) -> str:
        return "ZZ"


@dataclass(frozen=True)
class RationalRing(Ring):
    tag = "rat"
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, x: Fraction, y: Fraction) -> Fraction:
        return x + y

    def sub(self, x: Fraction, y: Fraction) -> Fraction:
        return x - y

    def neg(self, x: Fraction) -> Fraction:
        return -x

    def mul(self, x: Fraction, y: Fraction) -> Fraction:
        return x * y

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def is_unit(self, x: Fraction) -> bool:
        return x != 0

    def inv(self, x: Fraction) -> Fraction:
        if x == 0:
            raise ValueError("0 is not a unit in Q")
        return 1 / x

    def parse_elem(self, s: str) -> Fraction:
        return Fraction(s)

    def __repr__(self) -> str:
        return "QQ"


@dataclass(frozen=True)
class ModRing(Ring):
    """Z/m with elements stored as plain ints reduced into [0, m)."""

    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")

    @property
    def tag(self) -> str:
        return f"mod:{self.modulus}"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def add(self, x: int, y: int) -> int:
        s = x + y
        return s - self.modulus if s >= self.modulus else s

    def sub(self, x: int, y: int) -> int:
        return (x - y) % self.modulus

    def neg(self, x: int) -> int:
        return -x % self.modulus

    def mul(self, x: int, y: int) -> int:
        return x * y % self.modulus

    def from_int(self, n: int) -> int:
        return n % self.modulus

    def is_unit(self, x: int) -> bool:
        return math.gcd(x, self.modulus) == 1

    def inv(self, x: int) -> int:
        return pow(x, -1, self.modulus)

    def parse_elem(self, s: str) -> int:
        return int(s) % self.modulus

    def __repr__(self) -> str:
        return f"ModRing({self.modulus})"


@dataclass(frozen=True)
class QuadRing(Ring):
    tag = "quad"
    zero = QuadInt(0, 0)
    one = QuadInt(1, 0)

    def add(self, x: QuadInt, y: QuadInt) -> QuadInt:
        return x + y

    def sub(self, x: QuadInt, y: QuadInt) -> QuadInt:
        return x - y

    def neg(self, x: QuadInt) -> QuadInt:
        return -x

    def mul(self, x: QuadInt, y: QuadInt) -> QuadInt:
        return x * y

    def from_int(self, n: int) -> QuadInt:
        return QuadInt(n, 0)

    def is_unit(self, x: QuadInt) -> bool:
        return x.norm() == 1

    def inv(self, x: QuadInt) -> QuadInt:
        if x.norm() != 1:
            raise ValueError(f"{x} is not a unit in Z[sqrt(-3)]")
        return x.conj()

    def conj(self, x: QuadInt) -> QuadInt:
        return x.conj()

    def parse_elem(self, s: str) -> QuadInt:
        re, im = s.split(",")
        return QuadInt(int(re), int(im))

    def __repr__(self) -> str:
        return "QUAD"


ZZ = IntegerRing()
QQ = RationalRing()
QUAD = QuadRing()


def ring_from_tag(tag: str) -> Ring:
    """Inverse of ``ring.tag``, used by the dump format and the cache."""
    if tag == "int":
        return ZZ
    if tag == "rat":
        return QQ
    if tag == "quad":
        return QUAD
    if tag.startswith("mod:"):
        return ModRing(int(tag[4:]))
    raise ValueError(f"unknown ring tag {tag!r}")
