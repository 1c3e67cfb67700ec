"""Truncated formal q-expansions with a rational exponent offset.

A series is q^(offset24/24) * (c[0] + c[1] q + ... + c[T-1] q^(T-1)),
with every coefficient at exponent >= offset + T unknown.  Operations
return the largest truncation fully justified by their inputs, and
reading past the truncation is a hard error, never a silent zero:
the Sturm-bound arguments downstream depend on "unknown" being
distinguishable from "zero".

Coefficients are stored densely.  Multiplication has two paths: a
generic schoolbook convolution (the oracle) and a fast exact path that
packs coefficients into big integers (Kronecker substitution), optionally
multiplied through gmpy2 when it is installed.  Both are exact; property
tests assert they agree.
"""

from __future__ import annotations

import array
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Iterable, TextIO

from .ring import (
    IntegerRing,
    ModRing,
    QuadInt,
    QuadRing,
    RationalRing,
    Ring,
    ring_from_tag,
)

try:
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover - exercised only without gmpy2
    _mpz = None

__all__ = ["QSeries", "SpaceTag", "write_dump", "read_dump", "dumps", "loads"]

_SCHOOLBOOK_CUTOFF = 64

# widest-available array typecode for each slot width we can fast-path
_TYPECODE: dict[int, str] = {}
for _tc in "BHILQ":
    _TYPECODE.setdefault(array.array(_tc).itemsize, _tc)


def _pack_nonneg(xs: list[int], w: int) -> bytes:
    # little-endian slots of w bytes each; every x must fit in w bytes
    tc = _TYPECODE.get(w)
    if tc is not None:
        return array.array(tc, xs).tobytes()
    buf = bytearray(len(xs) * w)
    for i, x in enumerate(xs):
        buf[i * w : (i + 1) * w] = x.to_bytes(w, "little")
    return bytes(buf)


def _pack_signed(xs: list[int], w: int) -> int:
    if any(x < 0 for x in xs):
        pos = [x if x > 0 else 0 for x in xs]
        neg = [-x if x < 0 else 0 for x in xs]
        return int.from_bytes(_pack_nonneg(pos, w), "little") - int.from_bytes(
            _pack_nonneg(neg, w), "little"
        )
    return int.from_bytes(_pack_nonneg(xs, w), "little")


def _convolve_int_schoolbook(a: list[int], b: list[int], n_out: int) -> list[int]:
    out = [0] * n_out
    for i, x in enumerate(a):
        if i >= n_out:
            break
        if x == 0:
            continue
        for j in range(min(len(b), n_out - i)):
            out[i + j] += x * b[j]
    return out


def _convolve_int(a: list[int], b: list[int], n_out: int) -> list[int]:
    """Exact integer convolution of a and b, truncated to n_out terms.

    Packs each operand into one big integer with fixed-width slots wide
    enough that convolution sums cannot overflow into a neighbour, does a
    single big-integer multiply, and unpacks.  Signed coefficients are
    handled by a half-slot bias on decode.
    """
    if len(a) + len(b) <= _SCHOOLBOOK_CUTOFF:
        return _convolve_int_schoolbook(a, b, n_out)
    maxa = max(max(a), -min(a), 1)
    maxb = max(max(b), -min(b), 1)
    bound = min(len(a), len(b)) * maxa * maxb
    w = (bound.bit_length() + 2 + 7) // 8
    A = _pack_signed(a, w)
    B = _pack_signed(b, w)
    if _mpz is not None:
        N = int(_mpz(A) * _mpz(B))
    else:
        N = A * B
    nslots = min(n_out, len(a) + len(b) - 1)
    mask = (1 << (8 * w * nslots)) - 1
    half = 1 << (8 * w - 1)
    K = int.from_bytes((b"\x00" * (w - 1) + b"\x80") * nslots, "little")
    M = ((N & mask) + K) & mask
    buf = M.to_bytes(nslots * w, "little")
    tc = _TYPECODE.get(w)
    if tc is not None:
        arr = array.array(tc)
        arr.frombytes(buf)
        out = [x - half for x in arr]
    else:
        out = [
            int.from_bytes(buf[i * w : (i + 1) * w], "little") - half
            for i in range(nslots)
        ]
    if n_out > nslots:
        out.extend([0] * (n_out - nslots))
    return out


def _lcm_denominators(xs: Iterable[Fraction]) -> int:
    return reduce(lcm, (x.denominator for x in xs), 1)


def convolve(ring: Ring, a: list, b: list, n_out: int) -> list:
    """Ring-dispatched exact convolution truncated to n_out coefficients."""
    if isinstance(ring, IntegerRing):
        return _convolve_int(a, b, n_out)
    if isinstance(ring, ModRing):
        m = ring.modulus
        return [x % m for x in _convolve_int(a, b, n_out)]
    if isinstance(ring, RationalRing):
        da = _lcm_denominators(a)
        db = _lcm_denominators(b)
        ia = [x.numerator * (da // x.denominator) for x in a]
        ib = [x.numerator * (db // x.denominator) for x in b]
        d = da * db
        return [Fraction(x, d) for x in _convolve_int(ia, ib, n_out)]
    if isinstance(ring, QuadRing):
        # 3-multiplication Karatsuba split over the two components
        ra = [x.re for x in a]
        ma = [x.im for x in a]
        rb = [x.re for x in b]
        mb = [x.im for x in b]
        m1 = _convolve_int(ra, rb, n_out)
        m2 = _convolve_int(ma, mb, n_out)
        m3 = _convolve_int(
            [u + v for u, v in zip(ra, ma)], [u + v for u, v in zip(rb, mb)], n_out
        )
        return [QuadInt(p - 3 * q, r - p - q) for p, q, r in zip(m1, m2, m3)]
    return convolve_schoolbook(ring, a, b, n_out)


def convolve_schoolbook(ring: Ring, a: list, b: list, n_out: int) -> list:
    """Reference quadratic-time convolution; the oracle for `convolve`."""
    zero = ring.zero
    add, mul = ring.add, ring.mul
    out = [zero] * n_out
    for i, x in enumerate(a):
        if i >= n_out:
            break
        if x == zero:
            continue
        for j in range(min(len(b), n_out - i)):
            out[i + j] = add(out[i + j], mul(x, b[j]))
    return out


class QSeries:
    """Immutable truncated q-expansion over one coefficient ring.

    `coeffs` is never mutated after construction; operations build new
    series, so values may be shared and sent across threads freely.
    """

    __slots__ = ("ring", "offset24", "coeffs")

    def __init__(self, ring: Ring, offset24: int, coeffs: list):
        if not isinstance(offset24, int):
            raise ValueError(f"offset24 must be an integer, got {offset24!r}")
        coeffs = list(coeffs)
        if not coeffs:
            raise ValueError("truncation must be at least 1")
        self.ring = ring
        self.offset24 = offset24
        self.coeffs = coeffs

    @classmethod
    def from_ints(cls, ring: Ring, coeffs: Iterable[int], offset24: int = 0) -> "QSeries":
        return cls(ring, offset24, [ring.from_int(c) for c in coeffs])

    @classmethod
    def one(cls, ring: Ring, T: int) -> "QSeries":
        return cls(ring, 0, [ring.one] + [ring.zero] * (T - 1))

    @property
    def T(self) -> int:
        return len(self.coeffs)

    @property
    def offset(self) -> Fraction:
        return Fraction(self.offset24, 24)

    def _check_same_ring(self, other: "QSeries") -> None:
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")

    def add(self, other: "QSeries") -> "QSeries":
        self._check_same_ring(other)
        d24 = other.offset24 - self.offset24
        if d24 % 24 != 0:
            raise ValueError(
                f"offset difference {Fraction(abs(d24), 24)} is not an integer"
            )
        lo, hi = (self, other) if d24 >= 0 else (other, self)
        d = abs(d24) // 24
        T = min(lo.T, hi.T + d)
        ring = self.ring
        out = list(lo.coeffs[:T])
        for j in range(min(hi.T, T - d)):
            out[j + d] = ring.add(out[j + d], hi.coeffs[j])
        return QSeries(ring, lo.offset24, out)

    def neg(self) -> "QSeries":
        n = self.ring.neg
        return QSeries(self.ring, self.offset24, [n(c) for c in self.coeffs])

    def sub(self, other: "QSeries") -> "QSeries":
        return self.add(other.neg())

    def mul(self, other: "QSeries") -> "QSeries":
        self._check_same_ring(other)
        T = min(self.T, other.T)
        out = convolve(self.ring, self.coeffs, other.coeffs, T)
        return QSeries(self.ring, self.offset24 + other.offset24, out)

    def scale(self, c) -> "QSeries":
        """Multiply every coefficient by a scalar (int or ring element)."""
        if isinstance(c, int) and not isinstance(self.ring, IntegerRing):
            c = self.ring.from_int(c)
        mul = self.ring.mul
        return QSeries(self.ring, self.offset24, [mul(c, x) for x in self.coeffs])

    def pow(self, e: int) -> "QSeries":
        if e == 0:
            return QSeries.one(self.ring, self.T)
        if e < 0:
            return self.invert().pow(-e)
        result = None
        base = self
        n = e
        while n:
            if n & 1:
                result = base if result is None else result.mul(base)
            n >>= 1
            if n:
                base = base.mul(base)
        return result

    def invert(self) -> "QSeries":
        """Two-sided inverse up to truncation, by Newton iteration.

        Requires the lowest stored coefficient to be a unit.
        """
        ring = self.ring
        a = self.coeffs
        if not ring.is_unit(a[0]):
            raise ValueError(
                f"leading coefficient {a[0]!r} is not a unit; cannot invert"
            )
        T = len(a)
        b = [ring.inv(a[0])]
        two = ring.from_int(2)
        while len(b) < T:
            m = min(2 * len(b), T)
            t = convolve(ring, a[:m], b, m)
            s = [ring.neg(x) for x in t]
            s[0] = ring.add(s[0], two)
            b = convolve(ring, b, s, m)
        return QSeries(ring, -self.offset24, b)

    def dilate(self, d: int) -> "QSeries":
        """Substitute q -> q^d: exponents and offset scale by d."""
        if d < 1:
            raise ValueError(f"dilation factor must be >= 1, got {d}")
        if d == 1:
            return self
        zero = self.ring.zero
        out = [zero] * (d * (self.T - 1) + 1)
        for j, c in enumerate(self.coeffs):
            out[d * j] = c
        return QSeries(self.ring, d * self.offset24, out)

    def truncate(self, T: int) -> "QSeries":
        if not 1 <= T <= self.T:
            raise ValueError(f"cannot truncate T={self.T} series to {T}")
        if T == self.T:
            return self
        return QSeries(self.ring, self.offset24, self.coeffs[:T])

    def coeff(self, e):
        """Coefficient at exponent e (int or Fraction); error past truncation."""
        e24 = Fraction(e) * 24
        if e24.denominator != 1:
            raise ValueError(f"exponent {e} is not a multiple of 1/24")
        d24 = int(e24) - self.offset24
        if d24 % 24 != 0:
            raise ValueError(
                f"exponent {e} is not an integer offset from {self.offset}"
            )
        idx = d24 // 24
        if not 0 <= idx < self.T:
            raise ValueError(
                f"exponent {e} is outside the justified truncation "
                f"[{self.offset}, {self.offset + self.T})"
            )
        return self.coeffs[idx]

    def extract_progression(self, a: int, b: int) -> "QSeries":
        """Sum over n of coeff(a*n + b) q^n; requires offset 0."""
        if self.offset24 != 0:
            raise ValueError("extract_progression requires offset 0")
        if a < 1 or b < 0:
            raise ValueError(f"need a >= 1 and b >= 0, got a={a}, b={b}")
        if b >= self.T:
            raise ValueError(f"residue {b} is beyond truncation {self.T}")
        return QSeries(self.ring, 0, self.coeffs[b :: a])

    def reduce_mod(self, m: int) -> "QSeries":
        """Coefficientwise reduction of an integer series into Z/m."""
        if not isinstance(self.ring, IntegerRing):
            raise ValueError(f"reduce_mod needs an integer series, got {self.ring!r}")
        return QSeries(ModRing(m), self.offset24, [c % m for c in self.coeffs])

    def to_offset_zero(self) -> "QSeries":
        """Pad with justified zeros so the series starts at exponent 0."""
        if self.offset24 == 0:
            return self
        if self.offset24 % 24 != 0 or self.offset24 < 0:
            raise ValueError(
                f"offset {self.offset} is not a nonnegative integer"
            )
        d = self.offset24 // 24
        return QSeries(self.ring, 0, [self.ring.zero] * d + self.coeffs)

    def conjugate(self) -> "QSeries":
        conj = self.ring.conj
        return QSeries(self.ring, self.offset24, [conj(c) for c in self.coeffs])

    def map_to_ring(self, ring: Ring) -> "QSeries":
        """Convert coefficients through the target ring's from_int.

        Integer series convert into any ring; a rational series converts
        to integers only when every coefficient is integral.
        """
        if isinstance(self.ring, IntegerRing):
            return QSeries(ring, self.offset24, [ring.from_int(c) for c in self.coeffs])
        if isinstance(self.ring, RationalRing) and isinstance(ring, IntegerRing):
            out = []
            for c in self.coeffs:
                if c.denominator != 1:
                    raise ValueError(f"coefficient {c} is not an integer")
                out.append(c.numerator)
            return QSeries(ring, self.offset24, out)
        raise ValueError(f"no conversion from {self.ring!r} to {ring!r}")

    def __add__(self, other):
        return self.add(other) if isinstance(other, QSeries) else NotImplemented

    def __sub__(self, other):
        return self.sub(other) if isinstance(other, QSeries) else NotImplemented

    def __mul__(self, other):
        return self.mul(other) if isinstance(other, QSeries) else NotImplemented

    def __pow__(self, e):
        return self.pow(e) if isinstance(e, int) else NotImplemented

    def __neg__(self):
        return self.neg()

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.offset24 == other.offset24
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        head = ", ".join(repr(c) for c in self.coeffs[:6])
        tail = ", ..." if self.T > 6 else ""
        return (
            f"QSeries({self.ring.tag}, offset={self.offset}, T={self.T}, "
            f"[{head}{tail}])"
        )


@dataclass(frozen=True)
class SpaceTag:
    """(weight, level, character) metadata carried alongside a series.

    The character is a Kronecker discriminant; 1 means trivial.  Tags are
    bookkeeping only and never enforced analytically.
    """

    weight: int
    level: int
    character: int = 1

    def __post_init__(self):
        if self.level < 1:
            raise ValueError(f"level must be >= 1, got {self.level}")
        if self.weight < 0:
            raise ValueError(f"weight must be >= 0, got {self.weight}")


def write_dump(s: QSeries, out: TextIO) -> None:
    """Text coefficient dump; one coefficient per line, bit-exact round trip."""
    out.write(f"qseries v1 ring={s.ring.tag} offset24={s.offset24} T={s.T}\n")
    fmt = s.ring.format_elem
    for c in s.coeffs:
        out.write(fmt(c))
        out.write("\n")


def read_dump(inp: TextIO) -> QSeries:
    header = inp.readline().strip()
    parts = header.split()
    if len(parts) != 5 or parts[0] != "qseries" or parts[1] != "v1":
        raise ValueError(f"bad qseries dump header: {header!r}")
    fields = dict(p.split("=", 1) for p in parts[2:])
    ring = ring_from_tag(fields["ring"])
    offset24 = int(fields["offset24"])
    T = int(fields["T"])
    coeffs = []
    for _ in range(T):
        line = inp.readline()
        if not line:
            raise ValueError(f"dump truncated: expected {T} coefficients")
        coeffs.append(ring.parse_elem(line.strip()))
    return QSeries(ring, offset24, coeffs)


def dumps(s: QSeries) -> str:
    import io

    buf = io.StringIO()
    write_dump(s, buf)
    return buf.getvalue()


def loads(text: str) -> QSeries:
    import io

    return read_dump(io.StringIO(text))
