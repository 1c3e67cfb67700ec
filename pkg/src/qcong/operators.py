"""Operators on q-expansions: Atkin U_d, quadratic twist, Hecke T_p,
and the level bookkeeping for each.

Output truncations are conservative: U_d and T_p on a T-coefficient input
justify floor((T-1)/d)+1 coefficients, so callers needing N valid Hecke
coefficients must supply at least p*N input coefficients.
"""

from __future__ import annotations

import re

from .qseries import QSeries, SpaceTag
from .ring import is_prime, kronecker

__all__ = [
    "u_operator",
    "twist",
    "hecke",
    "u_level",
    "twist_level",
    "hecke_level",
    "operator_level",
    "parse_operator",
    "apply_operator",
]


def u_operator(f: QSeries, d: int) -> QSeries:
    """a(n) -> a(d n); requires integer exponents (offset 0)."""
    if f.offset24 != 0:
        raise ValueError("U-operator requires offset 0")
    if d < 1:
        raise ValueError(f"U-operator index must be >= 1, got {d}")
    return f.extract_progression(d, 0)


def twist(f: QSeries, p: int) -> QSeries:
    """Multiply coefficient n by the Legendre symbol (n|p), p an odd prime."""
    if f.offset24 != 0:
        raise ValueError("twist requires offset 0")
    if p == 2 or not is_prime(p):
        raise ValueError(f"twist needs an odd prime, got {p}")
    ring = f.ring
    mul, neg, zero = ring.mul, ring.neg, ring.zero
    out = []
    for n, c in enumerate(f.coeffs):
        s = kronecker(n, p)
        out.append(c if s == 1 else neg(c) if s == -1 else zero)
    return QSeries(ring, 0, out)


def hecke(f: QSeries, p: int, k: int, chi_disc: int) -> QSeries:
    """Hecke operator: b(n) = a(pn) + chi(p) p^(k-1) a(n/p), with the
    second term zero unless p | n.  chi is the Kronecker symbol of
    chi_disc; k is the weight."""
    if f.offset24 != 0:
        raise ValueError("Hecke operator requires offset 0")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    ring = f.ring
    scal = ring.from_int(kronecker(chi_disc, p) * p ** (k - 1))
    a = f.coeffs
    T_out = (len(a) - 1) // p + 1
    add, mul = ring.add, ring.mul
    out = []
    for n in range(T_out):
        c = a[p * n]
        if n % p == 0:
            c = add(c, mul(scal, a[n // p]))
        out.append(c)
    return QSeries(ring, 0, out)


def u_level(tag: SpaceTag, d: int) -> SpaceTag:
    return SpaceTag(tag.weight, tag.level * d, tag.character)


def twist_level(tag: SpaceTag, p: int) -> SpaceTag:
    # the quoted bookkeeping value N p^2, not the sharper conductor level
    return SpaceTag(tag.weight, tag.level * p * p, tag.character)


def hecke_level(tag: SpaceTag, p: int) -> SpaceTag:
    return tag


_OP_RE = re.compile(r"^(U|twist|T)_(\d+)$")


def parse_operator(text: str) -> tuple[str, int]:
    """Parse an operator name of the form U_7, twist_7, or T_5."""
    m = _OP_RE.match(text)
    if not m:
        raise ValueError(f"bad operator {text!r}: expected U_d, twist_p, or T_p")
    return m.group(1), int(m.group(2))


def operator_level(op: str, tag: SpaceTag) -> SpaceTag:
    """Level bookkeeping for an operator given as U_d / twist_p / T_p."""
    kind, n = parse_operator(op)
    if kind == "U":
        return u_level(tag, n)
    if kind == "twist":
        return twist_level(tag, n)
    return hecke_level(tag, n)


def apply_operator(
    f: QSeries, op: str, weight: int | None = None, chi_disc: int | None = None
) -> QSeries:
    """Apply a parsed operator to a series (T_p needs weight and character)."""
    kind, n = parse_operator(op)
    if kind == "U":
        return u_operator(f, n)
    if kind == "twist":
        return twist(f, n)
    if weight is None or chi_disc is None:
        raise ValueError(f"{op} needs --weight and --chi to be applied")
    return hecke(f, n, weight, chi_disc)
