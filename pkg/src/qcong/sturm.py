"""Sturm bounds and the bounded-verification drivers.

A claim is checked by scanning coefficients up to an explicit bound and
recording the outcome in a ClaimReport.  Insufficient truncation is always
an error, never a pass: these reports are proof artifacts, so partial data
must be unambiguous.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .operators import hecke
from .qseries import QSeries
from .ring import IntegerRing, ModRing

__all__ = [
    "index_gamma0",
    "sturm_bound",
    "ClaimReport",
    "verify_vanishing",
    "verify_eigenform",
]


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def index_gamma0(N: int) -> int:
    """Index of Gamma_0(N) in SL_2(Z): N * prod over p | N of (1 + 1/p)."""
    if N < 1:
        raise ValueError(f"level must be >= 1, got {N}")
    idx = N
    for p in _prime_factors(N):
        idx = idx // p * (p + 1)
    return idx


def sturm_bound(k: int, N: int) -> int:
    """floor(k * [SL2(Z) : Gamma_0(N)] / 12).

    If all coefficients at exponents <= this bound vanish (exactly, or mod
    m), the form vanishes (exactly, or mod m).  The same bound certifies
    equality of two forms in one space, applied to their difference.
    """
    if k < 1:
        raise ValueError(f"weight must be >= 1, got {k}")
    return k * index_gamma0(N) // 12


@dataclass(frozen=True)
class ClaimReport:
    """Auditable outcome of one bounded verification."""

    claim: str
    weight: int | None
    level: int | None
    modulus: int | None  # None means the check was exact
    bound: int
    checked: int
    passed: bool
    first_failure: int | None

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "weight": self.weight,
            "level": self.level,
            "modulus": "exact" if self.modulus is None else self.modulus,
            "bound": self.bound,
            "checked": self.checked,
            "pass": self.passed,
            "first_failure": self.first_failure,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _series_modulus(f: QSeries) -> int | None:
    if isinstance(f.ring, ModRing):
        return f.ring.modulus
    if isinstance(f.ring, IntegerRing):
        return None
    raise ValueError(f"vanishing checks need integer or mod coefficients, got {f.ring!r}")


def verify_vanishing(f: QSeries, k: int, N: int, claim: str = "vanishing") -> ClaimReport:
    """Check that every coefficient at exponent <= sturm_bound(k, N) is zero.

    The truncation must strictly exceed the bound; otherwise this raises.
    """
    if f.offset24 != 0:
        raise ValueError("vanishing check requires offset 0")
    modulus = _series_modulus(f)
    bound = sturm_bound(k, N)
    if f.T <= bound:
        raise ValueError(
            f"insufficient truncation {f.T} for Sturm bound {bound} "
            f"(need at least {bound + 1} coefficients)"
        )
    zero = f.ring.zero
    first_failure = None
    for n in range(bound + 1):
        if f.coeffs[n] != zero:
            first_failure = n
            break
    return ClaimReport(
        claim=claim,
        weight=k,
        level=N,
        modulus=modulus,
        bound=bound,
        checked=bound,
        passed=first_failure is None,
        first_failure=first_failure,
    )


def verify_eigenform(
    f: QSeries,
    p: int,
    k: int,
    chi_disc: int,
    N: int,
    claim: str = "eigenform",
):
    """Check that f | T_p is a scalar multiple of f through the equality
    Sturm bound for (k, N); returns (eigenvalue, report).

    The candidate eigenvalue is read off at the lowest nonzero coefficient
    of f, which must be a unit.  On non-proportionality the eigenvalue is
    None and the report carries the first failing exponent.
    """
    if f.offset24 != 0:
        raise ValueError("eigenform check requires offset 0")
    bound = sturm_bound(k, N)
    if f.T < p * (bound + 1):
        raise ValueError(
            f"insufficient truncation {f.T}: eigenform check at p={p} "
            f"needs at least {p * (bound + 1)} coefficients"
        )
    ring = f.ring
    zero = ring.zero
    n0 = next((n for n, c in enumerate(f.coeffs) if c != zero), None)
    if n0 is None or n0 > bound:
        raise ValueError("series vanishes through the bound; eigenvalue undefined")
    if not ring.is_unit(f.coeffs[n0]):
        raise ValueError(f"leading coefficient {f.coeffs[n0]!r} is not a unit")
    g = hecke(f, p, k, chi_disc)
    lam = ring.mul(g.coeffs[n0], ring.inv(f.coeffs[n0]))
    mul = ring.mul
    first_failure = None
    for n in range(bound + 1):
        if g.coeffs[n] != mul(lam, f.coeffs[n]):
            first_failure = n
            break
    passed = first_failure is None
    report = ClaimReport(
        claim=claim,
        weight=k,
        level=N,
        modulus=None if not isinstance(ring, ModRing) else ring.modulus,
        bound=bound,
        checked=bound,
        passed=passed,
        first_failure=first_failure,
    )
    return (lam if passed else None), report
