"""Independent brute-force reference implementations used as test oracles.

Nothing here touches the package's arithmetic: products are expanded one
binomial factor at a time, divisor sums come from trial division, and
characters from Euler's criterion.  Slow on purpose.
"""


def mult_binomial(c: list[int], n: int) -> list[int]:
    """Multiply a coefficient list by (1 - q^n), in place."""
    for i in range(len(c) - 1, n - 1, -1):
        c[i] -= c[i - n]
    return c


def div_binomial(c: list[int], n: int) -> list[int]:
    """Divide a coefficient list by (1 - q^n) (multiply by 1 + q^n + ...), in place."""
    for i in range(n, len(c)):
        c[i] += c[i - n]
    return c


def naive_euler_product(T: int, step: int = 1) -> list[int]:
    """prod_{n>=1} (1 - q^(step*n)) truncated to T coefficients."""
    c = [0] * T
    c[0] = 1
    n = step
    while n < T:
        c = mult_binomial(c, n)
        n += step
    return c


def naive_delta(k: int, T: int) -> list[int]:
    """Broken k-diamond counting series by factor-by-factor expansion."""
    c = [0] * T
    c[0] = 1
    for n in range(1, T):
        if 2 * n < T:
            c = mult_binomial(c, 2 * n)
        if (2 * k + 1) * n < T:
            c = mult_binomial(c, (2 * k + 1) * n)
        for _ in range(3):
            c = div_binomial(c, n)
        if (4 * k + 2) * n < T:
            c = div_binomial(c, (4 * k + 2) * n)
    return c


def naive_sigma(k: int, n: int) -> int:
    return sum(d**k for d in range(1, n + 1) if n % d == 0)


def naive_c(T: int) -> list[int]:
    """E4(2z) prod (1-q^n)^8 (1-q^{2n})^2 via divisor sums and binomials."""
    e4 = [1] + [240 * naive_sigma(3, n) for n in range(1, (T + 1) // 2)]
    c = [0] * T
    for n, v in enumerate(e4):
        if 2 * n < T:
            c[2 * n] = v
    for n in range(1, T):
        for _ in range(8):
            c = mult_binomial(c, n)
        if 2 * n < T:
            for _ in range(2):
                c = mult_binomial(c, 2 * n)
    return c


def euler_criterion(a: int, p: int) -> int:
    """Legendre symbol of a mod an odd prime p, as a**((p-1)/2) mod p."""
    r = pow(a % p, (p - 1) // 2, p)
    return r - p if r == p - 1 else r


def naive_hecke(a: list[int], p: int, k: int, chi_p: int) -> list[int]:
    """Literal Hecke formula b(n) = a(pn) + chi(p) p^(k-1) a(n/p)."""
    out = []
    for n in range((len(a) - 1) // p + 1):
        v = a[p * n]
        if n % p == 0:
            v += chi_p * p ** (k - 1) * a[n // p]
        out.append(v)
    return out
