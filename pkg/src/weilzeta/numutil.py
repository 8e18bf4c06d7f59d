"""Integer and rational helpers: factorization, square parts, rendering."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import isqrt


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of |n| by trial division; 0 and ±1 give {}."""
    n = abs(n)
    out: dict[int, int] = {}
    if n <= 1:
        return out
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    q = 5
    while q * q <= n:
        for p in (q, q + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        q += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_divisors(n: int) -> set[int]:
    return set(factorize(n))


def valuation(n: int, p: int) -> int:
    """p-adic valuation of n; n must be nonzero."""
    assert n != 0
    v = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        v += 1
    return v


def squarefree_decomp(n: int) -> tuple[int, int]:
    """n > 0 as s^2 * m with m squarefree; returns (s, m)."""
    assert n > 0
    s, m = 1, 1
    for p, e in factorize(n).items():
        s *= p ** (e // 2)
        if e % 2:
            m *= p
    return s, m


def is_squarefree(n: int) -> bool:
    return n > 0 and squarefree_decomp(n)[0] == 1


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of x if x is a rational square, else None."""
    if x < 0:
        return None
    a, b = x.numerator, x.denominator
    ra, rb = isqrt(a), isqrt(b)
    if ra * ra == a and rb * rb == b:
        return Fraction(ra, rb)
    return None


def divisors(n: int) -> list[int]:
    """Positive divisors of n > 0, sorted."""
    assert n > 0
    out = [1]
    for p, e in factorize(n).items():
        out = [d * p**i for d in out for i in range(e + 1)]
    return sorted(out)


def rational_gcd(m: int, n: Fraction) -> int:
    """gcd of a positive integer and a rational, taken over primes where
    both valuations are >= 0 (so gcd(30, 3/4) = 3)."""
    n = Fraction(n)
    g = 1
    for p, e in factorize(m).items():
        vn = valuation(n.numerator, p) if n.numerator % p == 0 else 0
        if n.denominator % p == 0:
            continue
        g *= p ** min(e, vn)
    return g


def rat_str(x) -> str:
    """Canonical text form of a rational: "p/q" in lowest terms, "p" if q=1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def parse_rat(s: str) -> Fraction:
    return Fraction(s.strip())


def max_threads() -> int:
    """Worker cap from WEILZETA_THREADS (default 1)."""
    raw = os.environ.get("WEILZETA_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def thread_map(fn, items):
    """Order-preserving map, threaded when WEILZETA_THREADS > 1.

    Results are collected in input order, so output never depends on the
    parallelism setting.
    """
    items = list(items)
    workers = max_threads()
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
