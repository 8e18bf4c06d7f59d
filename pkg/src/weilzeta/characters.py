"""Kronecker characters chi_D and their exact special L-values.

For a discriminant D (an integer = 0 or 1 mod 4) the character is
chi_D(n) = (D/n), a real Dirichlet character mod |D| induced by the
primitive character attached to the fundamental discriminant D0 of D.
Values L(s, chi_D) at s <= 0 are rational (generalized Bernoulli numbers);
at s >= 1 with the right parity the functional equation gives an exact
rational * pi^s / sqrt(|D0|) closed form, which lives in MonomialReal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import PoleOfL, UnsupportedParity
from .exactnum import MonomialReal
from .numutil import divisors, prime_divisors, squarefree_decomp


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n), defined for all integers n."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    if n % 2 == 0:
        if a % 2 == 0:
            return 0
        while n % 2 == 0:
            n //= 2
            if a % 8 in (3, 5):
                result = -result
    # Jacobi symbol on the odd positive part, by quadratic reciprocity
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def fundamental_discriminant(D: int) -> int:
    """The fundamental discriminant D0 with chi_D induced by chi_{D0}.

    D0 = 1 when chi_D is principal (D a positive square).
    """
    assert D != 0 and D % 4 in (0, 1), "not a discriminant: %d" % D
    _, m = squarefree_decomp(abs(D))
    d = m if D > 0 else -m
    return d if d % 4 == 1 else 4 * d


@dataclass(frozen=True)
class Discriminant:
    D: int

    def __post_init__(self):
        assert self.D != 0 and self.D % 4 in (0, 1)


@dataclass(frozen=True)
class CharacterData:
    """chi_D together with its primitive origin chi_{D0}."""

    D: int
    D0: int
    conductor: int
    delta: int  # 1 for odd characters (D0 < 0), else 0

    @classmethod
    def from_discriminant(cls, D: int) -> "CharacterData":
        D0 = fundamental_discriminant(D)
        return cls(D, D0, abs(D0), 1 if D0 < 0 else 0)

    def extra_primes(self) -> list[int]:
        """Primes dividing D but not D0 (the removed Euler factors)."""
        return sorted(p for p in prime_divisors(self.D) if self.D0 % p != 0)


@lru_cache(maxsize=None)
def bernoulli_number(n: int) -> Fraction:
    if n == 0:
        return Fraction(1)
    # sum_{k=0}^{n} C(n+1,k) B_k = 0
    acc = Fraction(0)
    for k in range(n):
        acc += comb(n + 1, k) * bernoulli_number(k)
    return -acc / (n + 1)


def bernoulli_poly(n: int, x: Fraction) -> Fraction:
    return sum(comb(n, k) * bernoulli_number(k) * x ** (n - k) for k in range(n + 1))


@lru_cache(maxsize=None)
def gen_bernoulli(n: int, D: int) -> Fraction:
    """Generalized Bernoulli number B_{n, chi_D} over the modulus |D|.

    lru_cache doubles as the concurrency-safe memo table: recomputation is
    idempotent, so races only waste work.
    """
    assert n >= 1
    F = abs(D)
    acc = Fraction(0)
    for a in range(1, F + 1):
        chi = kronecker(D, a)
        if chi:
            acc += chi * bernoulli_poly(n, Fraction(a, F))
    return F ** (n - 1) * acc


def l_value(s: int, D: int) -> MonomialReal:
    """Exact L(s, chi_D) for s <= 0, or s >= 1 of matching parity.

    s <= 0 values are rational; s >= 1 values come from the functional
    equation of the primitive character (Gauss sum sqrt(D0) resp. i*sqrt|D0|)
    and are rational * pi^s * sqrt(|D0|)-monomials.  Either way the finite
    Euler factors at primes dividing D but not D0 are multiplied back in.
    """
    chi = CharacterData.from_discriminant(D)
    corr = Fraction(1)
    if s <= 0:
        for p in chi.extra_primes():
            corr *= 1 - kronecker(chi.D0, p) * Fraction(p) ** (-s)
        base = -gen_bernoulli(1 - s, chi.D0) / (1 - s)
        return MonomialReal.from_rat(base * corr)
    if chi.D0 == 1 and s == 1:
        raise PoleOfL("L(1, chi) with chi principal (D = %d)" % D)
    if s % 2 != chi.delta % 2:
        raise UnsupportedParity("L(%d, chi_%d): parity mismatch" % (s, D))
    for p in chi.extra_primes():
        corr *= 1 - kronecker(chi.D0, p) * Fraction(1, p**s)
    # Gamma(s) cos(pi(s-delta)/2) L(s) = (tau(chi)/2i^delta) (2pi/f)^s L(1-s),
    # and tau(chi)/(2 i^delta) = sqrt(f)/2 for both parities.
    f = chi.conductor
    lneg = -gen_bernoulli(s, chi.D0) / s
    sign = -1 if ((s - chi.delta) // 2) % 2 else 1
    r = sign * Fraction(2) ** (s - 1) * lneg / factorial(s - 1) / Fraction(f) ** s
    mon = MonomialReal.make(r * corr, Fraction(s), 1, 0)
    return mon * MonomialReal.sqrt_rat(f)


def zeta_value(s: int) -> MonomialReal:
    """Riemann zeta as the principal-character case L(s, chi_1)."""
    return l_value(s, 1)


def twisted_sigma(k1: int, n, D: int) -> Fraction:
    """Twisted divisor sum sum_{d | n} chi_D(n/d) d^k1 for positive integer n."""
    n = Fraction(n)
    assert n.denominator == 1 and n > 0, "clear denominators before summing"
    n = n.numerator
    return Fraction(sum(kronecker(D, n // d) * d**k1 for d in divisors(n)))
