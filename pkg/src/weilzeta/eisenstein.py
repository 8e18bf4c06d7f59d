"""Holomorphic Fourier coefficients of the (mock) Eisenstein series E_k.

A coefficient of q^n e_gamma (n > 0) is an exact product

    sqrt(i)^(b- - b+) / sqrt|L'/L|  *  [L-series value]  *  (-2 pi i)^k n^(k-1) / Gamma(k)

where the L-series value splits into a global Dirichlet L-value for the
character of an assembled discriminant and finitely many bad-prime local
factors.  Each bad factor is the regularized limit

    lim_{s->0} (1 - p^(e/2 - k - 2s)) L_p(n, gamma, k + e/2 - 1 + 2s),

which reduces to the plain product whenever the local factor is finite at the
evaluation point (every weight except k = 1 and (e, k) = (3, 3/2)); the limit
form is what makes weight 1 work at all.  Everything is carried in
MonomialReal and the final product is asserted rational.

The even-dimensional twisted-divisor-sum route (gamma = 0, integer n) is an
independent second path through the same local data and is used as a
cross-check throughout the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod

from .characters import kronecker, l_value, twisted_sigma
from .errors import ParityError, UnsupportedParity
from .exactnum import MonomialReal
from .lattice import GramLattice, discriminant_form
from .localzeta import euler_factor, regularized_limit
from .numutil import prime_divisors, thread_map
from .series import VVQSeries


@dataclass(frozen=True)
class DiscData:
    """Bad primes and the assembled discriminant for one (k, gamma, n)."""

    bad: tuple[int, ...]
    disc: int

    def __post_init__(self):
        assert self.disc % 4 in (0, 1)
        assert all(kronecker(self.disc, p) == 0 for p in self.bad)


def bad_primes(L: GramLattice, n) -> tuple[int, ...]:
    """{2} + primes of |L'/L| + primes of num(n), den(n) (n nonzero)."""
    n = Fraction(n)
    bad = {2} | prime_divisors(L.det)
    if n:
        bad |= prime_divisors(n.numerator) | prime_divisors(n.denominator)
    return tuple(sorted(bad))


def disc_data_even(L: GramLattice, k: int, n) -> DiscData:
    bad = bad_primes(L, n)
    disc = (-1) ** k * abs(L.det) * prod(p * p for p in bad)
    return DiscData(bad, disc)


def disc_data_odd(L: GramLattice, k: Fraction, n, d_gamma: int) -> DiscData:
    bad = bad_primes(L, n)
    sign = -1 if int(k - Fraction(1, 2)) % 2 else 1
    disc = 2 * Fraction(n) * d_gamma**2 * sign * abs(L.det) * prod(p * p for p in bad)
    assert disc.denominator == 1, "odd-dimensional discriminant must be integral"
    return DiscData(bad, disc.numerator)


def weight_admissible(L: GramLattice, k) -> bool:
    """Nonzero forms with constant term e_0 need 2k + b+ - b- = 0 mod 4."""
    k = Fraction(k)
    if k.denominator not in (1, 2):
        return False
    bp, bm = L.signature
    return (2 * k + bp - bm) % 4 == 0


def check_admissible(L: GramLattice, k):
    if not weight_admissible(L, k):
        bp, bm = L.signature
        raise ParityError(
            "weight %s violates 2k + b+ - b- = 0 mod 4 for signature (%d, %d)"
            % (Fraction(k), bp, bm)
        )


def archimedean_factor(k, n) -> MonomialReal:
    """(-2 pi i)^k n^(k-1) / Gamma(k), principal branch for half-integer k."""
    k, n = Fraction(k), Fraction(n)
    assert n > 0 and k.denominator in (1, 2) and k > 0
    out = MonomialReal.rat_power(2, k)
    out *= MonomialReal.make(1, k, 1, 0)  # pi^k
    out *= MonomialReal.zeta8_power(-int(2 * k))  # (-i)^k
    out *= MonomialReal.rat_power(n, k - 1)
    if k.denominator == 1:
        gamma_k = MonomialReal.from_rat(factorial(int(k) - 1))
    else:
        r = Fraction(1)
        x = k - 1
        while x > 0:
            r *= x
            x -= 1
        gamma_k = MonomialReal.make(r, Fraction(1, 2), 1, 0)  # r * sqrt(pi)
    return out / gamma_k


def _local_product(L, gamma, n, k, e, bad) -> MonomialReal:
    """Product over bad p of the regularized local factors at the weight."""
    alpha = (e - int(2 * k)) // 2  # e/2 - k, an integer in every admissible case
    assert (e - int(2 * k)) % 2 == 0
    b = (int(2 * k) + e - 2) // 2  # k + e/2 - 1
    acc = MonomialReal.from_rat(1)
    for p in bad:
        fac = euler_factor(L, gamma, n, p)
        acc *= regularized_limit(fac, alpha, b)
    return acc


def coefficient(L: GramLattice, k, n, gamma, df=None) -> Fraction:
    """Exact coefficient of q^n e_gamma in E_k, for n > 0."""
    k, n = Fraction(k), Fraction(n)
    check_admissible(L, k)
    if k == Fraction(1, 2):
        raise UnsupportedParity(
            "weight 1/2 has no coefficient formula here; see corrections.halfint_onedim"
        )
    assert k >= 1
    if df is None:
        df = discriminant_form(L)
    gamma = tuple(gamma)
    assert n > 0 and (n + df.q(gamma)).denominator == 1, "need n in Z - q(gamma)"
    e = L.dim
    det = abs(L.det)
    bp, bm = L.signature
    phase = MonomialReal.zeta8_power(bm - bp)
    mon = phase * MonomialReal.sqrt_rat(Fraction(1, det)) * archimedean_factor(k, n)
    if e % 2 == 0:
        assert k.denominator == 1
        dd = disc_data_even(L, int(k), n)
        mon = mon / l_value(int(k), dd.disc)
        mon *= _local_product(L, gamma, n, k, e, dd.bad)
    else:
        assert k.denominator == 2
        dd = disc_data_odd(L, k, n, df.denom(gamma))
        mon = mon * l_value(int(k - Fraction(1, 2)), dd.disc)
        mon = mon / l_value(int(2 * k) - 1, 1)  # zeta(2k - 1)
        mon *= _local_product(L, gamma, n, k, e, dd.bad)
        for p in dd.bad:
            mon = mon / (1 - Fraction(1, p ** (int(2 * k) - 1)))
    return mon.to_rat()


def coefficient_bk(L: GramLattice, k, n) -> Fraction:
    """Twisted-divisor-sum route for even e, gamma = 0, positive integer n.

    Only the primes dividing 4|L'/L| need local factors; the dependence on n
    at all other primes is carried by sigma_{k-1}(n, chi_D) with
    D = (-1)^k 4 |L'/L|.
    """
    k, n = Fraction(k), Fraction(n)
    check_admissible(L, k)
    e = L.dim
    assert e % 2 == 0 and k.denominator == 1 and n.denominator == 1 and n > 0
    k = int(k)
    det = abs(L.det)
    bp, bm = L.signature
    disc = (-1) ** k * 4 * det
    sign = -1 if ((bm - bp - 2 * k) // 4) % 2 else 1
    mon = MonomialReal.from_rat(sign)
    mon *= MonomialReal.rat_power(2, k) * MonomialReal.make(1, k, 1, 0)  # (2 pi)^k
    mon = mon / MonomialReal.from_rat(factorial(k - 1))
    mon *= MonomialReal.sqrt_rat(Fraction(1, det))
    mon = mon / l_value(k, disc)
    mon *= twisted_sigma(k - 1, n, disc)
    df = discriminant_form(L)
    zero = df.zero()
    alpha = e // 2 - k
    b = k + e // 2 - 1
    for p in sorted(prime_divisors(4 * det)):
        fac = euler_factor(L, zero, n, p)
        mon *= regularized_limit(fac, alpha, b)
    return mon.to_rat()


def series(L: GramLattice, k, prec) -> VVQSeries:
    """E_k as a q-series: constant term e_0 plus all coefficients n <= prec."""
    k, prec = Fraction(k), Fraction(prec)
    check_admissible(L, k)
    df = discriminant_form(L)
    coeffs: dict = {}
    zero = df.zero()
    for gamma in df.elements:
        if df.q(gamma) == 0:
            coeffs[(gamma, Fraction(0))] = Fraction(1) if gamma == zero else Fraction(0)
    tasks = []
    for gamma in df.plus_minus_reps():
        offset = (-df.q(gamma)) % 1
        n = offset if offset else Fraction(1)
        while n <= prec:
            tasks.append((gamma, n))
            n += 1
    values = thread_map(lambda t: coefficient(L, k, t[1], t[0], df), tasks)
    for (gamma, n), c in zip(tasks, values):
        coeffs[(gamma, n)] = c
        coeffs[(df.neg(gamma), n)] = c  # c(n, gamma) = c(n, -gamma)
    return VVQSeries(weight=k, gram=L.gram, prec=prec, coeffs=coeffs)
