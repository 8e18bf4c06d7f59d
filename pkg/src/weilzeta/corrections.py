"""Real-analytic completion data for the small-weight Eisenstein series.

Weight 1: a constant vector (supported on isotropic cosets) whose addition
to E_1 gives the modular completion.  Weight 2: the constants A(gamma) with
E_2^*(tau, 0) = E_2 - (1/y) sum A(gamma) e_gamma, nonzero only when |L'/L| is
a perfect square.  Weight 3/2: the shadow coefficients a(n, gamma), n <= 0,
of the harmonic completion; they all share one closed-form scale
48 * (+-1) * sqrt(2 / |L'/L|), which is kept as a global MonomialReal so the
stored series stays rational even when sqrt(2 |L'/L|) is irrational.

The last section of the paper trail: for one-dimensional q(x) = -m x^2 with m
squarefree, the weight-1/2 series has an elementary closed form, the shadow
of the dual weight-3/2 series is proportional to it, and that weight-3/2
series itself is a Hurwitz class number sum.  All three are produced by
halfint_onedim and cross-checked in the acceptance suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .characters import l_value
from .errors import NotRational, NotSquarefree
from .exactnum import MonomialReal
from .lattice import GramLattice, discriminant_form
from .localzeta import euler_factor, regularized_limit
from .numutil import divisors, is_squarefree, prime_divisors, rational_sqrt, rat_str
from .oracles import hurwitz
from .series import VVQSeries


@dataclass(frozen=True)
class CorrectionVector:
    """Constant correction data, indexed by isotropic cosets.

    weight 1: entry = the constant added to E_1 to reach E_1^*(tau, 0).
    weight 2: entry = A(gamma) * pi, with E_2^* = E_2 - (1/y) sum A(gamma) e_gamma.
    """

    weight: int
    entries: dict

    def entry(self, gamma) -> Fraction:
        return self.entries.get(tuple(gamma), Fraction(0))

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.entries.values())

    def to_json_obj(self) -> list:
        key = "add" if self.weight == 1 else "A_times_pi"
        return [
            {"gamma": [rat_str(x) for x in g], key: rat_str(v)}
            for g, v in sorted(self.entries.items())
        ]


@dataclass(frozen=True)
class ShadowSeries:
    """Weight-1/2 shadow: global closed-form scale times a rational series.

    The series stores relative values R(n, gamma) at exponent -n >= 0, and
    a(n, gamma) = scale * R(n, gamma).  When the scale is rational (true for
    every example in scope: 2|L'/L| a perfect square), folded() gives the
    literal shadow coefficients.
    """

    scale: MonomialReal
    series: VVQSeries

    def a(self, n, gamma) -> MonomialReal:
        n = Fraction(n)
        assert n <= 0
        return self.scale * self.series.coefficient(gamma, -n)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.series.coeffs.values())

    def scale_is_rational(self) -> bool:
        return self.scale.is_zero() or (self.scale.a, self.scale.m, self.scale.c) == (
            0,
            1,
            0,
        )

    def folded(self) -> VVQSeries:
        if not self.scale_is_rational():
            raise NotRational("shadow scale %r is irrational" % self.scale)
        return self.series.scaled(self.scale.r if not self.scale.is_zero() else 0)


def _bad_for(det: int, n=Fraction(0)) -> list[int]:
    bad = {2} | prime_divisors(det)
    n = Fraction(n)
    if n:
        bad |= prime_divisors(n.numerator) | prime_divisors(n.denominator)
    return sorted(bad)


def weight1_correction(L: GramLattice) -> CorrectionVector:
    """Constant vector making E_1 + correction the value E_1^*(tau, 0)."""
    from .eisenstein import check_admissible

    check_admissible(L, 1)
    e = L.dim
    det = abs(L.det)
    bp, bm = L.signature
    assert e % 2 == 0
    df = discriminant_form(L)
    disc = -4 * det
    sign = -1 if ((2 + bm - bp) // 4) % 2 else 1
    base = MonomialReal.make(-sign, 1, 1, 0)  # -sign * pi
    base *= MonomialReal.sqrt_rat(Fraction(1, det))
    base *= l_value(0, disc) / l_value(1, disc)
    entries = {}
    for gamma in df.isotropic():
        mon = base
        for p in _bad_for(det):
            fac = euler_factor(L, gamma, Fraction(0), p)
            mon *= regularized_limit(fac, e // 2 - 1, e // 2)
        entries[gamma] = mon.to_rat()
    return CorrectionVector(weight=1, entries=entries)


def weight2_correction(L: GramLattice) -> CorrectionVector:
    """A(gamma) * pi for each isotropic coset; zero unless |L'/L| is square."""
    from .eisenstein import check_admissible

    check_admissible(L, 2)
    e = L.dim
    det = abs(L.det)
    bp, bm = L.signature
    df = discriminant_form(L)
    if rational_sqrt(Fraction(det)) is None:
        return CorrectionVector(weight=2, entries={g: Fraction(0) for g in df.isotropic()})
    sign = -1 if ((bm - bp) // 4) % 2 else 1
    base = MonomialReal.from_rat(3 * sign) * MonomialReal.sqrt_rat(Fraction(1, det))
    entries = {}
    for gamma in df.isotropic():
        mon = base
        for p in _bad_for(det):
            fac = euler_factor(L, gamma, Fraction(0), p)
            mon *= regularized_limit(fac, e // 2 - 2, e // 2 + 1)
            mon = mon / (1 + Fraction(1, p))
        entries[gamma] = mon.to_rat()
    return CorrectionVector(weight=2, entries=entries)


def weight32_shadow(L: GramLattice, prec) -> ShadowSeries:
    """Shadow coefficients a(n, gamma), n <= 0, of the weight-3/2 completion.

    Support: n = 0 at isotropic cosets, and n < 0 with -2 n |L'/L| a rational
    square.  The n = 0 values are half the n < 0 normalization, matching
    beta(0) = 1/(8 pi) in E^* = E + y^(-1/2) sum a(n, gamma) beta(4 pi |n| y) q^n e_gamma.
    """
    from .eisenstein import check_admissible

    check_admissible(L, Fraction(3, 2))
    e = L.dim
    det = abs(L.det)
    bp, bm = L.signature
    assert e % 2 == 1
    df = discriminant_form(L)
    sign = -1 if ((3 + bp - bm) // 4) % 2 else 1
    scale = MonomialReal.from_rat(48 * sign) * MonomialReal.sqrt_rat(Fraction(2, det))
    alpha = (e - 3) // 2
    b = (e + 1) // 2
    prec = Fraction(prec)

    def local_rel(gamma, n):
        acc = Fraction(1)
        for p in _bad_for(det, n):
            fac = euler_factor(L, gamma, n, p)
            acc *= regularized_limit(fac, alpha, b) / (1 + Fraction(1, p))
        return acc

    coeffs: dict = {}
    for gamma in df.plus_minus_reps():
        neg = df.neg(gamma)
        if df.q(gamma) == 0:
            val = local_rel(gamma, Fraction(0)) / 2
            coeffs[(gamma, Fraction(0))] = val
            coeffs[(neg, Fraction(0))] = val
        offset = df.q(gamma)  # exponents of the shadow: -n = q(gamma) mod 1
        x = offset if offset else Fraction(1)
        while x <= prec:
            if rational_sqrt(2 * x * det) is not None:
                val = local_rel(gamma, -x)
                coeffs[(gamma, x)] = val
                coeffs[(neg, x)] = val
            x += 1
    rel = VVQSeries(weight=Fraction(1, 2), gram=L.gram, prec=prec, coeffs=coeffs)
    return ShadowSeries(scale=scale, series=rel)


def _epsilon(d_gamma: int) -> int:
    eps = sum(1 for p in prime_divisors(d_gamma) if p != 2)
    if d_gamma % 4 == 0:
        eps += 1
    return eps


def halfint_onedim(m: int, prec):
    """Closed forms for q(x) = -m x^2, m squarefree.

    Returns (E12, shadow_factor, E32Closed):
      E12          the weight-1/2 Eisenstein series, c(n, gamma) = 2 (1/2)^eps
                   supported on exponents with m*n a rational square;
      shadow_factor  -24 sqrt(m) sigma_0(m) / sigma_1(m), the constant by
                   which E12 differs from the shadow of E_{3/2} for q = m x^2;
      E32Closed    that weight-3/2 series (lattice Gram [[2m]]) as a Hurwitz
                   class number sum -12/sigma_1(m) * sum_{a|m} a H(4mn/a^2).
    """
    if not is_squarefree(m):
        raise NotSquarefree("m = %d" % m)
    prec = Fraction(prec)
    neg = GramLattice(((-2 * m,),))
    pos = GramLattice(((2 * m,),))
    df_neg = discriminant_form(neg)
    df_pos = discriminant_form(pos)

    sigma0 = len(divisors(m))
    sigma1 = sum(divisors(m))
    shadow_factor = MonomialReal.make(Fraction(-24 * sigma0, sigma1), 0, m, 0)

    e12: dict = {}
    for gamma in df_neg.elements:
        if df_neg.q(gamma) == 0:
            e12[(gamma, Fraction(0))] = Fraction(1) if gamma == df_neg.zero() else Fraction(0)
        val = 2 * Fraction(1, 2) ** _epsilon(df_neg.denom(gamma))
        offset = (-df_neg.q(gamma)) % 1
        n = offset if offset else Fraction(1)
        while n <= prec:
            if rational_sqrt(m * n) is not None:
                e12[(gamma, n)] = val
            n += 1
    e12_series = VVQSeries(
        weight=Fraction(1, 2), gram=neg.gram, prec=prec, coeffs=e12
    )

    e32: dict = {}
    scale32 = Fraction(-12, sigma1)
    for gamma in df_pos.elements:
        offset = (-df_pos.q(gamma)) % 1
        n = offset if offset else Fraction(0)
        while n <= prec:
            val = scale32 * sum(a * hurwitz(4 * m * n / (a * a)) for a in divisors(m))
            e32[(gamma, n)] = val
            n += 1
    e32_series = VVQSeries(
        weight=Fraction(3, 2), gram=pos.gram, prec=prec, coeffs=e32
    )
    return e12_series, shadow_factor, e32_series
