"""Independent combinatorial ground truth.

Theta series by exact lattice-point enumeration, Hurwitz class numbers by
reduced binary quadratic forms, classical divisor sums, and the fixed unary
theta basis used by the signature-(2,1) shadow example.  Nothing here touches
L-functions or local factors, so agreement with the Eisenstein pipeline is a
genuine two-route check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import NotDefinite, TooLarge
from .lattice import GramLattice, discriminant_form
from .numutil import divisors
from .series import VVQSeries

ENUM_GUARD = 10**7


@dataclass(frozen=True)
class ThetaSpec:
    lattice: GramLattice
    prec: Fraction


def _ldl(p):
    """Exact LDL data for a positive definite rational matrix.

    Returns (d, l) with x^T P x = sum_i d_i (x_i + sum_{j>i} l[i][j] x_j)^2.
    """
    n = len(p)
    a = [[Fraction(x) for x in row] for row in p]
    d = [Fraction(0)] * n
    l = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d[i] = a[i][i]
        if d[i] <= 0:
            raise NotDefinite("matrix is not positive definite")
        for j in range(i + 1, n):
            l[i][j] = a[i][j] / d[i]
        for r in range(i + 1, n):
            for c in range(r, n):
                a[r][c] -= d[i] * l[i][r] * l[i][c]
                a[c][r] = a[r][c]
    return d, l


def _int_range_for_square(center: Fraction, bound: Fraction):
    """All integers x with (x + center)^2 <= bound, exactly."""
    if bound < 0:
        return range(0, 0)
    # approximate first, then nudge the endpoints with exact checks
    root = Fraction(isqrt(bound.numerator * bound.denominator), bound.denominator)
    lo = (-center - root).__floor__()
    hi = (-center + root).__ceil__()
    while (lo + center) ** 2 <= bound:
        lo -= 1
    while (lo + 1 + center) ** 2 > bound and lo + 1 <= hi:
        lo += 1
    while (hi + center) ** 2 <= bound:
        hi += 1
    while (hi - 1 + center) ** 2 > bound and hi - 1 >= lo:
        hi -= 1
    return range(lo + 1, hi)


def theta_coeffs(spec: ThetaSpec, cosets=None) -> VVQSeries:
    """Representation counts #{v in gamma + L : -q(v) = n} for n <= prec.

    Enumerates each requested coset gamma + Z^e inside the exact ellipsoid
    -q(v) <= prec, with integer ranges derived from a rational LDL
    decomposition (no floating point anywhere).
    """
    L = spec.lattice
    e = L.dim
    bp, bm = L.signature
    if (bp, bm) != (0, e):
        raise NotDefinite("theta series needs a negative definite Gram matrix")
    prec = Fraction(spec.prec)
    df = discriminant_form(L)
    targets = list(df.elements) if cosets is None else [tuple(g) for g in cosets]
    pos = [[-x for x in row] for row in L.gram]
    d, l = _ldl(pos)
    coeffs: dict = {}

    def enumerate_coset(gamma):
        # v = gamma + x, -q(v) = (1/2) v^T P v with P = -G
        count_budget = [0]

        def rec(i, fixed):
            if i < 0:
                v = tuple(gamma[k] + fixed[k] for k in range(e))
                nval = -L.qform(v)
                if 0 <= nval <= prec:
                    key = (gamma, nval)
                    coeffs[key] = coeffs.get(key, Fraction(0)) + 1
                return
            # remaining budget after outer coordinates
            used = Fraction(0)
            for k in range(i + 1, e):
                s = gamma[k] + fixed[k] + sum(
                    l[k][j] * (gamma[j] + fixed[j]) for j in range(k + 1, e)
                )
                used += d[k] * s * s / 2
            budget = prec - used
            center = gamma[i] + sum(
                l[i][j] * (gamma[j] + fixed[j]) for j in range(i + 1, e)
            )
            for x in _int_range_for_square(center, 2 * budget / d[i]):
                count_budget[0] += 1
                if count_budget[0] > ENUM_GUARD:
                    raise TooLarge("theta enumeration guard tripped")
                fixed[i] = x
                rec(i - 1, fixed)
            fixed[i] = 0

        rec(e - 1, [0] * e)

    for gamma in targets:
        enumerate_coset(gamma)
        coeffs.setdefault((gamma, Fraction(0)), Fraction(0))
    return VVQSeries(
        weight=Fraction(e, 2), gram=L.gram, prec=prec, coeffs=coeffs
    )


def hurwitz(n) -> Fraction:
    """Hurwitz class number H(n), with H(0) = -1/12.

    Weighted count of reduced positive binary forms (a, b, c) of discriminant
    b^2 - 4ac = -n: weight 1/3 for forms equivalent to a(x^2 + xy + y^2),
    1/2 for a(x^2 + y^2), 1 otherwise.  Zero for n < 0, n = 1, 2 mod 4 and
    non-integers.
    """
    n = Fraction(n)
    if n.denominator != 1 or n < 0:
        return Fraction(0)
    n = n.numerator
    if n == 0:
        return Fraction(-1, 12)
    if n % 4 in (1, 2):
        return Fraction(0)
    total = Fraction(0)
    a = 1
    while 3 * a * a <= n:
        for b in range(-a + 1, a + 1):
            num = n + b * b
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if a == c and b < 0:
                continue  # (a, -b, a) is equivalent to (a, b, a)
            if a == b == c:
                total += Fraction(1, 3)
            elif a == c and b == 0:
                total += Fraction(1, 2)
            else:
                total += 1
        a += 1
    return total


def divisor_sums(n: int) -> tuple[int, int, int]:
    """(sigma_0, sigma_1, sigma_1 over odd divisors) of a positive integer."""
    assert n > 0
    ds = divisors(n)
    return len(ds), sum(ds), sum(d for d in ds if d % 2)


def _unary_theta_integer(prec: Fraction) -> dict:
    """Coefficients of sum_j q^(j^2) up to prec."""
    out: dict = {}
    j = 0
    while j * j <= prec:
        out[Fraction(j * j)] = out.get(Fraction(j * j), 0) + (1 if j == 0 else 2)
        j += 1
    return out


def _unary_theta_odd_quarter(prec: Fraction) -> dict:
    """Coefficients of sum_{j odd} q^(j^2/4) up to prec."""
    out: dict = {}
    j = 1
    while Fraction(j * j, 4) <= prec:
        out[Fraction(j * j, 4)] = out.get(Fraction(j * j, 4), 0) + 2
        j += 2
    return out


def example16_basis(prec) -> tuple[VVQSeries, VVQSeries]:
    """The two unary theta series spanning weight 1/2 for diag(2, 2, -2)."""
    prec = Fraction(prec)
    gram = ((2, 0, 0), (0, 2, 0), (0, 0, -2))
    h = Fraction(1, 2)
    z = Fraction(0)
    ints = _unary_theta_integer(prec)
    quarts = _unary_theta_odd_quarter(prec)

    def build(int_cosets, quart_cosets):
        coeffs = {}
        for gamma in int_cosets:
            for n, c in ints.items():
                coeffs[(gamma, n)] = Fraction(c)
        for gamma in quart_cosets:
            for n, c in quarts.items():
                coeffs[(gamma, n)] = Fraction(c)
        return VVQSeries(weight=Fraction(1, 2), gram=gram, prec=prec, coeffs=coeffs)

    theta1 = build([(z, z, z), (h, z, h)], [(z, h, z), (h, h, h)])
    theta2 = build([(z, z, z), (z, h, h)], [(h, z, z), (h, h, h)])
    return theta1, theta2
