"""Local solution counts N(p^nu) and their rational Euler factors.

For an even lattice L, a coset gamma of L'/L and n in Z - q(gamma), the
polynomial q(v - gamma) + n is integer valued on L and we count its zeros in
L / p^nu L.  The counts are computed exactly by stratification: a zero mod p
with unit gradient has exactly p^((e-1)(nu-1)) lifts, and at a singular zero
v0 the substitution v = v0 + p*u divides the problem by p^2, recursing on a
polynomial of the same shape.  A plain enumeration of (Z/p^nu)^e is kept as
the independent test oracle.

The generating function sum_nu N(p^nu) t^nu is a rational function of
t = p^(-s) (Igusa rationality); we detect the guaranteed linear recurrence
from the computed window, verify it on held-out terms, and return the closed
form, whose exact evaluation and regularized limits feed every coefficient
and correction downstream.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import NoRecurrenceFound, PoleAtPoint, PolePersists, TooLarge
from .exactnum import RatFunc, RatPoly
from .lattice import GramLattice, discriminant_form
from .numutil import valuation

POINT_BUDGET = 1 << 26
LEVEL_GUARD = 1 << 22  # cap on p^e, the per-level enumeration
BRUTE_GUARD = 1 << 30  # spec guard for the brute-force oracle


def _poly_value(g, half_diag, h, c, v):
    """Exact value of v^T G v / 2 + h.v + c at an integer point."""
    e = len(v)
    acc = c
    for i in range(e):
        vi = v[i]
        if vi:
            acc += half_diag[i] * vi * vi + h[i] * vi
            row = g[i]
            for j in range(i + 1, e):
                if v[j]:
                    acc += row[j] * vi * v[j]
    return acc


class _StratNode:
    """One stratification level: root/smooth tallies plus p^2-descendants."""

    __slots__ = ("roots", "smooth", "children", "depth")

    def __init__(self, roots, smooth, children, depth):
        self.roots = roots
        self.smooth = smooth
        self.children = children
        self.depth = depth


class _Counter:
    __slots__ = ("g", "half_diag", "p", "e", "work", "memo")

    def __init__(self, g, p):
        self.g = g
        self.half_diag = tuple(g[i][i] // 2 for i in range(len(g)))
        self.p = p
        self.e = len(g)
        self.work = 0
        self.memo = {}
        if p**self.e > LEVEL_GUARD:
            raise TooLarge("p^e = %d^%d exceeds the enumeration guard" % (p, self.e))

    def _roots_mod_p(self, h, c):
        """All v in (Z/p)^e with Q(v) = 0 mod p, via an incremental scan."""
        p, e, g = self.p, self.e, self.g
        A = self.half_diag[e - 1] % p
        twoA = (2 * A) % p
        roots = []
        for prefix in product(range(p), repeat=e - 1):
            self.work += p
            if self.work > POINT_BUDGET:
                raise TooLarge("stratified count exceeded its work budget")
            B = h[e - 1]
            C = c
            for i in range(e - 1):
                vi = prefix[i]
                if vi:
                    B += g[e - 1][i] * vi
                    C += self.half_diag[i] * vi * vi + h[i] * vi
                    for j in range(i + 1, e - 1):
                        C += g[i][j] * vi * prefix[j]
            val = C % p
            step = (A + B) % p
            for x in range(p):
                if val == 0:
                    roots.append(prefix + (x,))
                val = (val + step) % p
                step = (step + twoA) % p
        return roots

    def _gradient_mod_p(self, h, v):
        g, p = self.g, self.p
        return [
            (sum(g[i][j] * v[j] for j in range(self.e) if v[j]) + h[i]) % p
            for i in range(self.e)
        ]

    def build(self, h, c, depth) -> _StratNode:
        p = self.p
        pd = p ** max(depth, 1)
        key = (tuple(x % pd for x in h), c % pd, depth)
        node = self.memo.get(key)
        if node is not None:
            return node
        roots = self._roots_mod_p(h, c)
        smooth = 0
        children = []
        p2 = p * p
        for v in roots:
            if any(self._gradient_mod_p(h, v)):
                smooth += 1
            elif depth >= 2:
                qv = _poly_value(self.g, self.half_diag, h, c, v)
                if qv % p2 == 0:
                    h2 = tuple(
                        (sum(self.g[i][j] * v[j] for j in range(self.e)) + h[i]) // p
                        for i in range(self.e)
                    )
                    children.append(self.build(h2, qv // p2, depth - 2))
        node = _StratNode(len(roots), smooth, children, depth)
        self.memo[key] = node
        return node

    def count(self, node: _StratNode, nu: int, cache=None) -> int:
        if nu == 0:
            return 1
        if nu == 1:
            return node.roots
        assert nu <= node.depth, "stratification built too shallow"
        if cache is None:
            cache = {}
        key = (id(node), nu)
        val = cache.get(key)
        if val is not None:
            return val
        p, e = self.p, self.e
        val = node.smooth * p ** ((e - 1) * (nu - 1))
        if node.children:
            val += p**e * sum(self.count(ch, nu - 2, cache) for ch in node.children)
        cache[key] = val
        return val


def _shift_data(L: GramLattice, gamma, n):
    """Linear and constant part of q(v - gamma) + n; both must be integral."""
    e = L.dim
    h = []
    for i in range(e):
        hi = -sum(Fraction(L.gram[i][j]) * gamma[j] for j in range(e))
        assert hi.denominator == 1, "gamma is not a dual vector"
        h.append(hi.numerator)
    c = L.qform(gamma) + Fraction(n)
    assert c.denominator == 1, "n must lie in Z - q(gamma)"
    return tuple(h), c.numerator


def count_solutions(L: GramLattice, gamma, n, p: int, nu: int) -> int:
    """Number of zeros of q(v - gamma) + n in L / p^nu L, exact."""
    assert nu >= 0
    if nu == 0:
        return 1
    h, c = _shift_data(L, gamma, n)
    counter = _Counter(L.gram, p)
    node = counter.build(h, c, nu)
    return counter.count(node, nu)


def count_solutions_bruteforce(L: GramLattice, gamma, n, p: int, nu: int) -> int:
    """Plain enumeration of (Z/p^nu)^e; the oracle the fast path must match."""
    assert nu >= 0
    if nu == 0:
        return 1
    e = L.dim
    if p ** (nu * e) > BRUTE_GUARD:
        raise TooLarge("brute force needs p^(nu*e) <= 2^30")
    h, c = _shift_data(L, gamma, n)
    mod = p**nu
    half = tuple(L.gram[i][i] // 2 for i in range(e))
    total = 0
    for v in product(range(mod), repeat=e):
        if _poly_value(L.gram, half, h, c, v) % mod == 0:
            total += 1
    return total


@dataclass(frozen=True)
class CountSequence:
    p: int
    values: tuple[int, ...]

    def __post_init__(self):
        assert self.values and self.values[0] == 1


@dataclass(frozen=True)
class LocalEulerFactor:
    """Sum over nu of N(p^nu) t^nu as a reduced rational function, t = p^-s."""

    p: int
    func: RatFunc
    recurrence_order: int
    preperiod: int


def _find_recurrence(counts):
    """Smallest (order, preperiod) linear recurrence consistent with counts.

    The candidate is solved from all rows nu in [pre + r, V] at once, so a
    returned recurrence automatically holds on every computed term; at least
    three rows beyond the r used to pin the coefficients are required.
    """
    V = len(counts) - 1
    for r in range(1, 7):
        for pre in range(0, V - 2 * r - 1):
            rows = [
                [Fraction(counts[nu - i]) for i in range(1, r + 1)]
                + [Fraction(counts[nu])]
                for nu in range(pre + r, V + 1)
            ]
            sol = _solve_consistent(rows, r)
            if sol is not None:
                return r, pre, sol
    return None


def _solve_consistent(rows, ncols):
    """A solution of the (overdetermined) system, or None if inconsistent."""
    m = [row[:] for row in rows]
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
    for r in range(rank, len(m)):
        if m[r][ncols] != 0:
            return None
    sol = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        sol[col] = m[r][ncols]
    # free variables stay 0; verify against every row (covers rank < ncols)
    for row in rows:
        if sum(c * s for c, s in zip(row[:ncols], sol)) != row[ncols]:
            return None
    return sol


_euler_memo: dict = {}
_euler_lock = threading.Lock()


def euler_factor(L: GramLattice, gamma, n, p: int) -> LocalEulerFactor:
    """The local factor L_p(n, gamma, s) as a rational function of t = p^-s."""
    n = Fraction(n)
    key = (L.gram, tuple(gamma), n, p)
    with _euler_lock:
        hit = _euler_memo.get(key)
    if hit is not None:
        return hit
    df = discriminant_form(L)
    d_gamma = df.denoms.get(tuple(gamma), 1)
    vp = valuation(4 * abs(L.det), p)
    if n:
        vp += valuation(n.numerator, p) + valuation(n.denominator, p)
    vp += 2 * valuation(d_gamma, p)
    V = 2 * vp + 14

    h, c = _shift_data(L, gamma, n)
    fac = None
    for _attempt in range(3):
        counter = _Counter(L.gram, p)
        node = counter.build(h, c, V)
        cache: dict = {}
        counts = [counter.count(node, nu, cache) for nu in range(V + 1)]
        fit = _find_recurrence(counts)
        if fit is not None:
            r, pre, coeffs = fit
            den = RatPoly([Fraction(1)] + [-ci for ci in coeffs])
            num = RatPoly(
                [
                    counts[j]
                    - sum(coeffs[i - 1] * counts[j - i] for i in range(1, min(j, r) + 1))
                    for j in range(pre + r)
                ]
            )
            func = RatFunc(num, den)
            assert [Fraction(x) for x in counts] == func.taylor(V), (
                "generating function does not reproduce the counts"
            )
            fac = LocalEulerFactor(p, func, r, pre)
            break
        V += 8
    if fac is None:
        raise NoRecurrenceFound("no recurrence through V = %d at p = %d" % (V, p))
    with _euler_lock:
        _euler_memo[key] = fac
    return fac


def evaluate_euler(fac: LocalEulerFactor, w: int) -> Fraction:
    """Analytic-continuation value L_p(n, gamma, w) = F(p^-w)."""
    return fac.func.eval(Fraction(fac.p) ** (-w))


def regularized_limit(fac: LocalEulerFactor, alpha: int, b: int) -> Fraction:
    """lim_{s->0} (1 - p^(alpha - 2s)) * L_p(b + 2s), exact.

    Substituting u = p^(-2s) turns the limit into the value at u = 1 of the
    reduced rational function (1 - p^alpha u) * F(p^-b u).
    """
    p = fac.p
    twist = RatPoly([Fraction(1), -(Fraction(p) ** alpha)])
    shifted_num = fac.func.num.scale_var(Fraction(p) ** (-b))
    shifted_den = fac.func.den.scale_var(Fraction(p) ** (-b))
    g = RatFunc(shifted_num * twist, shifted_den)
    try:
        return g.eval(Fraction(1))
    except PoleAtPoint:
        raise PolePersists(
            "(1 - %d^%d u) F(%d^-%d u) still has a pole at u = 1" % (p, alpha, p, b)
        ) from None


def denominator_pole_exponents(fac: LocalEulerFactor, jrange=None):
    """Factor den(F) as a product of (1 - p^j t) and (1 - p^j t^2) pieces.

    Returns the exponent multiset [(j, deg), ...], or None if the denominator
    has a root that is not of that shape (which would violate the continuation
    structure of the local factors).
    """
    p = fac.p
    den = fac.func.den
    e_hint = 12
    js = jrange if jrange is not None else range(-3, e_hint)
    found = []
    for deg in (1, 2):
        for j in js:
            cand = RatPoly([Fraction(1)] + [Fraction(0)] * (deg - 1) + [-(Fraction(p) ** j)])
            cand = cand.monic()
            while True:
                q, rem = den.divmod(cand)
                if rem.is_zero() and not q.is_zero():
                    den = q
                    found.append((j, deg))
                else:
                    break
    return found if den.degree == 0 else None
