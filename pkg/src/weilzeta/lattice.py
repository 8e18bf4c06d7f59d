"""Even lattices from Gram matrices and their discriminant forms.

A GramLattice is Z^e with the quadratic form q(v) = v^T G v / 2 for a
symmetric integer G with even diagonal.  The discriminant form is the finite
quadratic module L'/L with q taking values in Q/Z; everything downstream
(Weil representation, local counts, Eisenstein coefficients) is indexed by
its canonical coset representatives, whose coordinates all lie in [0, 1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import lcm

from .errors import InvalidLattice, SingularMatrix, TooLarge

MAX_DISC = 10**6
MAX_DIM = 8


def _det_int(rows: tuple[tuple[int, ...], ...]) -> int:
    """Exact determinant via fraction-free style elimination over Q."""
    n = len(rows)
    m = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for i in range(n):
        piv = next((r for r in range(i, n) if m[r][i] != 0), None)
        if piv is None:
            return 0
        if piv != i:
            m[i], m[piv] = m[piv], m[i]
            det = -det
        det *= m[i][i]
        inv = 1 / m[i][i]
        for r in range(i + 1, n):
            f = m[r][i] * inv
            if f:
                for c in range(i, n):
                    m[r][c] -= f * m[i][c]
    assert det.denominator == 1
    return det.numerator


def _congruence_signature(rows) -> tuple[int, int]:
    """Signs of an exact symmetric diagonalization M -> E^T M E over Q."""
    n = len(rows)
    m = [[Fraction(x) for x in row] for row in rows]
    plus = minus = 0
    todo = list(range(n))
    while todo:
        i = next((r for r in todo if m[r][r] != 0), None)
        if i is None:
            # all remaining diagonal entries vanish; use the standard trick
            # of adding row/col j into i, which makes m[i][i] = 2 m[i][j]
            pair = next(
                ((r, c) for r in todo for c in todo if c != r and m[r][c] != 0), None
            )
            if pair is None:
                raise SingularMatrix("degenerate quadratic form")
            i, j = pair
            for c in range(n):
                m[i][c] += m[j][c]
            for r in range(n):
                m[r][i] += m[r][j]
        if m[i][i] > 0:
            plus += 1
        else:
            minus += 1
        inv = 1 / m[i][i]
        others = [r for r in todo if r != i]
        for r in others:
            f = m[r][i] * inv
            if f:
                for c in range(n):
                    m[r][c] -= f * m[i][c]
        for c in others:
            f = m[i][c] * inv
            if f:
                for r in range(n):
                    m[r][c] -= f * m[r][i]
        todo.remove(i)
    return plus, minus


def smith_normal_form(rows) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """U, D, V with U*M*V = D diagonal, d1 | d2 | ..., U and V unimodular."""
    a = [list(map(int, r)) for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise SingularMatrix("matrix must be square")
    if _det_int(tuple(tuple(r) for r in a)) == 0:
        raise SingularMatrix("zero determinant")
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_op(i, j, f):  # row_i -= f * row_j
        for c in range(n):
            a[i][c] -= f * a[j][c]
            U[i][c] -= f * U[j][c]

    def col_op(i, j, f):  # col_i -= f * col_j
        for r in range(n):
            a[r][i] -= f * a[r][j]
            V[r][i] -= f * V[r][j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in range(n):
            a[r][i], a[r][j] = a[r][j], a[r][i]
            V[r][i], V[r][j] = V[r][j], V[r][i]

    for t in range(n):
        while True:
            # move the smallest nonzero entry of the trailing block to (t, t)
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            assert best is not None
            if best[0] != t:
                swap_rows(t, best[0])
            if best[1] != t:
                swap_cols(t, best[1])
            dirty = False
            for i in range(t + 1, n):
                if a[i][t]:
                    row_op(i, t, a[i][t] // a[t][t])
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, n):
                if a[t][j]:
                    col_op(j, t, a[t][j] // a[t][t])
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            if any(a[i][t] for i in range(t + 1, n)) or any(
                a[t][j] for j in range(t + 1, n)
            ):
                continue
            # enforce divisibility d_t | a[i][j]
            offender = next(
                (
                    (i, j)
                    for i in range(t + 1, n)
                    for j in range(t + 1, n)
                    if a[i][j] % a[t][t]
                ),
                None,
            )
            if offender is None:
                break
            for c in range(n):
                a[t][c] += a[offender[0]][c]
                U[t][c] += U[offender[0]][c]
        if a[t][t] < 0:
            for c in range(n):
                a[t][c] = -a[t][c]
                U[t][c] = -U[t][c]
    return U, a, V


@dataclass(frozen=True)
class GramLattice:
    """Even nondegenerate lattice given by its Gram matrix."""

    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        g = self.gram
        n = len(g)
        if n == 0 or any(len(r) != n for r in g):
            raise InvalidLattice("Gram matrix must be square and nonempty")
        if any(not isinstance(x, int) for r in g for x in r):
            raise InvalidLattice("Gram entries must be integers")
        if any(g[i][j] != g[j][i] for i in range(n) for j in range(n)):
            raise InvalidLattice("Gram matrix must be symmetric")
        if any(g[i][i] % 2 for i in range(n)):
            raise InvalidLattice("diagonal must be even (even lattice)")
        if _det_int(g) == 0:
            raise InvalidLattice("Gram matrix is degenerate")

    @classmethod
    def from_rows(cls, rows) -> "GramLattice":
        return cls(tuple(tuple(int(x) for x in r) for r in rows))

    @property
    def dim(self) -> int:
        return len(self.gram)

    @property
    def det(self) -> int:
        return _det_int(self.gram)

    @property
    def signature(self) -> tuple[int, int]:
        return _congruence_signature(self.gram)

    def neg(self) -> "GramLattice":
        return GramLattice(tuple(tuple(-x for x in r) for r in self.gram))

    def qform(self, v) -> Fraction:
        """q(v) = v^T G v / 2, exact."""
        g = self.gram
        acc = Fraction(0)
        for i, vi in enumerate(v):
            if vi:
                acc += Fraction(g[i][i]) * vi * vi
                for j in range(i + 1, len(v)):
                    acc += 2 * Fraction(g[i][j]) * vi * v[j]
        return acc / 2

    def bilinear(self, v, w) -> Fraction:
        g = self.gram
        return sum(
            Fraction(g[i][j]) * v[i] * w[j]
            for i in range(len(v))
            for j in range(len(w))
            if v[i] and w[j]
        ) or Fraction(0)


def signature(L: GramLattice) -> tuple[int, int]:
    return L.signature


@dataclass(frozen=True)
class DiscriminantForm:
    """The finite quadratic module L'/L with canonical representatives."""

    lattice: GramLattice
    orders: tuple[int, ...]
    generators: tuple[tuple[Fraction, ...], ...]
    elements: tuple[tuple[Fraction, ...], ...]
    qvals: dict = field(compare=False, repr=False)
    denoms: dict = field(compare=False, repr=False)
    level: int

    @property
    def size(self) -> int:
        return len(self.elements)

    def q(self, gamma) -> Fraction:
        return self.qvals[gamma]

    def pairing(self, gamma, beta) -> Fraction:
        return self.lattice.bilinear(gamma, beta) % 1

    def neg(self, gamma) -> tuple[Fraction, ...]:
        return tuple((-x) % 1 for x in gamma)

    def denom(self, gamma) -> int:
        return self.denoms[gamma]

    def zero(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(0) for _ in range(self.lattice.dim))

    def isotropic(self) -> list[tuple[Fraction, ...]]:
        return [g for g in self.elements if self.qvals[g] == 0]

    def plus_minus_reps(self):
        """One representative per {gamma, -gamma} orbit."""
        seen = set()
        for g in self.elements:
            if g in seen:
                continue
            seen.add(g)
            seen.add(self.neg(g))
            yield g


@lru_cache(maxsize=None)
def discriminant_form(L: GramLattice) -> DiscriminantForm:
    """Enumerate L'/L: representatives, q values, denominators, level."""
    e = L.dim
    det = abs(L.det)
    if det > MAX_DISC or e > MAX_DIM:
        raise TooLarge("discriminant group of order %d (dim %d)" % (det, e))
    _, d, V = smith_normal_form(L.gram)
    gens = []
    orders = []
    for i in range(e):
        di = d[i][i]
        if di > 1:
            orders.append(di)
            gens.append(tuple(Fraction(V[r][i], di) % 1 for r in range(e)))
    elements = []
    for combo in product(*(range(o) for o in orders)) if orders else [()]:
        vec = tuple(
            sum((combo[k] * gens[k][r] for k in range(len(gens))), Fraction(0)) % 1
            for r in range(e)
        )
        elements.append(vec)
    assert len(set(elements)) == det, "coset enumeration mismatch"
    qvals = {g: L.qform(g) % 1 for g in elements}
    denoms = {g: lcm(*(x.denominator for x in g)) for g in elements}
    level = lcm(*(q.denominator for q in qvals.values()))
    return DiscriminantForm(
        lattice=L,
        orders=tuple(orders),
        generators=tuple(gens),
        elements=tuple(sorted(elements)),
        qvals=qvals,
        denoms=denoms,
        level=level,
    )
