"""Exact matrices of the Weil representation rho and its dual rho*.

Entries live in the cyclotomic field Q(zeta_M), M = lcm(8, N, 4|L'/L|),
represented on the full power basis zeta_M^j (0 <= j < M) with reduction
modulo the M-th cyclotomic polynomial only when deciding equality.  The
square root sqrt|L'/L| is embedded into Q(zeta_M) once and for all through
the classical Gauss-sum formulas (sqrt 2 = zeta8 - zeta8^3, and for odd p
sum_a zeta_p^(a^2) = sqrt p or i sqrt p), choosing the positive root under
zeta_M = e^(2 pi i / M).  Words in the generators S, T are then honest
products in one fixed subfield of C, so relations like S^2 = (ST)^3 hold
entrywise on the nose.

Matrices are built by repeated right-multiplication with a generator, whose
entries are single roots of unity; each step is a cyclic-shift accumulation,
never a dense field multiplication.  A global rational scalar keeps integer
coefficient vectors throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .lattice import DiscriminantForm
from .numutil import prime_divisors, squarefree_decomp

GENS = ("S", "T", "S^-1", "T^-1")


@lru_cache(maxsize=None)
def cyclotomic_poly(M: int) -> tuple[int, ...]:
    """Integer coefficients of the M-th cyclotomic polynomial."""
    # Phi_M = (x^M - 1) / prod_{d | M, d < M} Phi_d, computed by exact
    # integer polynomial division.
    num = [0] * (M + 1)
    num[0], num[M] = -1, 1
    for d in range(1, M):
        if M % d:
            continue
        phi_d = cyclotomic_poly(d)
        num = _intpoly_div(num, list(phi_d))
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return tuple(num)


def _intpoly_div(num: list[int], den: list[int]) -> list[int]:
    """Exact quotient of integer polynomials (den monic, remainder zero)."""
    num = num[:]
    assert den[-1] == 1
    dq = len(num) - len(den)
    quo = [0] * (dq + 1)
    for k in range(dq, -1, -1):
        c = num[k + len(den) - 1]
        quo[k] = c
        if c:
            for j, dj in enumerate(den):
                num[k + j] -= c * dj
    assert all(x == 0 for x in num), "non-exact cyclotomic division"
    return quo


def _reduce_mod_phi(vec, M: int) -> tuple:
    """Canonical form of sum_j vec[j] zeta_M^j modulo Phi_M."""
    phi = cyclotomic_poly(M)
    rem = list(vec)
    deg = len(phi) - 1
    for k in range(len(rem) - 1, deg - 1, -1):
        c = rem[k]
        if c:
            for j in range(len(phi)):
                rem[k - deg + j] -= c * phi[j]
    del rem[deg:]
    return tuple(rem)


@dataclass(frozen=True)
class CycNum:
    """Element of Q(zeta_M) as a length-M coefficient vector over zeta_M^j."""

    M: int
    vec: tuple

    @classmethod
    def make(cls, M: int, coeffs) -> "CycNum":
        v = [Fraction(0)] * M
        for j, c in enumerate(coeffs):
            v[j % M] += Fraction(c)
        return cls(M, tuple(v))

    @classmethod
    def root(cls, M: int, k) -> "CycNum":
        """e(k) = zeta_M^(k*M) for a rational k with denominator dividing M."""
        k = Fraction(k)
        exp = k * M
        assert exp.denominator == 1, "root of unity outside Q(zeta_M)"
        v = [Fraction(0)] * M
        v[exp.numerator % M] = Fraction(1)
        return cls(M, tuple(v))

    @classmethod
    def from_rat(cls, M: int, r) -> "CycNum":
        v = [Fraction(0)] * M
        v[0] = Fraction(r)
        return cls(M, tuple(v))

    def __add__(self, other: "CycNum") -> "CycNum":
        assert self.M == other.M
        return CycNum(self.M, tuple(a + b for a, b in zip(self.vec, other.vec)))

    def __sub__(self, other: "CycNum") -> "CycNum":
        assert self.M == other.M
        return CycNum(self.M, tuple(a - b for a, b in zip(self.vec, other.vec)))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNum(self.M, tuple(a * other for a in self.vec))
        assert self.M == other.M
        M = self.M
        out = [Fraction(0)] * M
        for i, a in enumerate(self.vec):
            if a:
                for j, b in enumerate(other.vec):
                    if b:
                        out[(i + j) % M] += a * b
        return CycNum(M, tuple(out))

    __rmul__ = __mul__

    def conj(self) -> "CycNum":
        M = self.M
        v = [Fraction(0)] * M
        for j, c in enumerate(self.vec):
            v[(-j) % M] += c
        return CycNum(M, tuple(v))

    def canonical(self) -> tuple:
        return _reduce_mod_phi(self.vec, self.M)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.canonical())

    def __eq__(self, other):
        return isinstance(other, CycNum) and self.M == other.M and (self - other).is_zero()

    def __hash__(self):
        return hash((self.M, self.canonical()))


@lru_cache(maxsize=None)
def sqrt_embed(d: int, M: int) -> tuple[int, ...]:
    """Integer coefficient vector of the positive sqrt(d) in Z[zeta_M].

    Needs 8 | M and p | M for every odd prime p | d.  Built from
    sqrt 2 = zeta8 - zeta8^3 and Gauss sums sum_a zeta_p^(a^2), which equal
    sqrt p for p = 1 mod 4 and i sqrt p for p = 3 mod 4.
    """
    assert d > 0 and M % 8 == 0
    s, m = squarefree_decomp(d)
    vec = [0] * M
    vec[0] = s
    out = vec
    for p in sorted(prime_divisors(m)):
        out = _intvec_mul(out, _sqrt_prime_vec(p, M), M)
    return tuple(out)


def _sqrt_prime_vec(p: int, M: int) -> list[int]:
    vec = [0] * M
    if p == 2:
        vec[M // 8] = 1
        vec[3 * M // 8] = -1
        return vec
    assert M % p == 0
    step = M // p
    for a in range(p):
        vec[(a * a * step) % M] += 1
    if p % 4 == 3:
        # Gauss sum is i sqrt p; multiply by -i = zeta8^6
        vec = _intvec_mul(vec, _root_vec(6 * M // 8, M), M)
    return vec


def _root_vec(exp: int, M: int) -> list[int]:
    v = [0] * M
    v[exp % M] = 1
    return v


def _intvec_mul(a, b, M: int) -> list[int]:
    out = [0] * M
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[(i + j) % M] += ai * bj
    return out


def _intvec_shift_add(acc, vec, shift: int, M: int, scale: int = 1):
    for i, c in enumerate(vec):
        if c:
            acc[(i + shift) % M] += scale * c


class RepMatrix:
    """scalar * (matrix over Z[zeta_M]), indexed by the canonical cosets."""

    __slots__ = ("df", "dual", "M", "scalar_num", "scalar_den", "mat", "word")

    def __init__(self, df, dual, M, scalar_num, scalar_den, mat, word=""):
        self.df = df
        self.dual = dual
        self.M = M
        self.scalar_num = scalar_num  # integer coefficient vector in Z[zeta_M]
        self.scalar_den = scalar_den  # positive integer
        self.mat = mat  # size x size int-vector entries
        self.word = word

    @property
    def size(self) -> int:
        return len(self.mat)

    def entry(self, i: int, j: int) -> CycNum:
        """Exact entry as a field element (scalar folded in)."""
        prod = _intvec_mul(self.scalar_num, self.mat[i][j], self.M)
        return CycNum(self.M, tuple(Fraction(c, self.scalar_den) for c in prod))

    def conj_transpose(self) -> "RepMatrix":
        M = self.M
        num = [0] * M
        for j, c in enumerate(self.scalar_num):
            num[(-j) % M] += c
        n = self.size
        mat = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                v = [0] * M
                for k, c in enumerate(self.mat[j][i]):
                    v[(-k) % M] += c
                mat[i][j] = v
        return RepMatrix(self.df, self.dual, M, num, self.scalar_den, mat, self.word + "~")

    def __matmul__(self, other: "RepMatrix") -> "RepMatrix":
        assert self.M == other.M and self.size == other.size
        M, n = self.M, self.size
        num = _intvec_mul(self.scalar_num, other.scalar_num, M)
        den = self.scalar_den * other.scalar_den
        mat = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = [0] * M
                arow = self.mat[i]
                for k in range(n):
                    b = other.mat[k][j]
                    a = arow[k]
                    if any(b) and any(a):
                        for ia, ca in enumerate(a):
                            if ca:
                                _intvec_shift_add(acc, b, ia, M, ca)
                row.append(acc)
            mat.append(row)
        return RepMatrix(self.df, self.dual, M, num, den, mat, self.word + other.word)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RepMatrix):
            return NotImplemented
        if self.M != other.M or self.size != other.size:
            return False
        M = self.M
        for i in range(self.size):
            for j in range(self.size):
                left = _intvec_mul(self.scalar_num, self.mat[i][j], M)
                right = _intvec_mul(other.scalar_num, other.mat[i][j], M)
                diff = [
                    a * other.scalar_den - b * self.scalar_den
                    for a, b in zip(left, right)
                ]
                if any(_reduce_mod_phi(diff, M)):
                    return False
        return True

    def __hash__(self):
        raise TypeError("RepMatrix is unhashable")

    def is_identity(self) -> bool:
        return self == _identity_like(self)

    def is_unitary(self) -> bool:
        return (self @ self.conj_transpose()).is_identity()


def _identity_like(R: RepMatrix) -> RepMatrix:
    M, n = R.M, R.size
    one = _root_vec(0, M)
    zero = [0] * M
    mat = [[(one if i == j else zero)[:] for j in range(n)] for i in range(n)]
    return RepMatrix(R.df, R.dual, M, _root_vec(0, M), 1, mat, "I")


def field_modulus(df: DiscriminantForm) -> int:
    return lcm(8, df.level, 4 * df.size)


def rho_generator(df: DiscriminantForm, sig, gen: str, dual: bool = False) -> RepMatrix:
    """Exact matrix of rho(S), rho(T) (or inverses, or the dual) on C[L'/L].

    rho(T) e_g = e(q(g)) e_g and
    rho(S) e_g = sqrt(i)^(b- - b+) / sqrt|L'/L| * sum_b e(-<g, b>) e_b;
    the dual is the entrywise complex conjugate.
    """
    assert gen in GENS
    bp, bm = sig
    M = field_modulus(df)
    n = df.size
    elements = df.elements
    conj_sign = -1 if dual else 1
    inverse = gen.endswith("^-1")
    base = gen[0]
    zero = [0] * M
    if base == "T":
        sgn = conj_sign * (-1 if inverse else 1)
        mat = [[zero[:] for _ in range(n)] for _ in range(n)]
        for i, g in enumerate(elements):
            exp = Fraction(sgn) * df.q(g) * M
            assert exp.denominator == 1
            mat[i][i][exp.numerator % M] = 1
        return RepMatrix(df, dual, M, _root_vec(0, M), 1, mat, gen)
    # S: global scalar zeta8^(b- - b+) / sqrt d  (conjugated for dual / inverse)
    sgn = conj_sign * (-1 if inverse else 1)
    phase_exp = (bm - bp) * (M // 8) * sgn
    scalar = _intvec_mul(_root_vec(phase_exp, M), list(sqrt_embed(n, M)), M)
    mat = []
    for g in elements:
        row = []
        for b in elements:
            exp = Fraction(-sgn) * df.pairing(g, b) * M
            assert exp.denominator == 1
            row.append(_root_vec(exp.numerator % M, M))
        mat.append(row)
    return RepMatrix(df, dual, M, scalar, n, mat, gen)


def rho_word(df: DiscriminantForm, sig, word, dual: bool = False) -> RepMatrix:
    """Exact product of generator matrices for a nonempty word in S, T."""
    word = list(word)
    assert word, "empty word"
    out = rho_generator(df, sig, word[0], dual)
    for gen in word[1:]:
        out = out @ rho_generator(df, sig, gen, dual)
    return out


def rho_z_expected(df: DiscriminantForm, sig, dual: bool = False) -> RepMatrix:
    """The central element: rho(Z) e_g = i^(b- - b+) e_{-g}."""
    bp, bm = sig
    M = field_modulus(df)
    n = df.size
    idx = {g: i for i, g in enumerate(df.elements)}
    sgn = -1 if dual else 1
    phase = _root_vec((sgn * (bm - bp) * (M // 4)) % M, M)
    zero = [0] * M
    mat = [[zero[:] for _ in range(n)] for _ in range(n)]
    for i, g in enumerate(df.elements):
        mat[idx[df.neg(g)]][i] = _root_vec(0, M)
    return RepMatrix(df, dual, M, phase, 1, mat, "Z")
