"""Exact arithmetic substrate.

Rationals are stdlib ``fractions.Fraction`` (re-exported as ``Rat``).  On top
of that: dense univariate polynomials and reduced rational functions over Q,
and the closed-form real numbers r * pi^a * sqrt(m) * zeta8^c that carry
L-values and archimedean factors through the coefficient pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import IncompatibleMonomials, NotRational, PoleAtPoint
from .numutil import squarefree_decomp

Rat = Fraction


def _as_frac_tuple(coeffs) -> tuple[Fraction, ...]:
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class RatPoly:
    """Dense univariate polynomial over Q, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _as_frac_tuple(coeffs)

    @classmethod
    def const(cls, c) -> "RatPoly":
        return cls((Fraction(c),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        assert self.coeffs, "zero polynomial has no leading coefficient"
        return self.coeffs[-1]

    def __eq__(self, other):
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    def __neg__(self):
        return RatPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatPoly(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RatPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return RatPoly(out)

    __rmul__ = __mul__

    def divmod(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        assert not other.is_zero()
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return RatPoly(), self
        quo = [Fraction(0)] * (dq + 1)
        lead = other.leading()
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] / lead
            quo[k] = c
            if c:
                for j, oj in enumerate(other.coeffs):
                    rem[k + j] -= c * oj
        return RatPoly(quo), RatPoly(rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def monic(self) -> "RatPoly":
        if self.is_zero():
            return self
        return self * (1 / self.leading())

    def gcd(self, other: "RatPoly") -> "RatPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def eval(self, t: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def scale_var(self, c: Fraction) -> "RatPoly":
        """p(c*t) as a polynomial in t."""
        c = Fraction(c)
        return RatPoly(tuple(a * c**i for i, a in enumerate(self.coeffs)))

    def to_str(self, var: str = "t") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                term = _rat_text(c)
            else:
                mag = "" if abs(c) == 1 else _rat_text(abs(c)) + "*"
                pw = var if i == 1 else "%s^%d" % (var, i)
                term = ("-" if c < 0 else "") + mag + pw
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += (" - " + term[1:]) if term.startswith("-") else (" + " + term)
        return out

    def __repr__(self):
        return "RatPoly(%s)" % self.to_str()


def _rat_text(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


class RatFunc:
    """Reduced rational function num/den over Q; den is monic and nonzero."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=RatPoly((1,))):
        if not isinstance(num, RatPoly):
            num = RatPoly(num)
        if not isinstance(den, RatPoly):
            den = RatPoly(den)
        assert not den.is_zero(), "denominator must be nonzero"
        g = num.gcd(den)
        if not g.is_zero() and g.degree > 0:
            num = num // g
            den = den // g
        lead = den.leading()
        if lead != 1:
            num = num * (1 / lead)
            den = den * (1 / lead)
        self.num = num
        self.den = den

    @classmethod
    def const(cls, c) -> "RatFunc":
        return cls(RatPoly.const(c))

    def __eq__(self, other):
        return isinstance(other, RatFunc) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __mul__(self, other):
        if isinstance(other, RatFunc):
            return RatFunc(self.num * other.num, self.den * other.den)
        return RatFunc(self.num * other, self.den)

    __rmul__ = __mul__

    def eval(self, t) -> Fraction:
        t = Fraction(t)
        d = self.den.eval(t)
        if d == 0:
            raise PoleAtPoint("pole at t = %s" % t)
        return self.num.eval(t) / d

    def scale_var(self, c) -> "RatFunc":
        return RatFunc(self.num.scale_var(c), self.den.scale_var(c))

    def taylor(self, order: int) -> list[Fraction]:
        """First order+1 power-series coefficients at t = 0."""
        d0 = self.den.coeffs[0]
        assert d0 != 0, "power series needs den(0) != 0"
        out: list[Fraction] = []
        for k in range(order + 1):
            c = self.num.coeffs[k] if k < len(self.num.coeffs) else Fraction(0)
            for j in range(1, min(k, self.den.degree) + 1):
                c -= self.den.coeffs[j] * out[k - j]
            out.append(c / d0)
        return out

    def __repr__(self):
        return "(%s) / (%s)" % (self.num.to_str(), self.den.to_str())


@dataclass(frozen=True)
class MonomialReal:
    """Exact closed-form number r * pi^a * sqrt(m) * zeta8^c.

    Canonical form: m squarefree positive, c in {0,1,2,3} (zeta8^4 = -1 is
    folded into the sign of r), a a half-integer, and zero is (0, 0, 1, 0).
    Closed under products and quotients; addition only for equal
    transcendental parts, which is all the assembly pipeline ever needs.
    """

    r: Fraction
    a: Fraction
    m: int
    c: int

    @classmethod
    def make(cls, r, a=0, m=1, c=0) -> "MonomialReal":
        r, a = Fraction(r), Fraction(a)
        assert m > 0 and a.denominator in (1, 2)
        if r == 0:
            return cls(Fraction(0), Fraction(0), 1, 0)
        s, m = squarefree_decomp(m)
        r *= s
        c %= 8
        if c >= 4:
            r = -r
            c -= 4
        return cls(r, a, m, c)

    @classmethod
    def from_rat(cls, r) -> "MonomialReal":
        return cls.make(r)

    @classmethod
    def zeta8_power(cls, c: int) -> "MonomialReal":
        return cls.make(1, 0, 1, c)

    @classmethod
    def sqrt_rat(cls, x) -> "MonomialReal":
        """Positive square root of a positive rational."""
        x = Fraction(x)
        assert x > 0
        return cls.make(Fraction(1, x.denominator), 0, x.numerator * x.denominator, 0)

    @classmethod
    def rat_power(cls, x, k) -> "MonomialReal":
        """x^k for positive rational x and half-integer k."""
        x, k = Fraction(x), Fraction(k)
        assert x > 0 and k.denominator in (1, 2)
        whole = k.numerator // k.denominator
        out = cls.from_rat(x**whole)
        if k - whole:
            out = out * cls.sqrt_rat(x)
        return out

    def is_zero(self) -> bool:
        return self.r == 0

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MonomialReal.from_rat(other)
        if self.r == 0 or other.r == 0:
            return MonomialReal.make(0)
        return MonomialReal.make(
            self.r * other.r, self.a + other.a, self.m * other.m, self.c + other.c
        )

    __rmul__ = __mul__

    def inverse(self) -> "MonomialReal":
        assert self.r != 0
        # 1/sqrt(m) = sqrt(m)/m, 1/zeta8^c = zeta8^(8-c)
        return MonomialReal.make(1 / (self.r * self.m), -self.a, self.m, (8 - self.c) % 8)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MonomialReal.from_rat(other)
        return self * other.inverse()

    def __neg__(self):
        return MonomialReal.make(-self.r, self.a, self.m, self.c)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MonomialReal.from_rat(other)
        if other.r == 0:
            return self
        if self.r == 0:
            return other
        if (self.a, self.m, self.c) != (other.a, other.m, other.c):
            raise IncompatibleMonomials("%r + %r" % (self, other))
        return MonomialReal.make(self.r + other.r, self.a, self.m, self.c)

    __radd__ = __add__

    def to_rat(self) -> Fraction:
        if self.r == 0:
            return Fraction(0)
        if self.a != 0 or self.m != 1 or self.c != 0:
            raise NotRational(repr(self))
        return self.r

    def __float__(self) -> float:
        import math

        assert self.c in (0, 2) or self.r == 0, "complex monomial has no float value"
        val = float(self.r) * math.pi ** float(self.a) * math.sqrt(self.m)
        return val  # c = 2 callers take the imaginary part themselves

    def __repr__(self):
        if self.r == 0:
            return "0"
        parts = [_rat_text(self.r)]
        if self.a:
            parts.append("pi" if self.a == 1 else "pi^%s" % _rat_text(self.a))
        if self.m != 1:
            parts.append("sqrt(%d)" % self.m)
        if self.c:
            parts.append("zeta8^%d" % self.c)
        return "*".join(parts)
