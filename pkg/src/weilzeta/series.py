"""Vector-valued q-series with exact rational coefficients.

The shared container for Eisenstein series, theta series and shadows: a map
(coset representative, exponent) -> rational, with a precision bound.  Output
ordering is fixed (exponent first, then coset, lexicographically) so that
every rendering of a series is byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .numutil import parse_rat, rat_str


@dataclass
class VVQSeries:
    weight: Fraction
    gram: tuple[tuple[int, ...], ...]
    prec: Fraction
    coeffs: dict = field(default_factory=dict)  # (gamma, n) -> Fraction

    def coefficient(self, gamma, n) -> Fraction:
        return self.coeffs.get((tuple(gamma), Fraction(n)), Fraction(0))

    def items(self):
        """Entries sorted by exponent, then coset representative."""
        return sorted(self.coeffs.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def component(self, gamma):
        gamma = tuple(gamma)
        out = [(n, c) for (g, n), c in self.coeffs.items() if g == gamma]
        out.sort()
        return out

    def component_values(self, gamma, count=None):
        """Nonzero coefficients of one component in exponent order."""
        vals = [c for _n, c in self.component(gamma) if c != 0]
        return vals if count is None else vals[:count]

    def scaled(self, r) -> "VVQSeries":
        r = Fraction(r)
        return VVQSeries(
            weight=self.weight,
            gram=self.gram,
            prec=self.prec,
            coeffs={k: r * v for k, v in self.coeffs.items()},
        )

    def __add__(self, other: "VVQSeries") -> "VVQSeries":
        assert self.gram == other.gram
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return VVQSeries(
            weight=self.weight,
            gram=self.gram,
            prec=min(self.prec, other.prec),
            coeffs=out,
        )

    def equal_through(self, other: "VVQSeries", bound) -> bool:
        """Coefficient-wise equality for all exponents <= bound."""
        bound = Fraction(bound)
        keys = {k for k in self.coeffs if k[1] <= bound}
        keys |= {k for k in other.coeffs if k[1] <= bound}
        return all(
            self.coeffs.get(k, Fraction(0)) == other.coeffs.get(k, Fraction(0))
            for k in keys
        )

    def first_difference(self, other: "VVQSeries", bound):
        bound = Fraction(bound)
        keys = {k for k in self.coeffs if k[1] <= bound}
        keys |= {k for k in other.coeffs if k[1] <= bound}
        for k in sorted(keys, key=lambda kk: (kk[1], kk[0])):
            a = self.coeffs.get(k, Fraction(0))
            b = other.coeffs.get(k, Fraction(0))
            if a != b:
                return k, a, b
        return None

    def to_json_obj(self) -> dict:
        return {
            "weight": rat_str(self.weight),
            "gram": [list(row) for row in self.gram],
            "prec": rat_str(self.prec),
            "coeffs": [
                {
                    "gamma": [rat_str(x) for x in gamma],
                    "n": rat_str(n),
                    "c": rat_str(c),
                }
                for (gamma, n), c in self.items()
            ],
        }

    @classmethod
    def from_json_obj(cls, obj) -> "VVQSeries":
        coeffs = {}
        for entry in obj["coeffs"]:
            gamma = tuple(parse_rat(x) for x in entry["gamma"])
            coeffs[(gamma, parse_rat(entry["n"]))] = parse_rat(entry["c"])
        return cls(
            weight=parse_rat(obj["weight"]),
            gram=tuple(tuple(int(x) for x in row) for row in obj["gram"]),
            prec=parse_rat(obj["prec"]),
            coeffs=coeffs,
        )

    def component_text(self, gamma) -> str:
        """Render one component like "1 - 24q - 72q^2" / "-4q^{3/4} - ..."."""
        parts = []
        for n, c in self.component(gamma):
            if c == 0:
                continue
            parts.append((n, c))
        if not parts:
            return "0"
        chunks = []
        for idx, (n, c) in enumerate(parts):
            mag = abs(c)
            if n == 0:
                body = rat_str(mag)
            else:
                if n == 1:
                    pw = "q"
                elif n.denominator == 1:
                    pw = "q^%d" % n.numerator
                else:
                    pw = "q^{%s}" % rat_str(n)
                body = pw if mag == 1 else rat_str(mag) + pw
            if idx == 0:
                chunks.append(("-" if c < 0 else "") + body)
            else:
                chunks.append(("- " if c < 0 else "+ ") + body)
        return " ".join(chunks)

    def text_lines(self) -> list[str]:
        gammas = sorted({g for g, _n in self.coeffs})
        lines = []
        for gamma in gammas:
            label = "(" + ", ".join(rat_str(x) for x in gamma) + ")"
            lines.append("e_%s: %s" % (label, self.component_text(gamma)))
        return lines
