"""Exact univariate polynomials in q over the rationals.

A coefficient is a QPoly: an immutable, normalized sequence of
(exponent, Fraction) pairs with strictly increasing exponents and no zero
entries, so equality of coefficients is equality of tuples.  All structure
constants in the graph and poset algebras live here; nothing in the package
ever touches floating point.

JSON form: ``[[exponent, "num/den"], ...]`` in increasing exponent order.
"""

from __future__ import annotations

from fractions import Fraction


def _norm(d: dict[int, Fraction]) -> tuple[tuple[int, Fraction], ...]:
    return tuple((e, c) for e, c in sorted(d.items()) if c != 0)


class QPoly:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms: tuple[tuple[int, Fraction], ...] = ()):
        self.terms = terms
        self._hash = hash(terms)

    @staticmethod
    def const(value) -> "QPoly":
        c = Fraction(value)
        if c == 0:
            return ZERO
        return QPoly(((0, c),))

    @staticmethod
    def q_power(k: int) -> "QPoly":
        if k < 0:
            raise ValueError("negative q power")
        try:
            return _QPOWERS[k]
        except IndexError:
            return QPoly(((k, Fraction(1)),))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, QPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return self._hash

    def __add__(self, other: "QPoly") -> "QPoly":
        if not other.terms:
            return self
        if not self.terms:
            return other
        d = dict(self.terms)
        for e, c in other.terms:
            nc = d.get(e, 0) + c
            if nc:
                d[e] = nc
            else:
                del d[e]
        return QPoly(_norm(d))

    def __neg__(self) -> "QPoly":
        return QPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-other)

    def __mul__(self, other: "QPoly") -> "QPoly":
        if not self.terms or not other.terms:
            return ZERO
        d: dict[int, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                nc = d.get(e, 0) + c1 * c2
                if nc:
                    d[e] = nc
                else:
                    del d[e]
        return QPoly(_norm(d))

    def __pow__(self, k: int) -> "QPoly":
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def scale(self, r) -> "QPoly":
        r = Fraction(r)
        if r == 0:
            return ZERO
        return QPoly(tuple((e, c * r) for e, c in self.terms))

    def eval_at(self, r) -> Fraction:
        """Exact evaluation at a rational point."""
        r = Fraction(r)
        out = Fraction(0)
        for e, c in self.terms:
            out += c * r**e
        return out

    def degree(self) -> int:
        """Degree in q; -1 for the zero polynomial."""
        return self.terms[-1][0] if self.terms else -1

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 0)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in reversed(self.terms):
            if e == 0:
                s = str(c)
            else:
                v = "q" if e == 1 else f"q^{e}"
                if c == 1:
                    s = v
                elif c == -1:
                    s = "-" + v
                else:
                    s = f"{c}{v}"
            parts.append(s)
        out = parts[0]
        for s in parts[1:]:
            out += "-" + s[1:] if s.startswith("-") else "+" + s
        return out

    def __repr__(self) -> str:
        return f"QPoly({self})"

    def to_json(self) -> list:
        return [[e, f"{c.numerator}/{c.denominator}"] for e, c in self.terms]

    @staticmethod
    def from_json(data) -> "QPoly":
        return QPoly(_norm({int(e): Fraction(str(c)) for e, c in data}))


ZERO = QPoly()
ONE = QPoly(((0, Fraction(1)),))
MINUS_ONE = QPoly(((0, Fraction(-1)),))
Q = QPoly(((1, Fraction(1)),))
_QPOWERS = [ONE, Q] + [QPoly(((k, Fraction(1)),)) for k in range(2, 24)]


def parse_rational(text: str) -> Fraction:
    """Parse "3", "-2/5" etc. into an exact Fraction."""
    return Fraction(text.strip())
