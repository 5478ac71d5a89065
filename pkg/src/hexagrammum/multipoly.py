"""Sparse exact polynomials in the three parameters p, q, r."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Any, Iterable, Mapping

VARS = ("p", "q", "r")

Exp = tuple  # (i, j, k)


class MultiPoly:
    """Immutable polynomial: a dict from exponent triples to nonzero Fractions."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Exp, Any] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[tuple(e)] = c
        self.terms: dict[Exp, Fraction] = clean
        self._hash = None

    @classmethod
    def const(cls, c) -> "MultiPoly":
        return cls({(0, 0, 0): c})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        e = [0, 0, 0]
        e[VARS.index(name)] = 1
        return cls({tuple(e): 1})

    @staticmethod
    def _lift(x) -> "MultiPoly":
        if isinstance(x, MultiPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return MultiPoly.const(x)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other) -> "MultiPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultiPoly()
            return MultiPoly({e: c * other for e, c in self.terms.items()})
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Exp, Fraction] = {}
        for (a1, b1, c1), x in self.terms.items():
            for (a2, b2, c2), y in other.terms.items():
                e = (a1 + a2, b1 + b2, c1 + c2)
                out[e] = out.get(e, 0) + x * y
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        result = MultiPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def degree(self, var: int | None = None) -> int:
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        return max(e[var] for e in self.terms)

    def evaluate(self, point: Iterable[Any]) -> Any:
        p = tuple(point)
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for x, k in zip(p, e):
                if k:
                    t = t * x**k
            total = total + t
        return total

    def substitute(self, values: Iterable[Any]) -> Any:
        """Replace (p, q, r) by ring elements (e.g. other MultiPolys)."""
        vals = [self._lift(v) for v in values]
        total = MultiPoly()
        cache: dict[tuple[int, int], MultiPoly] = {}

        def power(i, k):
            if (i, k) not in cache:
                cache[(i, k)] = vals[i] ** k
            return cache[(i, k)]

        for e, c in self.terms.items():
            t = MultiPoly.const(c)
            for i, k in enumerate(e):
                if k:
                    t = t * power(i, k)
            total = total + t
        return total

    def integer_terms(self) -> dict[Exp, int]:
        """Coefficients scaled to integers (only valid for primitive use)."""
        den = lcm(*(c.denominator for c in self.terms.values())) if self.terms else 1
        return {e: int(c * den) for e, c in self.terms.items()}

    def content(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        den = lcm(*(c.denominator for c in self.terms.values()))
        num = gcd(*(int(c * den) for c in self.terms.values()))
        return Fraction(num, den)

    def leading(self) -> tuple[Exp, Fraction]:
        """Lex-leading term (p > q > r)."""
        e = max(self.terms)
        return e, self.terms[e]

    def divmod(self, divisor: "MultiPoly") -> tuple["MultiPoly", "MultiPoly"]:
        """Multivariate division in lex order; exact when the remainder is zero."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        le, lc = divisor.leading()
        quotient: dict[Exp, Fraction] = {}
        remainder: dict[Exp, Fraction] = {}
        current = dict(self.terms)
        while current:
            e = max(current)
            c = current[e]
            if all(a >= b for a, b in zip(e, le)):
                qe = tuple(a - b for a, b in zip(e, le))
                qc = c / lc
                quotient[qe] = quotient.get(qe, 0) + qc
                for de, dc in divisor.terms.items():
                    te = tuple(a + b for a, b in zip(qe, de))
                    v = current.get(te, 0) - qc * dc
                    if v:
                        current[te] = v
                    else:
                        current.pop(te, None)
            else:
                remainder[e] = c
                del current[e]
        return MultiPoly(quotient), MultiPoly(remainder)

    def exact_div(self, divisor: "MultiPoly") -> "MultiPoly | None":
        q, r = self.divmod(divisor)
        return q if r.is_zero() else None

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                (v if k == 1 else f"{v}^{k}") for v, k in zip(VARS, e) if k
            )
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


P = MultiPoly.var("p")
Q = MultiPoly.var("q")
R = MultiPoly.var("r")
ONE = MultiPoly.const(1)
