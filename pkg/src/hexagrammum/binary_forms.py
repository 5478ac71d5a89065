"""Homogeneous binary forms with exact coefficients.

A form of order ``m`` is stored densely as ``m + 1`` coefficients, entry
``i`` multiplying ``x1**(m-i) * x2**i``.  Coefficients are normally
:class:`fractions.Fraction`, but any commutative ring element that supports
``+``, ``-``, ``*`` and multiplication by a ``Fraction`` works (the symbolic
solver runs the same code over :class:`~hexagrammum.multipoly.MultiPoly`).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial, gcd, lcm
from typing import Any, Iterable, Sequence


class DegenerateInputError(ValueError):
    """Raised when an operation receives a zero or otherwise degenerate object."""


def _is_zero(c: Any) -> bool:
    return c == 0


class BinaryForm:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Any]):
        coeffs = tuple(Fraction(c) if isinstance(c, (int, str)) else c for c in coeffs)
        if not coeffs:
            raise ValueError("a binary form needs at least one coefficient")
        self.coeffs = coeffs

    @classmethod
    def zero(cls, order: int) -> "BinaryForm":
        return cls([Fraction(0)] * (order + 1))

    @classmethod
    def linear(cls, a: Any, b: Any) -> "BinaryForm":
        """The linear form ``a*x1 + b*x2``."""
        return cls([a, b])

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return all(_is_zero(c) for c in self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"BinaryForm({list(self.coeffs)!r})"

    def __str__(self) -> str:
        m = self.order
        terms = []
        for i, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            mono = "*".join(
                s for s in (_power("x1", m - i), _power("x2", i)) if s
            )
            terms.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(terms) if terms else "0"

    # -- ring structure -------------------------------------------------

    def _check_same_order(self, other: "BinaryForm") -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        self._check_same_order(other)
        return BinaryForm(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        self._check_same_order(other)
        return BinaryForm(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> "BinaryForm":
        return BinaryForm(-c for c in self.coeffs)

    def scale(self, s: Any) -> "BinaryForm":
        return BinaryForm(c * s for c in self.coeffs)

    def __mul__(self, other: Any) -> "BinaryForm":
        if not isinstance(other, BinaryForm):
            return self.scale(other)
        out = [None] * (self.order + other.order + 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                t = a * b
                k = i + j
                out[k] = t if out[k] is None else out[k] + t
        zero = self.coeffs[0] * 0
        return BinaryForm(zero if c is None else c for c in out)

    def __rmul__(self, other: Any) -> "BinaryForm":
        return self.scale(other)

    def __pow__(self, k: int) -> "BinaryForm":
        if k < 0:
            raise ValueError("negative power")
        result = BinaryForm([self.coeffs[0] * 0 + 1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- calculus -------------------------------------------------------

    def partial(self, i: int, j: int) -> "BinaryForm":
        """Mixed partial derivative d^(i+j) / dx1^i dx2^j."""
        m = self.order
        if i + j > m:
            return BinaryForm([self.coeffs[0] * 0])
        out = []
        # term k of the result comes from x1^(m-k-i) x2^(k+j) in self, index k+j
        for k in range(m - i - j + 1):
            src = k + j
            e1, e2 = m - src, src
            mult = (factorial(e1) // factorial(e1 - i)) * (factorial(e2) // factorial(e2 - j))
            out.append(self.coeffs[src] * mult)
        return BinaryForm(out)

    def evaluate(self, x1: Any, x2: Any) -> Any:
        m = self.order
        total = self.coeffs[0] * 0
        for i, c in enumerate(self.coeffs):
            total = total + c * (x1 ** (m - i)) * (x2 ** i)
        return total


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def transvectant(U: BinaryForm, V: BinaryForm, r: int) -> BinaryForm:
    """The r-th transvectant (U, V)_r, including the factorial prefactor."""
    m, n = U.order, V.order
    if not 0 <= r <= min(m, n):
        raise IndexError(f"transvectant index {r} out of range for orders {m}, {n}")
    prefactor = Fraction(factorial(m - r) * factorial(n - r), factorial(m) * factorial(n))
    total = None
    for i in range(r + 1):
        term = U.partial(r - i, i) * V.partial(i, r - i)
        c = (-1) ** i * comb(r, i)
        term = term.scale(c)
        total = term if total is None else total + term
    return total.scale(prefactor)


def substitute(F: BinaryForm, g: Sequence[Sequence[Any]]) -> BinaryForm:
    """Apply x1 -> g11 x1 + g12 x2, x2 -> g21 x1 + g22 x2 and expand."""
    (g11, g12), (g21, g22) = g
    l1 = BinaryForm([Fraction(g11), Fraction(g12)])
    l2 = BinaryForm([Fraction(g21), Fraction(g22)])
    m = F.order
    total = BinaryForm.zero(m)
    for i, c in enumerate(F.coeffs):
        if _is_zero(c):
            continue
        total = total + ((l1 ** (m - i)) * (l2 ** i)).scale(c)
    return total


class ProjectiveForm:
    """A nonzero binary form up to scale, stored in primitive integer form.

    Canonical coefficients are integers with content 1 whose first nonzero
    entry is positive, so equality of projective forms is tuple equality.
    """

    __slots__ = ("coeffs",)

    def __init__(self, form: BinaryForm | Sequence[Any]):
        if not isinstance(form, BinaryForm):
            form = BinaryForm(form)
        self.coeffs = _primitive(form.coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def form(self) -> BinaryForm:
        return BinaryForm(Fraction(c) for c in self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProjectiveForm):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"[{', '.join(str(c) for c in self.coeffs)}]"


def _primitive(coeffs: Sequence[Any]) -> tuple[int, ...]:
    fr = [Fraction(c) for c in coeffs]
    if all(c == 0 for c in fr):
        raise DegenerateInputError("cannot canonicalize the zero form")
    den = lcm(*(c.denominator for c in fr))
    ints = [int(c * den) for c in fr]
    content = gcd(*ints)
    ints = [c // content for c in ints]
    lead = next(c for c in ints if c != 0)
    if lead < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def canonicalize(F: BinaryForm | Sequence[Any]) -> ProjectiveForm:
    return ProjectiveForm(F)
