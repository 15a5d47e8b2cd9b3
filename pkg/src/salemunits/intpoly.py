"""Exact arithmetic on dense polynomials with arbitrary-precision integer coefficients.

Coefficients are stored in ascending degree order in canonical form (no trailing
zeros; the zero polynomial is the empty tuple).  Rational values use
:class:`fractions.Fraction`, which already guarantees reduced form with a
positive denominator.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class IntPoly:
    """A polynomial over the integers.

    >>> IntPoly([3, 0, -4, 0, 1])
    IntPoly('x^4 - 4x^2 + 3')
    >>> IntPoly([1, 0, 1]) * IntPoly([0, 1])
    IntPoly('x^3 + x')
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = [operator.index(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- construction helpers --------------------------------------------

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPoly":
        return cls([0] * degree + [coeff])

    @classmethod
    def from_text(cls, text: str) -> "IntPoly":
        """Parse the comma-separated ascending-coefficient format, e.g. "3,0,-4,0,1"."""
        parts = [p.strip() for p in text.strip().split(",")]
        if not parts or any(p == "" for p in parts):
            raise ValueError(f"malformed polynomial text: {text!r}")
        return cls(int(p) for p in parts)

    def to_text(self) -> str:
        """Render in the comma-separated ascending-coefficient format."""
        if not self.coeffs:
            return "0"
        return ",".join(str(c) for c in self.coeffs)

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int | float:
        """Degree of the polynomial; -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # -- ring operations --------------------------------------------------

    def __add__(self, other: "IntPoly | int") -> "IntPoly":
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: "IntPoly | int") -> "IntPoly":
        return self + (-_as_poly(other))

    def __rsub__(self, other: "IntPoly | int") -> "IntPoly":
        return _as_poly(other) + (-self)

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if self.is_zero or other.is_zero:
            return ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x: Scalar) -> Scalar:
        """Evaluate exactly by Horner's rule at an integer or Fraction point."""
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    # -- content and division ---------------------------------------------

    def content(self) -> int:
        """Positive gcd of all coefficients (0 for the zero polynomial)."""
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive(self) -> "IntPoly":
        """Divide out the content; the sign of the leading coefficient is kept."""
        c = self.content()
        return self if c in (0, 1) else IntPoly(k // c for k in self.coeffs)

    def scalar_div(self, d: int) -> "IntPoly":
        """Exact division by a nonzero integer; raises if any coefficient resists."""
        if d == 0:
            raise ZeroDivisionError("scalar division by zero")
        out = []
        for c in self.coeffs:
            q, r = divmod(c, d)
            if r:
                raise ValueError(f"coefficient {c} not divisible by {d}")
            out.append(q)
        return IntPoly(out)

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        """Exact polynomial division over Z; raises ValueError when not a factor."""
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        q, r = [0] * max(len(self.coeffs) - len(other.coeffs) + 1, 1), list(self.coeffs)
        db, lb = len(other.coeffs) - 1, other.lc
        while len(r) - 1 >= db and any(r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < db:
                break
            head, rem = divmod(r[-1], lb)
            if rem:
                raise ValueError("not divisible over the integers")
            e = len(r) - 1 - db
            q[e] = head
            for i, bc in enumerate(other.coeffs):
                r[e + i] -= head * bc
        if any(r):
            raise ValueError("not divisible over the integers")
        return IntPoly(q)

    # -- display -----------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = " + " if (c > 0 and parts) else " - " if (c < 0 and parts) else "-" if c < 0 else ""
            mag = abs(c)
            term = "" if i == 0 else "x" if i == 1 else f"x^{i}"
            num = str(mag) if (i == 0 or mag != 1) else ""
            parts.append(f"{sign}{num}{term}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"IntPoly({str(self)!r})"


ZERO = IntPoly()
ONE = IntPoly([1])
X = IntPoly([0, 1])


def _as_poly(v: "IntPoly | int") -> IntPoly:
    return v if isinstance(v, IntPoly) else IntPoly([v])


def pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder rem(lc(b)^(deg a - deg b + 1) * a, b), exact over Z."""
    if b.is_zero:
        raise ZeroDivisionError("pseudo-division by the zero polynomial")
    if a.degree < b.degree:
        return a
    db, lb = len(b.coeffs) - 1, b.lc
    r = list(a.coeffs)
    for e in range(len(a.coeffs) - len(b.coeffs), -1, -1):
        if len(r) - 1 == db + e:
            head = r[-1]
            r = [lb * c for c in r]
            for i, bc in enumerate(b.coeffs):
                r[e + i] -= head * bc
            while r and r[-1] == 0:
                r.pop()
        else:
            r = [lb * c for c in r]
    return IntPoly(r)


def resultant(p: IntPoly, q: IntPoly) -> int:
    """Resultant with the convention Res(p, q) = lc(q)^deg(p) * prod p(roots of q).

    Computed exactly by the subresultant pseudo-remainder sequence; constants
    follow Res(c, q) = c^deg(q).
    """
    if p.is_zero or q.is_zero:
        raise ValueError("resultant of the zero polynomial is undefined")
    return _resultant_std(q, p)


def _resultant_std(a: IntPoly, b: IntPoly) -> int:
    # Standard convention: Res(a, b) = lc(a)^deg(b) * prod b(roots of a),
    # via the subresultant PRS (Cohen, Alg. 3.3.7).
    if a.degree == 0:
        return a.coeffs[0] ** int(b.degree)
    if b.degree == 0:
        return b.coeffs[0] ** int(a.degree)
    s = 1
    if a.degree < b.degree:
        if (int(a.degree) % 2 == 1) and (int(b.degree) % 2 == 1):
            s = -1
        a, b = b, a
    ca, cb = a.content(), b.content()
    a, b = a.primitive(), b.primitive()
    t = ca ** int(b.degree) * cb ** int(a.degree)
    g = h = 1
    while True:
        da, db = int(a.degree), int(b.degree)
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            s = -s
        r = pseudo_rem(a, b)
        a = b
        if r.is_zero:
            return 0
        b = r.scalar_div(g * h**delta)
        g = a.lc
        if delta > 0:
            h = _hpow(g, h, delta)
        if b.degree == 0:
            break
    # h <- h^(1-deg a) lc(b)^(deg a), exact in Z
    da = int(a.degree)
    num = b.coeffs[0] ** da
    den = h ** (da - 1)
    assert num % den == 0
    return s * t * (num // den)


def _hpow(g: int, h: int, delta: int) -> int:
    # h <- h^(1-delta) g^delta, exact in Z
    if delta == 1:
        return g
    num = g**delta
    den = h ** (delta - 1)
    assert num % den == 0
    return num // den


def gcd_over_rationals(p: IntPoly, q: IntPoly) -> IntPoly:
    """Gcd in the rational sense: primitive, positive leading coefficient.

    Returns the constant 1 when the inputs share no root.  Subresultant PRS
    keeps intermediate coefficients under control without modular arithmetic.
    """
    if p.is_zero or q.is_zero:
        raise ValueError("gcd with the zero polynomial is undefined")
    a, b = (p, q) if p.degree >= q.degree else (q, p)
    a, b = a.primitive(), b.primitive()
    g = h = 1
    while not b.is_zero:
        if b.degree == 0:
            return ONE
        delta = int(a.degree) - int(b.degree)
        r = pseudo_rem(a, b)
        a, b = b, (r if r.is_zero else r.scalar_div(g * h**delta))
        g = a.lc
        if delta > 0:
            h = _hpow(g, h, delta)
    out = a.primitive()
    return -out if out.lc < 0 else out


def lift_trace(tr: IntPoly, half_degree: int) -> IntPoly:
    """Lift a degree-t trace polynomial T to S(x) = x^t * T(x + 1/x) of degree 2t.

    The output is always palindromic; it is monic of degree exactly 2t when T
    is monic of degree t.
    """
    t = half_degree
    if tr.degree != t:
        raise ValueError(f"trace polynomial has degree {tr.degree}, expected {t}")
    out = [0] * (2 * t + 1)
    for j, c in enumerate(tr.coeffs):
        if c == 0:
            continue
        # c * x^(t-j) * (x^2 + 1)^j contributes c*C(j, i) at degree (t-j) + 2i
        for i in range(j + 1):
            out[t - j + 2 * i] += c * math.comb(j, i)
    return IntPoly(out)


def is_reciprocal(p: IntPoly) -> bool:
    """True iff x^deg(p) * p(1/x) = p, i.e. the coefficients are palindromic."""
    return p.coeffs == p.coeffs[::-1]
