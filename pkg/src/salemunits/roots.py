"""Exact real-root counting and isolation via Sturm sequences over rational intervals.

Counts use the half-open convention (lo, hi]; open-interval helpers adjust by
exact endpoint evaluation.  Chains are normalized to primitive parts each step
(subresultant-style) so coefficients stay small, with signs corrected so the
sequence remains a genuine Sturm chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .intpoly import IntPoly, gcd_over_rationals, pseudo_rem

Rat = Fraction


@dataclass(frozen=True)
class IsolatingInterval:
    """Rational interval certified to contain exactly one root of a polynomial.

    When the root is rational and hit exactly, ``exact_root`` is set and
    lo == hi == root; otherwise lo < hi and the root lies in (lo, hi].
    """

    lo: Fraction
    hi: Fraction
    exact_root: Optional[Fraction] = None
    multiplicity: int = 1

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x: Fraction) -> bool:
        if self.exact_root is not None:
            return x == self.exact_root
        return self.lo < x <= self.hi


@dataclass(frozen=True)
class RootPattern:
    """Classification of the distinct real roots of a polynomial against -2, 0, 1, 2."""

    below_neg2: int
    at_neg2: int
    in_neg2_2: int
    at_pos2: int
    above_pos2: int
    in_0_1: int
    separable: bool

    @property
    def total_real(self) -> int:
        return self.below_neg2 + self.at_neg2 + self.in_neg2_2 + self.at_pos2 + self.above_pos2

    def to_json_dict(self) -> dict:
        return {
            "below_neg2": self.below_neg2,
            "at_neg2": self.at_neg2,
            "in_neg2_2": self.in_neg2_2,
            "at_pos2": self.at_pos2,
            "above_pos2": self.above_pos2,
            "in_0_1": self.in_0_1,
            "separable": self.separable,
        }


def _sign_at(coeffs: tuple[int, ...], x: Fraction) -> int:
    """Exact sign of the polynomial at x, via homogenized integer Horner."""
    if not coeffs:
        return 0
    num, den = x.numerator, x.denominator
    acc = coeffs[-1]
    dpow = 1
    for i in range(len(coeffs) - 2, -1, -1):
        dpow *= den
        acc = acc * num + coeffs[i] * dpow
    return (acc > 0) - (acc < 0)


def squarefree_part(p: IntPoly) -> IntPoly:
    """Primitive squarefree part: same distinct roots, multiplicities dropped."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    f = p.primitive()
    if f.degree <= 0:
        return f
    g = gcd_over_rationals(f, f.derivative())
    if g.degree > 0:
        f = f.exact_div(g)
    return f


def is_separable(p: IntPoly) -> bool:
    """True iff p has no repeated root, i.e. gcd(p, p') = 1."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    if p.degree <= 0:
        return True
    return gcd_over_rationals(p, p.derivative()).degree == 0


class SturmChain:
    """Sturm chain of the squarefree part of a polynomial, shareable read-only.

    ``count(lo, hi)`` is the number of distinct real roots in (lo, hi].
    """

    def __init__(self, p: IntPoly):
        f = squarefree_part(p)
        self.poly = f
        chain = [f]
        d = f.derivative()
        if not d.is_zero:
            chain.append(d.primitive())
        while len(chain) >= 2 and not chain[-1].is_zero and chain[-1].degree > 0:
            a, b = chain[-2], chain[-1]
            r = pseudo_rem(a, b)
            if r.is_zero:
                break
            delta = int(a.degree) - int(b.degree)
            # pseudo_rem = lc(b)^(delta+1) * (a mod b); flip so the stored
            # element is a positive multiple of -(a mod b)
            if b.lc < 0 and (delta + 1) % 2 == 1:
                nxt = r
            else:
                nxt = -r
            nxt = nxt.scalar_div(nxt.content())
            chain.append(nxt)
        self.chain = [c.coeffs for c in chain]

    def variations(self, x: Fraction) -> int:
        signs = [s for s in (_sign_at(c, x) for c in self.chain) if s != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count(self, lo: Fraction, hi: Fraction) -> int:
        """Distinct roots in the half-open interval (lo, hi]."""
        if lo >= hi:
            raise ValueError("need lo < hi")
        return self.variations(lo) - self.variations(hi)

    def count_open(self, lo: Fraction, hi: Fraction) -> int:
        """Distinct roots in the open interval (lo, hi)."""
        n = self.count(lo, hi)
        if _sign_at(self.poly.coeffs, Fraction(hi)) == 0:
            n -= 1
        return n


def cauchy_bound(p: IntPoly) -> Fraction:
    """A rational B with every real root of p inside [-B, B]."""
    if p.is_zero or p.degree <= 0:
        return Fraction(1)
    return 1 + Fraction(max(abs(c) for c in p.coeffs[:-1]), abs(p.lc))


def sturm_count(p: IntPoly, lo, hi) -> int:
    """Number of distinct real roots of p in the half-open interval (lo, hi]."""
    return SturmChain(p).count(Fraction(lo), Fraction(hi))


def sturm_count_open(p: IntPoly, lo, hi) -> int:
    """Number of distinct real roots of p in the open interval (lo, hi)."""
    return SturmChain(p).count_open(Fraction(lo), Fraction(hi))


def _isolate(chain: SturmChain, lo: Fraction, hi: Fraction) -> list[IsolatingInterval]:
    n = chain.count(lo, hi)
    if n == 0:
        return []
    if n == 1:
        if _sign_at(chain.poly.coeffs, hi) == 0:
            return [IsolatingInterval(hi, hi, exact_root=hi)]
        return [IsolatingInterval(lo, hi)]
    mid = (lo + hi) / 2
    return _isolate(chain, lo, mid) + _isolate(chain, mid, hi)


def isolate_roots(p: IntPoly, lo, hi) -> list[IsolatingInterval]:
    """Disjoint isolating intervals, ascending, one per distinct root in (lo, hi]."""
    if not is_separable(p):
        raise ValueError("polynomial is not separable")
    chain = SturmChain(p)
    return _isolate(chain, Fraction(lo), Fraction(hi))


def refine(iv: IsolatingInterval, p: IntPoly, width) -> IsolatingInterval:
    """Shrink an isolating interval to the requested width by bisection.

    The root never escapes: either exact_root is set, or the endpoint signs of
    the squarefree part keep bracketing it.
    """
    width = Fraction(width)
    if iv.exact_root is not None:
        return iv
    f = squarefree_part(p)
    lo, hi = iv.lo, iv.hi
    coeffs = f.coeffs
    if _sign_at(coeffs, hi) == 0:
        return IsolatingInterval(hi, hi, exact_root=hi)
    # establish a strict sign change, bisecting by Sturm counts until then
    chain = None
    while _sign_at(coeffs, lo) * _sign_at(coeffs, hi) >= 0:
        if chain is None:
            chain = SturmChain(f)
        mid = (lo + hi) / 2
        if _sign_at(coeffs, mid) == 0:
            return IsolatingInterval(mid, mid, exact_root=mid)
        if chain.count(lo, mid) == 1:
            hi = mid
        else:
            lo = mid
    while hi - lo > width:
        mid = (lo + hi) / 2
        smid = _sign_at(coeffs, mid)
        if smid == 0:
            return IsolatingInterval(mid, mid, exact_root=mid)
        if smid * _sign_at(coeffs, hi) < 0:
            lo = mid
        else:
            hi = mid
    return IsolatingInterval(lo, hi)


def root_pattern(p: IntPoly) -> RootPattern:
    """Classify all distinct real roots of p against the marks -2, 0, 1, 2."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return RootPattern(0, 0, 0, 0, 0, 0, True)
    sep = is_separable(p)
    chain = SturmChain(p)
    f = chain.poly.coeffs
    bound = cauchy_bound(chain.poly) + 1
    at_neg2 = 1 if _sign_at(f, Fraction(-2)) == 0 else 0
    at_pos2 = 1 if _sign_at(f, Fraction(2)) == 0 else 0
    below = chain.count(-bound, Fraction(-2)) - at_neg2
    inside = chain.count(Fraction(-2), Fraction(2)) - at_pos2
    above = chain.count(Fraction(2), bound)
    in01 = chain.count_open(Fraction(0), Fraction(1))
    return RootPattern(below, at_neg2, inside, at_pos2, above, in01, sep)
