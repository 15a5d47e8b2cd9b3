"""Certification that a trace polynomial yields a Salem number alpha with alpha^n - 1 a unit.

A certificate is an evidence bundle: the trace polynomial T, its reciprocal
lift S, the exact root pattern, an irreducibility witness, the resultant of
x^n - 1 and S (absolute value 1 for a unit), and a certified decimal
approximation of alpha.  Verification is a separate code path from
construction so a certificate is evidence, not trust.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .factor import IrreducibilityWitness, is_irreducible, verify_witness
from .intpoly import IntPoly, is_reciprocal, lift_trace, resultant
from .roots import (
    IsolatingInterval,
    RootPattern,
    cauchy_bound,
    is_separable,
    isolate_roots,
    refine,
    root_pattern,
    sturm_count,
)
from .trigpolys import extract_trace

DEFAULT_PRECISION = 30


class CertificationError(Exception):
    """Structured rejection naming the first failed certification check.

    Checks run in fixed order: monic, degree, separability, root_pattern,
    irreducibility, lift, resultant (cheap exact gates before the expensive
    irreducibility decision).
    """

    def __init__(self, check: str, message: str, data: Optional[dict] = None):
        super().__init__(f"{check}: {message}")
        self.check = check
        self.message = message
        self.data = data or {}


@dataclass(frozen=True)
class SalemCertificate:
    """Full evidence that trace_poly certifies a Salem number of degree 2t with alpha^n - 1 a unit."""

    n: int
    t: int
    a: Optional[int]
    construction: str
    trace_poly: IntPoly
    min_poly: IntPoly
    root_pattern: RootPattern
    beta_interval: IsolatingInterval
    alpha_decimal: str
    alpha_precision: int
    irreducibility: IrreducibilityWitness
    resultant_value: int

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "a": self.a,
            "construction": self.construction,
            "trace_poly": self.trace_poly.to_text(),
            "min_poly": self.min_poly.to_text(),
            "resultant": self.resultant_value,
            "alpha": self.alpha_decimal,
            "alpha_precision": self.alpha_precision,
            "beta_interval": {
                "lo": _frac_text(self.beta_interval.lo),
                "hi": _frac_text(self.beta_interval.hi),
            },
            "irreducibility": self.irreducibility.to_json_dict(),
            "root_pattern": self.root_pattern.to_json_dict(),
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "SalemCertificate":
        rp = d["root_pattern"]
        lo = _frac_parse(d["beta_interval"]["lo"])
        hi = _frac_parse(d["beta_interval"]["hi"])
        return cls(
            n=d["n"],
            t=d["t"],
            a=d.get("a"),
            construction=d["construction"],
            trace_poly=IntPoly.from_text(d["trace_poly"]),
            min_poly=IntPoly.from_text(d["min_poly"]),
            root_pattern=RootPattern(
                below_neg2=rp["below_neg2"],
                at_neg2=rp["at_neg2"],
                in_neg2_2=rp["in_neg2_2"],
                at_pos2=rp["at_pos2"],
                above_pos2=rp["above_pos2"],
                in_0_1=rp["in_0_1"],
                separable=rp["separable"],
            ),
            beta_interval=IsolatingInterval(lo, hi, exact_root=lo if lo == hi else None),
            alpha_decimal=d["alpha"],
            alpha_precision=d["alpha_precision"],
            irreducibility=IrreducibilityWitness.from_json_dict(d["irreducibility"]),
            resultant_value=d["resultant"],
        )


def _frac_text(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _frac_parse(s: str) -> Fraction:
    return Fraction(s)


def unit_check(s_poly: IntPoly, n: int) -> int:
    """Exact resultant of x^n - 1 and S; absolute value 1 certifies alpha^n - 1 a unit.

    Always recomputed from scratch, never assumed from the construction.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not s_poly.is_monic:
        raise ValueError("minimal polynomial must be monic")
    xn1 = IntPoly([-1] + [0] * (n - 1) + [1])
    return resultant(xn1, s_poly)


def _sqrt_enclosure(y: Fraction, digits: int) -> tuple[Fraction, Fraction]:
    """[lo, hi] with lo <= sqrt(y) <= hi and hi - lo <= 10^-digits."""
    if y < 0:
        raise ValueError("negative radicand")
    scale = 10**digits
    n = (y.numerator * scale * scale) // y.denominator
    r = math.isqrt(n)
    return Fraction(r, scale), Fraction(r + 1, scale)


def _decimal_string(x: Fraction, digits: int) -> str:
    scaled = (x.numerator * 10**digits) // x.denominator
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{str(frac).zfill(digits)}" if digits else f"{sign}{whole}"


def alpha_from_beta(
    beta_iv: IsolatingInterval,
    precision_digits: int = DEFAULT_PRECISION,
    poly: Optional[IntPoly] = None,
) -> tuple[str, IsolatingInterval]:
    """Certified decimal of alpha = (beta + sqrt(beta^2 - 4))/2 from a beta interval.

    Returns (decimal string with ``precision_digits`` certified digits, the
    alpha enclosure).  ``poly`` is needed to refine the beta interval when the
    input is wider than the target precision requires.
    """
    if precision_digits < 1:
        raise ValueError("precision must be at least 1 digit")
    if beta_iv.exact_root is not None and beta_iv.exact_root <= 2:
        raise ValueError("beta must exceed 2")
    if beta_iv.exact_root is None and beta_iv.lo < 2:
        raise ValueError("beta interval must lie entirely above 2")

    if beta_iv.exact_root is not None:
        b = beta_iv.exact_root
        disc = b * b - 4
        root_num = math.isqrt(disc.numerator)
        root_den = math.isqrt(disc.denominator)
        if root_num * root_num == disc.numerator and root_den * root_den == disc.denominator:
            alpha = (b + Fraction(root_num, root_den)) / 2
            iv = IsolatingInterval(alpha, alpha, exact_root=alpha)
            return _decimal_string(alpha, precision_digits), iv

    work = precision_digits + 4
    while True:
        if beta_iv.exact_root is not None:
            bl = bh = beta_iv.exact_root
        else:
            target = Fraction(1, 10**work)
            if beta_iv.width > target:
                if poly is None:
                    raise ValueError("beta interval too wide; pass the polynomial to refine")
                beta_iv = refine(beta_iv, poly, target)
                if beta_iv.exact_root is not None:
                    return alpha_from_beta(beta_iv, precision_digits, poly)
            bl, bh = beta_iv.lo, beta_iv.hi
        sl, _ = _sqrt_enclosure(bl * bl - 4, work)
        _, sh = _sqrt_enclosure(bh * bh - 4, work)
        al, ah = (bl + sl) / 2, (bh + sh) / 2
        scale = 10**precision_digits
        fl = (al.numerator * scale) // al.denominator
        fh = (ah.numerator * scale) // ah.denominator
        if fl == fh:
            return _decimal_string(al, precision_digits), IsolatingInterval(al, ah)
        # alpha may sit exactly on a digit boundary (rational alpha whose beta
        # the dyadic bisection never hits); test the unique candidate exactly
        if fh - fl == 1 and poly is not None:
            cand = Fraction(fh, scale)
            if cand > 1:
                beta_cand = cand + 1 / cand
                if beta_iv.lo < beta_cand <= beta_iv.hi and poly(beta_cand) == 0:
                    iv = IsolatingInterval(cand, cand, exact_root=cand)
                    return _decimal_string(cand, precision_digits), iv
        work += max(8, work // 2)


def certify_trace(
    trace: IntPoly,
    n: int,
    *,
    construction: str = "external",
    a: Optional[int] = None,
    precision_digits: int = DEFAULT_PRECISION,
) -> SalemCertificate:
    """Certify a candidate trace polynomial, or raise CertificationError at the first failed check.

    Check order: monic/degree gates, separability, root pattern,
    irreducibility, reciprocal lift, unit resultant.  All arithmetic is exact.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if trace.is_zero or not trace.is_monic:
        raise CertificationError("monic", "trace polynomial must be monic", {"poly": trace.to_text()})
    t = int(trace.degree)
    if t < 2:
        raise CertificationError(
            "degree", f"trace degree {t} < 2; a Salem minimal polynomial has degree 2t >= 4"
        )

    if not is_separable(trace):
        raise CertificationError("separability", "trace polynomial has a repeated root")

    pattern = root_pattern(trace)
    ok = (
        pattern.above_pos2 == 1
        and pattern.at_neg2 == 0
        and pattern.at_pos2 == 0
        and pattern.below_neg2 == 0
        and pattern.in_neg2_2 == t - 1
    )
    if not ok:
        raise CertificationError(
            "root_pattern",
            f"expected 1 root above 2 and {t - 1} in (-2,2); got {pattern}",
            {"pattern": pattern.to_json_dict()},
        )

    witness = is_irreducible(trace)
    if witness.verdict != "irreducible":
        raise CertificationError(
            "irreducibility",
            "trace polynomial is reducible",
            {"factor": witness.factor.to_text() if witness.factor else None},
        )

    s_poly = lift_trace(trace, t)
    if not is_reciprocal(s_poly) or int(s_poly.degree) != 2 * t:
        raise CertificationError("lift", "lifted polynomial is not reciprocal of degree 2t")

    res = unit_check(s_poly, n)
    if abs(res) != 1:
        raise CertificationError(
            "resultant",
            f"|Res(x^{n} - 1, S)| = {abs(res)} != 1",
            {"value": res},
        )

    bound = cauchy_bound(trace) + 1
    intervals = isolate_roots(trace, Fraction(2), bound)
    assert len(intervals) == 1, "root pattern guaranteed exactly one root above 2"
    beta_iv = refine(intervals[0], trace, Fraction(1, 10 ** (precision_digits + 4)))
    alpha_dec, _ = alpha_from_beta(beta_iv, precision_digits, trace)

    return SalemCertificate(
        n=n,
        t=t,
        a=a,
        construction=construction,
        trace_poly=trace,
        min_poly=s_poly,
        root_pattern=pattern,
        beta_interval=beta_iv,
        alpha_decimal=alpha_dec,
        alpha_precision=precision_digits,
        irreducibility=witness,
        resultant_value=res,
    )


def certify_min_poly(
    s_poly: IntPoly,
    n: int,
    *,
    construction: str = "external",
    a: Optional[int] = None,
    precision_digits: int = DEFAULT_PRECISION,
) -> SalemCertificate:
    """Certify a reciprocal degree-2t polynomial given as the minimal polynomial.

    The unit resultant is checked on the polynomial as given, before trace
    extraction, so a failed unit property is reported even when the trace
    would be rejected on degree grounds.
    """
    if s_poly.is_zero or not s_poly.is_monic:
        raise CertificationError("monic", "minimal polynomial must be monic")
    if int(s_poly.degree) % 2 != 0 or not is_reciprocal(s_poly):
        raise CertificationError("reciprocal", "not reciprocal")
    res = unit_check(s_poly, n)
    if abs(res) != 1:
        raise CertificationError(
            "resultant", f"|Res(x^{n} - 1, S)| = {abs(res)} != 1", {"value": res}
        )
    trace = extract_trace(s_poly)
    return certify_trace(
        trace, n, construction=construction, a=a, precision_digits=precision_digits
    )


def verify_certificate(cert: SalemCertificate) -> list[str]:
    """Independently replay a certificate; returns the names of failed checks (empty if valid).

    Pattern, lift and resultant are recomputed from the stored trace
    polynomial; the irreducibility witness is replayed from its detail when it
    carries one, re-decided from scratch otherwise; the beta interval is
    checked to bracket exactly one root above 2, inside (a-1, a) when the
    construction parameter is recorded.
    """
    failures: list[str] = []
    trace, n, t = cert.trace_poly, cert.n, cert.t
    if trace.is_zero or not trace.is_monic or int(trace.degree) != t or t < 2:
        return ["degree"]
    if lift_trace(trace, t) != cert.min_poly or not is_reciprocal(cert.min_poly):
        failures.append("lift")
    pattern = root_pattern(trace)
    if pattern != cert.root_pattern or pattern.above_pos2 != 1 or pattern.in_neg2_2 != t - 1:
        failures.append("root_pattern")
    if cert.irreducibility.verdict != "irreducible":
        failures.append("irreducibility")
    elif cert.irreducibility.method == "modular-degree-filter":
        if not verify_witness(trace, cert.irreducibility):
            failures.append("irreducibility")
    else:
        if is_irreducible(trace).verdict != "irreducible":
            failures.append("irreducibility")
    res = unit_check(cert.min_poly, n)
    if res != cert.resultant_value or abs(res) != 1:
        failures.append("resultant")
    iv = cert.beta_interval
    if iv.exact_root is not None:
        failures.append("beta_interval")  # beta is irrational for an irreducible trace
    else:
        if iv.lo < 2 or sturm_count(trace, iv.lo, iv.hi) != 1:
            failures.append("beta_interval")
        else:
            alpha_dec, _ = alpha_from_beta(iv, cert.alpha_precision, trace)
            if alpha_dec != cert.alpha_decimal:
                failures.append("alpha")
        if cert.a is not None and not (cert.a - 1 <= iv.lo and iv.hi <= cert.a):
            if sturm_count(trace, Fraction(cert.a - 1), Fraction(cert.a)) != 1:
                failures.append("beta_location")
    return failures
