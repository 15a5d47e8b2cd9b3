"""Candidate trace-polynomial construction and the parity-driven dispatcher.

For n = 4 mod 8, n != 0 mod 5 and odd t >= (n+6)/2 every candidate has the
shape (fixed factor list) * (a-dependent factor) - 1, where the factor list
and the a-factor shape are selected from exact parity evidence: root counts of
the Chebyshev-style and cyclotomic-trace factors in (0, 1).  The selection
never trusts the closed-form count alone; formula and Sturm count must agree
or the run aborts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .intpoly import IntPoly, gcd_over_rationals
from .roots import is_separable, root_pattern, sturm_count_open
from .salem import DEFAULT_PRECISION, CertificationError, SalemCertificate, certify_trace
from .trigpolys import (
    cheb,
    cheb_roots_in_unit_interval,
    cyclo_trace,
    cyclo_trace_roots_in_unit_interval,
)

# Construction identifiers (also the stable strings in report/certificate JSON).
QUAD_UNIT = "quad-unit"  # a-factor x^2 - a x + 1, even-index Chebyshev factor
QUAD_SHIFT = "quad-shift"  # a-factor x^2 - a x + (a-2)
QUAD_SHIFT_GOLDEN = "quad-shift-golden"  # extra factor x^2 + x - 1
QUAD_SHIFT_GOLDEN_MIRROR = "quad-shift-golden-mirror"  # extra factor x^2 - x - 1
LINEAR = "linear"  # a-factor x - a, user-supplied inner factor

SHAPE_QUAD_UNIT = "x^2-a*x+1"
SHAPE_QUAD_SHIFT = "x^2-a*x+(a-2)"
SHAPE_LINEAR = "x-a"

_GOLDEN = IntPoly([-1, 1, 1])  # x^2 + x - 1, roots (-1 +/- sqrt(5))/2
_GOLDEN_MIRROR = IntPoly([-1, -1, 1])  # x^2 - x - 1, its mirror image
_XX_MINUS_4 = IntPoly([-4, 0, 1])


class HypothesisError(Exception):
    """A construction hypothesis on (n, t) or on the user factor is violated."""

    def __init__(self, violation: str, message: str):
        super().__init__(message)
        self.violation = violation
        self.message = message


@dataclass(frozen=True)
class ConstructionPlan:
    """Which construction applies to (n, t), with its fixed factor list.

    ``factors`` multiplied by the a-dependent factor of ``a_factor_shape``
    (minus 1) give the degree-t candidate; ``parity_evidence`` records every
    exactly-computed count the selection used.
    """

    construction: str
    n: int
    t: int
    k: int
    l: int
    factors: tuple[IntPoly, ...]
    a_factor_shape: str
    parity_evidence: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "construction": self.construction,
            "n": self.n,
            "t": self.t,
            "k": self.k,
            "l": self.l,
            "factors": [f.to_text() for f in self.factors],
            "a_factor_shape": self.a_factor_shape,
            "parity_evidence": dict(self.parity_evidence),
        }


@dataclass(frozen=True)
class SearchReport:
    """Outcome of an a-sweep for one (n, t): certificates plus explained failures."""

    n: int
    t: int
    plan: ConstructionPlan
    a_min: int
    a_max: int
    certificates: tuple[SalemCertificate, ...]
    failures: tuple[tuple[int, str], ...]

    @property
    def distinct_salem_count(self) -> int:
        return len({c.min_poly.coeffs for c in self.certificates})

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "plan": self.plan.to_json_dict(),
            "a_range": [self.a_min, self.a_max],
            "certificates": [c.to_json_dict() for c in self.certificates],
            "failures": [[a, reason] for a, reason in self.failures],
            "distinct_salem_count": self.distinct_salem_count,
        }


def _checked_unit_count(k: int) -> int:
    """Closed-form (0,1) root count of cheb(k), cross-checked against Sturm."""
    formula = cheb_roots_in_unit_interval(k)
    by_sturm = sturm_count_open(cheb(k), 0, 1)
    if formula != by_sturm:
        raise RuntimeError(f"root-count formula and Sturm disagree at k={k}: {formula} vs {by_sturm}")
    return formula


def plan_construction(n: int, t: int) -> ConstructionPlan:
    """Select the construction for (n, t), rejecting hypothesis violations precisely.

    Requires n = 4 mod 8, n != 0 mod 5, t odd, t >= (n+6)/2.  Writing
    t = 3 + n/2 + 2l: even l picks the quad-unit shape directly; odd l picks
    among the three shifted-quadratic shapes by the parities of the exact
    (0,1) root counts.
    """
    if n < 1 or t < 1:
        raise HypothesisError("positivity", "n and t must be positive integers")
    if n % 8 != 4:
        raise HypothesisError("n_mod_8", f"n must be congruent to 4 mod 8 (got n={n}, n mod 8 = {n % 8})")
    if n % 5 == 0:
        raise HypothesisError("n_mod_5", f"n must not be divisible by 5 (got n={n})")
    if t % 2 == 0:
        raise HypothesisError("t_parity", f"t must be odd (got t={t})")
    t_min = (n + 6) // 2
    if t < t_min:
        raise HypothesisError("t_lower_bound", f"t must be at least (n+6)/2 = {t_min} (got t={t})")

    l = (t - 3 - n // 2) // 2
    cn = cyclo_trace(n)

    if l % 2 == 0:
        k = l // 2
        return ConstructionPlan(
            construction=QUAD_UNIT,
            n=n,
            t=t,
            k=k,
            l=l,
            factors=(cn, _XX_MINUS_4, cheb(4 * k)),
            a_factor_shape=SHAPE_QUAD_UNIT,
            parity_evidence={"l": l, "k": k},
        )

    k = (l - 1) // 2
    r_shift = _checked_unit_count(2 + 4 * k)
    r_even = _checked_unit_count(4 * k)
    cn01 = cyclo_trace_roots_in_unit_interval(n)
    product01 = sturm_count_open(cn * cheb(2 + 4 * k), 0, 1)
    if product01 != cn01 + r_shift:
        raise RuntimeError(
            f"(0,1) root counts are not additive at n={n}, k={k}: {product01} vs {cn01}+{r_shift}"
        )
    evidence = {
        "l": l,
        "k": k,
        "roots01_cheb_shift": r_shift,
        "roots01_cheb_even": r_even,
        "roots01_cyclo": cn01,
        "roots01_product": product01,
    }
    if product01 % 2 == 0:
        return ConstructionPlan(
            construction=QUAD_SHIFT,
            n=n,
            t=t,
            k=k,
            l=l,
            factors=(cn, _XX_MINUS_4, cheb(2 + 4 * k)),
            a_factor_shape=SHAPE_QUAD_SHIFT,
            parity_evidence=evidence,
        )
    if r_shift % 2 == 1 or (r_shift % 2 == 0 and r_even % 2 == 0):
        construction = QUAD_SHIFT_GOLDEN
        extra = _GOLDEN
    else:
        construction = QUAD_SHIFT_GOLDEN_MIRROR
        extra = _GOLDEN_MIRROR
    return ConstructionPlan(
        construction=construction,
        n=n,
        t=t,
        k=k,
        l=l,
        factors=(cn, _XX_MINUS_4, extra, cheb(4 * k)),
        a_factor_shape=SHAPE_QUAD_SHIFT,
        parity_evidence=evidence,
    )


def _a_factor(shape: str, a: int) -> IntPoly:
    if shape == SHAPE_QUAD_UNIT:
        return IntPoly([1, -a, 1])
    if shape == SHAPE_QUAD_SHIFT:
        return IntPoly([a - 2, -a, 1])
    if shape == SHAPE_LINEAR:
        return IntPoly([-a, 1])
    raise ValueError(f"unknown a-factor shape {shape!r}")


def build_candidate(plan: ConstructionPlan, a: int) -> IntPoly:
    """The degree-t candidate trace polynomial: product of plan factors times the a-factor, minus 1."""
    if a < 3:
        raise ValueError(f"a must be at least 3 (got {a})")
    prod = IntPoly([1])
    for f in plan.factors:
        prod = prod * f
    r = prod * _a_factor(plan.a_factor_shape, a) - 1
    if r.degree != plan.t or not r.is_monic:
        raise RuntimeError(f"degree bookkeeping failed: built degree {r.degree}, expected {plan.t}")
    return r


def build_linear_family(n: int, t: int, d_factor: IntPoly, a: int) -> IntPoly:
    """Candidate with a linear a-factor and a user-supplied monic inner factor D.

    For odd n the shape is C(x)(x-2)D(x)(x-a) - 1 with t >= (n+3)/2 and
    deg D = t - (n+3)/2; for even n it is C(x)(x^2-4)D(x)(x-a) - 1 with t odd,
    t >= (n+4)/2 and deg D = t - (n+4)/2, where C is the cyclotomic trace
    factor.  The roots of D (if any) must be distinct, lie in (-2, 2) and
    avoid the roots of C; every hypothesis is checked exactly.
    """
    if n < 1:
        raise HypothesisError("positivity", "n must be positive")
    if n % 2 == 1:
        t_min = (n + 3) // 2
        d_expected = t - t_min
        base = IntPoly([-2, 1])
    else:
        if t % 2 == 0:
            raise HypothesisError("t_parity", f"t must be odd for even n (got t={t})")
        t_min = (n + 4) // 2
        d_expected = t - t_min
        base = _XX_MINUS_4
    if t < t_min:
        raise HypothesisError("t_lower_bound", f"t must be at least {t_min} (got t={t})")
    if not d_factor.is_monic:
        raise HypothesisError("d_monic", "the inner factor D must be monic")
    if d_factor.degree != d_expected:
        raise HypothesisError(
            "d_degree", f"the inner factor D must have degree {d_expected} (got {d_factor.degree})"
        )
    cn = cyclo_trace(n)
    if d_expected >= 1:
        if not is_separable(d_factor):
            raise HypothesisError("d_separable", "the roots of D must be distinct")
        pattern = root_pattern(d_factor)
        if pattern.in_neg2_2 != d_expected:
            raise HypothesisError("d_roots_range", "every root of D must be real and lie in (-2, 2)")
        if cn.degree >= 1 and gcd_over_rationals(d_factor, cn).degree != 0:
            raise HypothesisError("d_coprime", "D must share no root with the cyclotomic trace factor")
    if a < 3:
        raise ValueError(f"a must be at least 3 (got {a})")
    r = cn * base * d_factor * IntPoly([-a, 1]) - 1
    if r.degree != t or not r.is_monic:
        raise RuntimeError(f"degree bookkeeping failed: built degree {r.degree}, expected {t}")
    return r


def search(
    n: int,
    t: int,
    a_min: int = 3,
    a_max: int = 200,
    want: int = 5,
    precision_digits: int = DEFAULT_PRECISION,
) -> SearchReport:
    """Sweep a over [a_min, a_max], certifying each candidate, until ``want`` certificates.

    Every failure is recorded with its first failed check.  Deterministic:
    identical inputs produce the identical report.  An empty result is a
    report, not an error.
    """
    if a_min < 3:
        raise ValueError("a_min must be at least 3")
    if a_max < a_min:
        raise ValueError("a_max must be at least a_min")
    plan = plan_construction(n, t)
    certificates: list[SalemCertificate] = []
    failures: list[tuple[int, str]] = []
    for a in range(a_min, a_max + 1):
        if len(certificates) >= want:
            break
        candidate = build_candidate(plan, a)
        try:
            cert = certify_trace(
                candidate, n, construction=plan.construction, a=a, precision_digits=precision_digits
            )
        except CertificationError as err:
            failures.append((a, err.check))
            continue
        # certified candidates must have their single root above 2 inside (a-1, a)
        if sturm_count_open(candidate, a - 1, a) != 1:
            raise RuntimeError(f"certified candidate for a={a} has its large root outside (a-1, a)")
        certificates.append(cert)
    return SearchReport(
        n=n,
        t=t,
        plan=plan,
        a_min=a_min,
        a_max=a_max,
        certificates=tuple(certificates),
        failures=tuple(failures),
    )
