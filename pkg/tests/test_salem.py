"""Certification checks, rejection order, alpha computation, and certificate replay."""

import math
import random
from dataclasses import replace
from fractions import Fraction

import pytest

from salemunits.construct import build_candidate, plan_construction
from salemunits.intpoly import IntPoly, lift_trace
from salemunits.roots import IsolatingInterval
from salemunits.salem import (
    CertificationError,
    SalemCertificate,
    alpha_from_beta,
    certify_min_poly,
    certify_trace,
    unit_check,
    verify_certificate,
)


def _good_trace(a: int = 5) -> IntPoly:
    return build_candidate(plan_construction(12, 9), a)


class TestUnitCheck:
    def test_n1_single_evaluation(self):
        assert unit_check(IntPoly([1, -3, 1]), 1) == -1

    def test_n2_product(self):
        assert unit_check(IntPoly([1, -3, 1]), 2) == -5

    def test_pipeline_value_is_unit(self):
        cert = certify_trace(_good_trace(), 12)
        assert abs(unit_check(cert.min_poly, 12)) == 1

    def test_requires_monic(self):
        with pytest.raises(ValueError):
            unit_check(IntPoly([1, -3, 2]), 2)


class TestAlphaFromBeta:
    def test_exact_beta_3(self):
        # (3 + sqrt(5))/2, digits frozen from an integer-sqrt computation:
        # floor((3*10^30 + isqrt(5*10^60)) / 2) digit string
        expected = (3 * 10**30 + math.isqrt(5 * 10**60)) // 2
        dec, iv = alpha_from_beta(IsolatingInterval(Fraction(3), Fraction(3), exact_root=Fraction(3)), 30)
        assert dec == f"{str(expected)[0]}.{str(expected)[1:]}"
        assert iv.width <= Fraction(1, 10**30)

    def test_width_contract(self):
        p = IntPoly([1, -3, 1])
        iv = IsolatingInterval(Fraction(2), Fraction(3))
        for digits in (5, 12, 40):
            _, out = alpha_from_beta(iv, digits, p)
            assert out.width <= Fraction(1, 10**digits)

    def test_reconstruction(self):
        p = IntPoly([1, -3, 1])
        _, out = alpha_from_beta(IsolatingInterval(Fraction(2), Fraction(3)), 25, p)
        # alpha + 1/alpha recovers beta within the refined interval bounds
        lo = out.lo + 1 / out.hi
        hi = out.hi + 1 / out.lo
        beta_digits = (3 * 10**20 + math.isqrt(5 * 10**40)) // (2 * 10**10)  # beta = alpha + 1/alpha = 2.6180...
        assert lo <= Fraction(beta_digits + 1, 10**10) and hi >= Fraction(beta_digits, 10**10)

    def test_rational_alpha(self):
        dec, iv = alpha_from_beta(
            IsolatingInterval(Fraction(5, 2), Fraction(5, 2), exact_root=Fraction(5, 2)), 8
        )
        assert dec == "2.00000000"
        assert iv.exact_root == 2

    def test_rational_alpha_on_digit_boundary(self):
        # beta = 41/20 gives alpha = 5/4 exactly; the bisection from (2, 3)
        # never lands on 41/20, so the digit-boundary candidate must be
        # detected exactly rather than looping
        poly = IntPoly([-41, 20])
        dec, iv = alpha_from_beta(IsolatingInterval(Fraction(2), Fraction(3)), 2, poly)
        assert dec == "1.25"
        assert iv.exact_root == Fraction(5, 4)

    def test_interval_not_above_2(self):
        with pytest.raises(ValueError):
            alpha_from_beta(IsolatingInterval(Fraction(1), Fraction(3)), 10, IntPoly([1, -3, 1]))


class TestCertifyTrace:
    def test_accepts_pipeline_candidate(self):
        cert = certify_trace(_good_trace(5), 12, construction="quad-unit", a=5)
        assert cert.t == 9
        assert cert.min_poly.degree == 18
        assert abs(cert.resultant_value) == 1
        assert cert.min_poly.coeffs[0] == 1 and cert.min_poly.is_monic
        assert cert.min_poly == lift_trace(cert.trace_poly, 9)
        assert cert.root_pattern.above_pos2 == 1
        assert cert.root_pattern.in_neg2_2 == 8

    def test_degree_rejection(self):
        with pytest.raises(CertificationError) as err:
            certify_trace(IntPoly([-3, 1]), 12)
        assert err.value.check == "degree"

    def test_monic_rejection(self):
        with pytest.raises(CertificationError) as err:
            certify_trace(IntPoly([1, -5, 2]), 12)
        assert err.value.check == "monic"

    def test_root_at_two_rejection(self):
        t = IntPoly([-2, 1]) * IntPoly([1, -5, 1])
        with pytest.raises(CertificationError) as err:
            certify_trace(t, 12)
        assert err.value.check == "root_pattern"

    def test_separability_rejection(self):
        t = IntPoly([1, -5, 1]) ** 2
        with pytest.raises(CertificationError) as err:
            certify_trace(t, 12)
        assert err.value.check == "separability"

    def test_reducible_rejection(self):
        # right pattern, wrong factorization: (x^2 - 5x + 1)(x - 1) has
        # roots 4.79, 1, 0.2 -- one above 2, two in (-2, 2)
        t = IntPoly([1, -5, 1]) * IntPoly([-1, 1])
        with pytest.raises(CertificationError) as err:
            certify_trace(t, 12)
        assert err.value.check == "irreducibility"

    def test_resultant_rejection(self):
        with pytest.raises(CertificationError) as err:
            certify_trace(IntPoly([1, -5, 1]), 12)
        assert err.value.check == "resultant"


class TestCertifyMinPoly:
    def test_golden_square_unit_gap(self):
        with pytest.raises(CertificationError) as err:
            certify_min_poly(IntPoly([1, -3, 1]), 2)
        assert err.value.check == "resultant"
        assert err.value.data["value"] == -5

    def test_not_reciprocal(self):
        p = IntPoly([5, -3, 1, 1]) * IntPoly([1, 1])
        assert int(p.degree) % 2 == 0
        with pytest.raises(CertificationError) as err:
            certify_min_poly(p, 2)
        assert err.value.check == "reciprocal"

    def test_round_trip_from_search(self):
        cert = certify_trace(_good_trace(4), 12)
        again = certify_min_poly(cert.min_poly, 12)
        assert again.trace_poly == cert.trace_poly
        assert again.resultant_value == cert.resultant_value


class TestCertificate:
    def test_json_roundtrip(self):
        cert = certify_trace(_good_trace(6), 12, construction="quad-unit", a=6)
        back = SalemCertificate.from_json_dict(cert.to_json_dict())
        assert back.trace_poly == cert.trace_poly
        assert back.min_poly == cert.min_poly
        assert back.alpha_decimal == cert.alpha_decimal
        assert back.root_pattern == cert.root_pattern
        assert back.beta_interval.lo == cert.beta_interval.lo
        assert verify_certificate(back) == []

    def test_replay_accepts_valid(self):
        cert = certify_trace(_good_trace(5), 12, a=5)
        assert verify_certificate(cert) == []

    def test_replay_rejects_tampering(self):
        cert = certify_trace(_good_trace(5), 12, a=5)
        assert "resultant" in verify_certificate(replace(cert, resultant_value=3))
        tampered = replace(cert, min_poly=cert.min_poly + IntPoly([0, 1]))
        assert "lift" in verify_certificate(tampered)
        wrong_alpha = replace(cert, alpha_decimal="2." + "0" * 30)
        assert "alpha" in verify_certificate(wrong_alpha)

    def test_corruption_fuzz(self):
        # every single-coefficient shift of an accepted trace polynomial is rejected
        cert = certify_trace(_good_trace(3), 12)
        base = list(cert.trace_poly.coeffs)
        rng = random.Random(17)
        rejected = 0
        trials = 40
        for _ in range(trials):
            idx = rng.randrange(len(base))
            delta = rng.choice([-1, 1])
            corrupt = base.copy()
            corrupt[idx] += delta
            try:
                certify_trace(IntPoly(corrupt), 12)
            except CertificationError:
                rejected += 1
        assert rejected == trials
