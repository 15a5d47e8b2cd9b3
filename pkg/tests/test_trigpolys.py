"""Generators and identities: recurrence values, trace extraction, root counts."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from salemunits.intpoly import ONE, IntPoly, gcd_over_rationals, lift_trace
from salemunits.roots import sturm_count_open
from salemunits.trigpolys import (
    cheb,
    cheb_roots_in_unit_interval,
    cyclo_trace,
    cyclo_trace_roots_in_unit_interval,
    extract_trace,
)


class TestCheb:
    def test_small_values(self):
        assert cheb(1) == IntPoly([0, 1])
        assert cheb(2) == IntPoly([-2, 0, 1])
        assert cheb(3) == IntPoly([0, -3, 0, 1])
        assert cheb(6) == IntPoly([-2, 0, 9, 0, -6, 0, 1])
        assert cheb(0) == ONE

    def test_monic_degree(self):
        for k in range(1, 30):
            p = cheb(k)
            assert p.is_monic and p.degree == k

    def test_defining_property_on_floats(self):
        # cheb(k)(2cos u) = 2cos(k u), checked numerically as a test-only oracle
        for k in range(1, 12):
            for j in range(1, 8):
                u = 0.3 + 0.31 * j
                val = sum(c * (2 * math.cos(u)) ** i for i, c in enumerate(cheb(k).coeffs))
                assert abs(val - 2 * math.cos(k * u)) < 1e-8

    def test_index_error(self):
        with pytest.raises(ValueError):
            cheb(-1)


class TestCycloTrace:
    def test_small_values(self):
        assert cyclo_trace(1) == ONE
        assert cyclo_trace(2) == ONE
        assert cyclo_trace(4) == IntPoly([0, 1])
        assert cyclo_trace(5) == IntPoly([-1, 1, 1])
        assert cyclo_trace(12) == IntPoly([0, 3, 0, -4, 0, 1])

    def test_degrees(self):
        for n in range(3, 40):
            expected = (n - 1) // 2 if n % 2 else (n - 2) // 2
            assert cyclo_trace(n).degree == expected
            assert cyclo_trace(n).is_monic

    def test_roots_are_cosines(self):
        # floating oracle: the roots are exactly {2cos(2j pi/n)}
        for n in (7, 12, 18, 25):
            p = cyclo_trace(n)
            top = (n - 1) // 2 if n % 2 else (n - 2) // 2
            for j in range(1, top + 1):
                x = 2 * math.cos(2 * math.pi * j / n)
                val = sum(c * x**i for i, c in enumerate(p.coeffs))
                assert abs(val) < 1e-7, (n, j)

    def test_index_error(self):
        with pytest.raises(ValueError):
            cyclo_trace(0)


class TestExtractTrace:
    def test_examples(self):
        assert extract_trace(IntPoly([1, 0, 1])) == IntPoly([0, 1])
        assert extract_trace(IntPoly([1, 0, 0, 0, 1])) == IntPoly([-2, 0, 1])

    @given(st.lists(st.integers(-20, 20), min_size=1, max_size=10))
    @settings(max_examples=80)
    def test_roundtrip(self, lower):
        tr = IntPoly(lower + [1])
        t = int(tr.degree)
        assert extract_trace(lift_trace(tr, t)) == tr

    def test_errors(self):
        with pytest.raises(ValueError):
            extract_trace(IntPoly([1, 2, 3, 1]))  # odd degree
        with pytest.raises(ValueError):
            extract_trace(IntPoly([2, 0, 1]))  # even degree, not reciprocal


class TestUnitIntervalCounts:
    def test_closed_form_examples(self):
        assert cheb_roots_in_unit_interval(4) == 1
        assert cheb_roots_in_unit_interval(5) == 0
        assert cheb_roots_in_unit_interval(6) == 1
        assert cheb_roots_in_unit_interval(0) == 0

    def test_parity_corollaries(self):
        for k in range(1, 40):
            assert (cheb_roots_in_unit_interval(4 * k) % 2 == 0) == (k % 3 == 0)
            assert (cheb_roots_in_unit_interval(2 + 4 * k) % 2 == 1) == (k % 3 == 1)

    def test_against_sturm(self):
        for k in range(1, 80):
            assert cheb_roots_in_unit_interval(k) == sturm_count_open(cheb(k), 0, 1)

    def test_cyclo_counts(self):
        assert cyclo_trace_roots_in_unit_interval(12) == 0
        assert cyclo_trace_roots_in_unit_interval(28) == 2
        assert cyclo_trace_roots_in_unit_interval(44) == 3


class TestIdentities:
    def test_product_identity(self):
        for k in range(1, 25):
            assert cyclo_trace(4 * k) == cheb(k) * cyclo_trace(2 * k)
            assert cyclo_trace(8 * k) == cheb(2 * k) * cyclo_trace(4 * k)

    def test_coprimality_iff(self):
        for n in range(3, 25):
            for m in range(3, 25):
                coprime = gcd_over_rationals(cyclo_trace(n), cyclo_trace(m)).degree == 0
                assert coprime == (math.gcd(n, m) in (1, 2)), (n, m)

    def test_cheb_cyclo_coprime(self):
        for k in range(1, 15):
            for n in range(3, 15):
                if n % 4 != 0:
                    assert gcd_over_rationals(cheb(k), cyclo_trace(n)) == ONE

    def test_even_cheb_coprime_mod8(self):
        for n in (4, 12, 20, 28):
            for k in range(1, 12):
                assert gcd_over_rationals(cheb(2 * k), cyclo_trace(n)) == ONE

    def test_function_parities(self):
        for k in range(1, 20):
            p = cheb(k)
            mirrored = IntPoly([c if i % 2 == 0 else -c for i, c in enumerate(p.coeffs)])
            assert mirrored == (p if k % 2 == 0 else -p)
        for n in range(4, 33, 4):
            p = cyclo_trace(n)
            mirrored = IntPoly([c if i % 2 == 0 else -c for i, c in enumerate(p.coeffs)])
            assert mirrored == -p
            assert p(0) == 0

    def test_negative_root_shape(self):
        for n in range(4, 33, 4):
            assert sturm_count_open(cyclo_trace(n), -2, 0) == n // 4 - 1
