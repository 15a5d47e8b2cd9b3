"""Trace polynomials of cyclotomic-like families and monic Chebyshev analogues.

``cheb(k)`` is the monic degree-k integer polynomial with cheb(k)(2cos u) =
2cos(k u); ``cyclo_trace(n)`` is the trace polynomial of (x^n - 1)/(x - 1) for
odd n, resp. (x^n - 1)/(x^2 - 1) for even n, generated exactly by reciprocal
trace extraction — never from floating cosines.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .intpoly import IntPoly, is_reciprocal

# Root count of cheb(k) on the open interval (0, 1) has the closed form
# (k - e)/6 with e the unique member of the table below congruent to k mod 6.
_EPSILON_BY_K_MOD_6 = {0: 0, 1: 1, 2: 2, 3: 3, 4: -2, 5: 5}


@lru_cache(maxsize=None)
def cheb(k: int) -> IntPoly:
    """Monic Chebyshev-style polynomial of degree k.

    Defined by the recurrence p_{k+2} = x*p_{k+1} - p_k seeded with p_1 = x,
    p_2 = x^2 - 2.  For k = 0 the constant 1 is returned (empty product
    convention: the recurrence is never extended below k = 1).

    >>> cheb(3)
    IntPoly('x^3 - 3x')
    """
    if k < 0:
        raise ValueError("index must be nonnegative")
    if k == 0:
        return IntPoly([1])
    if k == 1:
        return IntPoly([0, 1])
    if k == 2:
        return IntPoly([-2, 0, 1])
    a, b = cheb(k - 2), cheb(k - 1)
    return IntPoly([0, 1]) * b - a


def extract_trace(p: IntPoly) -> IntPoly:
    """Invert the trace lift: find T with p(x) = x^m * T(x + 1/x).

    The input must be palindromic of even degree 2m; T is recovered by
    descending elimination in the basis {x^(m-j) (x^2+1)^j}.
    """
    if p.is_zero or int(p.degree) % 2 != 0:
        raise ValueError("trace extraction needs a nonzero polynomial of even degree")
    if not is_reciprocal(p):
        raise ValueError("polynomial is not reciprocal")
    m = int(p.degree) // 2
    rem = list(p.coeffs) + [0]  # scratch with safe indexing
    out = [0] * (m + 1)
    for j in range(m, -1, -1):
        c = rem[m + j]
        out[j] = c
        if c:
            for i in range(j + 1):
                rem[m - j + 2 * i] -= c * math.comb(j, i)
    if any(rem):
        raise ValueError("polynomial is not in the trace-lift span")
    return IntPoly(out)


@lru_cache(maxsize=None)
def cyclo_trace(n: int) -> IntPoly:
    """Trace polynomial whose roots are 2cos(2j pi / n).

    Degree (n-1)/2 for odd n and (n-2)/2 for even n; n = 1, 2 give the
    constant 1.  Computed exactly by trace extraction from the geometric-sum
    polynomial (x^n - 1)/(x - 1), resp. (x^n - 1)/(x^2 - 1).

    >>> cyclo_trace(12)
    IntPoly('x^5 - 4x^3 + 3x')
    """
    if n < 1:
        raise ValueError("index must be positive")
    if n <= 2:
        return IntPoly([1])
    if n % 2 == 1:
        u = IntPoly([1] * n)  # 1 + x + ... + x^(n-1)
    else:
        u = IntPoly([c for j in range(n // 2) for c in (1, 0)][:-1])  # 1 + x^2 + ... + x^(n-2)
    return extract_trace(u)


def cheb_roots_in_unit_interval(k: int) -> int:
    """Number of roots of cheb(k) in the open interval (0, 1), in closed form.

    The count is (k - e)/6 with e in {0, 1, 2, 3, -2, 5} and k = e mod 6.
    Accepts k = 0 (the constant 1 has no roots).  The table lookup asserts
    divisibility by 6, failing loudly on corruption.
    """
    if k < 0:
        raise ValueError("index must be nonnegative")
    eps = _EPSILON_BY_K_MOD_6[k % 6]
    if (k - eps) % 6 != 0:
        raise AssertionError(f"epsilon table corrupt at k={k}")
    return (k - eps) // 6


def cyclo_trace_roots_in_unit_interval(n: int) -> int:
    """Exact count of roots of cyclo_trace(n) in the open interval (0, 1).

    Computed by Sturm root counting, not trigonometry.
    """
    if n < 3:
        raise ValueError("index must be at least 3")
    from .roots import sturm_count_open

    return sturm_count_open(cyclo_trace(n), 0, 1)
