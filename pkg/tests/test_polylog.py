"""Polylogarithm sums against closed forms and brute nested-loop oracles
computed at triple precision.
"""

import pytest
from mpmath import mp, mpf

from mtzeta.context import PrecisionContext
from mtzeta.errors import DomainError
from mtzeta.polylog import (
    MultiIndex,
    PolylogArgs,
    hurwitz_li0,
    hurwitz_li1,
    li1_series_in_x,
    mpl,
    mpl_one_var,
)

CTX = PrecisionContext()
BITS = CTX.precision_bits


def tol_bits(slack):
    return mpf(2) ** (-(BITS - slack))


def _brute_depth2(k1, k2, z1, z2, x=0, n_min=1, N=450):
    """Truncated double loop for sum over n_min <= n1 < n2 <= N."""
    with mp.workprec(3 * BITS):
        z1, z2, x = mpf(z1), mpf(z2), mpf(x)
        total = mpf(0)
        for n2 in range(n_min + 1, N + 1):
            inner = mpf(0)
            for n1 in range(n_min, n2):
                inner += z1 ** n1 / (n1 + x) ** k1
            total += z2 ** n2 / (n2 + x) ** k2 * inner
        return total


# ---------------------------------------------------------------------------
# plain multi-variable sums
# ---------------------------------------------------------------------------

def test_depth1_is_log():
    with CTX.workprec():
        for z in ("0.1", "0.5", "0.9"):
            v = mpl(PolylogArgs((1,), (z,)), CTX)
            assert abs(v + mp.log(1 - mpf(z))) <= tol_bits(16)


def test_depth2_brute_double_sum():
    v = mpl(PolylogArgs((1, 1), ("0.3", "0.6")), CTX)
    oracle = _brute_depth2(1, 1, "0.3", "0.6")
    assert abs(v - oracle) <= tol_bits(16)


def test_zero_first_argument_kills_sum():
    assert mpl(PolylogArgs((2, 1), (0, "0.5")), CTX) == 0
    assert mpl(PolylogArgs((1,), (0,)), CTX) == 0
    # a zero anywhere has the same effect: z_i^{n_i} with n_i >= i >= 1
    assert mpl(PolylogArgs((1, 3), ("0.4", 0)), CTX) == 0


def test_rejects_arguments_on_unit_circle():
    with pytest.raises(DomainError):
        PolylogArgs((1,), (1,))
    with pytest.raises(DomainError):
        mpl_one_var((2,), "-1", CTX)


# ---------------------------------------------------------------------------
# one-variable sums
# ---------------------------------------------------------------------------

def test_all_ones_closed_form():
    # Li_{1,...,1}(z) with l ones equals (-log(1-z))^l / l!
    with CTX.workprec():
        for l in range(1, 5):
            for z in ("0.2", "0.7"):
                v = mpl_one_var((1,) * l, z, CTX)
                expect = (-mp.log(1 - mpf(z))) ** l / mp.factorial(l)
                assert abs(v - expect) <= tol_bits(16)


def test_dilogarithm_direct_series():
    with mp.workprec(3 * BITS):
        oracle = mp.nsum(lambda n: mpf("0.5") ** n / n ** 2, [1, mp.inf])
    assert abs(mpl_one_var((2,), "0.5", CTX) - oracle) <= tol_bits(16)


def test_one_var_depth2_brute():
    v = mpl_one_var((1, 2), "0.3", CTX)
    oracle = _brute_depth2(1, 2, 1, "0.3", N=260)
    assert abs(v - oracle) <= tol_bits(16)


# ---------------------------------------------------------------------------
# Hurwitz-shifted sums
# ---------------------------------------------------------------------------

def test_shifted_depth1_split():
    # starting the sum at 0 adds exactly the n=0 term x^{-k}
    with CTX.workprec():
        x = mpf("0.25")
        for k in (1, 2, 3):
            pa = PolylogArgs((k,), ("0.5",))
            gap = hurwitz_li0(x, pa, CTX) - hurwitz_li1(x, pa, CTX)
            assert abs(gap - x ** -k) <= tol_bits(16)


def test_shifted_depth2_split():
    # n_1 = 0 branch factors off x^{-k_1} times the depth-1 shifted sum
    with CTX.workprec():
        x = mpf("0.4")
        pa = PolylogArgs((2, 1), ("0.3", "0.6"))
        tail = PolylogArgs((1,), ("0.6",))
        lhs = hurwitz_li0(x, pa, CTX)
        rhs = x ** -2 * hurwitz_li1(x, tail, CTX) + hurwitz_li1(x, pa, CTX)
        assert abs(lhs - rhs) <= tol_bits(16)


def test_shifted_brute_oracle():
    x = mpf("0.25")
    pa = PolylogArgs((1, 2), ("0.2", "0.5"))
    v = hurwitz_li1(x, pa, CTX)
    oracle = _brute_depth2(1, 2, "0.2", "0.5", x=x)
    assert abs(v - oracle) <= tol_bits(16)


def test_shifted_zero_first_argument():
    # z_1 = 0 leaves only the n_1 = 0 term (0^0 = 1 convention): the
    # value is x^{-k_1} times the remaining strictly positive chain
    with CTX.workprec():
        x = mpf("0.3")
        pa = PolylogArgs((2, 1), (0, "0.5"))
        lhs = hurwitz_li0(x, pa, CTX)
        rhs = x ** -2 * hurwitz_li1(x, PolylogArgs((1,), ("0.5",)), CTX)
        assert abs(lhs - rhs) <= tol_bits(16)
        # the n_1 >= 1 variant has no surviving term at all
        assert hurwitz_li1(x, pa, CTX) == 0


def test_shifted_small_x_approaches_plain():
    x = mpf("1e-6")
    grid = [((1,), ("0.5",)), ((2,), ("0.3",)), ((1, 2), ("0.2", "0.5")),
            ((2, 2), ("0.6", "0.3"))]
    for parts, args in grid:
        pa = PolylogArgs(parts, args)
        gap = abs(hurwitz_li1(x, pa, CTX) - mpl(pa, CTX))
        assert gap <= mpf("1e-5") * sum(parts)


def test_shifted_rejects_nonpositive_x():
    pa = PolylogArgs((1,), ("0.5",))
    with pytest.raises(DomainError):
        hurwitz_li0(0, pa, CTX)
    with pytest.raises(DomainError):
        hurwitz_li1(-1, pa, CTX)


# ---------------------------------------------------------------------------
# expansion in the shift variable
# ---------------------------------------------------------------------------

def test_expansion_order_zero():
    pa = PolylogArgs((2, 1), ("0.3", "0.4"))
    assert abs(li1_series_in_x(pa, "0.5", 0, CTX) - mpl(pa, CTX)) <= tol_bits(16)


def test_expansion_depth1_geometric():
    # depth 1, k=1: sum_l (-x)^l Li_{1+l}(z), matching the shifted sum
    with CTX.workprec():
        x, z = mpf("0.2"), mpf("0.5")
        pa = PolylogArgs((1,), (z,))
        manual = mpf(0)
        for l in range(60):
            manual += (-x) ** l * mpl_one_var((1 + l,), z, CTX)
        assert abs(li1_series_in_x(pa, x, 59, CTX) - manual) <= tol_bits(16)
        # truncation at l=59 leaves a geometric tail of size O(x^60)
        assert abs(manual - hurwitz_li1(x, pa, CTX)) <= 2 * x ** 60


def test_expansion_residual_order():
    # truncating at total order L leaves a residual O(x^{L+1}): halving
    # x must shrink it by at least 2^L
    pa = PolylogArgs((1, 2), ("0.2", "0.5"))
    L = 12
    with CTX.workprec():
        res = []
        for x in (mpf("0.1"), mpf("0.05")):
            res.append(abs(li1_series_in_x(pa, x, L, CTX) - hurwitz_li1(x, pa, CTX)))
        assert res[0] <= mpf(10) ** -13
        assert res[1] <= res[0] / 2 ** L


def test_expansion_rejects_x_outside_unit_interval():
    pa = PolylogArgs((1,), ("0.5",))
    with pytest.raises(DomainError):
        li1_series_in_x(pa, "1.5", 3, CTX)
    with pytest.raises(DomainError):
        li1_series_in_x(pa, 0, 3, CTX)


# ---------------------------------------------------------------------------
# algebraic sanity and truncation honesty
# ---------------------------------------------------------------------------

def test_stuffle_depth_one_times_one():
    # Li_a(z) Li_b(z) against the brute double sum over all (n, m)
    with CTX.workprec():
        z = mpf("0.4")
        for a in (1, 2):
            for b in (1, 2):
                product = mpl_one_var((a,), z, CTX) * mpl_one_var((b,), z, CTX)
                with mp.workprec(3 * BITS):
                    N = 320
                    brute = mpf(0)
                    for n in range(1, N + 1):
                        for m in range(1, N + 1):
                            brute += z ** (n + m) / (mpf(n) ** a * mpf(m) ** b)
                assert abs(product - brute) <= tol_bits(16)
                # and the region split reassembles it from library values
                split = (
                    mpl(PolylogArgs((a, b), (z, z)), CTX)
                    + mpl(PolylogArgs((b, a), (z, z)), CTX)
                    + mpl_one_var((a + b,), z * z, CTX)
                )
                assert abs(product - split) <= tol_bits(16)


def test_truncation_threshold_is_honest():
    # the adaptive cutoff tracks the precision field: a low-precision run
    # agrees with a high-precision one within the coarse threshold
    lo = PrecisionContext(precision_bits=128, target_tol=mpf("1e-20"))
    pa = PolylogArgs((1, 2), ("0.2", "0.85"))
    v_lo = mpl(pa, lo)
    v_hi = mpl(pa, CTX)
    assert abs(v_lo - v_hi) <= mpf(2) ** -100
    assert abs(v_lo - v_hi) > 0  # genuinely different truncations


def test_multi_index_validation():
    with pytest.raises(DomainError):
        MultiIndex((1, 0))
    with pytest.raises(DomainError):
        PolylogArgs((1, 2), ("0.5",))
    idx = MultiIndex((3, 1, 2))
    assert idx.weight == 6 and idx.depth == 3
