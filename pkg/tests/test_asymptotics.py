"""Expansion evaluators against quadrature, closed displays, and each
other: coefficient collapse at rank 1, the displayed rank-2 closed form,
equality of the combinatorial and Bell-polynomial coefficient routes,
the rank recurrence, remainder-order ladders, and the series-route
reconstruction of the integral analogue.
"""

import random

import pytest
from mpmath import mp, mpf

from mtzeta.asymptotics import (
    ExpansionResult,
    c_coeff,
    c_prime_coeff,
    expression_by_S,
    i1_expansion,
    i_expansion,
    main_term_I,
    main_term_M,
    power_series_I,
)
from mtzeta.context import PrecisionContext, to_mpf
from mtzeta.errors import BudgetError, DomainError
from mtzeta.kernel import euler_gamma, inv_gamma_taylor, zeta_value
from mtzeta.combinatorics import lambda_k
from mtzeta.polylog import PolylogArgs, mpl, mpl_one_var
from mtzeta.series import WeightConfig, i_integral, t_coeff

CTX = PrecisionContext()
BITS = CTX.precision_bits


def _wc(omega, a=0):
    return WeightConfig(tuple(to_mpf(o) for o in omega), to_mpf(a))


def _random_config(rng, r):
    omega = tuple(to_mpf("%.3f" % rng.uniform(0.5, 2.5)) for _ in range(r))
    a = to_mpf("%.3f" % rng.uniform(0.0, 1.0))
    return WeightConfig(omega, a)


# ---------------------------------------------------------------------------
# expansion container
# ---------------------------------------------------------------------------

def test_expansion_result_invariants():
    e = ExpansionResult((-2, -1, 0), (mpf(2), mpf(1), mpf(3)), 2)
    with CTX.workprec():
        x = mpf("0.5")
        assert e.evaluate(x) == 2 * x ** -2 + x ** -1 + 3
    with pytest.raises(DomainError):
        ExpansionResult((-1, -1, 0), (1, 2, 3), 2)
    with pytest.raises(DomainError):
        ExpansionResult((-1, 0), (1, 2, 3), 2)


def test_i_expansion_structure():
    w = _wc((1, 2), "0.3")
    e = i_expansion(w, 3, CTX)
    assert e.powers == (-2, -1, 0, 1)
    assert e.truncation_order == 3
    with CTX.workprec():
        assert e.coeffs[0] == 2


# ---------------------------------------------------------------------------
# main terms
# ---------------------------------------------------------------------------

def test_main_term_unit_weights_closed_form():
    x = to_mpf("0.2")
    g = euler_gamma(CTX)
    with CTX.workprec():
        for r in (1, 2, 3):
            w = _wc((1,) * r)
            ref = mp.factorial(r) / (mp.gamma(x + 1) * x ** r)
            assert abs(main_term_M(x, w, CTX) - ref) <= mpf(2) ** -(BITS - 24)
            assert (
                abs(main_term_I(x, w, CTX) - mp.exp(-g * x) * ref)
                <= mpf(2) ** -(BITS - 24)
            )


def test_main_term_M_r1_constant_term():
    # 1/Gamma(x+1) (1/x - log w) tends to 1/x + gamma - log w
    w = _wc(("1.5",))
    g = euler_gamma(CTX)
    x = mpf(10) ** -6
    v = main_term_M(x, w, CTX)
    with CTX.workprec():
        assert abs(v - 1 / x - (g - mp.log(mpf("1.5")))) <= mpf(10) ** -5


def test_main_term_I_remainder_halves():
    # the O(x) defect against quadrature should scale linearly
    w = _wc(("1.5",), "0.7")
    defects = []
    for xs in ("0.02", "0.01"):
        x = to_mpf(xs)
        with CTX.workprec():
            defects.append(abs(i_integral(x, w, CTX) - main_term_I(x, w, CTX)))
    with CTX.workprec():
        ratio = defects[0] / defects[1]
        assert mpf("1.6") < ratio < mpf("2.6")


def test_main_term_rejects_nonpositive_x():
    w = _wc((1,))
    for f in (main_term_I, main_term_M):
        with pytest.raises(DomainError):
            f(0, w, CTX)


# ---------------------------------------------------------------------------
# power-series coefficients
# ---------------------------------------------------------------------------

def test_c_rank1_collapses_to_polylog():
    w = _wc(("1.5",), 2)
    with CTX.workprec():
        z = mpf(2) / mpf("3.5")
        for m in (1, 2, 3, 4):
            v = c_coeff(1, m, w, CTX)
            ref = mpf(-1) ** (m - 1) * mpl_one_var((m,), z, CTX)
            assert abs(v - ref) <= mpf(2) ** -(BITS - 24)


def test_c_rank2_first_coefficient():
    w = _wc((1, 2), "0.3")
    v = c_coeff(2, 1, w, CTX)
    with CTX.workprec():
        total = w.a + w.total
        ref = -mp.log(1 - (w.a + 1) / total) - mp.log(1 - (w.a + 2) / total)
        assert abs(v - ref) <= mpf(2) ** -(BITS - 24)


def test_c_rank2_displayed_closed_form():
    # independent assembly of the displayed c_{2,m}
    w = _wc((1, 2), "0.3")
    with CTX.workprec():
        total = w.a + w.total
        for m in (2, 3):
            ref = mpf(0)
            for om in w.omega:
                ref += mpf(-1) ** (m - 1) * mpl_one_var((m,), (w.a + om) / total, CTX)
            ref += (
                mpf(-1) ** m * 2 * (m - 1) * mpl_one_var((m,), w.a / total, CTX)
            )
            for l in range(1, m):
                for om in w.omega:
                    ref += mpf(-1) ** m * mpl(
                        PolylogArgs(
                            (l, m - l),
                            (w.a / (w.a + om), (w.a + om) / total),
                        ),
                        CTX,
                    )
            v = c_coeff(2, m, w, CTX)
            assert abs(v - ref) <= mpf(2) ** -(BITS - 24)


def test_c_equals_c_prime_all_small_ranks():
    rng = random.Random(20240817)
    for r in (1, 2, 3):
        for _ in range(3):
            w = _random_config(rng, r)
            for m in range(1, r + 1):
                v = c_coeff(r, m, w, CTX)
                vp = c_prime_coeff(r, m, w, CTX)
                with CTX.workprec():
                    assert abs(v - vp) <= mpf(10) ** -10


def test_c_recurrence_both_routes():
    # c_{r,m} = sum_i c_{r-1,m}(omega less i, a+omega_i) for r >= m+1
    rng = random.Random(991)
    for r, m in ((2, 1), (3, 1), (3, 2)):
        for _ in range(3):
            w = _random_config(rng, r)
            lhs = c_coeff(r, m, w, CTX)
            lhs_p = c_prime_coeff(r, m, w, CTX)
            with CTX.workprec():
                rhs = mpf(0)
                rhs_p = mpf(0)
                for i in range(1, r + 1):
                    rest, a2 = w.drop(i)
                    w2 = WeightConfig(rest, a2)
                    rhs += c_coeff(r - 1, m, w2, CTX)
                    rhs_p += c_prime_coeff(r - 1, m, w2, CTX)
                assert abs(lhs - rhs) <= mpf(10) ** -10
                assert abs(lhs_p - rhs_p) <= mpf(10) ** -10


def test_c_permutation_symmetry():
    from itertools import permutations

    base = ("0.7", "1.3", "2.1")
    a = "0.4"
    vals = []
    vals_p = []
    for perm in permutations(base):
        w = _wc(perm, a)
        vals.append(c_coeff(3, 2, w, CTX))
        vals_p.append(c_prime_coeff(3, 2, w, CTX))
    with CTX.workprec():
        for v in vals[1:]:
            assert abs(v - vals[0]) <= mpf(2) ** -(BITS - 32)
        for v in vals_p[1:]:
            assert abs(v - vals_p[0]) <= mpf(2) ** -(BITS - 32)


def test_c_equality_survives_zero_shift():
    # a=0 sends every polylog whose first ratio is a/(a+.) to zero;
    # the identity must still close
    w = _wc((1, 2))
    v = c_coeff(2, 2, w, CTX)
    vp = c_prime_coeff(2, 2, w, CTX)
    with CTX.workprec():
        assert abs(v - vp) <= mpf(10) ** -10


def test_main_term_reexpansion_reproduces_coeffs():
    # multiplying the 1/x polynomial at scaled weights by the Taylor jet
    # of the damped reciprocal gamma gives back r! and c'_{r,1..r}
    for omega, a in (((1, 2), "0.3"), (("0.7", "1.3", "2.1"), "0.5")):
        w = _wc(omega, a)
        r = w.r
        with CTX.workprec():
            denom = w.a + w.total
            scaled = tuple(o / denom for o in w.omega)
            p = [
                mpf(-1) ** k * lambda_k(scaled, k, CTX) * mp.factorial(r - k)
                for k in range(r + 1)
            ]
            gcoef = inv_gamma_taylor(r, True, CTX).coeffs
            for m in range(r + 1):
                conv = mpf(0)
                for k in range(m + 1):
                    if k <= r and m - k <= r:
                        conv += p[k] * gcoef[m - k]
                if m == 0:
                    ref = mp.factorial(r)
                else:
                    ref = c_prime_coeff(r, m, w, CTX)
                assert abs(conv - ref) <= mpf(10) ** -30


def test_c_domain_and_budget():
    w = _wc((1, 2), "0.3")
    with pytest.raises(DomainError):
        c_coeff(1, 1, w, CTX)  # rank mismatch
    with pytest.raises(DomainError):
        c_coeff(2, 0, w, CTX)
    with pytest.raises(DomainError):
        c_prime_coeff(2, 3, w, CTX)  # closed form needs m <= r
    with pytest.raises(BudgetError):
        c_coeff(2, 41, w, CTX)
    big = _wc((1,) * 9, "0.5")
    with pytest.raises(BudgetError):
        c_coeff(9, 1, big, CTX)


# ---------------------------------------------------------------------------
# truncated power series vs quadrature
# ---------------------------------------------------------------------------

def test_power_series_shiftless_is_exact():
    # a=0 makes every coefficient beyond r! vanish
    w = _wc(("1.7",))
    with CTX.workprec():
        for m in (1, 2, 3):
            assert c_coeff(1, m, w, CTX) == 0
    x = to_mpf("0.3")
    v = power_series_I(x, w, 5, CTX)
    ref = i_integral(x, w, CTX)
    with CTX.workprec():
        assert abs(v - ref) <= mpf(10) ** -40


def test_power_series_matches_quadrature_r1():
    x = to_mpf("0.3")
    w = _wc((1,), 2)
    v = power_series_I(x, w, 20, CTX)
    ref = i_integral(x, w, CTX)
    with CTX.workprec():
        assert abs(v - ref) <= mpf(10) ** -10


def test_power_series_residual_order():
    # after M terms the defect scales like x^{M+1-r}
    w = _wc((1, 2), "0.3")
    M = 4
    defects = []
    for xs in ("0.1", "0.05", "0.025"):
        x = to_mpf(xs)
        with CTX.workprec():
            defects.append(abs(power_series_I(x, w, M, CTX) - i_integral(x, w, CTX)))
    with CTX.workprec():
        for d0, d1 in zip(defects, defects[1:]):
            order = mp.log(d0 / d1, 2)
            assert order >= M + 1 - w.r - mpf("0.2")


def test_power_series_domain():
    w = _wc((1,), 2)
    for bad in (0, 1, to_mpf("1.5"), to_mpf("-0.3")):
        with pytest.raises(DomainError):
            power_series_I(bad, w, 5, CTX)
    with pytest.raises(DomainError):
        i_expansion(w, -1, CTX)


# ---------------------------------------------------------------------------
# series-route reconstruction
# ---------------------------------------------------------------------------

def test_expression_by_S_matches_quadrature():
    for omega, a in ((("0.5",), 2), (("0.4", "0.5"), 2)):
        w = _wc(omega, a)
        for xs in ("0.35", "0.7"):
            x = to_mpf(xs)
            v = expression_by_S(x, w, CTX)
            ref = i_integral(x, w, CTX)
            with CTX.workprec():
                assert abs(v - ref) <= mpf(10) ** -9


def test_expression_by_S_rank1_display():
    # a^x I_1 = 1/x + log(a/w) + (log of damped reciprocal gamma)' - S_1
    from mtzeta.series import s_series

    x = to_mpf("0.4")
    om, a = to_mpf("0.5"), to_mpf(2)
    w = WeightConfig((om,), a)
    v = expression_by_S(x, w, CTX)
    g = euler_gamma(CTX)
    with CTX.workprec():
        rhs = (
            1 / x
            + mp.log(a / om)
            + (-g - mp.psi(0, x + 1))
            - s_series(x, (-om / a,), CTX)
        )
        assert abs(a ** x * v - rhs) <= mpf(2) ** -(BITS - 32)


def test_expression_by_S_domain():
    with pytest.raises(DomainError):
        expression_by_S(to_mpf("0.5"), _wc(("0.6", "0.5"), 1), CTX)
    with pytest.raises(DomainError):
        expression_by_S(0, _wc(("0.5",), 2), CTX)
    with pytest.raises(BudgetError):
        expression_by_S(to_mpf("0.5"), _wc(("0.05",) * 9, 1), CTX)


# ---------------------------------------------------------------------------
# complete rank-1 expansion
# ---------------------------------------------------------------------------

def test_i1_expansion_leading_terms():
    x = to_mpf("0.2")
    v0 = i1_expansion(x, 1, 3, 0, CTX)
    v1 = i1_expansion(x, 1, 3, 1, CTX)
    with CTX.workprec():
        assert abs(v0 - (1 / x + mp.log(3))) <= mpf(2) ** -(BITS - 24)
        # order-1 coefficient assembled from the series coefficient and
        # the zeta value
        k1 = (v1 - v0) / x
        ref = -(t_coeff(1, 1, (to_mpf(-1) / 3,), CTX) + zeta_value(2, CTX))
        assert abs(k1 - ref) <= mpf(2) ** -(BITS - 24)


def test_i1_expansion_matches_quadrature():
    x = to_mpf("0.2")
    v = i1_expansion(x, 1, 3, 15, CTX)
    w = _wc((1,), 3)
    ref = i_integral(x, w, CTX)
    with CTX.workprec():
        assert abs(v - mpf(3) ** x * ref) <= mpf(10) ** -10


def test_i1_expansion_domain():
    for om, a in ((3, 1), (1, 1)):
        with pytest.raises(DomainError):
            i1_expansion(to_mpf("0.2"), om, a, 3, CTX)
    for bad_x in (0, 1):
        with pytest.raises(DomainError):
            i1_expansion(bad_x, 1, 3, 3, CTX)
    with pytest.raises(DomainError):
        i1_expansion(to_mpf("0.2"), 1, 3, -1, CTX)
