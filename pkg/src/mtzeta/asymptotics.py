"""Expansion-side evaluators for the integral analogue and the multi-sum:
main terms around x = 0, the polylogarithm coefficients c_{r,m} of the
normalized power series, their Bell-polynomial closed forms c'_{r,m},
the tricoloring reconstruction of I_r through the auxiliary series, and
the complete rank-1 expansion.

Everything here is series/special-function assembly; none of it touches
quadrature, so cross-checks against the direct evaluators are genuinely
independent.
"""

import math
from dataclasses import dataclass
from itertools import product

from mpmath import mp, mpf

from .combinatorics import (
    compositions,
    disjoint_subset_families,
    lambda_k,
    weak_compositions,
)
from .context import to_mpf
from .errors import BudgetError, DomainError
from .jets import Jet
from .kernel import bell_complete, euler_gamma, loggamma_jet, zeta_value
from .polylog import PolylogArgs, mpl, mpl_one_var
from .series import s_series

__all__ = [
    "ExpansionResult",
    "main_term_I",
    "main_term_M",
    "c_coeff",
    "c_prime_coeff",
    "i_expansion",
    "power_series_I",
    "expression_by_S",
    "i1_expansion",
]

# family enumeration is 3^r or r!/(r-t)!-sized; beyond these the sums are
# not tractable termwise and the evaluators refuse rather than stall
MAX_RANK = 8
MAX_ORDER = 40


@dataclass(frozen=True)
class ExpansionResult:
    """Truncated expansion sum_m coeffs[m] x^powers[m]."""

    powers: tuple
    coeffs: tuple
    truncation_order: int

    def __post_init__(self):
        powers = tuple(int(p) for p in self.powers)
        if len(powers) != len(self.coeffs):
            raise DomainError("powers and coeffs must align")
        if any(q <= p for p, q in zip(powers, powers[1:])):
            raise DomainError("powers must be strictly increasing")
        object.__setattr__(self, "powers", powers)
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    def evaluate(self, x):
        total = mpf(0)
        for p, c in zip(self.powers, self.coeffs):
            total += c * x ** p
        return total


def _positive_x(x):
    x = to_mpf(x)
    if x <= 0:
        raise DomainError("main terms are expansions around x = 0 from the right")
    return x


def _lambda_poly(w, ctx):
    """Coefficients of the alternating symmetric-function sum,
    p_k = (-1)^k Lambda_k(omega) (r-k)!."""
    r = w.r
    return [
        mpf(-1) ** k * lambda_k(w.omega, k, ctx) * mp.factorial(r - k)
        for k in range(r + 1)
    ]


def main_term_I(x, w, ctx):
    """The damped main term of I_r around x = 0:
    (e^{-gamma x}/Gamma(x+1)) sum_k (-1)^k Lambda_k(omega) (r-k)!/x^{r-k}."""
    x = _positive_x(x)
    with ctx.workprec():
        p = _lambda_poly(w, ctx)
        s = mpf(0)
        for k, pk in enumerate(p):
            s += pk * x ** (k - w.r)
        g = euler_gamma(ctx)
        return +(mp.exp(-g * x) / mp.gamma(x + 1) * s)


def main_term_M(x, w, ctx):
    """Main term of M_r: same symmetric-function sum with the plain
    1/Gamma(x+1) prefactor (no exponential damping)."""
    x = _positive_x(x)
    with ctx.workprec():
        p = _lambda_poly(w, ctx)
        s = mpf(0)
        for k, pk in enumerate(p):
            s += pk * x ** (k - w.r)
        return +(s / mp.gamma(x + 1))


def c_coeff(r, m, w, ctx):
    """Coefficient of x^{m-r} in (a+|omega|)^x I_r: the signed sum over
    chain lengths t, depths s, compositions k of t, weak compositions l
    of m-t, and ordered disjoint families (K_1..K_s), of
    (r-t)! prod k_i! prod C(k_i+l_i-1, l_i) times the depth-s
    polylogarithm at the telescoping shift ratios."""
    r, m = int(r), int(m)
    if r != w.r:
        raise DomainError("rank must match the weight configuration")
    if m < 1:
        raise DomainError("coefficients start at m = 1")
    if r > MAX_RANK:
        raise BudgetError("family enumeration is capped at rank %d" % MAX_RANK)
    if m > MAX_ORDER:
        raise BudgetError("coefficient order is capped at %d" % MAX_ORDER)
    with ctx.workprec():
        a = w.a
        total = mpf(0)
        for t in range(1, min(m, r) + 1):
            sign = mpf(-1) ** (m - t)
            rt_fact = mp.factorial(r - t)
            for s in range(1, t + 1):
                for comp in compositions(t, s):
                    kfact = 1
                    for ki in comp.parts:
                        kfact *= math.factorial(ki)
                    fams = list(disjoint_subset_families(r, comp))
                    for wc in weak_compositions(m - t, s):
                        binom = 1
                        for ki, li in zip(comp.parts, wc.parts):
                            binom *= math.comb(ki + li - 1, li)
                        index = tuple(
                            ki + li for ki, li in zip(comp.parts, wc.parts)
                        )
                        fam_sum = mpf(0)
                        for fam in fams:
                            b = a + w.subset_total(fam.remainder)
                            zs = []
                            for block in fam.blocks:
                                b2 = b + w.subset_total(block)
                                zs.append(b / b2)
                                b = b2
                            fam_sum += mpl(PolylogArgs(index, zs), ctx)
                        total += sign * rt_fact * kfact * binom * fam_sum
        return +total


def c_prime_coeff(r, m, w, ctx):
    """Closed form for c_{r,m} when 1 <= m <= r: the Bell-polynomial
    combination sum_k (-1)^{m-k} ((r-m+k)!/k!)
    Lambda_{m-k}(omega/(a+|omega|)) B_k(0, -1! z(2), 2! z(3), ...)."""
    r, m = int(r), int(m)
    if r != w.r:
        raise DomainError("rank must match the weight configuration")
    if not 1 <= m <= r:
        raise DomainError("the closed form holds only for 1 <= m <= r")
    with ctx.workprec():
        denom = w.a + w.total
        scaled = tuple(o / denom for o in w.omega)
        bell_args = [mpf(0)]
        for j in range(2, m + 1):
            bell_args.append(
                mpf(-1) ** (j - 1) * mp.factorial(j - 1) * zeta_value(j, ctx)
            )
        total = mpf(0)
        for k in range(m + 1):
            lam = lambda_k(scaled, m - k, ctx)
            bk = bell_complete(k, bell_args[:k])
            total += (
                mpf(-1) ** (m - k)
                * mp.factorial(r - m + k)
                / mp.factorial(k)
                * lam
                * bk
            )
        return +total


def i_expansion(w, M, ctx):
    """ExpansionResult for (a+|omega|)^x I_r through order M: the x^{-r}
    coefficient is r!, then c_{r,m} at x^{m-r} for m = 1..M."""
    M = int(M)
    if M < 0:
        raise DomainError("truncation order must be nonnegative")
    r = w.r
    with ctx.workprec():
        coeffs = [mp.factorial(r)]
        for m in range(1, M + 1):
            coeffs.append(c_coeff(r, m, w, ctx))
    return ExpansionResult(tuple(range(-r, M - r + 1)), tuple(coeffs), M)


def power_series_I(x, w, M, ctx):
    """Estimate of I_r from the truncated normalized power series,
    divided back by (a+|omega|)^x.  Valid on 0 < x < 1."""
    x = to_mpf(x)
    if not 0 < x < 1:
        raise DomainError("the power series representation requires 0 < x < 1")
    exp = i_expansion(w, M, ctx)
    with ctx.workprec():
        return +(exp.evaluate(x) / (w.a + w.total) ** x)


def expression_by_S(x, w, ctx):
    """I_r reconstructed from the auxiliary series: (-1)^r e^{-gamma x}
    / Gamma(x) times the sum over ordered tricolorings A|B|C of the
    index set of (prod_{i in A} log omega_i) (d/dx)^{|B|}
    [Gamma(x) a^{-x} e^{gamma x} S_{|C|}(x, -omega_C/a)].

    Derivatives are carried by jets of degree |B|+2 (two guard orders).
    Requires |omega| < a strictly."""
    x = _positive_x(x)
    r = w.r
    if r > MAX_RANK:
        raise BudgetError("tricoloring enumeration is capped at rank %d" % MAX_RANK)
    with ctx.workprec():
        if not w.total < w.a:
            raise DomainError("the series route requires |omega| < a")
        g = euler_gamma(ctx)
        la = mp.log(w.a)
        logw = [mp.log(o) for o in w.omega]
        gamma_jets = {}
        s_jets = {}
        total = mpf(0)
        for colors in product((0, 1, 2), repeat=r):
            A = [i for i in range(r) if colors[i] == 0]
            B = [i for i in range(r) if colors[i] == 1]
            C = tuple(i for i in range(r) if colors[i] == 2)
            deg = len(B) + 2
            if deg not in gamma_jets:
                xi = Jet.variable(x, deg)
                gamma_jets[deg] = (
                    loggamma_jet(x, deg, ctx) + xi * (g - la)
                ).exp()
            F = gamma_jets[deg]
            if C:
                key = (C, deg)
                if key not in s_jets:
                    s_jets[key] = s_series(
                        Jet.variable(x, deg),
                        tuple(-w.omega[i] / w.a for i in C),
                        ctx,
                    )
                F = F * s_jets[key]
            term = F.derivative_value(len(B))
            for i in A:
                term *= logw[i]
            total += term
        return +(mpf(-1) ** r * mp.exp(-g * x) / mp.gamma(x) * total)


def i1_expansion(x, omega, a, K, ctx):
    """Complete rank-1 expansion of a^x I_1 through order K:
    1/x + log(a/omega)
    - sum_{k=1}^{K} {Li_{1,..,1,2}(-omega/a) + (-1)^{k+1} zeta(k+1)} x^k,
    with k-1 leading ones in the index.  Requires 0 < omega < a and
    0 < x < 1."""
    omega = to_mpf(omega)
    a = to_mpf(a)
    x = to_mpf(x)
    K = int(K)
    if not 0 < omega < a:
        raise DomainError("the expansion requires 0 < omega < a")
    if not 0 < x < 1:
        raise DomainError("the expansion requires 0 < x < 1")
    if K < 0:
        raise DomainError("truncation order must be nonnegative")
    with ctx.workprec():
        z = -omega / a
        total = 1 / x + mp.log(a / omega)
        for k in range(1, K + 1):
            li = mpl_one_var((1,) * (k - 1) + (2,), z, ctx)
            total -= (li + mpf(-1) ** (k + 1) * zeta_value(k + 1, ctx)) * x ** k
        return +total
