"""Named verification suites over fixed parameter grids.

Every report's two sides travel disjoint evaluation routes, declared in
the report's method field: nested polylog series against elementary
closed forms, quadrature against truncated expansions, builtin
classical polylogs against depth-k series.  Grids are fixed defaults so
repeated runs emit identical reports, and multi-worker dispatch sorts
the collected reports by parameters so output order never depends on
scheduling.
"""

import multiprocessing
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import permutations

from mpmath import mp, mpf

from .asymptotics import main_term_I, power_series_I
from .context import PrecisionContext, to_mpf
from .errors import DomainError
from .kernel import euler_gamma, zeta_value
from .polylog import PolylogArgs, mpl, mpl_one_var
from .reports import IdentityReport, exact_decimal
from .series import WeightConfig, i_integral, m_integral, zeta_ez_ones

SERIES_TOL = "1e-30"
QUAD_TOL = "1e-9"
ORDER_TOL = "0.2"
CONSTANT_TOL = "1e-6"

R2M2_GRID = (
    ("1", "1", "0"),
    ("2", "3", "1"),
    ("0.5", "1.5", "0.25"),
    ("1", "2", "0"),
    ("3", "2", "2"),
)
R3M3_GRID = (
    ("1", "1", "1", "0"),
    ("1", "2", "3", "1"),
    ("0.7", "1.3", "2.1", "0.5"),
)
INVERSION_GRID = (("1", "3"),)
INVERSION_K_MAX = 5
MZF_R_VALUES = (1, 2, 3)
MZF_X_GRID = ("0.5", "1")


def _s(v):
    if isinstance(v, str):
        return v
    if isinstance(v, int):
        return str(v)
    return exact_decimal(v)


def _weights(omega, a):
    return WeightConfig(tuple(to_mpf(o) for o in omega), to_mpf(a))


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

def _call(job):
    fn, kwargs = job
    return fn(**kwargs)


def _dispatch(jobs, threads):
    if threads and int(threads) > 1:
        try:
            fork = multiprocessing.get_context("fork")
        except ValueError:
            fork = None
        if fork is not None:
            with ProcessPoolExecutor(max_workers=int(threads), mp_context=fork) as pool:
                results = list(pool.map(_call, jobs))
        else:
            results = [_call(job) for job in jobs]
    else:
        results = [_call(job) for job in jobs]
    reports = []
    for res in results:
        if isinstance(res, IdentityReport):
            reports.append(res)
        else:
            reports.extend(res)
    reports.sort(key=lambda rep: rep.sort_key())
    return reports


# ---------------------------------------------------------------------------
# two-weight closed evaluation
# ---------------------------------------------------------------------------

def r2m2_point(omega1, omega2, a, ctx, tol):
    t0 = time.perf_counter()
    o1, o2, av = to_mpf(omega1), to_mpf(omega2), to_mpf(a)
    if o1 <= 0 or o2 <= 0:
        raise DomainError("weights must be positive")
    if av < 0:
        raise DomainError("shift a must be nonnegative")
    with ctx.workprec():
        total = av + o1 + o2
        lhs = mpf(0)
        for om in (o1, o2):
            lhs -= mpl_one_var((2,), (av + om) / total, ctx)
        lhs += 2 * mpl_one_var((2,), av / total, ctx)
        for om in (o1, o2):
            lhs += mpl(PolylogArgs((1, 1), (av / (av + om), (av + om) / total)), ctx)
        rhs = mp.log(o1 / total) * mp.log(o2 / total) - zeta_value(2, ctx)
    return IdentityReport.from_sides(
        "polylog-evaluation/r2m2",
        {"omega": [_s(omega1), _s(omega2)], "a": _s(a)},
        lhs,
        rhs,
        tol,
        {
            "lhs": "nested polylog series, depth one and two",
            "rhs": "elementary logarithms and zeta(2)",
        },
        t0,
    )


def suite_r2m2(grid=None, ctx=None, tol=None, threads=1):
    ctx = ctx or PrecisionContext()
    tol = to_mpf(tol if tol is not None else SERIES_TOL)
    grid = R2M2_GRID if grid is None else tuple(grid)
    jobs = [
        (r2m2_point, dict(omega1=o1, omega2=o2, a=a, ctx=ctx, tol=tol))
        for o1, o2, a in grid
    ]
    return _dispatch(jobs, threads)


# ---------------------------------------------------------------------------
# three-weight closed evaluation
# ---------------------------------------------------------------------------

def r3m3_point(omega1, omega2, omega3, a, ctx, tol):
    t0 = time.perf_counter()
    oms = (to_mpf(omega1), to_mpf(omega2), to_mpf(omega3))
    av = to_mpf(a)
    if any(o <= 0 for o in oms):
        raise DomainError("weights must be positive")
    if av < 0:
        raise DomainError("shift a must be nonnegative")
    with ctx.workprec():
        total = av + sum(oms)
        lhs = mpf(0)
        for om in oms:
            lhs += 2 * mpl_one_var((3,), (total - om) / total, ctx)
            lhs -= 4 * mpl_one_var((3,), (av + om) / total, ctx)
        for p1, p2, _ in permutations(oms):
            u = av + p1
            v = av + p1 + p2
            for index in ((1, 2), (2, 1)):
                lhs -= mpl(PolylogArgs(index, (u / v, v / total)), ctx)
            lhs += mpl(
                PolylogArgs((1, 1, 1), (av / u, u / v, v / total)), ctx
            )
        lhs += 6 * mpl_one_var((3,), av / total, ctx)
        for om in oms:
            lhs += 2 * mpl(
                PolylogArgs((1, 2), (av / (av + om), (av + om) / total)), ctx
            )
            lhs += 2 * mpl(
                PolylogArgs((2, 1), (av / (total - om), (total - om) / total)), ctx
            )
        rhs = -mp.log(oms[0] / total) * mp.log(oms[1] / total) * mp.log(oms[2] / total)
        rhs += zeta_value(2, ctx) * mp.log(oms[0] * oms[1] * oms[2] / total ** 3)
        rhs += 2 * zeta_value(3, ctx)
    return IdentityReport.from_sides(
        "polylog-evaluation/r3m3",
        {"omega": [_s(omega1), _s(omega2), _s(omega3)], "a": _s(a)},
        lhs,
        rhs,
        tol,
        {
            "lhs": "nested polylog series, depth up to three",
            "rhs": "elementary logarithms, zeta(2), zeta(3)",
        },
        t0,
    )


def suite_r3m3(grid=None, ctx=None, tol=None, threads=1):
    ctx = ctx or PrecisionContext()
    tol = to_mpf(tol if tol is not None else SERIES_TOL)
    grid = R3M3_GRID if grid is None else tuple(grid)
    jobs = [
        (r3m3_point, dict(omega1=o1, omega2=o2, omega3=o3, a=a, ctx=ctx, tol=tol))
        for o1, o2, o3, a in grid
    ]
    return _dispatch(jobs, threads)


# ---------------------------------------------------------------------------
# depth-k inversion pair
# ---------------------------------------------------------------------------

def inversion_point(omega, a, k, ctx, tol):
    t0 = time.perf_counter()
    o, av = to_mpf(omega), to_mpf(a)
    if not 0 < o < av:
        raise DomainError("inversion identities require 0 < omega < a")
    k = int(k)
    if k < 1:
        raise DomainError("depth k must be at least 1")
    with ctx.workprec():
        y = av / (av + o)
        L = mp.log(y)
        neg = -o / av
        depth_series = [
            mpl_one_var((1,) * (j - 1) + (2,), neg, ctx) + mpf(-1) ** (j + 1) * zeta_value(j + 1, ctx)
            for j in range(1, k + 1)
        ]
        lhs_f = depth_series[k - 1]
        rhs_f = -L ** (k + 1) / mp.factorial(k + 1)
        for j in range(0, k + 1):
            rhs_f += (
                mpf(-1) ** (j + 1)
                / mp.factorial(k - j)
                * L ** (k - j)
                * mp.polylog(j + 1, y)
            )
        lhs_b = mp.polylog(k + 1, y)
        rhs_b = -L ** (k + 1) / mp.factorial(k + 1)
        rhs_b += mp.log(av / o) * L ** k / mp.factorial(k)
        for j in range(1, k + 1):
            rhs_b += (
                mpf(-1) ** (j + 1)
                / mp.factorial(k - j)
                * L ** (k - j)
                * depth_series[j - 1]
            )
    params = {"omega": _s(omega), "a": _s(a), "k": str(k)}
    forward = IdentityReport.from_sides(
        "polylog-inversion/forward/k%02d" % k,
        params,
        lhs_f,
        rhs_f,
        tol,
        {
            "lhs": "depth-k polylog series at the negative ratio, plus zeta",
            "rhs": "builtin classical polylogs with log prefactors",
        },
        t0,
    )
    t1 = time.perf_counter()
    backward = IdentityReport.from_sides(
        "polylog-inversion/backward/k%02d" % k,
        params,
        lhs_b,
        rhs_b,
        tol,
        {
            "lhs": "builtin classical polylog",
            "rhs": "depth-j polylog series with log prefactors and zeta",
        },
        t1,
    )
    return [forward, backward]


def suite_inversion(k_max=None, grid=None, ctx=None, tol=None, threads=1):
    ctx = ctx or PrecisionContext()
    tol = to_mpf(tol if tol is not None else SERIES_TOL)
    k_max = INVERSION_K_MAX if k_max is None else int(k_max)
    if k_max < 1:
        raise DomainError("k_max must be at least 1")
    grid = INVERSION_GRID if grid is None else tuple(grid)
    jobs = [
        (inversion_point, dict(omega=o, a=a, k=k, ctx=ctx, tol=tol))
        for o, a in grid
        for k in range(1, k_max + 1)
    ]
    return _dispatch(jobs, threads)


# ---------------------------------------------------------------------------
# remainder order ladders
# ---------------------------------------------------------------------------

def _ladder_values(ladder):
    xs = [to_mpf(s) for s in ladder]
    if len(xs) < 3:
        raise DomainError("order ladder needs at least 3 points")
    for x0, x1 in zip(xs, xs[1:]):
        if not x1 < x0:
            raise DomainError("order ladder must be strictly decreasing")
    if xs[-1] <= 0:
        raise DomainError("ladder points must be positive")
    return xs


def _order_sides(defects, xs, claimed):
    orders = []
    for (d0, x0), (d1, x1) in zip(zip(defects, xs), zip(defects[1:], xs[1:])):
        if d0 == 0 or d1 == 0:
            # defect at the rounding floor resolves no order; such a
            # step cannot contradict the claim
            orders.append(claimed)
        else:
            orders.append(mp.log(d0 / d1) / mp.log(x0 / x1))
    empirical = min(orders)
    return min(empirical, claimed), claimed


def _lagrange_at_zero(xs, ys):
    total = mpf(0)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        weight = mpf(1)
        for j, xj in enumerate(xs):
            if j != i:
                weight *= xj / (xj - xi)
        total += yi * weight
    return total


def order_point(method, omega, a, ladder, truncation_order, ctx, tol):
    t0 = time.perf_counter()
    xs = _ladder_values(ladder)
    w = _weights(omega, a)
    params = {
        "omega": [_s(o) for o in omega],
        "a": _s(a),
        "x_ladder": [_s(x) for x in ladder],
    }
    if method == "integral-main-term":
        claimed = mpf(1)
        with ctx.workprec():
            defects = [abs(i_integral(x, w, ctx) - main_term_I(x, w, ctx)) for x in xs]
            lhs, rhs = _order_sides(defects, xs, claimed)
        params["claimed_order"] = "1"
        return IdentityReport.from_sides(
            "remainder-order/integral-main-term/r%d" % w.r,
            params,
            lhs,
            rhs,
            tol,
            {
                "lhs": "empirical decay order of quadrature-vs-main-term defects, capped at the claim",
                "rhs": "claimed remainder order",
            },
            t0,
        )
    if method == "truncated-series":
        M = int(truncation_order)
        claimed = mpf(M + 1 - w.r)
        with ctx.workprec():
            defects = [
                abs(i_integral(x, w, ctx) - power_series_I(x, w, M, ctx)) for x in xs
            ]
            lhs, rhs = _order_sides(defects, xs, claimed)
        params["truncation_order"] = str(M)
        params["claimed_order"] = str(M + 1 - w.r)
        return IdentityReport.from_sides(
            "remainder-order/truncated-series/r%d-M%d" % (w.r, M),
            params,
            lhs,
            rhs,
            tol,
            {
                "lhs": "empirical decay order of quadrature-vs-truncation defects, capped at the claim",
                "rhs": "claimed remainder order",
            },
            t0,
        )
    if method == "harmonic-constant":
        if w.r != 1:
            raise DomainError("constant-term recovery is a rank-1 check")
        with ctx.workprec():
            values = [m_integral(x, w, ctx) - 1 / x for x in xs]
            lhs = _lagrange_at_zero(xs, values)
            rhs = euler_gamma(ctx) - mp.log(w.omega[0])
        return IdentityReport.from_sides(
            "harmonic-constant-term/r1",
            params,
            lhs,
            rhs,
            tol,
            {
                "lhs": "polynomial extrapolation of quadrature values to x=0",
                "rhs": "gamma minus log omega",
            },
            t0,
        )
    raise DomainError("unknown order method %r" % (method,))


ORDER_DEFAULTS = (
    ("integral-main-term", ("1.5",), "0.7", ("0.02", "0.01", "0.005"), None, ORDER_TOL),
    ("integral-main-term", ("1", "2"), "0.3", ("0.02", "0.01", "0.005"), None, ORDER_TOL),
    ("truncated-series", ("1", "2"), "0.3", ("0.1", "0.05", "0.025"), 4, ORDER_TOL),
    ("harmonic-constant", ("1.5",), "0.2", ("0.01", "0.005", "0.0025"), None, CONSTANT_TOL),
)


def suite_asymptotic_order(
    w=None, r=None, method=None, ladder=None, truncation_order=None,
    ctx=None, tol=None, threads=1,
):
    ctx = ctx or PrecisionContext()
    if method is None:
        jobs = [
            (
                order_point,
                dict(
                    method=meth,
                    omega=omega,
                    a=a,
                    ladder=lad,
                    truncation_order=M,
                    ctx=ctx,
                    tol=to_mpf(tol if tol is not None else deftol),
                ),
            )
            for meth, omega, a, lad, M, deftol in ORDER_DEFAULTS
        ]
        return _dispatch(jobs, threads)
    if isinstance(w, WeightConfig):
        omega = tuple(exact_decimal(o) for o in w.omega)
        a = exact_decimal(w.a)
    else:
        omega, a = w
        omega = tuple(omega)
    if r is not None and int(r) != len(omega):
        raise DomainError("rank r must match the number of weights")
    deftol = CONSTANT_TOL if method == "harmonic-constant" else ORDER_TOL
    if ladder is None:
        ladder = ("0.02", "0.01", "0.005")
    jobs = [
        (
            order_point,
            dict(
                method=method,
                omega=omega,
                a=a,
                ladder=tuple(ladder),
                truncation_order=truncation_order,
                ctx=ctx,
                tol=to_mpf(tol if tol is not None else deftol),
            ),
        )
    ]
    return _dispatch(jobs, threads)


# ---------------------------------------------------------------------------
# harmonic multi-sum against all-ones Euler-Zagier values
# ---------------------------------------------------------------------------

def mzf_point(r, x, ctx, tol):
    t0 = time.perf_counter()
    r = int(r)
    if not 1 <= r <= 3:
        raise DomainError("rank must lie in 1..3")
    xv = to_mpf(x)
    w = WeightConfig((mpf(1),) * r, mpf(0))
    lhs = m_integral(xv, w, ctx)
    with ctx.workprec():
        if r == 1:
            rhs = mp.zeta(1 + xv)
            rhs_method = "builtin zeta at 1+x"
        else:
            rhs = mp.factorial(r) * zeta_ez_ones(r, xv, ctx)
            rhs_method = "direct outer sum with tail expansion, times r!"
    return IdentityReport.from_sides(
        "multisum-euler-zagier/r%d" % r,
        {"r": str(r), "x": _s(x)},
        lhs,
        rhs,
        tol,
        {
            "lhs": "double-exponential quadrature of the log-product integral",
            "rhs": rhs_method,
        },
        t0,
    )


def suite_mzf(r_values=None, x_grid=None, ctx=None, tol=None, threads=1):
    ctx = ctx or PrecisionContext()
    r_values = MZF_R_VALUES if r_values is None else tuple(int(r) for r in r_values)
    x_grid = MZF_X_GRID if x_grid is None else tuple(x_grid)
    jobs = []
    for r in r_values:
        point_tol = to_mpf(tol if tol is not None else QUAD_TOL)
        for x in x_grid:
            jobs.append((mzf_point, dict(r=r, x=x, ctx=ctx, tol=point_tol)))
    return _dispatch(jobs, threads)


# ---------------------------------------------------------------------------
# everything
# ---------------------------------------------------------------------------

SUITE_NAMES = ("r2m2", "r3m3", "inversion", "asymptotic-order", "mzf")


def run_suite(name, ctx=None, tol=None, threads=1):
    if name == "r2m2":
        return suite_r2m2(ctx=ctx, tol=tol, threads=threads)
    if name == "r3m3":
        return suite_r3m3(ctx=ctx, tol=tol, threads=threads)
    if name == "inversion":
        return suite_inversion(ctx=ctx, tol=tol, threads=threads)
    if name == "asymptotic-order":
        return suite_asymptotic_order(ctx=ctx, tol=tol, threads=threads)
    if name == "mzf":
        return suite_mzf(ctx=ctx, tol=tol, threads=threads)
    raise DomainError("unknown suite %r" % (name,))


def verify_all(ctx=None, tol=None, threads=1):
    reports = []
    for name in SUITE_NAMES:
        reports.extend(run_suite(name, ctx=ctx, tol=tol, threads=threads))
    return reports
