"""
Weighted multi-series and their integral analogues near x = 0
=============================================================

Evaluates M_r and I_r by double-exponential quadrature, then peels off
the closed-form main term built from elementary symmetric polynomials
in the log-weights.  The leftover shrinks linearly in x, which is the
whole point of the expansion.
"""

from mpmath import mp, mpf

from mtzeta import PrecisionContext, WeightConfig, i_integral, m_integral
from mtzeta import main_term_I, main_term_M

ctx = PrecisionContext()

w = WeightConfig(omega=(1, 2), a=0.3)

with ctx.workprec():
    print("rank-2 weights", tuple(mp.nstr(o, 6) for o in w.omega), "shift", mp.nstr(w.a, 6))
    print()
    print("x         I_2(x)            I_2 - main term   M_2(x)            M_2 - main term")
    for xs in ("0.2", "0.1", "0.05", "0.025"):
        x = mpf(xs)
        iv = i_integral(x, w, ctx)
        mv = m_integral(x, w, ctx)
        di = iv - main_term_I(x, w, ctx)
        dm = mv - main_term_M(x, w, ctx)
        print(
            "%-8s  %-16s  %-16s  %-16s  %-16s"
            % (xs, mp.nstr(iv, 10), mp.nstr(di, 4), mp.nstr(mv, 10), mp.nstr(dm, 4))
        )

    # halving x halves the defect once x is small: first-order remainder
    x0, x1 = mpf("0.05"), mpf("0.025")
    d0 = abs(i_integral(x0, w, ctx) - main_term_I(x0, w, ctx))
    d1 = abs(i_integral(x1, w, ctx) - main_term_I(x1, w, ctx))
    print()
    print("defect ratio under halving:", mp.nstr(d0 / d1, 6), "(2 means order 1)")
