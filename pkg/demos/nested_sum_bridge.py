"""
Unit-weight multi-series and nested harmonic sums
=================================================

With all weights 1 and no shift, the rank-r series M_r collapses to r!
times the nested all-ones sum with a shifted last exponent.  At rank 2
and x = 1 both routes land on 2 zeta(3): one by quadrature, one by
direct summation with Richardson-style tail acceleration.  Near x = 0
the nested sum minus x^{-2}/Gamma(1+x) shrinks at first order.
"""

from mpmath import mp, mpf

from mtzeta import PrecisionContext, WeightConfig, m_integral, zeta_ez_ones
from mtzeta import zeta_value

ctx = PrecisionContext()

w = WeightConfig(omega=(1, 1), a=0)

with ctx.workprec():
    target = 2 * zeta_value(3, ctx)
    quad = m_integral(mpf(1), w, ctx)
    nested = 2 * zeta_ez_ones(2, mpf(1), ctx)
    print("2 zeta(3)          =", mp.nstr(target, 20))
    print("quadrature route   =", mp.nstr(quad, 20), " gap", mp.nstr(abs(quad - target), 3))
    print("nested-sum route   =", mp.nstr(nested, 20), " gap", mp.nstr(abs(nested - target), 3))

    print()
    print("defect of the nested sum against its leading term:")
    xs = [mpf(s) for s in ("0.1", "0.05", "0.025")]
    defects = [abs(zeta_ez_ones(2, x, ctx) - x**-2 / mp.gamma(1 + x)) for x in xs]
    for x, d in zip(xs, defects):
        print("  x=%-6s defect %s" % (mp.nstr(x, 4), mp.nstr(d, 6)))
    for d0, d1, x0, x1 in zip(defects, defects[1:], xs, xs[1:]):
        order = mp.log(d0 / d1) / mp.log(x0 / x1)
        print("  halving step order:", mp.nstr(order, 5))
