"""
Reconstructing the integral analogue from the auxiliary series
==============================================================

For |omega| < a, I_r is a finite combination of derivatives of a
Gamma-quotient times the auxiliary series S evaluated at negated
weight ratios.  Derivatives are carried by truncated Taylor jets, so
no numerical differencing enters.  The reconstruction is compared with
plain quadrature, which shares no machinery with the jet route.
"""

from mpmath import mp, mpf

from mtzeta import PrecisionContext, WeightConfig, expression_by_S, i_integral

ctx = PrecisionContext()

configs = (
    WeightConfig(omega=(0.5,), a=2),
    WeightConfig(omega=(0.4, 0.5), a=2),
)

with ctx.workprec():
    for w in configs:
        label = "(" + ", ".join(mp.nstr(o, 4) for o in w.omega) + "; a=%s)" % mp.nstr(w.a, 4)
        for xs in ("0.35", "0.7"):
            x = mpf(xs)
            jet = expression_by_S(x, w, ctx)
            quad = i_integral(x, w, ctx)
            print(
                "rank %d %s x=%-5s jet route %-20s gap %s"
                % (w.r, label, xs, mp.nstr(jet, 14), mp.nstr(abs(jet - quad), 3))
            )
