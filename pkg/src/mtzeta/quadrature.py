"""Double-exponential (tanh-sinh) quadrature on (0,1) and (0,inf).

The substitution u = (1 + tanh((pi/2) sinh(t))) / 2 maps the real line
onto (0,1) and makes the transformed integrand decay doubly
exponentially, so the trapezoid rule in t converges geometrically even
when the integrand has an endpoint singularity like u^{x-1}.

Nodes are expressed through q = exp(-pi sinh(t)):

    u_left  = q / (1 + q)          (node near 0)
    u_right = 1 / (1 + q)          (node near 1)
    du/dt   = pi cosh(t) q / (1 + q)^2

computed in this form so u_left keeps full relative accuracy down to
doubly-exponentially small values; it never rounds to an endpoint.

Levels halve the step h, reusing all previous evaluations (new nodes sit
at odd multiples of the new h).  Refinement stops when two successive
level sums agree to a quarter of the requested tolerance, and is capped
by ctx.quad_levels; hitting the cap raises instead of returning a bad
value.
"""

from mpmath import mp, mpf

from .errors import QuadratureError

__all__ = ["de_quad_01", "de_quad_0inf"]

# consecutive negligible node pairs before a row is cut; resets on any
# significant term so a hump past the origin cannot be skipped
_TAIL_RUN = 3


def _row_sum(f, h, j_start, j_step, cut):
    """Trapezoid contributions at t = j*h for j = j_start, j_start+j_step, ...

    Returns the sum over both symmetric nodes, without the h factor.
    """
    total = mpf(0)
    small_run = 0
    j = j_start
    while True:
        t = j * h
        ch = mp.cosh(t)
        q = mp.exp(-mp.pi * mp.sinh(t))
        base = q / (1 + q)
        w = mp.pi * ch * q / (1 + q) ** 2
        term = w * (f(base) + f(1 - base))
        if not mp.isfinite(term):
            raise QuadratureError("integrand not finite at node t=%s" % mp.nstr(t, 8))
        total += term
        if abs(term) <= cut * (1 + abs(total)):
            small_run += 1
            if small_run >= _TAIL_RUN:
                break
        else:
            small_run = 0
        j += j_step
        if j * h > 20:
            # sinh(20) ~ 2.4e8: the weight has underflowed any practical
            # precision, so surviving terms mean the integrand diverges
            raise QuadratureError("tail of transformed integrand does not decay")
    return total


def de_quad_01(f, ctx, tol=None):
    """Integrate f over (0,1) to the requested tolerance.

    f receives nodes strictly inside (0,1); a left-endpoint singularity
    integrable there is handled by the transform.  Raises
    QuadratureError if level doubling exhausts ctx.quad_levels without
    two successive sums agreeing to tol/4.
    """
    with ctx.workprec():
        if tol is None:
            tol = ctx.target_tol
        tol = mpf(tol)
        cut = mpf(2) ** (-(ctx.precision_bits + 8))

        g = lambda u: mpf(f(u))
        # level 0, h = 1: center node j=0 plus the symmetric tail
        h = mpf(1)
        row = mp.pi / 4 * g(mpf(1) / 2) + _row_sum(g, h, 1, 1, cut)
        prev = h * row
        for level in range(1, ctx.quad_levels + 1):
            h = h / 2
            row = row + _row_sum(g, h, 1, 2, cut)
            cur = h * row
            if abs(cur - prev) <= tol / 4 * max(1, abs(cur)):
                return +cur
            prev = cur
        raise QuadratureError(
            "no convergence to %s within %d levels" % (mp.nstr(tol, 5), ctx.quad_levels)
        )


def de_quad_0inf(f, ctx, tol=None):
    """Integrate f over (0,inf), split at 1 with v = 1/u on the far piece."""
    near = de_quad_01(f, ctx, tol)
    far = de_quad_01(lambda v: f(1 / v) / (v * v), ctx, tol)
    with ctx.workprec():
        return +(near + far)
