"""Direct evaluators: the harmonic multi-sum M_r, its integral analogue
I_r, the auxiliary series S_r with its coefficients T_{r,l}, and the
all-ones Euler-Zagier values.

These are the ground-truth side of every identity check.  Each evaluator
goes through a 1-D integral representation or a plain truncated sum with
a computed tail bound; nothing here shares code with the expansion
machinery it is later compared against.
"""

import math
from dataclasses import dataclass, field

from mpmath import mp, mpf

from .context import to_mpf
from .errors import DomainError
from .kernel import euler_gamma, gamma0, pochhammer, zeta_value
from .jets import Jet
from .quadrature import de_quad_01, de_quad_0inf

__all__ = [
    "WeightConfig",
    "i_integral",
    "i_brute",
    "m_integral",
    "m_direct",
    "s_series",
    "t_coeff",
    "zeta_ez_ones",
]


@dataclass(frozen=True)
class WeightConfig:
    """Weights (omega_1..omega_r) > 0 together with the shift a >= 0.

    Subset weight sums |omega_J| are cached per instance; J is given in
    1-based indices matching the ground set {1..r}.
    """

    omega: tuple
    a: mpf

    def __post_init__(self):
        omega = tuple(to_mpf(w) for w in self.omega)
        if not omega or any(w <= 0 for w in omega):
            raise DomainError("weights must be positive")
        a = to_mpf(self.a)
        if a < 0:
            raise DomainError("shift a must be nonnegative")
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "_subset_sums", {})

    @property
    def r(self):
        return len(self.omega)

    @property
    def total(self):
        return self.subset_total(range(1, self.r + 1))

    def subset_total(self, J):
        key = tuple(sorted(int(j) for j in J))
        if any(not 1 <= j <= self.r for j in key):
            raise DomainError("subset index outside ground set")
        if len(set(key)) != len(key):
            raise DomainError("subset indices must be distinct")
        cached = self._subset_sums.get(key)
        if cached is None:
            cached = mpf(0)
            for j in key:
                cached += self.omega[j - 1]
            self._subset_sums[key] = cached
        return cached

    def subset(self, J):
        return tuple(self.omega[int(j) - 1] for j in J)

    def drop(self, i):
        """Config without omega_i, its weight moved into a (1-based)."""
        rest = tuple(w for j, w in enumerate(self.omega, start=1) if j != i)
        return rest, self.a + self.omega[i - 1]


def _check_x(x):
    x = to_mpf(x)
    if x <= 0:
        raise DomainError("evaluations require x > 0; the series diverge otherwise")
    return x


# ---------------------------------------------------------------------------
# integral analogue I_r
# ---------------------------------------------------------------------------

def i_integral(x, w, ctx):
    """I_r via the 1-D representation

        (1/Gamma(x)) int_0^inf prod_i Gamma(0, omega_i u) e^{-au} u^{x-1} du,

    double-exponential quadrature split at u=1.  The u -> 0 endpoint
    carries the integrable log^r u * u^{x-1} singularity; the far tail
    dies like exp(-(a+|omega|/2) u) and is cut by the quadrature row
    threshold."""
    x = _check_x(x)
    with ctx.workprec():
        def integrand(u):
            val = mp.exp(-w.a * u) * u ** (x - 1)
            for om in w.omega:
                val *= gamma0(om * u, ctx)
            return val

        raw = de_quad_0inf(integrand, ctx)
        return +(raw / mp.gamma(x))


def i_brute(x, w, ctx):
    """Tensor-product quadrature of the defining r-dimensional integral,
    r <= 2 (oracle use).  Domain truncated at T chosen from the AM-GM
    comparison: the discarded tail is below the context tolerance.

    The r=2 case nests two adaptive quadratures, so it runs at a capped
    working precision; this is a cross-check oracle for ~1e-10 level
    agreement, not a production evaluator."""
    x = _check_x(x)
    r = w.r
    if r > 2:
        raise DomainError("brute integration is an oracle for r <= 2 only")
    with ctx.workprec():
        tol = ctx.target_tol
        # tail over any coordinate beyond T, from
        # (omega.t + a)^x >= r^x prod (omega_i t_i)^{x/r}:
        #   tail <= r * r^{-x} (prod omega)^{-x/r} (r/x)^r T^{-x/r}
        prod_om = mpf(1)
        for om in w.omega:
            prod_om *= om
        lead = r * r ** -x * prod_om ** (-x / r) * (mpf(r) / x) ** r
        T = (lead / tol) ** (r / x)
        if T < 100:
            T = mpf(100)
        # integrate in s = log t; the 1/prod(t_i) Jacobian cancels and the
        # integrand decays exponentially in each s_i, so plain adaptive
        # quadrature on the box [0, log T]^r is well conditioned
        S = mp.log(T)
        pts = [0, 5, S / 2, S]
        if r == 1:
            om = w.omega[0]
            val = mp.quad(lambda s: (om * mp.exp(s) + w.a) ** -x, pts)
        else:
            o1, o2 = w.omega
            a = w.a
            with mp.workprec(min(mp.prec, 112)):
                def inner(s1):
                    e1 = o1 * mp.exp(s1) + a
                    return mp.quad(
                        lambda s2: (e1 + o2 * mp.exp(s2)) ** -x,
                        pts,
                        maxdegree=6,
                    )

                val = mp.quad(inner, pts, maxdegree=6)
        return +val


# ---------------------------------------------------------------------------
# harmonic multi-sum M_r
# ---------------------------------------------------------------------------

def m_integral(x, w, ctx):
    """M_r via the 1-D representation

        ((-1)^r/Gamma(x)) int_0^inf prod_i log(1-e^{-omega_i t})
                                     e^{-at} t^{x-1} dt.

    Each factor is evaluated as -log(-expm1(-omega t)), which keeps full
    relative accuracy both as t -> 0 (factor ~ -log(omega t)) and for
    large t (factor ~ e^{-omega t})."""
    x = _check_x(x)
    with ctx.workprec():
        def integrand(t):
            val = mp.exp(-w.a * t) * t ** (x - 1)
            for om in w.omega:
                val *= -mp.log(-mp.expm1(-om * t))
            return val

        raw = de_quad_0inf(integrand, ctx)
        return +(raw / mp.gamma(x))


def m_direct(x, w, N, ctx):
    """Truncated defining multi-sum plus a rigorous tail bound.

    Returns (value, bound): value is the sum over all n_i <= N, bound
    dominates the discarded part via the AM-GM comparison
    (omega.n + a)^x >= r^x prod(omega_i n_i)^{x/r}.  r <= 3."""
    x = _check_x(x)
    r = w.r
    if r > 3:
        raise DomainError("direct summation is an oracle for r <= 3 only")
    N = int(N)
    if N < 1:
        raise DomainError("cutoff must be positive")
    with ctx.workprec():
        a = w.a
        om = w.omega
        total = mpf(0)
        if r == 1:
            for n1 in range(1, N + 1):
                total += 1 / (n1 * (om[0] * n1 + a) ** x)
        elif r == 2:
            for n1 in range(1, N + 1):
                base = om[0] * n1
                for n2 in range(1, N + 1):
                    total += 1 / (n1 * n2 * (base + om[1] * n2 + a) ** x)
        else:
            for n1 in range(1, N + 1):
                b1 = om[0] * n1
                for n2 in range(1, N + 1):
                    b2 = b1 + om[1] * n2
                    n12 = n1 * n2
                    for n3 in range(1, N + 1):
                        total += 1 / (n12 * n3 * (b2 + om[2] * n3 + a) ** x)
        s = x / r
        prod_om = mpf(1)
        for o in om:
            prod_om *= o
        zeta_full = mp.zeta(1 + s)
        tail_one = N ** -s / s  # int_N^inf t^{-1-s} dt
        bound = r * r ** -x * prod_om ** -s * tail_one * zeta_full ** (r - 1)
        return +total, +bound


# ---------------------------------------------------------------------------
# auxiliary series S_r and its coefficients
# ---------------------------------------------------------------------------

def _degree_profile(omega, ctx, extra_log_powers):
    """Common truncation setup: per-degree composition sums

        D[m] = sum_{k_1+...+k_r=m, k_i>=1} prod omega_i^{k_i}/(k_i k_i!)

    by iterated convolution, out to a degree M where rho^m times the
    slowly varying factors is negligible.  Returns (D, M, rho)."""
    omega = tuple(to_mpf(o) for o in omega)
    rho = mpf(0)
    for o in omega:
        rho += abs(o)
    if rho >= 1:
        raise DomainError("series requires sum of |omega_i| < 1")
    r = len(omega)
    bits = ctx.precision_bits + 16
    if rho == 0:
        return [], 0, rho
    # rho^M below threshold, with slack for polynomial-log factors
    lg = -mp.log(rho, 2)
    M = int(bits / lg) + 8
    for _ in range(3):
        M = int((bits + (extra_log_powers + r) * mp.log(M + 2, 2)) / lg) + 8
    if M > ctx.max_terms:
        raise DomainError("truncation degree exceeds max_terms; rho too close to 1")
    with ctx.workprec():
        D = None
        for o in omega:
            c = [mpf(0)] * (M + 1)
            opow = mpf(1)
            fact = mpf(1)
            for k in range(1, M + 1):
                opow *= o
                fact *= k
                c[k] = opow / (k * fact)
            if D is None:
                D = c
            else:
                nxt = [mpf(0)] * (M + 1)
                for m1 in range(1, M + 1):
                    if D[m1] == 0:
                        continue
                    lim = M - m1
                    v = D[m1]
                    for k in range(1, lim + 1):
                        nxt[m1 + k] += v * c[k]
                D = nxt
        return D, M, rho


def s_series(x, omega, ctx):
    """S_r(x, omega) = sum over k_i >= 1 of
    (x)_{k_1+...+k_r} prod omega_i^{k_i}/(k_i k_i!), grouped by total
    degree.  Negative omega_i are allowed; sum of |omega_i| < 1 is
    required.  x may be a Jet, in which case the Pochhammer factors are
    jets and a truncated Taylor expansion comes back."""
    D, M, rho = _degree_profile(omega, ctx, extra_log_powers=2)
    with ctx.workprec():
        if isinstance(x, Jet):
            total = Jet.constant(0, x.degree, x.center)
            poch = Jet.constant(1, x.degree, x.center)
            shift = 0
        else:
            x = to_mpf(x)
            total = mpf(0)
            poch = mpf(1)
            shift = 0
        for m in range(1, M + 1):
            poch = poch * (x + shift)  # (x)_m built incrementally
            shift += 1
            if D and D[m] != 0:
                total = total + poch * D[m]
        return +total if not isinstance(total, Jet) else total


def t_coeff(r, l, omega, ctx):
    """Coefficient of x^l in S_r: the Stirling-weighted degree sum.

    Uses the harmonic-sum form of the Stirling ratio,
    c(m,l)/m! = sum_{m_1<...<m_{l-1}<m} 1/(m_1...m_{l-1} m), so the
    working quantities stay O(rho^m) with no large integers: the term at
    degree m is h(m,l) * m! * D[m]."""
    r, l = int(r), int(l)
    if r < 1 or l < 1:
        raise DomainError("r and l must be positive")
    D, M, rho = _degree_profile(omega, ctx, extra_log_powers=l)
    if len(D) - 1 < max(r, l):
        return mpf(0)
    with ctx.workprec():
        # u[j][m] built so u[j] at m equals the nested harmonic sum with
        # j fixed indices below m; prefix[j] accumulates sum_{m'<=m} u[j][m']
        prefix = [mpf(0)] * l  # prefix[j-1] = sum of u_j up to current m-1
        total = mpf(0)
        fact = mpf(1)
        for m in range(1, M + 1):
            fact *= m
            u = [mpf(0)] * (l + 1)
            u[0] = mpf(1)
            u[1] = mpf(1) / m
            for j in range(2, l + 1):
                u[j] = prefix[j - 2] / m  # attach m atop chains below it
            h = u[l] if l >= 1 else mpf(1)
            if m >= max(r, l) and D[m] != 0:
                total += h * fact * D[m]
            for j in range(1, l):
                prefix[j - 1] += u[j]
        return +total


# ---------------------------------------------------------------------------
# all-ones Euler-Zagier values
# ---------------------------------------------------------------------------

def _psi_plus_gamma_derivs(t, count, gamma):
    """[d^j/dt^j (psi(t)+gamma)] for j = 0..count, exact polygammas."""
    out = [mp.psi(0, t) + gamma]
    for j in range(1, count + 1):
        out.append(mp.psi(j, t))
    return out


def _g_derivs(r, t, count, ctx):
    """Derivative array of the inner-chain weight g_{r-1}(t), where
    g_0 = 1, g_1 = psi+gamma (harmonic number H_{t-1} at integers), and
    g_2 = ((psi+gamma)^2 - zeta(2) + psi')/2."""
    gamma = euler_gamma(ctx)
    if r == 1:
        return [mpf(1)] + [mpf(0)] * count
    A = _psi_plus_gamma_derivs(t, count + 1, gamma)
    if r == 2:
        return A[: count + 1]
    sq = []
    for j in range(count + 1):
        acc = mpf(0)
        for i in range(j + 1):
            acc += math.comb(j, i) * A[i] * A[j - i]
        sq.append(acc)
    z2 = zeta_value(2, ctx)
    out = [(sq[0] - z2 + A[1]) / 2]
    for j in range(1, count + 1):
        out.append((sq[j] + A[j + 1]) / 2)
    return out


def zeta_ez_ones(r, x, ctx):
    """zeta_EZ,r(1,...,1,x+1): the nested sum

        sum_{m_1<...<m_r} 1/(m_1 ... m_{r-1} m_r^{1+x}),

    folded to a single sum over m_r with closed-form inner chains, a
    direct part to N, and an Euler-Maclaurin tail whose derivatives are
    exact polygamma combinations.  Depth r <= 3."""
    x = _check_x(x)
    r = int(r)
    if not 1 <= r <= 3:
        raise DomainError("depth must be 1, 2, or 3")
    with ctx.workprec():
        thresh = mpf(2) ** (-(ctx.precision_bits + 8))
        N = 1200
        while True:
            val = _zeta_ez_attempt(r, x, N, ctx, thresh)
            if val is not None:
                return +val
            N *= 2
            if N > ctx.max_terms:
                raise DomainError("Euler-Maclaurin tail failed to close")


def _zeta_ez_attempt(r, x, N, ctx, thresh):
    gamma = euler_gamma(ctx)
    z2 = zeta_value(2, ctx) if r == 3 else None
    s = 1 + x
    # direct part over m_r = n < N with running harmonic accumulators
    total = mpf(0)
    H = mpf(0)       # H_{n-1}
    H2 = mpf(0)      # H^(2)_{n-1}
    for n in range(1, N):
        if r == 1:
            g = mpf(1)
        elif r == 2:
            g = H
        else:
            g = (H * H - H2) / 2
        total += g / mpf(n) ** s
        H += mpf(1) / n
        H2 += mpf(1) / (mpf(n) * n)

    # tail from n = N on: integral + correction + Bernoulli terms
    Nv = mpf(N)
    if r == 1:
        integral = Nv ** -x / x
    else:
        # past 2^(prec+16) the polygamma remainders 1/(2t), 1/t sit
        # below working precision; the asymptote avoids feeding psi
        # arguments with astronomical exponents
        big = mpf(2) ** (mp.prec + 16)

        def psi0(t):
            return mp.log(t) if t > big else mp.psi(0, t)

        def psi1(t):
            return 1 / t if t > big else mp.psi(1, t)

        if r == 2:
            def g_tail(t):
                return psi0(t) + gamma
        else:
            def g_tail(t):
                return ((psi0(t) + gamma) ** 2 - z2 + psi1(t)) / 2
        # the raw integrand decays like t^{-1-x}, which defeats any
        # quadrature as x -> 0; t = N exp(v/x) is exact and leaves a
        # unit-rate exponential integral, uniformly stable in x
        integral = (
            Nv ** -x
            / x
            * mp.quad(lambda v: g_tail(Nv * mp.exp(v / x)) * mp.exp(-v), [0, mp.inf])
        )

    K_MAX = 24
    derivs_needed = 2 * K_MAX
    g_der = _g_derivs(r, Nv, derivs_needed, ctx)
    # power-law derivative ladder: d^l t^{-s} = (-1)^l (s)_l t^{-s-l}
    pw = [Nv ** -s]
    for l in range(1, derivs_needed + 1):
        pw.append(pw[-1] * -(s + l - 1) / Nv)

    def f_deriv(m):
        acc = mpf(0)
        for j in range(m + 1):
            acc += math.comb(m, j) * g_der[j] * pw[m - j]
        return acc

    tail = integral + f_deriv(0) / 2
    prev_mag = None
    for k in range(1, K_MAX + 1):
        term = mp.bernoulli(2 * k) / mp.factorial(2 * k) * f_deriv(2 * k - 1)
        tail -= term
        mag = abs(term)
        if mag <= thresh * max(1, abs(total)):
            return total + tail
        if prev_mag is not None and mag > prev_mag:
            return None  # asymptotic series turned; need larger N
        prev_mag = mag
    return None
