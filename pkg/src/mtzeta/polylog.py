"""Multiple polylogarithms: multi-variable, one-variable, and the
Hurwitz-shifted variants with denominators (n_i + x)^{k_i}.

All sums run over strictly increasing integer tuples.  They are computed
as depth-many coupled 1-D accumulations: with P_0 = 1 identically and

    P_i(n) = P_i(n-1) + z_i^n / (n + shift)^{k_i} * P_{i-1}(n-1),

P_depth(N) is the nested sum truncated at outer index N.  Updating the
stages in decreasing i per n keeps the strict n_{i-1} < n_i coupling
without materializing prefix arrays.

Truncation is adaptive.  The outermost increments decay geometrically
with ratio rho = max over suffixes of prod_{j>=i} |z_j| (inner stages
contribute slowly varying polynomial-log factors only), so the tail
after n is bounded by a small multiple of t_n rho/(1-rho).  We stop
when that bound drops below the working threshold and raise BudgetError
if ctx.max_terms runs out first, which only happens for rho very close
to 1; the telescoping ratios that feed this module stay well clear.
"""

import math

from mpmath import mp, mpf

from dataclasses import dataclass, field

from .combinatorics import weak_compositions
from .context import to_mpf
from .errors import BudgetError, DomainError

__all__ = [
    "MultiIndex",
    "PolylogArgs",
    "mpl",
    "mpl_one_var",
    "hurwitz_li0",
    "hurwitz_li1",
    "li1_series_in_x",
]


@dataclass(frozen=True)
class MultiIndex:
    """Exponent tuple (k_1,...,k_s), all parts >= 1."""

    parts: tuple
    weight: int = field(init=False)
    depth: int = field(init=False)

    def __post_init__(self):
        parts = tuple(int(k) for k in self.parts)
        if not parts or any(k < 1 for k in parts):
            raise DomainError("index parts must be positive integers")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "weight", sum(parts))
        object.__setattr__(self, "depth", len(parts))


@dataclass(frozen=True)
class PolylogArgs:
    """Index plus one real argument per index entry, each |z_i| < 1."""

    index: MultiIndex
    args: tuple

    def __post_init__(self):
        index = self.index
        if not isinstance(index, MultiIndex):
            index = MultiIndex(tuple(index))
            object.__setattr__(self, "index", index)
        args = tuple(to_mpf(z) for z in self.args)
        if len(args) != index.depth:
            raise DomainError("index and argument lengths differ")
        if any(abs(z) >= 1 for z in args):
            raise DomainError("arguments must satisfy |z| < 1")
        object.__setattr__(self, "args", args)


# value cache: the expansion coefficients evaluate polylogs of the same
# telescoping ratios over and over.  Keyed on exact argument bits.
_CACHE = {}
_CACHE_CAP = 8192


def _sum_with_cache(tag, ks, zs, shift, n_start, ctx):
    key = (tag, ks, zs, shift, ctx.precision_bits)
    hit = _CACHE.get(key)
    if hit is not None:
        return hit
    val = _nested_sum(ks, zs, shift, n_start, ctx)
    if len(_CACHE) >= _CACHE_CAP:
        _CACHE.pop(next(iter(_CACHE)))
    _CACHE[key] = val
    return val


def _suffix_rho(zs):
    rho = mpf(0)
    acc = mpf(1)
    for z in reversed(zs):
        acc *= abs(z)
        if acc > rho:
            rho = acc
    return rho


def _nested_sum(ks, zs, shift, n_start, ctx):
    """Shared accumulation.  n_start is the first value of the innermost
    counter; starting at 0 realizes the z_1^0 = 1 convention (0^0 = 1
    included) for the shifted sums."""
    s = len(ks)
    with ctx.workprec():
        shift = to_mpf(shift)
        rho = _suffix_rho(zs)
        thresh = mpf(2) ** (8 - ctx.precision_bits)
        geom = 4 * rho / (1 - rho)
        P = [mpf(1)] + [mpf(0)] * s
        powers = [z ** n_start for z in zs]  # 0^0 = 1 per convention
        small_run = 0
        n = n_start
        while True:
            prev_outer = P[s]
            for i in range(s, 0, -1):
                # stage i needs n th element >= n_start + i - 1 and a
                # live power (zero argument kills the chain exactly)
                if n >= n_start + i - 1 and powers[i - 1]:
                    P[i] += powers[i - 1] / (n + shift) ** ks[i - 1] * P[i - 1]
            if n >= n_start + s + 1:
                tail_bound = geom * abs(P[s] - prev_outer)
                if tail_bound <= thresh * max(1, abs(P[s])):
                    small_run += 1
                    if small_run >= 2:
                        return +P[s]
                else:
                    small_run = 0
            n += 1
            if n - n_start > ctx.max_terms:
                raise BudgetError(
                    "nested sum over %d terms did not close (rho=%s)"
                    % (ctx.max_terms, mp.nstr(rho, 6))
                )
            for i, z in enumerate(zs):
                powers[i] *= z


def mpl(p, ctx):
    """Multi-variable multiple polylogarithm of p.index at p.args.

    Any zero argument forces the value 0: the i-th factor is z_i^{n_i}
    with n_i >= i >= 1.
    """
    return _sum_with_cache("m", p.index.parts, p.args, mpf(0), 1, ctx)


def mpl_one_var(index, z, ctx):
    """One-variable multiple polylogarithm: all arguments 1 except the
    last, which is z with |z| < 1.  Inner arguments equal to 1 are safe
    here because the final variable alone controls the tail."""
    if not isinstance(index, MultiIndex):
        index = MultiIndex(tuple(index))
    z = to_mpf(z)
    if abs(z) >= 1:
        raise DomainError("mpl_one_var needs |z| < 1")
    zs = (mpf(1),) * (index.depth - 1) + (z,)
    return _sum_with_cache("m", index.parts, zs, mpf(0), 1, ctx)


def _check_x(x):
    x = to_mpf(x)
    if x <= 0:
        raise DomainError("shift x must be positive")
    return x


def hurwitz_li0(x, p, ctx):
    """Hurwitz-type sum over 0 <= n_1 < ... < n_s with denominators
    (n_i + x)^{k_i}; z_1^{n_1} is 1 at n_1 = 0 even for z_1 = 0."""
    x = _check_x(x)
    return _sum_with_cache("h0", p.index.parts, p.args, x, 0, ctx)


def hurwitz_li1(x, p, ctx):
    """Hurwitz-type sum over 1 <= n_1 < ... < n_s with denominators
    (n_i + x)^{k_i}."""
    x = _check_x(x)
    return _sum_with_cache("h1", p.index.parts, p.args, x, 1, ctx)


def li1_series_in_x(p, x, L, ctx):
    """Partial sum through total order L of the expansion of the shifted
    sum in powers of x:

        sum_{l>=0} (-x)^l sum_{l_1+...+l_s=l}
            prod_i C(k_i + l_i - 1, l_i) * Li_{k+l}(z).
    """
    x = to_mpf(x)
    if not 0 < x < 1:
        raise DomainError("expansion variable must lie in (0,1)")
    ks = p.index.parts
    s = p.index.depth
    with ctx.workprec():
        total = mpf(0)
        for l in range(int(L) + 1):
            inner = mpf(0)
            for wc in weak_compositions(l, s):
                coeff = 1
                for k, li in zip(ks, wc.parts):
                    coeff *= math.comb(k + li - 1, li)
                shifted = tuple(k + li for k, li in zip(ks, wc.parts))
                inner += coeff * _sum_with_cache("m", shifted, p.args, mpf(0), 1, ctx)
            total += (-x) ** l * inner
        return +total
