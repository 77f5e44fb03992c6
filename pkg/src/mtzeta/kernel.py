"""Arbitrary-precision scalar kernel.

Constants, Pochhammer symbols, exact Stirling/Bell combinatorial numbers,
the incomplete gamma value Gamma(0,u), and the two Taylor-coefficient
factories (log-gamma jets, reciprocal-gamma series) everything downstream
leans on.

Exactness split: stirling_first_unsigned and bell_complete are exact
(integers / caller-supplied rationals); everything else is mpf at
ctx.precision_bits with guard bits inside.
"""

from __future__ import annotations

import math
from fractions import Fraction

from mpmath import mp, mpf

from .context import GUARD_BITS, PrecisionContext
from .errors import DomainError
from .jets import Jet

# ---------------------------------------------------------------------------
# exact combinatorial numbers
# ---------------------------------------------------------------------------

# Rows of unsigned Stirling numbers of the first kind, c[m][l] for 0<=l<=m,
# built by c(m+1,l) = m*c(m,l) + c(m,l-1).  Seeded through m=64 on first use;
# grows on demand (coefficient series routinely need m in the hundreds).
_STIRLING_ROWS: list[list[int]] = [[1]]
_STIRLING_SEED = 64


def _stirling_row(m: int) -> list[int]:
    while len(_STIRLING_ROWS) <= max(m, _STIRLING_SEED):
        prev = _STIRLING_ROWS[-1]
        n = len(_STIRLING_ROWS) - 1  # prev is row n
        row = [0] * (n + 2)
        for l in range(n + 2):
            acc = n * prev[l] if l <= n else 0
            if l >= 1:
                acc += prev[l - 1]
            row[l] = acc
        _STIRLING_ROWS.append(row)
    return _STIRLING_ROWS[m]


def stirling_first_unsigned(m: int, l: int) -> int:
    """Unsigned Stirling number of the first kind: coefficient of x^l in the
    rising factorial (x)_m.  Exact integer."""
    if m < 1 or l < 1 or l > m:
        raise DomainError("stirling_first_unsigned requires 1 <= l <= m")
    return _stirling_row(m)[l]


def bell_complete(n: int, xs) -> object:
    """Complete exponential Bell polynomial B_n(x_1..x_n) by the recurrence
    B_{m+1} = sum_s C(m,s) x_{s+1} B_{m-s}.

    Generic over the coefficient ring: works for mpf, Fraction, int alike
    (binomials are exact Python ints).
    """
    if n < 0:
        raise DomainError("bell_complete requires n >= 0")
    if len(xs) < n:
        raise DomainError("bell_complete needs at least n arguments")
    b = [1]
    for m in range(n):
        acc = 0
        for s in range(m + 1):
            acc = acc + math.comb(m, s) * xs[s] * b[m - s]
        b.append(acc)
    return b[n]


def pochhammer(x, m: int, ctx: PrecisionContext):
    """Rising factorial (x)_m = x(x+1)...(x+m-1); empty product 1 for m=0.

    Exact when x is an int or Fraction; mpf at working precision otherwise.
    """
    if m < 0:
        raise DomainError("pochhammer requires m >= 0")
    if isinstance(x, (int, Fraction)):
        acc = Fraction(1) if isinstance(x, Fraction) else 1
        for i in range(m):
            acc *= x + i
        return acc
    with ctx.workprec():
        acc = mpf(1)
        xv = mpf(x)
        for i in range(m):
            acc *= xv + i
        return acc


# ---------------------------------------------------------------------------
# constants
# ---------------------------------------------------------------------------

_ZETA_CACHE: dict[tuple[int, int], mpf] = {}


def zeta_value(k: int, ctx: PrecisionContext) -> mpf:
    """zeta(k) for integer k >= 2 at working precision."""
    if not isinstance(k, int) or k < 2:
        raise DomainError("zeta_value requires integer k >= 2")
    key = (k, ctx.precision_bits)
    if key not in _ZETA_CACHE:
        with ctx.workprec():
            _ZETA_CACHE[key] = +mp.zeta(k)
    return _ZETA_CACHE[key]


def euler_gamma(ctx: PrecisionContext) -> mpf:
    with ctx.workprec():
        return +mp.euler


# ---------------------------------------------------------------------------
# incomplete gamma Gamma(0, u)
# ---------------------------------------------------------------------------

def gamma0(u, ctx: PrecisionContext) -> mpf:
    """Gamma(0,u) = int_u^inf e^-t / t dt for u > 0.

    u <= 1: the entire-series form -log u - gamma - sum (-u)^n/(n*n!),
    truncated once terms fall below 2^-precision_bits.
    u > 1:  exponential-integral evaluation (continued-fraction class
    scheme); both methods agree at the u=1 boundary to working precision.
    """
    with ctx.workprec():
        uv = mpf(u)
        if not uv > 0:
            raise DomainError("gamma0 requires u > 0")
        if uv <= 1:
            cutoff = mpf(2) ** (-(ctx.precision_bits + GUARD_BITS))
            total = -mp.log(uv) - mp.euler
            term = mpf(1)  # carries (-u)^n / n!
            n = 0
            while True:
                n += 1
                term *= -uv / n
                piece = term / n
                total -= piece
                if abs(piece) < cutoff:
                    break
            return +total
        return +mp.e1(uv)


# ---------------------------------------------------------------------------
# Taylor factories
# ---------------------------------------------------------------------------

def loggamma_jet(x0, degree: int, ctx: PrecisionContext) -> Jet:
    """Jet of log Gamma at x0 > 0: coefficient k>=1 is psi^(k-1)(x0)/k!."""
    with ctx.workprec():
        x0v = mpf(x0)
        if not x0v > 0:
            raise DomainError("loggamma_jet requires x0 > 0")
        coeffs = [mp.loggamma(x0v)]
        fact = mpf(1)
        for k in range(1, degree + 1):
            fact *= k
            coeffs.append(mp.psi(k - 1, x0v) / fact)
        return Jet(x0v, coeffs)


def inv_gamma_taylor(degree: int, with_exp_gamma: bool, ctx: PrecisionContext) -> Jet:
    """Taylor jet at 0 of e^{-gamma x}/Gamma(x+1) (flag set) or 1/Gamma(x+1).

    Coefficient n is B_n(x_1, -1! zeta(2), 2! zeta(3), ...,
    (-1)^{n-1}(n-1)! zeta(n)) / n!, with x_1 = 0 or gamma by the flag.
    """
    if degree < 0:
        raise DomainError("inv_gamma_taylor requires degree >= 0")
    with ctx.workprec():
        # argument list x_j: x_1 = 0 or gamma, x_j = (-1)^{j-1} (j-1)! zeta(j)
        args = [mpf(0) if with_exp_gamma else euler_gamma(ctx)]
        for j in range(2, degree + 1):
            args.append(mpf(-1) ** (j - 1) * mp.factorial(j - 1) * zeta_value(j, ctx))
        coeffs = [bell_complete(n, args[:n]) / mp.factorial(n) for n in range(degree + 1)]
        return Jet(mpf(0), coeffs)
