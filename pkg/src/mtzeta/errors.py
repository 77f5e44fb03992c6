"""Exception types shared across the package.

Every rejected precondition raises DomainError with a message naming the
violated condition; callers (CLI included) can rely on that to distinguish
domain problems (exit 3) from genuine tolerance failures (exit 1).
"""


class DomainError(ValueError):
    """An input violates a documented precondition (e.g. x <= 0, |z| >= 1)."""


class BudgetError(RuntimeError):
    """A truncation or enumeration cap (ctx.max_terms, ctx.quad_levels) was
    exceeded before the requested accuracy was reached.  Never silently
    degraded into an approximate answer."""


class QuadratureError(BudgetError):
    """Double-exponential quadrature failed to converge within the level cap."""
