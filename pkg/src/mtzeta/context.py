"""Precision context: the single knob bundle governing every evaluation.

All numerical routines take an explicit PrecisionContext and do their mpf
arithmetic inside ``mp.workprec`` blocks derived from it, so results do not
depend on the caller's ambient mpmath state.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from mpmath import mp, mpf

from .errors import DomainError

# Extra mantissa bits used inside kernels to absorb rounding of long
# summations; results are still only trusted to precision_bits.
GUARD_BITS = 32


def to_mpf(value) -> mpf:
    """Convert a number (int, float, str, mpf) to mpf without precision loss.

    Strings are parsed at no less than 1024 bits (more if the ambient
    precision or the digit count demands it), so a decimal like "0.3"
    denotes the same number regardless of where conversion happens; for
    contexts beyond 1024 bits, convert inside the context's workprec.
    """
    if isinstance(value, mpf):
        return value
    if isinstance(value, str):
        with mp.workprec(max(mp.prec, 1024, 16 + 4 * len(value))):
            return mpf(value)
    return mpf(value)


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision, tolerances and truncation caps.

    precision_bits: mantissa bits for every mpf operation (>= 64).
    target_tol:     acceptance tolerance for comparisons; quadrature refines
                    until successive levels agree to target_tol/4.
    max_terms:      hard cap on series terms / enumerated combinatorial items.
    quad_levels:    cap on DE quadrature level doubling.
    """

    precision_bits: int = 256
    target_tol: mpf = field(default_factory=lambda: to_mpf("1e-30"))
    max_terms: int = 500_000
    quad_levels: int = 10

    def __post_init__(self):
        object.__setattr__(self, "target_tol", to_mpf(self.target_tol))
        if self.precision_bits < 64:
            raise DomainError("precision_bits must be >= 64")
        if not self.target_tol > 0:
            raise DomainError("target_tol must be positive")
        # guard digits must exist between tolerance and machine epsilon
        if self.target_tol < mpf(2) ** (-(self.precision_bits - 16)):
            raise DomainError(
                "target_tol must be >= 2^-(precision_bits-16); "
                "raise precision_bits or loosen target_tol"
            )
        if self.max_terms < 1:
            raise DomainError("max_terms must be positive")
        if self.quad_levels < 1:
            raise DomainError("quad_levels must be positive")

    @property
    def eps(self) -> mpf:
        """2^-precision_bits, the round-off unit of the context."""
        return mpf(2) ** (-self.precision_bits)

    def workprec(self, extra_bits: int = GUARD_BITS):
        """mp.workprec context manager at precision_bits + extra_bits."""
        return mp.workprec(self.precision_bits + extra_bits)

    def with_tol(self, tol) -> "PrecisionContext":
        return PrecisionContext(
            precision_bits=self.precision_bits,
            target_tol=to_mpf(tol),
            max_terms=self.max_terms,
            quad_levels=self.quad_levels,
        )

    def scaled(self, factor: int) -> "PrecisionContext":
        """Context at factor x precision (oracle comparisons run at 3x)."""
        return PrecisionContext(
            precision_bits=self.precision_bits * factor,
            target_tol=self.target_tol,
            max_terms=self.max_terms,
            quad_levels=self.quad_levels,
        )


DEFAULT_CONTEXT = PrecisionContext()
