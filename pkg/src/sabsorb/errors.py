"""Exception hierarchy for the engine."""
from __future__ import annotations

from collections.abc import Iterable


class SAbsorbError(Exception):
    """Base class for every error raised by the engine."""


# =============================================================================
# RING CONSTRUCTION
# =============================================================================

class InvalidOrderError(SAbsorbError):
    """A ring order below 2 was requested."""


class CapacityError(SAbsorbError):
    """A construction would exceed the configured order cap."""

    def __init__(self, order: int | None, cap: int, what: str = "ring"):
        # order is None when it is too large to compute
        if order is None:
            super().__init__(f"{what} exceeds the order cap {cap}")
        else:
            super().__init__(f"{what} of order {order} exceeds the order cap {cap}")
        self.order = order
        self.cap = cap


class UnsupportedModulusError(SAbsorbError):
    """Polynomial quotients need a monic modulus over some Z/n."""


class DegenerateQuotientError(SAbsorbError):
    """Quotient by the whole ring."""


class HomomorphismError(SAbsorbError):
    """An index table does not define a unital ring homomorphism."""

    def __init__(self, law: str, pair: tuple[int, ...] | None = None):
        where = f" at {pair}" if pair is not None else ""
        super().__init__(f"not a ring homomorphism: {law} fails{where}")
        self.law = law
        self.pair = pair


# =============================================================================
# IDEALS AND MULTIPLICATIVE SETS
# =============================================================================

class NotDisjointError(SAbsorbError):
    """The ideal meets the multiplicative set."""

    def __init__(self, element: int):
        super().__init__(f"ideal is not disjoint from S (common element {element})")
        self.element = element


class NoPrimesError(SAbsorbError):
    """The unit ideal has no prime ideals over it."""


class LocalizationIsZeroError(SAbsorbError):
    """S contains zero, so R_S is the zero ring."""


class PreconditionError(SAbsorbError):
    """A hypothesis of an operation does not hold on the given input."""


class InternalInconsistencyError(SAbsorbError):
    """A bound the theory guarantees was exceeded. This is a finding, not noise."""


class OmegaBoundExceededError(InternalInconsistencyError):
    def __init__(self, bound: int, value: object = None):
        super().__init__(f"no n <= {bound} makes the ideal S-n-absorbing")
        self.bound = bound
        self.value = value


class TimeCapExceeded(SAbsorbError):
    """A single check instance ran past its time cap."""


class UnknownCheckError(SAbsorbError):
    def __init__(self, name: str, known: Iterable[str]):
        super().__init__(f"unknown check '{name}' (known: {', '.join(sorted(known))})")
        self.name = name


# =============================================================================
# DSL
# =============================================================================

class DslError(SAbsorbError):
    """Error tied to a position in DSL input."""

    def __init__(self, message: str, line: int = 1, column: int = 1,
                 expected: Iterable[str] = ()):
        self.message = message
        self.line = line
        self.column = column
        self.expected = tuple(sorted(set(expected)))
        text = f"{line}:{column}: {message}"
        if self.expected:
            text += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(text)


class LexicalError(DslError):
    pass


class DslSyntaxError(DslError):
    pass


class ArityError(DslError):
    pass


class SemanticError(DslError):
    pass
