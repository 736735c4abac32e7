"""Exception hierarchy.

Every failure mode of the pipeline raises a subclass of :class:`PolyhodgeError`,
so callers (and the command-line driver) can separate malformed input from
mathematically inconsistent input.
"""


class PolyhodgeError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(PolyhodgeError):
    """An input document is not syntactically well formed."""


class ValidationError(PolyhodgeError):
    """An input document violates a structural invariant.

    The message carries the offending field path where available.
    """


class DegreeTooSmall(PolyhodgeError):
    """A degree parameter was below the minimum of 2."""


class NonIntegralShift(PolyhodgeError):
    """A weight-compatible shift of spectral pairs needs an integral offset."""


class NegativeMultiplicity(PolyhodgeError):
    """A multiset that must be final (all counts >= 0) carries a negative count."""


class NotWeightMonotone(PolyhodgeError):
    """A full Hodge table is not monotone along the weight strings.

    Raised when extracting primitive multiplicities would need a negative
    value, i.e. the table is incompatible with a monodromy weight filtration.
    """


class NonIsolated(PolyhodgeError):
    """A local model does not define an isolated singularity germ."""


class InconsistentGlobalData(PolyhodgeError):
    """Position-dependent global Hodge input contradicts the local data.

    One of the solver cascade steps produced a negative Hodge number; the
    message names the step and the offending entry.
    """


class NegativeFormula(PolyhodgeError):
    """A closed-form plane-curve count evaluated negative (bad multiplicities)."""


class AmbiguousResidue(PolyhodgeError):
    """A mod-2 spectral-pair multiset admits no consistent block decomposition."""
