"""Exception taxonomy shared by all xop modules."""


class XopError(Exception):
    """Base class for all library errors."""


class UsageError(XopError):
    """An operation was called in a way its contract forbids (bad arguments,
    wrong family kind, malformed config)."""


class ParameterError(XopError):
    """Family or system parameters violate an invariant (e.g. pole inside the
    orthogonality domain)."""


class DomainError(XopError):
    """An evaluation point lies outside the admissible domain or at a pole."""


class ConsistencyError(XopError):
    """An internal construction failed a mathematical consistency requirement
    (e.g. a polynomial eigenfunction that must exist was not found)."""


class AccuracyError(XopError):
    """A numerical procedure failed to reach its accuracy target."""


class NumericError(XopError):
    """A numerical backend failed to converge."""


class SingularityError(XopError):
    """A potential evaluated non-finite on a grid point."""
