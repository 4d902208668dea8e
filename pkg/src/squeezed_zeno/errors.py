"""Exception types shared across the package."""


class SqueezedZenoError(Exception):
    """Base class for all package errors."""


class InvalidStateError(SqueezedZenoError):
    """A density matrix, Bloch vector or pure state violates its invariants."""


class ParameterError(SqueezedZenoError):
    """Bath or schedule parameters are out of their physical range."""


class ContractViolationError(SqueezedZenoError):
    """A caller passed an operand that breaks an operation's contract."""


class DomainError(SqueezedZenoError):
    """A formula was evaluated outside its domain of validity."""
