"""Exception hierarchy shared by every module."""


class StarfactError(Exception):
    """Base class for all package errors."""


class DomainError(StarfactError, ValueError):
    """An argument lies outside the domain of the operation."""


class OrderMismatchError(StarfactError, ValueError):
    """Two power series with different truncation orders were combined."""


class ResourceLimitError(StarfactError):
    """A computation would exceed its configured size or word budget."""

    def __init__(self, message, **params):
        super().__init__(message)
        self.params = params


class CentralityError(StarfactError):
    """A group-algebra element is not constant on some conjugacy class.

    ``witness`` holds two permutations of the same cycle type whose
    coefficients differ.
    """

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


class PartitionParseError(StarfactError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position
