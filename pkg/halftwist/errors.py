# Copyright the halftwist authors
# Licensed under the MIT license


class HalftwistError(Exception):
    pass


class DomainError(HalftwistError, ValueError):
    """Argument outside the domain of the operation."""


class PreconditionError(HalftwistError):
    """A documented precondition of the operation does not hold."""


class PrecisionExhausted(HalftwistError, ArithmeticError):
    """Interval refinement hit its precision cap without deciding a sign."""
