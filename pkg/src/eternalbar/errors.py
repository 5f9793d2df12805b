"""Exception types shared across the package."""


class EternalbarError(Exception):
    pass


class MalformedInput(EternalbarError, ValueError):
    """A document or value violates a structural invariant.

    ``path`` locates the offending field inside a JSON document when known.
    """

    def __init__(self, message: str, path: str | None = None):
        super().__init__(message)
        self.path = path


class DivisionByZero(EternalbarError, ZeroDivisionError):
    pass


class TruncationOverflow(EternalbarError, ArithmeticError):
    pass


class ZeroClass(EternalbarError, ValueError):
    pass


class NotACycle(EternalbarError, ValueError):
    pass


class MalformedComplex(MalformedInput):
    pass


class MalformedPresentation(MalformedInput):
    pass


class BasisMismatch(EternalbarError, ValueError):
    pass


class MalformedAlgebra(MalformedInput):
    pass


class ShiftRuleViolation(MalformedAlgebra):
    def __init__(self, message: str, entry=None):
        super().__init__(message)
        self.entry = entry


class MissingInverse(EternalbarError, KeyError):
    pass


class MissingUnit(EternalbarError, KeyError):
    pass


class EternalClass(EternalbarError, ValueError):
    pass


class ResolutionTooCoarse(EternalbarError, ValueError):
    pass


class ContractibleClass(EternalbarError, ValueError):
    pass


class ClosureViolation(EternalbarError, ValueError):
    pass


class IncompatibleMesh(EternalbarError, ValueError):
    pass


class Inconsistent(EternalbarError, RuntimeError):
    pass
