# superinv/errors.py
class SuperInvError(Exception):
    """Base class for every error raised by superinv."""


class TableMismatchError(SuperInvError):
    pass


class NotDivisibleError(SuperInvError):
    def __init__(self, message: str, remainder=None):
        super().__init__(message)
        self.remainder = remainder  # Polynomial witness left over by the division


class ParityError(SuperInvError):
    pass


class MissingAssignmentError(SuperInvError):
    pass


class FormatMismatchError(SuperInvError):
    pass


class NonHomogeneousError(SuperInvError):
    pass


class ShapeError(SuperInvError):
    pass


class OddEntryError(SuperInvError):
    pass


class NonInvertibleError(SuperInvError):
    pass


class NonTerminatingError(SuperInvError):
    pass


class InvalidSpecError(SuperInvError):
    pass


class ConventionError(SuperInvError):
    pass


class PolynomialityError(SuperInvError):
    pass


class StructuralError(SuperInvError):
    pass


class ParseError(SuperInvError):
    pass


class UsageError(SuperInvError):
    pass


class StoppedError(SuperInvError):
    pass
