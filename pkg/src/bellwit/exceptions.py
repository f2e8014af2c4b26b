"""Module for bellwit Exceptions
"""


class BellwitError(Exception):
    """Base bellwit Exception.
    """
    pass


class BudgetExceededError(BellwitError):
    """The brute-force enumeration would exceed its budget.

    Use the closed form bounds for this many settings instead.
    """
    pass


class ClosedFormNotAvailableError(BellwitError):
    """No tight closed form exists for the given tensor.
    """
    pass


class DimensionMismatchError(BellwitError):
    """The number of settings of two objects do not match.
    """
    pass


class InvalidDataError(BellwitError):
    """Input data (usually read from a file) failed validation.
    """
    pass


class InvalidParameterError(BellwitError):
    """A parameter is outside of its allowed range.
    """
    pass


class InvalidSignsError(BellwitError):
    """A sign vector has the wrong length or entries other than +1/-1.
    """
    pass


class InvalidStateError(BellwitError):
    """The given state vector is not a unit 3-qubit state.
    """
    pass


class MethodNotImplementedError(BellwitError):
    """The given method is not implemented for this class.
    """

    def __init__(self, msg: str = "This method is not implemented.", *args, **kwargs):
        super().__init__(msg, *args, **kwargs)


class NotModifiedCirculantError(BellwitError):
    """The matrix does not have the modified circulant structure.
    """
    pass


class SymmetryViolationError(BellwitError):
    """A party-symmetric tensor produced different bounds for different parties.
    """
    pass


class UnsupportedFamilyError(BellwitError):
    """The operation is not defined for this Bell tensor family.
    """
    pass

