"""Exception hierarchy shared by every module."""


class CodingError(ValueError):
    """Base class for invalid input to a construction."""


class InvalidDegreeError(CodingError):
    pass


class InvalidLengthError(CodingError):
    pass


class InvalidBasisError(CodingError):
    pass


class FieldMismatchError(CodingError):
    pass


class BudgetError(RuntimeError):
    """An exhaustive computation would exceed its configured budget.

    ``needed`` is the number of codewords or candidates the computation
    would have to visit, ``budget`` the configured limit.
    """

    def __init__(self, message, needed=None, budget=None):
        super().__init__(message)
        self.needed = needed
        self.budget = budget


class NotSelfOrthogonalError(CodingError):
    """Raised when a construction requires a hermitian-self-orthogonal code.

    The failing :class:`~qcyclic.image.SelfOrthReport` is attached as
    ``report``.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
