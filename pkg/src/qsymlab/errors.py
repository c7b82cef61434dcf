"""Exception types shared across the package."""


class QsymlabError(Exception):
    pass


class DegreeCapError(QsymlabError, ValueError):
    """A computation would exceed the configured total-degree cap."""


class UndefinedKeyError(QsymlabError, KeyError):
    """A basis map was applied to a key outside its domain."""


class ArityError(QsymlabError, ValueError):
    pass


class NotCommutativeError(QsymlabError, ValueError):
    pass


class NotConnectedError(QsymlabError, ValueError):
    pass


class ReconstructionError(QsymlabError, ValueError):
    """The oracle could not reproduce a polynomial from its M-coefficients."""


class ClosureError(QsymlabError, ValueError):
    """An element expected to be symmetric was not."""
