"""Exception hierarchy shared by every module of the package."""


class D0LError(Exception):
    """Base class for all package errors."""


class IndexOutOfRange(D0LError, IndexError):
    pass


class MissingProduction(D0LError):
    """A symbol being rewritten has no production."""

    def __init__(self, symbol):
        super().__init__(f"no production for symbol {symbol!r}")
        self.symbol = symbol


class InvalidInput(D0LError, ValueError):
    pass


class ParseError(D0LError, ValueError):
    """Malformed sequence, system or model file. Carries the offending line number."""

    def __init__(self, message, line=None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line


class DegenerateSequence(D0LError):
    """Some w_i is empty while w_{i+1} is not; no derivation can exist."""


class GenerationFailed(D0LError):
    pass


class ResourceError(D0LError):
    """Base class for size caps and budgets (CLI exit code 3)."""


class InstanceTooLarge(ResourceError):
    pass


class BudgetExceeded(ResourceError):
    pass


class QubitCapExceeded(ResourceError):
    pass


class DimensionMismatch(D0LError, ValueError):
    pass


class NotOnePerClique(D0LError):
    pass


class ConflictingProduction(D0LError, AssertionError):
    """Two selected vertices bind one symbol to different successors (solver bug)."""


class IncompleteModel(D0LError):
    pass


class IncompatibleModel(D0LError):
    """A SAT model does not decode to a size-k independent set."""
