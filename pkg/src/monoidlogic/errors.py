"""Exception hierarchy shared by every module of the package."""


class MonoidLogicError(Exception):
    """Base class for domain errors (the CLI maps these to exit code 1)."""


class NotLinearOrder(MonoidLogicError):
    pass


class NotAssociative(MonoidLogicError):
    def __init__(self, i, j, k):
        super().__init__(f"table is not associative: ({i}*{j})*{k} != {i}*({j}*{k})")
        self.witness = (i, j, k)


class NoIdentity(MonoidLogicError):
    pass


class WidthMismatch(MonoidLogicError):
    pass


class MonoidWidthMismatch(WidthMismatch):
    pass


class AlgebraTooLarge(MonoidLogicError):
    pass


class SymbolicUnsupported(MonoidLogicError):
    pass


class SearchBudgetExceeded(MonoidLogicError):
    pass


class CarrierTooLarge(MonoidLogicError):
    pass


class LogicSyntaxError(MonoidLogicError):
    def __init__(self, message, line=0, col=0):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col


class UnknownMonoid(MonoidLogicError):
    pass


class ArityMismatch(MonoidLogicError):
    pass


class UnboundVariable(MonoidLogicError):
    pass


class FreeVariables(MonoidLogicError):
    pass


class NotNormalized(MonoidLogicError):
    pass


class NotLex(MonoidLogicError):
    pass


class EnumeratorArityMismatch(MonoidLogicError):
    pass


class EnumeratorOrderMismatch(MonoidLogicError):
    """A for-program's output order differs from the quantifier's order on some small word."""


class GuardOverlap(MonoidLogicError):
    def __init__(self, assignment, guards):
        super().__init__(f"guards {guards} both hold at {assignment}")
        self.assignment = assignment
        self.guards = guards


class InvalidForProgram(MonoidLogicError):
    pass


class FormatError(MonoidLogicError):
    """Malformed text file (monoid, DFA, typed monoid, for-program, word)."""
