"""Exception hierarchy shared by all lattle modules."""


class LattleError(Exception):
    """Base class for every error raised by lattle."""


class SpecError(LattleError):
    """A lattice description is malformed before any order is computed."""


class DuplicateLabel(SpecError):
    pass


class UnknownLabel(SpecError):
    pass


class LatticeError(LattleError):
    """The described order is not a bounded lattice."""


class CycleDetected(LatticeError):
    pass


class NoBottom(LatticeError):
    pass


class NoTop(LatticeError):
    pass


class TrivialLattice(LatticeError):
    """One-element carriers (0 = 1) are rejected."""


class NotALattice(LatticeError):
    def __init__(self, x, y, reason):
        self.x, self.y, self.reason = x, y, reason
        super().__init__(f"{x}, {y}: {reason}")


class ParseError(LattleError):
    """Lattice file text could not be read."""


class LatticeSyntaxError(ParseError):
    def __init__(self, msg, line=None, column=None):
        self.line, self.column = line, column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{msg}{where}")


class SchemaError(ParseError):
    pass


class NotAFilter(LattleError):
    pass


class UnknownKey(LattleError):
    pass


class UnknownLaw(LattleError):
    pass


class UnknownPredicate(LattleError):
    pass


class QuerySyntaxError(LattleError):
    pass


class SizeCapExceeded(LattleError):
    pass


class RetryBudgetExhausted(LattleError):
    pass


class KernelError(LattleError):
    """Two independent computations of the same quantity disagree."""
