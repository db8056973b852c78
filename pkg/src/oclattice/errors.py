"""Exception hierarchy.  The CLI maps each family to an exit code."""


class OCLatticeError(Exception):
    pass


class ParseError(OCLatticeError, ValueError):
    pass


class EmptyWord(ParseError):
    pass


class UnknownSymbol(ParseError):
    pass


class InvalidInput(OCLatticeError, ValueError):
    pass


class UnbalancedIdentity(InvalidInput):
    pass


class NotOvercommutative(InvalidInput):
    pass


class LetterAbsent(InvalidInput):
    pass


class DegreeMismatch(InvalidInput):
    pass


class PatternTooLong(InvalidInput):
    pass


class WordTooShort(InvalidInput):
    pass


class PremiseFailed(InvalidInput):
    """A precondition that has to be verified by computation did not hold."""


class SizeCapExceeded(OCLatticeError):
    pass


class DegreeCapExceeded(SizeCapExceeded):
    pass


class AssignmentCapExceeded(SizeCapExceeded):
    pass


class LatticeCapExceeded(OCLatticeError):
    pass


class NoNormalFormFound(OCLatticeError, AssertionError):
    """Raised when a claimed normal form is missing under verified premises."""


class BoundaryPropertyViolated(OCLatticeError, AssertionError):
    pass
