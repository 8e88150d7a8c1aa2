"""Exception hierarchy. Every error raised on bad input derives from OmlqError."""


class OmlqError(Exception):
    """Base class for all library errors."""


class NotALattice(OmlqError):
    pass


class BadOrthocomplement(OmlqError):
    pass


class NotOrthomodular(OmlqError):
    pass


class CrossLattice(OmlqError):
    pass


class CommutatorSetTooLarge(OmlqError):
    pass


class UnknownBuiltin(OmlqError):
    pass


class UnknownElement(OmlqError):
    pass


class AlphabetMismatch(OmlqError):
    pass


class ErasingImageUnbounded(OmlqError):
    pass


class NotFiniteSupport(OmlqError):
    pass


class NotFiniteRange(OmlqError):
    pass


class MalformedPath(OmlqError):
    pass


class StateBlowup(OmlqError):
    pass


class NotDeterministic(OmlqError):
    pass


class HasEpsilonMoves(OmlqError):
    pass


class UnknownSuite(OmlqError):
    pass


class ParseError(OmlqError):
    pass
