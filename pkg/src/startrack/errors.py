"""Domain errors raised across the package.

Every error the library raises on bad input derives from DomainError, so
callers (and the CLI) can separate domain failures from programming bugs.
"""


class DomainError(Exception):
    """Base class for all domain-level failures."""


# symbolic
class StartsWithZeroOrEleven(DomainError):
    pass


class FinitelyManyOnes(DomainError):
    pass


# farey
class OutOfRange(DomainError):
    pass


class NotNeighbours(DomainError):
    pass


# height
class NotMaximal(DomainError):
    pass


class FiniteOrderType(DomainError):
    pass


# rotation
class NonIntervalUnion(DomainError):
    pass


class NotStronglyConnected(DomainError):
    pass


# starorbit
class IllegalData(DomainError):
    pass


class IllegalInput(DomainError):
    pass


class NotCoprime(DomainError):
    pass


class BadIndex(DomainError):
    pass


class HalfSlope(DomainError):
    pass


# traintrack
class NotAbsorbed(DomainError):
    pass


class NotEfficient(DomainError):
    pass


# pruning
class NoInnermostBacktracking(DomainError):
    pass


class NoSuchBacktracking(DomainError):
    pass


class WrongForm(DomainError):
    pass
