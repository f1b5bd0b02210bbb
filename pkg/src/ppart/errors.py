"""Exception hierarchy shared by all ppart modules."""


class PPartError(Exception):
    """Base class for all errors raised by this package."""


class PosetSyntaxError(PPartError):
    """Malformed line in a poset file."""


class CycleError(PPartError):
    """The input relation digraph contains a directed cycle."""


class RangeError(PPartError):
    """An element label or size parameter is out of range."""


class FlavorError(PPartError):
    """A value vector does not have the flavor an operation requires."""


class LabelError(PPartError):
    """Operation requires a naturally labelled poset."""


class ExplosionError(PPartError):
    """An enumeration exceeded its configured cap."""


class NotFWDError(PPartError):
    """The poset is not a forest with duplications."""


class RemainderError(PPartError):
    """Exact polynomial division left a nonzero remainder."""


class InstabilityError(PPartError):
    """A numerator polynomial did not stabilize at the given truncation."""


class CapError(PPartError):
    """A size cap on complex enumeration was exceeded."""


class ArgError(PPartError):
    """An argument violates an operation's precondition."""
