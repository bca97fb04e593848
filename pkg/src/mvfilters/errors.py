"""Exception types shared by all modules."""


class MvError(Exception):
    """Base class for errors raised by this package."""


class InvalidArgument(MvError):
    """A precondition on an operation's arguments was violated."""


class ResourceLimit(MvError):
    """An enumeration would exceed the configured carrier cap."""


class InvariantViolation(MvError):
    """A structural invariant that should always hold was observed to fail.

    Raised loudly: hitting this means either corrupted input tables or a bug,
    never a routine error condition.
    """
