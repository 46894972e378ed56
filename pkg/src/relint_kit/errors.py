"""Exception types shared across the toolkit."""


class RelintKitError(Exception):
    """Base class for all toolkit errors."""


class InputError(RelintKitError):
    """Malformed input: bad documents, dimension mismatches, zero denominators."""


class EmptySetError(RelintKitError):
    """An operation that requires a nonempty set was given an empty one."""


class PointNotInSetError(RelintKitError):
    """A base point was required to belong to the set but does not.

    Normal cones at outside points are empty rather than {0}; surfacing
    that as an error prevents the two from being confused.
    """


class TheoremViolation(RelintKitError):
    """An internal consistency guarantee failed; indicates a bug, not bad input."""
