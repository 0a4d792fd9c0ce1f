"""Exception types shared across the package."""


class InputError(ValueError):
    """Caller-supplied data violates a documented precondition or grammar."""


class InvariantError(RuntimeError):
    """An internal consistency invariant failed; indicates a bug, not bad input."""
