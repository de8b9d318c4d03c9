class InputError(ValueError):
    """Bad user input: unknown vertex, malformed file, violated precondition."""


class InvariantViolation(RuntimeError):
    """An identity that must hold by theory failed; indicates a bug."""
