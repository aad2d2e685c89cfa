class InvalidArgument(ValueError):
    """An argument violates a type invariant (non-prime, not squarefree, zero, ...)."""


class DegenerateField(InvalidArgument):
    """The generators do not give a composite of the expected degree."""


class HypothesisViolation(InvalidArgument):
    """A field description fails a structural hypothesis (e.g. class number not an odd prime)."""
