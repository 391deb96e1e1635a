"""Exception types shared across modules."""


class PreconditionError(ValueError):
    """The input does not satisfy the hypotheses the construction needs."""


class ProofStepError(AssertionError):
    """A choice the underlying argument guarantees could not be made.

    Raised instead of falling back to another strategy: seeing it means either
    a bug or a counterexample to the argument.
    """
