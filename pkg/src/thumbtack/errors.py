"""Exception types shared across the package."""


class SizeLimitError(Exception):
    """A computation would exceed the configured desk-scale size bound."""


class VerificationError(Exception):
    """An exact self-check failed.

    Carries a machine-checkable witness in ``witness`` whenever one exists;
    raising this means a would-be counterexample to a verified identity.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class DependentGeneratorsError(ValueError):
    """Generators are multiplicatively dependent; ``witness`` is a nonzero
    integer exponent vector whose product is a root of unity (or a constant,
    in the function-field case)."""

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness
