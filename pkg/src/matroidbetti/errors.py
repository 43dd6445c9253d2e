"""Shared exception types."""


class ValidationError(ValueError):
    """A well-formed input violates a documented contract.

    Raised for a basis family that fails the exchange axiom, a non-cactus
    input handed to a cactus-only routine, a vector that is not a cactus
    Betti vector, and similar semantic (rather than syntactic) failures.
    """
