"""Exception types. Validation errors carry a witness tuple of indices."""


class SgapError(ValueError):
    pass


class CarrierMismatch(SgapError):
    pass


class IndexOutOfRange(SgapError):
    pass


class PreconditionError(SgapError):
    pass


class ValidationError(SgapError):
    """A structure failed an axiom; ``witness`` names the offending indices."""

    def __init__(self, message, witness=()):
        self.witness = tuple(int(w) for w in witness)
        if self.witness:
            message = f"{message} (witness {self.witness})"
        super().__init__(message)


class InvalidSetoid(ValidationError):
    pass


class NonAssociative(ValidationError):
    pass


class NotExtensional(ValidationError):
    pass


class NotStronglyExtensional(ValidationError):
    pass


class NotHomomorphism(ValidationError):
    pass


class InvariantViolation(AssertionError):
    """An internal consistency check failed. Always a bug."""
