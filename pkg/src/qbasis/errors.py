class StructuralError(ValueError):
    """Operands live over different atom spaces or have incompatible shapes."""


class PreconditionError(ValueError):
    """An operation was called outside its domain."""


class MembershipError(PreconditionError):
    """A vector is not in the required span; ``outside`` holds the failing atoms."""

    def __init__(self, message, outside):
        super().__init__(message)
        self.outside = outside
