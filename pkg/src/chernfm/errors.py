class PreconditionError(ValueError):
    """An input violates the documented precondition of an operation."""


class GeometryMismatch(PreconditionError):
    """Two classes living on different geometries were combined."""


class InvalidFixture(ValueError):
    """A subobject-lattice fixture breaks the abelian-category axioms it models."""


class MalformedInput(ValueError):
    """Input JSON does not follow the documented schema."""
