"""Exception types shared across the package."""


class MissingEmptyOrFull(ValueError):
    """The candidate family lacks the empty set or the whole ground set."""


class NotClosedUnderUnion(ValueError):
    def __init__(self, a: int, b: int):
        super().__init__(f"family not closed under union: {a:#x} | {b:#x}")
        self.witness = (a, b)


class NotClosedUnderIntersection(ValueError):
    def __init__(self, a: int, b: int):
        super().__init__(f"family not closed under intersection: {a:#x} & {b:#x}")
        self.witness = (a, b)


class EmptySubspace(ValueError):
    """Subspaces are taken over non-empty carriers only."""


class GroundSetTooLarge(ValueError):
    """The requested ground set exceeds the supported or exhaustive cap."""


class SearchSpaceTooLarge(ValueError):
    """A map-enumeration request exceeds its instance cap."""


class ArityMismatch(ValueError):
    """Ground sets of the operands do not line up."""


class MalformedQuery(ValueError):
    """A partition query violates its side conditions."""


class CoverViolation(ValueError):
    """A cover pair (Y, Z) must satisfy Y | Z == X."""


class UnknownTheorem(KeyError):
    """No registered check under the requested id."""
