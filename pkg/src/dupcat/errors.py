"""Exception types shared across the package."""


class DupcatError(Exception):
    """Base class for all package-specific errors."""


class QuiverSyntaxError(DupcatError):
    """Malformed quiver file."""


class CyclicQuiverError(DupcatError):
    """The quiver contains a loop or an oriented cycle."""


class NotDynkinError(DupcatError):
    """An operation guarded to Dynkin quivers received a non-Dynkin one."""


class CapExceededError(DupcatError):
    """Knitting produced more indecomposables than the configured cap.

    Signals a representation-infinite module category.
    """

    def __init__(self, cap):
        super().__init__(f"more than {cap} indecomposables; representation-infinite")
        self.cap = cap


class CycleDetectedError(DupcatError):
    """Knitting revisited a module inconsistently (non-directed AR quiver)."""


class NotInDomainError(DupcatError):
    """The module is not in the domain of the stable projection functor."""


class CatalogError(DupcatError):
    """A catalog-level consistency check failed."""
