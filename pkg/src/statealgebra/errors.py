"""Exception types shared by the classical and quantum state modules."""


class GridMismatchError(ValueError):
    """Raised when an operation needs two states on the same grid (and basis)."""


class BasisError(ValueError):
    """Raised when a state is in the wrong basis for the requested operation."""
