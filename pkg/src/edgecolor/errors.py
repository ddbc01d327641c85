"""Exception types shared by both kernel backends and the wrapper layer."""


class ColoringError(ValueError):
    """Invalid coloring operation (properness violation, bad precondition)."""


class StalePathError(ColoringError):
    """A traced path no longer matches the current coloring."""


class InternalInvariantError(RuntimeError):
    """A structural invariant the algorithms guarantee was violated; a bug."""


class PlanRejectedError(RuntimeError):
    """Hub sampling exhausted its retry budget without an accepted plan."""
