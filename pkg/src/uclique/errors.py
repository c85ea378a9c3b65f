"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of the operation."""


class SizeLimitError(ValueError):
    """A graph is too large to materialize under the configured vertex cap."""

    def __init__(self, vertices: int, cap: int, what: str = "graph"):
        self.vertices = vertices
        self.cap = cap
        super().__init__(f"{what} has {vertices} vertices, exceeding the cap of {cap}")


class NotACliqueError(ValueError):
    def __init__(self, u, v):
        self.pair = (u, v)
        super().__init__(f"vertices {u} and {v} are not adjacent")


class DivisibilityError(ArithmeticError):
    """m! failed to divide the clique-count numerator. This is always a bug."""
