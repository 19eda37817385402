"""Exception types shared across the package."""


class CafccError(Exception):
    """Base class for every error raised by this package."""


class DomainError(CafccError, ValueError):
    """Argument lies on a branch cut or outside a function's domain."""


class SingularPoint(CafccError, ZeroDivisionError):
    """An edge function denominator vanished."""


class DegenerateLinearSolve(CafccError):
    """The corner coefficient of an affine-linear polynomial is numerically zero."""


class DegenerateSuite(CafccError):
    """Every retry of a consistency trial hit a degenerate linear solve."""


class EvolutionStuck(CafccError):
    """Lattice evolution hit a face whose corner cannot be solved."""

    def __init__(self, face: tuple[int, int], message: str = "") -> None:
        self.face = face
        super().__init__(message or f"degenerate solve at face {face}")


class MatchFailed(CafccError):
    """A numerical identity check failed; carries the worst sample."""

    def __init__(self, message: str, worst: dict | None = None) -> None:
        self.worst = worst or {}
        super().__init__(message)
