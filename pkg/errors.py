"""
Exception hierarchy for the Spectral Turan Workbench
Every domain failure raised by the library derives from WorkbenchError so the
command-line surface can map it to a single exit status
"""

from typing import Optional


class WorkbenchError(Exception):
    """Base class for all domain errors"""

    error_type: str = "WorkbenchError"


class GraphError(WorkbenchError, ValueError):
    """Invalid graph value or constructor arguments outside their domain"""

    error_type = "GraphError"


class UnsupportedOrderError(WorkbenchError):
    """Requested order exceeds what an exact procedure supports"""

    error_type = "UnsupportedOrderError"

    def __init__(self, what: str, order: int, limit: int):
        self.order = order
        self.limit = limit
        super().__init__(f"{what} supports order <= {limit}, got {order}")


class Graph6ParseError(WorkbenchError, ValueError):
    """Malformed graph6 text"""

    error_type = "Graph6ParseError"


class Graph6HeaderError(Graph6ParseError):
    """Missing or invalid order header"""

    error_type = "Graph6HeaderError"


class Graph6CharacterError(Graph6ParseError):
    """A character outside the printable graph6 range 63..126"""

    error_type = "Graph6CharacterError"


class Graph6LengthError(Graph6ParseError):
    """Body length does not match the declared order"""

    error_type = "Graph6LengthError"


class Graph6PaddingError(Graph6ParseError):
    """Padding bits after the upper triangle are not zero"""

    error_type = "Graph6PaddingError"


class SpectralConvergenceError(WorkbenchError):
    """Power iteration hit its cap before the residual reached tolerance"""

    error_type = "SpectralConvergenceError"

    def __init__(self, order: int, iterations: int, best_residual: float, tolerance: float):
        self.order = order
        self.iterations = iterations
        self.best_residual = best_residual
        self.tolerance = tolerance
        super().__init__(
            f"power iteration did not converge on a component of order {order}: "
            f"best residual {best_residual:.3e} > {tolerance:.1e} after {iterations} iterations"
        )


class PreconditionError(WorkbenchError):
    """Hypotheses of the requested operation are not met by the input"""

    error_type = "PreconditionError"

    def __init__(self, operation: str, reason: str, details: Optional[dict] = None):
        self.operation = operation
        self.reason = reason
        self.details = details or {}
        super().__init__(f"{operation}: {reason}")


class BracketError(WorkbenchError):
    """Sign conditions of a root bracket failed"""

    error_type = "BracketError"
