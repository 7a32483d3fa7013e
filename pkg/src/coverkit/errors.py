"""Error types shared across the engine.

Most validation failures are ValueError subclasses so callers that do not
care about the fine-grained type can still catch the builtin.
"""


class EngineError(Exception):
    """Base for everything raised by this package on purpose."""


class DegenerateRayError(EngineError, ValueError):
    """A direction was requested between two coincident points."""


class InvalidPolygonError(EngineError, ValueError):
    """Polygon apex list is too short or not convex."""


class InvalidCoverError(EngineError, ValueError):
    """Cover node ids are not the positions of the nodes."""


class InvalidRingError(EngineError, ValueError):
    """Ring radii do not satisfy 0 < r_inner < r_outer."""


class InvalidHoleError(EngineError, ValueError):
    """A hole does not fit its area or is not a convex polygon."""


class DuplicateObjectError(EngineError, ValueError):
    """The same object was registered with a mover twice."""


class EmptyInputError(EngineError, ValueError):
    """An operation that needs at least one element got none."""


class MoverStateError(EngineError, RuntimeError):
    """Catch/move/release called out of order."""


class ScenarioError(EngineError):
    """Parse or execution failure of a scripted scenario.

    Carries the 1-based line number of the offending command.
    """

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message
