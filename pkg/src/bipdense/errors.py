"""Exception hierarchy shared by all modules."""


class BipDenseError(Exception):
    """Base class for every error raised by the package."""


# graph-core
class GraphError(BipDenseError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdgeInSimpleMode(GraphError):
    pass


class NonBipartiteEdge(GraphError):
    pass


class IndexOutOfRange(GraphError):
    pass


# drawing model
class DrawingError(BipDenseError):
    pass


class AdjacentEdgesCross(DrawingError):
    pass


class EdgePairCrossesTwice(DrawingError):
    pass


class SelfCrossing(DrawingError):
    pass


class RotationInconsistent(DrawingError):
    pass


class EulerViolation(DrawingError):
    pass


class HomotopicMultiedge(DrawingError):
    pass


class DegenerateIntersection(DrawingError):
    pass


class RoutingError(DrawingError):
    """A constructive edge route could not be realized in the current drawing."""


# generators
class GeneratorError(BipDenseError):
    pass


class TooFewColumns(GeneratorError):
    pass


class BadCongruence(GeneratorError):
    pass


class BadSize(GeneratorError):
    pass


# analysis
class AnalysisError(BipDenseError):
    pass


class ExactModeTooLarge(AnalysisError):
    pass


class ConfigurationStale(AnalysisError):
    pass


class NotFanPlanar(AnalysisError):
    pass


# bounds
class UnknownFamily(BipDenseError):
    pass


# io
class DrawingFileError(BipDenseError):
    pass


class DrawingSyntaxError(DrawingFileError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"{msg} (line {line}, column {col})")
        self.line = line
        self.col = col


class SchemaError(DrawingFileError):
    def __init__(self, field: str, reason: str):
        super().__init__(f"{field}: {reason}")
        self.field = field
        self.reason = reason


class ValidationError(DrawingFileError):
    def __init__(self, cause: BipDenseError):
        super().__init__(f"{type(cause).__name__}: {cause}")
        self.cause = cause
        self.kind = type(cause).__name__


class LayoutFailure(BipDenseError):
    pass
