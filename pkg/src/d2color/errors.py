"""Exception hierarchy shared by all modules.

Everything derives from :class:`D2ColorError`; data problems (malformed input,
violated preconditions) derive from :class:`DataError`, which the CLI maps to
exit status 65.  :class:`InternalInconsistency` signals a broken invariant that
a theorem guarantees cannot happen and maps to exit status 70.
"""


class D2ColorError(Exception):
    pass


class DataError(D2ColorError, ValueError):
    pass


# plane_graph
class NonSymmetricAdjacency(DataError):
    def __init__(self, u, v):
        super().__init__(f"{v} is listed as a neighbour of {u} but not vice versa")
        self.u, self.v = u, v


class LoopOrMultiEdge(DataError):
    def __init__(self, u, v):
        kind = "loop" if u == v else "parallel edge"
        super().__init__(f"{kind} {u}-{v}")
        self.u, self.v = u, v


class NonPlanarEmbedding(DataError):
    pass


class Disconnected(DataError):
    pass


class NotCubic(DataError):
    pass


class NotBipartite(DataError):
    pass


class Bridge(DataError):
    def __init__(self, u, v):
        super().__init__(f"edge {u}-{v} is a bridge")
        self.u, self.v = u, v


# coloring
class PaletteMismatch(DataError):
    pass


class EvenD(DataError):
    pass


class NotDistanceTwo(DataError):
    pass


class FaceAdjacencyClash(DataError):
    pass


# exact_solver
class CapExceeded(DataError):
    pass


class BudgetExceeded(D2ColorError):
    pass


# poly_algorithms
class K4Component(DataError):
    pass


class DegreeTooHigh(DataError):
    pass


class PreconditionFailed(DataError):
    pass


class NotTypeTwo(DataError):
    pass


# families
class KTooSmall(DataError):
    pass


class NotGoodey(DataError):
    pass


class NotFourGraph(DataError):
    pass


# reduction
class NotPlanarInput(DataError):
    pass


class InvalidHColoring(DataError):
    pass


# io
class GraphSyntaxError(DataError):
    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InternalInconsistency(D2ColorError, AssertionError):
    pass
