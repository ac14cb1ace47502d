"""Exception hierarchy shared by every module of the package."""


class PtMaxCutError(Exception):
    """Base class for all errors raised by ptmaxcut."""


class GraphError(PtMaxCutError, ValueError):
    pass


class SelfLoop(GraphError):
    def __init__(self, vertex, line=None):
        self.vertex = vertex
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"self-loop at vertex {vertex}{where}")


class NonPositiveWeight(GraphError):
    pass


class WeightOverflow(GraphError):
    """An edge weight exceeds the 2**32 ingestion cap."""


class VertexOutOfRange(GraphError, IndexError):
    pass


class PreconditionViolated(PtMaxCutError):
    """A reduction rule was applied to a graph where it does not hold."""


class NotALeafBlock(PtMaxCutError):
    pass


class NoEdges(PtMaxCutError):
    pass


class NotUCF(PtMaxCutError):
    """The graph is not a uniform-clique-forest."""


class TooLarge(PtMaxCutError):
    pass


class MalformedPayload(PtMaxCutError):
    pass


class ContractViolated(PtMaxCutError, AssertionError):
    """A constructed cut fell short of the weight it is guaranteed to reach."""


class SubsetNotContained(PtMaxCutError, ValueError):
    pass


class BadParameters(PtMaxCutError, ValueError):
    pass


class ParseError(PtMaxCutError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        # not super(): in SelfLoopInFile that would reach SelfLoop's formatter
        Exception.__init__(self, message)


class SyntaxErrorInGraph(ParseError):
    pass


class BadHeader(ParseError):
    pass


class IdOutOfRange(ParseError):
    pass


class SelfLoopInFile(ParseError, SelfLoop):
    def __init__(self, vertex, line):
        ParseError.__init__(self, f"self-loop at vertex {vertex}", line)
        self.vertex = vertex
