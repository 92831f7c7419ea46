"""Exception types shared across the package."""


class StallingsError(Exception):
    """Base class for all errors raised by this package."""


class AlphabetMismatch(StallingsError, ValueError):
    """Two objects were combined that live over different alphabets."""


class PresentationMismatch(StallingsError, ValueError):
    """Two subgroup graphs over different presentations were combined."""


class CosetLimitExceeded(StallingsError):
    """Coset enumeration did not close within the allowed number of cosets.

    The subgroup either has index above the bound or infinite index; the
    enumeration cannot tell the two apart.
    """

    def __init__(self, max_cosets):
        super().__init__(
            f"coset enumeration did not close within {max_cosets} cosets "
            "(index above the bound, or infinite)"
        )
        self.max_cosets = max_cosets


class SearchBudgetExceeded(StallingsError):
    """The backtracking search hit its node budget before finishing."""

    def __init__(self, budget):
        super().__init__(f"search exceeded the node budget of {budget}")
        self.budget = budget


class FulfillmentFailed(StallingsError):
    """A graph fails to close up some relator at some vertex.

    Carries the witness: the vertex, the relator, and the terminus the
    relator path actually reached.
    """

    def __init__(self, vertex, relator, terminus):
        super().__init__(
            f"relator does not close: tracing from vertex {vertex} "
            f"ends at vertex {terminus}"
        )
        self.vertex = vertex
        self.relator = relator
        self.terminus = terminus


class GluingInvalid(StallingsError, ValueError):
    """A gluing or amalgam specification violates its preconditions."""


class ParseError(StallingsError, ValueError):
    """A presentation or graph file failed to parse."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
