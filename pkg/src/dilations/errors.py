"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed textual input (graph6, edge list, hypergraph text, spec strings)."""


class CapacityError(ValueError):
    """Input exceeds a documented size limit (e.g. more than 64 graph vertices)."""


class DomainError(ValueError):
    """Parameter outside the validity range of a generator or operation."""


class ConstraintError(ValueError):
    """A dilation spec violates the block-size constraints for some edge."""


class WitnessError(ValueError):
    """A witness object is inconsistent with the graph/hypergraph it describes."""


class StructuralError(ValueError):
    """Inputs structurally incompatible (e.g. edge-count mismatch in Berge checks)."""


class FeasibilityError(ValueError):
    """No object of the requested class exists for the given parameters."""


class SearchBudgetExceeded(RuntimeError):
    """An exact search hit its node cap before proving optimality.

    Carries the best bound found so far and the number of nodes expanded.
    """

    def __init__(self, message: str, best_bound=None, node_count: int = 0):
        super().__init__(message)
        self.best_bound = best_bound
        self.node_count = node_count
