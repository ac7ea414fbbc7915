"""Exception types shared across the planner stack."""


class BlockplanError(Exception):
    """Base class for all planner errors."""


class DimensionMismatch(BlockplanError):
    """Matrix/vector shapes in a problem description are inconsistent."""


class NotPsd(BlockplanError):
    """Cost curvature matrix failed the positive-semidefinite check."""


class IterationLimit(BlockplanError):
    """Solver hit its iteration cap; carries the best (non-certified) iterate."""

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class UnknownBlock(BlockplanError):
    """An action or query referenced a block id not present in the world."""


class DegenerateModel(BlockplanError):
    """The action has a fixed target: there is no free placement to optimize.

    Carries the fixed point so the caller can run a feasibility check instead.
    """

    def __init__(self, point):
        super().__init__("action target is fixed; check feasibility instead")
        self.point = tuple(float(v) for v in point)


class NodeBudgetExceeded(BlockplanError):
    """Branch-and-bound (or the task search) ran out of node budget."""

    def __init__(self, message, nodes=0):
        super().__init__(message)
        self.nodes = nodes


class InapplicableAction(BlockplanError):
    """Symbolic precondition violated; names the failed predicate."""

    def __init__(self, precondition, detail=""):
        msg = precondition if not detail else f"{precondition}: {detail}"
        super().__init__(msg)
        self.precondition = precondition


class AlreadySatisfied(BlockplanError):
    """The queried goal holds already; no action is needed."""


class NoConflict(BlockplanError):
    """Subgoal reasoning was invoked on an action that is actually feasible."""


class CycleDetected(BlockplanError):
    """Task graph construction revisited the same proposal; no progress possible."""


class PlannerInfeasible(BlockplanError):
    """Certified geometric infeasibility: no placement exists for a required action."""


class GenerationExhausted(BlockplanError):
    """Instance generator could not find a collision-free layout within its retry cap."""


class Inapplicable(BlockplanError):
    """Disturbance kind cannot be applied to the current world."""


class Exhausted(BlockplanError):
    """Brute-force oracle limits exceeded (instance too large)."""


class InvalidInput(BlockplanError):
    """Malformed document or request."""
