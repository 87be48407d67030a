"""Exception hierarchy shared by all krongr modules."""


class KronError(Exception):
    """Base class for every error raised by krongr."""


class PreconditionError(KronError, ValueError):
    """An argument violates the documented precondition of an operation."""


class OrbitEscape(KronError):
    """A Coxeter step left the positive cone (fell off through a projective or injective)."""


class NegativeEntry(KronError):
    """A closed-form dimension vector has a negative coordinate."""


class NotARoot(KronError):
    """A dimension vector is neither a real nor an imaginary root."""


class InternalContradiction(KronError):
    """A real root matched neither the preprojective nor the preinjective sequence."""


class BudgetExceeded(KronError):
    """An enumeration would exceed its configured budget.

    ``needed`` carries the estimate that triggered the refusal (node count for
    lattices, ``dim End`` for Fitting enumeration) so callers can retry.
    """

    def __init__(self, what: str, needed: int, budget: int):
        super().__init__(f"{what}: needs {needed}, budget is {budget}")
        self.what = what
        self.needed = needed
        self.budget = budget


class NotIndecomposable(KronError):
    """An operation that requires an indecomposable representation got a decomposable one."""


class SchemaError(KronError, ValueError):
    """Serialized input does not match the documented schema."""
