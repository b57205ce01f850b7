"""Exception hierarchy shared by every module of the package."""


class ModelError(Exception):
    """Base class for all errors raised by :mod:`dlthroughput`."""


class InvalidValue(ModelError, ValueError):
    pass


class DomainError(ModelError, ValueError):
    """A key or argument lies outside its enumerated domain."""


class MissingEntry(ModelError):
    pass


class TableInconsistent(ModelError):
    pass


class Unavailable(ModelError):
    """A PHY configuration the tables mark as not applicable (N/A)."""


class MpduTooLarge(ModelError):
    pass


class MsduTooLarge(ModelError):
    pass


class InfeasiblePlan(ModelError):
    """A concrete A-MPDU plan violates a framing or airtime constraint."""


class Infeasible(ModelError):
    """No plan at all fits the constraints of a configuration."""


class OracleLimit(ModelError):
    pass


class TableParseError(ModelError):
    """Raised with per-line diagnostics when a table file cannot be parsed."""

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))
