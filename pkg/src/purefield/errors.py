"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the domain of an operation (zero where nonzero needed, wrong sizes)."""


class NotInvertibleError(DomainError):
    pass


class RankError(DomainError):
    pass


class HypothesisViolation(ValueError):
    """A pair (n, a) that does not satisfy the hypotheses of the construction.

    ``code`` is one of ``CODES`` and is what the CLI reports.
    """

    CODES = ("degree", "unit-radicand", "excluded-prime", "reducible", "nth-power",
             "not-squarefree", "not-congruent")

    def __init__(self, code, reason):
        assert code in self.CODES, code
        super().__init__(reason)
        self.code = code
        self.reason = reason
