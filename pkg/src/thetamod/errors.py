"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class PrecisionUnreachableError(ValueError):
    """The requested tolerance cannot be certified within the term cap.

    Carries the tightest bound that *is* achievable so callers can retry
    with a realistic tolerance.
    """

    def __init__(self, requested: float, achievable: float, cap: int):
        self.requested = requested
        self.achievable = achievable
        self.cap = cap
        super().__init__(
            f"cannot certify tolerance {requested:g} within {cap} terms; "
            f"achievable bound is {achievable:g}"
        )
