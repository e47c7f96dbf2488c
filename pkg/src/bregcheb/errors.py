"""Exception types shared across the package."""


class DomainError(ValueError):
    """A point lies outside the domain required by the operation."""


class NonConvergence(RuntimeError):
    """A solver hit its iteration budget without meeting its gap target.

    Carries the best certificate found so far in ``certificate``.
    """

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate
