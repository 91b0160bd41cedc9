"""Exception hierarchy shared by every module of the package."""


class KSchurError(ValueError):
    """Base class; every error carries a one-line reason in ``str(exc)``."""


class CellOutsideShape(KSchurError):
    pass


class OutOfRange(KSchurError):
    pass


class NotKBounded(KSchurError):
    pass


class NotACore(KSchurError):
    pass


class LevelMismatch(KSchurError):
    pass


class NotContained(KSchurError):
    pass


class RankOutOfRange(KSchurError):
    pass


class NotDivisible(KSchurError):
    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class BaseNotInRectangle(KSchurError):
    pass


class PreconditionViolated(KSchurError):
    pass


class UnknownStatement(KSchurError):
    pass


class BadBetaSequence(KSchurError):
    pass
