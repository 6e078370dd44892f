class DlctError(Exception):
    """Base class for errors raised by this package."""


class ParameterError(DlctError, ValueError):
    pass


class GridMismatchError(DlctError, ValueError):
    pass


class NotHermitianError(DlctError, ValueError):
    pass


class QuadratureError(DlctError, ValueError):
    pass


class FormatError(DlctError, ValueError):
    pass
