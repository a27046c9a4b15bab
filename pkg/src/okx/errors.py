"""Exception hierarchy.  Every error raised by the package derives from OkxError."""


class OkxError(Exception):
    pass


class GeometryError(OkxError):
    """Malformed surface data."""


class SignatureError(GeometryError):
    pass


class AmpleClassError(GeometryError):
    pass


class LabelError(GeometryError):
    pass


class DimensionError(OkxError, ValueError):
    pass


class UnknownCurve(OkxError, KeyError):
    pass


class NotPseudoeffective(OkxError):
    pass


class NotBig(OkxError):
    pass


class NotNef(OkxError):
    pass


class SupportError(OkxError):
    """The negative-part support has a singular or non-negative-definite Gram matrix."""


class InadmissibleFlag(OkxError):
    pass


class IsolatedPoint(OkxError):
    pass


class StabilizationError(OkxError):
    pass


class OrthantViolation(OkxError):
    pass


class ParameterError(OkxError, ValueError):
    pass


class LPError(OkxError):
    pass
