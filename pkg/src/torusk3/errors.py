"""Exception hierarchy shared by all modules."""


class TorusK3Error(Exception):
    """Base class for computational errors (CLI exit code 1)."""


class InputError(TorusK3Error):
    """Malformed input document (CLI exit code 2)."""


class DegenerateInput(TorusK3Error):
    pass


class OriginNotInterior(TorusK3Error):
    pass


class NotAFace(TorusK3Error):
    pass


class NotInLattice(TorusK3Error):
    pass


class NegativeExponent(TorusK3Error):
    pass


class RankOutOfRange(TorusK3Error):
    pass


class RankMismatch(TorusK3Error):
    pass


class Degenerate(TorusK3Error):
    """A Gram matrix with zero determinant where a non-degenerate one is required."""


class DegreeMismatch(TorusK3Error):
    pass


class NotIsolated(TorusK3Error):
    pass


class NotSingular(TorusK3Error):
    pass


class CommonComponent(TorusK3Error):
    pass
