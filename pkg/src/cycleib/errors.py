"""Exception hierarchy.

Every error carries a stable ``code`` so the command line front end can
report it without string matching.
"""


class LeibnizError(Exception):
    code = "LeibnizError"


class DivisionByZero(LeibnizError, ZeroDivisionError):
    code = "DivisionByZero"


class MixedFields(LeibnizError, ValueError):
    code = "MixedFields"


class BadIndex(LeibnizError, ValueError):
    code = "BadIndex"


class InvalidField(LeibnizError, ValueError):
    code = "InvalidField"


class NotInvertible(LeibnizError):
    code = "NotInvertible"


class NotMonomorphism(LeibnizError):
    code = "NotMonomorphism"


class NotUnipotent(LeibnizError):
    code = "NotUnipotent"


class BadConstantTerm(LeibnizError):
    code = "BadConstantTerm"


class NotInIdeal(LeibnizError):
    code = "NotInIdeal"


class ZeroDiagonal(LeibnizError):
    code = "ZeroDiagonal"


class UnsolvableInCharP(LeibnizError):
    """Raised when ``[d, theta] = target`` has no solution in characteristic p.

    ``indices`` lists the gamma coordinates k with a nonzero target and
    ``k - 1`` divisible by the characteristic.
    """

    code = "UnsolvableInCharP"

    def __init__(self, p, indices):
        self.p = p
        self.indices = tuple(indices)
        where = ", ".join(str(k) for k in self.indices)
        super().__init__(
            f"[d, theta] = target has no solution over GF({p}): "
            f"obstructed at index {where}"
        )


class WindowTooSmall(LeibnizError, ValueError):
    code = "WindowTooSmall"


class DimensionMismatch(LeibnizError, ValueError):
    code = "DimensionMismatch"


class ParseError(LeibnizError, ValueError):
    code = "ParseError"

    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}")
