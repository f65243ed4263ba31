"""Exception classes.  Everything derives from ``SkewBraceError`` (a ValueError)."""


class SkewBraceError(ValueError):
    pass


# group tables


class GroupTableError(SkewBraceError):
    pass


class NotSquare(GroupTableError):
    pass


class NotClosed(GroupTableError):
    pass


class NoIdentityAtZero(GroupTableError):
    pass


class NoInverse(GroupTableError):
    pass


class NotAssociative(GroupTableError):
    pass


class NotAPermutation(SkewBraceError):
    pass


class NotAHomomorphism(SkewBraceError):
    pass


class NotAnAction(SkewBraceError):
    pass


class NotASubgroup(SkewBraceError):
    pass


# braces


class DotNotGroup(SkewBraceError):
    pass


class CircNotGroup(SkewBraceError):
    pass


class BraceAxiomFails(SkewBraceError):
    def __init__(self, x: int, y: int, z: int):
        super().__init__(
            f"x o (y . z) != (x o y) . x^-1 . (x o z) at (x, y, z) = ({x}, {y}, {z})"
        )
        self.triple = (x, y, z)


class NotAnIdeal(SkewBraceError):
    pass


# semidirect products


class SpecInvalid(SkewBraceError):
    pass


class NotAdmissible(SkewBraceError):
    def __init__(self, report):
        super().__init__(str(report))
        self.report = report


class PhiNotAnAction(SkewBraceError):
    pass


class BadComplementPair(SkewBraceError):
    pass


class NotInternalSdp(SkewBraceError):
    pass


# regular subgroups


class NotRegular(SkewBraceError):
    pass


class NotNormalized(SkewBraceError):
    pass


class NotATransversal(SkewBraceError):
    pass


# enumeration


class OrderGuardExceeded(SkewBraceError):
    pass


class BadPrimes(SkewBraceError):
    pass


class CircMismatch(SkewBraceError):
    pass


# files


class FormatError(SkewBraceError):
    """Malformed input file (bad JSON, missing keys, wrong shapes)."""
