"""Exception hierarchy.  ``exit_code`` is what the command line returns."""


class AddactError(Exception):
    exit_code = 10


class FormatError(AddactError, ValueError):
    """Malformed input document."""

    exit_code = 3


class NotLocal(AddactError):
    exit_code = 4

    def __init__(self, radical_dim: int, dim: int):
        self.radical_dim = radical_dim
        self.dim = dim
        super().__init__(
            f"algebra is not local: radical has dimension {radical_dim}, expected {dim - 1}"
        )


class ElementNotInMaximalIdeal(AddactError, ValueError):
    exit_code = 5


class InfiniteQuotient(AddactError, ValueError):
    exit_code = 6


class BoundExceeded(AddactError):
    exit_code = 7


class NotAmple(AddactError, ValueError):
    exit_code = 8


class NZero(AddactError, ValueError):
    exit_code = 9


class NonCommuting(AddactError):
    exit_code = 11

    def __init__(self, i: int, j: int):
        self.pair = (i, j)
        super().__init__(f"operators {i} and {j} do not commute")


class NotNilpotent(AddactError):
    exit_code = 12


class GenerationDefect(AddactError):
    exit_code = 13


class NotMonomialSPair(AddactError):
    exit_code = 14


class SurfaceMismatch(AddactError, ValueError):
    exit_code = 15


class PointNotOnVariety(AddactError, ValueError):
    exit_code = 16


class NotTwoGenerated(AddactError):
    exit_code = 17


EXIT_CODES = {
    0: "success",
    1: "verify-paper: at least one criterion failed",
    2: "command-line usage error",
    3: "input file missing or malformed (FormatError)",
    4: "algebra is not local (NotLocal)",
    5: "element outside the maximal ideal",
    6: "monomial ideal has an infinite-dimensional quotient",
    7: "search bound exceeded (see ADDACT_MAX_DIM)",
    8: "divisor is not ample (NotAmple)",
    9: "twisted action requested on the surface with n = 0 (NZero)",
    10: "other library error",
    11: "operators do not commute",
    12: "operator is not nilpotent",
    13: "operators are linearly dependent (GenerationDefect)",
    14: "S-pair is not a monomial S-pair",
    15: "divisors live on different surfaces",
    16: "point does not lie on the variety",
    17: "algebra is not generated by two elements",
}
