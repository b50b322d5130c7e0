"""Exception hierarchy.

``exit_code`` maps each error onto the CLI convention: 2 for bad input,
3 for an internal invariant violation.
"""


class BorelError(Exception):
    exit_code = 2

    def to_json(self) -> dict:
        return {"error": type(self).__name__, "message": str(self)}


class InputError(BorelError):
    exit_code = 2


class InternalError(BorelError):
    exit_code = 3


class ParseError(InputError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col

    def to_json(self) -> dict:
        d = super().to_json()
        d.update(line=self.line, col=self.col)
        return d


class UnknownVariable(ParseError):
    pass


class NotHomogeneous(InputError):
    pass


class NotStable(InputError):
    pass


class NotArtinian(InputError):
    pass


class NoPurePower(InputError):
    pass


class DegreeBoundTooSmall(InputError):
    pass


class TrialsDisagree(InputError):
    """Random coordinate changes gave different initial ideals.

    Raise the entry bound or the number of trials.
    """


class InconsistentInput(InputError):
    pass


class InconsistentTable(InputError):
    pass


class AsymmetricHilbert(InputError):
    pass


class SumMismatch(InputError):
    pass


class StrictlyIncreasing(InputError):
    pass


class StabilityCheckFailed(InternalError):
    pass


class StabilityViolated(InputError):
    """A reconstruction produced an ideal that fails validation.

    Usually the attested Lefschetz property does not hold for the data.
    """
