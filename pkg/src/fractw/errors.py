"""Exception hierarchy shared by every module."""


class FractwError(Exception):
    pass


class InsufficientMeasure(FractwError, ValueError):
    pass


class TooLarge(FractwError):
    """An exact search was asked to run past its configured size guard."""


SizeGuard = TooLarge


class BadParams(FractwError, ValueError):
    pass


class BadRange(BadParams):
    pass


class ParseError(FractwError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class WitnessInvalid(FractwError, ValueError):
    pass


class CliqueTooLarge(FractwError, ValueError):
    pass


class MissingBase(FractwError, KeyError):
    pass


class PaletteExhausted(FractwError, RuntimeError):
    """Greedy Alice ran out of palette colors; this indicates a bug."""


class ClaimViolated(FractwError, RuntimeError):
    """A gadget vertex overlapping v_i by at most 1/q could not be found."""


class NoExtension(FractwError, RuntimeError):
    pass


# Referee errors: an illegal move by one of the players.
class RefereeError(FractwError):
    pass


class NotAClique(RefereeError):
    pass


class BlueCliqueViolation(RefereeError):
    pass


class GameOver(RefereeError):
    pass


class OutOfTurn(RefereeError):
    pass


class IllegalColoring(RefereeError):
    pass


class WrongMeasure(IllegalColoring):
    pass


class BlueConflict(IllegalColoring):
    pass


class Forfeit(FractwError):
    """A strategy made an illegal move; the game is aborted."""

    def __init__(self, player, cause):
        self.player = player
        self.cause = cause
        super().__init__(f"{player} forfeits: {type(cause).__name__}: {cause}")
