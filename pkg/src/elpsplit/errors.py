"""Exception hierarchy shared by all modules."""


class ElpError(Exception):
    """Base class for every error raised by elpsplit."""


class ParseError(ElpError, ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class GroundingError(ElpError, ValueError):
    pass


class NotObjectiveError(ElpError, ValueError):
    """An operation that needs a plain ASP program got subjective literals."""


class InconsistentProgram(ElpError):
    """A constraint is violated by the least model."""


class InvalidSplittingSet(ElpError, ValueError):
    pass


class CapExceeded(ElpError):
    pass


class NotHomogeneous(ElpError, ValueError):
    """A world view mixes both atoms of some interface pair."""


class MalformedCorpus(ElpError, ValueError):
    """A corpus file is not valid JSON or misses required keys."""
