"""Exception hierarchy shared by every stage of the pipeline."""


class ChordColorError(Exception):
    """Base class. ``context`` collects where in the recursion the failure surfaced."""

    def __init__(self, message, **details):
        super().__init__(message)
        self.message = message
        self.details = details
        self.context = []

    def with_context(self, where):
        self.context.append(where)
        return self

    def __str__(self):
        if not self.context:
            return self.message
        return f"{self.message} [at {' <- '.join(self.context)}]"


class UsageError(ChordColorError, ValueError):
    """Bad arguments: unknown chord ids, mismatched colorings, malformed arcs."""


class PreconditionError(ChordColorError):
    """A lemma hypothesis does not hold for the given input.

    ``condition`` names the violated hypothesis, e.g. ``"B-crosses-A-inside-arc"``.
    """

    def __init__(self, message, condition=None, **details):
        super().__init__(message, **details)
        self.condition = condition


class InvariantError(ChordColorError, AssertionError):
    """An internal guarantee failed. Signals a bug or an input outside the theory."""


class K4Error(ChordColorError):
    """The input graph contains a 4-clique; ``witness`` holds its chord ids."""

    def __init__(self, witness):
        super().__init__(f"graph contains K4: chords {sorted(witness)}")
        self.witness = tuple(sorted(witness))


class SizeLimitError(ChordColorError):
    """Exact search refused an instance above the configured vertex cap."""


class ParseError(ChordColorError):
    def __init__(self, message, line=None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


class GenerationError(ChordColorError):
    def __init__(self, message, attempts):
        super().__init__(f"{message} (after {attempts} attempts)")
        self.attempts = attempts
