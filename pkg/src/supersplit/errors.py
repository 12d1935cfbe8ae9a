class SupersplitError(ValueError):
    """Base class for input errors (CLI exit code 1)."""


class ArityError(SupersplitError):
    pass


class LaurentError(SupersplitError):
    pass


class ParityError(SupersplitError):
    pass


class WeightError(SupersplitError):
    pass


class ParseError(SupersplitError):
    def __init__(self, message: str, position: int = -1, line: int = 0, column: int = 0):
        self.message = message
        self.position = position
        self.line = line
        self.column = column
        where = ""
        if line:
            where = f"line {line}, column {column}: "
        elif position >= 0:
            where = f"position {position}: "
        super().__init__(where + message)


class JobError(SupersplitError):
    def __init__(self, message: str, line: int = 0, block: str = ""):
        self.line = line
        self.block = block
        prefix = f"[{block}] " if block else ""
        if line:
            prefix += f"line {line}: "
        super().__init__(prefix + message)


class ConsistencyError(AssertionError):
    """An internal cross-check failed (CLI exit code 2)."""
