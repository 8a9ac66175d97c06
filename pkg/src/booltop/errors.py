"""Exception hierarchy.

Domain errors carry a short machine-readable ``reason`` and a payload dict so
the CLI can report them as JSON.
"""


class BooltopError(Exception):
    """Base class for every error raised by the package."""


class DomainError(BooltopError):
    reason = "DomainError"

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details

    def to_dict(self) -> dict:
        return {"error": self.reason, "message": str(self), **self.details}


class NotCuttable(DomainError):
    reason = "NotCuttable"


class NotCircular(DomainError):
    reason = "NotCircular"


class NotProjective(DomainError):
    reason = "NotProjective"


class InvalidAutomaton(DomainError):
    reason = "InvalidAutomaton"


class SizeLimit(DomainError):
    reason = "SizeLimit"


class LimitExceeded(DomainError):
    reason = "LimitExceeded"

    def __init__(self, message: str, count: int, **details):
        super().__init__(message, count=count, **details)
        self.count = count


class AlphabetMismatch(BooltopError):
    pass


class RegexSyntaxError(BooltopError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class UnknownLetter(RegexSyntaxError):
    pass
