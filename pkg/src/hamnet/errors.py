"""Exception types shared across the package."""
from __future__ import annotations


class HamnetError(Exception):
    pass


class PreconditionViolation(HamnetError, ValueError):
    """An input does not satisfy an operation's documented precondition."""


class Disconnected(PreconditionViolation):
    pass


class NotClawNetFree(PreconditionViolation):
    """Input contains an induced claw or net; ``certificate`` holds it when known."""

    def __init__(self, message: str, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class NotAChain(HamnetError):
    """Block tree is not a path; ``end_blocks`` lists its end-blocks."""

    def __init__(self, message: str, end_blocks=(), witness=frozenset()):
        super().__init__(message)
        self.end_blocks = list(end_blocks)
        self.witness = frozenset(witness)


class InternalError(HamnetError, AssertionError):
    """A constructed witness failed validation; indicates a bug."""
