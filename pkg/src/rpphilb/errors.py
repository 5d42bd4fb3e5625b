"""Shared error types.

Domain errors carry a machine-readable code plus the offending input so the
CLI can emit structured error objects (exit code 1).  Cap errors mean a
configured search or enumeration budget ran out, not that the input was bad
(exit code 2).
"""

from __future__ import annotations


class DomainError(Exception):
    """Invalid input or an unsatisfiable request."""

    exit_code = 1

    def __init__(self, code: str, message: str, offending_input=None):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.message = message
        self.offending_input = offending_input

    def as_json(self) -> dict:
        off = self.offending_input
        if off is not None and not isinstance(off, (str, int, float, list, dict, bool)):
            off = str(off)
        return {"code": self.code, "message": self.message, "offending_input": off}


class CapExceeded(DomainError):
    """A configured cap or budget was exhausted before the answer was found."""

    exit_code = 2
