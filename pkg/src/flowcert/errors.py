"""Exception types shared across the package."""

from __future__ import annotations


class ParseError(ValueError):
    """Malformed graph input.  Carries the byte offset of the offending data."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class LimitExceeded(RuntimeError):
    """An exhaustive computation was refused because the input exceeds the
    configured bound.  Never raised silently mid-search: the check happens
    before any work is done, so a result is either exact or absent."""
