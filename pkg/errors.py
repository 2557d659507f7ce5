from typing import Optional


class RatliffRushError(Exception):
    """Base class for every domain error raised by the library."""


# --- semigroup ---

class EmptySemigroup(RatliffRushError):
    pass


class NotAMember(RatliffRushError):
    def __init__(self, semigroup, value: int):
        super().__init__(f"{value} does not belong to {semigroup}")
        self.semigroup = semigroup
        self.value = value


class NoRepresentation(RatliffRushError):
    pass


class AlphaOutOfRange(RatliffRushError):
    pass


# --- ideals ---

class ZeroDivisor(RatliffRushError):
    pass


class ZeroIdeal(RatliffRushError):
    pass


class NotPrimary(RatliffRushError):
    pass


# --- closures ---

class WrongClass(RatliffRushError):
    pass


class BadBound(RatliffRushError):
    pass


class NotCertified(RatliffRushError):
    pass


class BadParameters(RatliffRushError):
    pass


class SearchExhausted(RatliffRushError):
    pass


# --- input ---

class ParseError(RatliffRushError):
    def __init__(self, text: str, position: int, expected: str, found: Optional[str] = None):
        found_text = repr(found) if found else "end of input"
        super().__init__(f"at position {position}: expected {expected}, found {found_text}")
        self.text = text
        self.position = position
        self.expected = expected
        self.found = found

    def pointer(self) -> str:
        """The offending input with a caret under the error position."""
        return f"{self.text}\n{' ' * self.position}^"
