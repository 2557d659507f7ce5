"""Parser for the ideal text syntax.

    ideal := gen ("," gen)*
    gen   := term ("*" term)*
    term  := "x" ["^" int] | "y" ["^" int] | "1"

or the tuple form "(a,b), (a,b), ...". Whitespace is ignored everywhere.
"""
import re
from typing import List, Optional, Tuple

from errors import ParseError
from ideal import MonomialIdeal, from_generators

_INT = re.compile(r"\d+")


class _IdealParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> Optional[str]:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def _error(self, expected: str) -> ParseError:
        return ParseError(self.text, self.pos, expected, self._peek())

    def _expect(self, char: str):
        if self._peek() != char:
            raise self._error(f"'{char}'")
        self.pos += 1

    def _integer(self) -> int:
        self._skip()
        match = _INT.match(self.text, self.pos)
        if not match:
            raise self._error("a nonnegative integer")
        self.pos = match.end()
        return int(match.group())

    def parse(self) -> MonomialIdeal:
        if self._peek() == "(":
            gens = self._tuple_list()
        else:
            gens = self._generator_list()
        if self._peek() is not None:
            raise self._error("',' or end of input")
        return from_generators(gens)

    def _generator_list(self) -> List[Tuple[int, int]]:
        gens = [self._generator()]
        while self._peek() == ",":
            self.pos += 1
            gens.append(self._generator())
        return gens

    def _generator(self) -> Tuple[int, int]:
        a, b = self._term()
        while self._peek() == "*":
            self.pos += 1
            da, db = self._term()
            a, b = a + da, b + db
        return a, b

    def _term(self) -> Tuple[int, int]:
        char = self._peek()
        if char in ("x", "y"):
            self.pos += 1
            exponent = 1
            if self._peek() == "^":
                self.pos += 1
                exponent = self._integer()
            return (exponent, 0) if char == "x" else (0, exponent)
        if char == "1" and not _INT.match(self.text, self.pos + 1):
            self.pos += 1
            return 0, 0
        raise self._error("'x', 'y' or '1'")

    def _tuple_list(self) -> List[Tuple[int, int]]:
        gens = [self._pair()]
        while self._peek() == ",":
            self.pos += 1
            gens.append(self._pair())
        return gens

    def _pair(self) -> Tuple[int, int]:
        self._expect("(")
        a = self._integer()
        self._expect(",")
        b = self._integer()
        self._expect(")")
        return a, b


def parse_ideal(text: str) -> MonomialIdeal:
    return _IdealParser(text).parse()


def parse_int_list(text: str) -> List[int]:
    """"3, 5, 8" -> [3, 5, 8], used for semigroup generators."""
    values = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not _INT.fullmatch(chunk):
            position = text.find(chunk) if chunk else len(text)
            raise ParseError(text, max(position, 0), "a nonnegative integer", chunk or None)
        values.append(int(chunk))
    return values
