"""
Ideal document loader for the text grammar and the JSON exchange format
"""
import json
from pathlib import Path
from typing import Dict, List, Literal, Optional
from pydantic import BaseModel, Field, ValidationError
from algebra.ideal import MonomialIdeal, from_generators, render_ideal
from algebra.monomial import EXPONENT_MAX, Monomial, RingContext
from utils.errors import ParseError


class IdealDocument(BaseModel):
    """
    A parsed ideal file

    `generators` are dense exponent vectors over x1..xn, where n is the
    `vars:` header when present and the largest index seen otherwise.
    """
    vars: Optional[int] = Field(default=None, ge=0)
    generators: List[List[int]]
    source: Literal["text", "json"] = "text"

    @property
    def n(self) -> int:
        if self.vars is not None:
            return self.vars
        return len(self.generators[0]) if self.generators else 0

    def ring(self) -> RingContext:
        return RingContext(self.n)

    def to_ideal(self) -> MonomialIdeal:
        """Canonical ideal; duplicate and divisible generators are dropped here"""
        ring = self.ring()
        return from_generators(ring, [ring.monomial(g) for g in self.generators])

    def to_text(self) -> str:
        """Render in the text grammar with an explicit header"""
        return f"vars: {self.n};\n{render_ideal(self.to_ideal())}\n"


class _Scanner:
    """Character cursor tracking 1-based line and column"""

    def __init__(self, text: str, source: Optional[str]):
        self.text = text
        self.source = source
        self.pos = 0
        self.line = 1
        self.column = 1

    def fail(self, message: str) -> ParseError:
        return ParseError(message, self.line, self.column, self.source)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def advance(self) -> str:
        ch = self.text[self.pos]
        self.pos += 1
        if ch == "\n":
            self.line += 1
            self.column = 1
        else:
            self.column += 1
        return ch

    def skip_space(self):
        while self.pos < len(self.text):
            ch = self.peek()
            if ch == "#":
                while self.peek() not in ("", "\n"):
                    self.advance()
            elif ch.isspace():
                self.advance()
            else:
                break

    def at_end(self) -> bool:
        self.skip_space()
        return self.pos >= len(self.text)

    def accept(self, ch: str) -> bool:
        self.skip_space()
        if self.peek() == ch:
            self.advance()
            return True
        return False

    def expect(self, ch: str):
        if not self.accept(ch):
            found = self.peek() or "end of input"
            raise self.fail(f"expected '{ch}', found '{found}'")

    def word(self) -> str:
        self.skip_space()
        start = self.pos
        while self.peek().isalpha():
            self.advance()
        return self.text[start:self.pos]

    def nat(self) -> int:
        self.skip_space()
        if not self.peek().isdigit():
            found = self.peek() or "end of input"
            raise self.fail(f"expected a natural number, found '{found}'")
        start = self.pos
        while self.peek().isdigit():
            self.advance()
        value = int(self.text[start:self.pos])
        if value > EXPONENT_MAX:
            raise self.fail(f"number {value} exceeds {EXPONENT_MAX}")
        return value


class IdealLoader:
    """Parse ideals and monomials from text, JSON and files"""

    @staticmethod
    def _factor(scanner: _Scanner, powers: Dict[int, int]):
        scanner.skip_space()
        line, column = scanner.line, scanner.column
        if scanner.peek() != "x":
            found = scanner.peek() or "end of input"
            raise scanner.fail(f"expected a variable like x1, found '{found}'")
        scanner.advance()
        index = scanner.nat()
        if index == 0:
            raise ParseError("variable indices start at x1", line, column, scanner.source)
        exponent = scanner.nat() if scanner.accept("^") else 1
        powers[index] = powers.get(index, 0) + exponent

    @staticmethod
    def _generator(scanner: _Scanner) -> Dict[int, int]:
        scanner.skip_space()
        powers: Dict[int, int] = {}
        if scanner.peek() == "1":
            # The unit monomial, as render() prints it.
            scanner.advance()
            return powers
        IdealLoader._factor(scanner, powers)
        while scanner.accept("*"):
            IdealLoader._factor(scanner, powers)
        return powers

    @staticmethod
    def _header(scanner: _Scanner) -> Optional[int]:
        scanner.skip_space()
        if not scanner.text.startswith("vars", scanner.pos):
            return None
        scanner.word()
        scanner.expect(":")
        n = scanner.nat()
        scanner.expect(";")
        return n

    @staticmethod
    def parse_text(text: str, source: Optional[str] = None) -> IdealDocument:
        """
        Parse the text grammar

        ideal := generator (',' generator)*, generator := factor ('*' factor)*,
        factor := 'x' NAT ('^' NAT)?, with an optional `vars: NAT;` header.
        Whitespace is insignificant and '#' starts a comment.

        Args:
            text: Document text
            source: File name used in diagnostics

        Returns:
            IdealDocument with dense exponent vectors

        Raises:
            ParseError: on a syntax error, x0, or an index above the header
        """
        scanner = _Scanner(text, source)
        declared = IdealLoader._header(scanner)
        parsed = [IdealLoader._generator(scanner)]
        while scanner.accept(","):
            parsed.append(IdealLoader._generator(scanner))
        if not scanner.at_end():
            raise scanner.fail(f"unexpected '{scanner.peek()}'")
        seen = max((i for powers in parsed for i in powers), default=0)
        n = declared if declared is not None else seen
        if seen > n:
            raise ParseError(f"x{seen} exceeds the declared vars: {n}", 1, 1, source)
        vectors = []
        for powers in parsed:
            exps = [0] * n
            for i, e in powers.items():
                exps[i - 1] = e
            vectors.append(exps)
        return IdealDocument(vars=declared, generators=vectors, source="text")

    @staticmethod
    def parse_json(text: str, source: Optional[str] = None) -> IdealDocument:
        """Parse {"vars": n, "generators": [[e1, ..., en], ...]}"""
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(e.msg, e.lineno, e.colno, source) from e
        if not isinstance(data, dict) or "vars" not in data:
            raise ParseError("JSON ideal needs 'vars' and 'generators'", 1, 1, source)
        try:
            doc = IdealDocument(vars=data["vars"], generators=data.get("generators", []), source="json")
        except ValidationError as e:
            raise ParseError(str(e.errors()[0]["msg"]), 1, 1, source) from e
        for k, g in enumerate(doc.generators, start=1):
            if len(g) != doc.vars:
                raise ParseError(f"generator {k} has {len(g)} exponents, expected {doc.vars}", 1, 1, source)
            if any(e < 0 or e > EXPONENT_MAX for e in g):
                raise ParseError(f"generator {k} has an exponent outside 0..{EXPONENT_MAX}", 1, 1, source)
        return doc

    @staticmethod
    def parse_monomial(text: str, ring: RingContext) -> Monomial:
        """
        Parse a single monomial such as x2^4*x3^4 in the given ring

        Raises:
            ParseError: on a syntax error or a variable outside the ring
        """
        scanner = _Scanner(text, None)
        powers = IdealLoader._generator(scanner)
        if not scanner.at_end():
            raise scanner.fail(f"unexpected '{scanner.peek()}'")
        if powers and max(powers) > ring.n:
            raise ParseError(f"x{max(powers)} outside x1..x{ring.n}", 1, 1, None)
        return ring.from_powers(powers)

    @staticmethod
    def load_file(file_path: str) -> IdealDocument:
        """
        Auto-detect and load an ideal file (.json or the text grammar)

        Raises:
            FileNotFoundError: if the file does not exist
            ParseError: on malformed content
        """
        path = Path(file_path)
        return IdealLoader.parse_document(path.read_text(encoding="utf-8"), path.name)

    @staticmethod
    def parse_document(text: str, file_name: str) -> IdealDocument:
        """Dispatch on the file suffix: JSON for .json, the text grammar otherwise"""
        if Path(file_name).suffix.lower() == ".json":
            return IdealLoader.parse_json(text, file_name)
        return IdealLoader.parse_text(text, file_name)
