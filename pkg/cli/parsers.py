"""
Text formats: scheme v1, fusion v1, group v1, morphism v1, matrix v1

All formats are line oriented with '#' comments and whitespace-separated tokens.
Errors carry 1-based line and column numbers.
"""
import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from exactlin import Mat, parse_rational
from fusion import FusionData
from scheme import ClassMatrix, IntersectionTensor, SchemeError
from transform import MatMorphismFamily, MatObject

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"\S+")


class ParseError(ValueError):
    """Malformed input text, located by line and column"""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        location = f"line {line}, column {column}: " if line else ""
        super().__init__(f"{location}{message}")
        self.reason = message


def read_text(path) -> str:
    """Whole file as UTF-8 text; unreadable or undecodable files are parse errors"""
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror or e}") from e
    except UnicodeDecodeError as e:
        prefix = e.object[: e.start]
        line = prefix.count(b"\n") + 1
        column = e.start - (prefix.rfind(b"\n") + 1) + 1
        raise ParseError(f"{path} is not valid UTF-8 ({e.reason})", line, column) from e


@dataclass(frozen=True)
class Token:
    text: str
    line: int
    column: int


@dataclass(frozen=True)
class Line:
    number: int
    tokens: Tuple[Token, ...]

    @property
    def keyword(self) -> str:
        return self.tokens[0].text

    def error(self, message: str, index: int = 0) -> ParseError:
        token = self.tokens[min(index, len(self.tokens) - 1)]
        return ParseError(message, token.line, token.column)


def tokenize(text: str) -> List[Line]:
    """Significant lines with their tokens; comments and blank lines dropped"""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        tokens = tuple(Token(m.group(), number, m.start() + 1) for m in _TOKEN.finditer(content))
        if tokens:
            lines.append(Line(number, tokens))
    return lines


def _expect_header(lines: List[Line], kind: str) -> Iterator[Line]:
    if not lines:
        raise ParseError(f"empty input, expected header '{kind} v1'", 1, 1)
    header = lines[0]
    if [t.text for t in header.tokens] != [kind, "v1"]:
        raise header.error(f"expected header '{kind} v1'")
    return iter(lines[1:])


def _int(token: Token, what: str, minimum: int = 0) -> int:
    try:
        value = int(token.text)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token.text!r}", token.line, token.column) from None
    if value < minimum:
        raise ParseError(f"{what} must be >= {minimum}, got {value}", token.line, token.column)
    return value


def _arity(line: Line, count: int, usage: str) -> None:
    if len(line.tokens) != count:
        raise line.error(f"expected '{usage}'", min(len(line.tokens), count))


def _int_rows(rows: Sequence[Line], width: int, what: str) -> List[List[int]]:
    values = []
    for row in rows:
        if len(row.tokens) != width:
            raise row.error(f"row has {len(row.tokens)} entries, expected {width}", min(len(row.tokens), width))
        values.append([_int(token, what) for token in row.tokens])
    return values


# -- scheme v1 ------------------------------------------------------------

def parse_scheme(text: str) -> ClassMatrix:
    """Header, 'points <n>', then 'matrix' followed by n rows of n class indices"""
    lines = _expect_header(tokenize(text), "scheme")
    points: Optional[int] = None
    matrix_line: Optional[Line] = None
    rows: List[Line] = []
    for line in lines:
        if matrix_line is not None:
            rows.append(line)
        elif line.keyword == "points":
            _arity(line, 2, "points <n>")
            points = _int(line.tokens[1], "point count", 1)
        elif line.keyword == "matrix":
            _arity(line, 1, "matrix")
            if points is None:
                raise line.error("'matrix' before 'points'")
            matrix_line = line
        else:
            raise line.error(f"unknown keyword {line.keyword!r}")
    if points is None:
        raise ParseError("missing 'points' line", 1, 1)
    if matrix_line is None:
        raise ParseError("missing 'matrix' section", 1, 1)
    if not rows:
        raise matrix_line.error("no rows")
    if len(rows) > points:
        raise rows[points].error(f"more than {points} matrix rows")
    cells = _int_rows(rows, points, "class index")
    if len(cells) < points:
        raise ParseError(f"matrix has {len(cells)} rows, expected {points}", rows[-1].number + 1, 1)
    try:
        cm = ClassMatrix(tuple(tuple(row) for row in cells))
    except SchemeError as e:
        raise matrix_line.error(str(e)) from e
    logger.info(f"parsed scheme with {cm.n} points and {cm.m} classes")
    return cm


# -- group v1 -------------------------------------------------------------

def parse_group_table(text: str) -> List[List[int]]:
    """Header 'group v1' then the Cayley table rows: row a, column b holds a.b"""
    rows = list(_expect_header(tokenize(text), "group"))
    if not rows:
        raise ParseError("no rows", 1, 1)
    return _int_rows(rows, len(rows), "element")


# -- fusion v1 ------------------------------------------------------------

def parse_fusion(text: str) -> FusionData:
    """objects, unit, optional dual lines, N lines of nonzero multiplicities, optional autofill_unit"""
    lines = _expect_header(tokenize(text), "fusion")
    names: Optional[Tuple[str, ...]] = None
    unit: Optional[int] = None
    dual: Dict[int, int] = {}
    entries: Dict[Tuple[int, int, int], Tuple[int, Line]] = {}
    autofill = False

    def lookup(token: Token) -> int:
        if names is None:
            raise ParseError("'objects' must come first", token.line, token.column)
        if token.text not in names:
            raise ParseError(f"unknown object {token.text!r}", token.line, token.column)
        return names.index(token.text)

    for line in lines:
        keyword = line.keyword
        if keyword == "objects":
            if names is not None:
                raise line.error("duplicate 'objects' line")
            if len(line.tokens) < 2:
                raise line.error("'objects' needs at least one name")
            names = tuple(t.text for t in line.tokens[1:])
            if len(set(names)) != len(names):
                raise line.error("duplicate object name")
        elif keyword == "unit":
            _arity(line, 2, "unit <name>")
            unit = lookup(line.tokens[1])
        elif keyword == "dual":
            _arity(line, 3, "dual <name> <name>")
            x, y = lookup(line.tokens[1]), lookup(line.tokens[2])
            if dual.get(x, y) != y:
                raise line.error(f"conflicting dual for {names[x]!r}", 2)
            dual[x] = y
        elif keyword == "N":
            _arity(line, 5, "N <x> <y> <z> <multiplicity>")
            triple = tuple(lookup(t) for t in line.tokens[1:4])
            value = _int(line.tokens[4], "multiplicity")
            if triple in entries and entries[triple][0] != value:
                first = entries[triple][1]
                raise line.error(
                    f"conflicting multiplicity for N {' '.join(names[i] for i in triple)}: "
                    f"{entries[triple][0]} on line {first.number}, {value} here",
                    4,
                )
            entries[triple] = (value, line)
        elif keyword == "autofill_unit":
            _arity(line, 2, "autofill_unit true|false")
            if line.tokens[1].text not in ("true", "false"):
                raise line.error("autofill_unit takes true or false", 1)
            autofill = line.tokens[1].text == "true"
        else:
            raise line.error(f"unknown keyword {keyword!r}")

    if names is None:
        raise ParseError("missing 'objects' line", 1, 1)
    if unit is None:
        raise ParseError("missing 'unit' declaration", 1, 1)
    m = len(names)
    values = np.zeros((m, m, m), dtype=object)
    for triple, (value, _) in entries.items():
        values[triple] = value
    if autofill:
        for x in range(m):
            values[unit, x, x] = max(values[unit, x, x], 1)
            values[x, unit, x] = max(values[x, unit, x], 1)
    # an undeclared object is dual to whatever declared it, else to itself
    implied = {y: x for x, y in dual.items()}
    data = FusionData(
        names=names,
        unit=unit,
        dual=tuple(dual.get(x, implied.get(x, x)) for x in range(m)),
        tensor=IntersectionTensor(values),
    )
    logger.info(f"parsed fusion data with {m} objects and {len(entries)} entries")
    return data


# -- matrix v1 ------------------------------------------------------------

def parse_matrix(text: str) -> MatObject:
    """Header 'matrix v1' then rows of non-negative dimensions"""
    rows = list(_expect_header(tokenize(text), "matrix"))
    if not rows:
        raise ParseError("no rows", 1, 1)
    return MatObject.from_rows(_int_rows(rows, len(rows[0].tokens), "dimension"))


# -- morphism v1 ----------------------------------------------------------

def parse_morphism(text: str, source: MatObject, target: MatObject) -> MatMorphismFamily:
    """Blocks 'M <x> <y> [<r>x<c>]' each followed by r rows of c rationals.

    Missing cells are zero matrices of the shape the grids dictate; a declared shape
    must agree with target(x,y) x source(x,y).
    """
    lines = list(_expect_header(tokenize(text), "morphism"))
    rows, cols = source.shape
    blocks: Dict[Tuple[int, int], Mat] = {}
    i = 0
    while i < len(lines):
        line = lines[i]
        if line.keyword != "M":
            raise line.error(f"expected 'M <x> <y>', got {line.keyword!r}")
        if len(line.tokens) not in (3, 4):
            raise line.error("expected 'M <x> <y> [<r>x<c>]'", min(len(line.tokens), 4))
        x = _int(line.tokens[1], "row index")
        y = _int(line.tokens[2], "column index")
        if x >= rows or y >= cols:
            raise line.error(f"cell ({x},{y}) outside the {rows}x{cols} grid", 1)
        if (x, y) in blocks:
            raise line.error(f"duplicate block for cell ({x},{y})")
        shape = (target[x, y], source[x, y])
        if len(line.tokens) == 4:
            declared = re.fullmatch(r"(\d+)x(\d+)", line.tokens[3].text)
            if declared is None:
                raise line.error("shape must be written <r>x<c>", 3)
            if (int(declared.group(1)), int(declared.group(2))) != shape:
                raise line.error(f"cell ({x},{y}) must be {shape[0]}x{shape[1]}", 3)
        body = lines[i + 1:i + 1 + shape[0]]
        if len(body) < shape[0] or any(b.keyword == "M" for b in body):
            raise line.error(f"cell ({x},{y}) needs {shape[0]} rows")
        entries = []
        for row in body:
            if len(row.tokens) != shape[1]:
                raise row.error(f"row has {len(row.tokens)} entries, expected {shape[1]}", min(len(row.tokens), shape[1]))
            try:
                entries.append([parse_rational(t.text) for t in row.tokens])
            except ValueError as e:
                raise row.error(str(e)) from e
        blocks[(x, y)] = Mat.from_rows(entries, cols=shape[1])
        i += 1 + shape[0]
    mats = tuple(
        tuple(blocks.get((x, y), Mat.zeros(target[x, y], source[x, y])) for y in range(cols))
        for x in range(rows)
    )
    return MatMorphismFamily(source, target, mats)
