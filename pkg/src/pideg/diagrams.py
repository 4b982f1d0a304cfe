"""Rectangular black/white diagrams, partitions and Plucker indices.

A diagram is an m x n grid whose cells are either white or black. White
cells are the generators of the associated quantum affine space; black
cells are deleted generators. Everything downstream (pipe dreams, the
commutation matrix, PI degrees) is built on top of this module.

Conventions used throughout the package:

- cells are addressed (row, col), 1-indexed, row 1 at the TOP;
- white squares are enumerated row by row, left to right, labels 1..N;
- text form uses '.' for white and '#' for black, one row per line.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .errors import (
    BadRange,
    BoxOutsideShape,
    EmptyInput,
    RaggedRows,
    ShapeOverflow,
    UnknownCharacter,
)

WHITE_CHAR = "."
BLACK_CHAR = "#"


@dataclass(frozen=True)
class Diagram:
    """An m x n grid of cells; cells[r][c] is True when the cell is white.

    The zero-size diagram (m = n = 0) is allowed and behaves as the empty
    board: no white squares, empty commutation matrix, identity toric
    permutation on the empty set.
    """

    cells: tuple[tuple[bool, ...], ...]

    def __post_init__(self) -> None:
        widths = {len(row) for row in self.cells}
        assert len(widths) <= 1, "internal: ragged diagram rows"

    @property
    def m(self) -> int:
        return len(self.cells)

    @property
    def n(self) -> int:
        return len(self.cells[0]) if self.cells else 0

    @property
    def shape(self) -> tuple[int, int]:
        return (self.m, self.n)

    def is_white(self, row: int, col: int) -> bool:
        """Whiteness of cell (row, col), 1-indexed from the top left."""
        if not (1 <= row <= self.m and 1 <= col <= self.n):
            raise BadRange(f"cell ({row}, {col}) outside {self.m}x{self.n} diagram")
        return self.cells[row - 1][col - 1]

    @cached_property
    def white_squares(self) -> tuple[tuple[int, int], ...]:
        """Positions of white cells in row-major order; index k-1 has label k."""
        return tuple(
            (r, c)
            for r in range(1, self.m + 1)
            for c in range(1, self.n + 1)
            if self.cells[r - 1][c - 1]
        )

    @property
    def white_count(self) -> int:
        return len(self.white_squares)

    def to_text(self) -> str:
        return "\n".join(
            "".join(WHITE_CHAR if cell else BLACK_CHAR for cell in row)
            for row in self.cells
        )

    def __str__(self) -> str:
        return self.to_text()


def diagram_from_text(text: str, white: str = WHITE_CHAR, black: str = BLACK_CHAR) -> Diagram:
    """Parse a diagram from its text form.

    Lines are rows; `white` and `black` are the single characters used for
    the two cell kinds. Leading/trailing blank lines and per-line trailing
    whitespace are ignored; interior rows must all have the same width.
    """
    if len(white) != 1 or len(black) != 1 or white == black:
        raise BadRange("white and black markers must be distinct single characters")
    lines = [line.rstrip() for line in text.splitlines()]
    while lines and not lines[0]:
        lines.pop(0)
    while lines and not lines[-1]:
        lines.pop()
    if not lines:
        raise EmptyInput("no diagram rows in input")
    width = len(lines[0])
    rows = []
    for i, line in enumerate(lines, start=1):
        if len(line) != width:
            raise RaggedRows(f"row {i} has length {len(line)}, expected {width}")
        row = []
        for j, ch in enumerate(line, start=1):
            if ch == white:
                row.append(True)
            elif ch == black:
                row.append(False)
            else:
                raise UnknownCharacter(f"row {i}, column {j}: unexpected character {ch!r}")
        rows.append(tuple(row))
    if width == 0:
        raise EmptyInput("diagram rows contain no cells")
    return Diagram(tuple(rows))


def all_black(m: int, n: int) -> Diagram:
    _check_dims(m, n)
    return Diagram(tuple(tuple(False for _ in range(n)) for _ in range(m)))


def all_white(m: int, n: int) -> Diagram:
    _check_dims(m, n)
    return Diagram(tuple(tuple(True for _ in range(n)) for _ in range(m)))


def _check_dims(m: int, n: int) -> None:
    if m < 0 or n < 0:
        raise BadRange(f"diagram dimensions must be nonnegative, got {m}x{n}")
    if (m == 0) != (n == 0):
        raise BadRange("only the 0x0 diagram may have a zero dimension")


def is_cauchon_le(d: Diagram) -> bool:
    """Whether every black cell has its full column above or full row left black.

    This is the combinatorial condition singling out the diagrams that index
    torus-invariant prime quotients; none of the machinery here requires it,
    but callers may want to know.
    """
    for r in range(1, d.m + 1):
        for c in range(1, d.n + 1):
            if d.is_white(r, c):
                continue
            col_above_black = all(not d.is_white(i, c) for i in range(1, r))
            row_left_black = all(not d.is_white(r, j) for j in range(1, c))
            if not (col_above_black or row_left_black):
                return False
    return True


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive parts with a bounding box.

    `box_m` and `box_n` give the ambient rectangle; they default to the
    tight box (number of parts, largest part). Trailing zero parts are
    stripped on construction, so the empty partition is parts = ().
    """

    parts: tuple[int, ...]
    box_m: int = field(default=-1)
    box_n: int = field(default=-1)

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)
        for i, p in enumerate(parts):
            if p < 0:
                raise BadRange(f"partition parts must be nonnegative, got {p}")
            if i > 0 and parts[i - 1] < p:
                raise BadRange(f"partition parts must weakly decrease: {parts}")
        box_m = len(parts) if self.box_m < 0 else self.box_m
        box_n = (parts[0] if parts else 0) if self.box_n < 0 else self.box_n
        object.__setattr__(self, "box_m", box_m)
        object.__setattr__(self, "box_n", box_n)
        if len(parts) > box_m or (parts and parts[0] > box_n):
            raise ShapeOverflow(
                f"partition {parts} does not fit in a {box_m}x{box_n} box"
            )

    @property
    def size(self) -> int:
        return sum(self.parts)

    def padded(self) -> tuple[int, ...]:
        """Parts padded with zeros to box_m entries."""
        return self.parts + (0,) * (self.box_m - len(self.parts))

    def __str__(self) -> str:
        inner = ",".join(str(p) for p in self.parts)
        return f"({inner})"


def young_diagram(shape: Partition, black_boxes: tuple[tuple[int, int], ...] = ()) -> Diagram:
    """Diagram of the Young shape inside its box, with optional black boxes.

    Cells inside the shape are white unless listed in `black_boxes`
    ((row, col) pairs, 1-indexed, which must lie inside the shape);
    cells of the box outside the shape are black.
    """
    m, n = shape.box_m, shape.box_n
    padded = shape.padded()
    black = set(black_boxes)
    for r, c in black:
        if not (1 <= r <= m) or not (1 <= c <= padded[r - 1]):
            raise BoxOutsideShape(f"box ({r}, {c}) lies outside the shape {shape}")
    if m == 0 or n == 0:
        return Diagram(())
    rows = tuple(
        tuple(c <= padded[r - 1] and (r, c) not in black for c in range(1, n + 1))
        for r in range(1, m + 1)
    )
    return Diagram(rows)


def determinantal_diagram(n: int, t: int) -> Diagram:
    """The n x n board whose last t rows and last t columns are white.

    These boards encode quantum determinantal rings (n x n quantum matrices
    modulo the ideal of (t+1) x (t+1) quantum minors). Requires 1 <= t <= n-1.
    """
    if not (1 <= t <= n - 1):
        raise BadRange(f"need 1 <= t <= n-1, got n = {n}, t = {t}")
    rows = tuple(
        tuple(r > n - t or c > n - t for c in range(1, n + 1))
        for r in range(1, n + 1)
    )
    return Diagram(rows)


@dataclass(frozen=True)
class PluckerIndex:
    """A strictly increasing m-subset gamma of {1, ..., n}.

    Indexes a Plucker coordinate on the Grassmannian of m-planes in n-space,
    equivalently a Schubert cell.
    """

    gamma: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        g = tuple(self.gamma)
        object.__setattr__(self, "gamma", g)
        if not g:
            raise BadRange("gamma must be a nonempty index set")
        if g[0] < 1 or g[-1] > self.n:
            raise BadRange(f"gamma entries must lie in 1..{self.n}: {g}")
        if any(g[i] >= g[i + 1] for i in range(len(g) - 1)):
            raise BadRange(f"gamma must be strictly increasing: {g}")

    @property
    def m(self) -> int:
        return len(self.gamma)


def partition_from_plucker(idx: PluckerIndex) -> Partition:
    """The Young shape lambda(gamma) in the m x (n-m) box.

    lambda_i = (n - m) - (gamma_i - i); strict increase of gamma makes this
    weakly decreasing, and fitting in the box is automatic.
    """
    m, n = idx.m, idx.n
    parts = tuple((n - m) - (g - i) for i, g in enumerate(idx.gamma, start=1))
    return Partition(parts, box_m=m, box_n=n - m)


def plucker_from_partition(shape: Partition) -> PluckerIndex:
    """Inverse of partition_from_plucker on the shape's own box."""
    m, n = shape.box_m, shape.box_m + shape.box_n
    padded = shape.padded()
    gamma = tuple(i + (n - m) - padded[i - 1] for i in range(1, m + 1))
    return PluckerIndex(gamma, n)
