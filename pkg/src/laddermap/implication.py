"""Direct and indirect relations between ladder elements, and the implication matrix."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import Corpus, Ladder


class RelationKind(enum.Enum):
    DIRECT = "direct"
    INDIRECT = "indirect"


@dataclass(frozen=True)
class RelationPair:
    source: int
    target: int
    kind: RelationKind


def direct_pairs(ladder: Ladder) -> list[RelationPair]:
    steps = ladder.steps
    return [
        RelationPair(steps[i], steps[i + 1], RelationKind.DIRECT) for i in range(len(steps) - 1)
    ]


def indirect_pairs(ladder: Ladder) -> list[RelationPair]:
    """All forward pairs at least two steps apart, ordered by (i, j)."""
    steps = ladder.steps
    n = len(steps)
    return [
        RelationPair(steps[i], steps[j], RelationKind.INDIRECT)
        for i in range(n)
        for j in range(i + 2, n)
    ]


@dataclass(frozen=True)
class MatrixCell:
    direct: int = 0
    indirect: int = 0

    @property
    def is_empty(self) -> bool:
        return self.direct == 0 and self.indirect == 0

    def __add__(self, other: "MatrixCell") -> "MatrixCell":
        return MatrixCell(self.direct + other.direct, self.indirect + other.indirect)


EMPTY_CELL = MatrixCell()


class ImplicationMatrix:
    """Square grid of (direct, indirect) counts indexed by (row=from, column=to).

    Only non-empty cells are stored; any other cell of the grid reads as empty.
    """

    __slots__ = ("element_ids", "_cells")

    def __init__(self, element_ids: Iterable[int], cells: dict[tuple[int, int], MatrixCell] | None = None):
        self.element_ids = tuple(sorted(set(element_ids)))
        known = set(self.element_ids)
        self._cells: dict[tuple[int, int], MatrixCell] = {}
        for (r, c), cell in sorted((cells or {}).items()):
            if r not in known or c not in known:
                raise KeyError(f"cell ({r}, {c}) lies outside the matrix")
            if r == c and not cell.is_empty:
                raise ValueError(f"diagonal cell ({r}, {r}) must be empty")
            if not cell.is_empty:
                self._cells[(r, c)] = cell

    @property
    def size(self) -> int:
        return len(self.element_ids)

    def cell(self, row: int, column: int) -> MatrixCell:
        if row not in self.element_ids or column not in self.element_ids:
            raise KeyError(f"cell ({row}, {column}) lies outside the matrix")
        return self._cells.get((row, column), EMPTY_CELL)

    def __getitem__(self, key: tuple[int, int]) -> MatrixCell:
        return self.cell(*key)

    def nonzero(self) -> Iterator[tuple[int, int, MatrixCell]]:
        """Non-empty cells in ascending (row, column) order."""
        for (r, c), cell in self._cells.items():
            yield r, c, cell

    def rows(self) -> list[list[MatrixCell]]:
        return [[self._cells.get((r, c), EMPTY_CELL) for c in self.element_ids] for r in self.element_ids]

    def total_direct(self) -> int:
        return sum(cell.direct for cell in self._cells.values())

    def total_indirect(self) -> int:
        return sum(cell.indirect for cell in self._cells.values())

    def __add__(self, other: "ImplicationMatrix") -> "ImplicationMatrix":
        cells = dict(self._cells)
        for key, cell in other._cells.items():
            cells[key] = cells.get(key, EMPTY_CELL) + cell
        return ImplicationMatrix(set(self.element_ids) | set(other.element_ids), cells)

    def __eq__(self, other):
        if not isinstance(other, ImplicationMatrix):
            return NotImplemented
        return self.element_ids == other.element_ids and self._cells == other._cells

    def __repr__(self):
        return f"ImplicationMatrix({self.size}x{self.size}, {len(self._cells)} non-empty cells)"


def ladder_matrix_cells(ladder: Ladder) -> dict[tuple[int, int], MatrixCell]:
    cells: dict[tuple[int, int], MatrixCell] = {}
    for pair in direct_pairs(ladder):
        key = (pair.source, pair.target)
        cells[key] = cells.get(key, EMPTY_CELL) + MatrixCell(1, 0)
    for pair in indirect_pairs(ladder):
        key = (pair.source, pair.target)
        cells[key] = cells.get(key, EMPTY_CELL) + MatrixCell(0, 1)
    return cells


def build_matrix(corpus: Corpus) -> ImplicationMatrix:
    cells: dict[tuple[int, int], MatrixCell] = {}
    for ladder in corpus.ladders:
        for key, cell in ladder_matrix_cells(ladder).items():
            cells[key] = cells.get(key, EMPTY_CELL) + cell
    return ImplicationMatrix(corpus.lexicon.ids, cells)


def render_cell(cell: MatrixCell) -> str:
    """Text form used in matrix tables: ``17:01`` style, empty for an empty cell."""
    if cell.is_empty:
        return ""
    return f"{cell.direct}:{cell.indirect:02d}"


@dataclass(frozen=True)
class ElementTotals:
    out_direct: int = 0
    out_indirect: int = 0
    in_direct: int = 0
    in_indirect: int = 0


def matrix_row_totals(matrix: ImplicationMatrix) -> dict[int, ElementTotals]:
    acc = {i: [0, 0, 0, 0] for i in matrix.element_ids}
    for r, c, cell in matrix.nonzero():
        acc[r][0] += cell.direct
        acc[r][1] += cell.indirect
        acc[c][2] += cell.direct
        acc[c][3] += cell.indirect
    return {i: ElementTotals(*t) for i, t in acc.items()}
