"""Summary tables: element frequencies, attribute x value scores, top links."""

from __future__ import annotations

import csv
import os
from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Sequence, TextIO

from .core import Category, Corpus, Element, Lexicon
from .hvm import Hvm, enumerate_chains, reach_score, subgraph_score
from .implication import ImplicationMatrix, MatrixCell, render_cell
from .ingest import ParseDiagnostic, ParseError, _lines, _skip

SCORE_RULES = ("path_max", "subgraph", "reach")

RULE_DESCRIPTIONS = {
    "path_max": "highest path_score over simple attribute-to-value chains",
    "subgraph": "sum over edges lying on any simple attribute-to-value path",
    "reach": "sum over all edges reachable from the attribute",
}


@dataclass(frozen=True)
class ElementSummaryRow:
    element: Element
    count: int


def element_summary(corpus: Corpus) -> list[ElementSummaryRow]:
    """Occurrence count of every lexicon element, grouped A, C, V; busiest first."""
    counts = Counter(step for ladder in corpus.ladders for step in ladder.steps)
    rows = [ElementSummaryRow(el, counts.get(el.id, 0)) for el in corpus.lexicon]
    rows.sort(key=lambda r: (r.element.category.rank, -r.count, r.element.id))
    return rows


@dataclass(frozen=True)
class AttributeValueTable:
    rule: str
    attributes: tuple[int, ...]
    values: tuple[int, ...]
    cells: Mapping[tuple[int, int], int]

    def cell(self, attribute: int, value: int) -> int:
        return self.cells.get((attribute, value), 0)

    def row_total(self, attribute: int) -> int:
        return sum(self.cell(attribute, v) for v in self.values)

    def column_total(self, value: int) -> int:
        return sum(self.cell(a, value) for a in self.attributes)

    @property
    def grand_total(self) -> int:
        return sum(self.cells.values())

    def percent(self, attribute: int) -> float:
        total = self.grand_total
        return 100.0 * self.row_total(attribute) / total if total else 0.0

    def column_percent(self, value: int) -> float:
        total = self.grand_total
        return 100.0 * self.column_total(value) / total if total else 0.0


def attribute_value_table(hvm: Hvm, rule: str = "path_max") -> AttributeValueTable:
    if rule not in SCORE_RULES:
        raise ValueError(f"unknown score rule {rule!r}; expected one of {', '.join(SCORE_RULES)}")
    attributes = hvm.layers[Category.ATTRIBUTE]
    values = hvm.layers[Category.VALUE]
    cells: dict[tuple[int, int], int] = {}
    if rule == "path_max":
        for chain in enumerate_chains(hvm):
            key = (chain.path[0], chain.path[-1])
            cells[key] = max(cells.get(key, 0), chain.score)
    else:
        score = subgraph_score if rule == "subgraph" else reach_score
        for a in attributes:
            for v in values:
                s = score(hvm, a, v)
                if s:
                    cells[(a, v)] = s
    row_total = {a: sum(cells.get((a, v), 0) for v in values) for a in attributes}
    ordered = tuple(sorted(attributes, key=lambda a: (-row_total[a], a)))
    return AttributeValueTable(rule, ordered, values, dict(sorted(cells.items())))


@dataclass(frozen=True)
class Link:
    source: int
    target: int
    direct: int
    indirect: int


def top_links(matrix: ImplicationMatrix, n: int) -> list[Link]:
    """The ``n`` cells with the most direct relations, ties by ascending (from, to)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    links = [Link(r, c, cell.direct, cell.indirect) for r, c, cell in matrix.nonzero() if cell.direct > 0]
    links.sort(key=lambda l: (-l.direct, l.source, l.target))
    return links[:n]


def parse_value_groups(source: TextIO | str | bytes, lexicon: Lexicon, name: str = "<value-groups>") -> dict[str, tuple[int, ...]]:
    """Read a ``group,value_id`` CSV mapping values to named column groups.

    Groups keep their first-seen order; each value may belong to one group.
    """
    groups: dict[str, list[int]] = {}
    owner: dict[int, str] = {}
    diagnostics = []
    for lineno, line in enumerate(_lines(source, name), start=1):
        if _skip(line):
            continue
        fields = [f.strip() for f in next(csv.reader([line]))]
        if fields == ["group", "value_id"]:
            continue
        if len(fields) != 2 or not fields[0]:
            diagnostics.append(ParseDiagnostic(name, lineno, "expected 'group,value_id'"))
            continue
        group, raw = fields
        try:
            vid = int(raw)
        except ValueError:
            diagnostics.append(ParseDiagnostic(name, lineno, f"value id {raw!r} is not an integer"))
            continue
        if vid not in lexicon or lexicon.category_of(vid) is not Category.VALUE:
            diagnostics.append(ParseDiagnostic(name, lineno, f"element {vid} is not a value in the lexicon"))
        elif vid in owner:
            diagnostics.append(ParseDiagnostic(name, lineno, f"value {vid} already in group {owner[vid]!r}"))
        else:
            owner[vid] = group
            groups.setdefault(group, []).append(vid)
    if diagnostics:
        raise ParseError(diagnostics)
    return {g: tuple(ids) for g, ids in groups.items()}


def read_value_groups(path: str | os.PathLike, lexicon: Lexicon) -> dict[str, tuple[int, ...]]:
    with open(path, "rb") as fh:
        return parse_value_groups(fh.read(), lexicon, os.fspath(path))


# -- plain-text rendering ---------------------------------------------------

def _table(header: Sequence[str], rows: Sequence[Sequence[str]], align: str) -> str:
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]

    def fmt(cells):
        out = []
        for cell, w, a in zip(cells, widths, align):
            out.append(cell.ljust(w) if a == "l" else cell.rjust(w))
        return "  ".join(out).rstrip()

    lines = [fmt(header), "  ".join("-" * w for w in widths)]
    lines += [fmt(r) for r in rows]
    return "\n".join(lines) + "\n"


def render_element_summary(rows: Sequence[ElementSummaryRow]) -> str:
    body = [
        [r.element.category.code, str(r.element.id), r.element.label, str(r.count)] for r in rows
    ]
    return _table(["cat", "id", "label", "count"], body, "lrlr")


def render_top_links(links: Sequence[Link], lexicon: Lexicon) -> str:
    body = [
        [str(i), f"{l.source} -> {l.target}", f"{lexicon.label_of(l.source)} -> {lexicon.label_of(l.target)}",
         str(l.direct), str(l.indirect), render_cell_for(l)]
        for i, l in enumerate(links, start=1)
    ]
    return _table(["rank", "link", "labels", "direct", "indirect", "cell"], body, "rllrrr")


def render_cell_for(link: Link) -> str:
    return render_cell(MatrixCell(link.direct, link.indirect))


def render_attribute_value_table(
    table: AttributeValueTable,
    lexicon: Lexicon,
    groups: Mapping[str, Sequence[int]] | None = None,
) -> str:
    """Attribute rows against value columns, with row totals and share of the grand total.

    With ``groups`` the value columns are arranged per group, each followed by
    a subtotal column; values not named in any group are gathered last.
    """
    columns: list[tuple[str, list[int]]] = []
    if groups:
        placed = set()
        for name, ids in groups.items():
            ids = [v for v in ids if v in table.values]
            for v in ids:
                columns.append((lexicon.label_of(v), [v]))
            columns.append((f"{name} total", ids))
            placed.update(ids)
        rest = [v for v in table.values if v not in placed]
        for v in rest:
            columns.append((lexicon.label_of(v), [v]))
    else:
        columns = [(lexicon.label_of(v), [v]) for v in table.values]

    header = ["attribute"] + [c[0] for c in columns] + ["total", "%"]
    body = []
    for a in table.attributes:
        row = [lexicon.label_of(a)]
        for _, ids in columns:
            val = sum(table.cell(a, v) for v in ids)
            row.append(str(val) if val or len(ids) > 1 else "")
        row += [str(table.row_total(a)), f"{table.percent(a):.1f}"]
        body.append(row)
    footer = ["total"] + [str(sum(table.column_total(v) for v in ids)) for _, ids in columns]
    footer += [str(table.grand_total), "100.0" if table.grand_total else "0.0"]
    body.append(footer)
    title = f"score rule: {table.rule} ({RULE_DESCRIPTIONS[table.rule]})\n"
    return title + _table(header, body, "l" + "r" * (len(header) - 1))
