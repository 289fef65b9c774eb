"""Serializers for matrices, HVMs, chains and report tables (DOT, CSV, JSON)."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Any, Sequence

from .core import Category, Lexicon
from .hvm import Chain, Hvm, SensitivityRow
from .implication import ImplicationMatrix, MatrixCell, matrix_row_totals, render_cell
from .report import AttributeValueTable, ElementSummaryRow, Link

EDGE_LABELS = ("direct", "direct_and_indirect")


@dataclass(frozen=True)
class DotOptions:
    show_indirect: bool = False
    rank_by_category: bool = True
    edge_label: str = "direct"

    def __post_init__(self):
        if self.edge_label not in EDGE_LABELS:
            raise ValueError(f"edge_label must be one of {EDGE_LABELS}, got {self.edge_label!r}")


def dumps(data: Any) -> str:
    """Canonical JSON: sorted keys, two-space indent, non-ASCII kept as UTF-8 text."""
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)


def _dot_string(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def _node(element_id: int) -> str:
    return f"n{element_id}"


def to_dot(hvm: Hvm, options: DotOptions | None = None) -> str:
    """Directed-graph DOT text; attributes are ranked at the bottom, values at the top."""
    options = options or DotOptions()
    lex = hvm.lexicon
    out = [
        "digraph hvm {",
        "  rankdir=BT;",
        "  node [shape=box];",
    ]
    for n in hvm.nodes:
        label = f"{lex.label_of(n)} ({n})"
        out.append(f"  {_node(n)} [label={_dot_string(label)}, category={lex.category_of(n).code}];")
    if options.rank_by_category:
        for cat, rank in ((Category.ATTRIBUTE, "min"), (Category.CONSEQUENCE, "same"), (Category.VALUE, "max")):
            members = hvm.layers[cat]
            if members:
                out.append(f"  {{ rank={rank}; {' '.join(_node(n) + ';' for n in members)} }}")
    for e in hvm.edges:
        if options.edge_label == "direct_and_indirect":
            label = render_cell(MatrixCell(e.direct, e.indirect))
        else:
            label = str(e.direct)
        attrs = [f"label={_dot_string(label)}"]
        if options.show_indirect:
            attrs.append(f"xlabel={_dot_string(f'indirect {e.indirect}')}")
        out.append(f"  {_node(e.source)} -> {_node(e.target)} [{', '.join(attrs)}];")
    out.append("}")
    return "\n".join(out) + "\n"


def _csv(rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def matrix_to_csv(matrix: ImplicationMatrix, lexicon: Lexicon) -> str:
    if matrix.element_ids != lexicon.ids:
        raise ValueError("matrix dimension does not match the lexicon")
    rows: list[list[Any]] = [[""] + list(matrix.element_ids)]
    for r, cells in zip(matrix.element_ids, matrix.rows()):
        rows.append([r] + [render_cell(c) for c in cells])
    return _csv(rows)


def matrix_to_json(matrix: ImplicationMatrix, lexicon: Lexicon) -> str:
    totals = matrix_row_totals(matrix)
    return dumps(
        {
            "element_ids": list(matrix.element_ids),
            "cells": [
                {"from": r, "to": c, "direct": cell.direct, "indirect": cell.indirect}
                for r, c, cell in matrix.nonzero()
            ],
            "totals": [
                {
                    "id": i,
                    "label": lexicon.label_of(i),
                    "out_direct": t.out_direct,
                    "out_indirect": t.out_indirect,
                    "in_direct": t.in_direct,
                    "in_indirect": t.in_indirect,
                }
                for i, t in totals.items()
            ],
        }
    )


def matrix_to_text(matrix: ImplicationMatrix, lexicon: Lexicon) -> str:
    """Fixed-width grid with a direct/indirect totals block underneath."""
    ids = matrix.element_ids
    grid = [[render_cell(c) for c in row] for row in matrix.rows()]
    width = max([len(str(i)) for i in ids] + [len(s) for row in grid for s in row] + [1])
    head_w = max([len(str(i)) for i in ids] + [2])
    lines = [" " * head_w + " |" + "".join(" " + str(i).rjust(width) for i in ids)]
    lines.append("-" * len(lines[0]))
    for i, row in zip(ids, grid):
        lines.append(str(i).rjust(head_w) + " |" + "".join(" " + s.rjust(width) for s in row))
    lines.append("")
    lines.append("cells are direct:indirect; empty means no relation")
    lines.append("")
    lines.append("id  out_direct  out_indirect  in_direct  in_indirect  label")
    for i, t in matrix_row_totals(matrix).items():
        lines.append(
            f"{i:>2}  {t.out_direct:>10}  {t.out_indirect:>12}  {t.in_direct:>9}  {t.in_indirect:>11}  {lexicon.label_of(i)}"
        )
    lines.append(f"total direct {matrix.total_direct()}, total indirect {matrix.total_indirect()}")
    return "\n".join(lines) + "\n"


def hvm_to_json(hvm: Hvm) -> str:
    lex = hvm.lexicon
    return dumps(
        {
            "cutoff": hvm.config.cutoff,
            "max_chain_length": hvm.config.max_chain_length,
            "nodes": [
                {"id": n, "label": lex.label_of(n), "category": lex.category_of(n).code}
                for n in hvm.nodes
            ],
            "edges": [
                {"from": e.source, "to": e.target, "direct": e.direct, "indirect": e.indirect}
                for e in hvm.edges
            ],
        }
    )


def hvm_to_csv(hvm: Hvm) -> str:
    lex = hvm.lexicon
    rows: list[list[Any]] = [["from", "to", "from_label", "to_label", "direct", "indirect"]]
    for e in hvm.edges:
        rows.append([e.source, e.target, lex.label_of(e.source), lex.label_of(e.target), e.direct, e.indirect])
    return _csv(rows)


def hvm_to_text(hvm: Hvm) -> str:
    lex = hvm.lexicon
    lines = [f"HVM at cutoff {hvm.config.cutoff}: {len(hvm.nodes)} nodes, {len(hvm.edges)} edges"]
    for cat in (Category.VALUE, Category.CONSEQUENCE, Category.ATTRIBUTE):
        members = ", ".join(f"{lex.label_of(n)} ({n})" for n in hvm.layers[cat])
        lines.append(f"{cat.name.lower()}s: {members or '-'}")
    lines.append("")
    for e in hvm.edges:
        lines.append(
            f"{e.source:>3} -> {e.target:<3} {render_cell(MatrixCell(e.direct, e.indirect)):>7}  "
            f"{lex.label_of(e.source)} -> {lex.label_of(e.target)}"
        )
    return "\n".join(lines) + "\n"


def chain_records(chains: Sequence[Chain], lexicon: Lexicon) -> list[dict]:
    return [
        {"path": list(ch.path), "labels": [lexicon.label_of(i) for i in ch.path], "score": ch.score}
        for ch in chains
    ]


def chains_to_json(chains: Sequence[Chain], lexicon: Lexicon) -> str:
    return dumps(chain_records(chains, lexicon))


def chains_from_json(text: str) -> list[Chain]:
    return [Chain(tuple(d["path"]), d["score"]) for d in json.loads(text)]


def chains_to_csv(chains: Sequence[Chain], lexicon: Lexicon) -> str:
    rows: list[list[Any]] = [["rank", "score", "path", "labels"]]
    for i, ch in enumerate(chains, start=1):
        rows.append([i, ch.score, ">".join(map(str, ch.path)), " > ".join(lexicon.label_of(n) for n in ch.path)])
    return _csv(rows)


def chains_to_text(chains: Sequence[Chain], lexicon: Lexicon) -> str:
    lines = [f"{len(chains)} chains, scored by path_score (sum of direct counts along the path)"]
    for i, ch in enumerate(chains, start=1):
        labels = " > ".join(lexicon.label_of(n) for n in ch.path)
        lines.append(f"{i:>4}. {ch.score:>4}  {'>'.join(map(str, ch.path))}  {labels}")
    return "\n".join(lines) + "\n"


def sensitivity_to_csv(rows: Sequence[SensitivityRow]) -> str:
    return _csv([["cutoff", "edge_count", "percent_direct_retained"]]
                + [[r.cutoff, r.edge_count, f"{r.percent_retained:.1f}"] for r in rows])


def sensitivity_to_json(rows: Sequence[SensitivityRow]) -> str:
    return dumps(
        [{"cutoff": r.cutoff, "edge_count": r.edge_count, "percent_direct_retained": r.percent_retained} for r in rows]
    )


def sensitivity_to_text(rows: Sequence[SensitivityRow]) -> str:
    lines = ["cutoff  edges  % direct retained"]
    lines += [f"{r.cutoff:>6}  {r.edge_count:>5}  {r.percent_retained:>17.1f}" for r in rows]
    return "\n".join(lines) + "\n"


def summary_to_json(
    rows: Sequence[ElementSummaryRow],
    links: Sequence[Link],
    table: AttributeValueTable,
    lexicon: Lexicon,
) -> str:
    return dumps(
        {
            "elements": [
                {"id": r.element.id, "label": r.element.label, "category": r.element.category.code, "count": r.count}
                for r in rows
            ],
            "top_links": [
                {"from": l.source, "to": l.target, "direct": l.direct, "indirect": l.indirect} for l in links
            ],
            "attribute_value_table": {
                "rule": table.rule,
                "attributes": list(table.attributes),
                "values": list(table.values),
                "cells": [
                    {"attribute": a, "value": v, "score": s} for (a, v), s in table.cells.items()
                ],
                "row_totals": {str(a): table.row_total(a) for a in table.attributes},
                "grand_total": table.grand_total,
            },
        }
    )


def element_summary_to_csv(rows: Sequence[ElementSummaryRow]) -> str:
    return _csv([["category", "id", "label", "count"]]
                + [[r.element.category.code, r.element.id, r.element.label, r.count] for r in rows])
