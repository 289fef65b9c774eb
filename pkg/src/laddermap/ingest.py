"""Reading and writing corpus files.

Lexicon files are CSV with the header ``id,label,category`` where the category
is one of ``A``, ``C`` or ``V``.  Ladder files hold one ladder per line as
``respondent;id>id>...>id``.  In both formats blank lines and lines starting
with ``#`` are ignored.
"""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass
from typing import Iterable, TextIO

from .core import Category, Corpus, CorpusError, Element, Ladder, Lexicon, normalize_label, validate_ladder

LEXICON_HEADER = ["id", "label", "category"]


@dataclass(frozen=True)
class ParseDiagnostic:
    file: str
    line: int
    message: str

    def __str__(self):
        return f"{self.file}:{self.line}: {self.message}"


class ParseError(ValueError):
    """Raised when an input file produced one or more diagnostics."""

    def __init__(self, diagnostics: Iterable[ParseDiagnostic]):
        self.diagnostics = list(diagnostics)
        first = self.diagnostics[0] if self.diagnostics else "no diagnostics"
        more = len(self.diagnostics) - 1
        super().__init__(f"{first}" + (f" (and {more} more)" if more > 0 else ""))


def _lines(source: TextIO | str | bytes, name: str) -> list[str]:
    if isinstance(source, bytes):
        source = decode_utf8(source, name)
    text = source if isinstance(source, str) else source.read()
    # splitlines() would also break on form feeds and unicode separators
    text = text.replace("\r\n", "\n").replace("\r", "\n")
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return lines


def decode_utf8(data: bytes, name: str) -> str:
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        line = data.count(b"\n", 0, exc.start) + 1
        raise ParseError([ParseDiagnostic(name, line, "input is not valid UTF-8")]) from None
    return text.removeprefix("﻿")


def _skip(line: str) -> bool:
    stripped = line.strip()
    return not stripped or stripped.startswith("#")


def parse_lexicon(source: TextIO | str | bytes, name: str = "<lexicon>") -> Lexicon:
    diagnostics: list[ParseDiagnostic] = []
    elements: list[Element] = []
    seen_ids: dict[int, int] = {}
    seen_labels: dict[str, int] = {}
    header_seen = False

    for lineno, line in enumerate(_lines(source, name), start=1):
        if _skip(line):
            continue
        try:
            fields = next(csv.reader([line], strict=True))
        except csv.Error as exc:
            diagnostics.append(ParseDiagnostic(name, lineno, f"malformed CSV: {exc}"))
            continue
        if not header_seen:
            header_seen = True
            if [f.strip() for f in fields] != LEXICON_HEADER:
                diagnostics.append(
                    ParseDiagnostic(name, lineno, "expected header 'id,label,category'")
                )
            continue
        if len(fields) != 3:
            diagnostics.append(
                ParseDiagnostic(name, lineno, f"expected 3 fields, found {len(fields)}")
            )
            continue

        raw_id, label, code = (f.strip() for f in fields)
        problems = []
        try:
            element_id = int(raw_id)
        except ValueError:
            element_id = None
            problems.append(f"id {raw_id!r} is not an integer")
        else:
            if element_id < 1:
                problems.append(f"id {element_id} is not positive")
            elif element_id in seen_ids:
                problems.append(f"duplicate id {element_id} (first on line {seen_ids[element_id]})")
        if not label:
            problems.append("empty label")
        elif normalize_label(label) in seen_labels:
            problems.append(
                f"duplicate label {label!r} (first on line {seen_labels[normalize_label(label)]})"
            )
        try:
            category = Category.from_code(code)
        except ValueError as exc:
            problems.append(str(exc))

        if problems:
            diagnostics.append(ParseDiagnostic(name, lineno, "; ".join(problems)))
            continue
        seen_ids[element_id] = lineno
        seen_labels[normalize_label(label)] = lineno
        elements.append(Element(element_id, label, category))

    if not header_seen:
        diagnostics.append(ParseDiagnostic(name, 1, "missing header 'id,label,category'"))
    if diagnostics:
        raise ParseError(diagnostics)
    return Lexicon(elements)


def parse_ladder_line(line: str, lexicon: Lexicon) -> tuple[Ladder | None, list[str]]:
    respondent, sep, body = line.strip().rpartition(";")
    if not sep:
        return None, ["expected 'respondent;id>id>...'"]
    respondent = respondent.strip()
    problems = []
    if not respondent:
        problems.append("empty respondent")
    steps = []
    for token in body.split(">"):
        token = token.strip()
        try:
            steps.append(int(token))
        except ValueError:
            problems.append(f"step {token!r} is not an integer")
    if problems:
        return None, problems
    ladder = Ladder(respondent, tuple(steps))
    problems = [v.reason for v in validate_ladder(ladder, lexicon)]
    return (None if problems else ladder), problems


def parse_ladders(
    source: TextIO | str | bytes, lexicon: Lexicon, name: str = "<ladders>"
) -> list[Ladder]:
    diagnostics = []
    ladders = []
    for lineno, line in enumerate(_lines(source, name), start=1):
        if _skip(line):
            continue
        ladder, problems = parse_ladder_line(line, lexicon)
        if problems:
            diagnostics.append(ParseDiagnostic(name, lineno, "; ".join(problems)))
        else:
            ladders.append(ladder)
    if diagnostics:
        raise ParseError(diagnostics)
    return ladders


def _read_bytes(path: str | os.PathLike) -> bytes:
    with open(path, "rb") as fh:
        return fh.read()


def read_lexicon(path: str | os.PathLike) -> Lexicon:
    return parse_lexicon(_read_bytes(path), os.fspath(path))


def load_corpus(lexicon_path: str | os.PathLike, ladders_path: str | os.PathLike) -> Corpus:
    lexicon = read_lexicon(lexicon_path)
    ladders = parse_ladders(_read_bytes(ladders_path), lexicon, os.fspath(ladders_path))
    if not ladders:
        raise ParseError([ParseDiagnostic(os.fspath(ladders_path), 1, "no ladders found")])
    return Corpus(lexicon, ladders)


def corpus_to_dict(corpus: Corpus) -> dict:
    return {
        "elements": [
            {"id": el.id, "label": el.label, "category": el.category.code}
            for el in corpus.lexicon
        ],
        "ladders": [
            {"respondent": ladder.respondent, "steps": list(ladder.steps)}
            for ladder in corpus.ladders
        ],
    }


def write_corpus_json(corpus: Corpus) -> str:
    return json.dumps(corpus_to_dict(corpus), indent=2, sort_keys=True, ensure_ascii=False)


def read_corpus_json(text: str) -> Corpus:
    data = json.loads(text)
    try:
        lexicon = Lexicon(
            Element(e["id"], e["label"], Category.from_code(e["category"]))
            for e in data["elements"]
        )
        ladders = [Ladder(d["respondent"], tuple(d["steps"])) for d in data["ladders"]]
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, CorpusError):
            raise
        raise CorpusError(f"malformed corpus JSON: {exc}") from None
    return Corpus(lexicon, ladders)


def write_lexicon_csv(lexicon: Lexicon) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(LEXICON_HEADER)
    for el in lexicon:
        writer.writerow([el.id, el.label, el.category.code])
    return buf.getvalue()


def write_ladders_text(ladders: Iterable[Ladder]) -> str:
    return "".join(
        f"{ladder.respondent};{'>'.join(map(str, ladder.steps))}\n" for ladder in ladders
    )
