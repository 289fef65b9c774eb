"""Command-line entry point: ``laddermap <command> LEXICON LADDERS [options]``."""

from __future__ import annotations

import argparse
import os
import sys
import tempfile

from . import __version__
from .core import Corpus, CorpusError, validate_ladder
from .export import (
    DotOptions,
    chains_to_csv,
    chains_to_json,
    chains_to_text,
    dumps,
    element_summary_to_csv,
    hvm_to_csv,
    hvm_to_json,
    hvm_to_text,
    matrix_to_csv,
    matrix_to_json,
    matrix_to_text,
    sensitivity_to_csv,
    sensitivity_to_json,
    sensitivity_to_text,
    summary_to_json,
    to_dot,
)
from .hvm import DEFAULT_CUTOFF, DEFAULT_MAX_CHAIN_LENGTH, HvmConfig, build_hvm, cutoff_sensitivity, enumerate_chains
from .implication import build_matrix
from .ingest import ParseError, load_corpus
from .report import (
    RULE_DESCRIPTIONS,
    SCORE_RULES,
    attribute_value_table,
    element_summary,
    render_attribute_value_table,
    render_element_summary,
    render_top_links,
    top_links,
)

FORMATS = {
    "validate": ("text", "json"),
    "summarize": ("text", "csv", "json"),
    "matrix": ("text", "csv", "json"),
    "hvm": ("text", "csv", "json", "dot"),
    "chains": ("text", "csv", "json"),
    "sensitivity": ("text", "csv", "json"),
}

CUTOFF_HELP = (
    "minimum number of direct relations a link needs to enter the map "
    f"(default: {DEFAULT_CUTOFF}, the customary laddering convention of keeping links "
    "with at least four direct relations, after Henneberg et al. 2009)"
)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} is not >= 1")
    return value


def _chain_length(text: str) -> int:
    value = _positive_int(text)
    if value < 2:
        raise argparse.ArgumentTypeError("a chain needs at least 2 nodes")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="laddermap",
        description="Means-end chain analysis of coded laddering interviews.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("lexicon", help="lexicon CSV with header id,label,category")
    common.add_argument("ladders", help="ladder file, one 'respondent;id>id>...' per line")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of standard output")

    cutoff = argparse.ArgumentParser(add_help=False)
    cutoff.add_argument("--cutoff", type=_positive_int, default=DEFAULT_CUTOFF, help=CUTOFF_HELP)
    cutoff.add_argument(
        "--max-chain-length", type=_chain_length, default=DEFAULT_MAX_CHAIN_LENGTH,
        help=f"longest chain, in elements, to enumerate (default: {DEFAULT_MAX_CHAIN_LENGTH})",
    )

    def add(name, help_text, parents, formats):
        p = sub.add_parser(name, help=help_text, description=help_text, parents=parents)
        p.add_argument(
            "--format", choices=formats, default="text",
            help=f"output format (default: text; one of {', '.join(formats)})",
        )
        return p

    p = add("validate", "check a corpus and report its size", [common], FORMATS["validate"])
    p.add_argument("--strict", action="store_true",
                   help="also require every ladder to run attribute -> ... -> value with strictly rising category (default: off)")

    p = add("summarize", "element frequencies, top links and the attribute x value table",
            [common, cutoff], FORMATS["summarize"])
    p.add_argument("--score-rule", choices=SCORE_RULES, default="path_max",
                   help="how attribute x value cells are scored (default: path_max); "
                   + "; ".join(f"{k}: {v}" for k, v in RULE_DESCRIPTIONS.items()))
    p.add_argument("--top", type=_positive_int, default=10, help="number of top links to list (default: 10)")

    add("matrix", "implication matrix of direct:indirect counts", [common], FORMATS["matrix"])

    p = add("hvm", "hierarchical value map of links at or above the cutoff", [common, cutoff], FORMATS["hvm"])
    p.add_argument("--edge-label", choices=("direct", "direct_and_indirect"), default="direct",
                   help="DOT edge label (default: direct)")
    p.add_argument("--show-indirect", action="store_true",
                   help="add the indirect count as a DOT edge xlabel (default: off)")
    p.add_argument("--no-rank", action="store_true",
                   help="do not pin attributes to the bottom and values to the top in DOT output")

    add("chains", "attribute-to-value chains of the map, ranked by path_score", [common, cutoff], FORMATS["chains"])

    p = add("sensitivity", "edge count and retained direct relations per cutoff", [common], FORMATS["sensitivity"])
    p.add_argument("--max-cutoff", type=_positive_int, default=10, help="largest cutoff to tabulate (default: 10)")
    return parser


def _validate_text(corpus: Corpus, strict: bool) -> tuple[str, list[str]]:
    problems = []
    if strict:
        for n, ladder in enumerate(corpus.ladders):
            for v in validate_ladder(ladder, corpus.lexicon, strict=True):
                problems.append(f"ladder {n + 1} ({ladder.respondent}): {v.reason}")
    return f"ok: {len(corpus.lexicon)} elements, {len(corpus.ladders)} ladders", problems


def render(args, corpus: Corpus) -> str:
    lexicon = corpus.lexicon
    fmt = args.format
    cmd = args.command

    if cmd == "validate":
        summary, _ = _validate_text(corpus, False)
        if fmt == "json":
            return dumps({"status": "ok", "elements": len(lexicon), "ladders": len(corpus.ladders)})
        return summary

    matrix = build_matrix(corpus)
    if cmd == "matrix":
        return {"text": matrix_to_text, "csv": matrix_to_csv, "json": matrix_to_json}[fmt](matrix, lexicon)
    if cmd == "sensitivity":
        rows = cutoff_sensitivity(matrix, lexicon, args.max_cutoff)
        return {"text": sensitivity_to_text, "csv": sensitivity_to_csv, "json": sensitivity_to_json}[fmt](rows)

    hvm = build_hvm(matrix, lexicon, HvmConfig(args.cutoff, args.max_chain_length))
    if cmd == "hvm":
        if fmt == "dot":
            options = DotOptions(args.show_indirect, not args.no_rank, args.edge_label)
            return to_dot(hvm, options)
        return {"text": hvm_to_text, "csv": hvm_to_csv, "json": hvm_to_json}[fmt](hvm)
    if cmd == "chains":
        chains = enumerate_chains(hvm)
        return {"text": chains_to_text, "csv": chains_to_csv, "json": chains_to_json}[fmt](chains, lexicon)

    # summarize
    rows = element_summary(corpus)
    links = top_links(matrix, args.top)
    table = attribute_value_table(hvm, args.score_rule)
    if fmt == "json":
        return summary_to_json(rows, links, table, lexicon)
    if fmt == "csv":
        return element_summary_to_csv(rows)
    return "\n".join([
        f"corpus: {len(lexicon)} elements, {len(corpus.ladders)} ladders",
        "",
        "element frequencies",
        render_element_summary(rows),
        f"top {len(links)} links by direct count",
        render_top_links(links, lexicon),
        f"attribute x value table (HVM cutoff {args.cutoff})",
        render_attribute_value_table(table, lexicon),
    ])


def _write(text: str, path: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".laddermap-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        corpus = load_corpus(args.lexicon, args.ladders)
    except OSError as exc:
        print(f"laddermap: cannot read {exc.filename}: {exc.strerror}", file=sys.stderr)
        return 1
    except ParseError as exc:
        for diag in exc.diagnostics:
            print(diag, file=sys.stderr)
        return 1
    except CorpusError as exc:
        print(f"laddermap: {exc}", file=sys.stderr)
        return 1

    if args.command == "validate" and args.strict:
        _, problems = _validate_text(corpus, True)
        if problems:
            for p in problems:
                print(f"{args.ladders}: {p}", file=sys.stderr)
            return 1

    try:
        output = render(args, corpus)
        _write(output, args.out)
    except OSError as exc:
        print(f"laddermap: cannot write {exc.filename or args.out}: {exc.strerror}", file=sys.stderr)
        return 1
    return 0


def main_exit() -> None:
    sys.exit(main())
