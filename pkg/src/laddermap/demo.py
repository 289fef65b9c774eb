"""Paths to the bundled synthetic demo corpus.

The demo corpus is synthetic.  Its lexicon holds 34 coded element groups and
its 84 ladders were built to agree with a handful of reference counts.  The
ladders are invented and are not interview records.
"""

from importlib import resources
from pathlib import Path

from .core import Corpus
from .ingest import load_corpus


def demo_paths() -> tuple[Path, Path]:
    base = resources.files("laddermap") / "data"
    return Path(str(base / "demo_lexicon.csv")), Path(str(base / "demo_ladders.txt"))


def load_demo() -> Corpus:
    return load_corpus(*demo_paths())
