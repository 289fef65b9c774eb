"""Random corpus/HVM generators and brute-force oracles shared by the tests.

Oracles here never call into the code paths they check.
"""

import itertools
import random

from hypothesis import strategies as st

from laddermap.core import Category, Corpus, Element, Ladder, Lexicon
from laddermap.hvm import Hvm, HvmConfig, HvmEdge

CATEGORIES = list(Category)


def random_lexicon(rng: random.Random, size: int) -> Lexicon:
    ids = rng.sample(range(1, 60), size)
    return Lexicon(Element(i, f"element {i}", rng.choice(CATEGORIES)) for i in ids)


def random_ladder(rng: random.Random, lexicon: Lexicon, min_len=2, max_len=10, respondent=None) -> Ladder:
    k = rng.randint(min_len, min(max_len, len(lexicon)))
    chosen = rng.sample(lexicon.elements, k)
    chosen.sort(key=lambda el: el.category.rank)
    return Ladder(respondent or f"R{rng.randint(1, 12):02d}", tuple(el.id for el in chosen))


def random_corpus(rng: random.Random, max_elements=8, max_ladders=10) -> Corpus:
    lexicon = random_lexicon(rng, rng.randint(2, max_elements))
    ladders = [random_ladder(rng, lexicon) for _ in range(rng.randint(1, max_ladders))]
    return Corpus(lexicon, ladders)


def random_hvm(rng: random.Random, max_nodes=8, cutoff=4, edge_p=0.35) -> Hvm:
    """Random map whose edges never step down in category rank (same-rank cycles allowed)."""
    lexicon = random_lexicon(rng, rng.randint(2, max_nodes))
    edges = []
    for a in lexicon:
        for b in lexicon:
            if a.id != b.id and a.category.rank <= b.category.rank and rng.random() < edge_p:
                edges.append(HvmEdge(a.id, b.id, rng.randint(cutoff, cutoff + 20), rng.randint(0, 5)))
    return Hvm(HvmConfig(cutoff=cutoff), lexicon, tuple(edges))


@st.composite
def corpora(draw, max_elements=8, max_ladders=10):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_corpus(random.Random(seed), max_elements, max_ladders)


@st.composite
def hvms(draw, max_nodes=7):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_hvm(random.Random(seed), max_nodes)


def brute_force_matrix(corpus: Corpus) -> dict:
    """{(from, to): [direct, indirect]} by scanning every index pair i < j of every ladder."""
    cells = {}
    for ladder in corpus.ladders:
        s = ladder.steps
        for i in range(len(s)):
            for j in range(len(s)):
                if j <= i:
                    continue
                slot = cells.setdefault((s[i], s[j]), [0, 0])
                slot[0 if j - i == 1 else 1] += 1
    return {k: tuple(v) for k, v in cells.items()}


def brute_force_simple_paths(edges: dict, nodes, source, target):
    """Every simple path source..target, found by testing all orderings of intermediate nodes."""
    others = [n for n in nodes if n not in (source, target)]
    found = []
    for r in range(len(others) + 1):
        for middle in itertools.permutations(others, r):
            path = (source, *middle, target)
            if all((a, b) in edges for a, b in zip(path, path[1:])):
                found.append(path)
    return found


def edge_weights(hvm: Hvm) -> dict:
    return {(e.source, e.target): e.direct for e in hvm.edges}


# -- minimal DOT grammar check -------------------------------------------------

import re

_TOKEN = re.compile(
    r'\s*(?:(?P<arrow>->|--)|(?P<punct>[{}\[\];,=])|(?P<id>[A-Za-z_][A-Za-z_0-9]*|-?(?:\.[0-9]+|[0-9]+(?:\.[0-9]*)?))'
    r'|(?P<str>"(?:[^"\\]|\\.)*"))'
)


def dot_tokens(text: str):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise SyntaxError(f"bad DOT token at offset {pos}: {text[pos:pos + 20]!r}")
        kind = m.lastgroup
        out.append((kind, m.group(kind)))
        pos = m.end()
    return out


class DotParser:
    """Recursive-descent check of the DOT subset: graph, stmt_list, attr lists, subgraphs."""

    def __init__(self, text):
        self.toks = dot_tokens(text)
        self.i = 0
        self.nodes = set()
        self.edges = []

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise SyntaxError(f"expected {value or kind} at token {self.i}, got {tok}")
        self.i += 1
        return tok

    def parse(self):
        head = self.take("id")
        if head[1] == "strict":
            head = self.take("id")
        if head[1] not in ("digraph", "graph"):
            raise SyntaxError("expected graph or digraph")
        self.directed = head[1] == "digraph"
        if self.peek()[0] in ("id", "str"):
            self.take()
        self.take("punct", "{")
        self.stmt_list()
        self.take("punct", "}")
        if self.i != len(self.toks):
            raise SyntaxError("trailing tokens")
        return self

    def stmt_list(self):
        while self.peek() != ("punct", "}"):
            self.stmt()
            if self.peek() == ("punct", ";"):
                self.take()

    def attr_list(self):
        while self.peek() == ("punct", "["):
            self.take()
            while self.peek() != ("punct", "]"):
                self.take_id()
                if self.peek() == ("punct", "="):
                    self.take()
                    self.take_id()
                if self.peek()[1] in (",", ";"):
                    self.take()
            self.take("punct", "]")

    def take_id(self):
        if self.peek()[0] not in ("id", "str"):
            raise SyntaxError(f"expected ID at token {self.i}, got {self.peek()}")
        return self.take()[1]

    def stmt(self):
        if self.peek() == ("punct", "{") or self.peek() == ("id", "subgraph"):
            if self.peek()[1] == "subgraph":
                self.take()
                if self.peek()[0] in ("id", "str"):
                    self.take()
            self.take("punct", "{")
            self.stmt_list()
            self.take("punct", "}")
            return
        first = self.take_id()
        if first in ("graph", "node", "edge") and self.peek() == ("punct", "["):
            self.attr_list()
            return
        if self.peek() == ("punct", "="):
            self.take()
            self.take_id()
            return
        chain = [first]
        while self.peek()[0] == "arrow":
            arrow = self.take()[1]
            if arrow != ("->" if self.directed else "--"):
                raise SyntaxError("edge operator does not match graph type")
            chain.append(self.take_id())
        self.attr_list()
        if len(chain) == 1:
            self.nodes.add(first)
        else:
            self.edges.extend(zip(chain, chain[1:]))
