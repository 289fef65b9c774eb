"""Hierarchical value maps: cutoff pruning, chain enumeration and chain scoring."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import Category, Lexicon
from .implication import ImplicationMatrix

DEFAULT_CUTOFF = 4
DEFAULT_MAX_CHAIN_LENGTH = 12


class HvmError(ValueError):
    pass


@dataclass(frozen=True)
class HvmConfig:
    cutoff: int = DEFAULT_CUTOFF
    max_chain_length: int = DEFAULT_MAX_CHAIN_LENGTH

    def __post_init__(self):
        if self.cutoff < 1:
            raise HvmError(f"cutoff must be >= 1, got {self.cutoff}")
        if self.max_chain_length < 2:
            raise HvmError(f"max_chain_length must be >= 2, got {self.max_chain_length}")


@dataclass(frozen=True)
class HvmEdge:
    source: int
    target: int
    direct: int
    indirect: int = 0


@dataclass(frozen=True)
class Hvm:
    config: HvmConfig
    lexicon: Lexicon
    edges: tuple[HvmEdge, ...]
    nodes: tuple[int, ...] = field(init=False)
    layers: dict[Category, tuple[int, ...]] = field(init=False, compare=False)
    _out: dict[int, tuple[HvmEdge, ...]] = field(init=False, repr=False, compare=False)
    _by_pair: dict[tuple[int, int], HvmEdge] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        edges = tuple(sorted(self.edges, key=lambda e: (e.source, e.target)))
        by_pair = {}
        for e in edges:
            if e.source == e.target:
                raise HvmError(f"self-loop on element {e.source}")
            if e.direct < self.config.cutoff:
                raise HvmError(
                    f"edge {e.source} -> {e.target} has {e.direct} direct relations, "
                    f"below the cutoff of {self.config.cutoff}"
                )
            for end in (e.source, e.target):
                if end not in self.lexicon:
                    raise HvmError(f"edge endpoint {end} is not in the lexicon")
            if (e.source, e.target) in by_pair:
                raise HvmError(f"duplicate edge {e.source} -> {e.target}")
            by_pair[(e.source, e.target)] = e
        nodes = tuple(sorted({e.source for e in edges} | {e.target for e in edges}))
        out: dict[int, list[HvmEdge]] = {n: [] for n in nodes}
        for e in edges:
            out[e.source].append(e)
        layers = {
            cat: tuple(n for n in nodes if self.lexicon.category_of(n) is cat) for cat in Category
        }
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "layers", layers)
        object.__setattr__(self, "_out", {n: tuple(es) for n, es in out.items()})
        object.__setattr__(self, "_by_pair", by_pair)

    def edge(self, source: int, target: int) -> HvmEdge | None:
        return self._by_pair.get((source, target))

    def successors(self, node: int) -> tuple[HvmEdge, ...]:
        return self._out.get(node, ())

    def __contains__(self, node) -> bool:
        return node in self._out


def build_hvm(matrix: ImplicationMatrix, lexicon: Lexicon, config: HvmConfig | None = None) -> Hvm:
    config = config or HvmConfig()
    if matrix.element_ids != lexicon.ids:
        raise HvmError("matrix dimension does not match the lexicon")
    edges = [
        HvmEdge(r, c, cell.direct, cell.indirect)
        for r, c, cell in matrix.nonzero()
        if cell.direct >= config.cutoff
    ]
    return Hvm(config, lexicon, tuple(edges))


@dataclass(frozen=True, order=True)
class Chain:
    path: tuple[int, ...]
    score: int


def path_score(hvm: Hvm, path: Sequence[int]) -> int:
    """Cumulative frequency of a path: the sum of its edges' direct counts."""
    total = 0
    for a, b in zip(path, path[1:]):
        e = hvm.edge(a, b)
        if e is None:
            raise HvmError(f"no edge {a} -> {b} in the HVM")
        total += e.direct
    return total


def _simple_paths(hvm: Hvm, start: int, max_nodes: int | None = None):
    """Yield every simple path from ``start`` (as a tuple), depth-first, ascending ids."""
    path = [start]
    on_path = {start}
    stack = [iter(hvm.successors(start))]
    yield tuple(path)
    while stack:
        e = next(stack[-1], None)
        if e is None:
            stack.pop()
            on_path.discard(path.pop())
            continue
        if e.target in on_path or (max_nodes is not None and len(path) >= max_nodes):
            continue
        path.append(e.target)
        on_path.add(e.target)
        yield tuple(path)
        stack.append(iter(hvm.successors(e.target)))


def enumerate_chains(hvm: Hvm) -> list[Chain]:
    """All simple attribute-to-value paths of at most ``max_chain_length`` nodes.

    Sorted by descending score, ties broken by the path in ascending id order.
    """
    chains = []
    for root in hvm.layers[Category.ATTRIBUTE]:
        for path in _simple_paths(hvm, root, hvm.config.max_chain_length):
            if len(path) > 1 and hvm.lexicon.category_of(path[-1]) is Category.VALUE:
                chains.append(Chain(path, path_score(hvm, path)))
    chains.sort(key=lambda ch: (-ch.score, ch.path))
    return chains


def _check_pair(hvm: Hvm, attribute: int, value: int):
    for node, cat, noun in ((attribute, Category.ATTRIBUTE, "an attribute"), (value, Category.VALUE, "a value")):
        if node not in hvm:
            raise HvmError(f"element {node} is not a node of the HVM")
        if hvm.lexicon.category_of(node) is not cat:
            raise HvmError(f"element {node} is not {noun}")


def simple_paths_between(hvm: Hvm, source: int, target: int) -> list[tuple[int, ...]]:
    return [p for p in _simple_paths(hvm, source) if p[-1] == target and len(p) > 1]


def subgraph_score(hvm: Hvm, attribute: int, value: int) -> int:
    """Sum of direct counts over edges lying on at least one simple attribute-to-value path."""
    _check_pair(hvm, attribute, value)
    used: set[tuple[int, int]] = set()
    for path in simple_paths_between(hvm, attribute, value):
        used.update(zip(path, path[1:]))
    return sum(hvm.edge(a, b).direct for a, b in used)


def reachable_edges(hvm: Hvm, source: int) -> list[HvmEdge]:
    seen = {source}
    todo = [source]
    found = []
    while todo:
        for e in hvm.successors(todo.pop()):
            found.append(e)
            if e.target not in seen:
                seen.add(e.target)
                todo.append(e.target)
    return sorted(found, key=lambda e: (e.source, e.target))


def reach_score(hvm: Hvm, attribute: int, value: int) -> int:
    """Sum of direct counts over every edge reachable from the attribute.

    This is the frequency summary of the whole map hanging off one attribute,
    dead-end branches included.  Zero when the value is not reachable.
    """
    _check_pair(hvm, attribute, value)
    edges = reachable_edges(hvm, attribute)
    if not any(e.target == value for e in edges):
        return 0
    return sum(e.direct for e in edges)


def edge_set_score(hvm: Hvm, pairs: Iterable[tuple[int, int]]) -> int:
    """Cumulative frequency of an arbitrary set of HVM edges."""
    total = 0
    for a, b in set(pairs):
        e = hvm.edge(a, b)
        if e is None:
            raise HvmError(f"no edge {a} -> {b} in the HVM")
        total += e.direct
    return total


@dataclass(frozen=True)
class SensitivityRow:
    cutoff: int
    edge_count: int
    percent_retained: float


def cutoff_sensitivity(matrix: ImplicationMatrix, lexicon: Lexicon, max_cutoff: int) -> list[SensitivityRow]:
    if max_cutoff < 1:
        raise HvmError(f"max_cutoff must be >= 1, got {max_cutoff}")
    if matrix.element_ids != lexicon.ids:
        raise HvmError("matrix dimension does not match the lexicon")
    directs = [cell.direct for _, _, cell in matrix.nonzero() if cell.direct > 0]
    total = sum(directs)
    rows = []
    for cutoff in range(1, max_cutoff + 1):
        kept = [d for d in directs if d >= cutoff]
        pct = round(100.0 * sum(kept) / total, 1) if total else 0.0
        rows.append(SensitivityRow(cutoff, len(kept), pct))
    return rows
