"""Domain types for coded laddering data: elements, lexicons, ladders, corpora."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator


class CorpusError(ValueError):
    """Raised when a lexicon or corpus violates its invariants."""

    def __init__(self, message: str, violations: Iterable[object] = ()):
        super().__init__(message)
        self.violations = list(violations)


class Category(enum.Enum):
    """Abstraction level of an element, ordered Attribute < Consequence < Value."""

    ATTRIBUTE = "A"
    CONSEQUENCE = "C"
    VALUE = "V"

    @property
    def rank(self) -> int:
        return _RANKS[self]

    @property
    def code(self) -> str:
        return self.value

    @classmethod
    def from_code(cls, code: str) -> "Category":
        try:
            return cls(code)
        except ValueError:
            raise ValueError(f"unknown category {code!r}") from None

    def __lt__(self, other):
        if not isinstance(other, Category):
            return NotImplemented
        return self.rank < other.rank


_RANKS = {Category.ATTRIBUTE: 0, Category.CONSEQUENCE: 1, Category.VALUE: 2}


def category_rank(category: Category) -> int:
    return category.rank


def normalize_label(label: str) -> str:
    """Key used for label uniqueness: trimmed and case-folded."""
    return label.strip().casefold()


@dataclass(frozen=True)
class Element:
    id: int
    label: str
    category: Category

    def __post_init__(self):
        if isinstance(self.id, bool) or not isinstance(self.id, int) or self.id < 1:
            raise CorpusError(f"element id must be a positive integer, got {self.id!r}")
        if not self.label or not self.label.strip():
            raise CorpusError(f"element {self.id} has an empty label")
        if not isinstance(self.category, Category):
            raise CorpusError(f"element {self.id} has invalid category {self.category!r}")


class Lexicon:
    """Immutable set of elements keyed by id, iterated in ascending id order."""

    __slots__ = ("_by_id",)

    def __init__(self, elements: Iterable[Element]):
        by_id: dict[int, Element] = {}
        labels: dict[str, int] = {}
        for el in elements:
            if el.id in by_id:
                raise CorpusError(f"duplicate element id {el.id}")
            key = normalize_label(el.label)
            if key in labels:
                raise CorpusError(
                    f"duplicate label {el.label.strip()!r} (ids {labels[key]} and {el.id})"
                )
            by_id[el.id] = el
            labels[key] = el.id
        self._by_id = {i: by_id[i] for i in sorted(by_id)}

    @property
    def elements(self) -> tuple[Element, ...]:
        return tuple(self._by_id.values())

    @property
    def ids(self) -> tuple[int, ...]:
        return tuple(self._by_id)

    def __getitem__(self, element_id: int) -> Element:
        return self._by_id[element_id]

    def get(self, element_id: int) -> Element | None:
        return self._by_id.get(element_id)

    def __contains__(self, element_id) -> bool:
        return element_id in self._by_id

    def __iter__(self) -> Iterator[Element]:
        return iter(self._by_id.values())

    def __len__(self) -> int:
        return len(self._by_id)

    def __eq__(self, other):
        if not isinstance(other, Lexicon):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"Lexicon({len(self)} elements)"

    def category_of(self, element_id: int) -> Category:
        return self._by_id[element_id].category

    def label_of(self, element_id: int) -> str:
        return self._by_id[element_id].label


@dataclass(frozen=True)
class Ladder:
    """One respondent's chain of element ids, ordered from attributes toward values."""

    respondent: str
    steps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class Violation:
    """A ladder defect; ``step`` is the 0-based index of the offending step."""

    step: int | None
    reason: str

    def __str__(self):
        return self.reason


def validate_ladder(ladder: Ladder, lexicon: Lexicon, strict: bool = False) -> list[Violation]:
    """Check a ladder against the lexicon; an empty list means the ladder is valid.

    With ``strict`` the ladder must also start at an attribute, end at a value,
    and strictly increase in category rank at every step.
    """
    violations: list[Violation] = []
    steps = ladder.steps
    if len(steps) < 2:
        violations.append(Violation(None, "ladder needs at least 2 steps"))

    seen: set[int] = set()
    prev_rank = None
    for i, element_id in enumerate(steps):
        if element_id in seen:
            violations.append(Violation(i, f"duplicate element id {element_id}"))
        seen.add(element_id)
        if element_id not in lexicon:
            violations.append(Violation(i, f"unknown element id {element_id}"))
            continue
        rank = lexicon.category_of(element_id).rank
        if prev_rank is not None:
            if rank < prev_rank:
                violations.append(Violation(i, f"category rank decreases at step {i}"))
            elif strict and rank == prev_rank:
                violations.append(Violation(i, f"category rank does not increase at step {i}"))
        prev_rank = rank

    if strict and steps:
        first, last = steps[0], steps[-1]
        if first in lexicon and lexicon.category_of(first) is not Category.ATTRIBUTE:
            violations.append(Violation(0, "ladder does not start at an attribute"))
        if last in lexicon and lexicon.category_of(last) is not Category.VALUE:
            violations.append(Violation(len(steps) - 1, "ladder does not end at a value"))
    return violations


@dataclass(frozen=True)
class Corpus:
    lexicon: Lexicon
    ladders: tuple[Ladder, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "ladders", tuple(self.ladders))
        if not self.ladders:
            raise CorpusError("a corpus needs at least one ladder")
        problems = []
        for n, ladder in enumerate(self.ladders):
            for v in validate_ladder(ladder, self.lexicon):
                problems.append((n, v))
        if problems:
            n, v = problems[0]
            raise CorpusError(
                f"ladder {n} ({self.ladders[n].respondent!r}): {v.reason}"
                + (f" (and {len(problems) - 1} more)" if len(problems) > 1 else ""),
                problems,
            )
