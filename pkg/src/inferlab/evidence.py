"""Labelled examples, finite evidence states, and informants.

An informant presents, over time, every natural paired with its membership
bit for a target set. Finite prefixes of that presentation are the only
evidence a learner ever sees.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .upset import UPSet


class Example(NamedTuple):
    value: int
    label: int  # 1 = positive, 0 = negative


def _as_examples(items) -> tuple[Example, ...]:
    out = []
    for item in items:
        value, label = item
        label = int(label)
        if label not in (0, 1):
            raise ValueError(f"label must be 0 or 1, got {label!r}")
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise ValueError(f"example values are naturals, got {value!r}")
        out.append(Example(value, label))
    return tuple(out)


def _check_label_consistent(items: Iterable[Example]) -> None:
    seen: dict[int, int] = {}
    for ex in items:
        if seen.setdefault(ex.value, ex.label) != ex.label:
            raise ValueError(f"contradictory labels for {ex.value}")


@dataclass(frozen=True)
class DataSequence:
    """Finite ordered evidence; never assigns two labels to one value."""

    items: tuple[Example, ...] = ()

    def __post_init__(self):
        items = _as_examples(self.items)
        _check_label_consistent(items)
        object.__setattr__(self, "items", items)

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[Example]:
        return iter(self.items)

    def __getitem__(self, i):
        return self.items[i]


@dataclass(frozen=True)
class DataSet:
    """Finite unordered evidence; same consistency invariant."""

    items: frozenset[Example] = frozenset()

    def __post_init__(self):
        items = frozenset(_as_examples(self.items))
        _check_label_consistent(items)
        object.__setattr__(self, "items", items)

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[Example]:
        return iter(self.items)

    def __contains__(self, ex) -> bool:
        return ex in self.items

    def sorted(self) -> tuple[Example, ...]:
        return tuple(sorted(self.items))


Evidence = DataSequence | DataSet


def _examples(d) -> Iterable[Example]:
    if isinstance(d, (DataSequence, DataSet)):
        return d.items
    return _as_examples(d)


def pos(d) -> frozenset[int]:
    return frozenset(ex.value for ex in _examples(d) if ex.label == 1)


def neg(d) -> frozenset[int]:
    return frozenset(ex.value for ex in _examples(d) if ex.label == 0)


def outline(d) -> frozenset[int]:
    return frozenset(ex.value for ex in _examples(d))


def content(d) -> DataSet:
    if isinstance(d, DataSet):
        return d
    return DataSet(frozenset(_examples(d)))


_PROJECTIONS = {"pos": pos, "neg": neg, "outline": outline, "content": content}


def project(kind: str, d):
    try:
        fn = _PROJECTIONS[kind]
    except KeyError:
        raise ValueError(f"unknown projection {kind!r}") from None
    return fn(d)


def parse_sequence(text: str) -> DataSequence:
    """Parse '0:+,1:-,3:+' notation; empty text is the empty sequence."""
    text = text.strip()
    if not text:
        return DataSequence()
    items = []
    for chunk in text.split(","):
        value_text, _, sign = chunk.strip().partition(":")
        if sign not in ("+", "-") or not value_text.isdigit():
            raise ValueError(f"malformed example {chunk!r}")
        items.append(Example(int(value_text), 1 if sign == "+" else 0))
    return DataSequence(tuple(items))


def format_sequence(d) -> str:
    items = d.sorted() if isinstance(d, DataSet) else _examples(d)
    return ",".join(f"{ex.value}:{'+' if ex.label else '-'}" for ex in items)


_ORDERS = ("canonical", "fresh", "shuffled")
_BLOCK = 8


@dataclass(frozen=True)
class Informant:
    """Deterministic complete presentation of a target set.

    The finite head is shown verbatim; afterwards values are enumerated
    either in canonical order, in canonical order skipping values the head
    already covered (fresh), or block-shuffled by the seed. Every natural
    occurs at some index regardless of the order.
    """

    target: UPSet
    head: tuple[Example, ...] = ()
    order: str = "canonical"
    seed: int = 0

    def __post_init__(self):
        head = _as_examples(self.head)
        _check_label_consistent(head)
        for ex in head:
            if self.target.member(ex.value) != bool(ex.label):
                raise ValueError(
                    f"head example {ex} contradicts target {self.target}"
                )
        if self.order not in _ORDERS:
            raise ValueError(f"unknown order {self.order!r}")
        object.__setattr__(self, "head", head)

    def example_at(self, i: int) -> Example:
        if i < 0:
            raise ValueError("index must be a natural")
        if i < len(self.head):
            return self.head[i]
        j = i - len(self.head)
        if self.order == "canonical":
            value = j
        elif self.order == "shuffled":
            block, offset = divmod(j, _BLOCK)
            cells = list(range(block * _BLOCK, (block + 1) * _BLOCK))
            random.Random(self.seed * 1_000_003 + block).shuffle(cells)
            value = cells[offset]
        else:  # fresh: canonical order over values the head did not show
            shown = sorted({ex.value for ex in self.head})
            value = j
            for v in shown:
                if v <= value:
                    value += 1
                else:
                    break
        return Example(value, 1 if self.target.member(value) else 0)

    def describe(self) -> str:
        if self.order == "canonical" and not self.head:
            return f"canonical[{self.target}]"
        parts = [f"target={self.target}", f"order={self.order}"]
        if self.order == "shuffled":
            parts.append(f"seed={self.seed}")
        if self.head:
            parts.append(f"head={format_sequence(DataSequence(self.head))}")
        return f"informant[{'; '.join(parts)}]"


def canonical_informant(target: UPSet) -> Informant:
    return Informant(target)


def scheduled_informant(target: UPSet, seed: int = 0, plan: Iterable = ()) -> Informant:
    """Informant that first emits the planned examples, then block-shuffles.

    Plan entries are either bare values (label looked up in the target) or
    (value, label) pairs, which are rejected if the label is wrong for the
    target. Repetition in the plan is allowed.
    """
    head = []
    for entry in plan:
        if isinstance(entry, int):
            head.append(Example(entry, 1 if target.member(entry) else 0))
        else:
            value, label = entry
            head.append(Example(value, int(label)))
    return Informant(target, tuple(head), "shuffled", seed)


def prefix(informant: Informant, n: int) -> DataSequence:
    return DataSequence(tuple(informant.example_at(i) for i in range(n)))


def validate_prefix_for(d, target: UPSet) -> bool:
    """True iff every shown label agrees with the target."""
    return all(target.member(ex.value) == bool(ex.label) for ex in _examples(d))


def coverage_index(informant: Informant, value: int) -> int:
    """An index by which the value has certainly been shown."""
    head_values = {ex.value for ex in informant.head}
    if value in head_values:
        return len(informant.head)
    if informant.order == "shuffled":
        return len(informant.head) + (value // _BLOCK + 1) * _BLOCK
    if informant.order == "fresh":
        return len(informant.head) + value + 1
    return len(informant.head) + value + 1
