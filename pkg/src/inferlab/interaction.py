"""Learner evaluation under the four interaction modes.

A learner is a function from evidence to hypotheses; the mode fixes what
the learner gets to see at step n of an informant presentation:

  G    the full sequence of the first n examples
  Psd  the set of the first n examples, plus the count n
  Sd   the set of the first n examples
  It   only its previous hypothesis and the n-th example

Iterative runs start from a designated empty-extension hypothesis, so the
hypothesis stream is total from step 0 in every mode.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .evidence import DataSequence, Example, Informant, content, prefix
from .hypothesis import Hypothesis, hypothesis_for
from .upset import EMPTY

KINDS = ("G", "Psd", "Sd", "It")

INITIAL_HYPOTHESIS = hypothesis_for(EMPTY)


class EvalContext:
    """Carries per-run state: fresh label supply and a memo for wrappers.

    Fresh labels are odd; labels derived from extensions are even, so the
    two supplies never collide.
    """

    def __init__(self, seed: int = 0):
        self.seed = seed
        self.memo: dict = {}
        self._counter = 0

    def fresh_label(self) -> int:
        self._counter += 1
        return 2 * self._counter - 1


@dataclass(frozen=True)
class Learner:
    name: str
    kind: str
    fn: Callable = field(compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown interaction mode {self.kind!r}")


@dataclass(frozen=True)
class HypSequence:
    """Hypotheses emitted along a presentation; items[n] answers prefix n."""

    items: tuple[Hypothesis, ...]
    learner_name: str
    informant: Informant

    def __len__(self) -> int:
        return len(self.items)

    def __getitem__(self, i) -> Hypothesis:
        return self.items[i]

    @property
    def final(self) -> Hypothesis:
        return self.items[-1]


def run(
    learner: Learner,
    informant: Informant,
    horizon: int,
    ctx: EvalContext | None = None,
) -> HypSequence:
    """Evaluate the learner on prefixes 0..horizon of the informant."""
    if horizon < 0:
        raise ValueError("horizon must be a natural")
    if ctx is None:
        ctx = EvalContext()
    items: list[Hypothesis] = []
    if learner.kind == "It":
        h = INITIAL_HYPOTHESIS
        items.append(h)
        for i in range(1, horizon + 1):
            h = learner.fn(h, informant.example_at(i - 1), ctx)
            items.append(h)
    else:
        for n in range(horizon + 1):
            d = prefix(informant, n)
            if learner.kind == "G":
                h = learner.fn(d, ctx)
            elif learner.kind == "Psd":
                h = learner.fn(content(d), n, ctx)
            else:
                h = learner.fn(content(d), ctx)
            items.append(h)
    return HypSequence(tuple(items), learner.name, informant)


def as_full_information(learner: Learner) -> Learner:
    """View any learner as a G learner over whole sequences."""
    if learner.kind == "G":
        return learner
    if learner.kind == "Sd":
        fn = lambda d, ctx: learner.fn(content(d), ctx)
    elif learner.kind == "Psd":
        fn = lambda d, ctx: learner.fn(content(d), len(d), ctx)
    else:

        def fn(d, ctx):
            h = INITIAL_HYPOTHESIS
            for ex in d:
                h = learner.fn(h, ex, ctx)
            return h

    return Learner(f"{learner.name}[G]", "G", fn)


def with_fresh_labels(learner: Learner) -> Learner:
    """Same extensions and delays, but every answer gets a new odd label.

    Relabelling never changes what a run denotes, only whether its labels
    can settle, so it separates syntactic from semantic convergence.
    """

    def relabel(h, ctx):
        return Hypothesis(ctx.fresh_label(), h.extension, h.delay)

    if learner.kind == "It":
        fn = lambda h, ex, ctx: relabel(learner.fn(h, ex, ctx), ctx)
    elif learner.kind == "Psd":
        fn = lambda d, n, ctx: relabel(learner.fn(d, n, ctx), ctx)
    else:
        fn = lambda d, ctx: relabel(learner.fn(d, ctx), ctx)
    return Learner(f"{learner.name}[fresh]", learner.kind, fn)


@dataclass(frozen=True)
class OrderProbe:
    insensitive: bool
    mode: str  # "sd": content only may matter; "psd": content and length
    trials: int
    witness: tuple[DataSequence, DataSequence] | None = None


def order_insensitivity_probe(
    learner: Learner,
    base: DataSequence,
    mode: str = "sd",
    trials: int = 8,
    seed: int = 0,
    ctx: EvalContext | None = None,
) -> OrderProbe:
    """Empirically confirm the learner ignores presentation order.

    Rearranges the base evidence (and, for the sd mode, also pads it with
    repeated examples) and compares outputs verbatim. A sampled probe: it
    can expose sensitivity but never certify insensitivity.
    """
    if mode not in ("sd", "psd"):
        raise ValueError(f"unknown probe mode {mode!r}")
    if ctx is None:
        ctx = EvalContext()
    g = as_full_information(learner)
    reference = g.fn(base, ctx)
    rng = random.Random(seed)
    checked = 0
    for _ in range(trials):
        items = list(base.items)
        rng.shuffle(items)
        if mode == "sd" and items:
            items += rng.choices(items, k=rng.randrange(3))
        variant = DataSequence(tuple(items))
        checked += 1
        if g.fn(variant, ctx) != reference:
            return OrderProbe(False, mode, checked, (base, variant))
    return OrderProbe(True, mode, checked)
