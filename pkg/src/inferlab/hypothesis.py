"""Hypotheses: a label, an extension, and an enumeration-delay schedule.

The label is the name a learner outputs; the extension is what the name
denotes. The delay schedule makes the denotation observable in stages:
value x is visible in the stage at time t only once t has reached the
scheduled delay of x. Stage enumeration is what consistency checks and
finite-horizon constructions actually look at.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import evidence
from .upset import UPSet, parse


@dataclass(frozen=True)
class DelaySchedule:
    """Affine default delay max(x, mult*x + add), plus finite overrides.

    Overrides must not be earlier than the value itself: a value cannot be
    enumerated before time x, which keeps stages finite by construction.
    """

    overrides: tuple[tuple[int, int], ...] = ()
    mult: int = 1
    add: int = 0

    def __post_init__(self):
        if self.mult < 1 or self.add < 0:
            raise ValueError("delay must dominate the identity")
        seen = {}
        for x, t in self.overrides:
            if x < 0 or t < x:
                raise ValueError(f"override {x}->{t} enumerates too early")
            if seen.setdefault(x, t) != t:
                raise ValueError(f"conflicting overrides for {x}")
        object.__setattr__(
            self, "overrides", tuple(sorted(seen.items()))
        )

    def of(self, x: int) -> int:
        for v, t in self.overrides:
            if v == x:
                return t
        return max(x, self.mult * x + self.add)


DEFAULT_DELAY = DelaySchedule()


@dataclass(frozen=True)
class Hypothesis:
    label: int
    extension: UPSet
    delay: DelaySchedule = DEFAULT_DELAY

    def __post_init__(self):
        if self.label < 0:
            raise ValueError("labels are naturals")
        for x, _ in self.delay.overrides:
            if not self.extension.member(x):
                raise ValueError(f"delay override for non-member {x}")

    def __str__(self) -> str:
        return format_hypothesis(self)


def stage_enumerate(h: Hypothesis, t: int) -> frozenset[int]:
    """Members of the extension enumerated by time t.

    A value appears once both the value itself and its scheduled delay are
    within t, so every stage is finite and stages grow to the extension.
    """
    if t < 0:
        raise ValueError("stage time must be a natural")
    return frozenset(
        x
        for x in range(t + 1)
        if h.extension.member(x) and h.delay.of(x) <= t
    )


def _extension_of(e) -> UPSet | frozenset[int]:
    if isinstance(e, Hypothesis):
        return e.extension
    if isinstance(e, UPSet):
        return e
    if isinstance(e, (set, frozenset)):
        return frozenset(e)
    raise TypeError(f"no extension for {e!r}")


def consistent(e, d) -> bool:
    """Evidence d neither misses a positive nor includes a negative of e."""
    ext = _extension_of(e)
    if isinstance(ext, frozenset):
        return evidence.pos(d) <= ext and not (evidence.neg(d) & ext)
    return all(ext.member(x) for x in evidence.pos(d)) and not any(
        ext.member(x) for x in evidence.neg(d)
    )


def sem_equiv(a: Hypothesis, b: Hypothesis) -> bool:
    """Same denotation, labels and delays notwithstanding."""
    return a.extension == b.extension


def with_delay(h: Hypothesis, delay: DelaySchedule) -> Hypothesis:
    return Hypothesis(h.label, h.extension, delay)


_DIGITS = {"0": 1, "1": 2, "|": 3}


def extension_label(u: UPSet) -> int:
    """Even label read off the extension's description; injective."""
    n = 0
    for ch in str(u):
        n = 4 * n + _DIGITS[ch]
    return 2 * n


def hypothesis_for(u: UPSet, delay: DelaySchedule = DEFAULT_DELAY) -> Hypothesis:
    return Hypothesis(extension_label(u), u, delay)


def format_hypothesis(h: Hypothesis) -> str:
    text = f"label={h.label} ext={h.extension} delay={h.delay.mult},{h.delay.add}"
    if h.delay.overrides:
        text += ";" + ",".join(f"{x}->{t}" for x, t in h.delay.overrides)
    return text


def parse_hypothesis(text: str) -> Hypothesis:
    fields = {}
    for token in text.split():
        key, _, value = token.partition("=")
        if not value or key in fields:
            raise ValueError(f"malformed hypothesis text {text!r}")
        fields[key] = value
    try:
        label = int(fields["label"])
        ext = parse(fields["ext"])
        delay_text = fields["delay"]
    except KeyError as missing:
        raise ValueError(f"hypothesis text lacks {missing}") from None
    affine, _, tail = delay_text.partition(";")
    mult_text, _, add_text = affine.partition(",")
    overrides = []
    if tail:
        for chunk in tail.replace("→", "->").split(","):
            x_text, _, t_text = chunk.partition("->")
            overrides.append((int(x_text), int(t_text)))
    return Hypothesis(
        label, ext, DelaySchedule(tuple(overrides), int(mult_text), int(add_text))
    )
