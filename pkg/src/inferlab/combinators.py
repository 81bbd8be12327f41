"""Learner transformations that trade interaction modes and add guarantees.

The constructions here rebuild a learner around its weaknesses: forcing
consistency by patching the conjecture against the data, simulating full
information from an unordered data set via canonical prefixes, and the
two wrap-and-poison schemes that keep a run weakly monotonic (classic or
dual) while making it globally consistent.

All outputs carry fresh odd labels and the default delay schedule; within
one evaluation context each wrapper memoizes per prefix, so a run sees a
stable hypothesis per evidence state.
"""

from __future__ import annotations

from dataclasses import dataclass

from .evidence import DataSequence, Example, content, neg, outline, pos
from .hypothesis import Hypothesis, consistent, stage_enumerate
from .interaction import Learner, as_full_information
from .upset import (
    EMPTY,
    UPSet,
    complement,
    difference,
    from_elements,
    union,
)


def prefix_length(d) -> int:
    """Length of the initial segment the evidence covers without gaps."""
    seen = outline(d)
    n = 0
    while n in seen:
        n += 1
    return n


def canonical_prefix(d) -> DataSequence:
    """The evidence rearranged as a canonical presentation, cut at a gap."""
    positives = pos(d)
    return DataSequence(
        tuple(
            Example(i, 1 if i in positives else 0)
            for i in range(prefix_length(d))
        )
    )


@dataclass(frozen=True)
class CanonicalReduction:
    length: int
    sequence: DataSequence

    @classmethod
    def of(cls, d) -> "CanonicalReduction":
        return cls(prefix_length(d), canonical_prefix(d))


def to_set_driven(learner: Learner) -> Learner:
    """Forget order and multiplicity; answer as if canonically presented."""
    g = as_full_information(learner)

    def fn(dset, ctx):
        return g.fn(canonical_prefix(dset), ctx)

    return Learner(f"{learner.name}[sd]", "Sd", fn)


def patch(e: Hypothesis, d, ctx) -> Hypothesis:
    """Overwrite a conjecture with the data: add positives, drop negatives."""
    ext = difference(
        union(e.extension, from_elements(pos(d))), from_elements(neg(d))
    )
    return Hypothesis(ctx.fresh_label(), ext)


def patched_learner(learner: Learner) -> Learner:
    """Consistency by force; denotations untouched wherever already consistent."""
    if learner.kind == "Sd":
        fn = lambda dset, ctx: patch(learner.fn(dset, ctx), dset, ctx)
    elif learner.kind == "G":
        fn = lambda d, ctx: patch(learner.fn(d, ctx), d, ctx)
    else:
        raise ValueError(
            "patching works on G or Sd learners; lift others first"
        )
    return Learner(f"{learner.name}[patched]", learner.kind, fn)


def _stage_union(e: Hypothesis, d: DataSequence) -> UPSet:
    """Union of all enumeration stages of e that are consistent with d.

    A stage counts only once every positive of d is visible in it and no
    negative of d is. Whether that window is empty, cut short by the first
    visible conflict, or unbounded is decided by the delay schedule alone.
    """
    p, n = pos(d), neg(d)
    if not all(e.extension.member(x) for x in p):
        return EMPTY
    conflicts = [e.delay.of(y) for y in n if e.extension.member(y)]
    if not conflicts:
        return e.extension
    t_bad = min(conflicts)
    t_pos = max((e.delay.of(x) for x in p), default=0)
    if t_bad == 0 or t_pos > t_bad - 1:
        return EMPTY
    return from_elements(stage_enumerate(e, t_bad - 1))


def cons_wmon_wrapper(learner: Learner) -> Learner:
    """Keep every guess alive exactly as long as the data allows it.

    The wrapped learner conjectures the positive data, the current answer
    of the base learner, and every one of its own previous answers, each
    contributing only the stages still consistent with the present
    evidence. Runs are globally consistent and weakly monotonic, and the
    wrapper identifies whatever the base learner identified.
    """
    h = as_full_information(learner)

    def fn(d: DataSequence, ctx):
        tag = ("cons_wmon", id(learner))
        for k in range(len(d) + 1):
            key = (*tag, d.items[:k])
            if key in ctx.memo:
                continue
            tau = DataSequence(d.items[:k])
            ext = union(
                from_elements(pos(tau)), _stage_union(h.fn(tau, ctx), tau)
            )
            for j in range(k):
                prev = ctx.memo[(*tag, d.items[:j])]
                ext = union(ext, _stage_union(prev, tau))
            ctx.memo[key] = Hypothesis(ctx.fresh_label(), ext)
        return ctx.memo[(*tag, d.items)]

    return Learner(f"{learner.name}[cons+wmon]", "G", fn)


def dual_wmon_poison(learner: Learner) -> Learner:
    """Pass the base learner through, poisoning provably wrong answers.

    A conjecture that misses shown positives is replaced by exactly those
    positives; one that covers shown negatives is blown up to everything
    but the negatives. Either poison stays consistent until genuinely new
    information arrives, which preserves dual weak monotonicity of the
    set-driven base learner while adding global consistency.
    """
    if learner.kind != "Sd":
        raise ValueError("poisoning is defined for set-driven learners")

    def fn(d: DataSequence, ctx):
        key = ("dual_wmon", id(learner), d.items)
        if key in ctx.memo:
            return ctx.memo[key]
        p = pos(d)
        poisoned = False
        for k in range(len(d) + 1):
            tau = DataSequence(d.items[:k])
            if pos(tau) == p:
                guess = learner.fn(content(tau), ctx)
                if not all(guess.extension.member(x) for x in p):
                    poisoned = True
                    break
        if poisoned:
            ext = from_elements(p)
        else:
            base = learner.fn(content(d), ctx)
            if consistent(base, d):
                ext = base.extension
            else:
                ext = complement(from_elements(neg(d)))
        out = Hypothesis(ctx.fresh_label(), ext)
        ctx.memo[key] = out
        return out

    return Learner(f"{learner.name}[dual-poison]", "G", fn)


def _shortest_same_content(items: tuple[Example, ...]) -> int:
    first: dict[Example, int] = {}
    for i, ex in enumerate(items):
        first.setdefault(ex, i)
    return 1 + max(first.values()) if first else 0


def cons_wmon_fourcase(learner: Learner) -> Learner:
    """The four-way rebuild: blow up, fall back to positives, or pass through.

    Evaluated on the shortest prefix carrying the same evidence, so
    repeated data cannot move the answer. Once the run has conjectured
    everything-but-the-negatives and the negatives have not grown, it
    repeats that conjecture; a base answer missing shown positives is
    demoted to exactly those positives; an inconsistent one is blown up.
    Preserves weak monotonicity of the base learner and adds consistency.
    """
    h = as_full_information(learner)

    def fn(d: DataSequence, ctx):
        tag = ("fourcase", id(learner))
        for k in range(len(d) + 1):
            key = (*tag, d.items[:k])
            if key in ctx.memo:
                continue
            m = _shortest_same_content(d.items[:k])
            red_key = (*tag, "reduced", d.items[:m])
            if red_key not in ctx.memo:
                red = DataSequence(d.items[:m])
                blow = complement(from_elements(neg(red)))
                fired = any(
                    neg(DataSequence(d.items[:j])) == neg(red)
                    and ctx.memo[(*tag, d.items[:j])].extension == blow
                    for j in range(m)
                )
                p = pos(red)
                base = h.fn(red, ctx)
                if fired:
                    ext = blow
                elif not all(base.extension.member(x) for x in p):
                    ext = from_elements(p)
                elif consistent(base, red):
                    ext = base.extension
                else:
                    ext = blow
                ctx.memo[red_key] = Hypothesis(ctx.fresh_label(), ext)
            ctx.memo[key] = ctx.memo[red_key]
        return ctx.memo[(*tag, d.items)]

    return Learner(f"{learner.name}[cons+wmon*]", "G", fn)


COMBINATORS = {
    "to_sd": to_set_driven,
    "patch": patched_learner,
    "cons_wmon": cons_wmon_wrapper,
    "dual_wmon_poison": dual_wmon_poison,
    "cons_wmon_fourcase": cons_wmon_fourcase,
}


def combinator(name: str):
    try:
        return COMBINATORS[name]
    except KeyError:
        raise ValueError(f"unknown combinator {name!r}") from None
