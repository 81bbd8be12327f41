"""Checkers for behavioral restrictions on hypothesis streams.

Every checker inspects one finite run (a hypothesis per prefix of one
informant) and returns a verdict. Violated verdicts carry a site: the
indices and, where meaningful, the element that witness the violation, so
a verdict can be re-established later against the same run.

Pair scans visit the later index in the outer loop. A longer run of the
same learner then extends the scan instead of reordering it, so the first
violation site found is stable under horizon growth.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .evidence import Informant, content, prefix
from .interaction import EvalContext, HypSequence, Learner, run
from .upset import (
    EMPTY,
    Relation,
    UPSet,
    difference,
    intersection,
    min_element,
    relate,
    union,
)

RESTRICTION_IDS = (
    "cons",
    "mon",
    "mon_d",
    "mon_b",
    "smon",
    "smon_d",
    "smon_b",
    "wmon",
    "wmon_d",
    "wmon_b",
    "caut",
    "caut_tar",
    "caut_fin",
    "caut_inf",
    "bc",
    "ex",
)

_MONOTONE = ("mon", "mon_d", "mon_b", "smon", "smon_d", "smon_b",
             "wmon", "wmon_d", "wmon_b")
_CAUTIOUS = ("caut", "caut_tar", "caut_fin", "caut_inf")


@dataclass(frozen=True)
class Verdict:
    restriction: str
    satisfied: bool
    indices: tuple[int, ...] = ()
    element: int | None = None
    detail: str = ""


class ProbeError(ValueError):
    pass


@lru_cache(maxsize=None)
def _first_conflict(ext: UPSet, informant: Informant, horizon: int) -> int | None:
    """Least presentation index whose datum contradicts the extension."""
    for i in range(horizon):
        ex = informant.example_at(i)
        if ext.member(ex.value) != bool(ex.label):
            return i
    return None


def _consistent_at(ext: UPSet, informant: Informant, t: int, horizon: int) -> bool:
    fc = _first_conflict(ext, informant, horizon)
    return fc is None or fc >= t


def _pair_bad(variant: str, wa: UPSet, wb: UPSet, target: UPSet) -> UPSet:
    """Elements witnessing that the (earlier, later) pair breaks the variant.

    Weakly monotone gating is the caller's business; this is the ungated
    pair condition.
    """
    if variant in ("mon", "mon_b"):
        bad = difference(intersection(wa, target), wb)
        if variant == "mon":
            return bad
        return union(bad, difference(wb, union(wa, target)))
    if variant == "mon_d":
        return difference(wb, union(wa, target))
    if variant in ("smon", "wmon"):
        return difference(wa, wb)
    if variant in ("smon_d", "wmon_d"):
        return difference(wb, wa)
    return union(difference(wa, wb), difference(wb, wa))  # smon_b, wmon_b


def _descent(wa: UPSet, wb: UPSet) -> bool:
    return relate(wb, wa) is Relation.PROPER_SUBSET


_PAIR_DETAIL = {
    "mon": "positive {x} covered at {s} but dropped by {t}",
    "mon_d": "negative {x} excluded at {s} but covered by {t}",
    "mon_b": "{x} moves against the target between {s} and {t}",
    "smon": "{x} enumerated at {s} but missing at {t}",
    "smon_d": "{x} new at {t} though extensions may only shrink",
    "smon_b": "extension changes at {t} on element {x}",
    "wmon": "still consistent at {t}, yet {x} was dropped",
    "wmon_d": "still consistent at {t}, yet {x} was added",
    "wmon_b": "still consistent at {t}, yet the extension moved on {x}",
}


def check_cons(seq: HypSequence) -> Verdict:
    informant = seq.informant
    horizon = len(seq) - 1
    for n, h in enumerate(seq.items):
        fc = _first_conflict(h.extension, informant, horizon)
        if fc is not None and fc < n:
            ex = informant.example_at(fc)
            return Verdict(
                "cons", False, (n,), ex.value,
                f"hypothesis at {n} contradicts the datum "
                f"{ex.value}:{'+' if ex.label else '-'}",
            )
    return Verdict("cons", True)


def check_monotone(variant: str, seq: HypSequence) -> Verdict:
    if variant not in _MONOTONE:
        raise ValueError(f"not a monotonicity variant: {variant!r}")
    target = seq.informant.target
    horizon = len(seq) - 1
    gated = variant.startswith("wmon")
    for t in range(1, len(seq)):
        wb = seq[t].extension
        for s in range(t):
            wa = seq[s].extension
            if gated and not _consistent_at(wa, seq.informant, t, horizon):
                continue
            bad = _pair_bad(variant, wa, wb, target)
            if bad != EMPTY:
                x = min_element(bad)
                return Verdict(
                    variant, False, (s, t), x,
                    _PAIR_DETAIL[variant].format(x=x, s=s, t=t),
                )
    return Verdict(variant, True)


def check_cautious(variant: str, seq: HypSequence) -> Verdict:
    if variant not in _CAUTIOUS:
        raise ValueError(f"not a caution variant: {variant!r}")
    target = seq.informant.target
    if variant == "caut_tar":
        for t, h in enumerate(seq.items):
            if relate(h.extension, target) is Relation.PROPER_SUPERSET:
                x = min_element(difference(h.extension, target))
                return Verdict(
                    "caut_tar", False, (t,), x,
                    f"extension at {t} strictly covers the target ({x} extra)",
                )
        return Verdict("caut_tar", True)
    for t in range(1, len(seq)):
        wb = seq[t].extension
        for s in range(t):
            wa = seq[s].extension
            if not _descent(wa, wb):
                continue
            if variant == "caut_fin" and not wb.is_finite():
                continue
            if variant == "caut_inf" and wb.is_finite():
                continue
            x = min_element(difference(wa, wb))
            kind = ("" if variant == "caut"
                    else " onto a finite set" if variant == "caut_fin"
                    else " onto an infinite set")
            return Verdict(
                variant, False, (s, t), x,
                f"descent{kind} from {s} to {t} (loses {x})",
            )
    return Verdict(variant, True)


def check_bc(seq: HypSequence) -> Verdict:
    target = seq.informant.target
    wrong = [n for n, h in enumerate(seq.items) if h.extension != target]
    if wrong and wrong[-1] == len(seq) - 1:
        n = wrong[-1]
        w = seq[n].extension
        x = min_element(union(difference(w, target), difference(target, w)))
        return Verdict(
            "bc", False, (n,), x,
            f"extension still wrong at the horizon ({x} misclassified)",
        )
    start = wrong[-1] + 1 if wrong else 0
    return Verdict("bc", True, detail=f"correct from {start}")


def check_ex(seq: HypSequence) -> Verdict:
    """Settled label naming the target, witnessed by a tail of length >= 2.

    A lone final label is not yet evidence of settling, so a run must hold
    its last label for at least two indices. Semantic convergence has no
    such grace: see check_bc, which accepts a single correct final index.
    """
    target = seq.informant.target
    labels = [h.label for h in seq.items]
    changes = [i for i in range(1, len(labels)) if labels[i] != labels[i - 1]]
    settled = changes[-1] if changes else 0
    if len(seq) - settled < 2:
        if changes:
            return Verdict(
                "ex", False, (settled - 1, settled), None,
                "label still changing at the horizon",
            )
        return Verdict(
            "ex", False, (0,), None, "horizon too short to observe settling"
        )
    for n in range(settled, len(seq)):
        w = seq[n].extension
        if w != target:
            x = min_element(union(difference(w, target), difference(target, w)))
            return Verdict(
                "ex", False, (n,), x,
                f"settled label names the wrong set ({x} misclassified)",
            )
    return Verdict("ex", True, detail=f"settled at {settled}")


def check(restriction: str, seq: HypSequence) -> Verdict:
    if restriction == "cons":
        return check_cons(seq)
    if restriction in _MONOTONE:
        return check_monotone(restriction, seq)
    if restriction in _CAUTIOUS:
        return check_cautious(restriction, seq)
    if restriction == "bc":
        return check_bc(seq)
    if restriction == "ex":
        return check_ex(seq)
    raise ValueError(f"unknown restriction {restriction!r}")


def check_all(seq: HypSequence) -> dict[str, Verdict]:
    return {rid: check(rid, seq) for rid in RESTRICTION_IDS}


def evaluate_site(
    restriction: str, seq: HypSequence, indices: tuple[int, ...], element
) -> bool:
    """Does the claimed violation site really violate the restriction?

    Used to re-establish stored or transmitted verdicts against a freshly
    recomputed run; any mismatch in indices or witness element fails.
    """
    if restriction not in RESTRICTION_IDS:
        raise ValueError(f"unknown restriction {restriction!r}")
    if not all(0 <= i < len(seq) for i in indices):
        return False
    target = seq.informant.target
    horizon = len(seq) - 1
    if restriction == "cons":
        if len(indices) != 1 or element is None:
            return False
        (n,) = indices
        w = seq[n].extension
        return any(
            ex.value == element and w.member(ex.value) != bool(ex.label)
            for ex in prefix(seq.informant, n)
        )
    if restriction in _MONOTONE:
        if len(indices) != 2 or element is None:
            return False
        s, t = indices
        if not s < t:
            return False
        wa, wb = seq[s].extension, seq[t].extension
        if restriction.startswith("wmon") and not _consistent_at(
            wa, seq.informant, t, horizon
        ):
            return False
        return _pair_bad(restriction, wa, wb, target).member(element)
    if restriction == "caut_tar":
        if len(indices) != 1 or element is None:
            return False
        (t,) = indices
        w = seq[t].extension
        return (
            relate(w, target) is Relation.PROPER_SUPERSET
            and difference(w, target).member(element)
        )
    if restriction in _CAUTIOUS:
        if len(indices) != 2 or element is None:
            return False
        s, t = indices
        if not s < t:
            return False
        wa, wb = seq[s].extension, seq[t].extension
        if not _descent(wa, wb):
            return False
        if restriction == "caut_fin" and not wb.is_finite():
            return False
        if restriction == "caut_inf" and wb.is_finite():
            return False
        return difference(wa, wb).member(element)
    if restriction == "bc":
        if len(indices) != 1 or element is None:
            return False
        (n,) = indices
        if n != horizon:
            return False
        w = seq[n].extension
        return w.member(element) != target.member(element)
    # ex: either a label change at the horizon or a settled wrong extension
    if len(indices) == 2:
        s, t = indices
        return t == s + 1 and t == horizon and seq[s].label != seq[t].label
    if len(indices) == 1 and element is not None:
        (n,) = indices
        w = seq[n].extension
        return (
            seq[n].label == seq.final.label
            and w.member(element) != target.member(element)
        )
    if len(indices) == 1 and horizon == 0:
        return True  # nothing to settle against
    return False


def revalidate(verdict: Verdict, seq: HypSequence) -> bool:
    """Re-establish a verdict against a run; tampering comes back False."""
    if verdict.satisfied:
        return check(verdict.restriction, seq).satisfied
    return evaluate_site(verdict.restriction, seq, verdict.indices, verdict.element)


@dataclass(frozen=True)
class DelayabilityReport:
    restriction: str
    premise: Verdict
    conclusion: Verdict

    @property
    def implication_holds(self) -> bool:
        return (not self.premise.satisfied) or self.conclusion.satisfied


def probe_delayability(
    restriction: str,
    learner: Learner,
    informant: Informant,
    steps,
    informant2: Informant | None = None,
    ctx: EvalContext | None = None,
) -> DelayabilityReport:
    """Replay a run through a step slowdown and re-check the restriction.

    The slowed run emits, against the second informant, at step n the
    hypothesis the original run emitted at step steps[n]. That is only a
    fair comparison when the second informant has already shown everything
    the original had seen by then, so the preconditions are enforced hard.
    """
    if informant2 is None:
        informant2 = informant
    if informant.target != informant2.target:
        raise ProbeError("slowdown probes need informants for the same target")
    steps = tuple(steps)
    if not steps:
        raise ProbeError("need at least one step")
    if any(s < 0 for s in steps) or any(
        a > b for a, b in zip(steps, steps[1:])
    ):
        raise ProbeError("steps must be nondecreasing naturals")
    for n, s_n in enumerate(steps):
        shown = content(prefix(informant, s_n)).items
        if not shown <= content(prefix(informant2, n)).items:
            raise ProbeError(
                f"step {n} replays data the second informant has not shown"
            )
    if ctx is None:
        ctx = EvalContext()
    base = run(learner, informant, max(steps), ctx)
    delayed = HypSequence(
        tuple(base.items[s] for s in steps),
        f"{learner.name}[slowed]",
        informant2,
    )
    return DelayabilityReport(
        restriction, check(restriction, base), check(restriction, delayed)
    )


def probe_semantic(a: HypSequence, b: HypSequence) -> bool:
    """Pointwise same denotations; labels free to differ."""
    if len(a) != len(b):
        raise ProbeError("runs of different length are not comparable")
    return all(
        x.extension == y.extension for x, y in zip(a.items, b.items)
    )
