"""Separation games played against pluggable opponent learners.

Each driver here replays one of the classic diagonalization arguments as
an executable game: feed the opponent a staged informant, wait for it to
commit to a conjecture, then steer the target so that keeping the
commitment breaks a restriction.  The outcome is a `Witness` that either
pins a concrete violation site (re-checkable through the restrictions
module), documents an unbounded mind-change transcript, exhibits a pair
of targets the opponent cannot tell apart, or honestly reports that the
search bounds ran out.

Failure to find a witness proves nothing; a returned violation always
re-verifies.  Opponents may live in this process (any `Learner`) or in a
child process speaking a one-line query protocol.
"""

from __future__ import annotations

import queue
import subprocess
import threading
from dataclasses import dataclass, field

from .catalog import language
from .evidence import (
    DataSet,
    Informant,
    canonical_informant,
    content,
    format_sequence,
    outline,
    pos,
    prefix,
)
from .hypothesis import Hypothesis
from .interaction import KINDS, EvalContext, Learner, run
from .restrictions import Verdict, check, revalidate
from .upset import (
    NATURALS,
    UPSet,
    bounded_elements,
    complement,
    difference,
    from_elements,
    min_element,
    parse,
    union,
)

__all__ = [
    "ADVERSARY_IDS",
    "Bounds",
    "DEFAULT_BOUNDS",
    "MindchangeRound",
    "OpponentError",
    "SubprocessOpponent",
    "Witness",
    "caut_adversary",
    "cautfin_adversary",
    "mindchange_driver",
    "monotonicity_adversary",
    "run_adversary",
    "verify_witness",
]

WITNESS_KINDS = (
    "restriction-violation",
    "mindchange-transcript",
    "split-pair",
    "exhausted",
)

ADVERSARY_IDS = (
    "caut_tar",
    "caut_inf",
    "caut_fin",
    "smon_vs_dual",
    "dual_vs_smon",
    "mon_vs_dual",
    "dual_vs_mon",
    "mindchange",
)


@dataclass(frozen=True)
class Bounds:
    """Search budget: stabilization index, probe depth, driver rounds."""

    n_search: int = 100
    t_bound: int = 50
    rounds: int = 10

    def __post_init__(self):
        if min(self.n_search, self.t_bound, self.rounds) < 1:
            raise ValueError("bounds must be positive")


DEFAULT_BOUNDS = Bounds()


@dataclass(frozen=True)
class MindchangeRound:
    index: int
    b: int
    t: int
    probe: int  # the fresh number offered this round
    label_before: int
    label_after: int


@dataclass(frozen=True)
class Witness:
    kind: str
    adversary: str
    opponent: str
    bounds: Bounds
    note: str = ""
    informant: Informant | None = None
    horizon: int = 0
    verdict: Verdict | None = None
    params: tuple[tuple[str, int], ...] = ()
    transcript: tuple[MindchangeRound, ...] = ()
    split: tuple[UPSet, UPSet] | None = None
    data: DataSet | None = None
    opponent_ref: Learner | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.kind not in WITNESS_KINDS:
            raise ValueError(f"unknown witness kind {self.kind!r}")


def _find_extension(seq, target: UPSet, start: int = 0) -> int | None:
    for i in range(start, len(seq)):
        if seq[i].extension == target:
            return i
    return None


def _exhausted(adversary, opponent, bounds, note, **extra) -> Witness:
    return Witness(
        "exhausted", adversary, opponent.name, bounds, note=note,
        opponent_ref=opponent, **extra,
    )


def _stage1_naturals(adversary, opponent, bounds, ctx):
    """Common opening: wait for the opponent to conjecture the naturals."""
    informant = canonical_informant(NATURALS)
    seq = run(opponent, informant, bounds.n_search, ctx)
    n0 = _find_extension(seq, NATURALS)
    if n0 is None:
        evidence = check("bc", seq)
        return None, _exhausted(
            adversary, opponent, bounds,
            f"opponent never conjectured the naturals within {bounds.n_search}"
            " steps, so there is nothing to descend from; it also fails bc"
            " on the naturals at this horizon",
            informant=informant, horizon=bounds.n_search, verdict=evidence,
        )
    return n0, None


def caut_adversary(
    variant: str,
    opponent: Learner,
    bounds: Bounds = DEFAULT_BOUNDS,
    ctx: EvalContext | None = None,
) -> Witness:
    """Force a descent from the naturals onto a cofinite target.

    After the opponent commits to the naturals at some index n0, the
    target is shrunk to exclude n0+1.  An opponent that goes on to learn
    the smaller set must land on a proper subset of an earlier guess.
    """
    if variant not in ("caut", "caut_tar", "caut_inf"):
        raise ValueError(f"caut adversary cannot target {variant!r}")
    n0, out = _stage1_naturals(variant, opponent, bounds, ctx)
    if out is not None:
        return out
    target = complement(from_elements({n0 + 1}))
    informant = canonical_informant(target)
    horizon = n0 + 2 + bounds.t_bound
    seq = run(opponent, informant, horizon, ctx)
    if seq[n0].extension != NATURALS:
        return _exhausted(variant, opponent, bounds,
                          f"stage replay diverged at index {n0}")
    verdict = check(variant, seq)
    if verdict.satisfied:
        return _exhausted(
            variant, opponent, bounds,
            f"no {variant} violation up to horizon {horizon};"
            f" bc on the shrunk target: {check('bc', seq).detail}",
            informant=informant, horizon=horizon,
            params=(("n0", n0),),
        )
    return Witness(
        "restriction-violation", variant, opponent.name, bounds,
        note=f"committed to the naturals at {n0}, then dropped {n0 + 1}",
        informant=informant, horizon=horizon, verdict=verdict,
        params=(("n0", n0),), opponent_ref=opponent,
    )


def cautfin_adversary(
    opponent: Learner,
    bounds: Bounds = DEFAULT_BOUNDS,
    ctx: EvalContext | None = None,
) -> Witness:
    """Descent variant that lands on a finite target.

    The second target is exactly the positive data shown before the
    opponent conjectured the naturals, so any later correct conjecture
    is a finite proper subset of that earlier guess.
    """
    n0, out = _stage1_naturals("caut_fin", opponent, bounds, ctx)
    if out is not None:
        return out
    target = from_elements(range(n0))
    informant = canonical_informant(target)
    horizon = n0 + 2 + bounds.t_bound
    seq = run(opponent, informant, horizon, ctx)
    if seq[n0].extension != NATURALS:
        return _exhausted("caut_fin", opponent, bounds,
                          f"stage replay diverged at index {n0}")
    verdict = check("caut_fin", seq)
    if verdict.satisfied:
        return _exhausted(
            "caut_fin", opponent, bounds,
            f"no finite descent up to horizon {horizon};"
            f" bc on the finite target: {check('bc', seq).detail}",
            informant=informant, horizon=horizon, params=(("n0", n0),),
        )
    return Witness(
        "restriction-violation", "caut_fin", opponent.name, bounds,
        note=f"conjectured the naturals at {n0}, target returns to the"
             " positive data shown so far",
        informant=informant, horizon=horizon, verdict=verdict,
        params=(("n0", n0),), opponent_ref=opponent,
    )


def _checked_witness(adversary, opponent, bounds, informant, horizon,
                     seq, verdict, note, params) -> Witness:
    # a constructed site that does not re-verify is a driver bug; report
    # exhausted rather than hand out a bogus witness
    if not revalidate(verdict, seq):
        return _exhausted(adversary, opponent, bounds,
                          "constructed violation site failed revalidation",
                          informant=informant, horizon=horizon, params=params)
    return Witness(
        "restriction-violation", adversary, opponent.name, bounds, note=note,
        informant=informant, horizon=horizon, verdict=verdict, params=params,
        opponent_ref=opponent,
    )


def _smon_vs_dual(opponent, bounds, stage1, ctx) -> Witness:
    base = from_elements({0}) if stage1 is None else stage1
    if not base.is_finite():
        raise ValueError("stage-1 target must be finite")
    informant1 = canonical_informant(base)
    seq1 = run(opponent, informant1, bounds.n_search, ctx)
    n0 = _find_extension(seq1, base)
    if n0 is None:
        return _exhausted(
            "smon_vs_dual", opponent, bounds,
            f"opponent never conjectured {base} within {bounds.n_search}"
            " steps; no commitment to grow past",
            informant=informant1, horizon=bounds.n_search,
            verdict=check("bc", seq1),
        )
    shown = set(outline(prefix(informant1, n0)))
    shown |= set(bounded_elements(base, len(base.prefix)))
    x = max(shown, default=-1) + 1
    grown = union(base, from_elements({x}))
    informant = canonical_informant(grown)
    horizon = x + 1 + bounds.t_bound
    seq = run(opponent, informant, horizon, ctx)
    if seq[n0].extension != base:
        return _exhausted("smon_vs_dual", opponent, bounds,
                          f"stage replay diverged at index {n0}")
    t = next((i for i in range(n0 + 1, horizon + 1)
              if seq[i].extension.member(x)), None)
    if t is None:
        return _exhausted(
            "smon_vs_dual", opponent, bounds,
            f"opponent never admitted the fresh element {x};"
            f" bc on the grown target: {check('bc', seq).detail}",
            informant=informant, horizon=horizon,
            params=(("n0", n0), ("x", x)),
        )
    verdict = Verdict(
        "smon_d", False, (n0, t), x,
        f"conjecture at {t} gained {x} over the conjecture at {n0}",
    )
    return _checked_witness(
        "smon_vs_dual", opponent, bounds, informant, horizon, seq, verdict,
        f"committed to {base} at {n0}, grew by the unseen {x} at {t}",
        (("n0", n0), ("x", x)),
    )


def _dual_vs_smon(opponent, bounds, ctx) -> Witness:
    n0, out = _stage1_naturals("dual_vs_smon", opponent, bounds, ctx)
    if out is not None:
        return out
    target = language("segment", n=n0 + 1)
    informant = canonical_informant(target)
    horizon = n0 + 3 + bounds.t_bound
    seq = run(opponent, informant, horizon, ctx)
    if seq[n0].extension != NATURALS:
        return _exhausted("dual_vs_smon", opponent, bounds,
                          f"stage replay diverged at index {n0}")
    t = next((i for i in range(n0 + 1, horizon + 1)
              if seq[i].extension != NATURALS), None)
    if t is None:
        return _exhausted(
            "dual_vs_smon", opponent, bounds,
            "opponent clung to the naturals on a segment target;"
            f" bc there: {check('bc', seq).detail}",
            informant=informant, horizon=horizon, params=(("n0", n0),),
        )
    element = min_element(difference(NATURALS, seq[t].extension))
    verdict = Verdict(
        "smon", False, (n0, t), element,
        f"conjecture at {t} lost {element} against the naturals at {n0}",
    )
    return _checked_witness(
        "dual_vs_smon", opponent, bounds, informant, horizon, seq, verdict,
        f"guessed the naturals at {n0}, then had to shrink onto the segment",
        (("n0", n0),),
    )


_THREE_STAGE = {
    # kind -> (tier builders, value-to-row divisor, broken restriction)
    "mon_vs_dual": ("streamX", "streamY", "streamZ", 3, "mon_d"),
    "dual_vs_mon": ("evenX", "evenY", "evenZ", 2, "mon"),
}


def _three_stage(kind, opponent, bounds, ctx) -> Witness:
    xid, yid, zid, row, rid = _THREE_STAGE[kind]
    base = language(xid)
    informant1 = canonical_informant(base)
    seq1 = run(opponent, informant1, bounds.n_search, ctx)
    n_x = _find_extension(seq1, base)
    if n_x is None:
        return _exhausted(
            kind, opponent, bounds,
            f"opponent never conjectured the base tier within"
            f" {bounds.n_search} steps",
            informant=informant1, horizon=bounds.n_search,
            verdict=check("bc", seq1),
        )
    n = max((v // row for v in outline(prefix(informant1, n_x))), default=-1) + 1
    mid = language(yid, n=n)
    informant2 = canonical_informant(mid)
    horizon2 = n_x + bounds.n_search
    seq2 = run(opponent, informant2, horizon2, ctx)
    if seq2[n_x].extension != base:
        return _exhausted(kind, opponent, bounds,
                          f"stage replay diverged at index {n_x}")
    n_y = _find_extension(seq2, mid, start=n_x + 1)
    if n_y is None:
        return _exhausted(
            kind, opponent, bounds,
            f"opponent never conjectured the middle tier (n={n}) within"
            f" {horizon2} steps",
            informant=informant2, horizon=horizon2,
            verdict=check("bc", seq2), params=(("n_x", n_x), ("n", n)),
        )
    m = max(n + 1,
            max((v // row for v in outline(prefix(informant2, n_y))),
                default=-1) + 1)
    top = language(zid, n=n, m=m)
    informant = canonical_informant(top)
    horizon = n_y + bounds.n_search
    seq = run(opponent, informant, horizon, ctx)
    if seq[n_x].extension != base or seq[n_y].extension != mid:
        return _exhausted(kind, opponent, bounds,
                          f"stage replay diverged before index {n_y}")
    n_z = _find_extension(seq, top, start=n_y + 1)
    if n_z is None:
        return _exhausted(
            kind, opponent, bounds,
            f"opponent never conjectured the third tier (n={n}, m={m})"
            f" within {horizon} steps",
            informant=informant, horizon=horizon,
            verdict=check("bc", seq),
            params=(("n_x", n_x), ("n", n), ("n_y", n_y), ("m", m)),
        )
    if kind == "mon_vs_dual":
        element = 3 * m + 4  # the b past the cut: in Y_n, in neither X nor Z
        detail = (f"conjecture at {n_y} includes {element}, which the target"
                  f" and the conjecture at {n_x} both exclude")
    else:
        element = 2 * m  # in X and in Z, but dropped by Y_n
        detail = (f"conjecture at {n_y} drops the target element {element}"
                  f" that the conjecture at {n_x} still carried")
    verdict = Verdict(rid, False, (n_x, n_y), element, detail)
    return _checked_witness(
        kind, opponent, bounds, informant, horizon, seq, verdict,
        f"walked the opponent through all three tiers (n={n}, m={m},"
        f" settling at {n_z})",
        (("n_x", n_x), ("n", n), ("n_y", n_y), ("m", m), ("n_z", n_z)),
    )


def monotonicity_adversary(
    kind: str,
    opponent: Learner,
    bounds: Bounds = DEFAULT_BOUNDS,
    stage1: UPSet | None = None,
    ctx: EvalContext | None = None,
) -> Witness:
    """Stage a family walk that breaks the named monotonicity variant.

    Two-stage games (smon_vs_dual, dual_vs_smon) grow or shrink the
    target once; three-stage games (mon_vs_dual, dual_vs_mon) walk the
    opponent through the X/Y/Z tiers of its home family. `stage1`
    overrides the opening target where the game allows it.
    """
    if kind == "smon_vs_dual":
        return _smon_vs_dual(opponent, bounds, stage1, ctx)
    if kind == "dual_vs_smon":
        return _dual_vs_smon(opponent, bounds, ctx)
    if kind in _THREE_STAGE:
        return _three_stage(kind, opponent, bounds, ctx)
    raise ValueError(f"unknown monotonicity game {kind!r}")


# ---------------------------------------------------------------------------
# mind changes

def _succ(d: DataSet, p: int, t: int) -> DataSet:
    """Content of the canonical informant for pos(d) + {p}, length p + t."""
    target = from_elements(pos(d) | {p})
    return content(prefix(canonical_informant(target), p + t))


def mindchange_driver(
    opponent: Learner,
    max_rounds: int = 10,
    t_bound: int = 50,
    ctx: EvalContext | None = None,
) -> Witness:
    """Force syntactic mind changes out of a set-driven opponent.

    Each round offers one of two fresh numbers and searches probe depths
    t <= t_bound for an output label change; if neither fresh number
    ever flips the label, the two grown targets form a split pair the
    opponent answers identically.
    """
    if opponent.kind != "Sd":
        raise OpponentError("mindchange driver needs a set-driven opponent")
    bounds = Bounds(DEFAULT_BOUNDS.n_search, t_bound, max_rounds)
    if ctx is None:
        ctx = EvalContext()
    d = DataSet(frozenset())
    transcript: list[MindchangeRound] = []
    for k in range(max_rounds):
        base = opponent.fn(d, ctx)
        top = max(outline(d), default=-1)
        found = None
        for b in (0, 1):
            p = top + 1 + b
            for t in range(t_bound + 1):
                cand = _succ(d, p, t)
                answer = opponent.fn(cand, ctx)
                if answer.label != base.label:
                    found = (b, t, p, answer.label, cand)
                    break
            if found:
                break
        if found is None:
            p0, p1 = top + 1, top + 2
            split = (from_elements(pos(d) | {p0}), from_elements(pos(d) | {p1}))
            return Witness(
                "split-pair", "mindchange", opponent.name, bounds,
                note=f"label never changed over {t_bound + 1} probe depths"
                     " for either fresh element; one conjecture cannot fit"
                     " both targets",
                split=split, data=d,
                params=(("p0", p0), ("p1", p1), ("round", k)),
                opponent_ref=opponent,
            )
        b, t, p, after, cand = found
        transcript.append(MindchangeRound(k, b, t, p, base.label, after))
        d = cand
    return Witness(
        "mindchange-transcript", "mindchange", opponent.name, bounds,
        note=f"forced {max_rounds} mind changes", transcript=tuple(transcript),
        data=d, params=(("rounds", max_rounds),), opponent_ref=opponent,
    )


def run_adversary(
    adversary_id: str,
    opponent: Learner,
    bounds: Bounds = DEFAULT_BOUNDS,
    ctx: EvalContext | None = None,
) -> Witness:
    """Dispatch one registered adversary by id."""
    if adversary_id in ("caut_tar", "caut_inf"):
        return caut_adversary(adversary_id, opponent, bounds, ctx)
    if adversary_id == "caut_fin":
        return cautfin_adversary(opponent, bounds, ctx)
    if adversary_id in ("smon_vs_dual", "dual_vs_smon") or adversary_id in _THREE_STAGE:
        return monotonicity_adversary(adversary_id, opponent, bounds, ctx=ctx)
    if adversary_id == "mindchange":
        return mindchange_driver(opponent, bounds.rounds, bounds.t_bound, ctx)
    raise ValueError(
        f"unknown adversary {adversary_id!r}; known: {', '.join(ADVERSARY_IDS)}"
    )


def verify_witness(w: Witness) -> bool:
    """Reproduce the recorded game and re-check the claimed relation."""
    if w.kind == "exhausted":
        return True
    if w.opponent_ref is None:
        return False
    ctx = EvalContext()
    if w.kind == "restriction-violation":
        if w.informant is None or w.verdict is None or w.verdict.satisfied:
            return False
        seq = run(w.opponent_ref, w.informant, w.horizon, ctx)
        return revalidate(w.verdict, seq)
    if w.kind == "mindchange-transcript":
        if not w.transcript:
            return False
        d = DataSet(frozenset())
        for r in w.transcript:
            before = w.opponent_ref.fn(d, ctx).label
            if before != r.label_before:
                return False
            if r.probe != max(outline(d), default=-1) + 1 + r.b:
                return False
            cand = _succ(d, r.probe, r.t)
            after = w.opponent_ref.fn(cand, ctx).label
            if after != r.label_after or after == before:
                return False
            d = cand
        return True
    if w.kind == "split-pair":
        if w.data is None or w.split is None or w.split[0] == w.split[1]:
            return False
        base = w.opponent_ref.fn(w.data, ctx).label
        top = max(outline(w.data), default=-1)
        for b in (0, 1):
            p = top + 1 + b
            for t in range(w.bounds.t_bound + 1):
                if w.opponent_ref.fn(_succ(w.data, p, t), ctx).label != base:
                    return False
        return True
    return False


# ---------------------------------------------------------------------------
# external opponents

class OpponentError(RuntimeError):
    """The external opponent broke protocol, timed out, or died."""


class SubprocessOpponent:
    """Opponent living in a child process, one line each way per query.

    Protocol: request `Q <data-text>` where the payload is the usual
    value:+,value:- rendering (possibly empty); reply `H <label> <P|Q>`.
    The child stays alive between queries; replies are read by a pump
    thread so a silent child turns into a timeout, not a hang.
    """

    def __init__(self, argv, timeout: float = 5.0, kind: str = "Sd",
                 name: str = "external"):
        if kind not in KINDS:
            raise ValueError(f"unknown interaction kind {kind!r}")
        self.kind = kind
        self.name = name
        self.timeout = timeout
        self._proc = subprocess.Popen(
            argv, stdin=subprocess.PIPE, stdout=subprocess.PIPE,
            text=True, bufsize=1,
        )
        self._lines: queue.Queue = queue.Queue()
        threading.Thread(target=self._pump, daemon=True).start()

    def _pump(self):
        assert self._proc.stdout is not None
        for line in self._proc.stdout:
            self._lines.put(line)
        self._lines.put(None)

    def ask(self, d) -> Hypothesis:
        text = format_sequence(d)
        try:
            assert self._proc.stdin is not None
            self._proc.stdin.write(f"Q {text}\n")
            self._proc.stdin.flush()
        except (BrokenPipeError, OSError, ValueError) as exc:
            raise OpponentError(f"opponent process is gone: {exc}") from None
        try:
            line = self._lines.get(timeout=self.timeout)
        except queue.Empty:
            raise OpponentError(
                f"opponent timed out after {self.timeout}s"
            ) from None
        if line is None:
            raise OpponentError("opponent closed its output")
        parts = line.strip().split(maxsplit=2)
        if len(parts) != 3 or parts[0] != "H":
            raise OpponentError(f"malformed reply {line.strip()!r}")
        try:
            return Hypothesis(int(parts[1]), parse(parts[2]))
        except ValueError as exc:
            raise OpponentError(f"malformed reply {line.strip()!r}: {exc}") from None

    def as_learner(self) -> Learner:
        return Learner(self.name, self.kind, lambda d, ctx: self.ask(d))

    def close(self):
        for stream in (self._proc.stdin, self._proc.stdout):
            if stream is not None:
                try:
                    stream.close()
                except OSError:
                    pass
        self._proc.terminate()
        try:
            self._proc.wait(timeout=2)
        except subprocess.TimeoutExpired:
            self._proc.kill()
            self._proc.wait()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()
        return False
