import pytest

from inferlab.combinators import (
    COMBINATORS,
    CanonicalReduction,
    canonical_prefix,
    combinator,
    cons_wmon_fourcase,
    cons_wmon_wrapper,
    dual_wmon_poison,
    patch,
    patched_learner,
    prefix_length,
    to_set_driven,
    _shortest_same_content,
    _stage_union,
)
from inferlab.evidence import (
    canonical_informant,
    content,
    neg,
    parse_sequence,
    pos,
    scheduled_informant,
)
from inferlab.hypothesis import DelaySchedule, Hypothesis, hypothesis_for
from inferlab.interaction import EvalContext, Learner, run
from inferlab.restrictions import check, check_all
from inferlab.upset import (
    EMPTY,
    NATURALS,
    complement,
    from_elements,
    parse,
)


def g_positives(d, ctx):
    return hypothesis_for(from_elements(pos(d)))


G_FIN_POS = Learner("positives", "G", g_positives)

G_COFINITE = Learner(
    "cofinite", "G",
    lambda d, ctx: hypothesis_for(complement(from_elements(neg(d)))),
)


def test_prefix_length_and_canonical_prefix():
    d = parse_sequence("0:+,1:-,3:+")
    assert prefix_length(d) == 2
    assert canonical_prefix(d) == parse_sequence("0:+,1:-")
    assert prefix_length(parse_sequence("")) == 0
    assert canonical_prefix(parse_sequence("1:-")) == parse_sequence("")
    full = parse_sequence("2:-,0:+,1:+")
    assert prefix_length(full) == 3
    assert canonical_prefix(full) == parse_sequence("0:+,1:+,2:-")
    red = CanonicalReduction.of(content(d))
    assert (red.length, red.sequence) == (2, parse_sequence("0:+,1:-"))


def test_to_set_driven_equals_base_on_canonical_informants():
    sd = to_set_driven(G_FIN_POS)
    assert sd.kind == "Sd" and sd.name == "positives[sd]"
    inf = canonical_informant(parse("|10"))
    base = run(G_FIN_POS, inf, 12)
    lifted = run(sd, inf, 12)
    assert base.items == lifted.items  # labels included


def test_to_set_driven_cuts_at_first_gap():
    sd = to_set_driven(G_FIN_POS)
    ctx = EvalContext()
    out = sd.fn(content(parse_sequence("0:+,2:+")), ctx)
    # the value 1 was never shown, so only the segment before it counts
    assert out.extension == from_elements({0})


def test_patch_forces_consistency_and_keeps_consistent_guesses():
    ctx = EvalContext()
    d = parse_sequence("0:+,1:-,4:+")
    wild = Hypothesis(0, parse("01|1"))  # contains 1, misses 0
    fixed = patch(wild, d, ctx)
    assert fixed.label % 2 == 1
    assert fixed.extension == parse("10|1")
    tame = hypothesis_for(parse("|10"))
    assert patch(tame, d, ctx).extension == tame.extension


def test_patched_learner_kinds():
    bad = Learner("void", "G", lambda d, ctx: hypothesis_for(EMPTY))
    inf = canonical_informant(parse("|10"))
    seq = run(patched_learner(bad), inf, 8)
    assert check("cons", seq).satisfied
    assert seq[5].extension == from_elements({0, 2, 4})
    sd = patched_learner(to_set_driven(bad))
    assert sd.kind == "Sd"
    assert run(sd, inf, 8).items[5].extension == from_elements({0, 2, 4})
    with pytest.raises(ValueError):
        patched_learner(Learner("it", "It", lambda h, ex, ctx: h))


def test_stage_union_windows():
    d = parse_sequence("0:+,1:-")
    plain = Hypothesis(0, NATURALS)
    assert _stage_union(plain, d) == from_elements({0})
    late_conflict = Hypothesis(0, NATURALS, DelaySchedule(((1, 5),)))
    assert _stage_union(late_conflict, d) == from_elements({0, 2, 3, 4})
    # positive only visible after the conflict: nothing survives
    late_pos = Hypothesis(0, NATURALS, DelaySchedule(((2, 9),)))
    assert _stage_union(late_pos, parse_sequence("2:+,1:-")) == EMPTY
    # conflict visible at stage zero
    assert _stage_union(plain, parse_sequence("0:-")) == EMPTY
    # missing positive contributes nothing
    assert _stage_union(Hypothesis(0, EMPTY), d) == EMPTY
    # no data: the full extension
    assert _stage_union(plain, parse_sequence("")) == NATURALS


def test_cons_wmon_wrapper_trace_on_cofinite_target():
    wrapped = cons_wmon_wrapper(G_COFINITE)
    inf = canonical_informant(parse("10|1"))  # everything but 1
    seq = run(wrapped, inf, 12)
    assert seq[0].extension == NATURALS
    assert seq[1].extension == NATURALS
    assert seq[2].extension == parse("10|1")
    verdicts = check_all(seq)
    assert verdicts["cons"].satisfied
    assert verdicts["wmon"].satisfied
    assert verdicts["bc"].satisfied and verdicts["bc"].detail == "correct from 2"


def test_cons_wmon_wrapper_cuts_stale_guesses():
    stubborn = Learner(
        "stubborn", "G",
        lambda d, ctx: Hypothesis(0, NATURALS, DelaySchedule(((1, 5),))),
    )
    wrapped = cons_wmon_wrapper(stubborn)
    ctx = EvalContext()
    out = wrapped.fn(parse_sequence("0:+,1:-"), ctx)
    # the base guess survives as its last stage before 1 becomes visible
    assert out.extension == from_elements({0, 2, 3, 4})
    assert check("cons", run(wrapped, canonical_informant(parse("10|1")), 8)).satisfied


def test_cons_wmon_wrapper_is_consistent_even_for_hostile_base():
    hostile = Learner(
        "hostile", "G",
        lambda d, ctx: hypothesis_for(from_elements(neg(d))),
    )
    seq = run(cons_wmon_wrapper(hostile), canonical_informant(parse("|10")), 10)
    assert check("cons", seq).satisfied
    assert check("wmon", seq).satisfied


def test_dual_wmon_poison_cases():
    ctx = EvalContext()
    # pass-through: consistent base answers survive verbatim
    segment = Learner(
        "segment", "Sd",
        lambda dset, ctx: hypothesis_for(
            NATURALS if not neg(dset)
            else from_elements(range(min(neg(dset))))
        ),
    )
    poisoned = dual_wmon_poison(segment)
    inf = canonical_informant(parse("1|0"))  # just {0}
    seq = run(poisoned, inf, 8)
    assert seq[0].extension == NATURALS
    assert seq[2].extension == from_elements({0})
    verdicts = check_all(seq)
    assert verdicts["cons"].satisfied
    assert verdicts["wmon_d"].satisfied
    assert verdicts["bc"].satisfied
    # positive-poison: a base missing shown positives collapses to them
    blind = Learner("blind", "Sd", lambda dset, ctx: hypothesis_for(from_elements({1})))
    out = dual_wmon_poison(blind).fn(parse_sequence("0:+"), ctx)
    assert out.extension == from_elements({0})
    out = dual_wmon_poison(blind).fn(parse_sequence("0:+,1:-"), ctx)
    assert out.extension == from_elements({0})
    # blow-up: covering a shown negative widens to everything-but-negatives
    allin = Learner("allin", "Sd", lambda dset, ctx: hypothesis_for(NATURALS))
    out = dual_wmon_poison(allin).fn(parse_sequence("0:+,1:-"), ctx)
    assert out.extension == parse("10|1")
    with pytest.raises(ValueError):
        dual_wmon_poison(G_COFINITE)


def test_shortest_same_content():
    d = parse_sequence("0:+,0:+,1:-")
    assert _shortest_same_content(d.items) == 3
    d = parse_sequence("0:+,1:-,0:+")
    assert _shortest_same_content(d.items) == 2
    assert _shortest_same_content(()) == 0


def test_fourcase_repeats_blown_up_conjecture():
    wrapped = cons_wmon_fourcase(G_COFINITE)
    inf = canonical_informant(parse("10|1"))
    seq = run(wrapped, inf, 10)
    # after conjecturing everything-but-negatives once, it sticks with it
    # while the negatives stand still
    assert seq[0].extension == NATURALS
    assert seq[1].extension == NATURALS
    assert seq[2].extension == parse("10|1")
    assert seq[4].extension == parse("10|1")
    verdicts = check_all(seq)
    assert verdicts["cons"].satisfied
    assert verdicts["wmon"].satisfied
    assert verdicts["bc"].satisfied


def test_fourcase_ignores_repeated_data():
    wrapped = cons_wmon_fourcase(G_FIN_POS)
    inf = scheduled_informant(parse("10|1"), seed=3, plan=[0, 1, 0])
    ctx = EvalContext()
    seq = run(wrapped, inf, 3, ctx)
    # the third datum repeats the first, so the answer is reused verbatim
    assert seq[3] == seq[2]


def test_fourcase_demotes_wrong_positives():
    blind = Learner("blind", "G", lambda d, ctx: hypothesis_for(from_elements({9})))
    ctx = EvalContext()
    out = cons_wmon_fourcase(blind).fn(parse_sequence("0:+"), ctx)
    assert out.extension == from_elements({0})


def test_combinator_registry():
    assert set(COMBINATORS) == {
        "to_sd", "patch", "cons_wmon", "dual_wmon_poison", "cons_wmon_fourcase"
    }
    assert combinator("patch") is patched_learner
    with pytest.raises(ValueError):
        combinator("fix_everything")
