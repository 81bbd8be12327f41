import pytest

from inferlab.evidence import (
    DataSequence,
    Example,
    canonical_informant,
    pos,
    prefix,
    scheduled_informant,
)
from inferlab.hypothesis import Hypothesis, hypothesis_for
from inferlab.interaction import (
    INITIAL_HYPOTHESIS,
    EvalContext,
    HypSequence,
    Learner,
    OrderProbe,
    as_full_information,
    order_insensitivity_probe,
    run,
)
from inferlab.upset import EMPTY, from_elements, parse, union


def sd_positives(d, ctx):
    return hypothesis_for(from_elements(pos(d)))


FIN_POS = Learner("positives", "Sd", sd_positives)

LENGTH_AWARE = Learner(
    "length-aware", "Psd", lambda d, n, ctx: Hypothesis(n, from_elements(pos(d)))
)

IT_COLLECT = Learner(
    "collect",
    "It",
    lambda h, ex, ctx: hypothesis_for(
        union(h.extension, from_elements({ex.value})) if ex.label else h.extension
    ),
)


def test_learner_rejects_unknown_kind():
    with pytest.raises(ValueError):
        Learner("x", "SD", sd_positives)


def test_initial_hypothesis_is_empty():
    assert INITIAL_HYPOTHESIS.extension == EMPTY
    assert INITIAL_HYPOTHESIS.label % 2 == 0


def test_run_produces_horizon_plus_one_items():
    inf = canonical_informant(parse("|10"))
    seq = run(FIN_POS, inf, 6)
    assert len(seq) == 7
    assert seq.learner_name == "positives"
    assert seq.final is seq[6]
    with pytest.raises(ValueError):
        run(FIN_POS, inf, -1)


def test_run_on_sd_learner_tracks_positives():
    inf = canonical_informant(parse("|10"))
    seq = run(FIN_POS, inf, 5)
    assert seq[0].extension == EMPTY
    assert seq[3].extension == from_elements({0, 2})
    assert seq[5].extension == from_elements({0, 2, 4})


def test_run_is_deterministic_and_prefix_coherent():
    inf = scheduled_informant(parse("1|0"), seed=5, plan=[0, (2, 0)])
    long = run(FIN_POS, inf, 12)
    again = run(FIN_POS, inf, 12)
    short = run(FIN_POS, inf, 7)
    assert long.items == again.items
    assert short.items == long.items[:8]


def test_psd_learner_sees_length():
    inf = canonical_informant(parse("|10"))
    seq = run(LENGTH_AWARE, inf, 4)
    assert [h.label for h in seq.items] == [0, 1, 2, 3, 4]


def test_iterative_run_threads_previous_hypothesis():
    inf = canonical_informant(parse("|10"))
    seq = run(IT_COLLECT, inf, 5)
    assert seq[0] == INITIAL_HYPOTHESIS
    # example i arrives between items i and i+1
    assert seq[1].extension == from_elements({0})
    assert seq[2].extension == from_elements({0})
    assert seq[3].extension == from_elements({0, 2})
    assert seq[5].extension == from_elements({0, 2, 4})


def test_as_full_information_agrees_with_native_run():
    inf = canonical_informant(parse("|10"))
    for learner in (FIN_POS, LENGTH_AWARE, IT_COLLECT):
        lifted = as_full_information(learner)
        assert lifted.kind == "G"
        native = run(learner, inf, 8)
        via_g = run(lifted, inf, 8)
        assert native.items == via_g.items
    assert as_full_information(FIN_POS).name == "positives[G]"
    g = Learner("id", "G", lambda d, ctx: INITIAL_HYPOTHESIS)
    assert as_full_information(g) is g


def test_order_probe_passes_for_set_driven_behavior():
    base = DataSequence((Example(3, 1), Example(1, 0), Example(0, 1)))
    probe = order_insensitivity_probe(FIN_POS, base, mode="sd", trials=10, seed=2)
    assert probe == OrderProbe(True, "sd", 10)


def test_order_probe_detects_length_sensitivity():
    base = DataSequence((Example(3, 1), Example(1, 0), Example(0, 1)))
    sd_probe = order_insensitivity_probe(
        LENGTH_AWARE, base, mode="sd", trials=20, seed=2
    )
    assert not sd_probe.insensitive
    assert sd_probe.witness is not None
    base_again, variant = sd_probe.witness
    assert base_again == base and len(variant) != len(base)
    psd_probe = order_insensitivity_probe(
        LENGTH_AWARE, base, mode="psd", trials=20, seed=2
    )
    assert psd_probe.insensitive


def test_order_probe_detects_order_sensitivity():
    first_biased = Learner(
        "head", "G", lambda d, ctx: hypothesis_for(from_elements(
            {d[0].value} if len(d) else set()))
    )
    base = DataSequence((Example(3, 1), Example(1, 0)))
    probe = order_insensitivity_probe(first_biased, base, mode="psd", trials=20, seed=0)
    assert not probe.insensitive
    with pytest.raises(ValueError):
        order_insensitivity_probe(FIN_POS, base, mode="set", trials=3)


def test_fresh_labels_are_odd_and_increasing():
    ctx = EvalContext()
    labels = [ctx.fresh_label() for _ in range(5)]
    assert labels == [1, 3, 5, 7, 9]
