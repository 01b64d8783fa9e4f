import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from radonfourier import testfunctions as tf
from radonfourier import topology as top
from radonfourier.densities import ModulatedConstant, indicator
from radonfourier.errors import InconsistencyDetected
from radonfourier.measure import (Atom, CompactInterval, Measure, dirac, dirac_comb,
                                  lebesgue_measure, pair)
from radonfourier.topology import (BOUNDED, CONVERGES, DIVERGES, EQUI_TB, INCONCLUSIVE,
                                   NOT_EQUI_TB, PASS, UNBOUNDED, CompactLadder, Functional,
                                   MeasureSequence, bound_verdict, classify,
                                   equi_translation_bounded, gap, gap_verdict, l1_bound,
                                   weighted_l1_constant, theorem_gate, vaguely_bounded)

NS = (1, 2, 4, 8, 16, 32)
SHIFT = MeasureSequence(lambda n: dirac(1.0 / n), "delta_1/n")


# -- trend rules -------------------------------------------------------------


@pytest.mark.parametrize("gaps, expected", [
    ([1 / n for n in NS], CONVERGES),
    ([n ** -0.5 for n in NS], CONVERGES),
    ([0.0] * 6, CONVERGES),
    ([1e-3, 1e-5, 1e-9, 3e-8, 1e-12, 5e-8], CONVERGES),  # roundoff noise below threshold
    ([float(n) for n in NS], DIVERGES),
    ([math.sqrt(n) for n in NS], DIVERGES),
    ([2.0] * 6, DIVERGES),
    ([math.log(1 + n) for n in NS], DIVERGES),
    ([1.0, 0.1, 1.0, 0.1, 1.0, 0.1], INCONCLUSIVE),
])
def test_gap_verdict_rules(gaps, expected):
    assert gap_verdict(NS, gaps).verdict == expected


def test_gap_verdict_exact_witness():
    assert gap_verdict((1, 2), [1.0, 5e3], exact=True).verdict == DIVERGES
    assert gap_verdict((), []).verdict == top.NOT_APPLICABLE


def test_bound_verdict():
    assert bound_verdict(NS, [2.0] * 6).verdict == BOUNDED
    assert bound_verdict(NS, [float(n) for n in NS]).verdict == UNBOUNDED
    assert bound_verdict(NS, [1.0, math.inf]).verdict == UNBOUNDED
    assert bound_verdict((1,), [2e3]).verdict == UNBOUNDED


@given(st.floats(0.3, 3.0), st.floats(0.01, 100.0))
def test_power_law_decay_always_converges(p, c):
    assert gap_verdict(NS, [c * n ** -p for n in NS]).verdict == CONVERGES


@given(st.floats(0.3, 2.0), st.floats(0.01, 10.0))
def test_power_law_growth_always_diverges(p, c):
    assert gap_verdict(NS, [c * n ** p for n in NS]).verdict == DIVERGES


# -- gaps and boundedness ----------------------------------------------------


def test_shift_sequence_gaps():
    v = gap(SHIFT, dirac(0.0), "vague")
    assert v.verdict == CONVERGES and v.exact.all()
    # exact oracle: tent0 has slope -1 at 0+, so the gap is exactly 1/n
    j = v.test_ids.index("tent0")
    assert np.allclose(v.values[:, j], [1.0 / n for n in NS], atol=1e-15)
    nrm = gap(SHIFT, dirac(0.0), "norm")
    assert nrm.verdict == DIVERGES
    assert np.all(nrm.values == 2.0)


def test_vague_boundedness():
    grow = MeasureSequence(lambda n: dirac(0.0, float(n)), "n delta_0")
    assert vaguely_bounded(grow).verdict == UNBOUNDED
    assert vaguely_bounded(SHIFT).verdict == BOUNDED


def test_equi_translation_boundedness():
    crowd = MeasureSequence(lambda n: Measure(atoms=tuple(Atom(k / n, 1.0) for k in range(n + 1))),
                            "crowd")
    r = equi_translation_bounded(crowd)
    assert r.verdict == NOT_EQUI_TB
    assert equi_translation_bounded(SHIFT).verdict == EQUI_TB


def test_ladder_must_be_nested():
    with pytest.raises(ValueError):
        CompactLadder((CompactInterval(-1, 1), CompactInterval(-1, 2)))


def test_functional_limit():
    deriv = Functional("f'(0)", lambda f: f.derivative_at(0.0))
    seq = MeasureSequence(lambda n: n * dirac(1.0 / n) - n * dirac(0.0), "difference quotients")
    t = gap(seq, deriv, "tempered", schedule=(8, 16, 32, 64))
    assert t.verdict == CONVERGES
    rep = classify(seq, deriv, schedule=(8, 16, 32, 64), modes=("tempered",))
    assert any("not a measure" in n for n in rep.notes)


# -- classification and audit -----------------------------------------------


def test_classify_shift_sequence():
    rep = classify(SHIFT, dirac(0.0))
    v = rep.verdicts
    assert v["vague"] == CONVERGES and v["norm"] == DIVERGES
    assert v["ft_equi_tb"] == EQUI_TB and v["ft_vague"] == CONVERGES
    csv_text = rep.to_csv()
    assert csv_text.splitlines()[0] == "label,topology,n,test_id,value,verdict"
    assert "ft_vague" in csv_text
    assert "delta_1/n" in rep.summary()


@pytest.mark.parametrize("verdicts", [
    {"equi_tb": EQUI_TB, "vague": CONVERGES, "tempered": DIVERGES},
    {"vaguely_bounded": BOUNDED, "tempered": CONVERGES, "vague": DIVERGES},
    {"norm": CONVERGES, "product": DIVERGES},
    {"product": CONVERGES, "vague": DIVERGES},
])
def test_audit_detects_contradictions(verdicts):
    with pytest.raises(InconsistencyDetected):
        top._audit(verdicts)
    with pytest.raises(InconsistencyDetected):
        top._audit({"ft_" + k: v for k, v in verdicts.items()}, "ft_")


def test_audit_accepts_consistent():
    top._audit({"equi_tb": EQUI_TB, "vague": CONVERGES, "tempered": CONVERGES,
                "norm": DIVERGES, "product": CONVERGES})


def test_combine_verdicts():
    assert top._combine_verdicts([CONVERGES, DIVERGES]) == DIVERGES
    assert top._combine_verdicts([CONVERGES, CONVERGES]) == CONVERGES
    assert top._combine_verdicts([CONVERGES, INCONCLUSIVE]) == INCONCLUSIVE
    assert top._combine_verdicts([]) == top.NOT_APPLICABLE


# -- weighted L1 bound -------------------------------------------------------


def test_l1_constant_closed_form():
    lo, hi = weighted_l1_constant()
    target = 1.0 + math.pi * math.tanh(math.pi)
    assert lo <= target <= hi
    assert hi - lo < 1e-10


def test_l1_constant_oracle_partial_sum():
    # independent: direct partial sums with the crude tail bound 2/K
    K = 200_000
    k = np.arange(1, K + 1)
    s = 1.0 + 2.0 * np.sum(1.0 / (1.0 + (k - 0.5) ** 2))
    lo, hi = weighted_l1_constant()
    assert s <= lo <= s + 2.0 / (K - 0.5) + 1e-12


def _random_measure(rng):
    mu = Measure()
    for _ in range(int(rng.integers(1, 5))):
        mu = mu + dirac(rng.uniform(-3, 3), rng.normal())
    if rng.random() < 0.5:
        mu = mu + dirac_comb(rng.uniform(0.5, 2.0), rng.uniform(-1, 1), rng.normal())
    if rng.random() < 0.5:
        mu = mu + Measure(ac=(ModulatedConstant(rng.uniform(-1, 1), rng.normal()),))
    return mu


def _random_test(rng):
    if rng.random() < 0.5:
        return tf.tent(rng.uniform(-2, 2), rng.uniform(0.2, 2.0), rng.normal())
    return tf.gaussian(rng.uniform(-1, 1), rng.uniform(0.5, 1.5), rng.normal(), int(rng.integers(0, 4)))


def test_l1_margin_nonnegative_random(rng):
    for _ in range(100):
        r = l1_bound(_random_measure(rng), _random_test(rng))
        assert r.margin >= 0, r


def test_l1_bound_is_nearly_tight_for_comb():
    r = l1_bound(dirac_comb(), tf.gaussian(0.0, 0.6))
    assert r.lhs <= r.rhs and r.rhs < 10 * r.lhs


# -- theorem gates -----------------------------------------------------------


def test_gate_t3_passes_on_shift():
    g = theorem_gate(SHIFT, dirac(0.0), "T3")
    assert g.status == PASS, g.summary()
    assert g.hypotheses and all(ok for _, ok, _, _ in g.hypotheses)


def test_gate_hypothesis_failure_named():
    crowd = MeasureSequence(lambda n: dirac(0.0, float(n)), "n delta_0")
    g = theorem_gate(crowd, dirac(0.0), "T3")
    assert g.status == top.HYPOTHESIS_FAIL
    assert "vaguely" in g.witness


def test_gate_unknown_name():
    with pytest.raises(ValueError):
        theorem_gate(SHIFT, dirac(0.0), "T99")
