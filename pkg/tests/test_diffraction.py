import math
from collections import defaultdict

import numpy as np
import pytest

from radonfourier import testfunctions as tf
from radonfourier import topology as top
from radonfourier.descriptors import DescriptorError
from radonfourier.diffraction import (autocorrelation, autocorrelation_trend, comb_from_dict,
                                      fibonacci_comb, fibonacci_point_comb, folner_cover,
                                      lattice_comb, norm_discontinuity_demo, pd_cone_demo,
                                      van_hove_boundary, van_hove_check, weighted_comb)
from radonfourier.errors import PDCheckFailure
from radonfourier.measure import CompactInterval, dirac, dirac_comb, pair

PHI = (1 + math.sqrt(5)) / 2
COMBS = [lattice_comb(), lattice_comb(0.5, 0.25, 2.0), weighted_comb([1, -1]),
         weighted_comb([1, 1j, 2]), fibonacci_point_comb()]


def brute_autocorrelation(omega, n):
    """Double loop over all pairs, keyed by rounded difference."""
    x, w = omega.atoms(CompactInterval(-n, n))
    acc = defaultdict(complex)
    for xi, wi in zip(x, w):
        for xj, wj in zip(x, w):
            acc[round(xi - xj, 9)] += wi * np.conj(wj) / (2 * n)
    return acc


# -- van Hove ----------------------------------------------------------------


def brute_boundary_length(n, K, h=1e-4):
    t = np.arange(-n - 5, n + 5, h) + h / 2
    inA = np.abs(t) <= n
    # t in A + K  <=> t - k in A for some k in K
    in_AK = (t - K.hi <= n) & (t - K.lo >= -n)
    # t + k outside A for some k in K
    out_moved = (t + K.lo < -n) | (t + K.hi > n)
    part1 = in_AK & ~(np.abs(t) < n)
    part2 = out_moved & inA
    return np.sum(part1 | part2) * h


@pytest.mark.parametrize("n", [1, 2, 5, 10])
@pytest.mark.parametrize("K", [CompactInterval(-1, 1), CompactInterval(0, 1), CompactInterval(-0.5, 2)])
def test_van_hove_boundary_matches_grid(n, K):
    length = van_hove_check(n, K) * 2 * n  # the pieces may overlap
    assert all(b > a for a, b in van_hove_boundary(n, K))
    assert length == pytest.approx(brute_boundary_length(n, K), abs=2e-3)


def test_van_hove_ratio_decays():
    K = CompactInterval(-1, 1)
    assert van_hove_check(10, K) == pytest.approx(0.2)
    for n in (1, 2, 4, 8, 16, 32):
        assert van_hove_check(n, K) <= 2 * (K.hi - K.lo) / n + 1e-12
    with pytest.raises(ValueError):
        van_hove_check(0)
    assert folner_cover(CompactInterval(-3, 1)) == 2


# -- combs -------------------------------------------------------------------


def test_lattice_generator():
    x, w = lattice_comb(0.5, 0.25).atoms(CompactInterval(0, 2))
    assert list(x) == [0.25, 0.75, 1.25, 1.75]
    assert np.all(w == 1)


def test_weighted_generator_pattern():
    x, w = weighted_comb([1, -1]).atoms(CompactInterval(-2, 2))
    assert list(x) == [-2, -1, 0, 1, 2]
    assert list(w.real) == [1, -1, 1, -1, 1]


def test_fibonacci_gap_lengths_small_window():
    x = np.array([a.position for a in fibonacci_comb(CompactInterval(0, 10))])
    gaps = np.round(np.diff(x), 9)
    assert set(gaps) <= {1.0, round(PHI, 9)} and len(set(gaps)) == 2
    assert len(fibonacci_comb(CompactInterval(0, 0))) <= 1


def _fibonacci_word(length):
    w = "L"
    while len(w) < length:
        w = "".join("LS" if c == "L" else "L" for c in w)
    return w


def test_fibonacci_gaps_form_a_sturmian_factor():
    x, _ = fibonacci_point_comb().atoms(CompactInterval(0, 300))
    word = "".join("L" if g > 1.3 else "S" for g in np.diff(x))
    assert word in _fibonacci_word(50_000)


def test_fibonacci_density():
    N = 10_000
    x, _ = fibonacci_point_comb().atoms(CompactInterval(0, N))
    assert abs(x.size / N - PHI / math.sqrt(5)) < 0.02 * PHI / math.sqrt(5)


def test_fibonacci_windows_are_consistent():
    omega = fibonacci_point_comb()
    a, _ = omega.atoms(CompactInterval(-50, 50))
    b, _ = omega.atoms(CompactInterval(-20, 30))
    assert np.array_equal(b, a[(a >= -20) & (a <= 30)])
    for t in np.linspace(-40, 40, 81):  # translation bound: at most two points per unit window
        assert np.sum((a >= t) & (a <= t + 1)) <= omega.translation_bound


def test_comb_descriptors():
    assert comb_from_dict({"kind": "fibonacci"}).kind == "fibonacci"
    c = comb_from_dict({"kind": "lattice", "spacing": 2})
    assert c.to_dict()["spacing"] == 2.0
    w = comb_from_dict({"kind": "weighted", "weights": [1, [0, 1]]})
    assert w.atoms(CompactInterval(1, 1))[1][0] == 1j
    for bad, msg in [({"kind": "weighted"}, "weights"), ({"kind": "nope"}, "unknown kind"),
                     ({"kind": "lattice", "spacing": -1}, "spacing"), ({}, "kind")]:
        with pytest.raises(DescriptorError) as err:
            comb_from_dict(bad)
        assert msg in str(err.value)


# -- autocorrelation ---------------------------------------------------------


def test_gamma2_of_integer_comb():
    g = autocorrelation(lattice_comb(), 2)
    table = {round(x, 12): w for x, w in g.table()}
    assert table == {float(m): (5 - abs(m)) / 4 for m in range(-4, 5)}


@pytest.mark.parametrize("omega", COMBS, ids=lambda c: c.kind + c.label[:12])
@pytest.mark.parametrize("n", [1, 3, 8])
def test_autocorrelation_matches_brute_force(omega, n):
    g = autocorrelation(omega, n)
    ref = brute_autocorrelation(omega, n)
    got = {round(x, 9): w for x, w in g.table()}
    assert set(got) == {k for k, v in ref.items() if abs(v) > 0} | ({0.0} & set(got))
    for k, v in ref.items():
        assert abs(got.get(k, 0.0) - v) < 1e-12
    x, w = omega.atoms(CompactInterval(-n, n))
    assert g.weight_at(0.0) == pytest.approx(np.sum(np.abs(w) ** 2) / (2 * n), abs=1e-15)
    assert g.is_hermitian()


@pytest.mark.parametrize("omega", COMBS, ids=lambda c: c.kind + c.label[:12])
def test_autocorrelation_positive_definite_necessary(omega):
    for n in (1, 2, 4, 8, 16):
        assert min(autocorrelation(omega, n).pd_values()) >= -1e-10


def test_diffraction_of_integer_comb_tends_to_poisson_limit():
    bank = tf.schwartz_bank()
    ns = (2, 4, 8, 16, 32)
    gaps = []
    for n in ns:
        gh = autocorrelation(lattice_comb(), n).diffraction()
        gaps.append(max(abs(pair(gh, g) - pair(dirac_comb(), g.fourier())) for g in bank))
    v = top.gap_verdict(ns, gaps)
    assert v.verdict == top.CONVERGES
    assert all(gaps[i] * ns[i] < 5.0 for i in range(len(ns)))  # O(1/n)


def test_trend_for_integer_comb():
    rep = autocorrelation_trend(lattice_comb(), (1, 2, 4, 8, 16, 32))
    assert rep.verdicts["vague_cauchy"] == top.CONVERGES
    assert rep.verdicts["cauchy_decreasing"] == top.PASS
    assert rep.verdicts["equi_tb"] == top.EQUI_TB
    assert rep.verdicts["pd_necessary"] == top.PASS
    peak = rep.evidence["vague_cauchy"].values.max(axis=1)
    ns = np.array((2, 4, 8, 16, 32))
    assert np.all(peak * ns < 4.0)


def test_trend_for_fibonacci_decreases():
    rep = autocorrelation_trend(fibonacci_point_comb(), (8, 16, 32, 64))
    assert rep.verdicts["cauchy_decreasing"] == top.PASS
    assert rep.pd_min >= -1e-10


# -- positive-definite cone and norm discontinuity -------------------------


def test_pd_cone_demo_on_integer_comb():
    omega = lattice_comb()
    seq = top.MeasureSequence(lambda n: autocorrelation(omega, n).measure, "gamma_n(Z)")
    rep = pd_cone_demo(seq, dirac_comb(), schedule=(1, 2, 4, 8, 16))
    assert rep.passed, rep.summary()


def test_pd_cone_constant_sequence_has_zero_gaps():
    seq = top.MeasureSequence(lambda n: dirac_comb(), "const")
    rep = pd_cone_demo(seq, dirac_comb(), schedule=(1, 2, 4))
    assert np.all(rep.ft_vague.values == 0)
    assert rep.passed


def test_pd_cone_rejects_non_pd_members():
    seq = top.MeasureSequence(lambda n: -1.0 * dirac(0.0), "negative")
    with pytest.raises(PDCheckFailure):
        pd_cone_demo(seq, dirac(0.0), schedule=(1, 2))


def test_norm_discontinuity_identity():
    rep = norm_discontinuity_demo()
    assert rep.passed
    for n, d, a, lim in rep.rows:
        assert d >= lim == pytest.approx(2.0)
