"""Acceptance criteria, one test per criterion.

Each test prints a single ``[criterion k] PASS|FAIL ...`` line.  The file
can also be run directly (``python tests/test_acceptance.py``) to print the
ten lines without pytest.
"""

import math
import sys
import time

import numpy as np
import pytest

from radonfourier import registry
from radonfourier import testfunctions as tf
from radonfourier import topology as top
from radonfourier.diffraction import (autocorrelation, autocorrelation_trend,
                                      fibonacci_point_comb, lattice_comb)
from radonfourier.fourier import fourier_transform, pd_bound_check, smooth, verify_pairing
from radonfourier.measure import (CompactInterval, Measure, dirac, dirac_comb, lebesgue_measure,
                                  norm_K, pair)

PHI = (1 + math.sqrt(5)) / 2


def _emit(k, ok, detail, seconds):
    line = f"[criterion {k:2d}] {'PASS' if ok else 'FAIL'} ({seconds:.2f} s) {detail}"
    print(line, flush=True)
    return line


def _exponent(ns, vals):
    return float(np.polyfit(np.log(ns), np.log(vals), 1)[0])


# ---------------------------------------------------------------------------


def criterion_1():
    t0 = time.perf_counter()
    f = tf.ex3_test_function()
    err = 0.0
    for n in range(1, 11):
        mu = n ** 3 * dirac_comb(n) - n ** 3 * dirac(0.0)
        err = max(err, abs(pair(fourier_transform(mu), f) - n / 6))
    dt = time.perf_counter() - t0
    ok = err <= 1e-9 and dt < 1.0
    return ok, f"<mu_n^, f> = n/6, n = 1..10: max error {err:.2e}", dt


def criterion_2():
    t0 = time.perf_counter()
    rng = np.random.default_rng(2)
    bank = [tf.gaussian(rng.uniform(-1, 1), rng.uniform(0.5, 2.0), 1.0, label=f"rnd{i}")
            for i in range(20)]
    rep = verify_pairing(dirac_comb(), dirac_comb(), bank)
    dt = time.perf_counter() - t0
    ok = rep.passed and rep.max_residual <= 1e-8 and dt < 1.0
    return ok, f"Poisson summation on 20 random Gaussians: max residual {rep.max_residual:.2e}", dt


def criterion_3():
    t0 = time.perf_counter()
    results = registry.run_all()
    dt = time.perf_counter() - t0
    mism = [(r.case.id, m) for r in results for m in r.mismatches]
    ok = not mism and len(results) == 9 and dt < 60.0
    return ok, f"registry sweep over {len(results)} examples: {len(mism)} mismatches {mism[:3]}", dt


def criterion_4():
    t0 = time.perf_counter()
    K = CompactInterval(0.0, 1.0)
    bad = [n for n in range(1, 33)
           if norm_K(dirac(1.0 / n) - dirac(0.0), K) != 2.0 or norm_K(dirac(-float(n)), K) != 1.0]
    dt = time.perf_counter() - t0
    return not bad, f"||d_1/n - d_0|| = 2 and ||d_-n|| = 1 for n = 1..32 (failures: {bad})", dt


def criterion_5():
    t0 = time.perf_counter()
    ns = (1, 2, 4, 8, 16, 32, 64)
    w = [registry.sinc_abs_witness(n) for n in ns]
    slope, r2 = registry.log_fit(ns, w)
    case = registry.get_example("SINC")
    eq = top.equi_translation_bounded(case.ft_sequence, schedule=ns)
    dt = time.perf_counter() - t0
    ok = slope > 0 and r2 > 0.99 and eq.verdict == top.NOT_EQUI_TB
    return ok, f"sinc witness vs log n: slope {slope:.4f}, R^2 {r2:.6f}; {eq.verdict}", dt


def criterion_6():
    t0 = time.perf_counter()
    lo, hi = top.weighted_l1_constant()
    target = 1.0 + math.pi * math.tanh(math.pi)
    const_ok = lo <= target <= hi and hi - lo <= 1e-10
    rng = np.random.default_rng(6)
    worst = math.inf
    for _ in range(100):
        mu = Measure()
        for _ in range(int(rng.integers(1, 5))):
            mu = mu + dirac(rng.uniform(-3, 3), rng.normal())
        if rng.random() < 0.5:
            mu = mu + dirac_comb(rng.uniform(0.5, 2.0), rng.uniform(-1, 1), rng.normal())
        if rng.random() < 0.3:
            mu = mu + lebesgue_measure(rng.normal())
        if rng.random() < 0.5:
            f = tf.tent(rng.uniform(-2, 2), rng.uniform(0.2, 2.0), rng.normal())
        else:
            f = tf.gaussian(rng.uniform(-1, 1), rng.uniform(0.5, 1.5), rng.normal(),
                            int(rng.integers(0, 4)))
        worst = min(worst, top.l1_bound(mu, f, C=hi).margin)
    dt = time.perf_counter() - t0
    ok = const_ok and worst >= 0
    return ok, (f"C in [{lo:.12f}, {hi:.12f}] vs 1 + pi tanh(pi) = {target:.12f}; "
                f"min margin over 100 pairs {worst:.3e}"), dt


def criterion_7():
    t0 = time.perf_counter()
    case = registry.get_example("TEMPDIS")
    seq = case.sequence
    ns = (8, 16, 32, 64)
    g = top.gap(seq, Measure(), "tempered", schedule=ns)
    exps = [_exponent(ns, g.values[:, j]) for j in range(g.values.shape[1])]
    f = tf.tempdis_test_function()
    # numerical pairing of the atoms, not the registered closed form
    werr = max(abs(pair(seq(n), f) - math.sqrt(n)) for n in (1, 4, 9, 16, 64, 100))
    dt = time.perf_counter() - t0
    ok = len(exps) == 12 and all(-1.1 <= e <= -0.9 for e in exps) and werr <= 1e-12
    return ok, (f"tempered exponents in [{min(exps):.4f}, {max(exps):.4f}] over 12 Gaussians; "
                f"vague witness sqrt(n) error {werr:.1e}"), dt


def criterion_8():
    t0 = time.perf_counter()
    g2 = autocorrelation(lattice_comb(), 2)
    table_ok = {x: w for x, w in g2.table()} == {float(m): (5 - abs(m)) / 4 for m in range(-4, 5)}
    rep = autocorrelation_trend(lattice_comb(), top.DEFAULT_SCHEDULE)
    peak = rep.evidence["vague_cauchy"].values.max(axis=1)
    ns = top.DEFAULT_SCHEDULE[1:]
    e = _exponent(ns, peak)
    dt = time.perf_counter() - t0
    ok = (table_ok and g2.is_hermitian() and abs(e + 1) <= 0.1
          and rep.verdicts["vague_cauchy"] == top.CONVERGES and rep.pd_min >= -1e-10)
    return ok, (f"gamma_2 table exact: {table_ok}; Cauchy gap exponent {e:.4f}; "
                f"min PD pairing {rep.pd_min:.4g}"), dt


def criterion_9():
    t0 = time.perf_counter()
    K = CompactInterval(-0.25, 0.25)
    rows = []
    for name, mu in (("delta_Z", dirac_comb()), ("lambda", lebesgue_measure()),
                     ("Fejer-smoothed delta_Z", smooth(dirac_comb(), 4))):
        r = pd_bound_check(mu, K)
        rows.append((name, r.margin_variation, r.margin_norm))
    dt = time.perf_counter() - t0
    ok = all(a > 0 and b > 0 for _, a, b in rows)
    detail = "; ".join(f"{n}: |mu^|(K) margin {a:.4g}, norm margin {b:.4g}" for n, a, b in rows)
    return ok, detail, dt


def criterion_10():
    t0 = time.perf_counter()
    omega = fibonacci_point_comb()
    x, _ = omega.atoms(CompactInterval(0.0, 1e4))
    gaps = np.diff(x)
    order = np.sort(gaps)
    split = np.flatnonzero(np.diff(order) > 1e-6)
    lengths = len(split) + 1
    short, long_ = order[0], order[-1]
    ratio_err = abs(long_ / short - PHI)
    rep = autocorrelation_trend(omega, (8, 16, 32, 64))
    dt = time.perf_counter() - t0
    ok = lengths == 2 and ratio_err <= 1e-9 and rep.verdicts["cauchy_decreasing"] == top.PASS \
        and dt < 30.0
    return ok, (f"{x.size} points, {lengths} gap lengths, ratio error {ratio_err:.1e}; "
                f"Cauchy decreasing: {rep.verdicts['cauchy_decreasing']}"), dt


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("k", range(1, 11))
def test_acceptance(k, capsys):
    ok, detail, dt = CRITERIA[k - 1]()
    with capsys.disabled():
        print()
        line = _emit(k, ok, detail, dt)
    assert ok, line


if __name__ == "__main__":
    results = []
    for k, crit in enumerate(CRITERIA, 1):
        ok, detail, dt = crit()
        _emit(k, ok, detail, dt)
        results.append(ok)
    sys.exit(0 if all(results) else 1)
