import math

import numpy as np
import pytest
from scipy.integrate import quad

from radonfourier import testfunctions as tf
from radonfourier.densities import (ModulatedConstant, Periodized, PiecewisePoly, Sinc, Sinc2,
                                    Tent, indicator, lebesgue)
from radonfourier.errors import NotTransformableInModel, PDCheckFailure, SupportViolation
from radonfourier.fourier import (approximate_identity, fourier_transform, krein_check,
                                  pd_bound_check, smooth, transform_density, verify_pairing)
from radonfourier.measure import (CompactInterval, LatticeComb, Measure, dirac, dirac_comb,
                                  lebesgue_measure, pair, reflect)

RULE_CASES = {
    "atom": dirac(0.3, 2.0 - 1.0j),
    "modulated": Measure(ac=(ModulatedConstant(0.4, 1.5),)),
    "lebesgue": lebesgue_measure(),
    "comb": dirac_comb(0.5, 0.2, 1.5),
    "comb_phase": Measure(combs=(LatticeComb(1.0, 0.25, 1.0, ModulatedConstant(0.3, 1.0)),)),
    "indicator": Measure(ac=(indicator(-0.5, 1.5, 2.0),)),
    "clipped_modulated": Measure(ac=(ModulatedConstant(0.7, 1.0, (0.0, 1.0)),)),
    "tent": Measure(ac=(Tent(0.2, 0.6, 1.0, 0.3),)),
    "sinc2": Measure(ac=(Sinc2(1.0, 2.0, 0.1, 0.2),)),
    "sinc": Measure(ac=(Sinc(1.0, 3.0, 0.0, 0.0),)),
    "periodized_tent": Measure(ac=(Periodized(Tent(0.0, 0.25, 1.0), 1.0, 0.0, 1.0),)),
    "mixed": dirac(0.5) + dirac_comb(1.0) + Measure(ac=(Tent(0.0, 1.0, 2.0),)),
}


@pytest.mark.parametrize("name", sorted(RULE_CASES))
def test_rule_satisfies_pairing_identity(name):
    mu = RULE_CASES[name]
    rep = verify_pairing(mu, fourier_transform(mu))
    assert rep.passed, rep.to_csv()
    assert len(rep.rows) == 12


def _numeric_ft(fun, lo, hi, y):
    re = quad(lambda x: (fun(x) * np.exp(-2j * np.pi * x * y)).real, lo, hi, limit=200, epsabs=1e-13)[0]
    im = quad(lambda x: (fun(x) * np.exp(-2j * np.pi * x * y)).imag, lo, hi, limit=200, epsabs=1e-13)[0]
    return re + 1j * im


@pytest.mark.parametrize("d", [Tent(0.3, 0.8, 1.0 + 0.5j, 0.0), Tent(-0.2, 1.2, 1.0, 0.4),
                               ModulatedConstant(0.25, 1.0, (-0.3, 0.9)),
                               ModulatedConstant(0.0, 2.0, (0.0, 2.0))])
def test_density_transform_matches_quadrature(d):
    lo, hi = d.support()
    out = transform_density(d)
    for y in (-1.3, -0.2, 0.0, 0.37, 2.1):
        exact = out.ac[0](y)
        assert abs(exact - _numeric_ft(d, lo, hi, y)) < 1e-10


@pytest.mark.parametrize("name", ["atom", "comb", "tent", "sinc2", "indicator", "clipped_modulated",
                                  "periodized_tent", "mixed"])
def test_double_transform_is_reflection(name):
    mu = RULE_CASES[name]
    twice = fourier_transform(fourier_transform(mu))
    for g in tf.schwartz_bank()[:6]:
        assert abs(pair(twice, g) - pair(reflect(mu), g)) < 1e-8


def test_piecewise_poly_not_transformable():
    d = PiecewisePoly((0.0, 1.0), ((0.0, 0.0, 1.0),))
    with pytest.raises(NotTransformableInModel) as err:
        fourier_transform(Measure(ac=(d,)))
    assert err.value.component == d


def test_clipped_sinc_not_transformable():
    with pytest.raises(NotTransformableInModel):
        fourier_transform(Measure(ac=(Sinc(1.0, 1.0, clip=(0.0, 1.0)),)))


def test_poisson_summation_random_gaussians(rng):
    bank = [tf.gaussian(rng.uniform(-1, 1), rng.uniform(0.6, 1.6), 1.0, int(rng.integers(0, 4)))
            for _ in range(20)]
    rep = verify_pairing(dirac_comb(), dirac_comb(), bank)
    assert rep.passed and rep.max_residual <= 1e-8


def test_poisson_against_direct_sums():
    g = tf.gaussian(0.3, 0.7)
    k = np.arange(-200, 201)
    lhs = np.sum(g(k))
    rhs = sum(g.inverse_fourier_value(m) for m in k)
    assert abs(lhs - rhs) < 1e-12
    assert abs(pair(dirac_comb(), g) - lhs) < 1e-12


def test_comb_transform_structure():
    out = fourier_transform(dirac_comb(0.5, 0.0, 3.0))
    (c,) = out.combs
    assert (c.spacing, c.offset, c.weight, c.envelope) == (2.0, 0.0, 6.0, None)


def test_wrong_transform_is_detected():
    rep = verify_pairing(dirac_comb(), 2 * dirac_comb())
    assert not rep.passed


# -- approximate identity and smoothing ------------------------------------


@pytest.mark.parametrize("n", [1, 2, 5, 16])
def test_kernel_properties(n):
    k = approximate_identity(n)
    assert quad(k, -1.0 / n, 1.0 / n, points=[0.0])[0] == pytest.approx(1.0, abs=1e-12)
    sup, v0 = krein_check(k)
    assert v0 == 1.0 and sup <= v0 + 1e-15
    for y in (0.3, 1.7, 4.0):
        assert abs(k.fourier_value(y) - _numeric_ft(k, -1.0 / n, 1.0 / n, y).real) < 1e-10


def test_kernel_support_violation():
    with pytest.raises(SupportViolation):
        approximate_identity(1, K=CompactInterval(-0.5, 0.5))
    with pytest.raises(ValueError):
        approximate_identity(0)


def test_smoothing_vague_gaps_decrease():
    bank = tf.compact_bank()
    gaps = []
    for n in (1, 2, 4, 8, 16):
        s = smooth(dirac_comb(), n)
        gaps.append(max(abs(pair(s, f) - pair(dirac_comb(), f)) for f in bank))
    assert all(b < a for a, b in zip(gaps, gaps[1:]))
    assert gaps[-1] < gaps[0] / 4


def test_smoothing_matches_convolution_quadrature():
    n = 3
    mu = dirac(0.2, 2.0) + Measure(ac=(indicator(0.0, 1.0),))
    s = smooth(mu, n)
    k = approximate_identity(n)
    for x in (0.1, 0.2, 0.5, 0.95, 1.2):
        direct = 2.0 * k(x - 0.2) + quad(lambda y: k(x - y), 0.0, 1.0,
                                               points=[p for p in (x - 1 / n, x, x + 1 / n) if 0 < p < 1],
                                               epsabs=1e-14)[0]
        got = sum(d(x) for d in s.ac)
        assert abs(got - direct) < 1e-12


# -- positive-definite bounds ----------------------------------------------


@pytest.mark.parametrize("mu", [dirac_comb(), lebesgue_measure(), smooth(dirac_comb(), 4)],
                         ids=["comb", "lebesgue", "smoothed_comb"])
def test_pd_bound_margins_positive(mu):
    rep = pd_bound_check(mu)
    assert rep.passed
    assert rep.margin_variation > 0 and rep.margin_norm > 0
    assert rep.minorant_min >= 1.0
    assert rep.pd_min >= -1e-10


def test_pd_check_failure_on_negative_measure():
    with pytest.raises(PDCheckFailure):
        pd_bound_check(-1.0 * dirac(0.0))
