import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.integrate import quad

from radonfourier import testfunctions as tf
from radonfourier.errors import NoClosedForm


def numeric_ft(f, lo, hi, y, points=None):
    kw = dict(limit=400, epsabs=1e-13, points=points)
    re = quad(lambda x: (f(x) * np.exp(-2j * np.pi * x * y)).real, lo, hi, **kw)[0]
    im = quad(lambda x: (f(x) * np.exp(-2j * np.pi * x * y)).imag, lo, hi, **kw)[0]
    return re + 1j * im


def test_bank_shapes():
    cb, sb = tf.compact_bank(), tf.schwartz_bank()
    assert len(cb) == 8 and len(sb) == 12
    assert len({f.label for f in cb + sb}) == 20
    assert all(f.compact for f in cb) and not any(f.compact for f in sb)


def test_ex3_function_values():
    f = tf.ex3_test_function()
    assert np.allclose(f(np.array([-1.0, 0.5, 1.0, 1.5, 2.0, 3.0])), [0, 0.25, 1.0, 0.5, 0, 0])


def test_tempdis_function_values():
    f = tf.tempdis_test_function()
    assert f(0.25) == pytest.approx(0.5)
    assert f(1.75) == pytest.approx(0.25)


@pytest.mark.parametrize("f", tf.compact_bank(), ids=lambda f: f.label)
def test_integral_and_primitive_match_quadrature(f):
    lo, hi = f.support()
    pts = list(f.breakpoints_)
    exact = quad(lambda x: f(x).real, lo, hi, points=pts, limit=200, epsabs=1e-14)[0]
    assert f.integral() == pytest.approx(exact, abs=1e-10)
    for x in np.linspace(lo - 0.5, hi + 0.5, 9):
        ref = quad(lambda t: f(t).real, lo, min(max(x, lo), hi), points=[p for p in pts if lo < p < x],
                   limit=200, epsabs=1e-14)[0] if x > lo else 0.0
        assert f.primitive(x) == pytest.approx(ref, abs=1e-10)


def test_primitive_rejects_modulation():
    with pytest.raises(NoClosedForm):
        tf.tent().modulate(0.5).primitive(0.0)


@pytest.mark.parametrize("f", tf.compact_bank()[:5] + [tf.tent(0.2, 0.7, 2.0).modulate(0.3)],
                         ids=lambda f: f.label or "modulated")
def test_piecewise_fourier_matches_quadrature(f):
    lo, hi = f.support()
    for y in (-0.7, 0.0, 0.45, 1.3):
        assert abs(f.fourier_value(y) - numeric_ft(f, lo, hi, y, list(f.breakpoints_))) < 1e-9


@pytest.mark.parametrize("g", tf.schwartz_bank()[::3] + [tf.gaussian(0.3, 0.8, 1.0, 2).modulate(0.4)],
                         ids=lambda g: g.label or "modulated")
def test_gauss_hermite_fourier_matches_quadrature(g):
    for y in (-0.9, 0.0, 0.6):
        ref = numeric_ft(g, -12, 12, y)
        assert abs(g.fourier_value(y) - ref) < 1e-10
        assert abs(g.inverse_fourier_value(y) - ref_inv(g, y)) < 1e-10


def ref_inv(g, y):
    return numeric_ft(g, -12, 12, -y)


def test_gauss_hermite_inverse_of_fourier_is_identity():
    g = tf.gaussian(0.2, 1.3, 1.0, 3)
    x = np.linspace(-3, 3, 11)
    back = g.fourier().inverse_fourier()
    assert np.allclose(back(x), g(x), atol=1e-12)


def test_tent_inverse_is_sinc2():
    f = tf.tent(0.3, 0.6, 1.5)
    h = f.inverse_fourier()
    for y in (-1.0, 0.0, 0.8):
        assert abs(h(y) - f.inverse_fourier_value(y)) < 1e-13
    for y in (-0.5, 0.2, 0.75):  # the transform of f_check is f again
        assert abs(h.fourier_value(y) - f(y)) < 1e-13


@pytest.mark.parametrize("f", tf.compact_bank() + tf.schwartz_bank()[:4], ids=lambda f: f.label)
def test_sup_norm_dominates_samples(f):
    lo, hi = f.effective_support(1e-12) if not f.compact else f.support()
    x = np.linspace(lo, hi, 20001)
    s = float(np.max(np.abs(f(x))))
    assert s - 1e-12 <= f.sup_norm() <= s + 1e-3


@given(st.floats(-2, 2), st.floats(0.2, 2), st.floats(-1, 1), st.floats(0.2, 1.5))
def test_convolution_of_tents_matches_quadrature(c1, w1, c2, w2):
    f, g = tf.tent(c1, w1), tf.tent(c2, w2)
    h = tf.convolve_piecewise(f, g)
    for x in np.linspace(c1 + c2 - w1 - w2, c1 + c2 + w1 + w2, 7):
        lo, hi = max(c1 - w1, x - c2 - w2), min(c1 + w1, x - c2 + w2)
        ref = quad(lambda y: f(y) * g(x - y), lo, hi, points=[c1, x - c2])[0] if hi > lo else 0.0
        assert abs(h(x) - ref) < 1e-9
    assert h.integral() == pytest.approx(w1 * w2, rel=1e-9)


def test_autocorrelation_test_is_hermitian_and_peaks_at_zero():
    g = tf.ex3_test_function()
    a = tf.autocorrelation_test(g)
    x = np.linspace(-2, 2, 41)
    assert np.allclose(a(x), np.conj(a(-x)), atol=1e-12)
    assert a(0.0) == pytest.approx(quad(lambda t: abs(g(t)) ** 2, 0, 2, points=[1.0])[0], abs=1e-12)
    assert np.all(np.abs(a(x)) <= a(0.0).real + 1e-12)


def test_translate_reflect_modulate():
    f = tf.ex3_test_function()
    x = np.linspace(-3, 3, 25)
    assert np.allclose(f.translate(0.7)(x), f(x - 0.7))
    assert np.allclose(f.reflect()(x), f(-x))
    assert np.allclose(f.modulate(0.3)(x), f(x) * np.exp(-2j * np.pi * 0.3 * x))
    g = tf.gaussian(0.1, 0.9, 1.0, 1)
    assert np.allclose(g.translate(0.4)(x), g(x - 0.4))
    assert np.allclose(g.reflect()(x), g(-x))


def test_invalid_constructions():
    with pytest.raises(ValueError):
        tf.PiecewiseTest([0.0, 0.0], [[1.0]])
    with pytest.raises(ValueError):
        tf.gaussian(0.0, -1.0)
    with pytest.raises(ValueError):
        tf.PiecewiseTest([0.0, 1.0], [[1.0]], smoothness="smooth")
