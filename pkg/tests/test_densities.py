import numpy as np
import pytest

from radonfourier.densities import (ModulatedConstant, Periodized, PiecewisePoly, Sinc, Sinc2,
                                    Tent, indicator, lebesgue)

X = np.linspace(-4, 4, 161)

DENSITIES = [
    lebesgue(2.0),
    ModulatedConstant(0.3, 1.0 - 1.0j),
    indicator(-1.0, 0.5, 3.0),
    ModulatedConstant(0.2, 1.0, (0.0, 2.0)),
    Tent(0.5, 1.5, 2.0, 0.1),
    Sinc(1.0, 2.0, 0.3, 0.2),
    Sinc2(2.0, 1.5, -0.4, 0.0),
    PiecewisePoly((0.0, 1.0, 2.0), ((0.0, 0.0, 1.0), (1.0, -1.0))),
    Periodized(Tent(0.0, 0.25, 1.0), 1.0, 0.1, 2.0),
]


@pytest.mark.parametrize("d", DENSITIES, ids=lambda d: d.kind)
def test_abs_bound_dominates(d):
    assert np.max(np.abs(d(X))) <= d.abs_bound() + 1e-12


@pytest.mark.parametrize("d", DENSITIES, ids=lambda d: d.kind)
def test_translate_reflect_dilate(d):
    assert np.allclose(d.translate(0.7)(X), d(X - 0.7), atol=1e-12)
    assert np.allclose(d.reflect()(X), d(-X), atol=1e-12)
    # push-forward under x -> 2x: the density picks up the Jacobian 1/2
    assert np.allclose(d.dilate(2.0)(X), d(X / 2.0) / 2.0, atol=1e-12)
    assert np.allclose(d.scaled(3.0)(X), 3.0 * d(X), atol=1e-12)


def test_explicit_values():
    t = Tent(0.0, 2.0, 4.0)
    assert t(1.0) == pytest.approx(2.0) and t(3.0) == 0.0
    s = Sinc(1.0, 2.0)
    assert s(0.75) == pytest.approx(np.sin(1.5) / 1.5)
    assert Sinc2(1.0, 2.0)(0.75) == pytest.approx((np.sin(1.5) / 1.5) ** 2)
    ind = indicator(0.0, 1.0)
    assert list(ind(np.array([-0.1, 0.0, 0.5, 1.0, 1.1]))) == [0, 1, 1, 1, 0]
    m = ModulatedConstant(0.25, 2.0)
    assert m(1.0) == pytest.approx(2j)


def test_periodized_equals_explicit_sum():
    prof = Tent(0.0, 0.3, 1.5)
    d = Periodized(prof, 0.8, 0.2, 2.0)
    ref = sum(2.0 * prof(X - 0.2 - 0.8 * k) for k in range(-10, 11))
    assert np.allclose(d(X), ref)
    assert d.period() == pytest.approx(0.8)


def test_piecewise_poly_values():
    d = PiecewisePoly((0.0, 1.0, 2.0), ((0.0, 0.0, 1.0), (1.0, -1.0)))
    assert np.allclose(d(np.array([0.5, 1.5, 2.5])), [0.25, 0.5, 0.0])


def test_merge_and_plus():
    a, b = ModulatedConstant(0.3, 1.0), ModulatedConstant(0.3, 2.0)
    assert a.merge_key() == b.merge_key()
    assert a.plus(b).amplitude == 3.0
    assert ModulatedConstant(0.0, 0.0).is_zero


@pytest.mark.parametrize("bad", [lambda: Tent(0.0, 0.0), lambda: Sinc(1.0, -1.0),
                                 lambda: Periodized(Tent(), 0.0),
                                 lambda: Periodized(lebesgue(), 1.0)])
def test_invalid_parameters(bad):
    with pytest.raises(ValueError):
        bad()
