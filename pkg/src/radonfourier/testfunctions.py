"""Test functions: compact piecewise (Puiseux-)polynomials, Gauss-Hermite
functions and sinc^2 profiles, all optionally modulated by ``e^{-2 pi i t x}``.

Fourier convention throughout the package::

    f^(y) = int f(x) e^{-2 pi i x y} dx,      f_check(y) = f^(-y).
"""

from dataclasses import dataclass, field, replace
import math

import numpy as np
from numpy.polynomial import hermite as H
from scipy.optimize import minimize_scalar

from . import _quad
from .errors import NoClosedForm

TWO_PI = 2.0 * math.pi
_SQRT_2PI = math.sqrt(TWO_PI)

SMOOTHNESS_TAGS = ("C_c", "C_c^inf-surrogate", "Schwartz")


def _phase(x, t):
    if t == 0:
        return 1.0
    return np.exp(-1j * TWO_PI * t * x)


class TestFunction:
    """Common interface; see the concrete classes below."""

    __test__ = False  # keep pytest from collecting this as a test class

    label = ""
    modulation = 0.0
    smoothness = "C_c"

    def __call__(self, x):
        raise NotImplementedError

    @property
    def compact(self):
        return self.support() is not None

    def support(self):
        """Closed support interval ``(lo, hi)``, or ``None`` for whole-line."""
        return None

    def breakpoints(self):
        return np.array([])

    def graded_points(self):
        """Points with algebraic endpoint singularities (for quadrature)."""
        return ()

    def oscillation(self):
        """Rough local frequency bound, used to size quadrature panels."""
        return abs(self.modulation)

    def modulate(self, t):
        """Return ``x -> e^{-2 pi i t x} f(x)``."""
        return replace(self, modulation=self.modulation + t)

    def fourier_value(self, y):
        raise NoClosedForm(f"{type(self).__name__} has no closed-form transform")

    def inverse_fourier(self):
        raise NoClosedForm(f"{type(self).__name__} has no closed-form inverse transform")

    def inverse_fourier_value(self, y):
        return self.fourier_value(-np.asarray(y, dtype=float))

    def effective_support(self, tol=1e-20):
        """Interval outside which ``|f|`` is below ``tol`` pointwise."""
        return self.support()

    def tail_bound(self, lo, hi, local_mass_bound, spacing=None):
        """Bound ``sum/int |f|`` outside ``[lo, hi]`` against a measure whose
        mass per unit length is at most ``local_mass_bound``."""
        return 0.0

    def sup_norm(self):
        raise NotImplementedError


# ---------------------------------------------------------------------------
# compact piecewise functions


@dataclass(frozen=True, eq=False)
class PiecewiseTest(TestFunction):
    """Compactly supported piecewise function.

    Piece ``i`` lives on ``[b_i, b_{i+1}]`` and equals
    ``sum_j coeffs[i][j] * (x - b_i) ** (j * powers[i])``.  ``powers`` is 1 for
    ordinary polynomial pieces; ``0.5`` gives square-root pieces.
    """

    breakpoints_: np.ndarray
    coeffs: tuple
    powers: tuple = None
    modulation: float = 0.0
    smoothness: str = "C_c"
    label: str = ""
    tent: tuple = None  # (center, half_width, height) when this is a tent

    def __post_init__(self):
        bp = np.asarray(self.breakpoints_, dtype=float)
        if bp.ndim != 1 or bp.size < 2 or np.any(np.diff(bp) <= 0):
            raise ValueError("breakpoints must be strictly increasing, at least two")
        if len(self.coeffs) != bp.size - 1:
            raise ValueError("need one coefficient vector per piece")
        object.__setattr__(self, "breakpoints_", bp)
        object.__setattr__(
            self, "coeffs", tuple(np.atleast_1d(np.asarray(c, dtype=complex)) for c in self.coeffs)
        )
        powers = self.powers if self.powers is not None else (1.0,) * len(self.coeffs)
        if len(powers) != len(self.coeffs):
            raise ValueError("need one power per piece")
        object.__setattr__(self, "powers", tuple(float(p) for p in powers))
        if self.smoothness not in SMOOTHNESS_TAGS:
            raise ValueError(f"unknown smoothness tag {self.smoothness!r}")

    @property
    def polynomial(self):
        return all(p == 1.0 for p in self.powers)

    @property
    def real(self):
        return self.modulation == 0 and all(np.all(c.imag == 0) for c in self.coeffs)

    def support(self):
        return (float(self.breakpoints_[0]), float(self.breakpoints_[-1]))

    def breakpoints(self):
        return self.breakpoints_

    def graded_points(self):
        return tuple(
            float(self.breakpoints_[i]) for i, p in enumerate(self.powers) if p != int(p)
        )

    def piece_values(self, i, x):
        u = np.asarray(x, dtype=float) - self.breakpoints_[i]
        p = self.powers[i]
        c = self.coeffs[i]
        if p == 1.0:
            return np.polynomial.polynomial.polyval(u, c)
        u = np.maximum(u, 0.0)
        return sum(cj * u ** (j * p) for j, cj in enumerate(c))

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        bp = self.breakpoints_
        out = np.zeros(x.shape, dtype=complex)
        idx = np.searchsorted(bp, x, side="right") - 1
        idx = np.where(x == bp[-1], len(bp) - 2, idx)
        inside = (idx >= 0) & (idx < len(bp) - 1)
        for i in range(len(bp) - 1):
            sel = inside & (idx == i)
            if np.any(sel):
                out[sel] = self.piece_values(i, x[sel])
        out = out * _phase(x, self.modulation)
        if self.real:
            return out.real
        return out

    def translate(self, t):
        scale = np.exp(1j * TWO_PI * self.modulation * t) if self.modulation else 1.0
        tent = None
        if self.tent is not None:
            tent = (self.tent[0] + t, self.tent[1], self.tent[2] * scale)
        return replace(
            self,
            breakpoints_=self.breakpoints_ + t,
            coeffs=tuple(c * scale for c in self.coeffs),
            tent=tent,
        )

    def reflect(self):
        """``x -> f(-x)``."""
        if not self.polynomial:
            raise NotImplementedError("reflection of non-polynomial pieces")
        bp = -self.breakpoints_[::-1]
        lengths = np.diff(self.breakpoints_)[::-1]
        coeffs = []
        for c, L in zip(self.coeffs[::-1], lengths):
            # q(u) = p(L - u)
            p = np.polynomial.Polynomial(c)
            q = p(np.polynomial.Polynomial([L, -1.0]))
            coeffs.append(q.coef)
        tent = None
        if self.tent is not None:
            tent = (-self.tent[0], self.tent[1], self.tent[2])
        return replace(self, breakpoints_=bp, coeffs=tuple(coeffs), modulation=-self.modulation,
                       powers=self.powers[::-1], tent=tent)

    def conj(self):
        tent = None
        if self.tent is not None:
            tent = (self.tent[0], self.tent[1], np.conj(self.tent[2]))
        return replace(self, coeffs=tuple(np.conj(c) for c in self.coeffs),
                       modulation=-self.modulation, tent=tent)

    def scaled(self, a):
        tent = None
        if self.tent is not None:
            tent = (self.tent[0], self.tent[1], self.tent[2] * a)
        return replace(self, coeffs=tuple(c * a for c in self.coeffs), tent=tent)

    def integral(self, tol=1e-14):
        val, _ = _quad.integrate(self, self.breakpoints_, tol=tol,
                                 max_panel=self._panel(), graded=self.graded_points())
        return val

    def primitive(self, x):
        """Exact ``F(x) = int_{-inf}^x f`` for unmodulated pieces."""
        if self.modulation:
            raise NoClosedForm("primitive of a modulated piecewise function")
        x = np.asarray(x, dtype=float)
        bp = self.breakpoints_
        out = np.zeros(x.shape, dtype=complex)
        acc = 0.0 + 0.0j
        for i in range(len(bp) - 1):
            a, b = bp[i], bp[i + 1]
            p = self.powers[i]
            c = self.coeffs[i]

            def piece(u, c=c, p=p):
                u = np.maximum(u, 0.0)
                return sum(cj * u ** (j * p + 1) / (j * p + 1) for j, cj in enumerate(c))

            sel = (x >= a) & (x < b)
            if np.any(sel):
                out[sel] = acc + piece(x[sel] - a)
            acc = acc + piece(np.asarray(b - a))
        out[x >= bp[-1]] = acc
        return out.real if self.real else out

    def _panel(self, extra_freq=0.0):
        f = abs(self.modulation) + abs(extra_freq)
        width = self.breakpoints_[-1] - self.breakpoints_[0]
        if f == 0:
            return width
        return min(width, 0.5 / f)

    def fourier_value(self, y):
        y = np.asarray(y, dtype=float)
        if self.tent is not None:
            c, L, h = self.tent
            s = self.modulation
            z = y + s
            return h * L * np.sinc(L * z) ** 2 * np.exp(-1j * TWO_PI * c * z)
        flat = np.atleast_1d(y).ravel()
        out = np.empty(flat.shape, dtype=complex)
        for k, yk in enumerate(flat):
            out[k], _ = _quad.integrate(
                lambda x, yk=yk: self(x) * np.exp(-1j * TWO_PI * x * yk),
                self.breakpoints_, tol=1e-14, max_panel=self._panel(yk),
                graded=self.graded_points())
        return out.reshape(y.shape) if y.shape else out[0]

    def inverse_fourier(self):
        if self.tent is None:
            raise NoClosedForm("only tents have a closed-form inverse transform here")
        c, L, h = self.tent
        s = self.modulation
        # f_check(y) = h L sinc^2(pi L (y - s)) e^{2 pi i c (y - s)}
        amp = h * L * np.exp(-1j * TWO_PI * c * s)
        return Sinc2Test(amplitude=amp, rate=math.pi * L, center=s, modulation=-c,
                         label=f"check({self.label})")

    def sup_norm(self):
        best = 0.0
        for i in range(len(self.coeffs)):
            a, b = self.breakpoints_[i], self.breakpoints_[i + 1]
            cand = [a, b]
            c = self.coeffs[i]
            if self.powers[i] == 1.0 and len(c) > 1:
                re = np.polynomial.Polynomial(c.real)
                im = np.polynomial.Polynomial(c.imag)
                d = (re * re + im * im).deriv()
                if d.degree() > 0 or np.any(d.coef):
                    r = d.roots()
                    r = r[np.abs(r.imag) < 1e-9].real
                    cand.extend(a + r[(r >= 0) & (r <= b - a)])
            elif self.powers[i] != 1.0:
                cand.extend(np.linspace(a, b, 4001))
            cand = np.asarray(cand)
            vals = np.abs(self.piece_values(i, cand))
            best = max(best, float(vals.max()))
        return best

    def derivative_at(self, x):
        x = float(x)
        h = 1e-6
        return complex((self(x + h) - self(x - h)) / (2 * h))


def tent(center=0.0, half_width=1.0, height=1.0, label="", smoothness="C_c"):
    """``height * (1 - |x - center| / half_width)_+``."""
    c, L = float(center), float(half_width)
    if L <= 0:
        raise ValueError("half_width must be positive")
    return PiecewiseTest(
        [c - L, c, c + L],
        [[0.0, height / L], [height, -height / L]],
        label=label or f"tent(c={c:g},L={L:g},h={height:g})",
        tent=(c, L, complex(height)),
        smoothness=smoothness,
    )


def indicator_test(lo, hi, height=1.0, label=""):
    return PiecewiseTest([lo, hi], [[height]], label=label or f"1[{lo:g},{hi:g}]")


def piecewise_from_global(breakpoints, global_coeffs, label="", smoothness="C_c"):
    """Build from per-piece coefficients in powers of the *global* ``x``."""
    bp = np.asarray(breakpoints, dtype=float)
    local = []
    for b, gc in zip(bp[:-1], global_coeffs):
        p = np.polynomial.Polynomial(gc)
        local.append(p(np.polynomial.Polynomial([b, 1.0])).coef)
    return PiecewiseTest(bp, local, label=label, smoothness=smoothness)


def bump(center=0.0, radius=1.0, order=4, label=""):
    """``(1 - ((x - c)/r)^2)^order`` on ``[c - r, c + r]``; C^{order-1}."""
    p = np.polynomial.Polynomial([1.0, 0.0, -1.0]) ** order
    # rescale to global x
    q = p(np.polynomial.Polynomial([-center / radius, 1.0 / radius]))
    return piecewise_from_global(
        [center - radius, center + radius], [q.coef],
        label=label or f"bump(c={center:g},r={radius:g},k={order})",
        smoothness="C_c^inf-surrogate",
    )


def cubic_bspline(center=0.0, scale=1.0, label=""):
    """Cardinal cubic B-spline supported on ``center + scale * [-2, 2]``."""
    s = float(scale)
    bp = center + s * np.array([-2.0, -1.0, 0.0, 1.0, 2.0])
    # local pieces in u = (x - b_i) / s, then rescale to x - b_i
    pieces = [
        [0.0, 0.0, 0.0, 1 / 6],
        [1 / 6, 1 / 2, 1 / 2, -1 / 2],
        [2 / 3, 0.0, -1.0, 1 / 2],
        [1 / 6, -1 / 2, 1 / 2, -1 / 6],
    ]
    local = [np.array(c) / s ** np.arange(4) for c in pieces]
    return PiecewiseTest(bp, local, label=label or f"B3(c={center:g},s={s:g})",
                         smoothness="C_c^inf-surrogate")


def ex3_test_function():
    """``x^2`` on [0, 1], ``2 - x`` on (1, 2], zero elsewhere."""
    return PiecewiseTest([0.0, 1.0, 2.0], [[0.0, 0.0, 1.0], [1.0, -1.0]], label="f_ex3")


def tempdis_test_function():
    """``sqrt(x)`` on [0, 1], ``2 - x`` on (1, 2], zero elsewhere."""
    return PiecewiseTest([0.0, 1.0, 2.0], [[0.0, 1.0], [1.0, -1.0]], powers=(0.5, 1.0),
                         label="f_tempdis")


# ---------------------------------------------------------------------------
# Gauss-Hermite functions


def _hermite_fn(k_coeffs, u):
    """``sum_k a_k H_k(sqrt(2 pi) u) e^{-pi u^2}`` (eigenfunctions of the FT)."""
    return H.hermval(_SQRT_2PI * u, k_coeffs) * np.exp(-math.pi * u * u)


@dataclass(frozen=True, eq=False)
class GaussHermite(TestFunction):
    """``e^{-2 pi i s x} sum_k a_k h_k((x - c)/w)`` with
    ``h_k(u) = H_k(sqrt(2 pi) u) exp(-pi u^2)``, so that ``h_k^ = (-i)^k h_k``.
    """

    center: float = 0.0
    width: float = 1.0
    coeffs: np.ndarray = field(default_factory=lambda: np.array([1.0 + 0j]))
    modulation: float = 0.0
    label: str = ""
    smoothness: str = "Schwartz"

    def __post_init__(self):
        if not self.width > 0:
            raise ValueError("width must be positive")
        object.__setattr__(self, "coeffs", np.atleast_1d(np.asarray(self.coeffs, dtype=complex)))

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        u = (x - self.center) / self.width
        return _hermite_fn(self.coeffs, u) * _phase(x, self.modulation)

    def _envelope(self, u):
        au = np.abs(_SQRT_2PI * np.asarray(u, dtype=float))
        env = sum(abs(a) * _abs_herm_bound(k, au) for k, a in enumerate(self.coeffs) if a != 0)
        return env * np.exp(-math.pi * np.asarray(u, dtype=float) ** 2)

    def oscillation(self):
        return abs(self.modulation) + (len(self.coeffs) + 1) / self.width

    def effective_support(self, tol=1e-20):
        R = 1.0
        while self._envelope(R) > tol and R < 60:
            R += 0.25
        return (self.center - R * self.width, self.center + R * self.width)

    def tail_bound(self, lo, hi, local_mass_bound, spacing=None):
        # |f| <= env(u) decreasing past R >= deg; sum over unit cells of the
        # cell mass times the envelope at the cell's near edge
        R = min(self.center - lo, hi - self.center) / self.width
        if R <= 0:
            return math.inf
        us = R + np.arange(0, 400) * 0.25
        env = self._envelope(us)
        # cells of length 0.25 * width in x, both sides
        cell = 0.25 * self.width
        per_cell = local_mass_bound * max(1.0, cell) if spacing is None else local_mass_bound * (cell / spacing + 1)
        return float(2 * per_cell * env.sum())

    def fourier_value(self, y):
        return self.fourier()(y)

    def fourier(self):
        c, w, s = self.center, self.width, self.modulation
        k = np.arange(len(self.coeffs))
        coeffs = self.coeffs * (-1j) ** k * w * np.exp(-1j * TWO_PI * c * s)
        return GaussHermite(center=-s, width=1.0 / w, coeffs=coeffs, modulation=c,
                            label=f"hat({self.label})")

    def inverse_fourier(self):
        c, w, s = self.center, self.width, self.modulation
        k = np.arange(len(self.coeffs))
        coeffs = self.coeffs * (1j) ** k * w * np.exp(-1j * TWO_PI * c * s)
        return GaussHermite(center=s, width=1.0 / w, coeffs=coeffs, modulation=-c,
                            label=f"check({self.label})")

    def translate(self, t):
        scale = np.exp(1j * TWO_PI * self.modulation * t) if self.modulation else 1.0
        return replace(self, center=self.center + t, coeffs=self.coeffs * scale)

    def reflect(self):
        k = np.arange(len(self.coeffs))
        return replace(self, center=-self.center, coeffs=self.coeffs * (-1.0) ** k,
                       modulation=-self.modulation)

    def conj(self):
        return replace(self, coeffs=np.conj(self.coeffs), modulation=-self.modulation)

    def scaled(self, a):
        return replace(self, coeffs=self.coeffs * a)

    def derivative_at(self, x):
        x = float(x)
        u = (x - self.center) / self.width
        z = _SQRT_2PI * u
        p = H.hermval(z, self.coeffs)
        dp = H.hermval(z, H.hermder(self.coeffs)) if len(self.coeffs) > 1 else 0.0
        g = math.exp(-math.pi * u * u)
        dphi = (_SQRT_2PI * dp - TWO_PI * u * p) * g / self.width
        phi = p * g
        s = self.modulation
        ph = np.exp(-1j * TWO_PI * s * x)
        return complex(ph * (dphi - 1j * TWO_PI * s * phi))

    def sup_norm(self):
        lo, hi = self.effective_support(1e-18)
        xs = np.linspace(lo, hi, 4001)
        vals = np.abs(self(xs))
        i = int(np.argmax(vals))
        h = xs[1] - xs[0]
        res = minimize_scalar(lambda x: -abs(complex(self(np.array([x]))[0])),
                              bounds=(xs[i] - h, xs[i] + h), method="bounded",
                              options={"xatol": 1e-12})
        return max(float(vals[i]), -float(res.fun))


def _abs_herm_bound(k, az):
    """Bound |H_k(z)| by the polynomial with absolute coefficients at |z|."""
    coef = np.abs(H.herm2poly(np.eye(k + 1)[k]))
    return np.polynomial.polynomial.polyval(az, coef)


def gaussian(center=0.0, width=1.0, amplitude=1.0, degree=0, label=""):
    coeffs = np.zeros(degree + 1, dtype=complex)
    coeffs[degree] = amplitude
    return GaussHermite(center=center, width=width, coeffs=coeffs,
                        label=label or f"gh(c={center:g},w={width:g},k={degree})")


# ---------------------------------------------------------------------------
# sinc^2 profiles (inverse transforms of tents)


@dataclass(frozen=True, eq=False)
class Sinc2Test(TestFunction):
    """``A sinc^2(r (x - c)) e^{-2 pi i s x}`` with ``sinc(y) = sin(y)/y``."""

    amplitude: complex = 1.0
    rate: float = 1.0
    center: float = 0.0
    modulation: float = 0.0
    label: str = ""
    smoothness: str = "C_c"  # not compact; listed only as a bank image

    def __post_init__(self):
        if not self.rate > 0:
            raise ValueError("rate must be positive")

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        v = self.amplitude * np.sinc(self.rate * (x - self.center) / math.pi) ** 2
        return v * _phase(x, self.modulation)

    def oscillation(self):
        return abs(self.modulation) + self.rate / math.pi

    def effective_support(self, tol=1e-20):
        R = math.sqrt(abs(self.amplitude) / tol) / self.rate
        return (self.center - R, self.center + R)

    def tail_bound(self, lo, hi, local_mass_bound, spacing=None):
        R = min(self.center - lo, hi - self.center)
        if R <= 1.0:
            return math.inf
        # int_{|u|>R} A/(r u)^2 du over mass density, plus one extra cell per side
        base = 2 * abs(self.amplitude) / (self.rate ** 2 * (R - 1.0))
        return float(local_mass_bound * base)

    def fourier_value(self, y):
        y = np.asarray(y, dtype=float)
        L = self.rate / math.pi
        z = y + self.modulation
        tri = np.maximum(0.0, 1.0 - np.abs(z) / L)
        return self.amplitude * (math.pi / self.rate) * tri * np.exp(-1j * TWO_PI * self.center * z)

    def translate(self, t):
        scale = np.exp(1j * TWO_PI * self.modulation * t) if self.modulation else 1.0
        return replace(self, center=self.center + t, amplitude=self.amplitude * scale)

    def reflect(self):
        return replace(self, center=-self.center, modulation=-self.modulation)

    def conj(self):
        return replace(self, amplitude=np.conj(self.amplitude), modulation=-self.modulation)

    def scaled(self, a):
        return replace(self, amplitude=self.amplitude * a)

    def sup_norm(self):
        return abs(self.amplitude)

    def derivative_at(self, x):
        h = 1e-6
        return complex((self(x + h) - self(x - h)) / (2 * h))


# ---------------------------------------------------------------------------
# exact convolution of compact polynomial pieces


def convolve_piecewise(f, g):
    """Exact ``f * g`` of two compact polynomial ``PiecewiseTest`` functions.

    The result is again piecewise polynomial; it is sampled at Chebyshev
    nodes on each piece of the sum-breakpoint grid and interpolated, which is
    exact up to rounding.
    """
    if not (f.polynomial and g.polynomial) or f.modulation or g.modulation:
        raise ValueError("convolution needs unmodulated polynomial pieces")
    deg = max(len(c) for c in f.coeffs) + max(len(c) for c in g.coeffs) - 1
    bps = np.unique(np.add.outer(f.breakpoints_, g.breakpoints_).ravel())
    bps = _dedupe(bps)
    coeffs = []
    for a, b in zip(bps[:-1], bps[1:]):
        L = b - a
        k = np.arange(deg + 1)
        v = 0.5 * (1 - np.cos(math.pi * (k + 0.5) / (deg + 1)))  # nodes in (0, 1)
        xs = a + L * v
        vals = np.array([_conv_at(f, g, x) for x in xs])
        V = np.vander(v, deg + 1, increasing=True)
        cv = np.linalg.solve(V, vals)
        coeffs.append(cv / L ** np.arange(deg + 1))
    out = PiecewiseTest(bps, coeffs, label=f"({f.label})*({g.label})")
    return out


def _dedupe(bps, tol=1e-12):
    keep = [bps[0]]
    for b in bps[1:]:
        if b - keep[-1] > tol * max(1.0, abs(b)):
            keep.append(b)
    return np.array(keep)


def _conv_at(f, g, x):
    # int f(y) g(x - y) dy over the overlap, broken at both breakpoint sets
    lo = max(f.breakpoints_[0], x - g.breakpoints_[-1])
    hi = min(f.breakpoints_[-1], x - g.breakpoints_[0])
    if hi <= lo:
        return 0.0
    pts = np.concatenate([[lo, hi], f.breakpoints_, x - g.breakpoints_])
    pts = np.unique(pts[(pts >= lo) & (pts <= hi)])
    val, _ = _quad.integrate(lambda y: f(y) * g(x - y), pts, tol=1e-15)
    return val


def autocorrelation_test(g):
    """``g * g~`` with ``g~(x) = conj(g(-x))``; positive-definite by design."""
    return convolve_piecewise(g, g.reflect().conj())


# ---------------------------------------------------------------------------
# standard banks


def compact_bank():
    """Eight compactly supported test functions: tents, splines, a bump and
    the two kinked profiles ``x^2 | 2 - x`` and ``sqrt(x) | 2 - x``."""
    return [
        tent(0.0, 1.0, 1.0, label="tent0"),
        tent(0.0, 2.0, 2.0, label="g_ex2"),
        ex3_test_function(),
        tempdis_test_function(),
        tent(0.5, 0.75, 1.0, label="tent_shift"),
        piecewise_from_global([-1.0, 1.0], [[1.0, 0.0, -1.0]], label="parabola"),
        cubic_bspline(0.0, 1.0, label="bspline3"),
        bump(1.3, 1.5, order=4, label="bump4"),
    ]


def schwartz_bank():
    """Twelve Gauss-Hermite functions of degree 0..3.

    Centres are off the origin so that no member is accidentally odd or flat
    at 0; widths stay near 1 so that ``f`` and ``f^`` vary on comparable
    scales."""
    params = [
        (0.10, 1.0, 0), (-0.25, 0.8, 0), (0.40, 1.25, 0), (0.15, 0.9, 0),
        (-0.30, 1.0, 1), (0.20, 1.1, 1), (0.35, 0.85, 1), (-0.45, 1.2, 1),
        (0.05, 1.0, 2), (-0.15, 1.15, 2), (0.25, 0.95, 3), (-0.20, 1.05, 3),
    ]
    out = []
    for i, (c, w, k) in enumerate(params):
        out.append(gaussian(c, w, 1.0, k, label=f"gh{i:02d}"))
    return out


def smooth_surrogate_bank():
    return [f for f in compact_bank() if f.smoothness == "C_c^inf-surrogate"]
