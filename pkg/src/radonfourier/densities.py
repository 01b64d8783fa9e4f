"""Closed-form density terms for absolutely continuous parts of a measure.

Every density carries an optional ``clip`` interval; the density is then
multiplied by the indicator of the closed interval.  A clipped
``ModulatedConstant`` with zero frequency is what the descriptors call an
``indicator``.
"""

from dataclasses import dataclass, replace
import math

import numpy as np

TWO_PI = 2.0 * math.pi
ZERO = 1e-15


def _clip_mask(x, clip):
    if clip is None:
        return 1.0
    return ((x >= clip[0]) & (x <= clip[1])).astype(float)


def _intersect(a, b):
    if a is None:
        return b
    if b is None:
        return a
    lo, hi = max(a[0], b[0]), min(a[1], b[1])
    if hi < lo:
        return (lo, lo)
    return (lo, hi)


def _modulate(x, freq):
    if freq == 0:
        return 1.0
    return np.exp(1j * TWO_PI * freq * x)


class Density:
    """Base class.  Subclasses are frozen dataclasses."""

    kind = "density"
    clip = None

    def native_support(self):
        return None

    def support(self):
        return _intersect(self.native_support(), self.clip)

    def values(self, x):
        raise NotImplementedError

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        return self.values(x) * _clip_mask(x, self.clip)

    def breakpoints(self, lo, hi):
        pts = list(self._breaks(lo, hi))
        if self.clip is not None:
            pts.extend(self.clip)
        pts = np.asarray(pts, dtype=float)
        return pts[(pts >= lo) & (pts <= hi)]

    def _breaks(self, lo, hi):
        return ()

    def abs_bound(self):
        """Upper bound for ``sup |d|``."""
        raise NotImplementedError

    def oscillation(self):
        return 0.0

    def period(self):
        """Exact period of ``|d|`` as a float, ``0.0`` if constant, ``None`` if
        not periodic (compact or decaying)."""
        return None

    def decaying(self):
        return False

    def scaled(self, a):
        raise NotImplementedError

    def translate(self, t):
        raise NotImplementedError

    def dilate(self, c):
        """Push-forward of ``d * lambda`` under ``x -> c x`` for ``c > 0``."""
        raise NotImplementedError

    def reflect(self):
        raise NotImplementedError

    def restrict(self, lo, hi):
        return replace(self, clip=_intersect(self.clip, (lo, hi)))

    def merge_key(self):
        return None

    def plus(self, other):
        raise NotImplementedError

    def is_zero(self):
        return False

    @staticmethod
    def _shift_clip(clip, t):
        return None if clip is None else (clip[0] + t, clip[1] + t)

    @staticmethod
    def _dilate_clip(clip, c):
        return None if clip is None else (clip[0] * c, clip[1] * c)

    @staticmethod
    def _reflect_clip(clip):
        return None if clip is None else (-clip[1], -clip[0])


@dataclass(frozen=True)
class ModulatedConstant(Density):
    """``amplitude * exp(2 pi i frequency x)``; Lebesgue measure is
    ``ModulatedConstant(0, 1)``."""

    frequency: float = 0.0
    amplitude: complex = 1.0
    clip: tuple = None

    @property
    def kind(self):
        if self.clip is not None and self.frequency == 0:
            return "indicator"
        return "modulated"

    def native_support(self):
        return None

    def values(self, x):
        return self.amplitude * _modulate(x, self.frequency) * np.ones_like(x)

    def abs_bound(self):
        return abs(self.amplitude)

    def oscillation(self):
        return abs(self.frequency)

    def period(self):
        if self.clip is not None:
            return None
        return 0.0  # |d| is constant

    def scaled(self, a):
        return replace(self, amplitude=self.amplitude * a)

    def translate(self, t):
        return replace(self, amplitude=self.amplitude * np.exp(-1j * TWO_PI * self.frequency * t),
                       clip=self._shift_clip(self.clip, t))

    def dilate(self, c):
        return replace(self, frequency=self.frequency / c, amplitude=self.amplitude / c,
                       clip=self._dilate_clip(self.clip, c))

    def reflect(self):
        return replace(self, frequency=-self.frequency, clip=self._reflect_clip(self.clip))

    def merge_key(self):
        return ("mc", self.frequency, self.clip)

    def plus(self, other):
        return replace(self, amplitude=self.amplitude + other.amplitude)

    def is_zero(self):
        return abs(self.amplitude) <= ZERO or (self.clip is not None and self.clip[1] <= self.clip[0])


def lebesgue(amplitude=1.0):
    return ModulatedConstant(0.0, complex(amplitude))


def indicator(lo, hi, amplitude=1.0):
    return ModulatedConstant(0.0, complex(amplitude), clip=(float(lo), float(hi)))


@dataclass(frozen=True)
class PiecewisePoly(Density):
    """Compact piecewise polynomial; piece ``i`` is
    ``sum_j coeffs[i][j] (x - b_i)^j`` on ``[b_i, b_{i+1}]``."""

    breakpoints_: tuple
    coeffs: tuple
    clip: tuple = None
    kind = "piecewise_poly"

    def __post_init__(self):
        bp = tuple(float(b) for b in self.breakpoints_)
        if len(bp) < 2 or any(b2 <= b1 for b1, b2 in zip(bp, bp[1:])):
            raise ValueError("PiecewisePoly breakpoints must be strictly increasing")
        if len(self.coeffs) != len(bp) - 1:
            raise ValueError("PiecewisePoly needs breakpoints - 1 pieces")
        object.__setattr__(self, "breakpoints_", bp)
        object.__setattr__(self, "coeffs", tuple(
            tuple(complex(c) for c in np.atleast_1d(cs)) for cs in self.coeffs))

    def native_support(self):
        return (self.breakpoints_[0], self.breakpoints_[-1])

    def _breaks(self, lo, hi):
        return self.breakpoints_

    def values(self, x):
        bp = np.asarray(self.breakpoints_)
        out = np.zeros(x.shape, dtype=complex)
        idx = np.searchsorted(bp, x, side="right") - 1
        idx = np.where(x == bp[-1], len(bp) - 2, idx)
        for i, c in enumerate(self.coeffs):
            sel = idx == i
            if np.any(sel):
                out[sel] = np.polynomial.polynomial.polyval(x[sel] - bp[i], np.asarray(c))
        return out

    def abs_bound(self):
        best = 0.0
        for i, c in enumerate(self.coeffs):
            L = self.breakpoints_[i + 1] - self.breakpoints_[i]
            u = np.linspace(0.0, L, 257)
            v = np.abs(np.polynomial.polynomial.polyval(u, np.asarray(c)))
            # sampled max plus a derivative slack
            dc = np.polynomial.polynomial.polyder(np.asarray(c)) if len(c) > 1 else np.zeros(1)
            slope = np.abs(np.polynomial.polynomial.polyval(u, dc)).max() if len(c) > 1 else 0.0
            best = max(best, float(v.max() + slope * L / 256))
        return best

    def scaled(self, a):
        return replace(self, coeffs=tuple(tuple(c * a for c in cs) for cs in self.coeffs))

    def translate(self, t):
        return replace(self, breakpoints_=tuple(b + t for b in self.breakpoints_),
                       clip=self._shift_clip(self.clip, t))

    def dilate(self, c):
        coeffs = tuple(tuple(cj / c ** j / c for j, cj in enumerate(cs)) for cs in self.coeffs)
        return replace(self, breakpoints_=tuple(b * c for b in self.breakpoints_), coeffs=coeffs,
                       clip=self._dilate_clip(self.clip, c))

    def reflect(self):
        bp = tuple(-b for b in self.breakpoints_[::-1])
        lengths = np.diff(self.breakpoints_)[::-1]
        coeffs = []
        for cs, L in zip(self.coeffs[::-1], lengths):
            q = np.polynomial.Polynomial(np.asarray(cs))(np.polynomial.Polynomial([L, -1.0]))
            coeffs.append(tuple(q.coef))
        return replace(self, breakpoints_=bp, coeffs=tuple(coeffs),
                       clip=self._reflect_clip(self.clip))

    def merge_key(self):
        return ("pp", self.breakpoints_, self.clip)

    def plus(self, other):
        coeffs = []
        for a, b in zip(self.coeffs, other.coeffs):
            n = max(len(a), len(b))
            a = np.pad(np.asarray(a), (0, n - len(a)))
            b = np.pad(np.asarray(b), (0, n - len(b)))
            coeffs.append(tuple(a + b))
        return replace(self, coeffs=tuple(coeffs))

    def is_zero(self):
        return all(abs(c) <= ZERO for cs in self.coeffs for c in cs)


@dataclass(frozen=True)
class _SincBase(Density):
    amplitude: complex = 1.0
    rate: float = 1.0
    center: float = 0.0
    frequency: float = 0.0
    clip: tuple = None

    def __post_init__(self):
        if not self.rate > 0:
            raise ValueError("sinc rate must be positive")

    def native_support(self):
        return None

    def abs_bound(self):
        return abs(self.amplitude)

    def oscillation(self):
        return abs(self.frequency) + self.rate / math.pi

    def decaying(self):
        return self.clip is None

    def scaled(self, a):
        return replace(self, amplitude=self.amplitude * a)

    def translate(self, t):
        return replace(self, center=self.center + t,
                       amplitude=self.amplitude * np.exp(-1j * TWO_PI * self.frequency * t),
                       clip=self._shift_clip(self.clip, t))

    def dilate(self, c):
        return replace(self, amplitude=self.amplitude / c, rate=self.rate / c,
                       center=self.center * c, frequency=self.frequency / c,
                       clip=self._dilate_clip(self.clip, c))

    def reflect(self):
        return replace(self, center=-self.center, frequency=-self.frequency,
                       clip=self._reflect_clip(self.clip))

    def merge_key(self):
        return (self.kind, self.rate, self.center, self.frequency, self.clip)

    def plus(self, other):
        return replace(self, amplitude=self.amplitude + other.amplitude)

    def is_zero(self):
        return abs(self.amplitude) <= ZERO


@dataclass(frozen=True)
class Sinc(_SincBase):
    """``amplitude * sinc(rate (x - center)) * exp(2 pi i frequency x)``,
    ``sinc(y) = sin(y)/y``."""

    kind = "sinc"

    def values(self, x):
        s = np.sinc(self.rate * (x - self.center) / math.pi)
        return self.amplitude * s * _modulate(x, self.frequency)

    def tail_abs_bound(self, r):
        """Bound for ``|d(x)|`` when ``|x - center| >= r``."""
        return abs(self.amplitude) * min(1.0, 1.0 / (self.rate * r)) if r > 0 else abs(self.amplitude)


@dataclass(frozen=True)
class Sinc2(_SincBase):
    """``amplitude * sinc(rate (x - center))^2 * exp(2 pi i frequency x)``."""

    kind = "sinc2"

    def values(self, x):
        s = np.sinc(self.rate * (x - self.center) / math.pi)
        return self.amplitude * s * s * _modulate(x, self.frequency)

    def tail_abs_bound(self, r):
        return abs(self.amplitude) * min(1.0, 1.0 / (self.rate * r) ** 2) if r > 0 else abs(self.amplitude)


@dataclass(frozen=True)
class Tent(Density):
    """``amplitude * (1 - |x - center|/half_width)_+ * exp(2 pi i frequency x)``."""

    center: float = 0.0
    half_width: float = 1.0
    amplitude: complex = 1.0
    frequency: float = 0.0
    clip: tuple = None
    kind = "tent"

    def __post_init__(self):
        if not self.half_width > 0:
            raise ValueError("tent half_width must be positive")

    def native_support(self):
        return (self.center - self.half_width, self.center + self.half_width)

    def _breaks(self, lo, hi):
        return (self.center - self.half_width, self.center, self.center + self.half_width)

    def values(self, x):
        tri = np.maximum(0.0, 1.0 - np.abs(x - self.center) / self.half_width)
        return self.amplitude * tri * _modulate(x, self.frequency)

    def abs_bound(self):
        return abs(self.amplitude)

    def oscillation(self):
        return abs(self.frequency)

    def scaled(self, a):
        return replace(self, amplitude=self.amplitude * a)

    def translate(self, t):
        return replace(self, center=self.center + t,
                       amplitude=self.amplitude * np.exp(-1j * TWO_PI * self.frequency * t),
                       clip=self._shift_clip(self.clip, t))

    def dilate(self, c):
        return replace(self, center=self.center * c, half_width=self.half_width * c,
                       amplitude=self.amplitude / c, frequency=self.frequency / c,
                       clip=self._dilate_clip(self.clip, c))

    def reflect(self):
        return replace(self, center=-self.center, frequency=-self.frequency,
                       clip=self._reflect_clip(self.clip))

    def merge_key(self):
        return ("tent", self.center, self.half_width, self.frequency, self.clip)

    def plus(self, other):
        return replace(self, amplitude=self.amplitude + other.amplitude)

    def is_zero(self):
        return abs(self.amplitude) <= ZERO


@dataclass(frozen=True)
class Periodized(Density):
    """``weight * sum_k profile(x - offset - k * spacing)`` for a compact
    profile density (``Tent`` or ``PiecewisePoly``)."""

    profile: Density
    spacing: float
    offset: float = 0.0
    weight: complex = 1.0
    clip: tuple = None
    kind = "periodized"

    def __post_init__(self):
        if not self.spacing > 0:
            raise ValueError("periodized spacing must be positive")
        if self.profile.support() is None:
            raise ValueError("periodized profile must be compactly supported")

    def _k_range(self, lo, hi):
        plo, phi = self.profile.support()
        k0 = math.ceil((lo - self.offset - phi) / self.spacing)
        k1 = math.floor((hi - self.offset - plo) / self.spacing)
        return k0, k1

    def values(self, x):
        plo, phi = self.profile.support()
        y = x - self.offset
        kmin = np.ceil((y - phi) / self.spacing)
        n = int(math.ceil((phi - plo) / self.spacing)) + 1
        out = np.zeros(x.shape, dtype=complex)
        for j in range(n + 1):
            u = y - (kmin + j) * self.spacing
            sel = (u >= plo) & (u <= phi)
            if np.any(sel):
                out[sel] += self.profile(u[sel])
        return self.weight * out

    def _breaks(self, lo, hi):
        k0, k1 = self._k_range(lo, hi)
        if k1 - k0 > 200000:
            raise ValueError("window too large for periodized breakpoints")
        base = np.asarray(self.profile.breakpoints(-np.inf, np.inf))
        ks = np.arange(k0, k1 + 1)
        return (self.offset + ks[:, None] * self.spacing + base[None, :]).ravel()

    def abs_bound(self):
        plo, phi = self.profile.support()
        n = int(math.ceil((phi - plo) / self.spacing)) + 1
        return abs(self.weight) * self.profile.abs_bound() * n

    def oscillation(self):
        return self.profile.oscillation()

    def period(self):
        return None if self.clip is not None else float(self.spacing)

    def scaled(self, a):
        return replace(self, weight=self.weight * a)

    def translate(self, t):
        return replace(self, offset=self.offset + t, clip=self._shift_clip(self.clip, t))

    def dilate(self, c):
        return replace(self, profile=self.profile.dilate(c).scaled(c), spacing=self.spacing * c,
                       offset=self.offset * c, weight=self.weight / c,
                       clip=self._dilate_clip(self.clip, c))

    def reflect(self):
        return replace(self, profile=self.profile.reflect(), offset=-self.offset,
                       clip=self._reflect_clip(self.clip))

    def is_zero(self):
        return abs(self.weight) <= ZERO or self.profile.is_zero()
