"""Closed-form Radon measures on the real line.

A :class:`Measure` is a finite sum of point masses (:class:`Atom`), weighted
lattice combs (:class:`LatticeComb`, optionally with a pointwise envelope
density) and absolutely continuous terms (see :mod:`radonfourier.densities`).
Everything here is immutable; operations return new measures.
"""

from dataclasses import dataclass, field, replace
from fractions import Fraction
import math

import numpy as np
from scipy.optimize import minimize_scalar

from . import _quad
from .densities import (Density, ModulatedConstant, PiecewisePoly, Periodized, Sinc, Sinc2,
                        Tent, indicator, lebesgue, ZERO)
from .errors import TailBoundFailure, UnboundedLocalMass
from .testfunctions import GaussHermite, PiecewiseTest, TestFunction, convolve_piecewise, tent

__all__ = [
    "Atom", "LatticeComb", "Measure", "CompactInterval", "NormReport", "SupReport",
    "pair", "total_variation_on", "norm_K", "norm_report", "transform", "translate",
    "reflect", "scale", "restrict", "convolve_sup", "sup_report", "combine",
    "dirac", "dirac_comb", "lebesgue_measure", "point_masses", "DEFAULT_TOL",
]

DEFAULT_TOL = 1e-10
MERGE_TOL = 1e-12
# largest number of comb points materialised in one pairing
_POINT_CAP = 4_000_000
# half-range scanned for measures with decaying/incommensurate parts
SAMPLED_RANGE = 64.0


@dataclass(frozen=True)
class CompactInterval:
    """Closed interval ``[lo, hi]``."""

    lo: float
    hi: float

    def __post_init__(self):
        lo, hi = float(self.lo), float(self.hi)
        if not (math.isfinite(lo) and math.isfinite(hi)) or lo > hi:
            raise ValueError(f"invalid interval [{self.lo}, {self.hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def length(self):
        return self.hi - self.lo

    def __iter__(self):
        return iter((self.lo, self.hi))

    def shifted(self, t):
        return CompactInterval(self.lo + t, self.hi + t)

    @classmethod
    def parse(cls, text):
        """Parse ``"a,b"`` or ``"[a,b]"``."""
        parts = text.strip().strip("[]").split(",")
        if len(parts) != 2:
            raise ValueError(f"cannot parse interval {text!r}")
        return cls(float(parts[0]), float(parts[1]))


@dataclass(frozen=True)
class Atom:
    position: float
    weight: complex

    def __post_init__(self):
        object.__setattr__(self, "position", float(self.position))
        object.__setattr__(self, "weight", complex(self.weight))


@dataclass(frozen=True)
class LatticeComb:
    """``weight * sum_k env(p_k) delta_{p_k}`` with ``p_k = offset + k spacing``.

    ``envelope`` is an optional density evaluated at the lattice points (used
    for transforms of modulated or smoothed measures).
    """

    spacing: float
    offset: float = 0.0
    weight: complex = 1.0
    envelope: Density = None

    def __post_init__(self):
        s = float(self.spacing)
        if not s > 0 or not math.isfinite(s):
            raise ValueError("comb spacing must be positive")
        o = float(self.offset) % s
        if s - o < MERGE_TOL * max(1.0, s):
            o = 0.0
        object.__setattr__(self, "spacing", s)
        object.__setattr__(self, "offset", o)
        object.__setattr__(self, "weight", complex(self.weight))

    def points(self, lo, hi):
        """Lattice positions and weights in the closed window ``[lo, hi]``."""
        eps = MERGE_TOL * max(1.0, abs(lo), abs(hi))
        k0 = math.ceil((lo - self.offset - eps) / self.spacing)
        k1 = math.floor((hi - self.offset + eps) / self.spacing)
        if k1 < k0:
            return np.empty(0), np.empty(0, dtype=complex)
        if k1 - k0 + 1 > _POINT_CAP:
            raise UnboundedLocalMass("window meets too many comb points")
        x = self.offset + np.arange(k0, k1 + 1) * self.spacing
        w = np.full(x.shape, self.weight, dtype=complex)
        if self.envelope is not None:
            w = w * self.envelope(x)
        return x, w

    def weight_bound(self):
        env = 1.0 if self.envelope is None else self.envelope.abs_bound()
        return abs(self.weight) * env

    def decaying(self):
        return self.envelope is not None and self.envelope.decaying()

    def key(self):
        return (self.spacing, self.offset, None if self.envelope is None else _density_key(self.envelope))


def _density_key(d):
    return repr(d)


@dataclass(frozen=True)
class Measure:
    """Normalised finite sum of atoms, combs and densities."""

    atoms: tuple = ()
    combs: tuple = ()
    ac: tuple = ()
    label: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "atoms", _merge_atoms(self.atoms))
        object.__setattr__(self, "combs", _merge_combs(self.combs))
        object.__setattr__(self, "ac", _merge_densities(self.ac))

    # -- algebra -------------------------------------------------------
    def __add__(self, other):
        return Measure(self.atoms + other.atoms, self.combs + other.combs, self.ac + other.ac)

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, a):
        a = complex(a)
        return Measure(tuple(Atom(t.position, t.weight * a) for t in self.atoms),
                       tuple(replace(c, weight=c.weight * a) for c in self.combs),
                       tuple(d.scaled(a) for d in self.ac))

    __rmul__ = __mul__

    @property
    def is_zero(self):
        return not (self.atoms or self.combs or self.ac)

    @property
    def is_discrete(self):
        return not self.ac

    @property
    def is_finite_atomic(self):
        return not (self.combs or self.ac)

    def __repr__(self):
        parts = [f"{a.weight:.6g}*d({a.position:.6g})" for a in self.atoms[:6]]
        if len(self.atoms) > 6:
            parts.append(f"...({len(self.atoms)} atoms)")
        parts += [f"{c.weight:.6g}*comb({c.spacing:.6g}+{c.offset:.6g})" for c in self.combs]
        parts += [type(d).__name__ for d in self.ac]
        return "Measure(" + " + ".join(parts or ["0"]) + ")"


def _merge_atoms(atoms):
    atoms = [a if isinstance(a, Atom) else Atom(*a) for a in atoms]
    if not atoms:
        return ()
    atoms.sort(key=lambda a: a.position)
    out = [atoms[0]]
    for a in atoms[1:]:
        last = out[-1]
        if abs(a.position - last.position) <= MERGE_TOL * max(1.0, abs(a.position)):
            out[-1] = Atom(last.position, last.weight + a.weight)
        else:
            out.append(a)
    return tuple(a for a in out if abs(a.weight) > ZERO)


def _merge_combs(combs):
    merged = {}
    order = []
    for c in combs:
        k = c.key()
        if k in merged:
            merged[k] = replace(merged[k], weight=merged[k].weight + c.weight)
        else:
            merged[k] = c
            order.append(k)
    out = []
    for k in order:
        c = merged[k]
        if abs(c.weight) <= ZERO:
            continue
        if c.envelope is not None and c.envelope.is_zero():
            continue
        out.append(c)
    return tuple(out)


def _merge_densities(ds):
    merged = {}
    order = []
    for i, d in enumerate(ds):
        k = d.merge_key()
        k = ("unique", i) if k is None else k
        if k in merged:
            merged[k] = merged[k].plus(d)
        else:
            merged[k] = d
            order.append(k)
    return tuple(merged[k] for k in order if not merged[k].is_zero())


# ---------------------------------------------------------------------------
# constructors


def dirac(x=0.0, weight=1.0):
    return Measure(atoms=(Atom(x, weight),))


def dirac_comb(spacing=1.0, offset=0.0, weight=1.0, envelope=None):
    return Measure(combs=(LatticeComb(spacing, offset, weight, envelope),))


def lebesgue_measure(amplitude=1.0):
    return Measure(ac=(lebesgue(amplitude),))


def combine(a, mu, b, nu):
    """``a mu + b nu`` in normal form."""
    return mu * a + nu * b


# ---------------------------------------------------------------------------
# point masses


def point_masses(mu, lo, hi):
    """Merged positions and weights of all atoms and comb points in ``[lo, hi]``."""
    eps = MERGE_TOL * max(1.0, abs(lo), abs(hi))
    xs, ws = [], []
    if mu.atoms:
        pos = np.array([a.position for a in mu.atoms])
        wt = np.array([a.weight for a in mu.atoms])
        sel = (pos >= lo - eps) & (pos <= hi + eps)
        xs.append(pos[sel])
        ws.append(wt[sel])
    for c in mu.combs:
        x, w = c.points(lo, hi)
        xs.append(x)
        ws.append(w)
    if not xs:
        return np.empty(0), np.empty(0, dtype=complex)
    x = np.concatenate(xs)
    w = np.concatenate(ws).astype(complex)
    if x.size == 0:
        return x, w
    order = np.argsort(x, kind="stable")
    x, w = x[order], w[order]
    if len(xs) > 1:
        gap = np.diff(x) > MERGE_TOL * np.maximum(1.0, np.abs(x[1:]))
        group = np.concatenate([[0], np.cumsum(gap)])
        merged_w = np.zeros(group[-1] + 1, dtype=complex)
        np.add.at(merged_w, group, w)
        first = np.concatenate([[True], gap])
        x, w = x[first], merged_w
    keep = np.abs(w) > ZERO
    return x[keep], w[keep]


# ---------------------------------------------------------------------------
# pairing


def _test_window(f, tol):
    s = f.support()
    if s is not None:
        return s, True
    return f.effective_support(min(tol, 1e-14) * 1e-4), False


def _pair_comb(c, f, tol):
    (lo, hi), compact = _test_window(f, tol)
    if compact:
        x, w = c.points(lo, hi)
        return complex(np.sum(w * f(x))) if x.size else 0.0
    mass = c.weight_bound() * (1.0 / c.spacing + 1.0)
    center = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    while True:
        tail = f.tail_bound(center - half, center + half, mass, None)
        if tail <= tol:
            break
        half *= 2
        if 2 * half / c.spacing > _POINT_CAP:
            raise TailBoundFailure(
                f"comb sum against {type(f).__name__} does not reach tolerance {tol:g}")
    x, w = c.points(center - half, center + half)
    return complex(np.sum(w * f(x))) if x.size else 0.0


def _panel(d, f):
    osc = d.oscillation() + f.oscillation()
    return None if osc == 0 else 1.0 / osc


def _pair_density(d, f, tol):
    if isinstance(d, ModulatedConstant) and d.clip is None:
        try:
            # int a e^{2 pi i theta x} f(x) dx = a * f^(-theta)
            return complex(d.amplitude * f.fourier_value(-d.frequency))
        except Exception:  # no closed form: fall back to quadrature
            pass
    ds = d.support()
    (flo, fhi), fcompact = _test_window(f, tol)
    tail = 0.0
    if ds is not None:
        lo, hi = max(ds[0], flo), min(ds[1], fhi)
        if not fcompact and (ds[0] < flo or ds[1] > fhi):
            tail = f.tail_bound(flo, fhi, d.abs_bound(), None)
    else:
        lo, hi = flo, fhi
        if not fcompact:
            tail = f.tail_bound(flo, fhi, d.abs_bound(), None)
            c = 0.5 * (flo + fhi)
            half = 0.5 * (fhi - flo)
            while tail > tol:
                half *= 2
                if half > 1e6:
                    raise TailBoundFailure(
                        f"density {d.kind} against {type(f).__name__}: tail exceeds {tol:g}")
                tail = f.tail_bound(c - half, c + half, d.abs_bound(), None)
            lo, hi = c - half, c + half
    if tail > tol:
        raise TailBoundFailure(f"density {d.kind} against {type(f).__name__}: tail {tail:g}")
    if hi <= lo:
        return 0.0
    bps = np.concatenate([[lo, hi], d.breakpoints(lo, hi), np.asarray(f.breakpoints(), dtype=float)])
    bps = np.unique(bps[(bps >= lo) & (bps <= hi)])
    graded = [g for g in f.graded_points() if lo <= g <= hi]
    val, _ = _quad.integrate(lambda x: d(x) * f(x), bps, tol=tol * 0.5,
                             max_panel=_panel(d, f), graded=graded)
    return complex(val)


def pair(mu, f, tol=DEFAULT_TOL):
    """``mu(f)`` for a :class:`~radonfourier.testfunctions.TestFunction`.

    Atom contributions are exact; comb sums are finite for compact ``f`` and
    truncated by a certified tail bound otherwise; densities are integrated by
    adaptive Gauss-Legendre quadrature to absolute tolerance ``tol``.

    Raises
    ------
    TailBoundFailure
        If a truncation cannot be certified below ``tol``.
    """
    total = 0j
    if mu.atoms:
        x = np.array([a.position for a in mu.atoms])
        w = np.array([a.weight for a in mu.atoms])
        total += complex(np.sum(w * f(x)))
    for c in mu.combs:
        total += _pair_comb(c, f, tol)
    for d in mu.ac:
        total += _pair_density(d, f, tol)
    return complex(total)


# ---------------------------------------------------------------------------
# total variation


def _abs_density_integral(ds, lo, hi, tol):
    if not ds or hi <= lo:
        return 0.0
    bps = [lo, hi]
    osc = 0.0
    for d in ds:
        bps.extend(d.breakpoints(lo, hi))
        osc = max(osc, d.oscillation())
    bps = np.unique(np.asarray(bps, dtype=float))
    bps = bps[(bps >= lo) & (bps <= hi)]
    panel = None if osc == 0 else 0.5 / osc

    def integrand(x):
        return np.abs(sum(d(x) for d in ds))

    val, _ = _quad.integrate(integrand, bps, tol=tol, max_panel=panel)
    return float(np.real(val))


def _constant_abs(ds):
    """``|sum ds|`` when it is a constant (unclipped pure phases of one
    frequency); otherwise ``None``."""
    if all(isinstance(d, ModulatedConstant) and d.clip is None for d in ds):
        freqs = {d.frequency for d in ds}
        if len(freqs) == 1:
            return abs(sum(d.amplitude for d in ds))
    return None


def total_variation_on(mu, K, tol=DEFAULT_TOL):
    """``|mu|(K)`` for the closed interval ``K`` (boundary atoms included)."""
    K = K if isinstance(K, CompactInterval) else CompactInterval(*K)
    _, w = point_masses(mu, K.lo, K.hi)
    total = float(np.abs(w).sum())
    const = _constant_abs(mu.ac) if mu.ac else None
    if const is not None:
        return total + const * K.length
    return total + _abs_density_integral(mu.ac, K.lo, K.hi, tol)


# ---------------------------------------------------------------------------
# translation-bounded norm


@dataclass(frozen=True)
class NormReport:
    """Result of :func:`norm_report`.

    ``value`` is attained (a lower bound for the supremum); ``upper`` is a
    certified upper bound over the scanned offsets; ``exact`` says whether the
    scanned range provably covers all offsets.
    """

    value: float
    upper: float
    exact: bool
    witness: float
    method: str


def _as_fraction(x):
    fr = Fraction(x).limit_denominator(10 ** 6)
    if abs(float(fr) - x) <= 1e-12 * max(1.0, abs(x)):
        return fr
    return None


def _lcm_fraction(a, b):
    # lcm of positive rationals
    num = a.numerator * b.numerator // math.gcd(a.numerator, b.numerator)
    den = math.gcd(a.denominator, b.denominator)
    return Fraction(num, den)


def common_period(mu, limit=1e4):
    """Common period of ``|mu|`` restricted to its non-compact part.

    Returns ``(period, ok)``: ``period`` is ``0.0`` when the non-compact part
    is translation invariant, ``None`` with ``ok=False`` when there is no
    usable rational common period (decaying envelopes, incommensurate
    spacings).
    """
    periods = []
    freqs = []
    for c in mu.combs:
        if c.decaying():
            return None, False
        periods.append(c.spacing)
        if c.envelope is not None:
            if isinstance(c.envelope, ModulatedConstant) and c.envelope.clip is None:
                freqs.append(c.envelope.frequency)
            elif c.envelope.period() is None:
                return None, False
            elif c.envelope.period():
                periods.append(c.envelope.period())
    for d in mu.ac:
        if d.support() is not None:
            continue
        if d.decaying():
            return None, False
        p = d.period()
        if p is None:
            return None, False
        if isinstance(d, ModulatedConstant):
            freqs.append(d.frequency)
        if p:
            periods.append(p)
    # a single phase frequency and nothing else: the modulus is constant
    if len(set(freqs)) <= 1 and not periods:
        return 0.0, True
    for f in freqs:
        if f != 0:
            periods.append(1.0 / abs(f))
    if not periods:
        return 0.0, True
    fr = [_as_fraction(p) for p in periods]
    if any(f is None or f <= 0 for f in fr):
        return None, False
    P = fr[0]
    for f in fr[1:]:
        P = _lcm_fraction(P, f)
    if float(P) > limit:
        return None, False
    return float(P), True


def _compact_hull(mu):
    lo, hi = math.inf, -math.inf
    for a in mu.atoms:
        lo, hi = min(lo, a.position), max(hi, a.position)
    for d in mu.ac:
        s = d.support()
        if s is not None:
            lo, hi = min(lo, s[0]), max(hi, s[1])
    for c in mu.combs:
        if c.envelope is not None and c.envelope.support() is not None:
            s = c.envelope.support()
            lo, hi = min(lo, s[0]), max(hi, s[1])
    if lo > hi:
        return None
    return lo, hi


def _scan_range(mu, L, sampled_range):
    """Interval of left window endpoints that must be examined."""
    hull = _compact_hull(mu)
    has_infinite = bool(mu.combs) or any(d.support() is None for d in mu.ac)
    if mu.combs and all(c.envelope is not None and c.envelope.support() is not None for c in mu.combs):
        has_infinite = any(d.support() is None for d in mu.ac)
    if not has_infinite:
        if hull is None:
            return None, True
        return (hull[0] - L, hull[1]), True
    P, ok = common_period(mu)
    if ok:
        P = max(P, 0.0)
        if hull is None:
            base = P if P > 0 else L
            return (0.0 - L, base), True
        return (hull[0] - L - P, hull[1] + P), True
    R = sampled_range
    if hull is not None:
        return (min(hull[0], -R) - L, max(hull[1], R)), False
    return (-R - L, R), False


def norm_report(mu, K=CompactInterval(0.0, 1.0), tol=1e-9, sampled_range=SAMPLED_RANGE):
    """Compute ``sup_t |mu|(t + K)``.

    The supremum of the window mass is attained with a window endpoint on a
    point mass, so for discrete measures the finite set of such offsets is
    searched exactly.  Densities are handled on a uniform grid of window
    positions with cumulative quadrature; the Lipschitz constant of the
    density part bounds the error between grid points.
    """
    K = K if isinstance(K, CompactInterval) else CompactInterval(*K)
    L = K.length
    if not L > 0:
        raise ValueError("norm_K needs a nondegenerate interval")
    if mu.is_zero:
        return NormReport(0.0, 0.0, True, 0.0, "zero")
    const = _constant_abs(mu.ac) if mu.ac else None
    rng, exact = _scan_range(mu, L, sampled_range)
    if rng is None:
        return NormReport(0.0, 0.0, True, 0.0, "zero")
    s_lo, s_hi = rng
    px, pw = point_masses(mu, s_lo, s_hi + L)
    pa = np.abs(pw)
    cum = np.concatenate([[0.0], np.cumsum(pa)])

    def point_mass_in(a, b):
        # closed window [a, b]
        eps = MERGE_TOL * np.maximum(1.0, np.maximum(np.abs(a), np.abs(b)))
        i = np.searchsorted(px, a - eps, side="left")
        j = np.searchsorted(px, b + eps, side="right")
        return cum[j] - cum[i]

    if not mu.ac or const is not None:
        cand = px[(px >= s_lo) & (px <= s_hi)] if px.size else np.empty(0)
        # windows whose right endpoint sits on a point
        cand = np.concatenate([cand, px - L]) if px.size else np.array([s_lo])
        vals = point_mass_in(cand, cand + L)
        if const is not None:
            vals = vals + const * L
        i = int(np.argmax(vals))
        v = float(vals[i])
        return NormReport(v, v, exact, float(cand[i] - K.lo), "critical-offsets")

    # densities present: cumulative |d| on a uniform grid
    ds = mu.ac
    osc = max(d.oscillation() for d in ds)
    h = L / 64.0
    if osc > 0:
        h = min(h, 1.0 / (16.0 * osc))
    m = max(1, int(math.ceil(L / h)))
    h = L / m
    n_cells = int(math.ceil((s_hi - s_lo) / h)) + m
    if n_cells > 2_000_000:
        n_cells = 2_000_000
        exact = False
    grid = s_lo + h * np.arange(n_cells + 1)
    cell = _cell_abs_integrals(ds, grid, tol)
    G = np.concatenate([[0.0], np.cumsum(cell)])
    nwin = n_cells - m + 1
    s = grid[:nwin]
    A = G[m:m + nwin] - G[:nwin]
    P_s = point_mass_in(s, s + L)
    vals = A + P_s
    # windows anchored on point masses (interpolate the density part)
    if px.size:
        cand = np.concatenate([px, px - L])
        cand = cand[(cand >= s[0]) & (cand <= s[-1])]
        if cand.size:
            a_interp = np.interp(cand, s, A)
            vals_c = a_interp + point_mass_in(cand, cand + L)
        else:
            vals_c = np.empty(0)
    else:
        cand = np.empty(0)
        vals_c = np.empty(0)
    sup_d = sum(d.abs_bound() for d in ds)
    # upper bound: over a grid cell the density part moves by <= 2 sup|d| h
    # and the point part is at most the mass in the enlarged window
    P_big = point_mass_in(s[:-1], s[1:] + L) if nwin > 1 else P_s
    A_max = np.maximum(A[:-1], A[1:]) if nwin > 1 else A
    upper = float(np.max(A_max + P_big) + 2 * sup_d * h) if nwin > 0 else 0.0
    best_grid = int(np.argmax(vals))
    best = float(vals[best_grid])
    witness = float(s[best_grid])
    if vals_c.size:
        order = np.argsort(vals_c)[::-1][:8]
        for j in order:
            t = float(cand[j])
            exact_v = _abs_density_integral(ds, t, t + L, tol) + float(point_mass_in(t, t + L))
            if exact_v > best:
                best, witness = exact_v, t
    upper = max(upper, best)
    return NormReport(best, upper, exact, witness - K.lo, "grid+lipschitz")


def _cell_abs_integrals(ds, grid, tol):
    """``int |sum ds|`` over every cell of ``grid``."""
    a, b = grid[:-1], grid[1:]
    x, w = _quad._gl(32)
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    out = np.zeros(a.size)
    chunk = 20000
    for start in range(0, a.size, chunk):
        sl = slice(start, start + chunk)
        nodes = mid[sl, None] + half[sl, None] * x[None, :]
        vals = np.abs(sum(d(nodes.ravel()) for d in ds)).reshape(nodes.shape)
        out[sl] = half[sl] * (vals @ w)
    # cells containing breakpoints get a proper adaptive integral
    bps = []
    for d in ds:
        bps.extend(d.breakpoints(grid[0], grid[-1]))
    if bps:
        bps = np.unique(np.asarray(bps))
        idx = np.unique(np.clip(np.searchsorted(grid, bps, side="right") - 1, 0, a.size - 1))
        for i in idx:
            out[i] = _abs_density_integral(ds, a[i], b[i], tol / max(1, idx.size))
    return out


def norm_K(mu, K=CompactInterval(0.0, 1.0), tol=1e-9, threshold=None):
    """``||mu||_K = sup_t |mu|(t + K)``; returns ``math.inf`` when a witness
    exceeds ``threshold`` (if given)."""
    rep = norm_report(mu, K, tol)
    if threshold is not None and rep.value > threshold:
        return math.inf
    return rep.value


# ---------------------------------------------------------------------------
# elementary transformations


def translate(mu, t):
    """``T_t mu``: ``(T_t mu)(g) = mu(T_{-t} g)``, i.e. ``delta_x -> delta_{x+t}``."""
    t = float(t)
    return Measure(tuple(Atom(a.position + t, a.weight) for a in mu.atoms),
                   tuple(replace(c, offset=c.offset + t,
                                 envelope=None if c.envelope is None else c.envelope.translate(t))
                         for c in mu.combs),
                   tuple(d.translate(t) for d in mu.ac))


def reflect(mu):
    """``mu^dagger``: ``delta_x -> delta_{-x}``."""
    return Measure(tuple(Atom(-a.position, a.weight) for a in mu.atoms),
                   tuple(replace(c, offset=-c.offset,
                                 envelope=None if c.envelope is None else c.envelope.reflect())
                         for c in mu.combs),
                   tuple(d.reflect() for d in mu.ac))


def scale(mu, c):
    """Push-forward under ``x -> c x`` (``c != 0``)."""
    c = float(c)
    if c == 0:
        raise ValueError("scale factor must be nonzero")
    nu = reflect(mu) if c < 0 else mu
    c = abs(c)
    return Measure(tuple(Atom(a.position * c, a.weight) for a in nu.atoms),
                   tuple(LatticeComb(k.spacing * c, k.offset * c, k.weight,
                                     None if k.envelope is None else k.envelope.dilate(c).scaled(c))
                         for k in nu.combs),
                   tuple(d.dilate(c) for d in nu.ac))


def restrict(mu, K):
    """``mu|_K``: combs become finitely many atoms, densities are clipped."""
    K = K if isinstance(K, CompactInterval) else CompactInterval(*K)
    x, w = point_masses(mu, K.lo, K.hi)
    atoms = tuple(Atom(p, q) for p, q in zip(x, w))
    ds = []
    for d in mu.ac:
        s = d.support()
        if s is not None and (s[1] < K.lo or s[0] > K.hi):
            continue
        ds.append(d.restrict(K.lo, K.hi))
    return Measure(atoms, (), tuple(ds))


def transform(mu, op, arg=None):
    """Dispatch ``op`` in {"translate", "reflect", "scale", "restrict"}."""
    if op == "translate":
        return translate(mu, arg)
    if op == "reflect":
        return reflect(mu)
    if op == "scale":
        return scale(mu, arg)
    if op == "restrict":
        return restrict(mu, arg)
    raise ValueError(f"unknown transform {op!r}")


# ---------------------------------------------------------------------------
# sup norm of mu * g


@dataclass(frozen=True)
class SupReport:
    value: float
    exact: bool
    witness: float
    method: str


def _conv_points(px, pw, g, t):
    """``sum_p w_p g(t - p)`` for an array of ``t``."""
    lo, hi = g.support()
    t = np.atleast_1d(np.asarray(t, dtype=float))
    out = np.zeros(t.shape, dtype=complex)
    if px.size == 0:
        return out
    i0 = np.searchsorted(px, t - hi, side="left")
    i1 = np.searchsorted(px, t - lo, side="right")
    span = int((i1 - i0).max()) if t.size else 0
    for j in range(span):
        idx = i0 + j
        sel = idx < i1
        if not np.any(sel):
            continue
        ii = idx[sel]
        out[sel] += pw[ii] * g(t[sel] - px[ii])
    return out


def _sup_poly_piece(coef):
    """Max of ``|p(u)|`` on ``[0, 1]`` for a complex polynomial ``p``."""
    P = np.polynomial.Polynomial(coef)
    q = P.coef.real
    r = P.coef.imag
    sq = np.polynomial.Polynomial(q) ** 2 + np.polynomial.Polynomial(r) ** 2
    crit = [0.0, 1.0]
    d = sq.deriv()
    if d.degree() > 0 and np.any(d.coef != 0):
        for z in d.roots():
            if abs(z.imag) < 1e-9 and 0.0 < z.real < 1.0:
                crit.append(z.real)
    crit = np.asarray(crit)
    vals = np.abs(P(crit))
    i = int(np.argmax(vals))
    return float(vals[i]), float(crit[i])


def sup_report(mu, g, tol=DEFAULT_TOL, sampled_range=SAMPLED_RANGE):
    """``||mu * g||_inf`` with ``(mu * g)(t) = mu(T_t g^dagger)``.

    Discrete measures against polynomial ``g`` are handled exactly: ``mu * g``
    is piecewise polynomial between the shifted breakpoints and each piece is
    maximised through the roots of ``d|p|^2``.  Otherwise a dense grid of
    ``t`` is scanned and the best cells are refined with a bounded scalar
    minimiser.
    """
    if g.support() is None:
        raise ValueError("convolve_sup needs a compactly supported g")
    if mu.is_zero:
        return SupReport(0.0, True, 0.0, "zero")
    glo, ghi = g.support()
    W = ghi - glo
    rng, exact = _scan_range(mu, W, sampled_range)
    # rng is for left window endpoints s = t - ghi, window [s, s + W]
    t_lo, t_hi = rng[0] + ghi, rng[1] + ghi
    px, pw = point_masses(mu, t_lo - ghi - 1e-9, t_hi - glo + 1e-9)

    const_parts = [d for d in mu.ac if isinstance(d, ModulatedConstant) and d.clip is None]
    other, fast = [], []
    for d in mu.ac:
        if d in const_parts:
            continue
        conv = _density_conv(d, g)
        if conv is None:
            other.append(d)
        else:
            fast.append(conv)
    const_coeffs = []
    for d in const_parts:
        try:
            # int a e^{2 pi i th x} g(t - x) dx = a e^{2 pi i th t} g^(th)
            const_coeffs.append((d.frequency, d.amplitude * complex(g.fourier_value(d.frequency))))
        except Exception:
            other.append(d)

    poly = isinstance(g, PiecewiseTest) and g.polynomial and g.modulation == 0
    if not mu.ac and poly:
        v, w = _sup_discrete_exact(px, pw, g, t_lo, t_hi)
        return SupReport(v, exact, w, "piecewise-exact")

    def h(t):
        t = np.atleast_1d(np.asarray(t, dtype=float))
        out = _conv_points(px, pw, g, t)
        for th, a in const_coeffs:
            out = out + a * np.exp(2j * math.pi * th * t)
        for conv in fast:
            out = out + conv(t)
        for d in other:
            gr = g.reflect()
            out = out + np.array([_pair_density(d, gr.translate(float(tt)), tol) for tt in t])
        return out

    osc = g.oscillation() + max([d.oscillation() for d in mu.ac] or [0.0])
    dt = W / 64.0
    if osc > 0:
        dt = min(dt, 1.0 / (16 * osc))
    if other:
        dt = max(dt, (t_hi - t_lo) / 2000.0)
    n = int(min(400_000, math.ceil((t_hi - t_lo) / dt) + 1))
    ts = np.linspace(t_lo, t_hi, n)
    if px.size:
        near = np.concatenate([px + b for b in np.asarray(g.breakpoints())]) if not isinstance(g, GaussHermite) else px
        near = near[(near >= t_lo) & (near <= t_hi)]
        ts = np.unique(np.concatenate([ts, near]))
    vals = np.abs(h(ts))
    best_i = int(np.argmax(vals))
    best, witness = float(vals[best_i]), float(ts[best_i])
    step = (t_hi - t_lo) / max(1, n - 1)
    for i in np.argsort(vals)[::-1][:6]:
        a, b = ts[i] - step, ts[i] + step
        res = minimize_scalar(lambda t: -abs(h(t)[0]), bounds=(a, b), method="bounded",
                              options={"xatol": 1e-12})
        if -res.fun > best:
            best, witness = float(-res.fun), float(res.x)
    return SupReport(best, False, witness, "grid+refine")


def _density_conv(d, g):
    """Vectorised exact ``t -> int d(x) g(t - x) dx`` when a closed route exists."""
    if not isinstance(g, PiecewiseTest) or g.modulation:
        return None
    if isinstance(d, ModulatedConstant) and d.frequency == 0 and d.clip is not None:
        a, b = d.clip
        amp = d.amplitude
        return lambda t: amp * (g.primitive(t - a) - g.primitive(t - b))
    if not g.polynomial:
        return None
    if d.clip is not None:
        lo, hi = d.native_support()
        if d.clip[0] > lo or d.clip[1] < hi:
            return None
    if isinstance(d, Tent) and d.frequency == 0:
        dens = tent(d.center, d.half_width, 1.0).scaled(d.amplitude)
    elif isinstance(d, PiecewisePoly):
        dens = PiecewiseTest(list(d.breakpoints_), [np.asarray(c) for c in d.coeffs])
    else:
        return None
    h = convolve_piecewise(dens, g)
    return lambda t: np.asarray(h(t), dtype=complex)


def _sup_discrete_exact(px, pw, g, t_lo, t_hi):
    if px.size == 0:
        return 0.0, 0.0
    gb = np.asarray(g.breakpoints_)
    deg = max(len(c) for c in g.coeffs) - 1
    brk = np.unique(np.concatenate([(px[:, None] + gb[None, :]).ravel(), [t_lo, t_hi]]))
    brk = brk[(brk >= t_lo) & (brk <= t_hi)]
    keep = np.concatenate([[True], np.diff(brk) > 1e-13 * np.maximum(1.0, np.abs(brk[1:]))])
    brk = brk[keep]
    if brk.size < 2:
        v = float(np.abs(_conv_points(px, pw, g, brk))[0])
        return v, float(brk[0])
    a, b = brk[:-1], brk[1:]
    k = np.arange(deg + 1)
    nodes = 0.5 * (1 - np.cos(math.pi * (k + 0.5) / (deg + 1)))
    T = a[:, None] + (b - a)[:, None] * nodes[None, :]
    vals = _conv_points(px, pw, g, T.ravel()).reshape(T.shape)
    V = np.vander(nodes, deg + 1, increasing=True)
    C = np.linalg.solve(V, vals.T).T  # coefficients in u on [0, 1]
    best, witness = -1.0, 0.0
    for i in range(a.size):
        v, u = _sup_poly_piece(C[i])
        if v > best:
            best, witness = v, a[i] + u * (b[i] - a[i])
    # endpoint values directly (jumps of discontinuous g)
    ends = _conv_points(px, pw, g, brk)
    j = int(np.argmax(np.abs(ends)))
    if abs(ends[j]) > best:
        best, witness = float(abs(ends[j])), float(brk[j])
    return float(best), float(witness)


def convolve_sup(mu, g, tol=DEFAULT_TOL):
    """``||mu * g||_inf`` (see :func:`sup_report`)."""
    return sup_report(mu, g, tol).value
