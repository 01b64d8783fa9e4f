"""Rule-based Fourier transform on the closed-form measure model.

Convention: ``f^(y) = int f(x) exp(-2 pi i x y) dx`` and ``f_check(y) =
f^(-y)``.  A measure ``mu`` is transformable with transform ``mu^`` when
``<mu, g> = <mu^, g_check>`` for all test functions ``g``; equivalently
``mu^(h) = mu(h^)``.

Rules (``sinc(y) = sin(y)/y``)::

    delta_x                         -> exp(-2 pi i x .) lambda
    a exp(2 pi i th .) lambda       -> a delta_th
    w sum_k delta_{o + k c}         -> (w/c) sum_m exp(-2 pi i o m/c) delta_{m/c}
    a 1_[c-L, c+L] exp(2 pi i th .) -> 2aL exp(2 pi i (c) (th - .)) sinc(2 pi L (. - th))
    A sinc(r(. - s)) e^{2 pi i p .} -> clipped phase on [p - r/2pi, p + r/2pi]
    A sinc^2(...)                   -> tent of half-width r/pi
    tent                            -> sinc^2
    periodised tent  <->  comb with sinc^2 envelope

Anything else raises :class:`~radonfourier.errors.NotTransformableInModel`.
"""

from dataclasses import dataclass, field, replace
import csv
import io
import math

import numpy as np

from .densities import ModulatedConstant, PiecewisePoly, Periodized, Sinc, Sinc2, Tent, TWO_PI
from .errors import (NotTransformableInModel, PDCheckFailure, SupportViolation,
                     TailBoundFailure, WindowConstructionFailure)
from .measure import (Atom, CompactInterval, LatticeComb, Measure, norm_K, pair,
                      total_variation_on, DEFAULT_TOL)
from . import testfunctions as tf

__all__ = [
    "fourier_transform", "transform_density", "verify_pairing", "PairingReport",
    "ApproximateIdentityKernel", "approximate_identity", "smooth", "pd_bound_check",
    "PDBoundReport", "krein_check", "RULES",
]

RULES = (
    ("atom", "modulated"),
    ("comb", "comb (Poisson summation)"),
    ("comb+phase envelope", "shifted comb"),
    ("comb+sinc/sinc2 envelope, offset 0", "periodized indicator/tent"),
    ("modulated", "atom"),
    ("indicator / clipped modulated", "sinc"),
    ("sinc", "clipped modulated"),
    ("sinc2", "tent"),
    ("tent", "sinc2"),
    ("periodized tent/indicator", "comb with sinc/sinc2 envelope"),
)


def _clip_covers(d):
    """True when a clip does not cut the density's own compact support."""
    s = d.native_support()
    if d.clip is None:
        return True
    return s is not None and d.clip[0] <= s[0] and d.clip[1] >= s[1]


def transform_density(d):
    """Fourier transform of ``d * lambda`` as a ``Measure``."""
    if isinstance(d, ModulatedConstant):
        if d.clip is None:
            return Measure(atoms=(Atom(d.frequency, d.amplitude),))
        lo, hi = d.clip
        c, L = 0.5 * (lo + hi), 0.5 * (hi - lo)
        if L <= 0:
            return Measure()
        amp = d.amplitude * 2 * L * np.exp(1j * TWO_PI * c * d.frequency)
        return Measure(ac=(Sinc(amp, TWO_PI * L, d.frequency, -c),))
    if isinstance(d, Sinc) and not isinstance(d, Sinc2):
        if d.clip is not None:
            raise NotTransformableInModel("clipped sinc density has no closed-form transform", d)
        L = d.rate / TWO_PI
        amp = d.amplitude * math.pi / d.rate * np.exp(1j * TWO_PI * d.center * d.frequency)
        return Measure(ac=(ModulatedConstant(-d.center, amp, (d.frequency - L, d.frequency + L)),))
    if isinstance(d, Sinc2):
        if d.clip is not None:
            raise NotTransformableInModel("clipped sinc^2 density has no closed-form transform", d)
        L = d.rate / math.pi
        amp = d.amplitude * math.pi / d.rate * np.exp(1j * TWO_PI * d.center * d.frequency)
        return Measure(ac=(Tent(d.frequency, L, amp, -d.center),))
    if isinstance(d, Tent):
        if not _clip_covers(d):
            raise NotTransformableInModel("clipped tent has no closed-form transform", d)
        amp = d.amplitude * d.half_width * np.exp(1j * TWO_PI * d.center * d.frequency)
        return Measure(ac=(Sinc2(amp, math.pi * d.half_width, d.frequency, -d.center),))
    if isinstance(d, Periodized):
        if d.clip is not None:
            raise NotTransformableInModel("clipped periodic density has no closed-form transform", d)
        prof = transform_density(d.profile)
        if prof.atoms or prof.combs or len(prof.ac) != 1:
            raise NotTransformableInModel("periodized profile has no density transform", d)
        env = prof.ac[0]
        if d.offset:
            # translation by the offset multiplies the transform by a phase
            env = _add_frequency(env, -d.offset)
        return Measure(combs=(LatticeComb(1.0 / d.spacing, 0.0, d.weight / d.spacing, env),))
    if isinstance(d, PiecewisePoly):
        raise NotTransformableInModel(
            "general piecewise-polynomial density has no closed-form transform", d)
    raise NotTransformableInModel(f"no rule for density kind {d.kind!r}", d)


def _add_frequency(d, f):
    """Multiply a density by ``exp(2 pi i f x)``."""
    return replace(d, frequency=d.frequency + f)


def _transform_comb(c):
    if c.envelope is None:
        env = ModulatedConstant(-c.offset, 1.0) if c.offset else None
        return Measure(combs=(LatticeComb(1.0 / c.spacing, 0.0, c.weight / c.spacing, env),))
    e = c.envelope
    if isinstance(e, ModulatedConstant) and e.clip is None:
        th, a = e.frequency, e.amplitude
        w = c.weight * a * np.exp(1j * TWO_PI * c.offset * th) / c.spacing
        env = ModulatedConstant(-c.offset, 1.0) if c.offset else None
        return Measure(combs=(LatticeComb(1.0 / c.spacing, th, w, env),))
    if isinstance(e, (Sinc, Sinc2)):
        if c.offset != 0:
            raise NotTransformableInModel("shifted comb with decaying envelope has no closed form", c)
        prof = transform_density(e)
        if prof.atoms or prof.combs or len(prof.ac) != 1:
            raise NotTransformableInModel("comb envelope has no density transform", c)
        return Measure(ac=(Periodized(prof.ac[0], 1.0 / c.spacing, 0.0, c.weight / c.spacing),))
    raise NotTransformableInModel(f"no rule for comb envelope {e.kind!r}", c)


def fourier_transform(mu):
    """Closed-form ``mu^`` by the rule table.

    Raises
    ------
    NotTransformableInModel
        Naming the first component without a rule.
    """
    out = Measure()
    if mu.atoms:
        out = out + Measure(ac=tuple(ModulatedConstant(-a.position, a.weight) for a in mu.atoms))
    for c in mu.combs:
        out = out + _transform_comb(c)
    for d in mu.ac:
        out = out + transform_density(d)
    return out


# ---------------------------------------------------------------------------
# pairing verification


@dataclass(frozen=True)
class PairingRow:
    test_id: str
    lhs: complex
    rhs: complex
    residual: float
    passed: bool
    note: str = ""


@dataclass(frozen=True)
class PairingReport:
    rows: tuple
    threshold: float

    @property
    def passed(self):
        return all(r.passed for r in self.rows)

    @property
    def max_residual(self):
        return max((r.residual for r in self.rows if math.isfinite(r.residual)), default=0.0)

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["test_id", "residual", "status"])
        for r in self.rows:
            w.writerow([r.test_id, f"{r.residual:.12g}", "PASS" if r.passed else (r.note or "FAIL")])
        return buf.getvalue()


def verify_pairing(mu, mu_hat, bank=None, threshold=1e-8, tol=1e-11, on_tail="raise"):
    """Check ``<mu, g> = <mu^, g_check>`` for every ``g`` in ``bank``.

    ``bank`` defaults to the Gauss-Hermite bank.  With ``on_tail="skip"`` a
    pairing whose truncation cannot be certified is reported as a
    ``TAIL_BOUND_FAILURE`` row instead of raising.
    """
    bank = tf.schwartz_bank() if bank is None else bank
    rows = []
    for g in bank:
        try:
            lhs = pair(mu, g, tol)
            rhs = pair(mu_hat, g.inverse_fourier(), tol)
        except TailBoundFailure:
            if on_tail == "raise":
                raise
            rows.append(PairingRow(g.label, math.nan, math.nan, math.inf, False, "TAIL_BOUND_FAILURE"))
            continue
        res = abs(lhs - rhs)
        rows.append(PairingRow(g.label, lhs, rhs, res, res <= threshold))
    return PairingReport(tuple(rows), threshold)


# ---------------------------------------------------------------------------
# approximate identity and smoothing


@dataclass(frozen=True)
class ApproximateIdentityKernel:
    """``f_n(x) = n (1 - n|x|)_+``, with ``f_n^(y) = sinc^2(pi y / n)``."""

    n: int
    K: CompactInterval = field(default=None)

    @property
    def density(self):
        return Tent(0.0, 1.0 / self.n, float(self.n))

    def test_function(self):
        return tf.tent(0.0, 1.0 / self.n, float(self.n), label=f"fejer{self.n}")

    def __call__(self, x):
        return np.maximum(0.0, self.n * (1.0 - self.n * np.abs(np.asarray(x, dtype=float))))

    def fourier_value(self, y):
        y = np.asarray(y, dtype=float)
        return np.sinc(y / self.n) ** 2  # np.sinc(u) = sin(pi u)/(pi u)

    @property
    def integral(self):
        return 1.0

    @property
    def support(self):
        return CompactInterval(-1.0 / self.n, 1.0 / self.n)


def approximate_identity(n, K=CompactInterval(-1.0, 1.0)):
    """Normalised tent kernel with support ``[-1/n, 1/n]``.

    Raises
    ------
    SupportViolation
        If the support is not contained in ``K``.
    """
    n = int(n)
    if n < 1:
        raise ValueError("kernel index must be a positive integer")
    K = K if isinstance(K, CompactInterval) else CompactInterval(*K)
    if not (K.lo <= -1.0 / n and 1.0 / n <= K.hi):
        raise SupportViolation(f"[-1/{n}, 1/{n}] is not contained in [{K.lo}, {K.hi}]")
    return ApproximateIdentityKernel(n, K)


def krein_check(kernel, n_grid=10_000, span=None):
    """``sup |f_n^| <= f_n^(0)`` on a grid; returns ``(sup, value_at_0)``."""
    span = 50.0 * kernel.n if span is None else span
    y = np.linspace(-span, span, n_grid)
    return float(np.abs(kernel.fourier_value(y)).max()), float(kernel.fourier_value(0.0))


def smooth(mu, n):
    """``(f_n * mu) lambda`` for the normalised tent ``f_n``.

    Atoms become tents, plain combs become periodised tents, unmodulated
    phases are multiplied by ``f_n^``, and piecewise densities are convolved
    exactly.
    """
    n = int(n)
    h = 1.0 / n
    ac = [Tent(a.position, h, n * a.weight) for a in mu.atoms]
    for c in mu.combs:
        if c.envelope is not None:
            raise ValueError("smoothing of enveloped combs is not supported")
        ac.append(Periodized(Tent(0.0, h, float(n)), c.spacing, c.offset, c.weight))
    kern = tf.tent(0.0, h, float(n))
    for d in mu.ac:
        if isinstance(d, ModulatedConstant) and d.clip is None:
            ac.append(replace(d, amplitude=d.amplitude * float(np.sinc(d.frequency / n) ** 2)))
        elif isinstance(d, ModulatedConstant) and d.frequency == 0:
            g = tf.indicator_test(d.clip[0], d.clip[1], 1.0)
            ac.append(_pp_density(tf.convolve_piecewise(g, kern), d.amplitude))
        elif isinstance(d, Tent) and d.frequency == 0 and _clip_covers(d):
            g = tf.tent(d.center, d.half_width, 1.0)
            ac.append(_pp_density(tf.convolve_piecewise(g, kern), d.amplitude))
        elif isinstance(d, PiecewisePoly) and d.clip is None:
            g = tf.PiecewiseTest(np.asarray(d.breakpoints_), [np.asarray(c) for c in d.coeffs])
            ac.append(_pp_density(tf.convolve_piecewise(g, kern), 1.0))
        else:
            raise ValueError(f"smoothing of {d.kind} densities is not supported")
    return Measure(ac=tuple(ac))


def _pp_density(g, amp):
    return PiecewisePoly(tuple(g.breakpoints_), tuple(tuple(np.asarray(c) * amp) for c in g.coeffs))


# ---------------------------------------------------------------------------
# positive-definite bounds


@dataclass(frozen=True)
class PDBoundReport:
    L: float
    minorant_min: float
    variation_hat: float        # |mu^|(K)
    mu_f: float                 # mu(f)
    margin_variation: float     # mu(f) - |mu^|(K)
    norm_hat: float             # ||mu^||_K
    sup_f_times_mass: float     # ||f||_inf |mu|(supp f)
    margin_norm: float
    pd_min: float               # smallest <mu, g * g~> on the bank

    @property
    def passed(self):
        return self.margin_variation >= -1e-9 and self.margin_norm >= -1e-9


def _minorant_tent(K, L0=1.0 / 64, cap=64.0):
    M = max(abs(K.lo), abs(K.hi))
    L = L0
    while L <= cap:
        val = 2 * L * np.sinc(L * M) ** 2  # 2L sinc^2(pi L M)
        if L * M <= 1.0 and val >= 1.0:
            return L, float(val)
        L *= 2
    raise WindowConstructionFailure(f"no tent half-width up to {cap} minorises 1_K for K=[{K.lo}, {K.hi}]")


def pd_bank():
    """Autocorrelations ``g * g~`` of polynomial bank members (PD by design)."""
    return [tf.autocorrelation_test(tf.tent(0.0, 0.5)),
            tf.autocorrelation_test(tf.tent(0.3, 0.25, 2.0)),
            tf.autocorrelation_test(tf.piecewise_from_global([-0.5, 0.5], [[1.0, 0.0, -4.0]])),
            tf.autocorrelation_test(tf.indicator_test(0.0, 0.7)),
            tf.autocorrelation_test(tf.ex3_test_function())]


def pd_bound_check(mu, K=CompactInterval(-0.25, 0.25), mu_hat=None, tol=1e-9, bank=None):
    """Verify the two positive-definite bounds with an explicit tent minorant.

    ``f = 2(1 - |x|/L)_+`` has ``f_check = 2L sinc^2(pi L .)``; ``L`` is the
    first value in a doubling search with ``f_check >= 1`` on ``K``.  Then

    * ``|mu^|(K) <= mu(f)`` and
    * ``||mu^||_K <= ||f||_inf |mu|(supp f)``

    are evaluated and returned with their margins.  Positive definiteness of
    ``mu`` is checked only as the necessary condition ``<mu, g * g~> >= 0``
    on a small bank.

    Raises
    ------
    WindowConstructionFailure
        If no tent in the search range works for ``K``.
    PDCheckFailure
        If some ``<mu, g * g~>`` is negative beyond ``tol``.
    """
    K = K if isinstance(K, CompactInterval) else CompactInterval(*K)
    L, vmin = _minorant_tent(K)
    bank = pd_bank() if bank is None else bank
    pd_vals = [pair(mu, g).real for g in bank]
    pd_min = min(pd_vals) if pd_vals else 0.0
    if pd_min < -tol:
        raise PDCheckFailure(f"<mu, g*g~> = {pd_min:.3g} < 0")
    mu_hat = fourier_transform(mu) if mu_hat is None else mu_hat
    f = tf.tent(0.0, L, 2.0, label="minorant")
    mu_f = pair(mu, f).real
    var_hat = total_variation_on(mu_hat, K)
    nrm_hat = norm_K(mu_hat, K)
    mass = total_variation_on(mu, CompactInterval(-L, L))
    rhs2 = 2.0 * mass
    return PDBoundReport(L, vmin, var_hat, mu_f, mu_f - var_hat, nrm_hat, rhs2, rhs2 - nrm_hat, pd_min)
