"""Finite-volume autocorrelations of weighted Dirac combs and their diffraction.

For a translation-bounded comb ``omega`` and ``A_n = [-n, n]`` the
approximants are

    gamma_n = (omega|A_n) * (omega|A_n)~ / |A_n|
            = (1/2n) sum_{j,k} w_j conj(w_k) delta_{x_j - x_k},

computed exactly from the atom list.  Van Hove ratios quantify the boundary
neglected by the plain restriction.

The Fibonacci comb is the cut-and-project set

    { k + m phi : k, m integers, k - m/phi in (-1/phi, 1] },

with gap lengths ``{1, phi}`` and density ``phi / sqrt(5)``.
"""

from dataclasses import dataclass, field
import math
from typing import Callable

import numpy as np

from .descriptors import DescriptorError, _c_in
from .errors import PDCheckFailure
from .fourier import fourier_transform, pd_bank, pd_bound_check
from .measure import Atom, CompactInterval, Measure, dirac_comb, norm_report, pair
from . import testfunctions as tf
from . import topology as top

__all__ = [
    "PHI", "van_hove_boundary", "van_hove_check", "folner_cover", "PointComb", "lattice_comb",
    "weighted_comb", "fibonacci_point_comb", "fibonacci_comb", "comb_from_dict",
    "AutocorrelationApproximant", "autocorrelation", "autocorrelation_trend", "PDConeReport",
    "pd_cone_demo", "NormDiscontinuityReport", "norm_discontinuity_demo",
]

PHI = (1.0 + math.sqrt(5.0)) / 2.0
INV_PHI = PHI - 1.0
SQRT5 = math.sqrt(5.0)
PD_TOL = 1e-10


# ---------------------------------------------------------------------------
# van Hove intervals


def _union_length(intervals):
    iv = sorted((a, b) for a, b in intervals if b > a)
    total, cur_a, cur_b = 0.0, None, None
    for a, b in iv:
        if cur_b is None or a > cur_b:
            if cur_b is not None:
                total += cur_b - cur_a
            cur_a, cur_b = a, b
        else:
            cur_b = max(cur_b, b)
    if cur_b is not None:
        total += cur_b - cur_a
    return total


def van_hove_boundary(n, K):
    """Intervals making up ``d^K A = ((A + K) \\ A°) u ((R \\ A) - K) n A``
    for ``A = [-n, n]``."""
    a, b = K.lo, K.hi
    out = []
    # (A + K) minus the open interior (-n, n)
    p, q = -n + a, n + b
    if p <= -n:
        out.append((p, min(q, -n)))
    if q >= n:
        out.append((max(p, n), q))
    # ((-inf, -n) u (n, inf)) - K, intersected with [-n, n]
    left_hi = -n - a           # (-inf, -n) - K = (-inf, -n - a)
    right_lo = n - b           # (n, inf) - K = (n - b, inf)
    if left_hi > -n:
        out.append((-n, min(left_hi, n)))
    if right_lo < n:
        out.append((max(right_lo, -n), n))
    return [(float(x), float(y)) for x, y in out if y > x]


def van_hove_check(n, K=CompactInterval(-1.0, 1.0)):
    """``|d^K A_n| / |A_n|`` for ``A_n = [-n, n]`` (closed form)."""
    if n <= 0:
        raise ValueError("n must be positive")
    return _union_length(van_hove_boundary(n, K)) / (2.0 * n)


def folner_cover(K):
    """Smallest integer ``n`` with ``K`` inside ``A_n - A_n = [-2n, 2n]``."""
    return max(1, math.ceil(max(abs(K.lo), abs(K.hi)) / 2.0))


# ---------------------------------------------------------------------------
# point combs


@dataclass(frozen=True)
class PointComb:
    """A discrete translation-bounded measure given by its atoms in windows.

    ``generator(lo, hi)`` returns ``(positions, weights)`` arrays of the
    atoms in the closed window ``[lo, hi]``, sorted by position.
    ``translation_bound`` is a certified bound for ``||omega||_[0,1]``.
    """

    kind: str
    generator: Callable
    translation_bound: float
    label: str = ""
    params: dict = field(default_factory=dict)

    def atoms(self, window):
        lo, hi = (window.lo, window.hi) if isinstance(window, CompactInterval) else window
        x, w = self.generator(float(lo), float(hi))
        return np.asarray(x, dtype=float), np.asarray(w, dtype=complex)

    def atom_list(self, window):
        x, w = self.atoms(window)
        return [Atom(float(a), complex(b)) for a, b in zip(x, w)]

    def restrict(self, window):
        return Measure(atoms=tuple(self.atom_list(window)), label=f"{self.label}|{window}")

    def to_dict(self):
        return {"kind": self.kind, **self.params}


def lattice_comb(spacing=1.0, offset=0.0, weight=1.0):
    """``weight * delta_{offset + spacing Z}``."""
    s, o, w = float(spacing), float(offset), complex(weight)
    if not s > 0:
        raise ValueError("spacing must be positive")

    def gen(lo, hi):
        k = np.arange(math.ceil((lo - o) / s - 1e-12), math.floor((hi - o) / s + 1e-12) + 1)
        x = o + s * k
        keep = (x >= lo - 1e-12) & (x <= hi + 1e-12)
        return x[keep], np.full(int(keep.sum()), w)

    bound = abs(w) * (math.floor(1.0 / s) + 1)
    return PointComb("lattice", gen, bound, f"{w:g} delta_({o:g}+{s:g}Z)",
                     {"spacing": s, "offset": o, "weight": [w.real, w.imag]})


def weighted_comb(weights, spacing=1.0, offset=0.0):
    """Lattice comb whose weight at ``offset + k * spacing`` is
    ``weights[k mod len(weights)]`` (e.g. ``[1, -1]`` for ``(-1)^k``)."""
    ws = np.asarray(weights, dtype=complex)
    if ws.size == 0:
        raise ValueError("weights must be non-empty")
    s, o = float(spacing), float(offset)

    def gen(lo, hi):
        k = np.arange(math.ceil((lo - o) / s - 1e-12), math.floor((hi - o) / s + 1e-12) + 1)
        x = o + s * k
        keep = (x >= lo - 1e-12) & (x <= hi + 1e-12)
        k = k[keep]
        return x[keep], ws[np.mod(k, ws.size).astype(int)]

    bound = float(np.abs(ws).max()) * (math.floor(1.0 / s) + 1)
    return PointComb("weighted", gen, bound, f"weighted({list(weights)})",
                     {"weights": [[complex(z).real, complex(z).imag] for z in ws],
                      "spacing": s, "offset": o})


def _fibonacci_positions(lo, hi):
    # x = k + m phi, x* = k - m/phi, x - x* = m sqrt(5) with x* in (-1/phi, 1]
    m = np.arange(math.floor((lo - 1.0) / SQRT5) - 1, math.ceil((hi + INV_PHI) / SQRT5) + 2)
    base = np.floor(m * INV_PHI - INV_PHI)
    k = base[:, None] + np.arange(0, 4)[None, :]
    mm = np.broadcast_to(m[:, None], k.shape)
    star = k - mm * INV_PHI
    x = k + mm * PHI
    keep = (star > -INV_PHI) & (star <= 1.0) & (x >= lo) & (x <= hi)
    return np.sort(x[keep])


def fibonacci_comb(window):
    """Atoms (unit weight) of the Fibonacci cut-and-project set in ``window``."""
    lo, hi = (window.lo, window.hi) if isinstance(window, CompactInterval) else window
    return [Atom(float(x), 1.0) for x in _fibonacci_positions(float(lo), float(hi))]


def fibonacci_point_comb():
    """The Fibonacci comb as a :class:`PointComb` (gaps >= 1, so at most two
    points per closed unit window)."""

    def gen(lo, hi):
        x = _fibonacci_positions(lo, hi)
        return x, np.ones(x.size, dtype=complex)

    return PointComb("fibonacci", gen, 2.0, "fibonacci", {})


def comb_from_dict(d):
    """Comb descriptor: ``{"kind": "lattice", "spacing", "offset", "weight"}``,
    ``{"kind": "fibonacci"}`` or ``{"kind": "weighted", "weights", "spacing",
    "offset"}``."""
    if not isinstance(d, dict) or "kind" not in d:
        raise DescriptorError("comb: descriptor needs a 'kind'")
    kind = d["kind"]
    try:
        if kind == "lattice":
            return lattice_comb(float(d.get("spacing", 1.0)), float(d.get("offset", 0.0)),
                                _c_in(d.get("weight", 1.0), "comb.weight"))
        if kind == "fibonacci":
            return fibonacci_point_comb()
        if kind == "weighted":
            if "weights" not in d:
                raise DescriptorError("comb: missing field 'weights'")
            ws = [_c_in(w, f"comb.weights[{i}]") for i, w in enumerate(d["weights"])]
            return weighted_comb(ws, float(d.get("spacing", 1.0)), float(d.get("offset", 0.0)))
    except DescriptorError:
        raise
    except (TypeError, ValueError) as e:
        raise DescriptorError(f"comb: {e}") from None
    raise DescriptorError(f"comb: unknown kind {kind!r}")


# ---------------------------------------------------------------------------
# autocorrelation


@dataclass(frozen=True)
class AutocorrelationApproximant:
    n: int
    measure: Measure
    volume: float

    def weight_at(self, x, tol=1e-9):
        for a in self.measure.atoms:
            if abs(a.position - x) <= tol:
                return a.weight
        return 0.0

    def table(self):
        return [(a.position, a.weight) for a in self.measure.atoms]

    def is_hermitian(self):
        """``w(-x) == conj(w(x))`` exactly."""
        d = {a.position: a.weight for a in self.measure.atoms}
        return all(-x in d and d[-x] == np.conj(w) for x, w in d.items())

    def pd_values(self, bank=None):
        """``<gamma_n, g * g~>`` for each PD bank member."""
        bank = pd_bank() if bank is None else bank
        return [float(np.real(pair(self.measure, g))) for g in bank]

    def diffraction(self):
        """``gamma_n^``: a trigonometric polynomial times Lebesgue measure."""
        return fourier_transform(self.measure)


def _cluster_sum(d, w, tol=1e-9):
    """Group sorted-by-``d`` values within ``tol`` and sum their weights."""
    order = np.argsort(d, kind="stable")
    d, w = d[order], w[order]
    breaks = np.concatenate([[True], np.diff(d) > tol])
    ids = np.cumsum(breaks) - 1
    pos = d[breaks]
    sums = np.zeros(pos.size, dtype=complex)
    np.add.at(sums, ids, w)
    return pos, sums


def autocorrelation(omega, n):
    """Exact ``gamma_n`` for ``A_n = [-n, n]``; Hermitian symmetry is exact
    because only positive differences are summed and the rest mirrored."""
    n = int(n)
    if n <= 0:
        raise ValueError("n must be positive")
    vol = 2.0 * n
    x, w = omega.atoms(CompactInterval(-n, n))
    if x.size == 0:
        return AutocorrelationApproximant(n, Measure(), vol)
    order = np.argsort(x)
    x, w = x[order], w[order]
    j, k = np.triu_indices(x.size, 1)       # j < k, so x_k - x_j > 0
    diff = x[k] - x[j]
    prod = w[k] * np.conj(w[j])
    pos, sums = _cluster_sum(diff, prod)
    atoms = [Atom(0.0, complex(np.sum(np.abs(w) ** 2)) / vol)]
    for p, s in zip(pos, sums):
        s = complex(s) / vol
        atoms.append(Atom(float(p), s))
        atoms.append(Atom(-float(p), s.conjugate()))
    atoms.sort(key=lambda a: a.position)
    return AutocorrelationApproximant(n, Measure(atoms=tuple(atoms), label=f"gamma_{n}"), vol)


def _gamma_sequence(omega):
    cache = {}

    def gen(n):
        if n not in cache:
            cache[n] = autocorrelation(omega, n).measure
        return cache[n]

    return top.MeasureSequence(gen, f"gamma_n({omega.label})")


def autocorrelation_trend(omega, schedule=top.DEFAULT_SCHEDULE, bank=None,
                          K=CompactInterval(0.0, 1.0)):
    """Vague Cauchy evidence and equi-translation-boundedness of ``gamma_n``.

    The Cauchy gaps are ``|<gamma_{n_{i+1}} - gamma_{n_i}, f>|`` for
    consecutive schedule entries; the verdict key ``vague_cauchy`` uses
    :func:`~radonfourier.topology.gap_verdict` on them and
    ``cauchy_decreasing`` records whether the largest gap over the bank
    strictly decreases along the schedule.  The minimum of the
    positive-definiteness pairings is stored under ``evidence["pd_min"]``.
    """
    schedule = tuple(int(n) for n in schedule)
    bank = tf.compact_bank() if bank is None else bank
    seq = _gamma_sequence(omega)
    ids = tuple(f.label for f in bank)
    vals = np.zeros((len(schedule) - 1, len(bank)))
    for i, (a, b) in enumerate(zip(schedule, schedule[1:])):
        diff = seq(b) - seq(a)
        for j, f in enumerate(bank):
            vals[i, j] = abs(pair(diff, f))
    ns = schedule[1:]
    per = {tid: top.gap_verdict(ns, vals[:, j], exact=True) for j, tid in enumerate(ids)}
    cauchy = top.GapTable(seq.label, "vague-cauchy", ns, ids, vals, np.ones_like(vals, bool), per,
                          top._combine_verdicts(v.verdict for v in per.values()),
                          "gaps between consecutive schedule entries")
    eq = top.equi_translation_bounded(seq, K, schedule)
    pd_min = min(min(autocorrelation(omega, n).pd_values()) for n in schedule)
    peak = vals.max(axis=1)
    decreasing = bool(np.all(np.diff(peak) < 0))
    verdicts = {"vague_cauchy": cauchy.verdict,
                "cauchy_decreasing": top.PASS if decreasing else "FAIL",
                "equi_tb": eq.verdict,
                "pd_necessary": top.PASS if pd_min >= -PD_TOL else "FAIL"}
    report = top.ConvergenceReport(seq.label, verdicts, {"vague_cauchy": cauchy}, None, eq,
                                   notes=[f"min <gamma_n, g * g~> = {pd_min:.6g}"])
    report.pd_min = pd_min
    return report


# ---------------------------------------------------------------------------
# positive-definite cone


@dataclass
class PDConeReport:
    label: str
    pd_min: float
    vaguely_bounded: top.BoundednessResult
    member_bounds: list          # (n, ||mu_n^||_K, 2 |mu_n|([-L, L]), margin)
    ft_equi_tb: top.BoundednessResult
    ft_vague: top.GapTable
    steps: list                  # (claim, ok, evidence)

    @property
    def passed(self):
        return all(ok for _, ok, _ in self.steps)

    def summary(self):
        lines = [f"PD cone chain for {self.label}:"]
        for claim, ok, ev in self.steps:
            lines.append(f"  [{'ok' if ok else 'FAIL'}] {claim}: {ev}")
        return "\n".join(lines)


def pd_cone_demo(seq, limit, schedule=top.DEFAULT_SCHEDULE, ft_limit=None,
                 K=CompactInterval(-0.25, 0.25), ladder=top.CompactLadder.symmetric(4), bank=None):
    """Evidence for the chain: positive definite and vaguely bounded
    ``=>`` (per-member tent bound) transforms equi translation bounded
    ``=>`` transforms converge vaguely.

    Raises
    ------
    PDCheckFailure
        If some member violates ``<mu_n, g * g~> >= -1e-10`` on the bank.
    """
    schedule = tuple(int(n) for n in schedule)
    bank = pd_bank() if bank is None else bank
    pd_min = math.inf
    for n in schedule:
        v = min(float(np.real(pair(seq(n), g))) for g in bank)
        pd_min = min(pd_min, v)
        if v < -PD_TOL:
            raise PDCheckFailure(f"member n={n} fails the PD necessary check: {v:.6g}")
    steps = [("members positive definite (necessary check)", True, f"min pairing {pd_min:.6g}")]
    vb = top.vaguely_bounded(seq, ladder, schedule)
    steps.append(("{mu_n} vaguely bounded", vb.verdict == top.BOUNDED,
                  f"sup |mu_n|(rung) = {vb.sup:.6g}"))
    bounds = []
    for n in schedule:
        r = pd_bound_check(seq(n), K, bank=bank)
        bounds.append((n, r.norm_hat, r.sup_f_times_mass, r.margin_norm))
    worst = min(b[3] for b in bounds)
    sup_bound = max(b[2] for b in bounds)
    steps.append(("per-member bound ||mu_n^||_K <= ||f||_inf |mu_n|(supp f)", worst >= -1e-9,
                  f"worst margin {worst:.6g}, uniform bound {sup_bound:.6g}"))
    fseq = seq.ft_sequence()
    eq = top.equi_translation_bounded(fseq, K, schedule)
    steps.append(("{mu_n^} equi translation bounded", eq.verdict == top.EQUI_TB,
                  f"sup ||mu_n^||_K = {eq.sup:.6g}"))
    flim = fourier_transform(limit) if ft_limit is None else ft_limit
    g = top.gap(fseq, flim, "vague", schedule=schedule)
    last = float(g.values[-1].max()) if g.values.size else 0.0
    steps.append(("mu_n^ -> mu^ vaguely", g.verdict == top.CONVERGES,
                  f"{g.verdict}, last max gap {last:.6g}"))
    return PDConeReport(seq.label, pd_min, vb, bounds, eq, g, steps)


@dataclass
class NormDiscontinuityReport:
    rows: list                   # (n, ||g_n^ - g^||_K, ||g_n^||_K, ||g^||_K)

    @property
    def passed(self):
        return all(d >= lim > 0 and abs(d - (a + lim)) <= 1e-8 * max(1.0, d)
                   for _, d, a, lim in self.rows)


def norm_discontinuity_demo(schedule=(1, 2, 4, 8), K=CompactInterval(0.0, 1.0)):
    """``gamma_n = gamma_n(delta_Z)`` converge vaguely to ``delta_Z`` with
    absolutely continuous diffractions (Fejer-type trigonometric
    polynomials) while the limit diffraction ``delta_Z`` is pure point, so

        ||gamma_n^ - delta_Z||_K = ||gamma_n^||_K + ||delta_Z||_K,

    which is bounded below by ``||delta_Z||_K > 0``: no norm convergence.
    """
    omega = lattice_comb()
    lim = dirac_comb(1.0)
    lim_norm = norm_report(lim, K).value
    rows = []
    for n in schedule:
        gh = autocorrelation(omega, n).diffraction()
        rows.append((int(n), norm_report(gh - lim, K).value, norm_report(gh, K).value, lim_norm))
    return NormDiscontinuityReport(rows)
