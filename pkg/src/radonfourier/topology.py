"""Convergence diagnostics for measure sequences.

Four topologies are examined numerically over a finite schedule of indices:

* vague     -- ``|<mu_n - mu, f>|`` for compactly supported ``f``;
* tempered  -- the same against Gauss-Hermite (Schwartz) functions;
* product   -- ``||(mu_n - mu) * g||_inf`` for compactly supported ``g``;
* norm      -- ``||mu_n - mu||_K``.

A finite sample can never prove a limit statement, so every verdict is a
heuristic classification of a trend.  The rules are documented on
:func:`gap_verdict` and :func:`bound_verdict`.
"""

from dataclasses import dataclass, field
import csv
import io
import math
from typing import Callable, Optional

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import InconsistencyDetected, NoClosedForm, UnboundedLocalMass
from .fourier import fourier_transform
from .measure import (CompactInterval, Measure, convolve_sup, norm_report, pair,
                      total_variation_on, DEFAULT_TOL)
from . import testfunctions as tf

__all__ = [
    "CONVERGES", "DIVERGES", "INCONCLUSIVE", "NOT_APPLICABLE", "BOUNDED", "UNBOUNDED",
    "EQUI_TB", "NOT_EQUI_TB", "PASS", "HYPOTHESIS_FAIL", "CONCLUSION_FAIL",
    "DEFAULT_SCHEDULE", "MeasureSequence", "Functional", "CompactLadder", "GapTable",
    "BoundednessResult", "ConvergenceReport", "GateReport", "gap_verdict", "bound_verdict",
    "gap", "vaguely_bounded", "equi_translation_bounded", "classify", "weighted_l1_constant",
    "l1_bound", "theorem_gate", "uniform_modulated_gap", "sampled_fu_gap",
]

CONVERGES = "CONVERGES"
DIVERGES = "DIVERGES"
INCONCLUSIVE = "INCONCLUSIVE"
NOT_APPLICABLE = "NOT_APPLICABLE"
BOUNDED = "BOUNDED"
UNBOUNDED = "UNBOUNDED"
EQUI_TB = "EQUI_TB"
NOT_EQUI_TB = "NOT_EQUI_TB"
PASS = "PASS"
HYPOTHESIS_FAIL = "HYPOTHESIS_FAIL"
CONCLUSION_FAIL = "CONCLUSION_FAIL"

DEFAULT_SCHEDULE = (1, 2, 4, 8, 16, 32)
CONV_THRESHOLD = 1e-6
DIV_THRESHOLD = 1e3
GROWTH_EXPONENT = 0.2
DECAY_EXPONENT = -0.2
R2_MIN = 0.99
PERSISTENT_FLOOR = 1e-3
FLAT_EXPONENT = 0.05
PERSISTENT_SPREAD = 1.25
CONTRACTION = 0.05

MODES = ("vague", "tempered", "distribution", "product", "norm")
TOPOLOGY_LABEL = {"distribution": "distribution (surrogate)"}


# ---------------------------------------------------------------------------
# sequences and limits


@dataclass(frozen=True)
class Functional:
    """A limit object that is only a linear functional (not a measure)."""

    label: str
    evaluate: Callable
    is_measure: bool = False

    def __call__(self, f):
        return complex(self.evaluate(f))


@dataclass(frozen=True)
class MeasureSequence:
    """``n -> Measure`` with optional closed-form pairings.

    ``exact_pairing(n, f)`` may return the exact value of ``<mu_n, f>`` or
    ``None`` to fall back to numerical pairing.  ``ft_generator`` and
    ``ft_exact_pairing`` do the same for the transformed family; without
    ``ft_generator`` the rule-based transform is used.
    """

    generator: Callable
    label: str = ""
    exact_pairing: Optional[Callable] = None
    ft_generator: Optional[Callable] = None
    ft_exact_pairing: Optional[Callable] = None

    def __call__(self, n):
        return self.generator(n)

    def ft(self, n):
        if self.ft_generator is not None:
            return self.ft_generator(n)
        return fourier_transform(self.generator(n))

    def ft_sequence(self):
        return MeasureSequence(self.ft, f"hat({self.label})", self.ft_exact_pairing)

    def pairing(self, n, f, tol=DEFAULT_TOL):
        """``(value, exact)``."""
        if self.exact_pairing is not None:
            v = self.exact_pairing(n, f)
            if v is not None:
                return complex(v), True
        mu = self(n)
        exact = mu.is_finite_atomic or (not mu.ac and f.compact)
        return pair(mu, f, tol), exact


@dataclass(frozen=True)
class CompactLadder:
    """Nested intervals ``[-m, m]``, ``m = 1..M``."""

    rungs: tuple

    @classmethod
    def symmetric(cls, M=4):
        return cls(tuple(CompactInterval(-m, m) for m in range(1, M + 1)))

    def __post_init__(self):
        for a, b in zip(self.rungs, self.rungs[1:]):
            if not (b.lo < a.lo and a.hi < b.hi):
                raise ValueError("ladder rungs must be strictly nested")


# ---------------------------------------------------------------------------
# trend rules


def _loglog_fit(ns, vals):
    ns = np.asarray(ns, dtype=float)
    v = np.asarray(vals, dtype=float)
    if ns.size < 3 or np.any(v <= 0):
        return math.nan, 0.0
    x, y = np.log(ns), np.log(v)
    A = np.vstack([x, np.ones_like(x)]).T
    coef, *_ = np.linalg.lstsq(A, y, rcond=None)
    resid = y - A @ coef
    ss = np.sum((y - y.mean()) ** 2)
    r2 = 1.0 if ss == 0 else 1.0 - np.sum(resid ** 2) / ss
    return float(coef[0]), float(r2)


def _log_growth(ns, vals):
    """``(slope, r2, sustained)`` of ``vals`` against ``ln n``."""
    ns = np.asarray(ns, dtype=float)
    v = np.asarray(vals, dtype=float)
    if ns.size < 3:
        return math.nan, 0.0, False
    x = np.log(ns)
    A = np.vstack([x, np.ones_like(x)]).T
    coef, *_ = np.linalg.lstsq(A, v, rcond=None)
    resid = v - A @ coef
    ss = np.sum((v - v.mean()) ** 2)
    r2 = 1.0 if ss == 0 else 1.0 - np.sum(resid ** 2) / ss
    d = np.diff(v)
    sustained = bool(np.all(d > 1e-9 * np.maximum(1.0, np.abs(v[1:]))))
    return float(coef[0]), float(r2), sustained


@dataclass(frozen=True)
class Verdict:
    verdict: str
    reason: str
    exponent: float = math.nan
    r2: float = math.nan


def gap_verdict(ns, gaps, exact=False):
    """Classify a gap sequence.

    CONVERGES
        the last three gaps are below ``1e-6``, or the last two are and the
        last three are non-increasing, or the non-increasing envelope of the gaps follows a
        power law with exponent below ``-0.2`` (``R^2 > 0.99``, fitted on the
        last three points).
    DIVERGES
        an exact gap exceeds ``1e3``; or the gaps grow like a power with
        exponent above ``0.2`` (``R^2 > 0.99``); or they grow steadily like
        ``log n`` (``R^2 > 0.99``); or the last three stay above ``1e-3``,
        agree to within 25% and show a flat trend (``|exponent| < 0.05``).
    CONVERGES (contraction)
        checked only after every divergence rule: the last gap is at most 5%
        of the largest one and the non-increasing envelope fell by at least
        10% over the last three points.
    INCONCLUSIVE
        otherwise.
    """
    ns = np.asarray(ns, dtype=float)
    g = np.abs(np.asarray(gaps, dtype=float))
    if g.size == 0:
        return Verdict(NOT_APPLICABLE, "no data")
    if exact and g[-1] > DIV_THRESHOLD:
        return Verdict(DIVERGES, f"exact witness {g[-1]:.6g} > {DIV_THRESHOLD:g}")
    if g.size >= 3:
        tail = g[-3:]
        if np.all(tail < CONV_THRESHOLD):
            return Verdict(CONVERGES, "last three below threshold")
        if tail[-1] < CONV_THRESHOLD and tail[-2] < CONV_THRESHOLD and \
                tail[0] + 1e-15 >= tail[1] and tail[1] + 1e-15 >= tail[2]:
            return Verdict(CONVERGES, "below threshold, non-increasing")
    elif g.size >= 2 and g[-1] < CONV_THRESHOLD and g[-2] < CONV_THRESHOLD:
        return Verdict(CONVERGES, "below threshold")
    k = min(g.size, 4)
    kd = min(g.size, 3)
    env = np.maximum.accumulate(g[::-1])[::-1]
    e_exp, e_r2 = _loglog_fit(ns[-kd:], env[-kd:])
    if not math.isnan(e_exp) and e_exp < DECAY_EXPONENT and e_r2 > R2_MIN:
        return Verdict(CONVERGES, f"power-law decay n^{e_exp:.3g}", e_exp, e_r2)
    exp_, r2 = _loglog_fit(ns[-k:], g[-k:])
    if not math.isnan(exp_) and exp_ > GROWTH_EXPONENT and r2 > R2_MIN:
        return Verdict(DIVERGES, f"power-law growth n^{exp_:.3g}", exp_, r2)
    slope, lr2, sustained = _log_growth(ns, g)
    if sustained and slope > 0 and lr2 > R2_MIN and g[-1] > PERSISTENT_FLOOR:
        return Verdict(DIVERGES, f"logarithmic growth, slope {slope:.3g}", slope, lr2)
    if g.size >= 3 and g[-3:].min() >= PERSISTENT_FLOOR and \
            g[-3:].max() <= PERSISTENT_SPREAD * g[-3:].min():
        fexp, fr2 = _loglog_fit(ns[-k:], g[-k:])
        if not math.isnan(fexp) and abs(fexp) < FLAT_EXPONENT:
            return Verdict(DIVERGES, f"persistent gap ~{g[-1]:.6g}", fexp, fr2)
    if g.size >= 3 and g[-1] <= CONTRACTION * g.max() and env[-1] <= 0.9 * env[-3]:
        return Verdict(CONVERGES, f"contracted to {g[-1] / g.max():.3g} of the peak", exp_, r2)
    return Verdict(INCONCLUSIVE, "no clear trend", exp_, r2)


def bound_verdict(ns, values, exact=True, yes=BOUNDED, no=UNBOUNDED):
    """Bounded unless a witness exceeds ``1e3`` or the values grow (power law
    with exponent above ``0.2`` or steady logarithmic growth)."""
    ns = np.asarray(ns, dtype=float)
    v = np.abs(np.asarray(values, dtype=float))
    if v.size == 0:
        return Verdict(yes, "no data")
    if np.any(~np.isfinite(v)):
        return Verdict(no, "infinite value")
    if exact and v.max() > DIV_THRESHOLD:
        return Verdict(no, f"witness {v.max():.6g} > {DIV_THRESHOLD:g}")
    if np.all(v > 0):
        k = min(v.size, 4)
        exp_, r2 = _loglog_fit(ns[-k:], v[-k:])
        if not math.isnan(exp_) and exp_ > GROWTH_EXPONENT and r2 > R2_MIN:
            return Verdict(no, f"power-law growth n^{exp_:.3g}", exp_, r2)
        slope, lr2, sustained = _log_growth(ns, v)
        if sustained and slope > 0 and lr2 > R2_MIN:
            return Verdict(no, f"logarithmic growth, slope {slope:.3g}", slope, lr2)
    return Verdict(yes, f"bounded by {v.max():.6g} on the schedule")


# ---------------------------------------------------------------------------
# gap tables


@dataclass
class GapTable:
    label: str
    mode: str
    schedule: tuple
    test_ids: tuple
    values: np.ndarray          # shape (len(schedule), len(test_ids))
    exact: np.ndarray
    per_test: dict = field(default_factory=dict)
    verdict: str = INCONCLUSIVE
    note: str = ""

    @property
    def topology(self):
        return TOPOLOGY_LABEL.get(self.mode, self.mode)

    def witness(self):
        """Test id and verdict of the first non-converging column."""
        for tid in self.test_ids:
            v = self.per_test.get(tid)
            if v is not None and v.verdict != CONVERGES:
                j = self.test_ids.index(tid)
                return tid, v, float(self.values[-1, j])
        return None

    def rows(self):
        for j, tid in enumerate(self.test_ids):
            vt = self.per_test[tid].verdict if tid in self.per_test else self.verdict
            for i, n in enumerate(self.schedule):
                yield (self.label, self.topology, n, tid, float(self.values[i, j]), vt)


def _combine_verdicts(vs):
    vs = list(vs)
    if not vs:
        return NOT_APPLICABLE
    if any(v == DIVERGES for v in vs):
        return DIVERGES
    if all(v == CONVERGES for v in vs):
        return CONVERGES
    return INCONCLUSIVE


def default_bank(mode):
    if mode == "tempered":
        return tf.schwartz_bank()
    if mode == "distribution":
        return tf.smooth_surrogate_bank()
    if mode in ("vague", "product"):
        return tf.compact_bank()
    return []


def gap(seq, limit, mode, bank=None, schedule=DEFAULT_SCHEDULE, K=CompactInterval(0.0, 1.0),
        tol=DEFAULT_TOL):
    """Evidence table for ``mu_n -> limit`` in the given topology.

    ``limit`` is a :class:`~radonfourier.measure.Measure` or, for tempered
    convergence only, a :class:`Functional`.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    schedule = tuple(int(n) for n in schedule)
    if isinstance(limit, Functional) and not limit.is_measure and mode != "tempered":
        return GapTable(seq.label, mode, schedule, (), np.zeros((len(schedule), 0)),
                        np.zeros((len(schedule), 0), bool), {}, NOT_APPLICABLE,
                        "limit is not a measure")
    if mode == "norm":
        vals = np.zeros((len(schedule), 1))
        ex = np.ones((len(schedule), 1), bool)
        for i, n in enumerate(schedule):
            rep = norm_report(seq(n) - limit, K)
            vals[i, 0] = rep.value
            ex[i, 0] = rep.exact and rep.method == "critical-offsets"
        tid = f"K=[{K.lo:g},{K.hi:g}]"
        v = gap_verdict(schedule, vals[:, 0], exact=bool(ex.all()))
        return GapTable(seq.label, mode, schedule, (tid,), vals, ex, {tid: v}, v.verdict)
    bank = default_bank(mode) if bank is None else bank
    if mode == "tempered" and any(f.compact for f in bank):
        raise ValueError("tempered mode needs a Schwartz bank")
    if mode == "product" and any(not f.compact for f in bank):
        raise ValueError("product mode needs compactly supported test functions")
    ids = tuple(f.label or f"f{j}" for j, f in enumerate(bank))
    vals = np.zeros((len(schedule), len(bank)))
    ex = np.zeros((len(schedule), len(bank)), bool)
    for i, n in enumerate(schedule):
        if mode == "product":
            diff = seq(n) - limit
            for j, g in enumerate(bank):
                vals[i, j] = convolve_sup(diff, g, tol)
                ex[i, j] = diff.is_discrete
            continue
        for j, f in enumerate(bank):
            v, e = seq.pairing(n, f, tol)
            lim = limit(f) if isinstance(limit, Functional) else pair(limit, f, tol)
            vals[i, j] = abs(v - lim)
            ex[i, j] = e
    per = {tid: gap_verdict(schedule, vals[:, j], exact=bool(ex[-1, j])) for j, tid in enumerate(ids)}
    return GapTable(seq.label, mode, schedule, ids, vals, ex, per,
                    _combine_verdicts(v.verdict for v in per.values()))


# ---------------------------------------------------------------------------
# boundedness


@dataclass
class BoundednessResult:
    verdict: str
    table: dict                 # key -> list of values over the schedule
    schedule: tuple
    witness: tuple = None       # (key, n, value, reason)
    sup: float = 0.0
    note: str = ""


def vaguely_bounded(seq, ladder=CompactLadder.symmetric(4), schedule=DEFAULT_SCHEDULE, tol=1e-9):
    """``|mu_n|([-m, m])`` for each rung; UNBOUNDED with a witness rung when
    some rung's values fail :func:`bound_verdict`.

    This is a finite-sample heuristic and is reported as such.
    """
    schedule = tuple(schedule)
    table = {}
    for K in ladder.rungs:
        key = f"[{K.lo:g},{K.hi:g}]"
        table[key] = [total_variation_on(seq(n), K, tol) for n in schedule]
    for key, vals in table.items():
        v = bound_verdict(schedule, vals)
        if v.verdict == UNBOUNDED:
            i = int(np.argmax(vals))
            return BoundednessResult(UNBOUNDED, table, schedule, (key, schedule[i], vals[i], v.reason),
                                     float(max(vals)), "finite-schedule heuristic")
    sup = max((max(v) for v in table.values()), default=0.0)
    return BoundednessResult(BOUNDED, table, schedule, None, float(sup), "finite-schedule heuristic")


def equi_translation_bounded(seq, K=CompactInterval(0.0, 1.0), schedule=DEFAULT_SCHEDULE):
    """Table of ``||mu_n||_K``; EQUI_TB iff the values pass
    :func:`bound_verdict`."""
    schedule = tuple(schedule)
    key = f"[{K.lo:g},{K.hi:g}]"
    vals = []
    for n in schedule:
        try:
            vals.append(norm_report(seq(n), K).value)
        except UnboundedLocalMass:
            vals.append(math.inf)
            return BoundednessResult(NOT_EQUI_TB, {key: vals}, schedule[:len(vals)],
                                     (key, n, math.inf, "unbounded local mass"), math.inf)
    v = bound_verdict(schedule, vals, yes=EQUI_TB, no=NOT_EQUI_TB)
    wit = None
    if v.verdict == NOT_EQUI_TB:
        i = int(np.argmax(vals))
        wit = (key, schedule[i], vals[i], v.reason)
    return BoundednessResult(v.verdict, {key: vals}, schedule, wit, float(max(vals)))


# ---------------------------------------------------------------------------
# classification and implication audit


@dataclass
class ConvergenceReport:
    label: str
    verdicts: dict
    evidence: dict
    vague_bounded: BoundednessResult = None
    equi_tb: BoundednessResult = None
    ft_vague_bounded: BoundednessResult = None
    ft_equi_tb: BoundednessResult = None
    notes: list = field(default_factory=list)

    def rows(self):
        for key, table in self.evidence.items():
            prefix = "ft_" if key.startswith("ft_") else ""
            for row in table.rows():
                lab, topo, n, tid, val, vt = row
                yield (lab, prefix + topo, n, tid, val, vt)
        for key, res in (("vaguely_bounded", self.vague_bounded), ("equi_tb", self.equi_tb),
                         ("ft_vaguely_bounded", self.ft_vague_bounded),
                         ("ft_equi_tb", self.ft_equi_tb)):
            if res is None:
                continue
            for tid, vals in res.table.items():
                for n, v in zip(res.schedule, vals):
                    yield (self.label, key, n, tid, float(v), res.verdict)

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["label", "topology", "n", "test_id", "value", "verdict"])
        for lab, topo, n, tid, val, vt in self.rows():
            w.writerow([lab, topo, n, tid, f"{val:.12g}", vt])
        return buf.getvalue()

    def summary(self):
        lines = [f"{self.label}:"]
        for k, v in self.verdicts.items():
            lines.append(f"  {k:22s} {v}")
        for n in self.notes:
            lines.append(f"  note: {n}")
        return "\n".join(lines)


def _audit(verdicts, prefix=""):
    """Raise InconsistencyDetected on verdicts contradicting a theorem."""
    g = lambda k: verdicts.get(prefix + k)
    problems = []
    if g("equi_tb") == EQUI_TB and g("vague") == CONVERGES and g("tempered") == DIVERGES:
        problems.append("equi-tb and vague convergence but tempered divergence")
    if g("vaguely_bounded") == BOUNDED and g("tempered") == CONVERGES and g("vague") == DIVERGES:
        problems.append("vaguely bounded and tempered convergence but vague divergence")
    if g("norm") == CONVERGES and g("product") == DIVERGES:
        problems.append("norm convergence but product divergence")
    if g("product") == CONVERGES and g("vague") == DIVERGES:
        problems.append("product convergence but vague divergence")
    if g("tempered") == CONVERGES and g("distribution") == DIVERGES:
        problems.append("tempered convergence but distribution divergence")
    if problems:
        raise InconsistencyDetected(f"{prefix or ''}" + "; ".join(problems))


def classify(seq, limit, schedule=DEFAULT_SCHEDULE, K=CompactInterval(0.0, 1.0),
             ladder=CompactLadder.symmetric(4), include_ft=True, modes=None, tol=DEFAULT_TOL,
             ft_limit=None, ft_modes=None):
    """Run boundedness tests and all gap modes, plus the same for the
    transformed family when available, and audit the implications

    * equi-tb and vague convergence imply tempered convergence,
    * vague boundedness and tempered convergence imply vague convergence,
    * norm convergence implies product convergence implies vague convergence.
    """
    modes = ("vague", "tempered", "product", "norm") if modes is None else tuple(modes)
    ft_modes = modes if ft_modes is None else tuple(ft_modes)
    verdicts, evidence, notes = {}, {}, []
    limit_is_measure = isinstance(limit, Measure)
    for m in modes:
        t = gap(seq, limit, m, schedule=schedule, K=K, tol=tol)
        evidence[m] = t
        verdicts[m] = t.verdict
    if not limit_is_measure:
        notes.append("limit is not a measure; vague/product/norm not applicable")
    vb = vaguely_bounded(seq, ladder, schedule)
    eq = equi_translation_bounded(seq, K, schedule)
    verdicts["vaguely_bounded"] = vb.verdict
    verdicts["equi_tb"] = eq.verdict
    report = ConvergenceReport(seq.label, verdicts, evidence, vb, eq, notes=notes)
    if include_ft and limit_is_measure:
        try:
            fseq = seq.ft_sequence()
            flim = fourier_transform(limit) if ft_limit is None else ft_limit
            fseq(schedule[0])
        except Exception as e:  # no rule for some member
            notes.append(f"transform unavailable: {e}")
        else:
            for m in ft_modes:
                t = gap(fseq, flim, m, schedule=schedule, K=K, tol=tol)
                evidence["ft_" + m] = t
                verdicts["ft_" + m] = t.verdict
            report.ft_vague_bounded = vaguely_bounded(fseq, ladder, schedule)
            report.ft_equi_tb = equi_translation_bounded(fseq, K, schedule)
            verdicts["ft_vaguely_bounded"] = report.ft_vague_bounded.verdict
            verdicts["ft_equi_tb"] = report.ft_equi_tb.verdict
    _audit(verdicts)
    _audit(verdicts, "ft_")
    return report


# ---------------------------------------------------------------------------
# weighted L1 bound with an explicit constant


def weighted_l1_constant(K=1_000_000):
    """``C = sum_n sup_{x in n + [-1/2, 1/2]} 1/(1 + x^2)``.

    Returns ``(lower, upper)``: partial sum up to ``K`` plus the integral
    enclosure of the tail of ``phi(x) = 1/(1 + (x - 1/2)^2)``.
    """
    k = np.arange(1, K + 1, dtype=float)
    partial = math.fsum((1.0 / (1.0 + (k - 0.5) ** 2)).tolist())
    tail_lo = math.pi / 2 - math.atan(K + 1 - 0.5)
    tail_hi = math.pi / 2 - math.atan(K - 0.5)
    return 1.0 + 2.0 * (partial + tail_lo), 1.0 + 2.0 * (partial + tail_hi)


@dataclass(frozen=True)
class L1Report:
    lhs: float
    C: float
    weighted_sup: float
    norm: float
    rhs: float

    @property
    def margin(self):
        return self.rhs - self.lhs


def weighted_sup(f):
    """``||(1 + x^2) f||_inf`` by a dense grid and local refinement."""
    lo, hi = f.effective_support(1e-30) if not f.compact else f.support()
    x = np.linspace(lo, hi, 20001)
    w = lambda t: (1.0 + np.asarray(t) ** 2) * np.abs(f(t))
    v = w(x)
    best = float(v.max())
    step = x[1] - x[0]
    for i in np.argsort(v)[::-1][:5]:
        res = minimize_scalar(lambda t: -float(w(np.array([t]))[0]),
                              bounds=(x[i] - step, x[i] + step), method="bounded",
                              options={"xatol": 1e-13})
        best = max(best, -res.fun)
    return best


def l1_bound(mu, f, C=None):
    """Check ``|mu(f)| <= C ||(1 + x^2) f||_inf ||mu||_[-1/2, 1/2]``."""
    C = weighted_l1_constant()[1] if C is None else C
    lhs = abs(pair(mu, f))
    ws = weighted_sup(f)
    nrm = norm_report(mu, CompactInterval(-0.5, 0.5)).value
    return L1Report(lhs, C, ws, nrm, C * ws * nrm)


# ---------------------------------------------------------------------------
# uniform-in-t checks


def _critical_frequencies(mu):
    out = {0.0}
    for d in mu.ac:
        if hasattr(d, "frequency"):
            out.add(float(d.frequency))
    return out


def uniform_modulated_gap(seq, limit, bank=None, schedule=DEFAULT_SCHEDULE, T=None, dt=0.125,
                          transform_tests=False, fine_dt=None, fine_span=2.0):
    """``sup_t |<mu_n - mu, e^{-2 pi i t .} f>|`` sampled for ``t`` on a grid
    of step ``dt`` over ``[-T, T]`` (default ``T = 2 * last index``), refined
    to step ``fine_dt`` within ``fine_span`` of the critical offsets (atom
    positions and phase frequencies of ``mu_n - mu``).

    With ``transform_tests`` the test functions are replaced by their
    Fourier transforms (used for the norm-convergence hypothesis).
    """
    bank = tf.schwartz_bank() if bank is None else bank
    schedule = tuple(schedule)
    T = 2.0 * schedule[-1] if T is None else T
    fine_dt = dt / 4 if fine_dt is None else fine_dt
    grid = np.arange(-T, T + dt / 2, dt)
    fine = np.arange(-fine_span, fine_span + fine_dt / 2, fine_dt)
    ids = tuple(f.label for f in bank)
    vals = np.zeros((len(schedule), len(bank)))
    for i, n in enumerate(schedule):
        diff = seq(n) - limit
        crit = sorted(_critical_frequencies(diff) | {-a.position for a in diff.atoms}
                      | {a.position for a in diff.atoms})
        ts = np.unique(np.concatenate([grid] + [c + fine for c in crit]))
        for j, f0 in enumerate(bank):
            f = _transformed(f0) if transform_tests else f0
            h = lambda t: abs(pair(diff, f.modulate(float(t))))
            v = np.array([h(t) for t in ts])
            best = float(v.max())
            for k in np.argsort(v)[::-1][:2]:
                a, b = ts[max(k - 1, 0)], ts[min(k + 1, ts.size - 1)]
                res = minimize_scalar(lambda t: -h(t), bounds=(a, b),
                                      method="bounded", options={"xatol": 1e-10})
                best = max(best, -res.fun)
            vals[i, j] = best
    per = {tid: gap_verdict(schedule, vals[:, j]) for j, tid in enumerate(ids)}
    return GapTable(seq.label, "uniform-modulated", schedule, ids, vals,
                    np.zeros_like(vals, bool), per,
                    _combine_verdicts(v.verdict for v in per.values()),
                    f"t sampled on [-{T:g}, {T:g}] step {dt:g}, step {fine_dt:g} near critical offsets")


def _transformed(f):
    """``f^`` as a test function (closed form)."""
    if isinstance(f, tf.GaussHermite):
        return f.fourier()
    g = f.inverse_fourier()  # f_check; f^ = reflect(f_check)
    return g.reflect()


def fu_family(n_max, U=(-1.0, 1.0)):
    """Sampled members of ``{g : |g| <= 1_U}``: unit tents of half-width
    ``1/(2m)`` for ``m`` up to ``2 n_max`` centred in ``U``, plus the widest
    tent fitting in ``U``."""
    lo, hi = U
    c = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    fams = [tf.tent(c, 0.999 * half, 1.0, label="fu_wide")]
    m = 1
    while m <= 2 * n_max:
        fams.append(tf.tent(c, min(0.999 * half, 1.0 / (2 * m)), 1.0, label=f"fu_tent{m}"))
        m *= 2
    return fams


def sampled_fu_gap(seq, limit, schedule=DEFAULT_SCHEDULE, U=(-1.0, 1.0), T=None, dt=None):
    """Sampled ``sup_{t, f in F_U} |<mu_n - mu, e^{-2 pi i t .} f^>|``.

    Any finite sample under-approximates the supremum; the report says so.
    """
    bank = fu_family(schedule[-1], U)
    fine_dt = 1.0 / (8 * schedule[-1]) if dt is None else dt
    t = uniform_modulated_gap(seq, limit, bank, schedule, T=T, dt=0.125, transform_tests=True,
                              fine_dt=fine_dt, fine_span=1.0 + 0.5 * (U[1] - U[0]))
    vals = t.values.max(axis=1, keepdims=True)
    v = gap_verdict(schedule, vals[:, 0])
    return GapTable(seq.label, "F_U-uniform", tuple(schedule), ("sup_F_U",), vals,
                    np.zeros_like(vals, bool), {"sup_F_U": v}, v.verdict,
                    "sampled F_U family (tents); under-approximates the supremum")


# ---------------------------------------------------------------------------
# theorem gates


@dataclass
class GateReport:
    which: str
    label: str
    status: str
    hypotheses: list            # (name, ok, verdict, detail)
    conclusion: Optional[GapTable] = None
    witness: str = ""
    notes: list = field(default_factory=list)

    def summary(self):
        lines = [f"{self.which} on {self.label}: {self.status}"]
        for name, ok, verdict, detail in self.hypotheses:
            lines.append(f"  [{'ok' if ok else 'FAIL'}] {name}: {verdict} {detail}")
        if self.conclusion is not None:
            lines.append(f"  conclusion ({self.conclusion.topology}): {self.conclusion.verdict}")
        for n in self.notes:
            lines.append(f"  note: {n}")
        return "\n".join(lines)


def _tempered(limit):
    if not isinstance(limit, Measure):
        return False, "not a measure"
    try:
        v = norm_report(limit, CompactInterval(0.0, 1.0)).value
    except UnboundedLocalMass:
        return False, "not translation bounded"
    return math.isfinite(v), f"translation bounded (||.||_[0,1] = {v:.6g})"


def _detail(table_or_result):
    w = table_or_result.witness
    if w is None:
        return ""
    if callable(w):
        w = w()
        if w is None:
            return ""
        tid, v, last = w
        return f"(witness {tid}: {v.reason}, last {last:.6g})"
    return f"(witness {w})"


def theorem_gate(seq, limit, which, schedule=DEFAULT_SCHEDULE, K=CompactInterval(0.0, 1.0),
                 ladder=CompactLadder.symmetric(4), ft_limit=None):
    """Check the hypotheses of one of the convergence theorems numerically.

    ``which`` is ``T3`` (vague convergence, tempered limit, equi-tb
    transforms => transforms converge vaguely), ``MAINVAG2`` (vague
    convergence, equi-tb family, vaguely bounded transforms => vague
    convergence of transforms), ``PRODTOP`` (uniform-in-t modulated
    convergence, vague boundedness, tempered limit, equi-tb transforms =>
    product convergence of transforms) or ``NORMCONV`` (vague convergence,
    tempered limit, uniform convergence over ``t`` and a sampled ``F_U``
    family => norm convergence of transforms).

    Returns PASS when all hypotheses hold and the conclusion's gap evidence
    converges, HYPOTHESIS_FAIL with the first failing hypothesis otherwise,
    and CONCLUSION_FAIL if the hypotheses hold but the conclusion does not
    (which would indicate a numerical problem).
    """
    which = which.upper()
    hyps, notes = [], []
    fseq = seq.ft_sequence()
    flim = fourier_transform(limit) if ft_limit is None else ft_limit

    def vague():
        t = gap(seq, limit, "vague", schedule=schedule)
        hyps.append(("mu_n -> mu vaguely", t.verdict == CONVERGES, t.verdict, _detail(t)))

    def tempered():
        ok, d = _tempered(limit)
        hyps.append(("mu tempered", ok, "YES" if ok else "NO", d))

    def ft_equi():
        r = equi_translation_bounded(fseq, K, schedule)
        hyps.append(("{hat mu_n} equi translation bounded", r.verdict == EQUI_TB, r.verdict,
                     _detail(r)))

    if which == "T3":
        vague()
        tempered()
        ft_equi()
        concl_mode = "vague"
    elif which == "MAINVAG2":
        vague()
        r = equi_translation_bounded(seq, K, schedule)
        hyps.append(("{mu_n} equi translation bounded", r.verdict == EQUI_TB, r.verdict, _detail(r)))
        r = vaguely_bounded(fseq, ladder, schedule)
        hyps.append(("{hat mu_n} vaguely bounded", r.verdict == BOUNDED, r.verdict, _detail(r)))
        concl_mode = "vague"
    elif which == "PRODTOP":
        t = uniform_modulated_gap(seq, limit, schedule=schedule)
        hyps.append(("mu_n(e^{-2 pi i t .} f) -> mu(...) uniformly in t", t.verdict == CONVERGES,
                     t.verdict, _detail(t)))
        notes.append(t.note)
        r = vaguely_bounded(seq, ladder, schedule)
        hyps.append(("{mu_n} vaguely bounded", r.verdict == BOUNDED, r.verdict, _detail(r)))
        tempered()
        ft_equi()
        concl_mode = "product"
    elif which == "NORMCONV":
        vague()
        tempered()
        t = sampled_fu_gap(seq, limit, schedule)
        hyps.append(("uniform in (t, f) over F_U (sampled)", t.verdict == CONVERGES, t.verdict,
                     _detail(t)))
        notes.append(t.note)
        concl_mode = "norm"
    else:
        raise ValueError(f"unknown theorem {which!r}")
    failed = [h for h in hyps if not h[1]]
    if failed:
        name, _, verdict, detail = failed[0]
        return GateReport(which, seq.label, HYPOTHESIS_FAIL, hyps, None,
                          f"{name}: {verdict} {detail}".strip(), notes)
    concl = gap(fseq, flim, concl_mode, schedule=schedule, K=K)
    status = PASS if concl.verdict == CONVERGES else CONCLUSION_FAIL
    return GateReport(which, seq.label, status, hyps, concl, "", notes)
