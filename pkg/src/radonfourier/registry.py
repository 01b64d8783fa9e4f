"""Table-driven registry of worked measure sequences.

Each :class:`ExampleCase` bundles a sequence, its candidate limit, the
expected verdicts of :func:`~radonfourier.topology.classify` and
:func:`~radonfourier.topology.theorem_gate`, and a list of exact assertions
(closed-form values the numerics must reproduce).  :func:`run_case` executes
everything and lists mismatches.

Registered ids::

    EX1        n (delta_{1/n} - delta_0)              -> f |-> f'(0)  (not a measure)
    EX2        (lambda - 1_[-n,n] lambda) / alpha_n  -> 0
    EX3        n^3 delta_{nZ} - n^3 delta_0           -> 0
    TEMPDIS    n delta_{1/n} + n delta_{-1/n} - 2n delta_0 -> 0 (tempered only)
    EX417      the TEMPDIS sequence, viewed through its transforms
    SINC       1_[-n,n] lambda                        -> lambda
    MODULATED  e^{-2 pi i n x} lambda                 -> 0
    NORMEX     e^{2 pi i x / n} lambda                -> lambda
    DELTA_INV  delta_{1/n}                            -> delta_0
"""

from dataclasses import dataclass, field
import json
import math
import time
from typing import Callable

import numpy as np
from scipy import integrate as sp_integrate
from scipy.special import sici

from .densities import ModulatedConstant, indicator, lebesgue
from .errors import UnknownExample
from .fourier import fourier_transform, verify_pairing
from .measure import (CompactInterval, Measure, dirac, dirac_comb, lebesgue_measure,
                      norm_report, pair, sup_report, total_variation_on)
from .descriptors import measure_to_dict
from . import testfunctions as tf
from . import topology as top
from .topology import (BOUNDED, CONVERGES, DIVERGES, EQUI_TB, HYPOTHESIS_FAIL,
                       NOT_APPLICABLE, NOT_EQUI_TB, PASS, UNBOUNDED)

__all__ = ["Expectation", "SpecialTest", "ExampleCase", "CaseResult", "EXAMPLE_IDS",
           "get_example", "run_case", "run_all", "ex2_alpha", "ex2_alpha_quadrature"]


@dataclass(frozen=True)
class Expectation:
    """Expected verdict for one classify key or theorem gate, with the
    reason it is expected (``basis``)."""

    key: str
    verdict: str
    basis: str


@dataclass(frozen=True)
class SpecialTest:
    """Named exact assertion; ``check()`` returns ``(ok, detail)``.

    ``kind`` is ``exact`` (closed-form value), ``derived`` (independent
    oracle) or ``trend`` (fitted rate)."""

    name: str
    check: Callable
    kind: str = "exact"


@dataclass(frozen=True)
class ExampleCase:
    id: str
    title: str
    sequence: top.MeasureSequence
    candidate_limit: object
    expected: tuple
    gates: tuple = ()
    special_tests: tuple = ()
    ft_limit: object = None
    include_ft: bool = True
    modes: tuple = ("vague", "tempered", "product", "norm")
    ft_modes: tuple = ("vague", "tempered", "product", "norm")
    notes: tuple = ()

    @property
    def ft_sequence(self):
        return self.sequence.ft_sequence() if self.include_ft else None

    def to_dict(self, n=2):
        """JSON-ready description; the measures are shown at index ``n``."""
        lim = self.candidate_limit
        out = {
            "id": self.id,
            "title": self.title,
            "sequence": self.sequence.label,
            "member": {"n": n, "measure": measure_to_dict(self.sequence(n))},
            "candidate_limit": (measure_to_dict(lim) if isinstance(lim, Measure)
                                else {"functional": lim.label, "is_measure": False}),
            "expected": [{"key": e.key, "verdict": e.verdict, "basis": e.basis}
                         for e in self.expected],
            "gates": [{"theorem": e.key, "status": e.verdict, "basis": e.basis}
                      for e in self.gates],
            "special_tests": [{"name": s.name, "kind": s.kind} for s in self.special_tests],
            "modes": list(self.modes),
            "ft_modes": list(self.ft_modes) if self.include_ft else [],
            "notes": list(self.notes),
        }
        if self.include_ft:
            out["member"]["transform"] = measure_to_dict(self.sequence.ft(n))
        return out

    def to_json(self, **kw):
        return json.dumps(self.to_dict(), **kw)


@dataclass
class CaseResult:
    case: ExampleCase
    report: top.ConvergenceReport
    gates: dict
    specials: list             # (name, ok, detail)
    mismatches: list           # (key, expected, got)
    seconds: float = 0.0

    @property
    def passed(self):
        return not self.mismatches

    def summary(self):
        lines = [f"{self.case.id}: {self.case.title}"]
        exp = {e.key: e.verdict for e in self.case.expected}
        for k, v in self.report.verdicts.items():
            mark = "" if k not in exp else ("  ok" if exp[k] == v else f"  MISMATCH (expected {exp[k]})")
            lines.append(f"  {k:22s} {v}{mark}")
        for e in self.case.gates:
            g = self.gates[e.key]
            mark = "ok" if g.status == e.verdict else f"MISMATCH (expected {e.verdict})"
            lines.append(f"  gate {e.key:17s} {g.status}  {mark}")
        for name, ok, detail in self.specials:
            lines.append(f"  [{'ok' if ok else 'FAIL'}] {name}: {detail}")
        for n in self.report.notes:
            lines.append(f"  note: {n}")
        for n in self.case.notes:
            lines.append(f"  note: {n}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# helpers for the exact assertions


def _max_abs_err(pairs):
    errs = [abs(complex(a) - complex(b)) for a, b in pairs]
    return max(errs) if errs else 0.0


def _bank_fn(label):
    for f in tf.compact_bank():
        if f.label == label:
            return f
    raise KeyError(label)


def _fit_exponent(ns, vals):
    return float(np.polyfit(np.log(ns), np.log(vals), 1)[0])


def sinc_abs_witness(n):
    """``(1/pi) int_{-2 pi n}^{2 pi n} |sin y / y| dy`` by lobe-wise quadrature."""
    total = 0.0
    for k in range(int(round(2 * n))):
        v, _ = sp_integrate.quad(lambda y: abs(np.sinc(y / math.pi)), k * math.pi,
                                 (k + 1) * math.pi, epsabs=1e-14, epsrel=1e-13)
        total += v
    return 2.0 * total / math.pi


def log_fit(ns, vals):
    """Least-squares ``vals ~ a + b log n``; returns ``(b, R^2)``."""
    x = np.log(np.asarray(ns, dtype=float))
    y = np.asarray(vals, dtype=float)
    b, a = np.polyfit(x, y, 1)
    res = y - (a + b * x)
    ss = float(np.sum((y - y.mean()) ** 2))
    return float(b), (1.0 - float(np.sum(res ** 2)) / ss) if ss > 0 else 1.0


# ---------------------------------------------------------------------------
# EX2 normalisation


def ex2_alpha(n):
    """``alpha_n = 2 - (4/pi) Si(4 pi n)``, the mass of ``4 sinc^2(2 pi x)``
    outside ``[-n, n]`` for integer ``n``."""
    return 2.0 - 4.0 / math.pi * sici(4.0 * math.pi * n)[0]


def ex2_alpha_quadrature(n):
    """Independent value ``2 - int_{-n}^{n} 4 sinc^2(2 pi x) dx``."""
    total = 0.0
    # integrate on half-periods of the oscillation, x >= 0, then double
    edges = np.arange(0.0, n + 0.25, 0.5)
    for a, b in zip(edges[:-1], edges[1:]):
        v, _ = sp_integrate.quad(lambda x: 4.0 * np.sinc(2.0 * x) ** 2, a, b,
                                 epsabs=1e-14, epsrel=1e-13, limit=200)
        total += v
    return 2.0 - 2.0 * total


def _ex2_member(n):
    a = ex2_alpha(n)
    return Measure(ac=(lebesgue(1.0 / a), indicator(-n, n, -1.0 / a)), label=f"nu_{n}")


# ---------------------------------------------------------------------------
# the cases


def _case_ex1():
    deriv = top.Functional("f'(0)", lambda f: f.derivative_at(0.0))
    seq = top.MeasureSequence(lambda n: n * dirac(1.0 / n) - n * dirac(0.0), "n(d_{1/n}-d_0)")

    def rate():
        # the first-order term dominates late for members with small f''(0)
        ns = (32, 64, 128, 256)
        t = top.gap(seq, deriv, "tempered", schedule=ns)
        ex = [_fit_exponent(ns, t.values[:, j]) for j in range(t.values.shape[1])]
        ok = all(abs(e + 1.0) <= 0.1 for e in ex)
        return ok, f"tempered gap exponents in [{min(ex):.4f}, {max(ex):.4f}] (target -1 +- 0.1)"

    return ExampleCase(
        "EX1", "difference quotients converge to the derivative functional",
        seq, deriv,
        expected=(
            Expectation("tempered", CONVERGES, "difference quotient -> f'(0) at rate 1/n"),
            Expectation("vague", NOT_APPLICABLE, "limit is a distribution, not a measure"),
            Expectation("product", NOT_APPLICABLE, "limit is a distribution, not a measure"),
            Expectation("norm", NOT_APPLICABLE, "limit is a distribution, not a measure"),
        ),
        special_tests=(SpecialTest("tempered gap ~ c/n", rate, "trend"),),
        include_ft=False,
        notes=("limit f |-> f'(0) is not a measure",),
    )


def _case_ex2():
    g = _bank_fn("g_ex2")

    def ft_exact(n, f):
        return 1.0 if f.label == "g_ex2" else None

    seq = top.MeasureSequence(
        _ex2_member, "(lambda-1_[-n,n])/alpha_n",
        exact_pairing=lambda n, f: 0.0 if f.compact and -n <= f.support()[0]
        and f.support()[1] <= n else None,
        ft_exact_pairing=ft_exact)

    def alpha():
        err = max(abs(ex2_alpha(n) - ex2_alpha_quadrature(n)) for n in range(1, 33))
        return err <= 1e-10, f"|alpha_n(Si) - alpha_n(quadrature)| <= {err:.3g} for n = 1..32"

    def normalisation():
        g_hat = tf.Sinc2Test(amplitude=4.0, rate=2.0 * math.pi, label="g_ex2^")
        pairs = []
        for n in range(1, 33):
            pairs.append((pair(_ex2_member(n), g_hat, 1e-13), 1.0))
            pairs.append((pair(fourier_transform(_ex2_member(n)), g, 1e-13), 1.0))
        err = _max_abs_err(pairs)
        return err <= 1e-8, f"<nu_n, g^> = <nu_n^, g> = 1 to {err:.3g}"

    return ExampleCase(
        "EX2", "normalised tails of lambda: vaguely null, transforms pinned at 1",
        seq, Measure(),
        expected=(
            Expectation("vague", CONVERGES, "nu_n vanishes on [-n, n]"),
            Expectation("tempered", CONVERGES, "Gaussian tails beyond n"),
            Expectation("vaguely_bounded", BOUNDED, "|nu_n|([-m, m]) = 0 once n >= m"),
            Expectation("equi_tb", NOT_EQUI_TB, "||nu_n||_[0,1] = 1/alpha_n ~ pi^2 n"),
            Expectation("ft_vague", DIVERGES, "exact witness <nu_n^, g> = 1 for all n"),
        ),
        special_tests=(SpecialTest("alpha_n by Si and quadrature", alpha, "derived"),
                       SpecialTest("normalisation <nu_n^, g> = 1", normalisation, "exact")),
        ft_modes=("vague", "tempered"),
        modes=("vague", "tempered"),
    )


def _case_ex3():
    f = tf.ex3_test_function()

    def ft_exact(n, g):
        return n / 6.0 if g.label == "f_ex3" else None

    seq = top.MeasureSequence(lambda n: n ** 3 * dirac_comb(n) - n ** 3 * dirac(0.0),
                              "n^3 d_{nZ} - n^3 d_0", ft_exact_pairing=ft_exact)

    def n_over_6():
        pairs = [(pair(fourier_transform(seq(n)), f, 1e-13), n / 6.0) for n in range(1, 11)]
        err = _max_abs_err(pairs)
        return err <= 1e-9, f"<mu_n^, f> = n/6 for n = 1..10, max error {err:.3g}"

    return ExampleCase(
        "EX3", "lattice atoms minus the origin: vaguely null, transforms blow up",
        seq, Measure(),
        expected=(
            Expectation("vague", CONVERGES, "atoms leave every compact set"),
            Expectation("tempered", CONVERGES, "Gaussian decay beats n^3"),
            Expectation("vaguely_bounded", BOUNDED, "the atom at 0 cancels; nothing else in [-m, m] for n > m"),
            Expectation("equi_tb", NOT_EQUI_TB, "mass n^3 at a single point"),
            Expectation("product", DIVERGES, "||mu_n * g|| ~ n^3"),
            Expectation("norm", DIVERGES, "||mu_n||_K ~ n^3"),
            Expectation("ft_vague", DIVERGES, "exact witness <mu_n^, f> = n/6"),
            Expectation("ft_equi_tb", NOT_EQUI_TB, "n^3 lambda component"),
        ),
        gates=(Expectation("T3", HYPOTHESIS_FAIL, "transforms not equi translation bounded"),),
        special_tests=(SpecialTest("<mu_n^, f> = n/6", n_over_6, "exact"),),
        modes=("vague", "tempered", "product", "norm"),
        ft_modes=("vague",),
    )


def _tempdis_seq():
    ftf = tf.tempdis_test_function()

    def exact(n, f):
        return math.sqrt(n) if f.label == ftf.label else None

    return top.MeasureSequence(
        lambda n: n * dirac(1.0 / n) + n * dirac(-1.0 / n) - 2 * n * dirac(0.0),
        "n d_{1/n} + n d_{-1/n} - 2n d_0", exact_pairing=exact)


def _case_tempdis():
    seq = _tempdis_seq()
    f = tf.tempdis_test_function()

    def sqrt_n():
        err = max(abs(pair(seq(n), f) - math.sqrt(n)) for n in range(1, 65))
        return err <= 1e-12, f"numerical <mu_n, f> = sqrt(n) for n = 1..64, error {err:.3g}"

    def rate():
        ns = (8, 16, 32, 64)
        t = top.gap(seq, Measure(), "tempered", schedule=ns)
        ex = [_fit_exponent(ns, t.values[:, j]) for j in range(t.values.shape[1])]
        ok = all(abs(e + 1.0) <= 0.1 for e in ex)
        return ok, f"tempered gap exponents in [{min(ex):.4f}, {max(ex):.4f}] (target -1 +- 0.1)"

    return ExampleCase(
        "TEMPDIS", "second differences: tempered null, vaguely divergent",
        seq, Measure(),
        expected=(
            Expectation("tempered", CONVERGES, "<mu_n, g> = g''(0)/n + O(n^-3)"),
            Expectation("vague", DIVERGES, "exact witness sqrt(n)"),
            Expectation("vaguely_bounded", UNBOUNDED, "|mu_n|([-1, 1]) = 4n"),
            Expectation("equi_tb", NOT_EQUI_TB, "|mu_n|([0, 1]) >= 2n"),
            Expectation("product", DIVERGES, "tent gives a persistent 2"),
            Expectation("norm", DIVERGES, "||mu_n||_K = 4n"),
        ),
        special_tests=(SpecialTest("vague witness sqrt(n)", sqrt_n, "exact"),
                       SpecialTest("tempered gap ~ c/n", rate, "trend")),
        include_ft=False,
    )


def _case_ex417():
    seq = _tempdis_seq()

    def pairing_identity():
        worst = 0.0
        for n in (1, 2, 4, 8, 16, 32):
            rep = verify_pairing(seq(n), fourier_transform(seq(n)))
            worst = max(worst, rep.max_residual)
        return worst <= 1e-8, f"<mu_n, g> = <mu_n^, g_check> on the Gaussian bank to {worst:.3g}"

    return ExampleCase(
        "EX417", "transforms 2n(cos(2 pi x/n) - 1) lambda converge vaguely to 0",
        seq, Measure(),
        expected=(
            Expectation("vague", DIVERGES, "exact witness sqrt(n)"),
            Expectation("tempered", CONVERGES, "second differences of Schwartz functions"),
            Expectation("ft_vague", CONVERGES, "2n(cos(2 pi x/n) - 1) = O(x^2/n) on compacts"),
            Expectation("ft_tempered", CONVERGES, "transform of a tempered-null sequence"),
            Expectation("ft_vaguely_bounded", BOUNDED, "|mu_n^|([-m, m]) = O(m^3/n)"),
            Expectation("ft_equi_tb", NOT_EQUI_TB, "density reaches 4n"),
        ),
        special_tests=(SpecialTest("pairing identity", pairing_identity, "derived"),),
        modes=("vague", "tempered"),
        ft_modes=("vague", "tempered"),
    )


def _case_sinc():
    seq = top.MeasureSequence(lambda n: Measure(ac=(indicator(-n, n),)), "1_[-n,n] lambda")

    def witness():
        ns = (1, 2, 4, 8, 16, 32, 64)
        w = [sinc_abs_witness(n) for n in ns]
        b, r2 = log_fit(ns, w)
        tv = [total_variation_on(fourier_transform(seq(n)), CompactInterval(-1.0, 1.0), 1e-11)
              for n in ns]
        agree = max(abs(a - c) for a, c in zip(w, tv))
        ok = b > 0 and r2 > 0.99 and agree <= 1e-8
        return ok, (f"witness vs log n: slope {b:.6g}, R^2 {r2:.6f}; "
                    f"|mu_n^|([-1,1]) agrees to {agree:.3g}")

    return ExampleCase(
        "SINC", "growing indicators: transforms 2n sinc(2 pi n x) are not translation bounded",
        seq, lebesgue_measure(),
        ft_limit=dirac(0.0),
        expected=(
            Expectation("vague", CONVERGES, "1_[-n,n] = 1 on any compact once n is large"),
            Expectation("tempered", CONVERGES, "Gaussian tails"),
            Expectation("vaguely_bounded", BOUNDED, "|mu_n|([-m, m]) <= 2m"),
            Expectation("equi_tb", EQUI_TB, "||mu_n||_K <= |K|"),
            Expectation("product", DIVERGES, "edges at +-n keep the sup gap"),
            Expectation("norm", DIVERGES, "||mu_n - lambda||_K = 1"),
            Expectation("ft_vague", CONVERGES, "Dirichlet-type kernel on the piecewise-smooth bank"),
            Expectation("ft_vaguely_bounded", UNBOUNDED, "(1/pi) int |sinc| grows like log n"),
            Expectation("ft_equi_tb", NOT_EQUI_TB, "(1/pi) int |sinc| grows like log n"),
        ),
        gates=(Expectation("MAINVAG2", HYPOTHESIS_FAIL, "transforms are not vaguely bounded"),),
        special_tests=(SpecialTest("log-growth witness", witness, "exact"),),
        ft_modes=("vague",),
        notes=("transform vague convergence is checked on piecewise-smooth compact test "
               "functions only",),
    )


def _case_modulated():
    seq = top.MeasureSequence(lambda n: Measure(ac=(ModulatedConstant(-float(n), 1.0),)),
                              "e^{-2 pi i n x} lambda",
                              ft_generator=lambda n: dirac(-float(n)))

    def product_witness():
        err = 0.0
        for g in tf.compact_bank():
            s = g.sup_norm()
            for n in range(1, 33):
                err = max(err, abs(sup_report(dirac(-float(n)), g).value - s))
        return err <= 1e-12, f"||g * delta_-n||_inf = ||g||_inf on the compact bank, error {err:.3g}"

    return ExampleCase(
        "MODULATED", "fast modulations of lambda: vaguely null, product-discontinuous transform",
        seq, Measure(),
        expected=(
            Expectation("vague", CONVERGES, "Riemann-Lebesgue"),
            Expectation("tempered", CONVERGES, "Riemann-Lebesgue"),
            Expectation("equi_tb", EQUI_TB, "|density| = 1"),
            Expectation("ft_vague", CONVERGES, "delta_-n leaves every compact"),
            Expectation("ft_product", DIVERGES, "exact witness ||g * delta_-n|| = ||g||_inf"),
            Expectation("ft_equi_tb", EQUI_TB, "single unit atom"),
        ),
        gates=(Expectation("T3", PASS, "all hypotheses hold"),
               Expectation("PRODTOP", HYPOTHESIS_FAIL, "not uniform in the modulation t")),
        special_tests=(SpecialTest("product witness ||g||_inf", product_witness, "exact"),),
    )


def _case_normex():
    seq = top.MeasureSequence(lambda n: Measure(ac=(ModulatedConstant(1.0 / n, 1.0),)),
                              "e^{2 pi i x/n} lambda",
                              ft_generator=lambda n: dirac(1.0 / n))

    def norm_formula():
        K = CompactInterval(0.0, 1.0)
        err = 0.0
        for n in range(1, 33):
            v = norm_report(seq(n) - lebesgue_measure(), K).value
            err = max(err, abs(v - 4 * n / math.pi * math.sin(math.pi / (2 * n))))
        return err <= 1e-9, f"||mu_n - lambda||_[0,1] = (4n/pi) sin(pi/2n) to {err:.3g}"

    return ExampleCase(
        "NORMEX", "slow modulations of lambda: product convergent transforms, not norm",
        seq, lebesgue_measure(),
        ft_limit=dirac(0.0),
        expected=(
            Expectation("vague", CONVERGES, "phase -> 1 locally uniformly"),
            Expectation("tempered", CONVERGES, "dominated convergence"),
            Expectation("equi_tb", EQUI_TB, "|density| = 1"),
            Expectation("norm", DIVERGES, "||mu_n - lambda||_K = (4n/pi) sin(pi/2n) -> 2"),
            Expectation("product", DIVERGES, "phase drifts across a period of length n"),
            Expectation("ft_vague", CONVERGES, "delta_{1/n} -> delta_0"),
            Expectation("ft_product", CONVERGES, "uniform continuity of g"),
            Expectation("ft_norm", DIVERGES, "||delta_{1/n} - delta_0||_K = 2"),
        ),
        gates=(Expectation("PRODTOP", PASS, "all hypotheses hold"),
               Expectation("NORMCONV", HYPOTHESIS_FAIL, "not uniform over the F_U family"),
               Expectation("T3", PASS, "all hypotheses hold")),
        special_tests=(SpecialTest("norm formula", norm_formula, "exact"),),
    )


def _case_delta_inv():
    seq = top.MeasureSequence(lambda n: dirac(1.0 / n), "delta_{1/n}",
                              ft_generator=lambda n: Measure(ac=(ModulatedConstant(-1.0 / n, 1.0),)))

    def norms():
        K = CompactInterval(0.0, 1.0)
        bad = []
        for n in range(1, 33):
            if norm_report(dirac(1.0 / n) - dirac(0.0), K).value != 2.0:
                bad.append(n)
            if norm_report(dirac(-float(n)), K).value != 1.0:
                bad.append(-n)
        return not bad, ("||delta_{1/n} - delta_0||_[0,1] = 2 and ||delta_-n||_[0,1] = 1 "
                         f"exactly for n = 1..32{'' if not bad else f'; failures {bad}'}")

    return ExampleCase(
        "DELTA_INV", "atoms converging to the origin",
        seq, dirac(0.0),
        ft_limit=lebesgue_measure(),
        expected=(
            Expectation("vague", CONVERGES, "continuity of f at 0"),
            Expectation("product", CONVERGES, "uniform continuity of g"),
            Expectation("norm", DIVERGES, "||delta_{1/n} - delta_0||_K = 2"),
            Expectation("equi_tb", EQUI_TB, "single unit atom"),
            Expectation("ft_vague", CONVERGES, "phase -> 1 locally uniformly"),
            Expectation("ft_norm", DIVERGES, "||(e^{-2 pi i x/n} - 1) lambda||_K -> 2"),
            Expectation("ft_equi_tb", EQUI_TB, "|density| = 1"),
        ),
        gates=(Expectation("PRODTOP", HYPOTHESIS_FAIL, "not uniform in the modulation t"),
               Expectation("NORMCONV", HYPOTHESIS_FAIL, "not uniform in the modulation t"),
               Expectation("T3", PASS, "all hypotheses hold")),
        special_tests=(SpecialTest("exact norms", norms, "exact"),),
    )


_BUILDERS = {
    "EX1": _case_ex1, "EX2": _case_ex2, "EX3": _case_ex3, "TEMPDIS": _case_tempdis,
    "EX417": _case_ex417, "SINC": _case_sinc, "MODULATED": _case_modulated,
    "NORMEX": _case_normex, "DELTA_INV": _case_delta_inv,
}
EXAMPLE_IDS = tuple(_BUILDERS)


def get_example(case_id):
    """Return the :class:`ExampleCase` registered under ``case_id``."""
    key = str(case_id).upper()
    if key not in _BUILDERS:
        raise UnknownExample(f"unknown example {case_id!r}; known: {', '.join(EXAMPLE_IDS)}")
    return _BUILDERS[key]()


def run_case(case, schedule=top.DEFAULT_SCHEDULE, K=CompactInterval(0.0, 1.0), specials=True):
    """Classify, run the gates and the exact assertions; collect mismatches."""
    if isinstance(case, str):
        case = get_example(case)
    t0 = time.perf_counter()
    report = top.classify(case.sequence, case.candidate_limit, schedule=schedule, K=K,
                          include_ft=case.include_ft, modes=case.modes,
                          ft_modes=case.ft_modes, ft_limit=case.ft_limit)
    mismatches = []
    for e in case.expected:
        got = report.verdicts.get(e.key)
        if got != e.verdict:
            mismatches.append((e.key, e.verdict, got))
    gates = {}
    for e in case.gates:
        g = top.theorem_gate(case.sequence, case.candidate_limit, e.key, schedule=schedule, K=K,
                             ft_limit=case.ft_limit)
        gates[e.key] = g
        if g.status != e.verdict:
            mismatches.append(("gate " + e.key, e.verdict, g.status))
    results = []
    if specials:
        for s in case.special_tests:
            ok, detail = s.check()
            results.append((s.name, bool(ok), detail))
            if not ok:
                mismatches.append(("special " + s.name, "ok", detail))
    return CaseResult(case, report, gates, results, mismatches, time.perf_counter() - t0)


def run_all(schedule=top.DEFAULT_SCHEDULE, specials=True):
    return [run_case(get_example(i), schedule, specials=specials) for i in EXAMPLE_IDS]
