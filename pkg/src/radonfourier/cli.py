"""Command-line front end.

Usage::

    radonfourier pair     --measure M --test T
    radonfourier tv       --measure M --K a,b
    radonfourier norm     --measure M --K a,b
    radonfourier ft       --measure M
    radonfourier verify   --measure M [--hat H] [--bank schwartz|compact|both]
    radonfourier classify --example ID [--schedule ...] [--format csv|table]
    radonfourier gate     T3|MAINVAG2|PRODTOP|NORMCONV --example ID
    radonfourier autocorr --comb C (--n N | --schedule ...)
    radonfourier example  ID [--dump]
    radonfourier l1bound  --measure M --test T

``M``, ``H``, ``T`` and ``C`` are JSON descriptors given inline (starting with
``{``) or as file paths.  Exit codes: 0 success, 1 usage or input error,
2 verdict mismatch (``example``) or failed verification (``verify``).
Floating-point output uses 12 significant digits.
"""

import argparse
import csv
import io
import json
import re
import sys

from . import registry
from . import testfunctions as tf
from . import topology as top
from .descriptors import (DescriptorError, dump_measure, measure_from_dict,
                          test_function_from_dict)
from .diffraction import autocorrelation, autocorrelation_trend, comb_from_dict
from .errors import MeasureError, UnknownExample
from .fourier import fourier_transform, verify_pairing
from .measure import CompactInterval, norm_report, pair, total_variation_on

VERBS = ("pair", "tv", "norm", "ft", "verify", "classify", "gate", "autocorr", "example",
         "l1bound")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage().strip()}\n{self.prog}: error: {message}")


def fmt(x):
    """12 significant digits; complex values as ``re+imj`` unless real."""
    z = complex(x)
    if z.imag == 0:
        return f"{z.real:.12g}"
    return f"{z.real:.12g}{z.imag:+.12g}j"


def _load_json(arg, what):
    if arg is None:
        raise UsageError(f"--{what} is required")
    text = arg
    if not arg.lstrip().startswith("{"):
        try:
            with open(arg, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise UsageError(f"cannot read {what} descriptor {arg!r}: {e.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DescriptorError(f"{what}: invalid JSON: {e}") from None


def _schedule(text):
    try:
        vals = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"--schedule: expected comma-separated integers, got {text!r}") from None
    if not vals or any(v < 1 for v in vals) or list(vals) != sorted(set(vals)):
        raise UsageError("--schedule: indices must be positive and strictly increasing")
    return vals


def _interval(text):
    try:
        return CompactInterval.parse(text)
    except (ValueError, TypeError):
        raise UsageError(f"--K: expected 'a,b' with a <= b, got {text!r}") from None


def _bank(name):
    if name == "compact":
        return tf.compact_bank()
    if name == "schwartz":
        return tf.schwartz_bank()
    return tf.compact_bank() + tf.schwartz_bank()


def _table(header, rows):
    cols = [[str(h)] + [str(r[i]) for r in rows] for i, h in enumerate(header)]
    widths = [max(len(c) for c in col) for col in cols]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
    lines.append("  ".join("-" * w for w in widths))
    for r in rows:
        lines.append("  ".join(str(v).ljust(w) for v, w in zip(r, widths)))
    return "\n".join(lines) + "\n"


def _csv(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _emit(args, header, rows):
    return _csv(header, rows) if args.format == "csv" else _table(header, rows)


def build_parser():
    p = _Parser(prog="radonfourier", description="Radon measures on the line: pairings, "
                "norms, Fourier transforms and convergence diagnostics.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("args", nargs="*", help="positional arguments of the verb")
    p.add_argument("--measure", help="measure descriptor (JSON or path)")
    p.add_argument("--hat", help="transform descriptor for verify (default: rule-based)")
    p.add_argument("--test", help="test-function descriptor (JSON or path)")
    p.add_argument("--comb", help="comb descriptor (JSON or path)")
    p.add_argument("--example", help="registry example id")
    p.add_argument("--n", type=int, help="index for autocorr")
    p.add_argument("--schedule", default="1,2,4,8,16,32")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--K", default="0,1")
    p.add_argument("--bank", choices=("compact", "schwartz", "both"), default="schwartz")
    p.add_argument("--out", help="write the output here instead of stdout")
    p.add_argument("--format", choices=("csv", "table"), default="table")
    p.add_argument("--dump", action="store_true", help="example: print the case as JSON")
    return p


def _measure(args):
    return measure_from_dict(_load_json(args.measure, "measure"))


def _test(args):
    return test_function_from_dict(_load_json(args.test, "test"))


def _case(args):
    cid = args.example or (args.args[0] if args.verb == "example" and args.args else None)
    if cid is None:
        raise UsageError("an example id is required (--example ID)")
    return registry.get_example(cid)


def _run(args):
    """Return ``(exit_code, text)``."""
    verb = args.verb
    if verb == "pair":
        return 0, fmt(pair(_measure(args), _test(args), args.tol)) + "\n"
    if verb == "tv":
        return 0, fmt(total_variation_on(_measure(args), _interval(args.K), args.tol)) + "\n"
    if verb == "norm":
        return 0, fmt(norm_report(_measure(args), _interval(args.K)).value) + "\n"
    if verb == "ft":
        return 0, dump_measure(fourier_transform(_measure(args)), sort_keys=True) + "\n"
    if verb == "verify":
        mu = _measure(args)
        mu_hat = (measure_from_dict(_load_json(args.hat, "hat")) if args.hat
                  else fourier_transform(mu))
        rep = verify_pairing(mu, mu_hat, _bank(args.bank))
        rows = [(r.test_id, fmt(r.residual), "PASS" if r.passed else (r.note or "FAIL")) for r in rep.rows]
        return (0 if rep.passed else 2), _emit(args, ("test_id", "residual", "status"), rows)
    if verb == "classify":
        case = _case(args)
        rep = top.classify(case.sequence, case.candidate_limit, schedule=_schedule(args.schedule),
                           K=_interval(args.K), include_ft=case.include_ft, modes=case.modes,
                           ft_modes=case.ft_modes, ft_limit=case.ft_limit, tol=args.tol)
        if args.format == "csv":
            return 0, rep.to_csv()
        return 0, rep.summary() + "\n"
    if verb == "gate":
        if not args.args:
            raise UsageError("gate needs a theorem name: T3, MAINVAG2, PRODTOP or NORMCONV")
        which = args.args[0].upper()
        if which not in ("T3", "MAINVAG2", "PRODTOP", "NORMCONV"):
            raise UsageError(f"unknown theorem {args.args[0]!r}")
        case = _case(args)
        g = top.theorem_gate(case.sequence, case.candidate_limit, which,
                             schedule=_schedule(args.schedule), K=_interval(args.K),
                             ft_limit=case.ft_limit)
        if args.format == "csv":
            rows = [(case.id, which, name, "ok" if ok else "FAIL", verdict, detail)
                    for name, ok, verdict, detail in g.hypotheses]
            rows.append((case.id, which, "status", "", g.status, g.witness))
            return 0, _csv(("label", "gate", "hypothesis", "ok", "verdict", "detail"), rows)
        return 0, g.summary() + "\n"
    if verb == "autocorr":
        omega = comb_from_dict(_load_json(args.comb, "comb"))
        if args.n is not None:
            if args.n < 1:
                raise UsageError("--n must be positive")
            g = autocorrelation(omega, args.n)
            rows = [(fmt(x), fmt(w)) for x, w in g.table()]
            return 0, _emit(args, ("position", "weight"), rows)
        rep = autocorrelation_trend(omega, _schedule(args.schedule), K=_interval(args.K))
        if args.format == "csv":
            return 0, rep.to_csv()
        return 0, rep.summary() + "\n"
    if verb == "example":
        case = _case(args)
        if args.dump:
            return 0, case.to_json(indent=2, sort_keys=True) + "\n"
        res = registry.run_case(case, _schedule(args.schedule), _interval(args.K))
        if args.format == "csv":
            text = res.report.to_csv()
        else:
            text = res.summary() + "\n"
            text += f"{case.id}: {'PASS' if res.passed else 'MISMATCH'} ({len(res.mismatches)} mismatches)\n"
        return (0 if res.passed else 2), text
    if verb == "l1bound":
        r = top.l1_bound(_measure(args), _test(args))
        rows = [("lhs |mu(f)|", fmt(r.lhs)), ("C", fmt(r.C)),
                ("||(1+x^2) f||_inf", fmt(r.weighted_sup)), ("||mu||_[-1/2,1/2]", fmt(r.norm)),
                ("rhs", fmt(r.rhs)), ("margin", fmt(r.margin))]
        return 0, _emit(args, ("quantity", "value"), rows)
    raise UsageError(f"unknown verb {verb!r}")  # pragma: no cover - argparse restricts choices


_NUMERIC = re.compile(r"^-[\d.]")


def _join_negative_values(argv):
    """Let ``--K -2,2`` work: argparse would read ``-2,2`` as an option."""
    out = []
    for tok in argv:
        if out and out[-1] in ("--K", "--tol") and _NUMERIC.match(tok):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def run(argv=None, stdout=None, stderr=None):
    """Run the CLI; returns the exit code."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(sys.argv[1:] if argv is None else argv))
        code, text = _run(args)
    except UsageError as e:
        print(str(e), file=stderr)
        return 1
    except (DescriptorError, UnknownExample, MeasureError, ValueError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"radonfourier: error: {msg}", file=stderr)
        return 1
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as e:
            print(f"radonfourier: error: cannot write {args.out!r}: {e.strerror}", file=stderr)
            return 1
    else:
        stdout.write(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
