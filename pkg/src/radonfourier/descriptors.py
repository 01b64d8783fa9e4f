"""JSON-compatible descriptors for measures and test functions.

Measure layout::

    {"atoms": [{"x": 0.5, "w": [1.0, 0.0]}],
     "combs": [{"spacing": 1.0, "offset": 0.0, "w": [1.0, 0.0]}],
     "ac":    [{"kind": "modulated", "frequency": 0.0, "amplitude": [1.0, 0.0]}]}

Complex numbers are ``[re, im]`` pairs; a bare real number is accepted on
input.  Density kinds are ``piecewise_poly``, ``modulated``, ``indicator``,
``lebesgue`` (input alias), ``sinc``, ``sinc2``, ``tent`` and ``periodized``;
any density accepts an optional ``"clip": [lo, hi]``.  Combs accept an
optional ``"envelope"`` density.
"""

import json
import math

import numpy as np

from .densities import ModulatedConstant, PiecewisePoly, Periodized, Sinc, Sinc2, Tent
from .measure import Atom, LatticeComb, Measure
from . import testfunctions as tf


class DescriptorError(ValueError):
    """Malformed descriptor; the message names the offending field."""


def _c_out(z):
    z = complex(z)
    return [z.real + 0.0, z.imag + 0.0]


def _r(x):
    """Plain float with ``-0.0`` normalised to ``0.0`` (stable JSON)."""
    return float(x) + 0.0


def _is_num(v):
    return isinstance(v, (int, float)) and not isinstance(v, bool) and math.isfinite(v)


def _c_in(v, where):
    if _is_num(v):
        return complex(v)
    if isinstance(v, (list, tuple)) and len(v) == 2 and all(_is_num(u) for u in v):
        return complex(v[0], v[1])
    raise DescriptorError(f"{where}: expected a number or [re, im], got {v!r}")


def _items(d, key):
    """``d[key]`` as a list of objects (default empty)."""
    v = d.get(key, [])
    if not isinstance(v, list):
        raise DescriptorError(f"{key}: expected a list, got {v!r}")
    for i, item in enumerate(v):
        if not isinstance(item, dict):
            raise DescriptorError(f"{key}[{i}]: expected an object, got {item!r}")
    return v


def _f_in(d, key, where, default=None):
    if key not in d:
        if default is None:
            raise DescriptorError(f"{where}: missing field {key!r}")
        return default
    v = d[key]
    if not _is_num(v):
        raise DescriptorError(f"{where}.{key}: expected a finite number, got {v!r}")
    return float(v)


def density_to_dict(d):
    out = {"kind": d.kind}
    if isinstance(d, ModulatedConstant):
        if d.kind == "indicator":
            out.update(interval=[_r(c) for c in d.clip], amplitude=_c_out(d.amplitude))
            return out
        out.update(frequency=_r(d.frequency), amplitude=_c_out(d.amplitude))
    elif isinstance(d, PiecewisePoly):
        out.update(breakpoints=[_r(b) for b in d.breakpoints_],
                   coeffs=[[_c_out(c) for c in cs] for cs in d.coeffs])
    elif isinstance(d, (Sinc, Sinc2)):
        out.update(amplitude=_c_out(d.amplitude), rate=_r(d.rate), center=_r(d.center),
                   frequency=_r(d.frequency))
    elif isinstance(d, Tent):
        out.update(center=_r(d.center), half_width=_r(d.half_width),
                   amplitude=_c_out(d.amplitude), frequency=_r(d.frequency))
    elif isinstance(d, Periodized):
        out.update(profile=density_to_dict(d.profile), spacing=_r(d.spacing), offset=_r(d.offset),
                   weight=_c_out(d.weight))
    else:  # pragma: no cover - all kinds handled above
        raise DescriptorError(f"cannot serialise density {d!r}")
    if d.clip is not None:
        out["clip"] = [_r(c) for c in d.clip]
    return out


def _clip_in(d, where):
    if "clip" not in d or d["clip"] is None:
        return None
    c = d["clip"]
    if not (isinstance(c, (list, tuple)) and len(c) == 2 and all(_is_num(u) for u in c)):
        raise DescriptorError(f"{where}.clip: expected [lo, hi] with finite numbers")
    lo, hi = float(c[0]), float(c[1])
    if lo > hi:
        raise DescriptorError(f"{where}.clip: lo > hi")
    return (lo, hi)


def density_from_dict(d, where="ac"):
    if not isinstance(d, dict) or "kind" not in d:
        raise DescriptorError(f"{where}: density needs a 'kind'")
    kind = d["kind"]
    clip = _clip_in(d, where)
    try:
        if kind == "lebesgue":
            return ModulatedConstant(0.0, _c_in(d.get("amplitude", 1.0), f"{where}.amplitude"), clip)
        if kind == "modulated":
            return ModulatedConstant(_f_in(d, "frequency", where, 0.0),
                                     _c_in(d.get("amplitude", 1.0), f"{where}.amplitude"), clip)
        if kind == "indicator":
            iv = d.get("interval")
            if not (isinstance(iv, (list, tuple)) and len(iv) == 2 and all(_is_num(u) for u in iv)) \
                    or iv[0] > iv[1]:
                raise DescriptorError(f"{where}.interval: expected [lo, hi] with lo <= hi")
            return ModulatedConstant(0.0, _c_in(d.get("amplitude", 1.0), f"{where}.amplitude"),
                                     (float(iv[0]), float(iv[1])))
        if kind == "piecewise_poly":
            coeffs = [[_c_in(c, f"{where}.coeffs") for c in cs] for cs in d["coeffs"]]
            return PiecewisePoly(tuple(d["breakpoints"]), tuple(coeffs), clip)
        if kind in ("sinc", "sinc2"):
            cls = Sinc if kind == "sinc" else Sinc2
            return cls(_c_in(d.get("amplitude", 1.0), f"{where}.amplitude"),
                       _f_in(d, "rate", where), _f_in(d, "center", where, 0.0),
                       _f_in(d, "frequency", where, 0.0), clip)
        if kind == "tent":
            return Tent(_f_in(d, "center", where, 0.0), _f_in(d, "half_width", where),
                        _c_in(d.get("amplitude", 1.0), f"{where}.amplitude"),
                        _f_in(d, "frequency", where, 0.0), clip)
        if kind == "periodized":
            return Periodized(density_from_dict(d["profile"], f"{where}.profile"),
                              _f_in(d, "spacing", where), _f_in(d, "offset", where, 0.0),
                              _c_in(d.get("weight", 1.0), f"{where}.weight"), clip)
    except KeyError as e:
        raise DescriptorError(f"{where}: missing field {e.args[0]!r}") from None
    except DescriptorError:
        raise
    except (ValueError, TypeError) as e:
        raise DescriptorError(f"{where}: {e}") from None
    raise DescriptorError(f"{where}: unknown density kind {kind!r}")


def measure_to_dict(mu):
    out = {
        "atoms": [{"x": _r(a.position), "w": _c_out(a.weight)} for a in mu.atoms],
        "combs": [],
        "ac": [density_to_dict(d) for d in mu.ac],
    }
    for c in mu.combs:
        e = {"spacing": _r(c.spacing), "offset": _r(c.offset), "w": _c_out(c.weight)}
        if c.envelope is not None:
            e["envelope"] = density_to_dict(c.envelope)
        out["combs"].append(e)
    return out


def measure_from_dict(d):
    if not isinstance(d, dict):
        raise DescriptorError("measure descriptor must be an object")
    unknown = set(d) - {"atoms", "combs", "ac", "label"}
    if unknown:
        raise DescriptorError(f"unknown measure fields {sorted(unknown)}")
    atoms = []
    for i, a in enumerate(_items(d, "atoms")):
        where = f"atoms[{i}]"
        atoms.append(Atom(_f_in(a, "x", where), _c_in(a.get("w", 1.0), f"{where}.w")))
    combs = []
    for i, c in enumerate(_items(d, "combs")):
        where = f"combs[{i}]"
        spacing = _f_in(c, "spacing", where)
        if not spacing > 0:
            raise DescriptorError(f"{where}.spacing: must be positive")
        env = c.get("envelope")
        combs.append(LatticeComb(spacing, _f_in(c, "offset", where, 0.0),
                                 _c_in(c.get("w", 1.0), f"{where}.w"),
                                 None if env is None else density_from_dict(env, f"{where}.envelope")))
    ac = [density_from_dict(x, f"ac[{i}]") for i, x in enumerate(_items(d, "ac"))]
    return Measure(tuple(atoms), tuple(combs), tuple(ac), label=str(d.get("label", "")))


def load_measure(text):
    """Measure from a JSON string."""
    try:
        return measure_from_dict(json.loads(text))
    except json.JSONDecodeError as e:
        raise DescriptorError(f"invalid JSON: {e}") from None


def dump_measure(mu, **kw):
    return json.dumps(measure_to_dict(mu), **kw)


# ---------------------------------------------------------------------------
# test functions


def test_function_from_dict(d, where="test"):
    """Test-function descriptor.

    ``{"kind": "tent", "center", "half_width", "height"}``,
    ``{"kind": "piecewise", "breakpoints", "coeffs"}`` (global monomial
    coefficients per piece), ``{"kind": "gaussian", "center", "width",
    "coeffs"}`` (Hermite coefficients), or ``{"kind": "bank", "name"}`` for a
    named bank member; all accept ``"modulation"``.
    """
    if not isinstance(d, dict) or "kind" not in d:
        raise DescriptorError(f"{where}: test function needs a 'kind'")
    kind = d["kind"]
    mod = float(d.get("modulation", 0.0))
    try:
        if kind == "tent":
            f = tf.tent(float(d.get("center", 0.0)), float(d.get("half_width", 1.0)),
                        float(d.get("height", 1.0)))
        elif kind == "piecewise":
            f = tf.piecewise_from_global(d["breakpoints"], d["coeffs"])
        elif kind == "gaussian":
            coeffs = [_c_in(c, f"{where}.coeffs") for c in d.get("coeffs", [1.0])]
            f = tf.GaussHermite(float(d.get("center", 0.0)), float(d.get("width", 1.0)),
                                np.asarray(coeffs))
        elif kind == "bank":
            name = d["name"]
            bank = {g.label: g for g in tf.compact_bank() + tf.schwartz_bank()}
            if name not in bank:
                raise DescriptorError(f"{where}.name: unknown bank function {name!r}")
            f = bank[name]
        else:
            raise DescriptorError(f"{where}: unknown test kind {kind!r}")
    except KeyError as e:
        raise DescriptorError(f"{where}: missing field {e.args[0]!r}") from None
    except (ValueError, TypeError) as e:
        if isinstance(e, DescriptorError):
            raise
        raise DescriptorError(f"{where}: {e}") from None
    return f.modulate(mod) if mod else f


def load_test_function(text):
    try:
        return test_function_from_dict(json.loads(text))
    except json.JSONDecodeError as e:
        raise DescriptorError(f"invalid JSON: {e}") from None
