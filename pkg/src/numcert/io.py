"""File formats: systems, points, reports, and alphaCertified input files."""

from __future__ import annotations

import json
import math
import os
from fractions import Fraction
from pathlib import Path
from typing import List, Sequence

from .alpha import AlphaConstants
from .certify import CertificationReport
from .deflation import Strategy
from .interval.linalg import IntervalBox
from .poly.parse import PolySyntaxError, parse_polynomial, parse_scalar
from .poly.polynomial import Polynomial
from .poly.scalar import GaussianRational, Mode
from .poly.system import Point, PolySystem


class InputError(ValueError):
    """Unreadable or malformed input; carries the file and line for diagnostics."""

    def __init__(self, path, message: str, line: int | None = None):
        self.path = str(path)
        self.line = line
        loc = f"{self.path}:{line}" if line is not None else self.path
        super().__init__(f"{loc}: {message}")


def _read_json(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(path, f"cannot read file ({exc.strerror})") from exc
    try:
        return json.loads(text), text
    except json.JSONDecodeError as exc:
        raise InputError(path, exc.msg, exc.lineno) from exc


def _line_of(text: str, needle: str) -> int | None:
    idx = text.find(json.dumps(needle)[1:-1])
    return text.count("\n", 0, idx) + 1 if idx >= 0 else None


# systems ------------------------------------------------------------------

def system_from_dict(doc: dict, mode: Mode | str | None = None) -> PolySystem:
    mode = Mode(mode or doc.get("mode", "approx"))
    return PolySystem.from_strings(doc["polys"], doc["vars"], mode)


def system_to_dict(F: PolySystem) -> dict:
    return {"vars": list(F.var_names), "mode": F.mode.value, "polys": F.to_strings()}


def load_system(path, mode: Mode | str | None = None) -> PolySystem:
    """Read a system document ``{"vars": [...], "mode": ..., "polys": [...]}``."""
    doc, text = _read_json(path)
    if not isinstance(doc, dict) or "vars" not in doc or "polys" not in doc:
        raise InputError(path, "system file needs 'vars' and 'polys' fields", 1)
    if not all(isinstance(v, str) for v in doc["vars"]) or not all(isinstance(p, str) for p in doc["polys"]):
        raise InputError(path, "'vars' and 'polys' must be lists of strings", 1)
    try:
        mode = Mode(mode or doc.get("mode", "approx"))
    except ValueError as exc:
        raise InputError(path, f"unknown mode {doc.get('mode')!r}", _line_of(text, "mode")) from exc
    polys = []
    for k, s in enumerate(doc["polys"]):
        try:
            polys.append(parse_polynomial(s, doc["vars"], mode))
        except PolySyntaxError as exc:
            raise InputError(path, f"polynomial {k}: {exc}", _line_of(text, s)) from exc
    try:
        return PolySystem(polys, doc["vars"])
    except ValueError as exc:
        raise InputError(path, str(exc)) from exc


def save_system(F: PolySystem, path) -> None:
    Path(path).write_text(json.dumps(system_to_dict(F), indent=2) + "\n")


# points -------------------------------------------------------------------

def point_to_json(x: Point) -> list:
    out = []
    for c in x:
        if isinstance(c, GaussianRational):
            out.append([str(c.re), str(c.im)])
        else:
            out.append([repr(c.real), repr(c.imag)])
    return out


def point_from_json(coords, mode: Mode) -> Point:
    vals = []
    for pair in coords:
        if isinstance(pair, (int, float, str)):
            pair = [pair, 0]
        if len(pair) != 2:
            raise ValueError(f"coordinate {pair!r} is not a [re, im] pair")
        re_, im_ = (str(v) for v in pair)
        if mode is Mode.EXACT:
            vals.append(GaussianRational(Fraction(re_), Fraction(im_)))
        else:
            vals.append(complex(float(Fraction(re_)) if "/" in re_ else float(re_),
                                float(Fraction(im_)) if "/" in im_ else float(im_)))
    return Point(tuple(vals), mode)


def load_points(path, mode: Mode | str = Mode.APPROX) -> List[Point]:
    doc, text = _read_json(path)
    mode = Mode(mode)
    if isinstance(doc, dict):
        doc = doc.get("points")
    if not isinstance(doc, list):
        raise InputError(path, "points file must be a list of points", 1)
    pts = []
    for k, p in enumerate(doc):
        try:
            pts.append(point_from_json(p, mode))
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise InputError(path, f"point {k}: {exc}") from exc
    return pts


def save_points(points: Sequence[Point], path) -> None:
    Path(path).write_text(json.dumps([point_to_json(p) for p in points], indent=2) + "\n")


def parse_point_text(text: str, mode: Mode | str = Mode.APPROX) -> Point:
    """Comma-separated constant expressions, e.g. ``"-1.61803, -1.27202*ii"``."""
    mode = Mode(mode)
    return Point(tuple(parse_scalar(part, mode) for part in text.split(",")), mode)


# reports ------------------------------------------------------------------

def _num(v):
    if isinstance(v, Fraction):
        return str(v)
    if v is None:
        return None
    v = float(v)
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    if math.isnan(v):
        return "nan"
    return v


def _coords(x: Point) -> list:
    out = []
    for c in x:
        if isinstance(c, GaussianRational):
            out.append([str(c.re), str(c.im)])
        else:
            out.append([_num(c.real), _num(c.imag)])
    return out


def box_to_json(box: IntervalBox) -> list:
    return [[[e.re.lo, e.re.hi], [e.im.lo, e.im.hi]] for e in box]


def report_to_dict(report: CertificationReport, compat: bool = False) -> dict:
    """Report document keyed like the original package's hash table."""
    interval = report.strategy is Strategy.INTERVAL_ARITHMETIC

    def entry(i):
        if compat:
            if interval and i in report.krawczyk_operators:
                return report.krawczyk_operators[i].format()
            return _coords(report.points[i])
        d = {"index": i, "point": _coords(report.points[i])}
        if i in report.evidence:
            d["evidence"] = report.evidence[i]
        if i in report.boxes and i in report.non_certified:
            d["box"] = box_to_json(report.boxes[i])
        return d

    doc = {
        "certifiedReal": [entry(i) for i in report.certified_real],
        "certifiedRegular": [entry(i) for i in report.certified_regular],
        "certifiedSingular": [entry(i) for i in report.certified_singular],
        "nonCertified": [entry(i) for i in report.non_certified],
    }
    if not interval and compat:
        # the original package printed alpha^2 (it works with squared constants)
        doc["alphaValues"] = [_num(c.squared()[0]) if c else "inf" for c in report.constants]
    elif not interval:
        doc["alphaValues"] = [_num(a) for a in report.alpha_values]
    if not (interval and compat):
        doc["certifiedDistinct"] = [entry(i) for i in report.certified_distinct]
    if interval and not compat:
        doc["krawczykOperators"] = {str(i): box_to_json(K)
                                    for i, K in sorted(report.krawczyk_operators.items())}
    if report.traces and not compat:
        doc["traces"] = {str(i): t.to_dict() for i, t in sorted(report.traces.items())}
    return doc


def dumps(doc) -> str:
    """Canonical serialization: sorted keys, two-space indent, trailing newline."""
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def constants_to_dict(c: AlphaConstants) -> dict:
    sq = c.squared()
    return {"alpha": _num(c.alpha), "beta": _num(c.beta), "gamma": _num(c.gamma_bound),
            "mu": _num(c.mu), "singularJacobian": c.singular_jacobian,
            "squared": {"alpha": _num(sq[0]), "beta": _num(sq[1]), "gamma": _num(sq[2])}}


# alphaCertified input files ------------------------------------------------

def _ac_number(v) -> str:
    if isinstance(v, Fraction):
        return str(v)
    return repr(float(v))


def _ac_parts(c):
    if isinstance(c, GaussianRational):
        return c.re, c.im
    return c.real, c.imag


def format_alphacertified_system(F: PolySystem) -> str:
    lines = [f"{F.num_vars} {len(F.polys)}", ""]
    for p in F.polys:
        lines.append(str(len(p.terms)))
        for m, c in p.terms.items():
            re_, im_ = _ac_parts(c)
            lines.append(" ".join(str(e) for e in m) + f" {_ac_number(re_)} {_ac_number(im_)}")
        lines.append("")
    return "\n".join(lines)


def format_alphacertified_points(points: Sequence[Point]) -> str:
    lines = [str(len(points)), ""]
    for x in points:
        for c in x:
            re_, im_ = _ac_parts(c)
            lines.append(f"{_ac_number(re_)} {_ac_number(im_)}")
        lines.append("")
    return "\n".join(lines)


def _ac_value(tok: str, mode: Mode):
    if mode is Mode.EXACT:
        return Fraction(tok)
    return float(Fraction(tok)) if "/" in tok else float(tok)


def parse_alphacertified_system(text: str, mode: Mode | str = Mode.APPROX,
                                var_names: Sequence[str] | None = None) -> PolySystem:
    mode = Mode(mode)
    toks = text.split()
    pos = 0

    def take():
        nonlocal pos
        pos += 1
        return toks[pos - 1]

    n, m = int(take()), int(take())
    polys = []
    for _ in range(m):
        terms = {}
        for _ in range(int(take())):
            mono = tuple(int(take()) for _ in range(n))
            re_, im_ = _ac_value(take(), mode), _ac_value(take(), mode)
            c = GaussianRational(re_, im_) if mode is Mode.EXACT else complex(re_, im_)
            terms[mono] = terms[mono] + c if mono in terms else c
        polys.append(Polynomial(n, terms, mode))
    return PolySystem(polys, var_names)


def parse_alphacertified_points(text: str, num_vars: int, mode: Mode | str = Mode.APPROX) -> List[Point]:
    mode = Mode(mode)
    toks = text.split()
    count = int(toks[0])
    vals = toks[1:]
    points = []
    for k in range(count):
        coords = []
        for j in range(num_vars):
            re_, im_ = (_ac_value(t, mode) for t in vals[2 * (k * num_vars + j):2 * (k * num_vars + j) + 2])
            coords.append(GaussianRational(re_, im_) if mode is Mode.EXACT else complex(re_, im_))
        points.append(Point(tuple(coords), mode))
    return points


def export_alphacertified(F: PolySystem, points: Sequence[Point], out_dir) -> tuple:
    """Write ``polySys`` and ``points`` input files for alphaCertified into ``out_dir``."""
    out = Path(out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
        if not os.access(out, os.W_OK):
            raise PermissionError(f"directory {out} is not writable")
        sys_path, pts_path = out / "polySys", out / "points"
        sys_path.write_text(format_alphacertified_system(F))
        pts_path.write_text(format_alphacertified_points(points))
    except OSError as exc:
        raise InputError(out, f"cannot write export files ({exc})") from exc
    return sys_path, pts_path
