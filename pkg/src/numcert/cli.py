"""Command-line front end: ``numcert <command> ...``."""

from __future__ import annotations

import argparse
import dataclasses
import sys
import time
from pathlib import Path
from typing import List, Optional

from . import __version__
from .alpha import compute_constants
from .certify import CertifyOptions, certify_solutions
from .deflation import Strategy, certify_singular
from .interval.krawczyk import krawczyk_check
from .interval.linalg import parse_box
from .io import (InputError, constants_to_dict, dumps, export_alphacertified, load_points,
                 load_system, parse_point_text, report_to_dict)
from .poly.parse import PolySyntaxError
from .poly.scalar import Mode

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


@dataclasses.dataclass
class RunManifest:
    command: str
    inputs: List[str]
    options: dict
    version: str
    rng_seed: Optional[int]
    duration_seconds: float = 0.0

    def to_dict(self) -> dict:
        return {"command": self.command, "inputs": self.inputs, "options": self.options,
                "version": self.version, "rngSeed": self.rng_seed,
                "durationSeconds": self.duration_seconds}


def _options_dict(opts: CertifyOptions) -> dict:
    d = dataclasses.asdict(opts)
    d["strategy"] = opts.strategy.value
    d["sqrt_slack"] = str(opts.sqrt_slack)
    return d


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _mode(args) -> Optional[Mode]:
    return Mode.EXACT if getattr(args, "exact", False) else None


def _point_arg(text: str, F):
    try:
        return F.check_point(parse_point_text(text, F.mode))
    except (PolySyntaxError, ValueError) as exc:
        raise InputError("<point>", str(exc)) from exc


def _cmd_certify(args) -> int:
    F = load_system(args.system, _mode(args))
    points = load_points(args.points, F.mode)
    if args.strategy == "alphaCertified":
        sys_path, pts_path = export_alphacertified(F, points, args.export_dir)
        print(f"alphaCertified is an external program; wrote its input files {sys_path} and "
              f"{pts_path}. Run it on them to certify.")
        return EXIT_OK
    try:
        points = [F.check_point(p) for p in points]
        opts = CertifyOptions(strategy=args.strategy, rng_seed=args.seed,
                              max_deflation_iterations=args.max_iterations,
                              residual_tol=args.residual_tol, inflation=args.inflation,
                              refinement_steps=args.refine, compat_boolean_output=args.compat_bool)
    except ValueError as exc:
        raise InputError(args.points, str(exc)) from exc
    start = time.perf_counter()
    report = certify_solutions(F, points, opts)
    manifest = RunManifest("certify", [str(args.system), str(args.points)], _options_dict(opts),
                           __version__, opts.rng_seed, time.perf_counter() - start)
    doc = report_to_dict(report, compat=opts.compat_boolean_output)
    doc["manifest"] = manifest.to_dict()
    _emit(dumps(doc), args.out)
    return EXIT_OK if not report.non_certified else EXIT_FAIL


def _cmd_constants(args) -> int:
    F = load_system(args.system, _mode(args))
    x = _point_arg(args.point, F)
    c = compute_constants(F, x)
    if args.json:
        _emit(dumps(constants_to_dict(c)), args.out)
    else:
        triple = c.squared() if args.squared else c.as_tuple()
        _emit("(" + ", ".join(str(v) for v in triple) + ")\n", args.out)
    return EXIT_OK


def _cmd_krawczyk(args) -> int:
    F = load_system(args.system)
    if "[" in args.target:
        try:
            target = parse_box(args.target)
        except ValueError as exc:
            raise InputError("<target>", str(exc)) from exc
        if len(target) != F.num_vars:
            raise InputError("<target>", f"box has {len(target)} entries, expected {F.num_vars}")
    else:
        target = _point_arg(args.target, F)
    real_sys = F.has_real_coefficients()
    chk = krawczyk_check(F, target, realness=real_sys, inflation=args.inflation)
    lines = [f"box: {chk.box.format() if chk.box is not None else 'none'}",
             f"krawczykOperator: {chk.K.format() if chk.K is not None else 'none'}",
             f"krawczykTest: {str(chk.passed).lower()}"]
    if real_sys:
        lines.append(f"krawczykRealnessTest: {str(bool(chk.real)).lower()}")
    if chk.diagnostic:
        lines.append(f"diagnostic: {chk.diagnostic}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if chk.passed else EXIT_FAIL


def _cmd_certify_singular(args) -> int:
    F = load_system(args.system)
    x = _point_arg(args.point, F)
    strategy = Strategy.parse(args.strategy)
    try:
        ok, trace = certify_singular(F, x, strategy, iterations=args.iterations,
                                     max_iterations=args.max_iterations, rng_seed=args.seed,
                                     residual_tol=args.residual_tol, inflation=args.inflation)
    except ValueError as exc:
        raise InputError("<options>", str(exc)) from exc
    _emit(dumps({"verdict": ok, "trace": trace.to_dict()}), args.out)
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_export(args) -> int:
    F = load_system(args.system, _mode(args))
    points = load_points(args.points, F.mode)
    sys_path, pts_path = export_alphacertified(F, points, args.out_dir)
    print(f"wrote {sys_path}\nwrote {pts_path}")
    return EXIT_OK


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _nonneg_int(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="numcert", description=__doc__)
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, seed=True):
        sp.add_argument("--out", help="write output to FILE instead of stdout")
        sp.add_argument("--inflation", type=_positive_float, default=4.0,
                        help="box radius as a multiple of the Newton step")
        if seed:
            sp.add_argument("--seed", type=int, default=0, help="seed for deflation directions")
            sp.add_argument("--max-iterations", type=_positive_int, default=10,
                            help="deflation level cap")
            sp.add_argument("--residual-tol", type=_positive_float, default=None,
                            help="residual gate for singular candidates")

    c = sub.add_parser("certify", help="certify a list of points")
    c.add_argument("system")
    c.add_argument("points")
    c.add_argument("--strategy", choices=["alpha", "interval", "alphaTheory",
                                          "intervalArithmetic", "alphaCertified"],
                   default="alpha")
    c.add_argument("--exact", action="store_true", help="exact rational arithmetic")
    c.add_argument("--refine", type=_nonneg_int, default=0, help="Newton steps before certifying")
    c.add_argument("--compat-bool", action="store_true",
                   help="report layout of the original package")
    c.add_argument("--export-dir", default="alphacertified",
                   help="output directory for --strategy alphaCertified")
    common(c)
    c.set_defaults(func=_cmd_certify)

    k = sub.add_parser("constants", help="print (alpha, beta, gamma) at a point")
    k.add_argument("system")
    k.add_argument("point", help='coordinates, e.g. "0.5, 1.2 - 3*ii"')
    k.add_argument("--exact", action="store_true")
    k.add_argument("--squared", action="store_true",
                   help="print (alpha^2, beta^2, gamma^2) like the original package")
    k.add_argument("--json", action="store_true")
    k.add_argument("--out")
    k.set_defaults(func=_cmd_constants)

    w = sub.add_parser("krawczyk", help="Krawczyk operator and tests")
    w.add_argument("system")
    w.add_argument("target", help='point, or box "[lo,hi]+[lo,hi]*ii; ..."')
    common(w, seed=False)
    w.set_defaults(func=_cmd_krawczyk)

    s = sub.add_parser("certify-singular", help="soft certification of a singular point")
    s.add_argument("system")
    s.add_argument("point")
    s.add_argument("--iterations", type=_positive_int, default=None,
                   help="deflate exactly N times, then certify once")
    s.add_argument("--strategy", choices=["alpha", "interval", "alphaTheory",
                                          "intervalArithmetic"], default="alpha")
    common(s)
    s.set_defaults(func=_cmd_certify_singular)

    e = sub.add_parser("export-alphacertified", help="write alphaCertified input files")
    e.add_argument("system")
    e.add_argument("points")
    e.add_argument("out_dir")
    e.add_argument("--exact", action="store_true")
    e.set_defaults(func=_cmd_export)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"numcert: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
