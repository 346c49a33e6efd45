"""Command-line interface.

Exit codes: 0 ok, 1 parse or usage error, 2 invalid surface or spline,
3 failed check (validation report, spline check, formula/oracle mismatch),
4 degree too low for the requested construction.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .builder import BUILTINS, builtin_surface
from .complex import ComplexError, edge_slots, topology_report
from .formats import (ParseError, ValidationFailed, dump_surface, load_spline, load_surface,
                      write_catalog)
from .gluing import G1Surface, GluingError, validate_g1
from .oracle import dimension_oracle
from .splinespace import (DegreeMismatch, DegreeTooLow, HalfIntegerResult, assemble_basis,
                          dimension_formula, realize, verify_spline)

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_CHECK, EXIT_DEGREE = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _read(path: Optional[str]) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _surface(path: Optional[str]) -> G1Surface:
    return load_surface(_read(path))


def _require_valid(gs: G1Surface):
    rep = validate_g1(gs)
    if not rep.ok:
        raise ValidationFailed("surface fails the G1 checks: " + "; ".join(rep.failures()))


def _emit(text: str, out: Optional[str]):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _edge_name(gs: G1Surface, i: int) -> str:
    s = gs.surface
    e = s.gluings[i]
    p = s.polygons[e.faceA]
    if p.labels:
        a, b = edge_slots(p.kind, e.edgeA)
        return f"{p.labels[a]}{p.labels[b]}"
    return f"#{i}"


def cmd_validate(args) -> int:
    gs = _surface(args.surface)
    s = gs.surface
    top = topology_report(s)
    print(f"surface {gs.name or '(unnamed)'}: {len(s.polygons)} polygons, "
          f"{len(s.gluings)} interior edges, {len(s.fans)} vertices")
    genus = "n/a" if top.genus is None else top.genus
    print(f"topology: euler {top.eulerCharacteristic}, orientable {top.orientable}, "
          f"genus {genus}, boundary components {top.boundaryComponents}")
    rep = validate_g1(gs)
    for e in rep.edges:
        status = "ok" if e.ok else "FAIL"
        print(f"edge {_edge_name(gs, e.edge)}: {status} (coprime {e.coprime}, "
              f"a(0..1) nonzero {e.a_nonvanishing}, gamma < 0 {e.gamma_negative})")
    for v in rep.vertices:
        status = "ok" if v.ok else "FAIL"
        line = (f"vertex {v.label}: {status} (valency {v.valency}, "
                f"{'boundary' if v.isBoundary else 'interior'}, crossing {v.isCrossing}, "
                f"cycle {v.cycleMatrixOK}, sectors {v.sectorOK}, betas {v.qbetasOK}, "
                f"crossing derivatives {v.crossingDerivativeOK}")
        if v.H is not None:
            line += f", H1 {v.H[0]}, H2 {v.H[1]}"
        print(line + ")")
    print("result: " + ("PASS" if rep.ok else "FAIL"))
    return EXIT_OK if rep.ok else EXIT_CHECK


def cmd_dim(args) -> int:
    gs = _surface(args.surface)
    _require_valid(gs)
    k = args.degree
    mode = args.mode or "both"
    fr = oracle = None
    if mode in ("formula", "both"):
        fr = dimension_formula(gs, k)
        note = "" if fr.valid else f" ({fr.caveat()})"
        print(f"formula {fr.value}{note}")
    if mode in ("oracle", "both"):
        oracle = dimension_oracle(gs, k)
        print(f"oracle {oracle}")
    if fr is not None and oracle is not None and fr.valid and fr.value != oracle:
        print(f"mismatch: formula {fr.value} != oracle {oracle}", file=sys.stderr)
        return EXIT_CHECK
    return EXIT_OK


def cmd_basis(args) -> int:
    gs = _surface(args.surface)
    _require_valid(gs)
    cat = assemble_basis(gs, args.degree)
    path = write_catalog(cat, Path(args.out))
    counts = ", ".join(f"{t} {cat.count(t)}" for t in ("E1", "E2", "E3", "E4", "oracle"))
    print(f"{len(cat)} splines ({counts}); manifest {path}")
    return EXIT_OK if cat.complete else EXIT_CHECK


def cmd_check(args) -> int:
    gs = _surface(args.surface)
    sp = load_spline(_read(args.spline), gs)
    res = verify_spline(gs, sp)
    for r in res.failures():
        kind = "C0" if r.c0 else "G1"
        print(f"edge {_edge_name(gs, r.edge)}: {kind} residual nonzero")
    print("result: " + ("PASS" if res.ok else "FAIL"))
    return EXIT_OK if res.ok else EXIT_CHECK


def cmd_realize(args) -> int:
    gs = _surface(args.surface)
    coords = [load_spline(_read(p), gs) for p in (args.sx, args.sy, args.sz)]
    mesh = realize(gs, *coords, n=args.samples)
    _emit(mesh.to_obj(), args.out)
    return EXIT_OK


def cmd_example(args) -> int:
    if args.name not in BUILTINS:
        raise ParseError(f"unknown example {args.name!r}; choose from {', '.join(sorted(BUILTINS))}")
    _emit(dump_surface(builtin_surface(args.name)), args.out)
    return EXIT_OK


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="g1surf", description="Rational G1 polygonal surfaces and their spline spaces.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("validate", help="run the gluing compatibility checks")
    v.add_argument("surface", nargs="?", help="surface file, '-' or omitted for stdin")
    v.set_defaults(run=cmd_validate)

    d = sub.add_parser("dim", help="dimension of the spline space")
    d.add_argument("surface", nargs="?")
    d.add_argument("--degree", "-k", type=_positive, required=True)
    g = d.add_mutually_exclusive_group()
    for m in ("formula", "oracle", "both"):
        g.add_argument(f"--{m}", dest="mode", action="store_const", const=m)
    d.set_defaults(run=cmd_dim)

    b = sub.add_parser("basis", help="write an explicit spline basis")
    b.add_argument("surface", nargs="?")
    b.add_argument("--degree", "-k", type=_positive, required=True)
    b.add_argument("--out", required=True, help="output directory")
    b.set_defaults(run=cmd_basis)

    c = sub.add_parser("check", help="verify that a spline file is G1 on a surface")
    c.add_argument("surface")
    c.add_argument("spline")
    c.set_defaults(run=cmd_check)

    r = sub.add_parser("realize", help="sample three coordinate splines into an OBJ mesh")
    r.add_argument("surface")
    r.add_argument("sx")
    r.add_argument("sy")
    r.add_argument("sz")
    r.add_argument("--samples", type=_positive, default=8)
    r.add_argument("--out")
    r.set_defaults(run=cmd_realize)

    e = sub.add_parser("example", help="emit a built-in surface")
    e.add_argument("name")
    e.add_argument("--out")
    e.set_defaults(run=cmd_example)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValidationFailed, ComplexError, GluingError, DegreeMismatch, HalfIntegerResult) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except DegreeTooLow as exc:
        print(f"degree too low: {exc}", file=sys.stderr)
        return EXIT_DEGREE


if __name__ == "__main__":
    sys.exit(main())
