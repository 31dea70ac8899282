"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 file-format error, 3 domain error,
4 a verification or invariant check came back negative.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import __version__
from ._accel import backend_name
from .canonical import build_canonical
from .eigen import eigenvalues, eigenvector_space, eigenvector_variety, eigenvector_variety_oracle, eigen_reports
from .errors import DomainError, FormatError, PencilError
from .field import FieldSpec
from .formats import (
    format_pencil,
    format_points,
    format_subspace,
    parse_pencil,
    parse_quadrics,
)
from .projective import ProjectivePoint, parse_point_list, points_from_rows, subspace_points
from .realize import realize_variety, squareize, verify_realization
from .reflect import build_preprojectives, preprojective_dimvecs, sigma_iterate, tits_form
from .suites import SUITES

EXIT_OK, EXIT_USAGE, EXIT_FORMAT, EXIT_DOMAIN, EXIT_CHECK = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(text: str, path: str | None, default=None) -> None:
    if path is None or path == "-":
        (default or sys.stdout).write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except FormatError as exc:
        raise UsageError(str(exc)) from None


def _source(p, text: str | None):
    if text is None or text.strip().lower() == "all":
        return None
    try:
        return parse_point_list(text, p.field)
    except PencilError as exc:
        raise UsageError(f"bad eigenvalue list: {exc}") from None


def _meta(args, started: float) -> str:
    if args.no_meta:
        return ""
    return f"# backend={backend_name()} threads={args.threads} elapsed={time.perf_counter() - started:.3f}s\n"


# ---------------------------------------------------------------------------
# commands


def cmd_canonical(args) -> int:
    C = build_canonical(args.n, _field(args.field))
    _write(format_pencil(C.pencil), args.out)
    return EXIT_OK


def cmd_realize(args, started) -> int:
    n, f, quads = parse_quadrics(_read(args.quadrics))
    r = realize_variety(quads, f, n=n)
    _write(format_pencil(r.pencil), args.out)
    lines = [
        f"realize n={n} m={len(quads)} field={f}",
        f"pencil dim=({r.pencil.a},{r.pencil.b}) reduced=yes",
    ]
    status = EXIT_OK
    if f.p is None:
        lines.append("verification=skipped (rational field)")
    else:
        rep = verify_realization(r, args.threads)
        lines.append(rep.summary())
        if args.eigenvalues_out:
            _write(format_points(rep.eigenvalue_set, n, f), args.eigenvalues_out)
        if args.points_out:
            _write(format_points(rep.point_set, n, f), args.points_out)
        if not rep.passed:
            status = EXIT_CHECK
    _write("\n".join(lines) + "\n" + _meta(args, started), args.report, default=sys.stderr)
    return status


def cmd_eigen(args) -> int:
    p = parse_pencil(_read(args.pencil))
    src = _source(p, args.eigenvalues)
    if args.values:
        pts = eigenvalues(p, src, args.threads)
        _write(format_points(pts, p.n, p.field), args.points_out)
        return EXIT_OK
    if src is None:
        pts = eigenvector_variety(p, args.threads)
    else:
        pts = []
        for rep in eigen_reports(p, src, args.threads):
            U = rep.eigenspace
            if p.field.p is not None:
                pts += points_from_rows(subspace_points(U.basis.data, p.field), p.field)
            elif U.dim == 1:
                pts.append(ProjectivePoint(U.basis.data[0], p.field))
            else:
                raise DomainError(f"eigenspace for {rep.eigenvalue} has dimension {U.dim}; "
                                  "its points cannot be listed over Q")
    _write(format_points(pts, p.a, p.field), args.points_out)
    return EXIT_OK


def cmd_eigenspace(args) -> int:
    p = parse_pencil(_read(args.pencil))
    lams = _source(p, args.lam)
    if not lams or len(lams) != 1:
        raise UsageError("--lambda takes exactly one coordinate tuple")
    _write(format_subspace(eigenvector_space(p, lams[0])), args.out)
    return EXIT_OK


def cmd_squareize(args) -> int:
    p = parse_pencil(_read(args.pencil))
    _write(format_pencil(squareize(p, _source(p, args.eigenvalues), args.threads)), args.out)
    return EXIT_OK


def cmd_reflect(args) -> int:
    p = parse_pencil(_read(args.pencil))
    if args.t < 0:
        raise UsageError("--t must be >= 0")
    out, report = sigma_iterate(p, args.t, inverse=args.inverse, e0_track=args.e0_track,
                                threads=args.threads)
    _write(format_pencil(out), args.out)
    _write(report.format(), args.report, default=sys.stderr)
    return EXIT_OK


def cmd_preprojective(args) -> int:
    f = _field(args.field)
    if args.n < 2:
        raise DomainError("preprojective series needs n >= 2")
    dvs = preprojective_dimvecs(args.n, args.count)
    built = build_preprojectives(args.n, args.count, f)
    lines = [f"preprojective n={args.n} count={args.count} field={f}"]
    all_ok = True
    for k, (dv, p) in enumerate(zip(dvs, built)):
        if f.p is None:
            empty = "skipped"
        else:
            empty = "yes" if not eigenvector_variety(p, args.threads) else "no"
        all_ok &= p.dim == dv and empty != "no"
        lines.append(f"k={k} dim={dv} form={tits_form(dv, args.n)} built={p.dim} empty={empty}")
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK if all_ok else EXIT_CHECK


def cmd_verify(args, started) -> int:
    p = parse_pencil(_read(args.pencil))
    primary = eigenvector_variety(p, args.threads)
    oracle = eigenvector_variety_oracle(p, threads=args.threads)
    verdict = "match" if primary == oracle else "mismatch"
    text = f"verify dim=({p.a},{p.b}) n={p.n} field={p.field}\nprimary={len(primary)} oracle={len(oracle)} result={verdict}\n"
    _write(text + _meta(args, started), args.out)
    return EXIT_OK if primary == oracle else EXIT_CHECK


def cmd_check(args, started) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if any(n not in SUITES for n in names):
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)} or all")
    lines = []
    failed = 0
    for name in names:
        kwargs = {"seed": args.seed, "threads": args.threads}
        if args.count is not None:
            kwargs["count"] = args.count
        results = list(SUITES[name](**kwargs))
        lines += [r.line() for r in results]
        ok = sum(r.passed for r in results)
        failed += len(results) - ok
        lines.append(f"suite={name} summary passed={ok}/{len(results)}")
    _write("\n".join(lines) + "\n" + _meta(args, started), args.out)
    return EXIT_OK if failed == 0 else EXIT_CHECK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--threads", type=int, default=1, help="worker threads for enumeration loops")
    common.add_argument("--no-meta", action="store_true", help="omit timing/backend lines from reports")

    parser = _Parser(prog="pencilkit", description="Exact matrix pencil toolkit", parents=[common])
    parser.add_argument("--version", action="version", version=f"pencilkit {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    sp = sub.add_parser("canonical", parents=[common], help="canonical bristled module C")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--field", required=True)
    sp.add_argument("--out")

    sp = sub.add_parser("realize", parents=[common], help="quadrics -> reduced pencil")
    sp.add_argument("--quadrics", required=True)
    sp.add_argument("--out")
    sp.add_argument("--report")
    sp.add_argument("--points-out", help="zero set of the quadrics (points format)")
    sp.add_argument("--eigenvalues-out", help="eigenvalue set of the pencil (points format)")

    sp = sub.add_parser("eigen", parents=[common], help="eigenvector variety or eigenvalue set")
    sp.add_argument("--pencil", required=True)
    sp.add_argument("--eigenvalues", help="'all' or semicolon-separated tuples, e.g. '1,0;1,1'")
    sp.add_argument("--values", action="store_true", help="list eigenvalues instead of eigenvectors")
    sp.add_argument("--points-out")

    sp = sub.add_parser("eigenspace", parents=[common], help="eigenvector space for one eigenvalue")
    sp.add_argument("--pencil", required=True)
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--out")

    sp = sub.add_parser("squareize", parents=[common], help="square pencil with the same eigenvalues")
    sp.add_argument("--pencil", required=True)
    sp.add_argument("--eigenvalues")
    sp.add_argument("--out")

    sp = sub.add_parser("reflect", parents=[common], help="iterate the reflection functor")
    sp.add_argument("--pencil", required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--inverse", action="store_true")
    sp.add_argument("--e0-track", action="store_true")
    sp.add_argument("--out")
    sp.add_argument("--report")

    sp = sub.add_parser("preprojective", parents=[common], help="preprojective series table")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--count", type=int, required=True)
    sp.add_argument("--field", required=True)
    sp.add_argument("--out")

    sp = sub.add_parser("verify", parents=[common], help="compare variety against the brute-force oracle")
    sp.add_argument("--pencil", required=True)
    sp.add_argument("--out")

    sp = sub.add_parser("check", parents=[common], help="run a named invariant suite")
    sp.add_argument("--suite", required=True, help=f"one of {', '.join(SUITES)}, or all")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int)
    sp.add_argument("--out")
    return parser


_TIMED = {"realize": cmd_realize, "verify": cmd_verify, "check": cmd_check}
_PLAIN = {
    "canonical": cmd_canonical,
    "eigen": cmd_eigen,
    "eigenspace": cmd_eigenspace,
    "squareize": cmd_squareize,
    "reflect": cmd_reflect,
    "preprojective": cmd_preprojective,
}


def main(argv=None) -> int:
    started = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("pencilkit: a command is required (try --help)")
        if args.threads < 1:
            raise UsageError("--threads must be >= 1")
        if args.command in _TIMED:
            return _TIMED[args.command](args, started)
        return _PLAIN[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FormatError as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except PencilError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
