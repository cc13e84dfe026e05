"""Command-line front-end.

Exit codes: 0 success, 1 usage error, 2 empty/invalid block, 3 internal
failure or failed check suite.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .cartan import AffineRank, RootVec
from .checks import run_suite
from .classify import (
    ClassifierConfig,
    UnsupportedConfigError,
    classify_block,
    classify_heckeB,
    classify_heckeD,
)
from .fock import Bipartition, FockContext, content, enumerate_standard, tableau_stats
from .gdim import dim_matrix, nonzero_idempotents
from .orbits import NotAWeightError, canonical_rep, dominant_reduce, is_weight

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_EMPTY = 2
EXIT_INTERNAL = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _context(args: argparse.Namespace) -> FockContext:
    rank = AffineRank(args.ell)
    return FockContext(rank, args.s, level=getattr(args, "level", 2))


def _parse_beta(text: str, rank: AffineRank) -> RootVec:
    try:
        coeffs = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise _UsageError(f"--beta must be comma-separated integers: {exc}") from exc
    if len(coeffs) != rank.e:
        raise _UsageError(
            f"--beta needs {rank.e} coefficients for ell={rank.ell}, got {len(coeffs)}"
        )
    return RootVec(rank, coeffs)


def _parse_shape(text: str) -> Bipartition:
    try:
        data = json.loads(text)
        return Bipartition.from_json(data)
    except (json.JSONDecodeError, ValueError, TypeError) as exc:
        raise _UsageError(f"malformed bipartition {text!r}: {exc}") from exc


def _beta_from_args(args: argparse.Namespace, ctx: FockContext) -> RootVec:
    if getattr(args, "from_bipartition", None):
        return content(ctx, _parse_shape(args.from_bipartition))
    if args.beta is None:
        raise _UsageError("either --beta or --from-bipartition is required")
    return _parse_beta(args.beta, ctx.rank)


def _config(args: argparse.Namespace) -> ClassifierConfig:
    try:
        return ClassifierConfig(
            char2=getattr(args, "char2", False),
            char_odd=getattr(args, "char_odd", False),
            lambda_is_sign=getattr(args, "lambda_sign", "true") == "true",
        )
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc


def _emit(args: argparse.Namespace, payload, human: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(human)


def _report_lines(report) -> str:
    lines = [f"type: {report.rep_type.tag}"]
    if report.canonical is not None:
        lines.append(f"canonical: {report.canonical}")
    if report.rep_type.structure is not None:
        b = report.rep_type.structure
        lines.append(f"brauer: {b.kind}, {b.description}")
    if report.quiver is not None:
        q = report.quiver
        lines.append(
            f"quiver bounds: loops={list(q.loops)} arrows={q.arrows} wild={q.wild}"
        )
    for note in report.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)


def cmd_classify(args: argparse.Namespace) -> int:
    ctx = _context(args)
    beta = _beta_from_args(args, ctx)
    cfg = _config(args)
    report = classify_block(ctx, beta, cfg)
    _emit(args, report.to_json(), _report_lines(report))
    return EXIT_OK


def cmd_dims(args: argparse.Namespace) -> int:
    ctx = _context(args)
    beta = _beta_from_args(args, ctx)
    if args.all:
        idems = nonzero_idempotents(ctx, beta)
        if not idems:
            print(f"no nonzero idempotents: {beta} labels an empty block")
            return EXIT_EMPTY
    elif args.idems:
        idems = []
        for chunk in args.idems.split(";"):
            try:
                idems.append(tuple(int(x) for x in chunk.split(",")))
            except ValueError as exc:
                raise _UsageError(f"malformed --idems entry {chunk!r}") from exc
    else:
        raise _UsageError("either --idems or --all is required")
    matrix = dim_matrix(ctx, beta, idems)
    _emit(args, matrix.to_json(), str(matrix))
    return EXIT_OK


def cmd_orbit(args: argparse.Namespace) -> int:
    ctx = _context(args)
    beta = _beta_from_args(args, ctx)
    plus = dominant_reduce(ctx, beta)
    weight = is_weight(ctx, beta)
    payload = {
        "beta": beta.to_json(),
        "dominant_reduction": plus.to_json(),
        "is_weight": weight,
        "canonical": None,
    }
    lines = [f"dominant reduction: {plus}", f"weight of the module: {weight}"]
    if weight:
        rep = canonical_rep(ctx, beta)
        payload["canonical"] = rep.to_json()
        lines.append(f"canonical: {rep}")
    else:
        lines.append("canonical: none (empty block)")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_blocks(args: argparse.Namespace) -> int:
    cfg = _config(args)
    if args.typeD:
        reports = classify_heckeD(args.e, args.n, cfg)
    else:
        if args.separated and args.s is not None:
            raise _UsageError("--s and --separated are mutually exclusive")
        if not args.separated and args.s is None:
            raise _UsageError("either --s or --separated is required")
        reports = classify_heckeB(args.e, None if args.separated else args.s, args.n, cfg)
    if getattr(args, "json", False):
        print(json.dumps([r.to_json() for r in reports], indent=2, sort_keys=True))
        return EXIT_OK
    for report in reports:
        if "beta" in report.input:
            label = f"beta={report.input['beta']}"
        else:
            label = f"beta1={report.input['beta1']} beta2={report.input['beta2']}"
        canon = f" canonical={report.canonical}" if report.canonical else ""
        print(f"{label} type={report.rep_type.tag}{canon}")
    return EXIT_OK


def cmd_tableaux(args: argparse.Namespace) -> int:
    ctx = _context(args)
    shape = _parse_shape(args.shape)
    rows = []
    for idx, tab in enumerate(enumerate_standard(ctx, shape)):
        if args.limit is not None and idx >= args.limit:
            break
        degree, residues = tableau_stats(ctx, tab)
        rows.append(
            {
                "growth": tab.to_json()["growth"],
                "residues": list(residues),
                "degree": degree,
            }
        )
    if getattr(args, "json", False):
        print(json.dumps(rows, indent=2, sort_keys=True))
    else:
        for idx, row in enumerate(rows):
            growth = " ".join(
                f"({c},{r},{col})" for c, r, col in row["growth"]
            )
            residues = ",".join(str(x) for x in row["residues"])
            print(f"T{idx}: degree={row['degree']} residues=({residues}) growth={growth}")
        print(f"total: {len(rows)}")
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    results, ok = run_suite(args.suite)
    for result in results:
        print(result.line())
    return EXIT_OK if ok else EXIT_INTERNAL


def _add_context_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--ell", type=int, required=True, help="number of vertices minus one")
    sub.add_argument("--s", type=int, default=0, help="second charge (default 0)")
    sub.add_argument("--level", type=int, default=2, choices=(1, 2))
    sub.add_argument("--beta", type=str, default=None, help="comma-separated coefficients")
    sub.add_argument(
        "--from-bipartition",
        type=str,
        default=None,
        help='compute the content of a bipartition, e.g. "[[2,1],[1]]"',
    )
    sub.add_argument("--json", action="store_true", help="machine-readable output")


def _add_field_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--char2", action="store_true", help="characteristic two")
    sub.add_argument("--char-odd", dest="char_odd", action="store_true")
    sub.add_argument(
        "--lambda-sign",
        dest="lambda_sign",
        choices=("true", "false"),
        default="true",
        help="whether the deformation scalar equals the critical sign",
    )


def _build_parser() -> _Parser:
    parser = _Parser(prog="heckeblocks", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    p_classify = subs.add_parser("classify", help="classify one block")
    _add_context_flags(p_classify)
    _add_field_flags(p_classify)
    p_classify.set_defaults(handler=cmd_classify)

    p_dims = subs.add_parser("dims", help="graded dimension matrix")
    _add_context_flags(p_dims)
    p_dims.add_argument("--idems", type=str, default=None, help='words "0,1;1,0"')
    p_dims.add_argument("--all", action="store_true", help="use all idempotent classes")
    p_dims.set_defaults(handler=cmd_dims)

    p_orbit = subs.add_parser("orbit", help="canonical orbit data of a block")
    _add_context_flags(p_orbit)
    p_orbit.set_defaults(handler=cmd_orbit)

    p_blocks = subs.add_parser("blocks", help="classify all blocks of a Hecke algebra")
    p_blocks.add_argument("--e", type=int, required=True, help="quantum characteristic")
    p_blocks.add_argument("--n", type=int, required=True, help="rank")
    p_blocks.add_argument("--s", type=int, default=None)
    p_blocks.add_argument("--separated", action="store_true")
    p_blocks.add_argument("--typeD", action="store_true")
    p_blocks.add_argument("--json", action="store_true")
    _add_field_flags(p_blocks)
    p_blocks.set_defaults(handler=cmd_blocks)

    p_tab = subs.add_parser("tableaux", help="standard bitableaux of a shape")
    _add_context_flags(p_tab)
    p_tab.add_argument("--shape", type=str, required=True, help='e.g. "[[2,1],[1]]"')
    p_tab.add_argument("--limit", type=int, default=None)
    p_tab.set_defaults(handler=cmd_tableaux)

    p_check = subs.add_parser("check", help="run a verification suite")
    p_check.add_argument(
        "--suite",
        choices=("paper-fixtures", "oracle"),
        default="paper-fixtures",
    )
    p_check.set_defaults(handler=cmd_check)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotAWeightError as exc:
        print(f"empty block: {exc}", file=sys.stderr)
        return EXIT_EMPTY
    except UnsupportedConfigError as exc:
        print(f"unsupported configuration: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
