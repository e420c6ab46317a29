"""Command-line front end.

Subcommands: index, family, enumerate, census, normalize, verify.
All certified paths are exact: lambda is parsed as 'p/q' or an integer
(floats rejected), outputs are written atomically (temp file + rename),
and repeated sequential runs with identical flags are byte-identical.
Wall-clock timings are therefore left out of reports unless --timings
is passed.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

from . import __version__
from .canonical import canonical_code
from .census_algebra import (
    FreeCensusVarsD3,
    FreeCensusVarsD4,
    check_solved_forms,
    solve_census_d3,
    solve_census_d4,
)
from .enumeration import DEFAULT_ORDER_GUARD, EnumSpec, enumerate_trees
from .errors import GrmTreesError
from .families import FAMILY_KINDS, FamilySpec
from .indices import grm, m1, m2, parse_rational
from .transforms import normalize
from .trees import census, format_edge_list, parse_edge_list
from .verify import DEFAULT_LAMBDAS_21, THEOREMS, verify

OUT_DIR_ENV = "GRMTREES_OUT"


class UsageError(Exception):
    pass


def _resolve_out(path_str: str | None) -> Path | None:
    """Resolve --out against the default output directory env var."""
    if path_str is None:
        return None
    path = Path(path_str)
    base = os.environ.get(OUT_DIR_ENV)
    if base and not path.is_absolute():
        path = Path(base) / path
    return path


def _write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=str(path.parent), prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        _write_atomic(out, text)


def _rational_flag(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except GrmTreesError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grmtrees",
        description="Exact GRM index computation and extremal-tree verification on trees.",
    )
    parser.add_argument("--version", action="version", version=f"grmtrees {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_index = sub.add_parser("index", help="evaluate GRM/M1/M2 of an edge-list file")
    p_index.add_argument("--tree", required=True, help="edge-list file ('u v' per line)")
    p_index.add_argument(
        "--lambda", dest="lambdas", metavar="P/Q", type=_rational_flag,
        action="append", required=True,
        help="exact rational lambda; repeatable (use --lambda=-1/2 for negatives)",
    )
    p_index.add_argument("--format", choices=("text", "json"), default="text")
    p_index.add_argument("--out", default=None)

    p_family = sub.add_parser("family", help="emit an extremal family as edge lists")
    p_family.add_argument("--kind", required=True, help=f"one of {', '.join(FAMILY_KINDS)}")
    p_family.add_argument("--k", type=int, default=None)
    p_family.add_argument("--n", type=int, default=None)
    p_family.add_argument("--delta", type=int, default=None)
    p_family.add_argument("--delta2", type=int, default=None)
    p_family.add_argument("--emit", choices=("edgelist", "code", "census"), default="edgelist")
    p_family.add_argument("--out", default=None, help="output directory (edgelist) or file")

    p_enum = sub.add_parser("enumerate", help="enumerate unlabeled trees")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--max-deg", type=int, default=None)
    p_enum.add_argument("--exact-deg", action="store_true",
                        help="require max degree exactly --max-deg")
    p_enum.add_argument("--emit", choices=("edgelist", "code", "census"), default="code")
    p_enum.add_argument("--out", default=None)
    p_enum.add_argument("--guard", type=int, default=DEFAULT_ORDER_GUARD,
                        help="order guard override")

    p_census = sub.add_parser("census", help="solve a census system from free variables")
    p_census.add_argument("--delta", type=int, choices=(3, 4), required=True)
    p_census.add_argument("--n", type=int, required=True)
    p_census.add_argument("--n3", type=int, default=0)
    p_census.add_argument("--m22", type=int, default=0)
    p_census.add_argument("--m23", type=int, default=0)
    p_census.add_argument("--m12", type=int, default=0, help="max degree 4 only")
    p_census.add_argument("--m13", type=int, default=0, help="max degree 4 only")
    p_census.add_argument("--m34", type=int, default=0, help="max degree 4 only")
    p_census.add_argument("--m44", type=int, default=0, help="max degree 4 only")
    p_census.add_argument("--format", choices=("table", "json"), default="table")
    p_census.add_argument("--out", default=None)

    p_norm = sub.add_parser("normalize", help="run the shrinking transformations, trace as JSON lines")
    p_norm.add_argument("--tree", required=True)
    p_norm.add_argument("--out", default=None)

    p_verify = sub.add_parser("verify", help="certify the minimality results by enumeration")
    p_verify.add_argument("--theorem", choices=THEOREMS + ("all",), required=True)
    p_verify.add_argument("--n-min", type=int, default=None)
    p_verify.add_argument("--n-max", type=int, default=None)
    p_verify.add_argument(
        "--lambda", dest="lambdas", metavar="P/Q", type=_rational_flag, action="append",
        default=None, help="lambda set for theorem 2.1 (repeatable)",
    )
    p_verify.add_argument("--format", choices=("json", "csv", "md"), default="json")
    p_verify.add_argument("--out", default=None)
    p_verify.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                          help="parallel cells; 1 is the determinism reference")
    p_verify.add_argument("--guard", type=int, default=DEFAULT_ORDER_GUARD)
    p_verify.add_argument("--timings", action="store_true",
                          help="include wall-clock times in the report")
    return parser


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_index(args) -> int:
    tree = parse_edge_list(Path(args.tree).read_text())
    rows = [
        {"lambda": str(lam), "grm": str(grm(tree, lam))}
        for lam in args.lambdas
    ]
    if args.format == "json":
        payload = {
            "tool": "grmtrees",
            "version": __version__,
            "tree": args.tree,
            "n": tree.order,
            "max_degree": max(tree.degrees()),
            "m1": str(m1(tree)),
            "m2": str(m2(tree)),
            "values": rows,
        }
        _emit(json.dumps(payload, indent=2) + "\n", _resolve_out(args.out))
    else:
        if len(rows) == 1:
            text = rows[0]["grm"] + "\n"
        else:
            text = "".join(f"{r['lambda']}\t{r['grm']}\n" for r in rows)
        _emit(text, _resolve_out(args.out))
    return 0


def _family_spec(args) -> FamilySpec:
    return FamilySpec(kind=args.kind, n=args.n, k=args.k, delta=args.delta, delta2=args.delta2)


def _cmd_family(args) -> int:
    spec = _family_spec(args)
    members = spec.build()
    label = spec.label()
    if args.emit == "edgelist":
        out_dir = _resolve_out(args.out) or Path(os.environ.get(OUT_DIR_ENV, "."))
        out_dir.mkdir(parents=True, exist_ok=True)
        files = []
        for idx, t in enumerate(members):
            name = f"{label}_{idx:03d}.edges"
            _write_atomic(out_dir / name, format_edge_list(t, header=f"{label} member {idx}"))
            files.append(name)
        sidecar = {
            "tool": "grmtrees",
            "version": __version__,
            "family": label,
            "members": [
                {
                    "file": files[idx],
                    "order": t.order,
                    "canonical_code": canonical_code(t),
                    "census": _census_dict(census(t)),
                    "grm_minus2": str(grm(t, -2)) if t.order >= 2 else None,
                }
                for idx, t in enumerate(members)
            ],
            "predicted_census": [_census_dict(c) for c in spec.predicted_census()],
        }
        _write_atomic(out_dir / f"{label}.census.json", json.dumps(sidecar, indent=2) + "\n")
        sys.stdout.write(f"{label}: wrote {len(members)} member(s) to {out_dir}\n")
        return 0
    if args.emit == "code":
        text = "".join(canonical_code(t) + "\n" for t in members)
    else:
        text = "".join(json.dumps(_census_dict(census(t))) + "\n" for t in members)
    _emit(text, _resolve_out(args.out))
    return 0


def _census_dict(c) -> dict:
    return {
        "n": c.order,
        "vertex_counts": {str(d): v for d, v in c.vertex_items()},
        "edge_counts": {f"{i},{j}": v for (i, j), v in c.edge_items()},
    }


def _cmd_enumerate(args) -> int:
    spec = EnumSpec(args.n, args.max_deg, args.exact_deg)
    trees = enumerate_trees(spec, order_guard=args.guard)
    out = _resolve_out(args.out)
    if args.emit == "edgelist":
        out_dir = out or Path(os.environ.get(OUT_DIR_ENV, "."))
        out_dir.mkdir(parents=True, exist_ok=True)
        count = 0
        for idx, t in enumerate(trees):
            _write_atomic(out_dir / f"tree_n{args.n}_{idx:06d}.edges", format_edge_list(t))
            count += 1
        sys.stdout.write(f"wrote {count} tree(s) to {out_dir}\n")
        return 0
    if args.emit == "code":
        text = "".join(canonical_code(t) + "\n" for t in trees)
    else:
        text = "".join(json.dumps(_census_dict(census(t))) + "\n" for t in trees)
    _emit(text, out)
    return 0


def _cmd_census(args) -> int:
    if args.delta == 3:
        if any((args.m12, args.m13, args.m34, args.m44)):
            raise UsageError("--m12/--m13/--m34/--m44 apply to --delta 4 only")
        solved = solve_census_d3(FreeCensusVarsD3(args.n, args.n3, args.m22, args.m23))
    else:
        solved = solve_census_d4(
            FreeCensusVarsD4(
                args.n, args.n3, args.m12, args.m13, args.m22, args.m23, args.m34, args.m44
            )
        )
    rows = [(k, str(v)) for k, v in solved.values]
    payload = {
        "tool": "grmtrees",
        "version": __version__,
        "max_degree": args.delta,
        "entries": dict(rows),
        "realizable": solved.realizable,
        "grm_minus2": str(solved.grm_minus2()),
    }
    if args.format == "json":
        text = json.dumps(payload, indent=2) + "\n"
    else:
        width = max(len(k) for k, _ in rows)
        lines = [f"{k:<{width}}  {v}" for k, v in rows]
        lines.append(f"{'realizable':<{width}}  {'yes' if solved.realizable else 'no'}")
        lines.append(f"{'GRM(-2)':<{width}}  {payload['grm_minus2']}")
        text = "\n".join(lines) + "\n"
    _emit(text, _resolve_out(args.out))
    return 0


def _cmd_normalize(args) -> int:
    tree = parse_edge_list(Path(args.tree).read_text())
    final, trace = normalize(tree)
    lines = []
    for step, outcome in enumerate(trace, start=1):
        lines.append(
            json.dumps(
                {
                    "step": step,
                    "transform": outcome.kind,
                    "removed": list(outcome.removed),
                    "order_after": outcome.tree.order,
                    "claimed_delta": str(outcome.claimed_delta),
                }
            )
        )
    lines.append(
        json.dumps(
            {
                "final_order": final.order,
                "final_edges": [list(e) for e in final.edges()],
                "steps": len(trace),
                "total_delta": str(sum((o.claimed_delta for o in trace), Fraction(0))),
            }
        )
    )
    _emit("\n".join(lines) + "\n", _resolve_out(args.out))
    return 0


def _cmd_verify(args) -> int:
    report = verify(
        args.theorem,
        n_min=args.n_min,
        n_max=args.n_max,
        lams=args.lambdas or (DEFAULT_LAMBDAS_21 if args.theorem == "2.1" else None),
        order_guard=args.guard,
        jobs=args.jobs,
    )
    _emit(report.render(args.format, include_timings=args.timings), _resolve_out(args.out))
    return 0 if report.passed else 1


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help/--version
        return int(exc.code or 0)
    check_solved_forms()
    try:
        if args.command == "index":
            return _cmd_index(args)
        if args.command == "family":
            return _cmd_family(args)
        if args.command == "enumerate":
            return _cmd_enumerate(args)
        if args.command == "census":
            return _cmd_census(args)
        if args.command == "normalize":
            return _cmd_normalize(args)
        if args.command == "verify":
            return _cmd_verify(args)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2
    except GrmTreesError as exc:
        sys.stderr.write(f"error: {exc.__class__.__name__}: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"i/o error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
