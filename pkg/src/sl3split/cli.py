"""Command-line interface.

Matrices are given as nine integers, row-major, semicolon-separated rows
with comma-separated entries ("1,0,0;4,1,0;4,4,1"), as a JSON array of
arrays, or as a path to a file holding either form.  Exit codes: 0 success,
1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .blocks import block_factor_any, block_to_matrix
from .cocycle import sigma
from .cosets import canonical_rep, enumerate_reps
from .errors import ConsistencyError, DomainError, HypothesisError, MembershipError, ParseError
from .sl3 import (
    Matrix,
    cell_of,
    in_gamma14,
    mat_inv,
    mat_mul,
    plucker,
    scale_down,
    scaled_plucker,
)
from .splitting import split, split_coords
from .verify import SUITES


def parse_matrix(text: str) -> Matrix:
    """Parse a matrix literal or a path to a file containing one."""
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    text = text.strip()
    if text.startswith("["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"bad JSON matrix at position {e.pos}: {e.msg}") from None
        if (not isinstance(data, list) or len(data) != 3
                or any(not isinstance(r, list) or len(r) != 3 for r in data)):
            raise ParseError("JSON matrix must be a 3x3 array of arrays")
        if any(not isinstance(v, int) for r in data for v in r):
            raise ParseError("matrix entries must be integers")
        return tuple(tuple(r) for r in data)
    rows = text.split(";")
    if len(rows) != 3:
        raise ParseError(f"expected 3 semicolon-separated rows, got {len(rows)}")
    out = []
    for i, row in enumerate(rows):
        entries = row.split(",")
        if len(entries) != 3:
            raise ParseError(f"row {i + 1}: expected 3 comma-separated entries, "
                             f"got {len(entries)}")
        parsed = []
        for j, e in enumerate(entries):
            try:
                parsed.append(int(e.strip()))
            except ValueError:
                raise ParseError(f"row {i + 1}, entry {j + 1}: {e.strip()!r} "
                                 "is not an integer") from None
        out.append(tuple(parsed))
    return tuple(out)


def _matrix_list(g: Matrix) -> list[list[int]]:
    return [list(map(int, row)) for row in g]


def _coords_report(g: Matrix) -> dict:
    p = plucker(g)
    out = {
        "matrix": _matrix_list(g),
        "plucker_primed": list(p),
        "scaled": None,
        "cell": cell_of(p).value,
    }
    if in_gamma14(g):
        out["scaled"] = list(scale_down(p))
    return out


def _emit(data, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(data))
    else:
        _emit_text(data)


def _emit_text(data, indent: str = "") -> None:
    if isinstance(data, dict):
        for k, v in data.items():
            if isinstance(v, (dict, list)) and v and not _is_flat(v):
                print(f"{indent}{k}:")
                _emit_text(v, indent + "  ")
            else:
                print(f"{indent}{k}: {v}")
    elif isinstance(data, list):
        for v in data:
            _emit_text(v, indent)
    else:
        print(f"{indent}{data}")


def _is_flat(v) -> bool:
    if isinstance(v, list):
        return all(isinstance(x, (int, str, float)) for x in v)
    return False


def cmd_plucker(args) -> int:
    _emit(_coords_report(parse_matrix(args.matrix)), args.format)
    return 0


def cmd_factor(args) -> int:
    g = parse_matrix(args.matrix)
    sp = scaled_plucker(g)
    bp = block_factor_any(sp)
    rec = block_to_matrix(bp)
    n = mat_mul(g, mat_inv(rec))
    data = {
        "matrix": _matrix_list(g),
        "blocks": [list(b) for b in bp.blocks()],
        "left_unipotent": _matrix_list(n),
    }
    _emit(data, args.format)
    return 0


def cmd_cocycle(args) -> int:
    g1 = parse_matrix(args.matrix1)
    g2 = parse_matrix(args.matrix2)
    _emit({"sigma": sigma(g1, g2)}, args.format)
    return 0


def cmd_split(args) -> int:
    g = parse_matrix(args.matrix)
    data = _coords_report(g)
    data["s"] = split(g)
    _emit(data, args.format)
    return 0


def cmd_lift(args) -> int:
    g = parse_matrix(args.matrix)
    data = _coords_report(g)
    data["s"] = split(g)
    data["lift"] = [data["matrix"], data["s"]]
    _emit(data, args.format)
    return 0


def cmd_coset_rep(args) -> int:
    g = parse_matrix(args.matrix)
    rep, n = canonical_rep(g)
    data = {
        "matrix": _matrix_list(g),
        "representative": list(rep),
        "n_right": _matrix_list(n),
    }
    _emit(data, args.format)
    return 0


def cmd_enumerate(args) -> int:
    reps = enumerate_reps(args.a1, args.a2)
    rows = [list(r) + [split_coords(r)] for r in reps]
    if args.format == "csv":
        print("A1,B1,C1,A2,B2,C2,s")
        for row in rows:
            print(",".join(str(v) for v in row))
    elif args.format == "json":
        print(json.dumps([{"coords": r[:6], "s": r[6]} for r in rows], indent=2))
    else:
        for row in rows:
            print(" ".join(f"{v:6d}" for v in row))
    return 0


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = []
    failed = False
    for name in names:
        rep = SUITES[name](args.trials, args.seed, args.bound)
        reports.append(rep.as_dict())
        failed = failed or not rep.ok
    if args.format == "json":
        print(json.dumps(reports if len(reports) > 1 else reports[0], indent=2))
    else:
        for r in reports:
            status = "ok" if r["ok"] else "FAILED"
            print(f"{r['suite']:14s} {status:6s} cases={r['cases']} "
                  f"elapsed={r['elapsed']}s")
            for f in r["failures"]:
                print(f"  witness: {f}")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sl3split",
        description="Exact splitting of the level-4 congruence subgroup of "
                    "SL(3,Z) into the double cover of SL(3,R).")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")

    p = sub.add_parser("plucker", help="coset coordinates and Bruhat cell")
    p.add_argument("matrix")
    add_common(p)
    p.set_defaults(fn=cmd_plucker)

    p = sub.add_parser("factor", help="three-block factorization")
    p.add_argument("matrix")
    add_common(p)
    p.set_defaults(fn=cmd_factor)

    p = sub.add_parser("cocycle", help="sign cocycle of two matrices")
    p.add_argument("matrix1")
    p.add_argument("matrix2")
    add_common(p)
    p.set_defaults(fn=cmd_cocycle)

    p = sub.add_parser("split", help="splitting sign of a matrix")
    p.add_argument("matrix")
    add_common(p)
    p.set_defaults(fn=cmd_split)

    p = sub.add_parser("lift", help="lift into the double cover")
    p.add_argument("matrix")
    add_common(p)
    p.set_defaults(fn=cmd_lift)

    p = sub.add_parser("coset-rep", help="canonical double-coset representative")
    p.add_argument("matrix")
    add_common(p)
    p.set_defaults(fn=cmd_coset_rep)

    p = sub.add_parser("enumerate", help="table of representatives with signs")
    p.add_argument("--a1", type=int, required=True)
    p.add_argument("--a2", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv", "text"), default="csv")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=None)
    add_common(p)
    p.set_defaults(fn=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "trials", 1) <= 0:
        ap.error("--trials must be positive")
    if getattr(args, "bound", None) is not None and args.bound < 1:
        ap.error("--bound must be at least 1")
    try:
        return args.fn(args)
    except (ParseError, MembershipError, HypothesisError, DomainError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ConsistencyError as e:
        print(f"internal consistency error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
