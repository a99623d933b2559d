"""Command-line interface: ``subspace-codec <command> ...``.

Commands: ``lexicode``, ``inspect``, ``construct``, ``size``, ``verify``, ``table``.
The distance flag ``--dist`` is always the subspace distance ``2*delta``.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

import numpy as np

from .algebra import field
from .codefile import dumps, read_code
from .ferrers import diagram_from_vector, ferrers_bound, pending_analysis, zero_profile
from .multilevel import METHODS, ConstructionConfig
from .skeleton import IdentifyingVector, constant_weight_lexicode
from .verify import default_jobs, verify_code, verify_codewords

TABLE_LENGTHS = (7, 8, 9)


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _config(args) -> ConstructionConfig:
    return ConstructionConfig(args.n, args.k, args.q, args.dist, args.method, getattr(args, "pending_width", None))


def cmd_lexicode(args) -> int:
    words = [str(v) for v in constant_weight_lexicode(args.n, args.k, args.d)]
    _emit(args, {"n": args.n, "k": args.k, "d": args.d, "words": words}, "\n".join(words))
    return 0


def cmd_inspect(args) -> int:
    v = IdentifyingVector.parse(args.vector)
    diag = diagram_from_vector(v)
    rep = pending_analysis(v, args.delta)
    payload = {
        "vector": str(v),
        "z": list(zero_profile(v).z),
        "row_lengths": list(diag.row_lengths),
        "bound_exponent": ferrers_bound(diag, args.delta),
        "p": rep.p_formula,
        "pending_count": rep.count,
        "pending_columns": list(rep.columns),
        "pending_dots": [list(d) for d in rep.dots],
    }
    text = "\n".join([
        f"vector           {v}",
        f"row lengths      {tuple(diag.row_lengths)}",
        diag.render(rep.count) if diag.width else "(empty diagram)",
        f"bound exponent   {payload['bound_exponent']}  (delta={args.delta})",
        f"p                {rep.p_formula}",
        f"pending count    {rep.count}",
        f"pending columns  {', '.join(map(str, rep.columns)) or '-'}",
    ])
    _emit(args, payload, text)
    return 0


def cmd_construct(args) -> int:
    code = _config(args).build()
    out = dumps(code, args.materialize)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
        print(f"{code.size} codewords, {len(code.components)} components -> {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(out)
    return 0


def cmd_size(args) -> int:
    code = _config(args).build()
    poly = code.size_polynomial()
    size = poly.evaluate(args.q)
    _emit(args, {"polynomial": str(poly), "size": size, "q": args.q}, f"{poly} = {size}")
    return 0


def cmd_verify(args) -> int:
    code, stored = read_code(args.infile)
    jobs = args.jobs if args.jobs is not None else default_jobs()
    if stored is not None:
        report = verify_codewords(code.field, np.array(stored, dtype=np.int64).reshape(-1, code.k, code.n),
                                  code.min_distance, code.size_polynomial().evaluate(code.q),
                                  jobs=jobs, full_scan=args.full_scan, guard=args.guard)
    else:
        report = verify_code(code, jobs=jobs, full_scan=args.full_scan, guard=args.guard)
    _emit(args, report.to_dict(), report.to_text())
    return 0 if report.passed else 1


def table_rows(q: int, k: int = 3, dist: int = 4, lengths: Sequence[int] = TABLE_LENGTHS) -> list[dict]:
    rows = []
    for method in METHODS:
        for n in lengths:
            code = ConstructionConfig(n, k, q, dist, method).build()
            rows.append({"method": method, "n": n, "polynomial": str(code.size_polynomial()),
                         "size": code.size, "code": code})
    return rows


def cmd_table(args) -> int:
    rows = table_rows(args.q, args.k, args.dist, args.lengths)
    failed = False
    if args.verify:
        for row in rows:
            rep = verify_code(row["code"], jobs=args.jobs or default_jobs(), full_scan=True)
            row["min_distance"] = rep.min_distance
            row["verified"] = rep.passed
            failed |= not rep.passed
    payload = {"q": args.q, "k": args.k, "dist": args.dist,
               "rows": [{k: v for k, v in r.items() if k != "code"} for r in rows]}
    lines = []
    titles = {"classic": "echelon-Ferrers construction", "improved": "pending-dot construction"}
    for method in METHODS:
        lines.append(f"{titles[method]}  (k={args.k}, d={args.dist}, q={args.q})")
        lines.append(f"  {'n':>2}  {'size polynomial':<44} {'size':>8}" + ("  min d_S" if args.verify else ""))
        for r in rows:
            if r["method"] != method:
                continue
            line = f"  {r['n']:>2}  {r['polynomial']:<44} {r['size']:>8}"
            if args.verify:
                line += f"  {r['min_distance']} {'ok' if r['verified'] else 'FAIL'}"
            lines.append(line)
        lines.append("")
    _emit(args, payload, "\n".join(lines).rstrip())
    return 1 if failed else 0


def _add_code_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--dist", type=int, default=4, help="subspace distance 2*delta")
    p.add_argument("--method", choices=METHODS, default="improved")
    p.add_argument("--pending-width", type=int, default=None,
                   help="cap on the pending tuple width (default: adaptive)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="subspace-codec", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log construction warnings")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lexicode", help="constant-weight binary lexicode")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True, help="minimum Hamming distance (even)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lexicode)

    p = sub.add_parser("inspect", help="Ferrers diagram, bound and pending dots of a vector")
    p.add_argument("--vector", required=True)
    p.add_argument("--delta", type=int, default=2)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("construct", help="build a code and write its JSON file")
    _add_code_args(p)
    p.add_argument("--out", default=None, help="output file (default: stdout)")
    p.add_argument("--materialize", action="store_true", help="include all codewords")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("size", help="size polynomial and its value")
    _add_code_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_size)

    p = sub.add_parser("verify", help="exhaustively verify a code file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: $SUBSPACE_CODEC_JOBS or 1)")
    p.add_argument("--full-scan", action="store_true", help="no early exit; report the exact minimum")
    p.add_argument("--guard", type=int, default=10**5, help="maximum number of codewords")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="size tables of both constructions")
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--dist", type=int, default=4)
    p.add_argument("--lengths", type=int, nargs="+", default=list(TABLE_LENGTHS))
    p.add_argument("--verify", action="store_true", help="also verify every code exhaustively")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING if args.verbose else logging.ERROR, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
