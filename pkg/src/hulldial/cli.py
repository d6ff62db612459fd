"""Command-line front end.

Subcommands: construct, dial, eaqec, table, verify, distance, hull.
All artifacts are JSON (elements as coefficient arrays, constant term
first) or TSV (header row, tab separated, LF endings); identical argv and
seed produce byte-identical output.  Exit codes: 0 success, 1 error,
2 search finished without a construction (budget miss or proven empty).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .errors import HulldialError
from .field import make_quadratic_field
from .code import LinearCode, hull, is_hermitian_self_orthogonal, min_distance
from .dial import dial_galois_hull, dial_hull, reduce_hull
from .grs import DEFAULT_SEED, FAMILIES, construct_family
from .eaqec import (
    EaqecParams,
    Table1Limits,
    claim,
    eaqec_from_dial,
    eaqec_sweep,
    enumerate_table1,
    tsv_lines,
    verify_claim,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NOT_FOUND = 2


class _Parser(argparse.ArgumentParser):
    """argparse, but usage errors exit 1 (2 is reserved for search misses)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_ERROR)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    tmp = out + ".tmp"
    with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    os.replace(tmp, out)


def _json_text(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _load_code(path: str) -> LinearCode:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if "generator" not in data and "code" in data:
        data = data["code"]
    return LinearCode.from_dict(data)


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip() != ""]


def _records_text(records: list[EaqecParams], fmt: str) -> str:
    if fmt == "json":
        return _json_text([r.to_dict() for r in records])
    if fmt == "tsv":
        return "\n".join(tsv_lines(records)) + "\n"
    lines = []
    for r in records:
        mds = "gate-failed" if r.mds is None else ("MDS" if r.mds else "not MDS")
        fam = ",".join(r.families) or "-"
        lines.append(f"[[{r.n}, {r.k_q}, {r.d}, {r.c}]]_{r.q}  {mds}  family={fam}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_construct(args) -> int:
    field = make_quadratic_field(args.q)
    result = construct_family(
        field,
        args.family,
        k=args.k,
        m=args.m,
        m1=args.m1,
        m2=args.m2,
        g=_int_list(args.g) if args.g else None,
        seed=args.seed,
    )
    payload = {
        "status": result.status,
        "field": field.to_dict(),
        "null_dim": result.null_dim,
        "attempts": result.attempts,
        "grs": result.grs.to_dict() if result.found else None,
        "code": result.grs.code().to_dict() if result.found else None,
    }
    _emit(_json_text(payload), args.out)
    return EXIT_OK if result.found else EXIT_NOT_FOUND


def _cmd_dial(args) -> int:
    code = _load_code(args.codefile)
    if args.galois_l is not None:
        result = dial_galois_hull(code, args.target, args.galois_l)
    elif is_hermitian_self_orthogonal(code):
        result = dial_hull(code, args.target)
    else:
        result = reduce_hull(code, args.target)
    _emit(_json_text(result.to_dict()), args.out)
    return EXIT_OK


def _cmd_eaqec(args) -> int:
    code = _load_code(args.codefile)
    if args.l is not None:
        records = [eaqec_from_dial(code, args.l, cap=args.cap)]
    else:
        records = eaqec_sweep(code, cap=args.cap)
    _emit(_records_text(records, args.format), args.out)
    return EXIT_OK


def _cmd_table(args) -> int:
    limits = Table1Limits(max_rows=args.max_rows, include_generic=not args.no_generic)
    records = enumerate_table1(args.q, limits)
    _emit(_records_text(records, args.format), args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    params = _int_list(args.params)
    if len(params) != 4:
        raise HulldialError("--params must be n,k,d,c")
    n, k_q, d, c = params
    witness = _load_code(args.witness) if args.witness else None
    verdict = verify_claim(claim(args.q, n, k_q, d, c), witness, cap=args.cap)
    _emit(_json_text(verdict.to_dict()), args.out)
    return EXIT_OK


def _cmd_distance(args) -> int:
    code = _load_code(args.codefile)
    d = min_distance(code, cap=args.cap)
    payload = {"n": code.n, "k": code.k, "d": d, "mds": d == code.n - code.k + 1}
    _emit(_json_text(payload), args.out)
    return EXIT_OK


def _cmd_hull(args) -> int:
    code = _load_code(args.codefile)
    report = hull(code, args.kind, args.l)
    payload = {
        "kind": report.kind,
        "l": report.l,
        "dim": report.dim,
        "basis": report.basis.to_dict(),
    }
    _emit(_json_text(payload), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hulldial", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--out", help="write output to this file (atomic)")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="search seed")
        p.add_argument("--cap", type=int, default=None, help="enumeration cap override")

    p = sub.add_parser("construct", help="build a self-orthogonal GRS family member")
    p.add_argument("--q", type=int, required=True, help="base field size (prime power)")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--k", type=int, required=True, help="code dimension")
    p.add_argument("--m", type=int, help="subgroup index")
    p.add_argument("--m1", type=int, help="first subgroup index (two-subgroup)")
    p.add_argument("--m2", type=int, help="second subgroup index (two-subgroup)")
    p.add_argument("--g", help="polynomial g as comma-separated element codes, low degree first")
    add_common(p)
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("dial", help="transform a code to a target hull dimension")
    p.add_argument("codefile", help="code JSON file")
    p.add_argument("--h", dest="target", type=int, required=True, help="target hull dimension")
    p.add_argument("--galois-l", type=int, default=None, help="use the l-Galois form instead")
    add_common(p)
    p.set_defaults(fn=_cmd_dial)

    p = sub.add_parser("eaqec", help="derive entanglement-assisted parameters")
    p.add_argument("codefile", help="code JSON file")
    p.add_argument("--l", type=int, default=None, help="single hull target (default: sweep)")
    p.add_argument("--format", choices=("tsv", "json", "pretty"), default="tsv")
    add_common(p)
    p.set_defaults(fn=_cmd_eaqec)

    p = sub.add_parser("table", help="enumerate the known parameter families")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--max-rows", type=int, default=None)
    p.add_argument("--no-generic", action="store_true", help="omit the any-length family")
    p.add_argument("--format", choices=("tsv", "json", "pretty"), default="tsv")
    add_common(p)
    p.set_defaults(fn=_cmd_table)

    p = sub.add_parser("verify", help="check a claimed [[n,k,d,c]]_q record")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--params", required=True, help="n,k,d,c")
    p.add_argument("--witness", help="code JSON file backing the claim")
    add_common(p)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("distance", help="exact minimum distance by enumeration")
    p.add_argument("codefile", help="code JSON file")
    add_common(p)
    p.set_defaults(fn=_cmd_distance)

    p = sub.add_parser("hull", help="hull basis and dimension")
    p.add_argument("codefile", help="code JSON file")
    p.add_argument("--kind", choices=("euclidean", "hermitian", "galois"), default="hermitian")
    p.add_argument("--l", type=int, default=None, help="galois index")
    add_common(p)
    p.set_defaults(fn=_cmd_hull)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (HulldialError, ValueError, ZeroDivisionError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"hulldial: error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
