"""Command-line front end.

Subcommands:
    construct   build a design (kinds h1/h2/h3/general) and write it to a file
    verify      re-derive a design's parameters by brute force and judge them
    repair      erase and repair a codeword, or sweep all erasure patterns
    mds-check   test a matrix file for the MDS property

Exit codes: 0 success/optimal, 1 verified-suboptimal (or MDS check failed /
pattern unrecoverable), 2 input error, 3 work budget exceeded.  The
LRC_WORK_BUDGET environment variable bounds the distance search.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .analysis import full_report, singleton_rd_bound
from .constructions import (
    LrcDesign,
    build_general,
    build_h1,
    build_h2,
    build_h3,
)
from .errors import BudgetExceededError, LrcError
from .fqmatrix import FqMatrix
from .gf import FieldSpec, _is_prime
from .repair import ErasurePattern, encode, repair_auto, sweep

EXIT_OK = 0
EXIT_SUBOPTIMAL = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _factor_prime_power(q: int):
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if not _is_prime(p):
            continue
        if q % p == 0:
            e = 0
            m = q
            while m % p == 0:
                m //= p
                e += 1
            if m != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, e
    raise ValueError(f"{q} is not a prime power")


def _field_from_args(args) -> FieldSpec:
    modulus = _int_list(args.modulus) if args.modulus else None
    if args.q is not None:
        p, e = _factor_prime_power(args.q)
    elif args.p is not None:
        p, e = args.p, args.e
    else:
        raise ValueError("give the field as --q or as --p/--e")
    return FieldSpec(p, e, modulus)


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip() != ""]
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from None


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path} is not valid JSON: {exc}") from None


def _write_json(path, obj):
    with open(path, "w") as fh:
        json.dump(obj, fh)
        fh.write("\n")


def _budget(args) -> int | None:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("LRC_WORK_BUDGET")
    return int(env) if env else None


def cmd_construct(args) -> int:
    kind = args.kind.lower()
    if kind == "general":
        if not args.u:
            raise ValueError("construct --kind general needs --u matrix files")
        u_blocks = [FqMatrix.from_dict(_load_json(p)) for p in args.u]
        v_blocks = [FqMatrix.from_dict(_load_json(p)) for p in args.v] if args.v else None
        if args.delta is None or args.d is None or args.r is None:
            raise ValueError("construct --kind general needs --r, --delta and --d")
        design = build_general(u_blocks, v_blocks, args.r, args.delta, args.d)
    else:
        field = _field_from_args(args)
        if args.r is None or args.m is None:
            raise ValueError("construct needs --r and --m")
        if kind == "h1":
            design = build_h1(field, args.r, args.m, _int_list(args.f))
        elif kind == "h2":
            design = build_h2(field, args.r, args.m)
        elif kind == "h3":
            design = build_h3(field, args.r, args.m)
        else:
            raise ValueError(f"unknown kind {args.kind!r}")
    if args.out:
        _write_json(args.out, design.to_dict())
    summary = {
        "n": design.n,
        "k": design.claimed_k,
        "d": design.d,
        "r": design.r,
        "delta": design.delta,
        "m": design.m,
        "block_width": design.width,
        "kind": design.kind,
        "out": args.out,
    }
    if args.json:
        print(json.dumps(summary))
    else:
        print(
            f"[{design.n},{design.claimed_k},{design.d}] r={design.r} "
            f"δ={design.delta} m={design.m} block width {design.width}"
        )
        if args.out:
            print(f"design written to {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    design = LrcDesign.from_dict(_load_json(args.design))
    report = full_report(design, budget=_budget(args))
    if args.report:
        _write_json(args.report, report.to_dict())
    if args.json:
        print(json.dumps(report.to_dict()))
    else:
        line = f"d={report.d} vs bound {report.bound}; n={report.n} k={report.k}"
        if report.verdict == "optimal":
            print(f"OPTIMAL: d={report.d} = bound {report.bound}")
        elif report.verdict == "suboptimal":
            print(f"SUBOPTIMAL: {line}")
        else:
            print(f"LOCALITY-FAILED: {line}")
        print(
            f"verified [{report.n},{report.k},{report.d}], "
            f"claimed [{design.n},{design.claimed_k},{design.d}]"
        )
    if report.verdict == "optimal" or args.allow_suboptimal:
        return EXIT_OK
    return EXIT_SUBOPTIMAL


def _design_for_repair(args):
    if args.design:
        return LrcDesign.from_dict(_load_json(args.design))
    raise ValueError("repair needs a design file")


def cmd_repair(args) -> int:
    import random

    if args.word:
        payload = _load_json(args.word)
        if not isinstance(payload, dict) or "word" not in payload:
            raise ValueError(f"{args.word} is not a word file")
        if args.design:
            design = LrcDesign.from_dict(_load_json(args.design))
        elif isinstance(payload.get("design"), dict):
            design = LrcDesign.from_dict(payload["design"])
        elif isinstance(payload.get("design"), str):
            base = os.path.dirname(os.path.abspath(args.word))
            design = LrcDesign.from_dict(_load_json(os.path.join(base, payload["design"])))
        else:
            raise ValueError("word file carries no design and none was given")
        word = [None if x is None else x for x in payload["word"]]
    else:
        design = _design_for_repair(args)
        rng = random.Random(args.seed)
        message = [rng.randrange(design.field.q) for _ in range(design.claimed_k)]
        codeword = encode(design, message)
        if args.sweep:
            outcome = sweep(design, message, args.max_erasures)
            for size, recovered, total in outcome.per_size:
                print(f"size {size}: {recovered}/{total} patterns recovered")
            print(
                f"total {outcome.recovered}/{outcome.total} patterns recovered "
                f"({100.0 * outcome.recovered / outcome.total:.1f}%)"
            )
            return EXIT_OK if outcome.recovered == outcome.total else EXIT_SUBOPTIMAL
        if args.erase is None:
            raise ValueError("repair needs --erase i,j,... (or --sweep, or --word)")
        pattern = ErasurePattern(design.n, tuple(_int_list(args.erase)))
        word = pattern.apply(codeword)
    result = repair_auto(design, word)
    if args.json:
        print(
            json.dumps(
                {
                    "ok": result.ok,
                    "word": list(result.word) if result.word else None,
                    "modes": {str(k): v for k, v in sorted(result.modes.items())},
                    "groups_touched": list(result.groups_touched),
                    "symbols_read": result.symbols_read,
                    "nullity": result.nullity,
                }
            )
        )
    else:
        for coord, mode in sorted(result.modes.items()):
            print(f"coordinate {coord}: {mode}")
        print(f"symbols read: {result.symbols_read}")
        if result.ok:
            print("recovered: " + " ".join(str(x) for x in result.word))
        else:
            print(f"UNRECOVERABLE: solution space has dimension {result.nullity}")
    return EXIT_OK if result.ok else EXIT_SUBOPTIMAL


def cmd_mds_check(args) -> int:
    matrix = FqMatrix.from_dict(_load_json(args.matrix))
    ok, witness = matrix.has_mds_property()
    if args.json:
        print(json.dumps({"mds": ok, "witness": list(witness) if witness else None}))
    else:
        if ok:
            print(f"MDS: every {matrix.nrows} columns of {matrix.ncols} are independent")
        else:
            print(f"NOT MDS: columns {list(witness)} are dependent")
    return EXIT_OK if ok else EXIT_SUBOPTIMAL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lrc",
        description="construct, certify, and repair locally repairable codes",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("construct", help="build a design and write it to a file")
    pc.add_argument("--kind", required=True, help="h1 | h2 | h3 | general")
    pc.add_argument("--q", type=int, help="field order (prime power)")
    pc.add_argument("--p", type=int, help="field characteristic (with --e)")
    pc.add_argument("--e", type=int, default=1, help="extension degree")
    pc.add_argument("--modulus", help="modulus coefficients, constant term first")
    pc.add_argument("--r", type=int, help="locality")
    pc.add_argument("--m", type=int, help="number of repair groups")
    pc.add_argument("--f", default="1", help="weight polynomial coefficients (h1)")
    pc.add_argument("--delta", type=int, help="delta (general kind)")
    pc.add_argument("--d", type=int, help="claimed distance (general kind)")
    pc.add_argument("--u", action="append", help="U block matrix file (general kind)")
    pc.add_argument("--v", action="append", help="V block matrix file (general kind)")
    pc.add_argument("-o", "--out", help="design file to write")
    pc.add_argument("--json", action="store_true")
    pc.set_defaults(func=cmd_construct)

    pv = sub.add_parser("verify", help="brute-force certify a design file")
    pv.add_argument("design")
    pv.add_argument("--report", help="write the JSON report here")
    pv.add_argument("--allow-suboptimal", action="store_true", help="exit 0 unless errors")
    pv.add_argument("--budget", type=int, help="distance-search node budget")
    pv.add_argument("--json", action="store_true")
    pv.set_defaults(func=cmd_verify)

    pr = sub.add_parser("repair", help="erase and repair, or sweep erasure patterns")
    pr.add_argument("design", nargs="?", help="design file")
    pr.add_argument("--word", help="word file with null entries at erasures")
    pr.add_argument("--random-message", action="store_true", help="encode a seeded message")
    pr.add_argument("--seed", type=int, default=0)
    pr.add_argument("--erase", help="comma-separated coordinates to erase")
    pr.add_argument("--sweep", action="store_true", help="try every pattern up to --max-erasures")
    pr.add_argument("--max-erasures", type=int, default=1)
    pr.add_argument("--json", action="store_true")
    pr.set_defaults(func=cmd_repair)

    pm = sub.add_parser("mds-check", help="test a matrix file for the MDS property")
    pm.add_argument("matrix")
    pm.add_argument("--json", action="store_true")
    pm.set_defaults(func=cmd_mds_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (LrcError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
