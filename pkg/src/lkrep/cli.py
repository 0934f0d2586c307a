"""Batch command-line front end.

Subcommands: ``roots`` and ``rep`` export the combinatorial and matrix data
as deterministic JSON; ``verify`` runs named identity suites and exits 0 iff
all pass; ``charney`` and ``head`` answer word-level queries on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import garside
from .laurent import parse_rational
from .representation import KrammerRep
from .roots import RootSystem, TypeSpec
from .suites import SUITES


class UnknownSuite(ValueError):
    """A --suite name with no registered checks."""


def _json_bytes(obj) -> bytes:
    return (json.dumps(obj, separators=(",", ": "), indent=1) + "\n").encode()


def _emit(obj, out_dir: str | None, filename: str) -> None:
    data = _json_bytes(obj)
    if out_dir:
        path = Path(out_dir) / filename
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(data)
        print(path)
    else:
        sys.stdout.write(data.decode())


def _parse_word(text: str) -> list[int]:
    return [int(tok) for tok in text.split()]


def _build_system(args) -> RootSystem:
    return RootSystem.build(TypeSpec(args.type, args.rank))


def cmd_roots(args) -> int:
    rs = _build_system(args)
    obj = {
        "type": rs.spec.family,
        "rank": rs.spec.rank,
        "roots": [list(r) for r in rs.roots],
        "cartan": [list(row) for row in rs.cartan],
    }
    _emit(obj, args.out, f"roots_{rs.spec.name}.json")
    return 0


def cmd_rep(args) -> int:
    rs = _build_system(args)
    rep = KrammerRep(rs)
    _emit(rep.table.to_json_obj(), args.out, f"ttable_{rs.spec.name}.json")
    for k in range(1, rs.rank + 1):
        m = rep.sigma(k)
        obj = {
            "generator": k,
            "size": m.n,
            "entries": [[m.entry(i, j).to_json_obj() for j in range(m.n)] for i in range(m.n)],
        }
        _emit(obj, args.out, f"sigma_{rs.spec.name}_{k}.json")
    return 0


def cmd_verify(args) -> int:
    names = [s.strip() for s in args.suite.split(",") if s.strip()]
    for name in names:
        if name not in SUITES:
            raise UnknownSuite(f"unknown suite {name!r}; available: {', '.join(sorted(SUITES))}")
    rs = _build_system(args)
    rep = KrammerRep(rs)
    r0 = parse_rational(args.r0)
    checks = []
    timing = {}
    all_pass = True
    for name in sorted(names):
        started = time.perf_counter()
        passed, detail = SUITES[name](rep, seed=args.seed, r0=r0)
        timing[name] = round(time.perf_counter() - started, 3)
        checks.append({"name": name, "pass": passed, "detail": detail})
        all_pass &= passed
        status = "pass" if passed else "FAIL"
        print(f"{name:<14} {status:<5} {detail}  ({timing[name]}s)")
    report = {
        "type": rs.spec.family,
        "rank": rs.spec.rank,
        "seed": args.seed,
        "r0": str(r0),
        "checks": checks,
        "all_pass": all_pass,
        "timing": timing,  # side field: the only run-dependent data
    }
    if args.out:
        path = Path(args.out) / f"verify_{rs.spec.name}.json"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(_json_bytes(report))
        print(path)
    return 0 if all_pass else 1


def cmd_charney(args) -> int:
    rs = _build_system(args)
    rep = KrammerRep(rs)
    word = _parse_word(args.word)
    value = garside.charney_length(rep, word)
    print(value)
    if args.oracle:
        oracle = garside.charney_length_bfs(rep, word, maxlen=args.maxlen)
        print(oracle)
        if oracle != value:
            print(f"mismatch: matrix formula {value}, BFS {oracle}", file=sys.stderr)
            return 1
    return 0


def cmd_head(args) -> int:
    rs = _build_system(args)
    word = _parse_word(args.word)
    garside.check_positive_word(rs, word)
    orbit = garside.star_act_word(rs, word, frozenset())
    from .roots import max_inversion_subset

    w = max_inversion_subset(rs, orbit)
    print(" ".join(map(str, w.reduced_word())))
    print(json.dumps(sorted(list(rs.roots[i]) for i in orbit)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lkrep",
        description="Exact Lawrence-Krammer representation toolkit for ADE Artin groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--type", required=True, choices=["A", "D", "E"])
        p.add_argument("--rank", required=True, type=int)
        p.add_argument("--out", default=None, help="directory for JSON output")
        p.add_argument("--format", default="json", choices=["json"])

    p = sub.add_parser("roots", help="export the positive roots and Cartan matrix")
    common(p)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("rep", help="export the generator matrices and the T table")
    common(p)
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("verify", help="run identity suites; exit 0 iff all pass")
    common(p)
    p.add_argument("--suite", default="braid,ttable,det,w0,umatrix")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--r0", default="1/2", help="rational evaluation point p/q")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("charney", help="Charney length of a signed word")
    common(p)
    p.add_argument("--word", required=True, help='signed letters, e.g. "1 2 -1"')
    p.add_argument("--oracle", action="store_true", help="cross-check against BFS")
    p.add_argument("--maxlen", type=int, default=3)
    p.set_defaults(func=cmd_charney)

    p = sub.add_parser("head", help="greedy head of a positive word")
    common(p)
    p.add_argument("--word", required=True, help='positive letters, e.g. "1 1 2"')
    p.set_defaults(func=cmd_head)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
