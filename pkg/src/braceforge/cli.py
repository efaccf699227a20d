"""Command-line client for the classification engine.

Exit codes: 0 all good / all claims verified, 1 bad input, 2 unsupported
order or oracle cap exceeded, 3 a verified law or cross-check failed.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path

from . import __version__
from .catalog import structure_name
from .errors import (
    BadCaseParamsError,
    BadSpecError,
    BraceforgeError,
    GroupTableError,
    OrderTooLargeForOracleError,
    UnsupportedOrderError,
)
from .groups import FiniteGroup, group_from_json, preset_group
from .partitions import build_report
from .pq import verify_pq
from .subgroups import PermSubgroup, direct_enumerate_oracle, enumerate_regular_gstable

EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_UNSUPPORTED = 2
EXIT_VIOLATION = 3

FORMATS = ("json", "csv", "text")


def _resolve_group(args) -> FiniteGroup:
    if bool(args.group) == bool(args.table):
        raise BadSpecError("exactly one of --group or --table is required")
    if args.group:
        return preset_group(args.group)
    payload = json.loads(Path(args.table).read_text(encoding="utf-8"))
    return group_from_json(payload)


def _cache_dir(args) -> Path | None:
    if args.cache_dir:
        return Path(args.cache_dir)
    env = os.environ.get("BRACEFORGE_CACHE")
    return Path(env) if env else None


def _cache_key(G: FiniteGroup) -> str:
    payload = json.dumps(
        {"table": [list(r) for r in G.mul], "version": __version__},
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(payload.encode()).hexdigest()


def _enumerate_with_cache(G: FiniteGroup, cache: Path | None, jobs: int) -> list[PermSubgroup]:
    if cache is None:
        return enumerate_regular_gstable(G, jobs=jobs)
    cache.mkdir(parents=True, exist_ok=True)
    path = cache / f"{_cache_key(G)}.json"
    if path.exists():
        payload = json.loads(path.read_text(encoding="utf-8"))
        return [
            PermSubgroup(G, tuple(tuple(p) for p in elems))
            for elems in payload["subgroups"]
        ]
    subs = enumerate_regular_gstable(G, jobs=jobs)
    path.write_text(
        json.dumps(
            {
                "version": __version__,
                "order": G.order,
                "subgroups": [[list(p) for p in N.elements] for N in subs],
            },
            sort_keys=True,
        ),
        encoding="utf-8",
    )
    return subs


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _enumeration_json(G: FiniteGroup, subs: list[PermSubgroup]) -> dict:
    return {
        "group": G.label,
        "order": G.order,
        "count": len(subs),
        "subgroups": [N.to_json() for N in subs],
    }


def _enumeration_csv(subs: list[PermSubgroup]) -> str:
    lines = ["index,type,elements"]
    for i, N in enumerate(subs):
        elems = ";".join(" ".join(str(v) for v in p) for p in N.elements)
        lines.append(f"{i},{structure_name(N.abstract_group)},{elems}")
    return "\n".join(lines) + "\n"


def _enumeration_text(G: FiniteGroup, subs: list[PermSubgroup]) -> str:
    lines = [f"group {G.label} (order {G.order}): {len(subs)} regular stable subgroups"]
    for i, N in enumerate(subs):
        lines.append(f"  #{i} type={structure_name(N.abstract_group)}")
        for p in N.elements:
            lines.append("     " + " ".join(str(v) for v in p))
    return "\n".join(lines) + "\n"


def cmd_enumerate(args) -> int:
    G = _resolve_group(args)
    subs = _enumerate_with_cache(G, _cache_dir(args), args.jobs)
    oracle_mismatch = False
    if args.with_oracle:
        oracle = direct_enumerate_oracle(G)
        oracle_mismatch = [N.elements for N in subs] != [N.elements for N in oracle]
    if args.format == "json":
        payload = _enumeration_json(G, subs)
        if args.with_oracle:
            payload["oracle_agrees"] = not oracle_mismatch
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    elif args.format == "csv":
        _emit(_enumeration_csv(subs), args.out)
    else:
        text = _enumeration_text(G, subs)
        if args.with_oracle:
            text += f"oracle agrees: {not oracle_mismatch}\n"
        _emit(text, args.out)
    return EXIT_VIOLATION if oracle_mismatch else EXIT_OK


def cmd_classify(args) -> int:
    G = _resolve_group(args)
    subs = _enumerate_with_cache(G, _cache_dir(args), args.jobs)
    oracle_mismatch = False
    if args.with_oracle:
        oracle = direct_enumerate_oracle(G)
        oracle_mismatch = [N.elements for N in subs] != [N.elements for N in oracle]
    report = build_report(G, subs, jobs=args.jobs)
    if args.format == "json":
        payload = report.to_json()
        if args.with_oracle:
            payload["oracle_agrees"] = not oracle_mismatch
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    elif args.format == "csv":
        _emit(report.to_csv(), args.out)
    else:
        _emit(report.to_text(), args.out)
    if oracle_mismatch or not report.all_laws_pass:
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_pq_verify(args) -> int:
    verification = verify_pq(args.p, args.q, args.g, jobs=args.jobs)
    if args.format == "json":
        _emit(json.dumps(verification.to_json(), indent=2, sort_keys=True) + "\n", args.out)
    elif args.format == "csv":
        lines = ["case,check,pass,detail"]
        for cv in verification.cases:
            for c in cv.checks:
                lines.append(f"{cv.case.tag},{c.name},{c.passed},{c.detail}")
        for c in verification.checks:
            lines.append(f"global,{c.name},{c.passed},{c.detail}")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(verification.to_text(), args.out)
    return EXIT_OK if verification.all_passed else EXIT_VIOLATION


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("braceforge.service:app", host=args.host, port=args.port)
    return EXIT_OK


def _add_common(parser: argparse.ArgumentParser, group_input: bool = True) -> None:
    if group_input:
        parser.add_argument("--group", help="preset spec, e.g. cyclic:6 or metacyclic:7,3,2")
        parser.add_argument("--table", help="path to a Cayley-table JSON file")
    parser.add_argument("--format", choices=FORMATS, default="json")
    parser.add_argument("--out", help="output file (default: stdout)")
    parser.add_argument("--cache-dir", help="enumeration cache directory")
    parser.add_argument("--jobs", type=int, default=1, help="parallel workers")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braceforge",
        description="classify regular translation-stable permutation subgroups and skew braces",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="list all regular stable subgroups")
    _add_common(p_enum)
    p_enum.add_argument(
        "--with-oracle",
        action="store_true",
        help="cross-check against the direct search (small orders only)",
    )
    p_enum.set_defaults(func=cmd_enumerate)

    p_cls = sub.add_parser("classify", help="full report with partitions and law checks")
    _add_common(p_cls)
    p_cls.add_argument("--with-oracle", action="store_true")
    p_cls.set_defaults(func=cmd_classify)

    p_pq = sub.add_parser("pq-verify", help="verify the order-p*q catalog")
    p_pq.add_argument("--p", type=int, required=True)
    p_pq.add_argument("--q", type=int, required=True)
    p_pq.add_argument("--g", type=int, default=None)
    _add_common(p_pq, group_input=False)
    p_pq.set_defaults(func=cmd_pq_verify)

    p_srv = sub.add_parser("serve", help="run the HTTP service")
    p_srv.add_argument("--host", default="127.0.0.1")
    p_srv.add_argument("--port", type=int, default=8000)
    p_srv.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UnsupportedOrderError, OrderTooLargeForOracleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (BadSpecError, BadCaseParamsError, GroupTableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except BraceforgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
