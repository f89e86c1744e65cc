"""Command-line front end.

Subcommands:

* ``analyze``         full regularity profile of a code file
* ``construct``       emit a named family member in the code file format
* ``verify``          run the claim registry (C1..C18)
* ``classify``        enumerate and classify MDS codes for (q, n, k)
* ``selfdual-search`` exhaustive search for self-dual [I | A] codes

Exit codes: 0 success / all verified, 1 usage error, 2 cap exceeded,
3 refuted claim.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources
from typing import Optional

from .caps import CapExceeded, default_primal_cap
from .claims import CLAIM_ORDER, run_claims
from .classify import classify_mds
from .code import format_code_text, read_code_file
from .constructions import (
    ders,
    dual_repetition,
    hamming,
    hyperoval_code,
    preset_matrix,
    preset_names,
    repetition,
    self_dual_2_1_2,
    self_dual_4_2_3,
    self_dual_search,
    simplex,
)
from .coset import full_profile

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAP = 2
EXIT_REFUTED = 3


class _Parser(argparse.ArgumentParser):
    """argparse reserves exit code 2 for usage errors; we use 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit2(f"{self.prog}: error: {message}")


class SystemExit2(SystemExit):
    def __init__(self, message):
        print(message, file=sys.stderr)
        super().__init__(EXIT_USAGE)


def load_schema(name: str) -> dict:
    """Load one of the published JSON report schemas shipped with the package."""
    with resources.files("codescope.schemas").joinpath(f"{name}.schema.json").open() as fh:
        return json.load(fh)


def _write_json(payload: dict, path: Optional[str]) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True)
    if path:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def build_analyze_report(result, include_table: bool = False) -> dict:
    C = result.code
    F = C.field
    report = {
        "code": {
            "field": {"p": F.p, "r": F.r, "modulus": list(F.modulus)},
            "n": C.n,
            "k": C.k,
            "generator": C.G.to_lists(),
            "name": C.name,
            "text": format_code_text(C),
        },
        "engine": result.engine,
        "profile": result.profile.to_dict(),
        "packing_coefficients": [str(b) for b in result.beta] if result.beta is not None else None,
        "coset_summary": result.table.summary() if result.table is not None else None,
        "witnesses": {
            "cr": result.cr_witness,
            "upws": (
                {"rho": result.profile.rho, "s": result.profile.s,
                 "note": "no rational packing vector exists"}
                if result.profile.flag("is_upws") is False
                else None
            ),
        },
        "implications": result.implications,
    }
    if include_table and result.table is not None:
        report["coset_table"] = result.table.to_json_dict()
    return report


def _cmd_analyze(args) -> int:
    C = read_code_file(args.codefile)
    engine = args.engine.replace("-", "_")
    result = full_profile(
        C,
        primal_cap=args.primal_cap,
        workers=args.workers,
        engine=engine,
    )
    report = build_analyze_report(result, include_table=args.full_coset_table)
    p = result.profile
    flags = ", ".join(
        f"{name}={v['value']}({v['provenance']})" for name, v in p.flags.items()
    )
    print(f"{C.params()} d={p.d} e={p.e} s={p.s} s'={p.s_prime} rho={p.rho}")
    print(f"  {flags}")
    if result.beta is not None:
        print("  packing coefficients: " + ", ".join(str(b) for b in result.beta))
    if args.json:
        _write_json(report, args.json)
    return EXIT_OK


def _cmd_construct(args) -> int:
    fam = args.family
    try:
        if fam == "repetition":
            C = repetition(args.q, _need(args, "n"))
        elif fam == "dual-repetition":
            C = dual_repetition(args.q, _need(args, "n"))
        elif fam == "hamming":
            C = hamming(args.q)
        elif fam == "simplex":
            C = simplex(args.q)
        elif fam == "ders":
            C = ders(args.q, _need(args, "k"))
        elif fam == "hyperoval":
            C = hyperoval_code(args.q)
        elif fam == "selfdual-2-1-2":
            C = self_dual_2_1_2(args.q)
        elif fam == "selfdual-4-2-3":
            C = self_dual_4_2_3(args.q)
        elif fam.startswith("preset:"):
            C = preset_matrix(fam.split(":", 1)[1])
        else:
            raise SystemExit2(
                f"unknown family {fam!r}; families: repetition, dual-repetition, "
                f"hamming, simplex, ders, hyperoval, selfdual-2-1-2, selfdual-4-2-3, "
                + ", ".join(f"preset:{n}" for n in preset_names())
            )
    except ValueError as exc:
        raise SystemExit2(str(exc))
    if C is None:
        raise SystemExit2(f"no {fam} code exists over GF({args.q})")
    text = format_code_text(C)
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _need(args, name: str) -> int:
    val = getattr(args, name)
    if val is None:
        raise SystemExit2(f"--{name} is required for family {args.family!r}")
    return val


def _cmd_verify(args) -> int:
    ids = args.claims.split(",") if args.claims else None
    try:
        results = run_claims(ids, cost=args.max_cost, workers=args.workers)
    except ValueError as exc:
        raise SystemExit2(str(exc))
    for r in results:
        print(f"{r.claim_id:4s} {r.verdict:13s} {r.seconds:8.2f}s  {r.statement}")
    n_ref = sum(r.verdict == "refuted" for r in results)
    n_skip = sum(r.verdict == "skipped_cost" for r in results)
    print(f"-- {len(results)} claims: {len(results) - n_ref - n_skip} verified, "
          f"{n_ref} refuted, {n_skip} skipped")
    if args.json:
        _write_json([r.to_json_dict() for r in results], args.json)
    if n_ref:
        return EXIT_REFUTED
    if n_skip:
        return EXIT_CAP
    return EXIT_OK


def _cmd_classify(args) -> int:
    report = classify_mds(
        args.q, args.n, args.k,
        semilinear=args.semilinear if args.semilinear else None,
        seed=args.seed,
        workers=args.workers,
    )
    print(f"[{args.n},{args.k}]_{args.q}: {report.matrices_enumerated} systematic "
          f"MDS matrices, {report.class_count} class(es) under {report.mode} equivalence")
    for i, entry in enumerate(report.classes):
        flags = {f: v["value"] for f, v in entry.profile["flags"].items()}
        print(f"  class {i}: orbit {entry.orbit_size}, d={entry.profile['d']}, "
              f"self-dual member={entry.self_dual_member_exists}, {flags}")
    if args.json:
        _write_json(report.to_json_dict(), args.json)
    return EXIT_OK


def _cmd_selfdual_search(args) -> int:
    hits = self_dual_search(args.q, args.n, args.k, args.d)
    print(f"{len(hits)} self-dual [{args.n},{args.k}]_{args.q} code(s) with d >= {args.d}")
    for C in hits[: args.limit]:
        sys.stdout.write(format_code_text(C))
        print()
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="codescope", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)
    cpu = os.cpu_count() or 1

    pa = sub.add_parser("analyze", help="profile a code file")
    pa.add_argument("codefile")
    pa.add_argument("--engine", choices=["auto", "primal", "dual-character"], default="auto")
    pa.add_argument("--primal-cap", type=int, default=default_primal_cap())
    pa.add_argument("--json", metavar="PATH")
    pa.add_argument("--full-coset-table", action="store_true")
    pa.add_argument("--workers", type=int, default=cpu)
    pa.set_defaults(fn=_cmd_analyze)

    pc = sub.add_parser("construct", help="emit a family member as a code file")
    pc.add_argument("family")
    pc.add_argument("--q", type=int, required=True)
    pc.add_argument("--k", type=int)
    pc.add_argument("--n", type=int)
    pc.add_argument("-o", "--output", metavar="PATH")
    pc.set_defaults(fn=_cmd_construct)

    pv = sub.add_parser("verify", help="run the claim registry")
    pv.add_argument("--claims", metavar="C1,C5,...",
                    help=f"subset of {','.join(CLAIM_ORDER)}")
    pv.add_argument("--max-cost", choices=["low", "default", "high"], default="default")
    pv.add_argument("--json", metavar="PATH")
    pv.add_argument("--workers", type=int, default=cpu)
    pv.set_defaults(fn=_cmd_verify)

    pk = sub.add_parser("classify", help="classify MDS codes for (q, n, k)")
    pk.add_argument("--q", type=int, required=True)
    pk.add_argument("--n", type=int, required=True)
    pk.add_argument("--k", type=int, required=True)
    pk.add_argument("--semilinear", action="store_true")
    pk.add_argument("--seed", type=int, default=0)
    pk.add_argument("--json", metavar="PATH")
    pk.add_argument("--workers", type=int, default=cpu)
    pk.set_defaults(fn=_cmd_classify)

    ps = sub.add_parser("selfdual-search", help="search systematic self-dual codes")
    ps.add_argument("--q", type=int, required=True)
    ps.add_argument("--n", type=int, required=True)
    ps.add_argument("--k", type=int, required=True)
    ps.add_argument("--d", type=int, required=True)
    ps.add_argument("--limit", type=int, default=5, help="matrices to print")
    ps.set_defaults(fn=_cmd_selfdual_search)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit2:
        return EXIT_USAGE
    try:
        return args.fn(args)
    except SystemExit2:
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except FileNotFoundError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
