"""Command-line interface: analyze, logicals, gates, search, verify.

Spec files are TOML with keys l, m, c, d, e.g.

    l = 7
    m = 7
    c = "x + y^3 + y^4"
    d = "y + x^3 + x^4"

All commands emit JSON on stdout (human-readable extras go to stderr).
Exit codes: 0 ok, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .codes import BBCodeSpec, build_bb, distance_exhaustive, distance_isd
from .grouprings import RingAutomorphism, RingParams, format_elem, parse_elem
from .gates import (
    cayley_csv, cayley_dot, cz_gate, enumerate_group, gap_generator_file,
    hadamard_gate, swap_gate,
)
from .homology import principality_check, pure_logical_basis, purity_check
from .search import SearchConfig, run_search
from .verify import run_all

USAGE_ERROR = 2


def _default_seed() -> int:
    return int(os.environ.get("BBFOLD_SEED", "20250809"))


class SpecFileError(Exception):
    pass


def load_spec(path: str) -> BBCodeSpec:
    try:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
    except FileNotFoundError as exc:
        raise SpecFileError(f"spec file not found: {path}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise SpecFileError(f"{path}: {exc}") from exc
    for key in ("l", "m", "c", "d"):
        if key not in data:
            raise SpecFileError(f"{path}: missing key {key!r}")
    try:
        params = RingParams(int(data["l"]), int(data["m"]))
        c = parse_elem(params, str(data["c"]))
        d = parse_elem(params, str(data["d"]))
        return BBCodeSpec(params, c, d)
    except ValueError as exc:
        raise SpecFileError(f"{path}: {exc}") from exc


def _emit(payload: dict) -> None:
    json.dump(payload, sys.stdout, indent=2, default=str)
    sys.stdout.write("\n")


def cmd_analyze(args) -> int:
    spec = load_spec(args.spec)
    code = build_bb(spec)
    purity = purity_check(spec)
    princ = principality_check(spec)
    report = None
    budget_weight, total = 0, 0
    for w in range(1, code.n + 1):
        total += math.comb(code.n, w)
        if total > args.exhaustive_budget:
            break
        budget_weight = w
    if budget_weight >= 2:
        report = distance_exhaustive(code, budget_weight,
                                     budget=args.exhaustive_budget)
    if report is not None and report.upper_bound is not None:
        distance = {"d_upper": report.upper_bound, "certified": True,
                    "method": "exhaustive"}
    else:
        isd = distance_isd(code, args.trials, args.seed, jobs=args.jobs)
        distance = {
            "d_upper": isd.upper_bound, "certified": False,
            "method": "isd", "trials": args.trials, "seed": args.seed,
        }
        if report is not None:
            # exhaustive scan proved there is no logical below this weight
            distance["d_lower"] = report.max_weight + 1
    _emit({
        "schema": "bbfold/analyze/v1",
        "l": spec.params.ell, "m": spec.params.m,
        "c": format_elem(spec.c), "d": format_elem(spec.d),
        "n": code.n, "k": code.k,
        **distance,
        "pure": purity.pure,
        "direct_sum": purity.direct_sum,
        "principal": princ.principal,
        "symmetric": spec.is_symmetric(),
        "sequence_dims": {
            "tor1": purity.dim_tor1, "tor2": purity.dim_tor2,
            "pure_h": purity.dim_h_pure_h, "pure_v": purity.dim_h_pure_v,
            "h": purity.dim_h,
        },
    })
    return 0


def _class_payload(idx: int, cls, params: RingParams) -> dict:
    support = [(i, j, "h") for i, j in cls.f.support()]
    support += [(i, j, "v") for i, j in cls.g.support()]
    sides = {s for _, _, s in support}
    return {
        "class_id": idx,
        "side": sides.pop() if len(sides) == 1 else "mixed",
        "f": format_elem(cls.f),
        "g": format_elem(cls.g),
        "support": support,
    }


def _lattice_art(cls, params: RingParams) -> str:
    h_supp = set(cls.f.support())
    v_supp = set(cls.g.support())
    lines = []
    for j in reversed(range(params.m)):
        v_line = "   ".join("o" if (i, j) in v_supp else "|"
                            for i in range(params.ell))
        h_line = "  " + "   ".join("o" if (i, j) in h_supp else "-"
                                   for i in range(params.ell))
        lines.append(v_line)
        lines.append(h_line)
    return "\n".join(lines)


def cmd_logicals(args) -> int:
    spec = load_spec(args.spec)
    basis = pure_logical_basis(spec)
    payload = {
        "schema": "bbfold/logicals/v1",
        "l": spec.params.ell, "m": spec.params.m,
        "k": basis.k,
        "z_classes": [_class_payload(i, z, spec.params)
                      for i, z in enumerate(basis.z_classes)],
        "x_classes": [_class_payload(i, x, spec.params)
                      for i, x in enumerate(basis.x_classes)],
    }
    _emit(payload)
    if args.art:
        for i, z in enumerate(basis.z_classes):
            print(f"\nZ-class {i} ({format_elem(z.f)} | {format_elem(z.g)}):",
                  file=sys.stderr)
            print(_lattice_art(z, spec.params), file=sys.stderr)
    return 0


def _gate_payload(name: str, gate) -> dict:
    return {
        "name": name,
        "kind": gate.kind,
        "permutation": gate.perm.tolist() if gate.perm is not None else None,
        "hadamards": list(gate.hadamards),
        "s_gates": [[q, bool(dag)] for q, dag in gate.s_gates],
        "cz_pairs": [list(p) for p in gate.cz_pairs],
        "logical": gate.logical.to_dense().tolist()
                   if gate.logical is not None else None,
    }


def cmd_gates(args) -> int:
    spec = load_spec(args.spec)
    princ = principality_check(spec)
    notices = []
    with_logical = bool(princ.principal)
    basis = pure_logical_basis(spec) if with_logical else None
    if not with_logical:
        notices.append("code is not principal: no structured logical basis; "
                       "logical actions and group order omitted")
    gates = {
        "swap_x": swap_gate(spec, RingAutomorphism.shift_by(1, 0), basis,
                            with_logical=with_logical),
        "swap_y": swap_gate(spec, RingAutomorphism.shift_by(0, 1), basis,
                            with_logical=with_logical),
        "hadamard": hadamard_gate(spec, basis, with_logical=with_logical),
    }
    if spec.is_symmetric():
        gates["swap_omega"] = swap_gate(spec, RingAutomorphism.omega(), basis,
                                        with_logical=with_logical)
        gates["cz"] = cz_gate(spec, basis, with_logical=with_logical)
    else:
        notices.append("spec is not symmetric: swap_omega and cz omitted")
    group = None
    if with_logical:
        group = enumerate_group([g.logical for g in gates.values()],
                                ceiling=args.ceiling)
    payload = {
        "schema": "bbfold/gates/v1",
        "l": spec.params.ell, "m": spec.params.m,
        "k": basis.k if basis is not None else build_bb(spec).k,
        "gates": [_gate_payload(n, g) for n, g in gates.items()],
        "group_order": group.order if group else None,
        "notices": notices,
    }
    _emit(payload)
    if args.gap and group:
        Path(args.gap).write_text(
            gap_generator_file([g.logical for g in gates.values()]))
        print(f"wrote GAP generator file to {args.gap}", file=sys.stderr)
    if args.cayley and group:
        text = cayley_csv(group) if args.cayley.endswith(".csv") \
            else cayley_dot(group)
        Path(args.cayley).write_text(text)
        print(f"wrote Cayley graph to {args.cayley}", file=sys.stderr)
    return 0


def cmd_search(args) -> int:
    config = SearchConfig(
        ell_values=tuple(args.l), m_values=tuple(args.m),
        weight_c=args.wc, weight_d=args.wd,
        min_k=args.min_k, min_d_bound=args.min_d,
        require_symmetric=args.symmetric, require_pure=args.pure,
        isd_trials=args.trials, seed=args.seed, out_path=args.out)
    records = run_search(config, progress=True, jobs=args.jobs)
    accepted = [r for r in records if r.stage == "accepted"]
    _emit({
        "schema": "bbfold/search/v1",
        "evaluated": len(records),
        "accepted": len(accepted),
        "out": args.out,
        "best": sorted(
            (r.to_json() for r in accepted),
            key=lambda r: (-(r["d_upper"] or 0), -r["k"]))[:10],
    })
    return 0


def cmd_verify(args) -> int:
    results = run_all(only=args.only, fast=args.fast)
    for r in results:
        print(r.line())
    fails = [r for r in results if r.status == "fail"]
    flags = [r for r in results if r.status == "flagged"]
    print(f"\n{len(results) - len(fails) - len(flags)} passed, "
          f"{len(flags)} flagged reference discrepancies, {len(fails)} failed")
    return 1 if fails else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bbfold",
        description="Two-block group-algebra / bivariate-bicycle code toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="parameters, distance and structure flags")
    p.add_argument("spec", help="TOML spec file with keys l, m, c, d")
    p.add_argument("--trials", type=int, default=2000, help="ISD trials")
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--exhaustive-budget", type=int, default=100_000,
                   help="candidate cap for certified exhaustive search")
    p.add_argument("--jobs", type=int, default=1, help="ISD worker threads")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("logicals", help="explicit basis of logical operators")
    p.add_argument("spec")
    p.add_argument("--art", action="store_true", help="dump lattice text-art")
    p.set_defaults(fn=cmd_logicals)

    p = sub.add_parser("gates", help="fold-transversal gates and their group")
    p.add_argument("spec")
    p.add_argument("--gap", help="write a GAP-readable generator file")
    p.add_argument("--cayley", help="write the Cayley graph (.dot/.gv or .csv)")
    p.add_argument("--ceiling", type=int, default=10_000_000)
    p.set_defaults(fn=cmd_gates)

    p = sub.add_parser("search", help="enumerate and filter candidate codes")
    p.add_argument("--l", type=int, nargs="+", required=True)
    p.add_argument("--m", type=int, nargs="+", required=True)
    p.add_argument("--wc", type=int, default=3)
    p.add_argument("--wd", type=int, default=3)
    p.add_argument("--min-k", type=int, default=1)
    p.add_argument("--min-d", type=int, default=0)
    p.add_argument("--symmetric", action="store_true")
    p.add_argument("--pure", action="store_true")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--out", help="append JSONL records here (resumable)")
    p.add_argument("--jobs", type=int, default=1, help="evaluation worker threads")
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser(
        "verify",
        help="run the reference regression matrix (one line per check)")
    p.add_argument("--only", help="restrict to checks whose group name "
                                  "contains this substring")
    p.add_argument("--fast", action="store_true",
                   help="reduced trial counts for the distance checks")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SpecFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
