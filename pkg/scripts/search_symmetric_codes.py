#!/usr/bin/env python3
"""Search symmetric weight-3 codes on square grids and persist records.

The default run scans l = m = 7 and rediscovers the canonical form of the
[[98,6,12]] pair among the accepted records.
"""

from __future__ import annotations

import argparse

from bbfold.search import SearchConfig, run_search


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--side", type=int, nargs="+", default=[7])
    parser.add_argument("--weight", type=int, default=3)
    parser.add_argument("--min-k", type=int, default=4)
    parser.add_argument("--min-d", type=int, default=8)
    parser.add_argument("--trials", type=int, default=400)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--out", default="symmetric_search.jsonl")
    args = parser.parse_args()

    config = SearchConfig(
        ell_values=tuple(args.side), m_values=tuple(args.side),
        weight_c=args.weight, weight_d=args.weight,
        min_k=args.min_k, min_d_bound=args.min_d,
        require_symmetric=True, require_pure=True,
        isd_trials=args.trials, seed=args.seed, out_path=args.out)
    records = run_search(config, progress=True, jobs=args.jobs)
    accepted = [r for r in records if r.stage == "accepted"]
    accepted.sort(key=lambda r: (-(r.d_upper or 0), -r.k))
    print(f"\nevaluated {len(records)} classes, accepted {len(accepted)}")
    for rec in accepted[:15]:
        print(f"  [[{rec.n},{rec.k},<={rec.d_upper}]]  c = {rec.c}   d = {rec.d}")


if __name__ == "__main__":
    main()
