"""Candidate enumeration and evaluation for two-block code discovery.

Candidates are polynomial pairs of fixed support weights, deduplicated up
to the symmetry group generated by independent monomial shifts of c and d,
the x <-> y swap (square grids), and the antipode.  Evaluation runs a
cheapest-first filter cascade and records results as JSON lines.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterator, Optional

from .codes import BBCodeSpec, build_bb, distance_isd
from .grouprings import RingParams, elem, format_elem, parse_elem
from .homology import principality_check, purity_check

__all__ = ["SearchConfig", "SearchRecord", "canonical_form",
           "enumerate_candidates", "evaluate", "run_search"]

Support = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class SearchConfig:
    ell_values: tuple[int, ...]
    m_values: tuple[int, ...]
    weight_c: int
    weight_d: int
    min_k: int = 1
    min_d_bound: int = 0
    require_symmetric: bool = False
    require_pure: bool = False
    isd_trials: int = 200
    seed: int = 0
    out_path: Optional[str] = None

    def __post_init__(self):
        if self.weight_c < 2 or self.weight_d < 2:
            raise ValueError("support weights must be at least 2")
        if not self.ell_values or not self.m_values:
            raise ValueError("grid ranges must be nonempty")
        if self.require_symmetric and self.weight_c != self.weight_d:
            raise ValueError("symmetric pairs need equal support weights")


def _canon_support(support: Support, ell: int, m: int) -> Support:
    """Minimal translate of a support set; anchors some point at the origin."""
    best = None
    for ai, aj in support:
        moved = tuple(sorted(((i - ai) % ell, (j - aj) % m) for i, j in support))
        if best is None or moved < best:
            best = moved
    return best if best is not None else ()


def _transform(support: Support, ell: int, m: int, swap: bool, antipode: bool) -> Support:
    out = []
    for i, j in support:
        if swap:
            i, j = j, i
        if antipode:
            i, j = (-i) % ell, (-j) % m
        out.append((i % ell, j % m))
    return tuple(out)


def canonical_form(spec: BBCodeSpec) -> tuple:
    """Minimum serialization of (c, d) over the shift/swap/antipode orbit."""
    ell, m = spec.params.ell, spec.params.m
    sc, sd = tuple(spec.c.support()), tuple(spec.d.support())
    swaps = (False, True) if ell == m else (False,)
    best = None
    for swap in swaps:
        for anti in (False, True):
            cc = _canon_support(_transform(sc, ell, m, swap, anti), ell, m)
            dd = _canon_support(_transform(sd, ell, m, swap, anti), ell, m)
            key = (ell, m, cc, dd)
            if best is None or key < best:
                best = key
    return best


def spec_from_canonical(key: tuple) -> BBCodeSpec:
    ell, m, cc, dd = key
    params = RingParams(ell, m)
    return BBCodeSpec(params, elem(params, cc), elem(params, dd))


def enumerate_candidates(config: SearchConfig) -> Iterator[BBCodeSpec]:
    """Deterministic stream of canonical representatives.

    In symmetric mode only c is enumerated and d = c(y, x); otherwise the
    full product of weight-w_c and weight-w_d supports is scanned, which
    grows quickly with the grid size.
    """
    for ell in config.ell_values:
        for m in config.m_values:
            if config.require_symmetric and ell != m:
                continue
            params = RingParams(ell, m)
            monomials = [(i, j) for i in range(ell) for j in range(m)]
            seen: set[tuple] = set()
            for sup_c in combinations(monomials, config.weight_c):
                c = elem(params, sup_c)
                if config.require_symmetric:
                    d_candidates = [c.swap_xy()]
                else:
                    d_candidates = (elem(params, sup_d) for sup_d
                                    in combinations(monomials, config.weight_d))
                for d in d_candidates:
                    if d.weight() != config.weight_d or c.weight() != config.weight_c:
                        continue
                    spec = BBCodeSpec(params, c, d)
                    key = canonical_form(spec)
                    if key in seen:
                        continue
                    seen.add(key)
                    yield spec_from_canonical(key)


@dataclass(frozen=True)
class SearchRecord:
    """Evaluation outcome; reproducible from (spec, seed) alone.

    The timestamp is informational only and excluded from the
    reproducibility comparison (see comparable()).
    """

    ell: int
    m: int
    c: str
    d: str
    n: int
    k: int
    symmetric: bool
    stage: str                      # "accepted" or "rejected:<filter>"
    pure: Optional[bool] = None
    principal: Optional[bool] = None
    d_upper: Optional[int] = None
    certified: bool = False
    trials: int = 0
    seed: int = 0
    timestamp: float = 0.0

    def comparable(self) -> dict:
        out = self.to_json()
        out.pop("timestamp")
        return out

    def to_json(self) -> dict:
        return {
            "ell": self.ell, "m": self.m, "c": self.c, "d": self.d,
            "n": self.n, "k": self.k, "symmetric": self.symmetric,
            "stage": self.stage, "pure": self.pure, "principal": self.principal,
            "d_upper": self.d_upper, "certified": self.certified,
            "trials": self.trials, "seed": self.seed, "timestamp": self.timestamp,
        }

    @classmethod
    def from_json(cls, data: dict) -> "SearchRecord":
        return cls(**data)


def record_seed(master_seed: int, key: tuple) -> int:
    """Stable per-candidate seed derived from the canonical form."""
    import hashlib
    digest = hashlib.sha256(repr((master_seed, key)).encode()).digest()
    return int.from_bytes(digest[:8], "little")


def evaluate(spec: BBCodeSpec, config: SearchConfig) -> SearchRecord:
    """Cheapest-first cascade: k (rank) -> symmetry -> purity -> ISD bound."""
    key = canonical_form(spec)
    seed = record_seed(config.seed, key)
    code = build_bb(spec)
    base = dict(ell=spec.params.ell, m=spec.params.m,
                c=format_elem(spec.c), d=format_elem(spec.d),
                n=code.n, k=code.k, symmetric=spec.is_symmetric(),
                seed=seed, timestamp=time.time())
    if code.k < config.min_k:
        return SearchRecord(stage="rejected:k", **base)
    if config.require_symmetric and not base["symmetric"]:
        return SearchRecord(stage="rejected:symmetry", **base)
    purity = purity_check(spec)
    if config.require_pure and not purity.pure:
        return SearchRecord(stage="rejected:purity", pure=purity.pure, **base)
    principal = principality_check(spec).principal
    report = distance_isd(code, config.isd_trials, seed)
    if config.min_d_bound and (report.upper_bound is None
                               or report.upper_bound < config.min_d_bound):
        return SearchRecord(stage="rejected:distance", pure=purity.pure,
                            principal=principal, d_upper=report.upper_bound,
                            trials=config.isd_trials, **base)
    return SearchRecord(stage="accepted", pure=purity.pure, principal=principal,
                        d_upper=report.upper_bound, trials=config.isd_trials,
                        **base)


def run_search(config: SearchConfig, *, progress: bool = False,
               jobs: int = 1) -> list[SearchRecord]:
    """Evaluate the whole candidate stream, appending records to out_path.

    Restarting with the same output file skips already-recorded canonical
    forms, so interrupted runs resume where they stopped.  With jobs > 1
    candidates are evaluated by a worker pool; records flow through the
    single writer, so the file order is nondeterministic but each record's
    content is a pure function of (spec, master seed).
    """
    done: set[tuple] = set()
    out_file = None
    if config.out_path:
        path = Path(config.out_path)
        if path.exists():
            for line in path.read_text().splitlines():
                if line.strip():
                    rec = SearchRecord.from_json(json.loads(line))
                    params = RingParams(rec.ell, rec.m)
                    old = BBCodeSpec(params, parse_elem(params, rec.c),
                                     parse_elem(params, rec.d))
                    done.add(canonical_form(old))
        out_file = path.open("a")
    records = []

    def sink(rec: SearchRecord) -> None:
        records.append(rec)
        if out_file:
            out_file.write(json.dumps(rec.to_json()) + "\n")
            out_file.flush()
        if progress and len(records) % 50 == 0:
            print(f"  evaluated {len(records)} candidates", flush=True)

    fresh = (spec for spec in enumerate_candidates(config)
             if canonical_form(spec) not in done)
    try:
        if jobs > 1:
            from concurrent.futures import ThreadPoolExecutor
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                for rec in pool.map(lambda s: evaluate(s, config), fresh):
                    sink(rec)
        else:
            for spec in fresh:
                sink(evaluate(spec, config))
    finally:
        if out_file:
            out_file.close()
    return records
