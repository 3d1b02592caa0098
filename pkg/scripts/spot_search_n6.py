"""Budgeted single-diamond searches at n = 6 (or any n) for chosen positions."""

from __future__ import annotations

import argparse
import json
from dataclasses import asdict, dataclass, field

from upwords.search import SearchSpec, exhaustive_search, single_diamond_template
from upwords.words import is_universal


@dataclass
class Config:
    n: int = 6
    positions: list[int] = field(default_factory=lambda: [1, 3, 20])
    node_budget: int = 5_000_000
    time_budget: float | None = 60.0
    threads: int = 1


def run(cfg: Config) -> list[dict]:
    rows = []
    for k in cfg.positions:
        t = single_diamond_template(cfg.n, k)
        if t is None:
            rows.append({"k": k, "error": "no consistent length"})
            continue
        r = exhaustive_search(SearchSpec(t, mode="first", node_budget=cfg.node_budget,
                                         time_budget=cfg.time_budget, threads=cfg.threads))
        w = r.witnesses[0] if r.witnesses else None
        rows.append({
            "k": k,
            "length": len(t),
            "witness": w.render() if w else None,
            "verified": bool(w) and is_universal(w, cfg.n),
            "exhausted": r.exhausted,
            "nodes": r.nodes_explored,
        })
    return rows


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--k", type=int, action="append", help="position (repeatable)")
    p.add_argument("--node-budget", type=int, default=Config.node_budget)
    p.add_argument("--time-budget", type=float, default=Config.time_budget)
    p.add_argument("--threads", type=int, default=1)
    a = p.parse_args()
    cfg = Config(a.n, a.k or Config().positions, a.node_budget, a.time_budget, a.threads)
    print(json.dumps({"config": asdict(cfg)}))
    for row in run(cfg):
        print(json.dumps(row))


if __name__ == "__main__":
    main()
