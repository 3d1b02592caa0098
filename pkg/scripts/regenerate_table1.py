"""Re-derive the single-diamond table for binary words by exhaustive search.

For every n and every position k (counted from the nearer end) this prints
the first witness found, or '-' when the search space is exhausted empty,
next to the theorem-backed verdict and the bundled entry.
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from upwords import tables
from upwords.feasibility import max_single_position, single_diamond_verdict
from upwords.search import SearchSpec, exhaustive_search, single_diamond_template


@dataclass
class Config:
    n_min: int = 1
    n_max: int = 5
    node_budget: int = 10**8
    time_budget: float | None = None


def run(cfg: Config) -> int:
    disagreements = 0
    for n in range(cfg.n_min, cfg.n_max + 1):
        for k in range(1, max_single_position(n) + 1):
            t = single_diamond_template(n, k)
            t0 = time.perf_counter()
            r = exhaustive_search(SearchSpec(t, mode="first", node_budget=cfg.node_budget,
                                             time_budget=cfg.time_budget))
            dt = time.perf_counter() - t0
            found = r.witnesses[0].render() if r.witnesses else ("-" if r.exhausted else "?")
            verdict = single_diamond_verdict(2, n, k)
            entry = tables.single_diamond_entry(n, k)
            bundled = "" if entry is None else (entry.word.render() if entry.word else "-")
            flag = ""
            if entry is not None and r.exhausted and (found == "-") != (bundled == "-"):
                flag = "  <-- disagrees with bundled data"
                disagreements += 1
            label = verdict.kind.value + (f"/{verdict.theorem}" if verdict.theorem else "")
            print(f"n={n} k={k:<3} {found:<40} {label:<16} {r.nodes_explored:>9} nodes {dt:6.2f}s{flag}")
    return disagreements


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-min", type=int, default=Config.n_min)
    p.add_argument("--n-max", type=int, default=Config.n_max)
    p.add_argument("--node-budget", type=int, default=Config.node_budget)
    p.add_argument("--time-budget", type=float, default=None)
    a = p.parse_args()
    bad = run(Config(a.n_min, a.n_max, a.node_budget, a.time_budget))
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
