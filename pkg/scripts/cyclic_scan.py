"""Scan cyclic parameters: verdicts over a grid, then searches over small templates.

The search phase enumerates every diamond layout of a cyclic binary word
whose window count works out, for each requested n, and reports the ones
with witnesses (grouped by canonical form).
"""

from __future__ import annotations

import argparse
import itertools
from dataclasses import dataclass

from upwords.errors import CountMismatch
from upwords.feasibility import DiamondTemplate, cyclic_parameter_verdict, window_total
from upwords.search import SearchSpec, exhaustive_search
from upwords.words import canonicalize


@dataclass
class Config:
    alpha_max: int = 5
    n_max: int = 20
    search_ns: tuple[int, ...] = (2, 3, 4)
    node_budget: int = 10**7


def verdict_grid(cfg: Config) -> None:
    for alpha in range(2, cfg.alpha_max + 1):
        cells = []
        for n in range(2, cfg.n_max + 1):
            v = cyclic_parameter_verdict(alpha, n)
            cells.append(f"{n}:{','.join(map(str, v.d_list))}" if v.d_list else f"{n}:{v.theorem}")
        print(f"alpha={alpha}  " + "  ".join(cells))


def template_scan(cfg: Config, n: int) -> None:
    classes: dict[str, int] = {}
    templates = 0
    for N in range(n, 2**n + 1):
        for r in range(1, N):
            for pos in itertools.combinations(range(1, N + 1), r):
                if pos[0] != 1 or window_total(N, n, 2, pos, cyclic=True) != 2**n:
                    continue  # rotations: the first cell is always a diamond
                t = DiamondTemplate.with_diamonds(N, pos, n, cyclic=True)
                try:
                    res = exhaustive_search(SearchSpec(t, node_budget=cfg.node_budget))
                except CountMismatch:
                    continue
                templates += 1
                for w in res.witnesses:
                    key = canonicalize(w, cyclic=True).render()
                    classes[key] = classes.get(key, 0) + 1
    print(f"n={n}: {templates} templates searched, {len(classes)} witness class(es)")
    for key, count in sorted(classes.items()):
        print(f"  {key}  ({count} witnesses)")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--alpha-max", type=int, default=Config.alpha_max)
    p.add_argument("--n-max", type=int, default=Config.n_max)
    p.add_argument("--search-n", type=int, action="append")
    a = p.parse_args()
    cfg = Config(a.alpha_max, a.n_max, tuple(a.search_n or Config.search_ns))
    verdict_grid(cfg)
    for n in cfg.search_ns:
        template_scan(cfg, n)


if __name__ == "__main__":
    main()
