"""Exhaustive search for upwords matching a diamond template.

The fast path assigns free cells left to right and keeps an incremental
coverage table, cutting a branch as soon as some word of ``A^n`` would be
covered twice.  :func:`brute_force_oracle` is the independent baseline: it
tries every assignment and asks the verifier.
"""

from __future__ import annotations

import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .errors import BadParams, BadWindow, Contradiction, CountMismatch, TooLarge
from .feasibility import (
    FREE,
    DiamondTemplate,
    max_single_position,
    propagate_constraints,
    single_diamond_length,
    window_total,
)
from .words import DIAMOND, PartialWord, _completions, _relabel, is_universal

DEFAULT_NODE_BUDGET = 10**9
ORACLE_GUARD = 2**22
#: largest binary n swept without ``allow_large``
SWEEP_MAX_N = 7


@dataclass(frozen=True)
class SearchSpec:
    template: DiamondTemplate
    mode: str = "all"  # "all" or "first"
    symmetry_reduction: bool = False
    node_budget: int = DEFAULT_NODE_BUDGET
    time_budget: float | None = None
    pruning: bool = True
    threads: int = 1

    def __post_init__(self):
        if self.mode not in ("all", "first"):
            raise BadParams(f"mode must be 'all' or 'first', not {self.mode!r}")

    @property
    def alpha(self) -> int:
        return self.template.alpha

    @property
    def n(self) -> int:
        return self.template.n

    @property
    def cyclic(self) -> bool:
        return self.template.cyclic


@dataclass
class SearchResult:
    witnesses: list[PartialWord] = field(default_factory=list)
    #: False only when a node or time budget stopped the search early
    exhausted: bool = True
    nodes_explored: int = 0

    def to_dict(self) -> dict:
        return {
            "witnesses": [w.render() for w in self.witnesses],
            "exhausted": self.exhausted,
            "nodes": self.nodes_explored,
        }


def pattern_length_check(template: DiamondTemplate) -> int:
    """Check the window-count identity; returns the total or raises CountMismatch."""
    N, n, alpha = len(template), template.n, template.alpha
    if template.cyclic and N < n:
        raise BadWindow(f"cyclic template of length {N} is shorter than n={n}")
    target = alpha**n
    total = window_total(N, n, alpha, template.diamonds, template.cyclic)
    if total != target:
        raise CountMismatch(target, total)
    if template.cyclic and template.diamonds and n >= 2:
        ok = any(N == alpha ** (n - d) and (d * N) % n == 0 for d in range(1, n))
        if not ok:
            raise CountMismatch(target, total, f"length {N} fails the cyclic divisibility screen")
    return total


def _mirror_symmetric(template: DiamondTemplate) -> bool:
    return template.cells == template.cells[::-1]


def is_representative(word: PartialWord, template: DiamondTemplate) -> bool:
    """Whether ``word`` is the canonical member of its symmetry class within ``template``.

    Letters must appear in first-occurrence order; for a linear template that
    equals its own mirror image the word must also not exceed its reversal.
    Templates with fixed letters are not reduced.
    """
    if any(c >= 0 for c in template.cells):
        return True
    s = word.symbols
    if _relabel(s) != s:
        return False
    if not template.cyclic and _mirror_symmetric(template):
        return s <= _relabel(s[::-1])
    return True


class _Budget(Exception):
    pass


class _Stop(Exception):
    pass


class _Engine:
    def __init__(self, spec: SearchSpec, template: DiamondTemplate, anchors):
        self.spec = spec
        self.t = template
        self.N = N = len(template)
        self.n = n = template.n
        self.alpha = alpha = template.alpha
        self.anchors = anchors
        self.reduce = spec.symmetry_reduction and not any(c >= 0 for c in template.cells)
        cells = template.cells
        weights = [alpha ** (n - 1 - j) for j in range(n)]
        count = N if template.cyclic else N - n + 1
        self.complete_at: list[list[tuple[list[tuple[int, int]], list[int]]]] = [[] for _ in range(N)]
        for s in range(count):
            letters, dweights = [], []
            for j in range(n):
                p = (s + j) % N
                if cells[p] == DIAMOND:
                    dweights.append(weights[j])
                else:
                    letters.append((p, weights[j]))
            last = s + n - 1
            at = last if (spec.pruning and last < N) else N - 1
            self.complete_at[at].append((letters, _completions(dweights, alpha)))
        self.counts = bytearray(alpha**n)
        self.vals = [DIAMOND] * N
        self.nodes = 0
        self.witnesses: list[PartialWord] = []
        self.deadline = None if spec.time_budget is None else time.monotonic() + spec.time_budget

    def run(self, first_choice: int | None = None) -> SearchResult:
        exhausted = True
        limit = sys.getrecursionlimit()
        if limit < self.N + 200:
            sys.setrecursionlimit(self.N + 200)
        try:
            self._dfs(0, -1, first_choice)
        except _Budget:
            exhausted = False
        except _Stop:
            pass
        finally:
            sys.setrecursionlimit(max(limit, sys.getrecursionlimit()))
        return SearchResult(self.witnesses, exhausted, self.nodes)

    def _choices(self, p: int, maxused: int):
        c = self.t.cells[p]
        if c == DIAMOND:
            return (DIAMOND,)
        if c >= 0:
            return (c,)
        anchor = self.anchors[p] if self.spec.pruning else None
        if anchor is not None:
            q, flip = anchor
            return (self.vals[q] ^ flip,)
        top = min(self.alpha, maxused + 2) if self.reduce else self.alpha
        return range(top)

    def _dfs(self, p: int, maxused: int, first_choice: int | None) -> None:
        if p == self.N:
            word = PartialWord(tuple(self.vals), self.alpha)
            if not self.spec.symmetry_reduction or is_representative(word, self.t):
                self.witnesses.append(word)
                if self.spec.mode == "first":
                    raise _Stop
            return
        counts, vals = self.counts, self.vals
        choices = self._choices(p, maxused)
        first_choice_next = first_choice
        if first_choice is not None and len(choices) > 1:
            choices = (first_choice,) if first_choice in choices else ()
            first_choice_next = None
        for v in choices:
            self.nodes += 1
            if self.nodes > self.spec.node_budget:
                raise _Budget
            if self.deadline is not None and not self.nodes & 0xFFF and time.monotonic() > self.deadline:
                raise _Budget
            vals[p] = v
            added = []
            ok = True
            for letters, offsets in self.complete_at[p]:
                base = 0
                for q, w in letters:
                    base += vals[q] * w
                for off in offsets:
                    code = base + off
                    if counts[code]:
                        ok = False
                        break
                    counts[code] = 1
                    added.append(code)
                if not ok:
                    break
            if ok:
                self._dfs(p + 1, max(maxused, v), first_choice_next)
            for code in added:
                counts[code] = 0
        vals[p] = DIAMOND


def _prepare(spec: SearchSpec):
    """Refine the template; returns ``(template, anchors)`` or None on contradiction."""
    t = spec.template
    if not t.cyclic:
        pattern_length_check(t)
    try:
        ref = propagate_constraints(t)
    except Contradiction:
        return None
    if t.cyclic:
        pattern_length_check(ref.template)
    if not spec.pruning:
        # keep the cyclic diamond closure, drop letter relations and fixed-letter seeding
        return (ref.template if t.cyclic else t), (None,) * len(t)
    return ref.template, ref.anchors


def _run_branch(args) -> SearchResult:
    spec, template, anchors, choice = args
    return _Engine(spec, template, anchors).run(choice)


def exhaustive_search(spec: SearchSpec) -> SearchResult:
    prepared = _prepare(spec)
    if prepared is None:
        return SearchResult([], True, 0)
    template, anchors = prepared
    if spec.threads <= 1:
        return _Engine(spec, template, anchors).run()

    # split on the first cell with a genuine choice
    first = next(
        (i for i, c in enumerate(template.cells) if c == FREE and (not spec.pruning or anchors[i] is None)),
        None,
    )
    reduce = spec.symmetry_reduction and not any(c >= 0 for c in template.cells)
    if first is None or reduce:
        return _Engine(spec, template, anchors).run()
    jobs = [(spec, template, anchors, a) for a in range(spec.alpha)]
    with ProcessPoolExecutor(max_workers=min(spec.threads, spec.alpha)) as pool:
        parts = list(pool.map(_run_branch, jobs))
    merged = SearchResult([], True, 0)
    for part in parts:
        merged.nodes_explored += part.nodes_explored
        if spec.mode == "first" and merged.witnesses:
            continue
        merged.witnesses.extend(part.witnesses)
        if not part.exhausted:
            merged.exhausted = False
            if spec.mode == "first":
                break
    return merged


def brute_force_oracle(spec: SearchSpec, max_assignments: int = ORACLE_GUARD) -> SearchResult:
    """Try every letter assignment to the free cells and keep the universal ones."""
    t = spec.template
    free = [i for i, c in enumerate(t.cells) if c == FREE]
    total = t.alpha ** len(free)
    if total > max_assignments:
        raise TooLarge(f"{total} assignments exceed the oracle guard of {max_assignments}")
    N, n = len(t), t.n
    if not t.cyclic and N < n:
        return SearchResult([], True, 0)
    witnesses = []
    cells = list(t.cells)
    nodes = 0
    for letters in product(range(t.alpha), repeat=len(free)):
        nodes += 1
        for i, a in zip(free, letters):
            cells[i] = a
        word = PartialWord(tuple(cells), t.alpha)
        if not is_universal(word, n, t.cyclic):
            continue
        if spec.symmetry_reduction and not is_representative(word, t):
            continue
        witnesses.append(word)
        if spec.mode == "first":
            break
    return SearchResult(witnesses, True, nodes)


def single_diamond_template(n: int, k: int, alpha: int = 2) -> DiamondTemplate | None:
    N = single_diamond_length(n, k, alpha)
    if N is None:
        return None
    return DiamondTemplate.with_diamonds(N, [k], n, alpha)


def sweep_single_diamond(alpha: int, n: int, mode: str = "first", node_budget: int = DEFAULT_NODE_BUDGET,
                         allow_large: bool = False, **search_options) -> dict[int, SearchResult]:
    """Search every legal single-diamond position ``k`` (counted from the nearer end)."""
    if not allow_large and (alpha > 2 or n > SWEEP_MAX_N):
        raise TooLarge(f"sweeps beyond alpha=2, n={SWEEP_MAX_N} need allow_large=True")
    results: dict[int, SearchResult] = {}
    kmax = max_single_position(n) if alpha == 2 else alpha**n + n
    for k in range(1, kmax + 1):
        t = single_diamond_template(n, k, alpha)
        if t is None:
            continue
        if k > len(t) + 1 - k:
            break
        spec = SearchSpec(t, mode=mode, node_budget=node_budget, **search_options)
        results[k] = exhaustive_search(spec)
    return results
