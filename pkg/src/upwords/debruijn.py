"""De Bruijn graphs with removable edges and Eulerian paths on what remains.

Vertices of the order-``m`` graph are the words of ``A^m`` and edges are the
words of ``A^(m+1)``, both encoded as base-``alpha`` integers.  Edge ``e``
runs from ``e // alpha`` to ``e % alpha**m``; its last letter is ``e % alpha``.
Graphs are immutable: removals return new graphs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

from .errors import BadEdgeWord, BadVertex, EmptyWalk, NoEulerianPath, TooLarge, UpwordError
from .words import DIAMOND, check_alphabet, index_to_word, parse_partial_word, word_index

MAX_VERTICES = 2**24


@dataclass(frozen=True)
class DeBruijnGraph:
    alpha: int
    m: int
    removed: frozenset[int] = field(default_factory=frozenset)
    dropped: frozenset[int] = field(default_factory=frozenset)

    @property
    def num_vertices(self) -> int:
        return self.alpha**self.m - len(self.dropped)

    @property
    def num_edges(self) -> int:
        return self.alpha ** (self.m + 1) - len(self.removed)

    def vertices(self) -> list[int]:
        return [v for v in range(self.alpha**self.m) if v not in self.dropped]

    def edges(self) -> list[int]:
        return [e for e in range(self.alpha ** (self.m + 1)) if e not in self.removed]

    def source(self, e: int) -> int:
        return e // self.alpha

    def target(self, e: int) -> int:
        return e % self.alpha**self.m

    def out_edges(self, v: int) -> list[int]:
        return [e for e in range(v * self.alpha, (v + 1) * self.alpha) if e not in self.removed]

    def in_edges(self, v: int) -> list[int]:
        step = self.alpha**self.m
        return [e for e in range(v, self.alpha ** (self.m + 1), step) if e not in self.removed]

    def is_isolated(self, v: int) -> bool:
        return not self.out_edges(v) and not self.in_edges(v)

    def vertex_word(self, v: int) -> tuple[int, ...]:
        return index_to_word(v, self.m, self.alpha)

    def edge_word(self, e: int) -> tuple[int, ...]:
        return index_to_word(e, self.m + 1, self.alpha)

    def vertex_id(self, v: int | str | Sequence[int]) -> int:
        if isinstance(v, int):
            vid = v
        else:
            try:
                letters = _letters(v, self.alpha)
            except UpwordError as exc:
                raise BadVertex(f"unknown vertex {v!r}: {exc}") from None
            if len(letters) != self.m:
                raise BadVertex(f"vertex {v!r} does not have length {self.m}")
            vid = word_index(letters, self.alpha)
        if not 0 <= vid < self.alpha**self.m or vid in self.dropped:
            raise BadVertex(f"unknown vertex {v!r}")
        return vid


def _letters(word: str | Sequence[int], alpha: int) -> tuple[int, ...]:
    if isinstance(word, str):
        letters = parse_partial_word(word, alpha).symbols
    else:
        letters = tuple(word)
    if any(a == DIAMOND or not 0 <= a < alpha for a in letters):
        raise UpwordError(f"{word!r} is not a full word over an alphabet of size {alpha}")
    return letters


def build(alpha: int, m: int, max_vertices: int = MAX_VERTICES) -> DeBruijnGraph:
    check_alphabet(alpha)
    if m < 1:
        raise UpwordError("graph order must be >= 1")
    if alpha**m > max_vertices:
        raise TooLarge(f"{alpha}^{m} vertices exceeds the guard of {max_vertices}")
    return DeBruijnGraph(alpha, m)


def neighbors(g: DeBruijnGraph, v, direction: str = "out") -> set[int]:
    vid = g.vertex_id(v)
    if direction == "out":
        return {g.target(e) for e in g.out_edges(vid)}
    if direction == "in":
        return {g.source(e) for e in g.in_edges(vid)}
    raise UpwordError(f"direction must be 'in' or 'out', not {direction!r}")


def remove_edges(g: DeBruijnGraph, words: Iterable[str | Sequence[int]]) -> DeBruijnGraph:
    ids = set()
    for w in words:
        try:
            letters = _letters(w, g.alpha)
        except UpwordError as exc:
            raise BadEdgeWord(f"bad edge word {w!r}: {exc}") from None
        if len(letters) != g.m + 1:
            raise BadEdgeWord(f"edge word {w!r} must have length {g.m + 1}")
        ids.add(word_index(letters, g.alpha))
    return remove_edge_ids(g, ids)


def remove_edge_ids(g: DeBruijnGraph, ids: Iterable[int]) -> DeBruijnGraph:
    ids = frozenset(ids)
    if any(not 0 <= e < g.alpha ** (g.m + 1) for e in ids):
        raise BadEdgeWord("edge id out of range")
    return replace(g, removed=g.removed | ids)


def drop_vertices(g: DeBruijnGraph, vertices: Iterable) -> DeBruijnGraph:
    """Delete vertices, which must already be isolated."""
    ids = set()
    for v in vertices:
        vid = g.vertex_id(v)
        if not g.is_isolated(vid):
            raise BadVertex(f"vertex {g.vertex_word(vid)} still has edges")
        ids.add(vid)
    return replace(g, dropped=g.dropped | ids)


@dataclass(frozen=True)
class EdgeWalk:
    alpha: int
    m: int
    start: int
    end: int
    edges: tuple[int, ...]

    @property
    def closed(self) -> bool:
        return self.start == self.end

    def __len__(self) -> int:
        return len(self.edges)

    def vertices(self) -> list[int]:
        size = self.alpha**self.m
        return [self.start] + [e % size for e in self.edges]


def eulerian_path(g: DeBruijnGraph, start, end) -> EdgeWalk:
    """Hierholzer's algorithm on the non-removed edges of ``g``.

    At every vertex the unused out-edge with the smallest final letter is
    taken first, which makes the output deterministic.
    """
    s = g.vertex_id(start)
    t = g.vertex_id(end)
    alpha, size = g.alpha, g.alpha**g.m
    gone = bytearray(alpha * size)
    for e in g.removed:
        gone[e] = 1
    out_deg = [alpha] * size
    in_deg = [alpha] * size
    for e in g.removed:
        out_deg[e // alpha] -= 1
        in_deg[e % size] -= 1

    for v in range(size):
        want = (1 if v == s else 0) - (1 if v == t else 0)
        if out_deg[v] - in_deg[v] != want:
            raise NoEulerianPath(
                "degree",
                f"vertex {g.vertex_word(v)} has out-in = {out_deg[v] - in_deg[v]}, need {want}",
            )

    total = alpha * size - len(g.removed)
    if total == 0:
        if s != t:
            raise NoEulerianPath("disconnected", "no edges left")
        return EdgeWalk(alpha, g.m, s, t, ())

    # weak connectivity over vertices that still carry edges
    seen = bytearray(size)
    seen[s] = 1
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for x in range(alpha):
            e = v * alpha + x
            if not gone[e]:
                w = e % size
                if not seen[w]:
                    seen[w] = 1
                    queue.append(w)
            e = x * size + v
            if not gone[e]:
                w = e // alpha
                if not seen[w]:
                    seen[w] = 1
                    queue.append(w)
    for v in range(size):
        if not seen[v] and (out_deg[v] or in_deg[v]):
            raise NoEulerianPath("disconnected", f"vertex {g.vertex_word(v)} unreachable from start")
    if out_deg[s] == 0:
        raise NoEulerianPath("disconnected", "start vertex has no out-edges")

    nxt = [0] * size
    stack_v = [s]
    stack_e: list[int] = []
    path: list[int] = []
    while stack_v:
        v = stack_v[-1]
        x = nxt[v]
        base = v * alpha
        while x < alpha and gone[base + x]:
            x += 1
        if x < alpha:
            nxt[v] = x + 1
            e = base + x
            stack_v.append(e % size)
            stack_e.append(e)
        else:
            nxt[v] = alpha
            stack_v.pop()
            if stack_e:
                path.append(stack_e.pop())
    path.reverse()
    assert len(path) == total
    return EdgeWalk(alpha, g.m, s, t, tuple(path))


def word_from_walk(walk: EdgeWalk, cyclic: bool = False) -> tuple[int, ...]:
    """Spell a walk: start vertex then one letter per edge (edge letters only if cyclic)."""
    if not walk.edges:
        raise EmptyWalk("cannot spell an empty walk")
    letters = tuple(e % walk.alpha for e in walk.edges)
    if cyclic:
        if not walk.closed:
            raise UpwordError("a cyclic word needs a closed walk")
        return letters
    return index_to_word(walk.start, walk.m, walk.alpha) + letters
