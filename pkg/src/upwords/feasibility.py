"""Existence and non-existence verdicts, and constraint propagation over templates."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import gcd
from typing import Sequence

from .errors import BadParams, Contradiction
from .tables import entries, single_diamond_entry
from .words import DIAMOND, LETTER_GLYPHS, PartialWord, check_alphabet, parse_partial_word

FREE = -2

THEOREM_IDS = ("T3.1", "T3.2", "T3.3", "T4.1", "C4.2", "C5.2", "C5.3", "T6.2", "L5.1-count", "N2D1")

CYCLIC_WITNESS = "*001*110"


@dataclass(frozen=True)
class DiamondTemplate:
    """A layout of diamonds, fixed letters and free letter cells.

    Cells hold :data:`~upwords.words.DIAMOND`, :data:`FREE` or a letter.
    """

    cells: tuple[int, ...]
    n: int
    alpha: int = 2
    cyclic: bool = False

    def __post_init__(self):
        check_alphabet(self.alpha)
        object.__setattr__(self, "cells", tuple(self.cells))
        if not self.cells:
            raise BadParams("a template needs at least one cell")
        if self.n < 1:
            raise BadParams("factor length must be >= 1")
        for c in self.cells:
            if c not in (DIAMOND, FREE) and not 0 <= c < self.alpha:
                raise BadParams(f"cell value {c} outside alphabet of size {self.alpha}")

    @classmethod
    def from_text(cls, text: str, n: int, alpha: int = 2, cyclic: bool = False) -> "DiamondTemplate":
        """Parse ``'?'`` (free), ``'*'``/``'.'``/``'◊'`` (diamond) and letter glyphs."""
        cells = []
        for ch in text.strip():
            if ch == "?":
                cells.append(FREE)
            else:
                cells.extend(parse_partial_word(ch, alpha).symbols)
        return cls(tuple(cells), n, alpha, cyclic)

    @classmethod
    def with_diamonds(cls, length: int, positions: Sequence[int], n: int, alpha: int = 2,
                      cyclic: bool = False) -> "DiamondTemplate":
        """All-free template of ``length`` cells with diamonds at 1-based ``positions``."""
        if length < 1:
            raise BadParams("template length must be >= 1")
        cells = [FREE] * length
        for p in positions:
            if not 1 <= p <= length:
                raise BadParams(f"diamond position {p} outside 1..{length}")
            cells[p - 1] = DIAMOND
        return cls(tuple(cells), n, alpha, cyclic)

    @classmethod
    def from_word(cls, word: PartialWord, n: int, cyclic: bool = False) -> "DiamondTemplate":
        return cls(word.symbols, n, word.alpha, cyclic)

    def __len__(self) -> int:
        return len(self.cells)

    @property
    def diamonds(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, c in enumerate(self.cells) if c == DIAMOND)

    @property
    def free(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, c in enumerate(self.cells) if c == FREE)

    def reversed(self) -> "DiamondTemplate":
        return DiamondTemplate(self.cells[::-1], self.n, self.alpha, self.cyclic)

    def render(self) -> str:
        return "".join("*" if c == DIAMOND else "?" if c == FREE else LETTER_GLYPHS[c] for c in self.cells)

    def __str__(self) -> str:
        return self.render()

    def matches(self, word: PartialWord) -> bool:
        if len(word) != len(self.cells):
            return False
        for c, s in zip(self.cells, word.symbols):
            if c == DIAMOND and s != DIAMOND:
                return False
            if c != DIAMOND and s == DIAMOND:
                return False
            if c >= 0 and s != c:
                return False
        return True


def window_total(length: int, n: int, alpha: int, diamonds: Sequence[int], cyclic: bool = False) -> int:
    """Sum of ``alpha**d`` over all windows, ``d`` the diamonds in the window."""
    is_d = [False] * length
    for p in diamonds:
        is_d[p - 1] = True
    count = length if cyclic else length - n + 1
    if count <= 0:
        return 0
    total = 0
    for i in range(count):
        d = sum(is_d[(i + j) % length] for j in range(n))
        total += alpha**d
    return total


def single_diamond_length(n: int, k: int, alpha: int = 2) -> int | None:
    """Length of a linear word with one diamond at ``k`` satisfying the window-count identity."""
    target = alpha**n
    N = max(n, k)
    while True:
        t = window_total(N, n, alpha, [k])
        if t == target:
            return N
        if t > target:
            return None
        N += 1


def max_single_position(n: int) -> int:
    """Largest position, counted from the nearer end, a binary single diamond can occupy."""
    return 1 if n == 1 else 2 ** (n - 1)


class VerdictKind(str, Enum):
    EXISTS = "exists"
    NONEXISTENT = "nonexistent"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    theorem: str | None = None
    construction: str | None = None
    witness: PartialWord | None = None
    note: str = ""
    params: dict = field(default_factory=dict)
    d_list: tuple[int, ...] = ()

    def to_dict(self) -> dict:
        out = {"verdict": self.kind.value, "theorem": self.theorem, "params": dict(self.params)}
        if self.construction:
            out["construction"] = self.construction
        if self.witness is not None:
            out["witness"] = self.witness.render()
        if self.note:
            out["note"] = self.note
        if self.d_list or "d_list" in self.params:
            out["d_list"] = list(self.d_list)
        return out


def _exists(construction=None, witness=None, note="", **params) -> Verdict:
    return Verdict(VerdictKind.EXISTS, construction=construction, witness=witness, note=note, params=params)


def _nonexistent(theorem: str, note="", **params) -> Verdict:
    return Verdict(VerdictKind.NONEXISTENT, theorem=theorem, note=note, params=params)


def _unknown(note="", witness=None, d_list=(), **params) -> Verdict:
    return Verdict(VerdictKind.UNKNOWN, witness=witness, note=note, params=params, d_list=tuple(d_list))


def normalize_position(k: int, length: int) -> tuple[int, bool]:
    """Return ``(distance from the nearer end, counted_from_end)``."""
    if not 1 <= k <= length:
        raise BadParams(f"position {k} outside 1..{length}")
    mirror = length + 1 - k
    return (mirror, True) if mirror < k else (k, False)


def single_diamond_verdict(alpha: int, n: int, k: int, length: int | None = None) -> Verdict:
    """Verdict for a linear upword with one diamond at position ``k``.

    ``k`` is taken as already normalised to the nearer end unless ``length``
    is given, in which case it is an absolute position in a word of that length.
    """
    check_alphabet(alpha)
    if n < 1 or k < 1:
        raise BadParams("need n >= 1 and k >= 1")
    if length is not None:
        k, _ = normalize_position(k, length)
    params = {"alpha": alpha, "n": n, "k": k}
    if alpha >= 3:
        if n >= 2:
            return _nonexistent("T3.1", **params)
        return _exists("trivial", PartialWord((DIAMOND,), alpha), **params)
    if n == 1:
        if k != 1:
            raise BadParams("for n = 1 the only single-diamond word is '*'")
        return _exists("trivial", PartialWord((DIAMOND,), 2), **params)
    if k > max_single_position(n):
        raise BadParams(f"position {k} is past the middle of any consistent word for n={n}")
    if length is not None and single_diamond_length(n, k) != length:
        raise BadParams(f"length {length} is inconsistent with a single diamond at {k} for n={n}")
    if k == n:
        return _nonexistent("T3.2", **params)
    if (n, k) in {(3, 4), (4, 5), (4, 7)}:
        return _nonexistent("T3.3", **params)
    if k == 1:
        return _exists("pos1", **params)
    if 2 <= k <= n - 1:
        return _exists("posk", **params)
    entry = single_diamond_entry(n, k)
    witness = entry.word if entry is not None else None
    return _unknown("conjectured to exist; no construction known", witness, **params)


def _table2_witness(n: int, lx: int, ly: int, lz: int) -> PartialWord | None:
    for e in entries(2):
        if e.n != n:
            continue
        p, q = e.positions
        shape = (p - 1, q - p - 1, len(e.word) - q)
        if shape in ((lx, ly, lz), (lz, ly, lx)):
            return e.word if shape == (lx, ly, lz) else e.word.reversed()
    return None


def two_diamond_shape_verdict(n: int, lx: int, ly: int, lz: int) -> Verdict:
    """Binary linear words ``x * y * z`` with the given segment lengths."""
    if n < 2 or min(lx, ly, lz) < 0:
        raise BadParams("need n >= 2 and non-negative segment lengths")
    params = {"alpha": 2, "n": n, "shape": [lx, ly, lz]}
    if ly == 0:
        if n == 2 and (lx, lz) == (0, 0):
            return _exists(witness=parse_partial_word("**"), note="adjacent diamonds", **params)
        if n == 3 and sorted((lx, lz)) == [0, 4]:
            w = parse_partial_word("**0111")
            return _exists("nm1_diamonds", w if lx == 0 else w.reversed(), **params)
        return _nonexistent("C4.2", **params)
    if n >= 5 and (min(lx, ly, lz) >= n or lx == n - 1 or lz == n - 1 or ly <= n - 2):
        return _nonexistent("T4.1", **params)
    if n >= 4 and ly == 2 * n - 3 and sorted((lx, lz)) == [0, 2**n - 2 * n - 1]:
        return _exists("two_diamonds", **params)
    return _unknown(witness=_table2_witness(n, lx, ly, lz), **params)


def feasible_cyclic_d(alpha: int, n: int) -> list[int]:
    return [d for d in range(1, n) if (d * alpha ** (n - d)) % n == 0]


def cyclic_parameter_verdict(alpha: int, n: int) -> Verdict:
    check_alphabet(alpha)
    if n < 2:
        raise BadParams("cyclic verdicts need n >= 2")
    params = {"alpha": alpha, "n": n}
    if gcd(alpha, n) == 1:
        return Verdict(VerdictKind.NONEXISTENT, theorem="C5.3", params=params)
    ds = feasible_cyclic_d(alpha, n)
    if alpha == 2 and n == 2:
        return Verdict(VerdictKind.NONEXISTENT, theorem="N2D1", params=params)
    if not ds:
        return Verdict(VerdictKind.NONEXISTENT, theorem="C5.2", params=params)
    witness = parse_partial_word(CYCLIC_WITNESS) if (alpha, n) == (2, 4) else None
    note = "diamonds per window must be one of d_list"
    if witness is not None:
        note += "; a witness with d=1 is bundled"
    return Verdict(VerdictKind.UNKNOWN, witness=witness, note=note, params=params, d_list=tuple(ds))


def prefix_run_verdict(alpha: int, n: int, d: int, template: DiamondTemplate | None = None) -> Verdict:
    """Words that start with exactly ``d`` diamonds."""
    check_alphabet(alpha)
    if n < 1 or d < 1:
        raise BadParams("need n >= 1 and d >= 1")
    params = {"alpha": alpha, "n": n, "d": d}
    if template is not None:
        cells = template.cells
        if len(cells) < d or any(c != DIAMOND for c in cells[:d]) or (len(cells) > d and cells[d] == DIAMOND):
            raise BadParams(f"template {template} does not start with exactly {d} diamonds")
    if d == n - 1 and alpha == 2 and n >= 2:
        return _exists("nm1_diamonds", **params)
    if alpha == 2 and n >= 4 and 2 <= d <= n - 2 and template is not None:
        run = template.cells[d:n + 2]
        if len(template.cells) >= n + 2 and all(c != DIAMOND for c in run):
            return _nonexistent("T6.2", **params)
    return _unknown(**params)


# -- constraint propagation ------------------------------------------------


class _ParityUnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))
        self.parity = [0] * size  # parity relative to parent

    def root(self, x: int) -> tuple[int, int]:
        p = 0
        while self.parent[x] != x:
            p ^= self.parity[x]
            x = self.parent[x]
        return x, p

    def union(self, a: int, b: int, flip: int) -> bool:
        """Record ``a == b xor flip``; False if that contradicts earlier relations."""
        ra, pa = self.root(a)
        rb, pb = self.root(b)
        if ra == rb:
            return (pa ^ pb) == flip
        if ra < rb:
            ra, rb, pa, pb = rb, ra, pb, pa
        self.parent[ra] = rb
        self.parity[ra] = pa ^ pb ^ flip
        return True


@dataclass(frozen=True)
class Refinement:
    """Result of propagation: the refined template plus letter relations.

    ``anchors[i]`` is ``(j, flip)`` when cell ``i`` (0-based) must equal
    cell ``j < i`` xor ``flip``, and ``None`` otherwise.
    """

    template: DiamondTemplate
    anchors: tuple[tuple[int, int] | None, ...]
    classes: tuple[tuple[int, int], ...]  # (class id, parity) per cell

    def relation(self, i: int, j: int) -> str | None:
        """``'equal'``, ``'complement'`` or ``None`` for 1-based cells ``i`` and ``j``."""
        ci, pi = self.classes[i - 1]
        cj, pj = self.classes[j - 1]
        if ci != cj:
            return None
        return "equal" if pi == pj else "complement"


def _lemma_pairs(cells: Sequence[int], n: int):
    """Yield ``(i, j, flip)`` 0-based relations from the linear diamond lemma."""
    N = len(cells)
    for k in range(1, N + 1):
        if cells[k - 1] != DIAMOND or k + n > N or cells[k + n - 1] == DIAMOND:
            continue
        for i in range(1, n):
            if cells[i - 1] == DIAMOND:
                continue
            if cells[k + i - 1] == DIAMOND:
                raise Contradiction("L2.3", f"diamond at {k + i} opposite letter cell {i}")
            yield i - 1, k + i - 1, 0
        if cells[n - 1] != DIAMOND:
            yield n - 1, k + n - 1, 1


def propagate_constraints(t: DiamondTemplate, mirror: bool = True) -> Refinement:
    """Close a template under the diamond lemmas.

    Linear templates gain equal/complement relations between letter cells
    (and fixed letters where a class meets one), read left to right and, with
    ``mirror``, right to left as well; cyclic templates gain the diamonds
    forced at distance ``n``.  Raises :class:`Contradiction`.
    """
    if t.n < 1:
        raise BadParams("template needs n >= 1")
    cells = list(t.cells)
    N = len(cells)
    if t.cyclic:
        if t.n >= 2:
            todo = [i for i, c in enumerate(cells) if c == DIAMOND]
            while todo:
                j = (todo.pop() + t.n) % N
                if cells[j] == DIAMOND:
                    continue
                if cells[j] >= 0:
                    raise Contradiction("L5.1", f"diamond forced onto fixed letter at {j + 1}")
                cells[j] = DIAMOND
                todo.append(j)
        refined = DiamondTemplate(tuple(cells), t.n, t.alpha, True)
        return Refinement(refined, (None,) * N, tuple((i, 0) for i in range(N)))

    alpha = t.alpha
    # nodes 0..N-1 are cells, the rest stand for letters
    n_const = 1 if alpha == 2 else alpha
    uf = _ParityUnionFind(N + n_const)

    def const(v: int) -> tuple[int, int]:
        return (N, v) if alpha == 2 else (N + v, 0)

    def relate(a: int, b: int, flip: int, why: str) -> None:
        if flip and alpha != 2:
            raise Contradiction("T3.1", f"complement relation between cells {a + 1} and {b + 1} needs alpha = 2")
        if not uf.union(a, b, flip):
            raise Contradiction("L2.3", why)

    for i, c in enumerate(cells):
        if c >= 0:
            node, flip = const(c)
            relate(i, node, flip, f"cell {i + 1} fixed to conflicting letters")

    if t.n >= 2:
        for orient in ((0, 1) if mirror else (0,)):
            view = cells if orient == 0 else cells[::-1]
            for a, b, flip in _lemma_pairs(view, t.n):
                if orient:
                    a, b = N - 1 - a, N - 1 - b
                relate(a, b, flip, f"cells {a + 1} and {b + 1} forced both equal and complementary")

    if alpha != 2:
        roots = {uf.root(N + v)[0] for v in range(alpha)}
        if len(roots) < alpha:
            raise Contradiction("L2.3", "two different letters forced equal")

    roots = [uf.root(x) for x in range(N + n_const)]
    const_of_root: dict[int, tuple[int, int]] = {}
    for v in range(n_const):
        r, p = roots[N + v]
        const_of_root[r] = (v, p)

    refined_cells = list(cells)
    anchors: list[tuple[int, int] | None] = [None] * N
    first_in_class: dict[int, tuple[int, int]] = {}
    for i in range(N):
        if cells[i] == DIAMOND:
            continue
        r, p = roots[i]
        if r in const_of_root:
            v, pc = const_of_root[r]
            refined_cells[i] = (p ^ pc) if alpha == 2 else v
        if r in first_in_class:
            j, pj = first_in_class[r]
            anchors[i] = (j, p ^ pj)
        else:
            first_in_class[r] = (i, p)
    refined = DiamondTemplate(tuple(refined_cells), t.n, alpha, False)
    return Refinement(refined, tuple(anchors), tuple(roots[:N]))


def cyclic_template_verdict(t: DiamondTemplate) -> Verdict:
    """Screen a cyclic template with the cyclic diamond lemma and the window count."""
    params = {"alpha": t.alpha, "n": t.n, "length": len(t), "diamonds": list(t.diamonds)}
    if t.n >= 2 and gcd(t.alpha, t.n) == 1:
        return _nonexistent("C5.3", **params)
    try:
        refined = propagate_constraints(DiamondTemplate(t.cells, t.n, t.alpha, True)).template
    except Contradiction as exc:
        return _nonexistent("L5.1-count", note=str(exc), **params)
    total = window_total(len(t), t.n, t.alpha, refined.diamonds, cyclic=True)
    if total != t.alpha**t.n:
        return _nonexistent("L5.1-count", note=f"window count {total} != {t.alpha ** t.n}", **params)
    return _unknown(note=f"closed diamond set {list(refined.diamonds)}", **params)
