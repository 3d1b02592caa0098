"""Partial words, window expansion and the exact universality verifier.

A partial word is a tuple of integer symbols where ``0..alpha-1`` are letters
and :data:`DIAMOND` (``-1``) is the wildcard.  Words of ``A^n`` are indexed as
base-``alpha`` integers with the most significant letter first, so the
coverage map is a plain list of counts.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import BadWindow, BinaryOnly, EmptyWord, OutOfAlphabet, TooLarge, UpwordError

DIAMOND = -1

LETTER_GLYPHS = "0123456789abcdefghijklmnopqrstuvwxyz"
DIAMOND_GLYPHS = "*.◊"

#: refuse to enumerate windows with more than this many completions
MAX_EXPANSION = 2**20


def check_alphabet(alpha: int) -> int:
    if not isinstance(alpha, int) or alpha < 2:
        raise UpwordError(f"alphabet size must be an integer >= 2, got {alpha!r}")
    return alpha


@dataclass(frozen=True)
class PartialWord:
    symbols: tuple[int, ...]
    alpha: int = 2

    def __post_init__(self):
        check_alphabet(self.alpha)
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if not self.symbols:
            raise EmptyWord("a partial word needs at least one symbol")
        for s in self.symbols:
            if s != DIAMOND and not 0 <= s < self.alpha:
                raise OutOfAlphabet(f"symbol {s} not in alphabet of size {self.alpha}")

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __str__(self) -> str:
        return self.render()

    def render(self, unicode: bool = False) -> str:
        return render_symbols(self.symbols, unicode=unicode)

    @property
    def diamonds(self) -> tuple[int, ...]:
        """1-based positions of the diamonds."""
        return tuple(i + 1 for i, s in enumerate(self.symbols) if s == DIAMOND)

    def reversed(self) -> "PartialWord":
        return PartialWord(self.symbols[::-1], self.alpha)

    def permuted(self, perm: Sequence[int]) -> "PartialWord":
        """Apply the letter permutation ``a -> perm[a]``."""
        if sorted(perm) != list(range(self.alpha)):
            raise UpwordError(f"{perm!r} is not a permutation of the alphabet")
        return PartialWord(tuple(s if s == DIAMOND else perm[s] for s in self.symbols), self.alpha)


def render_symbols(symbols: Iterable[int], unicode: bool = False) -> str:
    diamond = "◊" if unicode else "*"
    return "".join(diamond if s == DIAMOND else LETTER_GLYPHS[s] for s in symbols)


def parse_partial_word(text: str, alpha: int = 2) -> PartialWord:
    check_alphabet(alpha)
    text = text.strip()
    if not text:
        raise EmptyWord("empty partial word")
    symbols = []
    for ch in text:
        if ch in DIAMOND_GLYPHS:
            symbols.append(DIAMOND)
            continue
        v = LETTER_GLYPHS.find(ch.lower())
        if v < 0:
            raise UpwordError(f"unrecognised symbol {ch!r}")
        if v >= alpha:
            raise OutOfAlphabet(f"symbol {ch!r} is not below alphabet size {alpha}")
        symbols.append(v)
    return PartialWord(tuple(symbols), alpha)


def word_index(letters: Sequence[int], alpha: int) -> int:
    idx = 0
    for a in letters:
        idx = idx * alpha + a
    return idx


def index_to_word(idx: int, n: int, alpha: int) -> tuple[int, ...]:
    out = [0] * n
    for j in range(n - 1, -1, -1):
        idx, out[j] = divmod(idx, alpha)
    return tuple(out)


def _window_count(N: int, n: int, cyclic: bool) -> int:
    # a window may not reuse a cell, so cyclic words also need N >= n
    if N < n:
        mode = "cyclic" if cyclic else "linear"
        raise BadWindow(f"word of length {N} has no {mode} windows of length {n}")
    return N if cyclic else N - n + 1


def _completions(weights: Sequence[int], alpha: int) -> list[int]:
    offsets = [0]
    for w in weights:
        offsets = [o + a * w for o in offsets for a in range(alpha)]
    return offsets


def _windows(symbols: Sequence[int], n: int, alpha: int, cyclic: bool) -> Iterator[tuple[int, int, list[int]]]:
    """Yield ``(start, base, diamond_weights)`` for every window (0-based start).

    ``base`` is the index of the window with every diamond read as 0.
    """
    N = len(symbols)
    count = _window_count(N, n, cyclic)
    seq = [symbols[j % N] for j in range(count + n - 1)]
    weights = [alpha ** (n - 1 - j) for j in range(n)]
    top = alpha**n
    base = 0
    diamonds: list[int] = []  # positions in seq, ascending
    for j in range(n - 1):
        s = seq[j]
        base = base * alpha + (0 if s == DIAMOND else s)
        if s == DIAMOND:
            diamonds.append(j)
    head = 0
    for i in range(count):
        j = i + n - 1
        s = seq[j]
        base = (base * alpha + (0 if s == DIAMOND else s)) % top
        if s == DIAMOND:
            diamonds.append(j)
        while head < len(diamonds) and diamonds[head] < i:
            head += 1
        yield i, base, [weights[p - i] for p in diamonds[head:]]


@dataclass(frozen=True)
class WindowExpansion:
    start: int
    words: frozenset[tuple[int, ...]]

    def rendered(self) -> set[str]:
        return {render_symbols(w) for w in self.words}


def window_expansion(u: PartialWord, i: int, n: int, cyclic: bool = False) -> WindowExpansion:
    """All full words obtained from the length-``n`` window at 1-based ``i``."""
    N = len(u)
    if n < 1:
        raise BadWindow("factor length must be positive")
    if cyclic:
        if not 1 <= i <= N:
            raise BadWindow(f"cyclic window start {i} outside 1..{N}")
    else:
        if n > N or not 1 <= i <= N - n + 1:
            raise BadWindow(f"linear window start {i} invalid for N={N}, n={n}")
    window = [u.symbols[(i - 1 + j) % N] for j in range(n)]
    d = window.count(DIAMOND)
    if u.alpha**d > MAX_EXPANSION:
        raise TooLarge(f"window expands to {u.alpha}^{d} words")
    choices = [range(u.alpha) if s == DIAMOND else (s,) for s in window]
    return WindowExpansion(i, frozenset(product(*choices)))


@dataclass(frozen=True)
class CoverageMap:
    n: int
    alpha: int
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def universal(self) -> bool:
        return all(c == 1 for c in self.counts)

    def count(self, word: Sequence[int] | str) -> int:
        if isinstance(word, str):
            word = parse_partial_word(word, self.alpha).symbols
        return self.counts[word_index(word, self.alpha)]

    def missing(self) -> list[int]:
        return [v for v, c in enumerate(self.counts) if c == 0]

    def duplicated(self) -> list[int]:
        return [v for v, c in enumerate(self.counts) if c > 1]


def coverage(u: PartialWord, n: int, cyclic: bool = False, max_expansion: int = MAX_EXPANSION) -> CoverageMap:
    if n < 1:
        raise BadWindow("factor length must be positive")
    alpha = u.alpha
    counts = [0] * alpha**n
    full = 0
    for _, base, dw in _windows(u.symbols, n, alpha, cyclic):
        if not dw:
            counts[base] += 1
        elif len(dw) == n:
            full += 1
        else:
            if alpha ** len(dw) > max_expansion:
                raise TooLarge(f"window expands to {alpha}^{len(dw)} words")
            for off in _completions(dw, alpha):
                counts[base + off] += 1
    if full:
        counts = [c + full for c in counts]
    return CoverageMap(n, alpha, tuple(counts))


@dataclass(frozen=True)
class UniversalityReport:
    n: int
    alpha: int
    cyclic: bool
    universal: bool
    missing: tuple[str, ...] = ()
    #: duplicated word -> 1-based window starts producing it
    duplicated: dict[str, tuple[int, ...]] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.universal


def verify(u: PartialWord, n: int, cyclic: bool = False) -> UniversalityReport:
    """Full universality check with a report of missing and duplicated factors."""
    cov = coverage(u, n, cyclic)
    if cov.universal:
        return UniversalityReport(n, u.alpha, cyclic, True)
    dup_set = set(cov.duplicated())
    where: dict[int, list[int]] = defaultdict(list)
    for i, base, dw in _windows(u.symbols, n, u.alpha, cyclic):
        offsets = _completions(dw, u.alpha) if len(dw) < n else range(u.alpha**n)
        for off in offsets:
            if base + off in dup_set:
                where[base + off].append(i + 1)
    missing = tuple(render_symbols(index_to_word(v, n, u.alpha)) for v in cov.missing())
    duplicated = {render_symbols(index_to_word(v, n, u.alpha)): tuple(where[v]) for v in sorted(dup_set)}
    return UniversalityReport(n, u.alpha, cyclic, False, missing, duplicated)


def is_universal(u: PartialWord, n: int, cyclic: bool = False) -> bool:
    """True iff every word of ``A^n`` appears exactly once as a factor of ``u``.

    Stops at the first duplicate; the total-count identity then settles the
    absence of missing words.
    """
    alpha = u.alpha
    N = len(u)
    _window_count(N, n, cyclic)
    size = alpha**n
    seen = bytearray(size)
    total = 0
    for _, base, dw in _windows(u.symbols, n, alpha, cyclic):
        if len(dw) == n:
            # an all-diamond window covers everything; only the trivial word survives
            return N == 1 if cyclic else N == n
        if not dw:
            if seen[base]:
                return False
            seen[base] = 1
            total += 1
            continue
        if alpha ** len(dw) > MAX_EXPANSION:
            raise TooLarge(f"window expands to {alpha}^{len(dw)} words")
        for off in _completions(dw, alpha):
            if seen[base + off]:
                return False
            seen[base + off] = 1
        total += alpha ** len(dw)
    return total == size


def truncated_complement(w: Sequence[int] | str, n: int, alpha: int = 2) -> tuple[int, ...]:
    """Periodic extension of ``w`` cut at length ``n`` with the last letter flipped."""
    if alpha != 2:
        raise BinaryOnly("the truncated complement is defined for binary words only")
    if isinstance(w, str):
        w = parse_partial_word(w, 2).symbols
    if not w or n < 1:
        raise UpwordError("need a nonempty word and n >= 1")
    if any(a not in (0, 1) for a in w):
        raise OutOfAlphabet("truncated complement needs a full binary word")
    k = len(w)
    out = [w[i % k] for i in range(n)]
    out[-1] = 1 - out[-1]
    return tuple(out)


def _relabel(symbols: Sequence[int]) -> tuple[int, ...]:
    """Rename letters so that first occurrences appear in increasing order."""
    mapping: dict[int, int] = {}
    out = []
    for s in symbols:
        if s == DIAMOND:
            out.append(s)
            continue
        if s not in mapping:
            mapping[s] = len(mapping)
        out.append(mapping[s])
    return tuple(out)


def canonicalize(u: PartialWord, cyclic: bool = False) -> PartialWord:
    """Canonical representative under reversal and letter permutation.

    Linear words are reversed when the diamond-free prefix is longer than the
    diamond-free suffix; on a tie (or with no diamonds at all) the
    lexicographically smaller of the two orientations wins, diamonds sorting
    first.  Letters are then renamed in order of first occurrence.  Cyclic
    words additionally minimise over all rotations.
    """
    s = u.symbols
    if cyclic:
        N = len(s)
        best = None
        for seq in (s, s[::-1]):
            for r in range(N):
                cand = _relabel(seq[r:] + seq[:r])
                if best is None or cand < best:
                    best = cand
        return PartialWord(best, u.alpha)
    if DIAMOND in s:
        lx = s.index(DIAMOND)
        lz = s[::-1].index(DIAMOND)
    else:
        lx = lz = 0
    if lx > lz:
        return PartialWord(_relabel(s[::-1]), u.alpha)
    if lx < lz:
        return PartialWord(_relabel(s), u.alpha)
    return PartialWord(min(_relabel(s), _relabel(s[::-1])), u.alpha)
