"""Binary upword families built by completing a prescribed prefix with an Eulerian path.

Each constructor lays down the prefix, deletes the edges of ``G^(n-1)`` that
the prefix's length-``n`` factors already use, and spells an Eulerian path of
the remainder.  Outputs are checked with the verifier before being returned.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from . import debruijn
from .errors import BadParams, ConstructionFailed
from .words import DIAMOND, PartialWord, _completions, _windows, is_universal, parse_partial_word, truncated_complement

D = DIAMOND

FAMILIES = ("pos1", "posk", "two_diamonds", "nm1_diamonds", "trivial")

# explicit words for the small cases of the position-k family
_POSK_SMALL = {
    (3, 2): "0*011100",
    (4, 2): "0*010011011110000",
    (4, 3): "01*0111100001010",
}


@dataclass(frozen=True)
class ConstructionRequest:
    family: str
    n: int
    k: int | None = None


def _prefix_edges(prefix: tuple[int, ...], n: int) -> list[int]:
    """Edge ids (length-``n`` factors) used by the linear windows of ``prefix``."""
    edges = []
    for _, base, dw in _windows(prefix, n, 2, cyclic=False):
        edges.extend(base + off for off in _completions(dw, 2))
    dup = [e for e, c in Counter(edges).items() if c > 1]
    if dup:
        raise ConstructionFailed(f"prefix repeats factor(s) {dup}")
    return edges


def _complete(prefix: tuple[int, ...], n: int, end: tuple[int, ...]) -> tuple[int, ...]:
    g = debruijn.build(2, n - 1)
    g = debruijn.remove_edge_ids(g, _prefix_edges(prefix, n))
    start = prefix[-(n - 1):]
    walk = debruijn.eulerian_path(g, start, end)
    return prefix + tuple(e % 2 for e in walk.edges)


def _checked(symbols: tuple[int, ...], n: int, what: str) -> PartialWord:
    word = PartialWord(symbols, 2)
    if not is_universal(word, n):
        raise ConstructionFailed(f"{what} for n={n} produced a non-universal word {word}")
    return word


def pos1_prefix(n: int) -> tuple[int, ...]:
    return (D,) + truncated_complement((0,), n)


def construct_pos1(n: int) -> PartialWord:
    """Single diamond at position 1, prefix ``*0^(n-1)1``, length ``2^n + n - 2``."""
    if n < 2:
        raise BadParams("the position-1 construction needs n >= 2")
    prefix = pos1_prefix(n)
    end = (1,) + (0,) * (n - 2)
    return _checked(_complete(prefix, n, end), n, "construct_pos1")


def posk_prefix(n: int, k: int) -> tuple[int, ...]:
    return (0,) + (1,) * (k - 2) + (D,) + truncated_complement((0,) + (1,) * (k - 1), n)


def construct_posk(n: int, k: int) -> PartialWord:
    """Single diamond at position ``k`` (``2 <= k <= n-1``), length ``2^n + n - k - 1``."""
    if n < 3 or not 2 <= k <= n - 1:
        raise BadParams(f"the position-k construction needs n >= 3 and 2 <= k <= n-1 (got n={n}, k={k})")
    if (n, k) in _POSK_SMALL:
        return _checked(parse_partial_word(_POSK_SMALL[n, k]).symbols, n, "construct_posk")
    prefix = posk_prefix(n, k)
    # the walk ends at the first window of the prefix with the diamond read as 0
    end = tuple(0 if s == D else s for s in prefix[: n - 1])
    return _checked(_complete(prefix, n, end), n, "construct_posk")


def two_diamonds_prefix(n: int) -> tuple[int, ...]:
    return (D,) + (0,) * (n - 1) + (1,) * (n - 2) + (D, 1) + (0,) * (n - 2) + (1,)


def construct_two_diamonds(n: int) -> PartialWord:
    """Diamonds at positions 1 and ``2n-1``, prefix ``*0^(n-1)1^(n-2)*10^(n-2)1``."""
    if n < 4:
        raise BadParams("the two-diamond construction needs n >= 4")
    prefix = two_diamonds_prefix(n)
    end = (0,) + (1,) * (n - 2)
    return _checked(_complete(prefix, n, end), n, "construct_two_diamonds")


def construct_nm1_diamonds(n: int) -> PartialWord:
    """The closed-form word ``*^(n-1) 0 1^n``."""
    if n < 2:
        raise BadParams("the (n-1)-diamond word needs n >= 2")
    return _checked((D,) * (n - 1) + (0,) + (1,) * n, n, "construct_nm1_diamonds")


def trivial(n: int) -> PartialWord:
    if n < 1:
        raise BadParams("n must be >= 1")
    return PartialWord((D,) * n, 2)


def construct(request: ConstructionRequest) -> PartialWord:
    f, n, k = request.family, request.n, request.k
    if f == "pos1":
        return construct_pos1(n)
    if f == "posk":
        if k is None:
            raise BadParams("the posk family needs k")
        return construct_posk(n, k)
    if f == "two_diamonds":
        return construct_two_diamonds(n)
    if f == "nm1_diamonds":
        return construct_nm1_diamonds(n)
    if f == "trivial":
        return trivial(n)
    raise BadParams(f"unknown family {f!r}; choose from {', '.join(FAMILIES)}")


def expected_length(family: str, n: int, k: int | None = None) -> int | None:
    """Closed-form lengths where one is known; ``None`` for two_diamonds."""
    if family == "pos1":
        return 2**n + n - 2
    if family == "posk":
        return 2**n + n - k - 1
    if family == "nm1_diamonds":
        return 2 * n
    if family == "trivial":
        return n
    return None
