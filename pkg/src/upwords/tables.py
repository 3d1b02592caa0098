"""Bundled witness and non-existence entries for binary linear upwords (tables 1-3)."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .errors import UpwordError
from .words import PartialWord, is_universal, parse_partial_word

DATA_FILE = "tables.txt"
DATA_SHA256 = "2be414ce15296ff90fe2f6224d16ce7b56fcb93f229e2d0b1fe21dda3df92865"


@dataclass(frozen=True)
class TableEntry:
    table: int
    n: int
    positions: tuple[int, ...]
    word: PartialWord | None  # None for a dash (non-existence) entry
    refs: tuple[str, ...]

    @property
    def status(self) -> str:
        return "witness" if self.word is not None else "nonexistent-dash"

    @property
    def k(self) -> int:
        return self.positions[0]


def _data_bytes() -> bytes:
    return resources.files("upwords.data").joinpath(DATA_FILE).read_bytes()


def data_checksum() -> str:
    return hashlib.sha256(_data_bytes()).hexdigest()


def parse_line(line: str) -> TableEntry:
    parts = line.split()
    if len(parts) != 5:
        raise UpwordError(f"malformed table line: {line!r}")
    table, n, positions, word, refs = parts
    pos = tuple(int(p) for p in positions.split(","))
    entry_word = None if word == "-" else parse_partial_word(word, 2)
    if entry_word is not None and entry_word.diamonds != pos:
        raise UpwordError(f"positions {positions} do not match word {word}")
    return TableEntry(int(table), int(n), pos, entry_word, () if refs == "-" else tuple(refs.split(",")))


@lru_cache(maxsize=None)
def load_tables() -> tuple[TableEntry, ...]:
    text = _data_bytes().decode("utf-8")
    return tuple(parse_line(line) for line in text.splitlines() if line.strip() and not line.startswith("#"))


def entries(table: int | None = None) -> list[TableEntry]:
    return [e for e in load_tables() if table is None or e.table == table]


def single_diamond_entry(n: int, k: int) -> TableEntry | None:
    for e in entries(1):
        if e.n == n and e.k == k:
            return e
    return None


@dataclass(frozen=True)
class EntryCheck:
    entry: TableEntry
    passed: bool
    detail: str


def check_entry(entry: TableEntry, max_dash_n: int = 5) -> EntryCheck:
    """Verify a witness entry, or re-search a dash entry for ``n <= max_dash_n``."""
    from .search import SearchSpec, exhaustive_search, single_diamond_template

    if entry.word is not None:
        ok = is_universal(entry.word, entry.n)
        return EntryCheck(entry, ok, "universal" if ok else "NOT universal")
    if entry.n > max_dash_n:
        return EntryCheck(entry, True, "dash not re-searched")
    template = single_diamond_template(entry.n, entry.k)
    if template is None:
        return EntryCheck(entry, True, "no consistent length, vacuous")
    result = exhaustive_search(SearchSpec(template))
    ok = result.exhausted and not result.witnesses
    detail = f"search over {template} exhausted, {len(result.witnesses)} witness(es), {result.nodes_explored} nodes"
    return EntryCheck(entry, ok, detail)
