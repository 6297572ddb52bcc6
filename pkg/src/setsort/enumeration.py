"""Canonical set-partition streams and exhaustive witness search.

A cell (N, L) holds every restricted-growth word of length L over exactly
N distinct letters; its size is the Stirling number S(L, N).  A witness
is a word in the cell that the aba machine has not sorted after N - 1
passes.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .machine import apply_phi_aba
from .words import (
    Word,
    index_occurrence,
    indices,
    is_sorted,
    multiplicities,
)


@dataclass(frozen=True)
class CellSpec:
    n_letters: int
    length: int

    def __post_init__(self):
        if self.n_letters < 1 or self.length < 1:
            raise ValueError("cell parameters must be positive")


@lru_cache(maxsize=None)
def stirling2(length: int, n_letters: int) -> int:
    """Stirling number of the second kind, S(L, N)."""
    if length < 0 or n_letters < 0:
        raise ValueError("arguments must be nonnegative")
    if length == 0 or n_letters == 0:
        return 1 if length == n_letters else 0
    if n_letters > length:
        return 0
    return n_letters * stirling2(length - 1, n_letters) + stirling2(length - 1, n_letters - 1)


def bell(length: int) -> int:
    return sum(stirling2(length, n) for n in range(length + 1))


def rgs_extensions(prefix: Sequence[int], n_letters: int, length: int) -> list[int]:
    """Letters that can extend an RGS prefix and still reach exactly N letters."""
    mx = max(prefix, default=0)
    slots_left = length - len(prefix) - 1
    out = []
    for v in range(1, min(mx + 1, n_letters) + 1):
        if n_letters - max(mx, v) <= slots_left:
            out.append(v)
    return out


def canonical_partitions(cell: CellSpec, prefix: Sequence[int] = ()) -> Iterator[Word]:
    """All RGS words of the cell extending ``prefix``, in lexicographic order.

    Prunes any prefix whose remaining slots cannot introduce enough new
    letters, so the stream touches only S(L, N) words, not N**L.
    """
    n, length = cell.n_letters, cell.length
    word = list(prefix) + [0] * (length - len(prefix))

    def rec(i: int, mx: int) -> Iterator[Word]:
        if i == length:
            yield tuple(word)
            return
        for v in range(1, min(mx + 1, n) + 1):
            if n - max(mx, v) <= length - i - 1:
                word[i] = v
                yield from rec(i + 1, max(mx, v))

    mx = max(prefix, default=0)
    if mx > n or len(prefix) > length:
        return
    yield from rec(len(prefix), mx)


def cell_prefixes(cell: CellSpec, depth: int) -> list[Word]:
    """Viable RGS prefixes of the given depth, in lexicographic order."""
    depth = min(depth, cell.length)
    prefixes: list[Word] = [()]
    for _ in range(depth):
        prefixes = [
            p + (v,)
            for p in prefixes
            for v in rgs_extensions(p, cell.n_letters, cell.length)
        ]
    return prefixes


@dataclass(frozen=True)
class WitnessProfile:
    witness: Word
    multiplicities: dict[int, int]
    triple_letter: int | None
    first_letter_mult: int
    family: str | None  # head-triple | tail-heavy | prefix-heavy; only at L = 2N+1


@dataclass(frozen=True)
class WitnessReport:
    cell: CellSpec
    total_classes: int
    witnesses: tuple[WitnessProfile, ...]
    elapsed: float


def is_witness(word: Sequence[int], n_letters: int) -> bool:
    """Not sorted after N - 1 aba passes (early exit as soon as sorted)."""
    w = tuple(word)
    for _ in range(n_letters - 1):
        if is_sorted(w):
            return False
        w = apply_phi_aba(w)
    return not is_sorted(w)


def classify_family(word: Sequence[int]) -> str | None:
    """Family of a length-2N+1 witness.

    head-triple: the first letter is the unique multiplicity-3 letter.
    Otherwise the triple letter places two of its three occurrences on one
    side of the second occurrence of the first letter: after it (tail-heavy)
    or before it (prefix-heavy).
    """
    word = tuple(word)
    mult = multiplicities(word)
    triples = [a for a, m in mult.items() if m == 3]
    if len(triples) != 1 or any(m not in (2, 3) for m in mult.values()):
        return None
    star = triples[0]
    head = word[0]
    if star == head:
        return "head-triple"
    if mult[head] != 2:
        return None
    second_head = index_occurrence(word, head, 2)
    after = sum(1 for i in indices(word, star) if i > second_head)
    if after == 2:
        return "tail-heavy"
    if after == 1:
        return "prefix-heavy"
    return None


def profile_witness(word: Sequence[int], cell: CellSpec) -> WitnessProfile:
    word = tuple(word)
    mult = multiplicities(word)
    triples = [a for a, m in mult.items() if m == 3]
    family = None
    if cell.length == 2 * cell.n_letters + 1:
        family = classify_family(word)
    return WitnessProfile(
        witness=word,
        multiplicities=mult,
        triple_letter=triples[0] if len(triples) == 1 else None,
        first_letter_mult=mult[word[0]],
        family=family,
    )


def _search_shard(args: tuple[CellSpec, Word]) -> tuple[int, list[Word]]:
    cell, prefix = args
    total = 0
    found = []
    n = cell.n_letters
    for word in canonical_partitions(cell, prefix):
        total += 1
        if is_witness(word, n):
            found.append(word)
    return total, found


def find_witnesses(cell: CellSpec, jobs: int = 1) -> WitnessReport:
    """Exhaustive witness search over one cell.

    Parallel runs shard by RGS prefix and merge shard results in prefix
    order, so the witness list is identical to the sequential stream's.
    """
    start = time.perf_counter()
    if jobs > 1:
        shards = [(cell, p) for p in cell_prefixes(cell, depth=3)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_search_shard, shards, chunksize=1))
    else:
        results = [_search_shard((cell, ()))]
    total = sum(t for t, _ in results)
    witnesses = tuple(
        profile_witness(w, cell) for _, found in results for w in found
    )
    return WitnessReport(
        cell=cell,
        total_classes=total,
        witnesses=witnesses,
        elapsed=time.perf_counter() - start,
    )


def witness_table(
    n_min: int, n_max: int, l_offset_max: int = 1, jobs: int = 1
) -> list[tuple[int, int, int, int]]:
    """(N, L, total_classes, witness_count) rows for N in [n_min, n_max], L in [N, 2N + offset]."""
    rows = []
    for n in range(n_min, n_max + 1):
        for length in range(n, 2 * n + l_offset_max + 1):
            report = find_witnesses(CellSpec(n, length), jobs=jobs)
            rows.append((n, length, report.total_classes, len(report.witnesses)))
    return rows
