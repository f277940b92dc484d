"""Circular words: canonical representation and subsequence matching.

A circular word is the conjugacy class of an ordinary word; its *minimal
representation* is the shortest root whose fractional power spells some
rotation, with ties broken lexicographically and then by rotation offset.
Matching against a circular word asks whether a pattern occurs in some
rotation, and the *iterated* variants count how many traversals of the
circle a greedy match needs.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import MissingSymbolError
from .matching import p_subsequence_match
from .words import Word

__all__ = [
    "MinimalRepresentation",
    "CircularIndex",
    "minimal_representation",
    "circular_match",
    "build_circular_index",
    "iterated_circular_match",
    "best_iterated_circular_match",
]


@dataclass(frozen=True, slots=True)
class MinimalRepresentation:
    """``root`` repeated (fractionally) to ``total_length`` spells the
    rotation of the source starting at 1-based ``rotation_offset``."""

    root: Word
    total_length: int
    rotation_offset: int

    def __post_init__(self) -> None:
        if not 1 <= len(self.root) <= self.total_length:
            raise ValueError("root must be nonempty and no longer than the word")
        if not 1 <= self.rotation_offset <= self.total_length:
            raise ValueError("rotation offset out of range")

    def expand(self) -> Word:
        """The represented rotation: the length-``total_length`` prefix of
        ``root`` repeated forever."""
        q = len(self.root)
        times = -(-self.total_length // q)
        return (self.root * times)[: self.total_length]


def _booth_least_rotation(symbols: tuple[int, ...]) -> int:
    """0-based start of the lexicographically least rotation (Booth's scan)."""
    doubled = symbols + symbols
    n2 = len(doubled)
    fail = [-1] * n2
    k = 0
    for j in range(1, n2):
        sj = doubled[j]
        i = fail[j - k - 1]
        while i != -1 and sj != doubled[k + i + 1]:
            if sj < doubled[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if sj != doubled[k + i + 1]:
            if sj < doubled[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return k


def _has_run(bits: int, length: int) -> bool:
    """Does the bit mask contain a run of at least ``length`` ones?"""
    y = bits
    done = 1
    while done < length and y:
        s = min(done, length - done)
        y &= y >> s
        done += s
    return bool(y)


def _run_starts(bits: int, length: int) -> int:
    """Mask of positions starting a run of at least ``length`` ones."""
    y = bits
    done = 1
    while done < length:
        s = min(done, length - done)
        y &= y >> s
        done += s
    return y


def minimal_representation(w: Word) -> MinimalRepresentation:
    """Shortest root (then lexicographically least, then least offset) whose
    fractional power is a rotation of ``w``.

    Implementation: for each candidate root length ``q`` (ascending), a
    rotation with period ``q`` exists iff the circular self-match mask at
    shift ``q`` contains an arc of ``n - q`` consecutive matches; masks are
    machine-word bit sets, so each shift costs ~n^2/64 bit operations worst
    case.  Aperiodic words fall back to a linear least-rotation scan.
    """
    n = len(w)
    if n == 0:
        raise ValueError("minimal representation of the empty word is undefined")
    syms = w.symbols
    if n == 1:
        return MinimalRepresentation(w, 1, 1)
    masks: dict[int, int] = {}
    for x, c in enumerate(syms):
        masks[c] = masks.get(c, 0) | (1 << x)
    full = (1 << n) - 1
    for q in range(1, n):
        match = 0
        for mc in masks.values():
            rot = ((mc >> q) | (mc << (n - q))) & full
            match |= mc & rot
        need = n - q
        if match.bit_count() < need:
            continue
        doubled = match | (match << n)
        if not _has_run(doubled, need):
            continue
        starts_mask = _run_starts(doubled, need)
        best: tuple[tuple[int, ...], int] | None = None
        for x in range(n):
            if (starts_mask >> x) & 1:
                root = tuple(syms[(x + j) % n] for j in range(q))
                cand = (root, x + 1)
                if best is None or cand < best:
                    best = cand
        assert best is not None, "run test promised an arc"
        return MinimalRepresentation(
            Word(best[0], w.alphabet_size), n, best[1]
        )
    offset = _booth_least_rotation(syms)
    return MinimalRepresentation(w.rotate(offset + 1), n, offset + 1)


def circular_match(v: Word, w: Word) -> bool:
    """Does some rotation of ``w`` contain ``v`` as a subsequence?

    Rotations of ``w`` are exactly the length-``n`` factors of ``ww``, so one
    bounded-window query on the doubled word answers it.

    >>> circular_match(Word.from_letters("ca"), Word.from_letters("ababcc"))
    True
    """
    if len(v) == 0:
        return True
    if len(v) > len(w):
        return False
    return p_subsequence_match(v, w + w, len(w)).found


@dataclass(frozen=True)
class CircularIndex:
    """Next-occurrence table over a circular word.

    ``table[i][c]`` is the 1-based position of the first occurrence of ``c``
    strictly after position ``i``, wrapping around; row 0 equals row ``n``.
    Entries are 0 for symbols that never occur.
    """

    source: Word
    table: np.ndarray

    def next_position(self, i: int, symbol: int) -> int:
        n = len(self.source)
        if not 0 <= i <= n:
            raise ValueError(f"position {i} outside [0:{n}]")
        return int(self.table[i, symbol])


def _next_table_circular(data: np.ndarray, sigma: int) -> np.ndarray:
    n = data.size
    table = np.zeros((n + 1, sigma + 1), dtype=np.int32)
    pos = np.arange(1, n + 1)
    for c in range(1, sigma + 1):
        occ = np.flatnonzero(data == c) + 1  # 1-based occurrence positions
        if occ.size == 0:
            continue
        at = np.searchsorted(occ, pos, side="right")
        col = np.where(at < occ.size, occ[np.minimum(at, occ.size - 1)], occ[0])
        table[1:, c] = col
        table[0, c] = table[n, c]
    return table


def build_circular_index(w: Word) -> CircularIndex:
    if len(w) == 0:
        raise ValueError("circular index of the empty word is undefined")
    table = _next_table_circular(w.data, w.alphabet_size)
    table.setflags(write=False)
    return CircularIndex(w, table)


def _traversals(
    table: np.ndarray, n: int, pattern: tuple[int, ...], offsets: np.ndarray
) -> np.ndarray:
    """Traversal counts of the greedy circular match of ``pattern`` in the
    rotations starting at each 1-based offset in ``offsets``."""
    cur = table[offsets - 1, pattern[0]].astype(np.int64)
    counts = np.zeros(offsets.size, dtype=np.int64)
    for c in pattern[1:]:
        nxt = table[cur, c].astype(np.int64)
        # wrapped past the rotation anchor: relative position did not advance
        counts += (nxt - offsets) % n <= (cur - offsets) % n
        cur = nxt
    return counts + 1


def _restricted_table(v: Word, w: Word) -> tuple[np.ndarray, tuple[int, ...]]:
    """Index table for ``w`` with all letters not used by ``v`` merged into
    one fresh id, keeping the table width at most ``|alph(v)| + 2`` columns."""
    keep = np.zeros(max(w.alphabet_size, v.alphabet_size) + 1, dtype=bool)
    needed = sorted(v.alph())
    for c in needed:
        keep[c] = True
    missing = [c for c in needed if not w.count(c)]
    if missing:
        raise MissingSymbolError(missing[0])
    fresh = (needed[-1] if needed else 0) + 1
    data = np.where(keep[w.data], w.data, np.int32(fresh))
    return _next_table_circular(data, fresh), tuple(needed)


def iterated_circular_match(v: Word, w: Word) -> int:
    """Smallest ``ell`` such that ``v`` is a subsequence of the
    lexicographically least rotation of ``w`` repeated ``ell`` times.

    The least rotation is the canonical traversal start for a circular word;
    note it need not coincide with the expansion of
    :func:`minimal_representation` when the shortest root only spells a
    fractional power.

    Raises :class:`MissingSymbolError` when some letter of ``v`` never occurs
    in ``w`` (then no ``ell`` exists).
    """
    if len(w) == 0:
        if len(v) == 0:
            return 1
        raise MissingSymbolError(v[0])
    if len(v) == 0:
        return 1
    table, _ = _restricted_table(v, w)
    anchor = _booth_least_rotation(w.symbols) + 1
    counts = _traversals(
        table, len(w), v.symbols, np.array([anchor], dtype=np.int64)
    )
    return int(counts[0])


def best_iterated_circular_match(v: Word, w: Word, *, threads: int = 1) -> tuple[int, int]:
    """Minimal traversal count over all rotations of ``w``, with the least
    1-based rotation offset achieving it.

    ``threads`` splits the offset range across a thread pool; the gather
    kernels drop the interpreter lock, so this helps on large hosts.
    """
    if len(w) == 0:
        if len(v) == 0:
            return 1, 1
        raise MissingSymbolError(v[0])
    if len(v) == 0:
        return 1, 1
    table, _ = _restricted_table(v, w)
    n = len(w)
    offsets = np.arange(1, n + 1, dtype=np.int64)
    if threads > 1 and n >= 2 * threads:
        chunks = np.array_split(offsets, threads)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(
                pool.map(lambda c: _traversals(table, n, v.symbols, c), chunks)
            )
        counts = np.concatenate(parts)
    else:
        counts = _traversals(table, n, v.symbols, offsets)
    at = int(np.argmin(counts))  # argmin takes the first, hence least offset
    return int(counts[at]), at + 1
