"""Desk-scale analysis of the set of window subsequences of fixed length.

The central object is ``Subseq(w, k, p)``: all length-``k`` words occurring
as subsequences of length-``p`` windows of ``w``.  Deciding whether this set
misses some word (non-universality) or differs between two hosts
(non-equivalence) takes exponential candidate enumeration in general, so
those deciders carry explicit budgets and fail loudly when exceeded.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import islice, product

import numpy as np

from .errors import BudgetExceededError
from .matching import _next_table, match_many
from .words import Word

__all__ = [
    "SubseqSet",
    "enumerate_subseq_pk",
    "kp_non_universal",
    "kp_non_equivalent",
    "universality_index",
    "DEFAULT_CANDIDATE_BUDGET",
    "DEFAULT_SET_BUDGET",
]

DEFAULT_CANDIDATE_BUDGET = 1 << 24
DEFAULT_SET_BUDGET = 1 << 22
_CHUNK_ROWS = 1 << 14


@dataclass(frozen=True, slots=True)
class SubseqSet:
    """The exact set of length-``k`` subsequences of length-``p`` windows."""

    k: int
    window: int
    members: frozenset[Word]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, word: Word) -> bool:
        return word in self.members

    def sorted_members(self) -> list[Word]:
        return sorted(self.members, key=lambda m: m.symbols)

    def is_universal(self, sigma: int) -> bool:
        return len(self.members) == sigma**self.k


def enumerate_subseq_pk(
    w: Word, k: int, p: int, budget: int = DEFAULT_SET_BUDGET
) -> SubseqSet:
    """Collect the set by a per-window depth-first walk.

    Each window is walked over its leftmost embeddings (next-occurrence
    steps), so every distinct subsequence of the window is produced exactly
    once; a global set deduplicates across windows.  Deliberately does not
    reuse the window matcher: this is the cross-checking route for the
    candidate-testing deciders below.
    """
    if k < 0:
        raise ValueError("subsequence length must be nonnegative")
    n = len(w)
    sigma = w.alphabet_size
    p_eff = min(p, n)
    if k == 0:
        return SubseqSet(0, p_eff, frozenset({Word((), sigma)}))
    if n == 0 or k > p_eff:
        return SubseqSet(k, p_eff, frozenset())
    ws = w.symbols
    # next_at[q][c] = least index >= q with symbol c, else n
    rows: list[list[int]] = [[n] * (sigma + 1) for _ in range(n + 1)]
    for q in range(n - 1, -1, -1):
        row = rows[q]
        row[:] = rows[q + 1]
        row[ws[q]] = q
    letters = sorted(set(ws))
    found: set[tuple[int, ...]] = set()
    node_limit = budget * (k + 1) + 1024
    nodes = 0
    prefix = [0] * k

    def walk(q: int, end: int, depth: int) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > node_limit:
            raise BudgetExceededError(nodes, budget, "search nodes")
        if depth == k:
            found.add(tuple(prefix))
            if len(found) > budget:
                raise BudgetExceededError(len(found), budget, "set members")
            return
        row = rows[q]
        room = k - depth
        for c in letters:
            j = row[c]
            if j < end and end - j >= room:
                prefix[depth] = c
                walk(j + 1, end, depth + 1)

    for s in range(n - p_eff + 1):
        walk(s, s + p_eff, 0)
    return SubseqSet(k, p_eff, frozenset(Word(t, sigma) for t in found))


def _candidate_chunks(sigma: int, k: int):
    stream = product(range(1, sigma + 1), repeat=k)
    while True:
        block = list(islice(stream, _CHUNK_ROWS))
        if not block:
            return
        yield np.array(block, dtype=np.int32)


def _first_miss(
    w: Word, k: int, p: int, sigma: int, table: np.ndarray | None, threads: int
) -> Word | None:
    """Lexicographically least absent candidate, enumerated in chunks."""
    if threads <= 1:
        for cands in _candidate_chunks(sigma, k):
            hit = match_many(cands, w, p, table=table)
            if not hit.all():
                return Word(cands[int(np.argmin(hit))], sigma)
        return None
    with ThreadPoolExecutor(max_workers=threads) as pool:
        pending = []
        chunks = _candidate_chunks(sigma, k)
        job = lambda c: (c, match_many(c, w, p, table=table))
        for cands in islice(chunks, threads):
            pending.append(pool.submit(job, cands))
        while pending:
            cands, hit = pending.pop(0).result()
            if not hit.all():
                for f in pending:
                    f.cancel()
                return Word(cands[int(np.argmin(hit))], sigma)
            nxt = next(chunks, None)
            if nxt is not None:
                pending.append(pool.submit(job, nxt))
    return None


def kp_non_universal(
    w: Word,
    k: int,
    p: int,
    budget: int = DEFAULT_CANDIDATE_BUDGET,
    *,
    threads: int = 1,
) -> Word | None:
    """Witness that some length-``k`` word misses every window, or ``None``.

    A short host is decided without enumeration: when ``|w| < k * sigma``
    some letter occurs fewer than ``k`` times, and ``k`` copies of the least
    such letter are an absent witness.  Otherwise candidates are enumerated
    in lexicographic order (budgeted) and the least absent one is returned.
    """
    if k < 0:
        raise ValueError("subsequence length must be nonnegative")
    sigma = w.alphabet_size
    if k == 0 or sigma == 0:
        return None  # the empty word is always present; no candidates otherwise
    if len(w) < k * sigma:
        deficient = min(c for c in range(1, sigma + 1) if w.count(c) < k)
        return Word((deficient,) * k, sigma)
    if sigma**k > budget:
        raise BudgetExceededError(sigma**k, budget, "candidates")
    table = _next_table(w.data, sigma)
    return _first_miss(w, k, p, sigma, table, threads)


def kp_non_equivalent(
    w: Word,
    v: Word,
    k: int,
    p: int,
    budget: int = DEFAULT_CANDIDATE_BUDGET,
    *,
    threads: int = 1,
) -> Word | None:
    """Least length-``k`` word present in exactly one of the two hosts'
    window-subsequence sets, or ``None`` when the sets coincide."""
    if k < 0:
        raise ValueError("subsequence length must be nonnegative")
    sigma = max(w.alphabet_size, v.alphabet_size)
    if k == 0 or sigma == 0:
        return None
    if sigma**k > budget:
        raise BudgetExceededError(sigma**k, budget, "candidates")
    table_w = _next_table(w.data, sigma) if len(w) else None
    table_v = _next_table(v.data, sigma) if len(v) else None

    def split(cands: np.ndarray) -> np.ndarray:
        return match_many(cands, w, p, table=table_w) != match_many(
            cands, v, p, table=table_v
        )

    if threads <= 1:
        for cands in _candidate_chunks(sigma, k):
            differ = split(cands)
            if differ.any():
                return Word(cands[int(np.argmax(differ))], sigma)
        return None
    with ThreadPoolExecutor(max_workers=threads) as pool:
        pending = []
        chunks = _candidate_chunks(sigma, k)
        job = lambda c: (c, split(c))
        for cands in islice(chunks, threads):
            pending.append(pool.submit(job, cands))
        while pending:
            cands, differ = pending.pop(0).result()
            if differ.any():
                for f in pending:
                    f.cancel()
                return Word(cands[int(np.argmax(differ))], sigma)
            nxt = next(chunks, None)
            if nxt is not None:
                pending.append(pool.submit(job, nxt))
    return None


def universality_index(w: Word) -> int:
    """Largest ``k`` such that every length-``k`` word over ``alph(w)`` is a
    (plain) subsequence of ``w``, via greedy arch factorization: repeatedly
    consume the shortest prefix containing the whole occurring alphabet.

    A shortest absent subsequence over ``alph(w)`` has length exactly one more.
    """
    if len(w) == 0:
        raise ValueError("universality index of the empty word is undefined")
    need = len(w.alph())
    seen: set[int] = set()
    arches = 0
    for c in w.symbols:
        seen.add(c)
        if len(seen) == need:
            arches += 1
            seen = set()
    return arches
