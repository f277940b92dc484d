"""Sliding-window subsequence matching.

The core question: does pattern ``u`` occur as a subsequence of some
length-``p`` factor (window) of ``w``?  Three engines answer it:

* :class:`MatcherState` — incremental, one letter at a time, O(m) space.
  Feed letters, get a verdict for the window ending at each position.
* a vectorized one-shot engine used by :func:`p_subsequence_match` for large
  inputs: per-symbol next-occurrence tables plus per-window-start gathers.
* :func:`match_many` — many fixed-length candidate patterns against one word
  at once, for the enumeration-heavy analysis operations.
"""

from __future__ import annotations

import numpy as np

from .words import MatchReport, Word

__all__ = [
    "MatcherState",
    "matcher_init",
    "matcher_step",
    "p_subsequence_match",
    "match_many",
]

# one-shot calls switch to the vectorized engine above this n*m workload
_VECTOR_MIN_WORK = 1 << 15
# per-symbol next-occurrence rows cached up to this many bytes per call
_ROW_CACHE_BYTES = 1 << 28


class MatcherState:
    """Streaming matcher state for one pattern and a fixed window length.

    ``suffix_len[i]`` is the length of the shortest suffix of the window read
    so far that contains the first ``i+1`` pattern symbols as a subsequence,
    saturated at ``window + 1`` when no suffix does.  The array is
    nondecreasing in ``i`` after every step, and the pattern occurs in the
    current window exactly when the last entry is at most ``window``.
    """

    __slots__ = ("pattern", "window", "suffix_len", "steps", "_scratch", "_occ")

    def __init__(self, pattern: Word, window: int) -> None:
        m = len(pattern)
        if m > window:
            raise ValueError(
                f"pattern of length {m} cannot fit a window of length {window}; "
                "the query is trivially negative"
            )
        self.pattern = pattern
        self.window = window
        self.suffix_len: list[int] = [window + 1] * m
        self.steps = 0
        self._scratch: list[int] = [0] * m
        occ: dict[int, list[int]] = {}
        for j, c in enumerate(pattern.symbols):
            occ.setdefault(c, []).append(j)
        self._occ = occ

    def step(self, symbol: int) -> bool:
        """Consume one letter; report whether the pattern occurs in the
        window ending at it (for positions before the window fills, the
        clamped prefix window)."""
        a = self.suffix_len
        b = self._scratch
        cap = self.window
        inf = cap + 1
        m = len(a)
        for i in range(m):
            grown = a[i] + 1
            b[i] = grown if grown <= cap else inf
        for j in self._occ.get(symbol, ()):
            fresh = a[j - 1] + 1 if j else 1
            b[j] = fresh if fresh <= cap else inf
        self.suffix_len, self._scratch = b, a
        self.steps += 1
        return m == 0 or b[m - 1] <= cap

    def check(self) -> None:
        """Validate structural invariants (used by tests, not by `step`)."""
        a = self.suffix_len
        assert len(a) == len(self.pattern)
        assert all(1 <= v <= self.window + 1 for v in a)
        assert all(a[i] <= a[i + 1] for i in range(len(a) - 1))


def matcher_init(pattern: Word, window: int) -> MatcherState:
    """Fresh streaming state; rejects patterns longer than the window."""
    return MatcherState(pattern, window)


def matcher_step(state: MatcherState, symbol: int) -> bool:
    return state.step(symbol)


def _next_row(word: np.ndarray, symbol: int) -> np.ndarray:
    """``row[q]`` = one past the least index ``>= q`` holding ``symbol``,
    or the absorbing failure value ``n + 2``."""
    n = word.size
    base = np.where(word == symbol, np.arange(n, dtype=np.int32), np.int32(n + 1))
    nearest = np.minimum.accumulate(base[::-1])[::-1]
    row = np.empty(n + 3, dtype=np.int32)
    row[:n] = nearest + 1
    row[n:] = n + 2
    return row


def _verdicts_vectorized(pattern: np.ndarray, word: np.ndarray, p: int) -> np.ndarray:
    """Per-window verdicts by running the greedy match from every window start
    simultaneously.  Window start ``s`` (0-based) succeeds iff the greedy match
    of the whole pattern ends at an index ``<= s + p - 1``."""
    n = word.size
    starts = n - p + 1
    q = np.arange(starts, dtype=np.int32)
    scratch = np.empty_like(q)
    rows: dict[int, np.ndarray] = {}
    cache_rows = max(_ROW_CACHE_BYTES // (4 * (n + 3)), 1)
    for c in pattern.tolist():
        row = rows.get(c)
        if row is None:
            row = _next_row(word, c)
            if len(rows) < cache_rows:
                rows[c] = row
        np.take(row, q, out=scratch)
        q, scratch = scratch, q
    limit = np.arange(p, p + starts, dtype=np.int32)
    return q <= limit


def p_subsequence_match(u: Word, w: Word, p: int) -> MatchReport:
    """Full window report for pattern ``u`` in length-``p`` windows of ``w``.

    Totalized beyond the natural parameter range: a pattern longer than the
    window yields an all-false report, ``p`` larger than the word is clamped
    so the single clamped window is the whole word, and the empty pattern is
    present everywhere.

    >>> rep = p_subsequence_match(Word.from_letters("ab"), Word.from_letters("acb"), 2)
    >>> rep.found
    False
    >>> rep = p_subsequence_match(Word.from_letters("ab"), Word.from_letters("acb"), 3)
    >>> rep.found, rep.first_hit
    (True, 1)
    """
    if p < 0:
        raise ValueError("window length must be nonnegative")
    n, m = len(w), len(u)
    if n == 0:
        return MatchReport(m, 0, 0, (m == 0,))
    p_eff = min(p, n)
    windows = n - p_eff + 1
    if m == 0:
        return MatchReport(m, p_eff, n, (True,) * windows)
    if m > p_eff:
        return MatchReport(m, p_eff, n, (False,) * windows)
    if n * m >= _VECTOR_MIN_WORK:
        return MatchReport(m, p_eff, n, _verdicts_vectorized(u.data, w.data, p_eff))
    state = MatcherState(u, p_eff)
    step = state.step
    ws = w.symbols
    for c in ws[: p_eff - 1]:
        step(c)
    return MatchReport(m, p_eff, n, tuple(step(c) for c in ws[p_eff - 1 :]))


def _next_table(word: np.ndarray, sigma: int) -> np.ndarray:
    """Stacked next-occurrence rows for all symbols ``1..sigma``."""
    n = word.size
    table = np.empty((sigma + 1, n + 3), dtype=np.int32)
    table[0] = n + 2  # symbol id 0 never occurs
    for c in range(1, sigma + 1):
        table[c] = _next_row(word, c)
    return table


def match_many(
    candidates: np.ndarray, w: Word, p: int, *, table: np.ndarray | None = None
) -> np.ndarray:
    """Presence verdicts for a batch of equal-length candidate patterns.

    ``candidates`` is a (count, k) int array of symbol ids; the result is a
    boolean vector, entry ``c`` true iff candidate ``c`` occurs in some
    length-``p`` window of ``w``.  Pass a precomputed ``table`` (from the same
    word) to amortize setup across chunks.
    """
    cands = np.ascontiguousarray(candidates, dtype=np.int32)
    if cands.ndim != 2:
        raise ValueError("candidates must be a 2-d (count, k) array")
    count, k = cands.shape
    n = len(w)
    if n == 0:
        return np.full(count, k == 0)
    p_eff = min(p, n)
    if k == 0:
        return np.full(count, True)
    if k > p_eff:
        return np.full(count, False)
    if table is None:
        sigma = max(w.alphabet_size, int(cands.max()) if count else 0)
        table = _next_table(w.data, sigma)
    starts = n - p_eff + 1
    q = np.broadcast_to(np.arange(starts, dtype=np.int32), (count, starts)).copy()
    for j in range(k):
        q = table[cands[:, j][:, None], q]
    limit = np.arange(p_eff, p_eff + starts, dtype=np.int32)
    return (q <= limit).any(axis=1)
