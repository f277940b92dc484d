"""Deciders about absent subsequences in bounded windows.

A word ``v`` is *p-absent* from ``w`` when no length-``p`` window of ``w``
contains it as a subsequence.  It is *minimal* absent when additionally every
single-deletion word of ``v`` (hence every proper subsequence) does occur in
some window, and *shortest* absent when no strictly shorter word is absent at
all — equivalently, every word of length ``|v| - 1`` over the alphabet occurs
in some window.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from itertools import islice, product

import numpy as np

from .errors import BudgetExceededError
from .matching import _next_table, match_many, p_subsequence_match
from .words import Word

__all__ = ["PmasState", "PmasReport", "is_p_absent", "is_pmas", "pmas_report", "is_psas"]


def is_p_absent(v: Word, w: Word, p: int) -> bool:
    """True iff no length-``p`` window of ``w`` contains ``v``."""
    return not p_subsequence_match(v, w, p).found


class PmasState:
    """Streaming state deciding "is the pattern a minimal absent subsequence".

    One pass over the host word maintains, for the window ending at the
    current position ``t``:

    * ``positions[c]`` — absolute positions of each pattern symbol seen so far
      (window membership is judged against the window start when read);
    * ``prefix_end[i]`` — end of the shortest window prefix containing
      ``v[0..i]``, i.e. the leftmost greedy match; defined on a prefix of
      indices (``defined_prefix`` many) and kept strictly increasing;
    * ``suffix_start[i]`` — start of the rightmost greedy match of ``v[i..]``
      anchored at the last occurrence of the final pattern letter; entries
      below the window start count as undefined when read;
    * ``covered[i]`` — whether the deletion of ``v[i]`` has occurred in any
      window so far;
    * ``detected_at`` — end position of the first window containing ``v``
      itself, or ``None``.

    The pattern occurs in the current window exactly when some leftmost
    prefix ends before the corresponding rightmost suffix starts; the same
    comparison with one pattern position skipped yields deletion coverage.
    """

    __slots__ = (
        "pattern",
        "window",
        "t",
        "positions",
        "prefix_end",
        "defined_prefix",
        "suffix_start",
        "covered",
        "detected_at",
    )

    def __init__(self, pattern: Word, window: int) -> None:
        if window < 1:
            raise ValueError("window length must be positive")
        m = len(pattern)
        self.pattern = pattern.symbols
        self.window = window
        self.t = 0
        self.positions: dict[int, list[int]] = {c: [] for c in self.pattern}
        self.prefix_end: list[int | None] = [None] * m
        self.defined_prefix = 0
        self.suffix_start: list[int | None] = [None] * m
        self.covered = [False] * m
        self.detected_at: int | None = None

    def step(self, symbol: int) -> None:
        vs = self.pattern
        m = len(vs)
        self.t = t = self.t + 1
        start = max(1, t - self.window + 1)
        occ = self.positions.get(symbol)
        if occ is not None:
            occ.append(t)
        if m == 0:
            return

        # --- leftmost greedy prefix ends -------------------------------
        pe = self.prefix_end
        if self.defined_prefix and pe[0] == t - self.window:
            # the first prefix end just left the window: recompute forward,
            # stopping as soon as an old value is still consistent
            lo = start - 1
            i = 0
            old_count = self.defined_prefix
            while i < old_count:
                cur = pe[i]
                if cur is not None and cur > lo:
                    break  # still the least occurrence past lo; rest unchanged
                occ_i = self.positions[vs[i]]
                at = bisect_right(occ_i, lo)
                if at == len(occ_i):
                    for j in range(i, old_count):
                        pe[j] = None
                    self.defined_prefix = i
                    break
                pe[i] = lo = occ_i[at]
                i += 1
            else:
                self.defined_prefix = old_count
        d = self.defined_prefix
        if d < m and vs[d] == symbol and (d == 0 or pe[d - 1] < t):
            # first-undefined entry becomes defined by the arriving letter
            # (unless the recompute above already consumed this position)
            pe[d] = t
            self.defined_prefix = d + 1

        # --- rightmost greedy suffix starts ----------------------------
        ss = self.suffix_start
        if vs[m - 1] == symbol:
            ss[m - 1] = t
            bound = t
            for i in range(m - 2, -1, -1):
                occ_i = self.positions[vs[i]]
                at = bisect_left(occ_i, bound) - 1
                if at < 0:
                    for j in range(i, -1, -1):
                        ss[j] = None
                    break
                got = occ_i[at]
                if ss[i] == got:
                    break  # anchored values only grow; unchanged means done
                ss[i] = bound = got

        # --- detection and deletion coverage ---------------------------
        if m == 1:
            if self.defined_prefix:
                if self.detected_at is None:
                    self.detected_at = t
            self.covered[0] = True
            return
        d = self.defined_prefix
        if self.detected_at is None:
            for i in range(min(d, m - 1)):
                nxt = ss[i + 1]
                if nxt is not None and nxt >= start and pe[i] < nxt:
                    self.detected_at = t
                    break
        cov = self.covered
        if not cov[0]:
            nxt = ss[1]
            cov[0] = nxt is not None and nxt >= start
        if not cov[m - 1]:
            cov[m - 1] = d >= m - 1
        for i in range(1, m - 1):
            if not cov[i] and d >= i:
                nxt = ss[i + 1]
                if nxt is not None and nxt >= start and pe[i - 1] < nxt:
                    cov[i] = True

    @property
    def pattern_seen(self) -> bool:
        return self.detected_at is not None

    @property
    def all_deletions_seen(self) -> bool:
        return all(self.covered)


@dataclass(frozen=True, slots=True)
class PmasReport:
    """Diagnostic outcome of a full no-early-exit scan."""

    is_minimal_absent: bool
    first_occurrence: int | None  # 1-based start of the first window holding v
    covered: tuple[bool, ...]


def _scan(v: Word, w: Word, p: int, *, stop_on_occurrence: bool) -> PmasState | None:
    """Run the streaming state over ``w``; ``None`` means early detection."""
    state = PmasState(v, min(p, len(w)))
    step = state.step
    if stop_on_occurrence:
        for c in w.symbols:
            step(c)
            if state.detected_at is not None:
                return None
    else:
        for c in w.symbols:
            step(c)
    return state


def is_pmas(v: Word, w: Word, p: int) -> bool:
    """Is ``v`` a minimal absent subsequence of ``w`` at window length ``p``?

    Totalized: any ``p >= 1`` is accepted (clamped to the word length), and
    patterns that cannot fit a window are handled by the definition itself.
    """
    if p < 1:
        raise ValueError("window length must be positive")
    m, n = len(v), len(w)
    if m == 0:
        return False  # the empty word is never absent
    if n == 0:
        return m == 1  # the single letters are the minimal absent words of ε
    state = _scan(v, w, p, stop_on_occurrence=True)
    return state is not None and state.all_deletions_seen


def pmas_report(v: Word, w: Word, p: int) -> PmasReport:
    """Like :func:`is_pmas` but never exits early, reporting the first window
    containing ``v`` (by 1-based start) and the per-deletion coverage."""
    if p < 1:
        raise ValueError("window length must be positive")
    m, n = len(v), len(w)
    if m == 0:
        return PmasReport(False, 1, ())  # ε occurs in the very first window
    if n == 0:
        return PmasReport(m == 1, None, (m == 1,) * m)
    state = _scan(v, w, p, stop_on_occurrence=False)
    assert state is not None
    first = None
    if state.detected_at is not None:
        first = max(1, state.detected_at - min(p, n) + 1)
    return PmasReport(
        state.detected_at is None and state.all_deletions_seen,
        first,
        tuple(state.covered),
    )


def _window_positions(state: PmasState, symbol: int) -> list[int]:
    """Occurrences of ``symbol`` inside the current window (debug helper)."""
    start = max(1, state.t - state.window + 1)
    occ = state.positions.get(symbol, [])
    return occ[bisect_left(occ, start) :]


def _debug_check(state: PmasState, host_prefix: tuple[int, ...]) -> None:
    """Recompute every tracked quantity brute-force on the current window and
    compare; meant for small hosts inside tests."""
    t, p = state.t, state.window
    start = max(1, t - p + 1)
    window = host_prefix[start - 1 : t]
    vs = state.pattern
    m = len(vs)
    for c in set(vs):
        expect = [start + i for i, x in enumerate(window) if x == c]
        assert _window_positions(state, c) == expect, f"positions[{c}]"
    # leftmost greedy prefix ends
    expect_pe: list[int | None] = []
    pos = 0
    for i in range(m):
        while pos < len(window) and window[pos] != vs[i]:
            pos += 1
        if pos == len(window):
            expect_pe.extend([None] * (m - i))
            break
        expect_pe.append(start + pos)
        pos += 1
    got_pe = [
        state.prefix_end[i] if i < state.defined_prefix else None for i in range(m)
    ]
    assert got_pe == expect_pe, f"prefix ends {got_pe} != {expect_pe}"
    # rightmost greedy suffix starts
    expect_ss: list[int | None] = [None] * m
    pos = len(window) - 1
    for i in range(m - 1, -1, -1):
        while pos >= 0 and window[pos] != vs[i]:
            pos -= 1
        if pos < 0:
            break
        expect_ss[i] = start + pos
        pos -= 1
    got_ss = [
        x if (x := state.suffix_start[i]) is not None and x >= start else None
        for i in range(m)
    ]
    assert got_ss == expect_ss, f"suffix starts {got_ss} != {expect_ss}"


def is_psas(v: Word, w: Word, p: int, budget: int = 1 << 24) -> bool:
    """Is ``v`` a *shortest* absent subsequence of ``w`` at window ``p``?

    True iff ``v`` is p-absent while every word of length ``|v| - 1`` over the
    (larger of the two declared) alphabets occurs in some window.  The second
    condition enumerates ``sigma^(|v|-1)`` candidates and is budgeted.
    """
    m = len(v)
    if m == 0:
        return False
    if not is_p_absent(v, w, p):
        return False
    sigma = max(v.alphabet_size, w.alphabet_size)
    total = sigma ** (m - 1)
    if total > budget:
        raise BudgetExceededError(total, budget, "candidates")
    if m == 1:
        return True
    table = _next_table(w.data, sigma) if len(w) else None
    alphabet = range(1, sigma + 1)
    stream = product(alphabet, repeat=m - 1)
    chunk_rows = 1 << 14
    while True:
        block = list(islice(stream, chunk_rows))
        if not block:
            return True
        cands = np.array(block, dtype=np.int32)
        if not match_many(cands, w, p, table=table).all():
            return False
