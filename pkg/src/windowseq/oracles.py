"""Independent brute-force reference implementations.

Everything here is deliberately naive and shares no algorithmic code with the
fast modules it validates: window verdicts come from a per-window two-pointer
scan, set questions from explicit enumeration, rotation questions from
building every rotation.  These are the ground truth the test suite compares
against; performance is a non-goal.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .errors import BudgetExceededError
from .words import MatchReport, PartialWord, Word

__all__ = [
    "subsequence_by_enumeration",
    "oracle_p_match",
    "oracle_pmas",
    "oracle_ov",
    "oracle_partial_words",
    "oracle_min_rep",
    "oracle_universality_index",
    "oracle_window_k_universal",
]

ORACLE_MAX_N = 10_000


def subsequence_by_enumeration(u: Word, w: Word) -> bool:
    """Doubly naive subsequence test: try every index tuple.

    Exists only to validate the greedy scan itself on tiny inputs.
    """
    us, ws = u.symbols, w.symbols
    if len(us) > len(ws):
        return False
    for picks in itertools.combinations(range(len(ws)), len(us)):
        if all(ws[j] == c for j, c in zip(picks, us)):
            return True
    return False


def _window_verdicts(us: Sequence[int], ws: Sequence[int], p: int) -> list[bool]:
    """One verdict per window of length ``p``: does ``us`` occur inside it?"""
    n, m = len(ws), len(us)
    if m == 0:
        return [True] * (n - p + 1)
    if m > p:
        return [False] * (n - p + 1)
    out = []
    for s in range(n - p + 1):
        i = 0
        for j in range(s, s + p):
            if ws[j] == us[i]:
                i += 1
                if i == m:
                    break
        out.append(i == m)
    return out


def oracle_p_match(u: Word, w: Word, p: int, *, max_n: int = ORACLE_MAX_N) -> MatchReport:
    """Ground-truth window report, one independent scan per window."""
    if p < 0:
        raise ValueError("window length must be nonnegative")
    n = len(w)
    if n > max_n:
        raise BudgetExceededError(n, max_n, "word positions")
    if n == 0:
        return MatchReport(len(u), 0, 0, (len(u) == 0,))
    p_eff = min(p, n)
    verdicts = _window_verdicts(u.symbols, w.symbols, p_eff)
    return MatchReport(len(u), p_eff, n, tuple(verdicts))


def oracle_pmas(v: Word, w: Word, p: int, *, max_n: int = ORACLE_MAX_N) -> bool:
    """Definitional check: ``v`` absent from every window, while every
    single-deletion word of ``v`` occurs in some window.

    (A word's proper subsequences are subsequences of its single-deletion
    words, so checking the deletions suffices.)
    """
    if p < 1:
        raise ValueError("window length must be positive")
    n, m = len(w), len(v)
    if n > max_n:
        raise BudgetExceededError(n, max_n, "word positions")
    vs, ws = v.symbols, w.symbols
    if m == 0:
        return False  # the empty word is never absent
    if n == 0:
        return m == 1  # only the single letters have all proper subsequences present
    p_eff = min(p, n)
    if any(_window_verdicts(vs, ws, p_eff)):
        return False
    for i in range(m):
        deletion = vs[:i] + vs[i + 1 :]
        if not any(_window_verdicts(deletion, ws, p_eff)):
            return False
    return True


def oracle_ov(inst_or_a, set_b: Iterable[Sequence[int]] | None = None) -> bool:
    """Is some ``a in A`` orthogonal to some ``b in B``?  Plain double loop."""
    if set_b is None:
        set_a, set_b = inst_or_a.set_a, inst_or_a.set_b
    else:
        set_a = inst_or_a
    for a in set_a:
        for b in set_b:
            if all(x * y == 0 for x, y in zip(a, b)):
                return True
    return False


def oracle_partial_words(
    words: Sequence[PartialWord], length: int, *, budget: int = 1 << 24
) -> tuple[int, ...] | None:
    """Lexicographically least bit word incompatible with *every* partial word,
    or ``None`` if each candidate is compatible with some member."""
    if any(len(pw) != length for pw in words):
        raise ValueError("all partial words must have the declared length")
    if 2**length > budget:
        raise BudgetExceededError(2**length, budget, "assignments")
    for bits in itertools.product((0, 1), repeat=length):
        if all(not pw.compatible_with(bits) for pw in words):
            return bits
    return None


def oracle_min_rep(w: Word):
    """Shortest (then lexicographically least) root whose fractional power is a
    rotation of ``w``, found by trying every rotation and every root length."""
    from .circular import MinimalRepresentation

    n = len(w)
    if n == 0:
        raise ValueError("minimal representation of the empty word is undefined")
    best: tuple[int, tuple[int, ...], int] | None = None
    for offset in range(1, n + 1):
        conj = w.rotate(offset).symbols
        for q in range(1, n + 1):
            if all(conj[j] == conj[j - q] for j in range(q, n)):
                cand = (q, conj[:q], offset)
                if best is None or cand < best:
                    best = cand
                break  # only the shortest period of this rotation can compete
    assert best is not None
    q, root, offset = best
    return MinimalRepresentation(
        root=Word(root, w.alphabet_size), total_length=n, rotation_offset=offset
    )


def oracle_universality_index(w: Word, *, budget: int = 1 << 20) -> int:
    """Largest ``k`` with every length-``k`` word over ``alph(w)`` a subsequence
    of ``w``, by explicit enumeration with ascending ``k``."""
    if len(w) == 0:
        raise ValueError("universality index of the empty word is undefined")
    letters = sorted(w.alph())
    ws = w.symbols
    k = 0
    while True:
        k += 1
        if len(letters) ** k > budget:
            raise BudgetExceededError(len(letters) ** k, budget, "candidates")
        for cand in itertools.product(letters, repeat=k):
            i = 0
            for c in ws:
                if c == cand[i]:
                    i += 1
                    if i == k:
                        break
            if i < k:
                return k - 1


def oracle_window_k_universal(
    w: Word, k: int, p: int, sigma: int | None = None, *, budget: int = 1 << 22
) -> bool:
    """Does every word of ``Sigma^k`` occur in some length-``p`` window?"""
    if sigma is None:
        sigma = w.alphabet_size
    if sigma**k > budget:
        raise BudgetExceededError(sigma**k, budget, "candidates")
    ws = w.symbols
    p_eff = min(p, len(w)) if len(w) else 0
    for cand in itertools.product(range(1, sigma + 1), repeat=k):
        if not any(_window_verdicts(cand, ws, p_eff)):
            return False
    return True
