"""Core word types, alphabet handling, and window arithmetic.

Words are immutable sequences of 1-based integer symbol ids over an alphabet
``{1, ..., alphabet_size}``.  Python-side indexing (``word[i]``, slices) is
0-based as usual; *reported positions* (window starts, rotation offsets) are
1-based throughout the package and documented where they appear.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "Word",
    "PartialWord",
    "WindowQuery",
    "MatchReport",
    "SymbolTable",
    "classic_subsequence",
    "window_at",
]

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


class Word:
    """An immutable word over an integer alphabet.

    >>> w = Word.from_letters("abca")
    >>> len(w), w.alphabet_size
    (4, 3)
    >>> w.symbols
    (1, 2, 3, 1)
    >>> w[1:3].to_letters()
    'bc'
    """

    __slots__ = ("_data", "_sigma", "_symbols", "_hash")

    def __init__(
        self, symbols: Iterable[int] = (), alphabet_size: int | None = None
    ) -> None:
        if isinstance(symbols, np.ndarray):
            data = symbols.astype(np.int32, copy=True)
        else:
            data = np.array(tuple(symbols), dtype=np.int32)
        if data.ndim != 1:
            raise ValueError("a word is a flat sequence of symbol ids")
        top = int(data.max()) if data.size else 0
        if data.size and int(data.min()) < 1:
            raise ValueError("symbol ids are 1-based positive integers")
        sigma = top if alphabet_size is None else int(alphabet_size)
        if sigma < top:
            raise ValueError(f"alphabet_size {sigma} below largest symbol {top}")
        data.setflags(write=False)
        self._data = data
        self._sigma = sigma
        self._symbols: tuple[int, ...] | None = None
        self._hash: int | None = None

    @classmethod
    def from_letters(cls, text: str, alphabet_size: int | None = None) -> "Word":
        """Build a word from lowercase letters, ``a`` -> 1, ``b`` -> 2, ..."""
        try:
            ids = [_LETTERS.index(ch) + 1 for ch in text]
        except ValueError:
            raise ValueError(f"from_letters accepts only a-z, got {text!r}") from None
        return cls(ids, alphabet_size)

    def to_letters(self) -> str:
        if self._sigma > 26:
            raise ValueError("alphabet too large for letter rendering")
        return "".join(_LETTERS[s - 1] for s in self.symbols)

    @property
    def data(self) -> np.ndarray:
        """Read-only int32 view of the symbols."""
        return self._data

    @property
    def symbols(self) -> tuple[int, ...]:
        if self._symbols is None:
            self._symbols = tuple(int(s) for s in self._data)
        return self._symbols

    @property
    def alphabet_size(self) -> int:
        return self._sigma

    def alph(self) -> frozenset[int]:
        """The set of symbols actually occurring."""
        return frozenset(np.unique(self._data).tolist())

    def count(self, symbol: int) -> int:
        return int(np.count_nonzero(self._data == symbol))

    def __len__(self) -> int:
        return self._data.size

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, item: int | slice) -> "int | Word":
        if isinstance(item, slice):
            return Word(self._data[item], self._sigma)
        return int(self._data[item])

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        sigma = max(self._sigma, other._sigma)
        return Word(np.concatenate([self._data, other._data]), sigma)

    def __mul__(self, times: int) -> "Word":
        if not isinstance(times, int) or times < 0:
            return NotImplemented
        if times == 0:
            return Word((), self._sigma)
        return Word(np.tile(self._data, times), self._sigma)

    def rotate(self, offset: int) -> "Word":
        """The conjugate starting at 1-based position ``offset``."""
        n = len(self)
        if n == 0:
            return self
        k = (offset - 1) % n
        return Word(np.concatenate([self._data[k:], self._data[:k]]), self._sigma)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self._data.size == other._data.size and bool(
            np.array_equal(self._data, other._data)
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._data.tobytes())
        return self._hash

    def __repr__(self) -> str:
        body = ",".join(str(s) for s in self.symbols[:16])
        if len(self) > 16:
            body += f",...[{len(self)} total]"
        return f"Word(({body}), sigma={self._sigma})"


WILDCARD: int | None = None


class PartialWord:
    """A word over ``{0, 1, wildcard}``; wildcards are compatible with both bits.

    Cells are stored as ``0``, ``1`` or ``None`` (the wildcard).  Text form
    uses ``*`` for the wildcard:

    >>> pw = PartialWord.from_text("0*1")
    >>> pw.cells
    (0, None, 1)
    >>> pw.compatible_with((0, 1, 1)), pw.compatible_with((1, 1, 1))
    (True, False)
    """

    __slots__ = ("cells",)

    def __init__(self, cells: Iterable[int | None]) -> None:
        frozen = tuple(cells)
        for c in frozen:
            if c not in (0, 1, None):
                raise ValueError(f"cells must be 0, 1 or None, got {c!r}")
        object.__setattr__(self, "cells", frozen)

    @classmethod
    def from_text(cls, text: str) -> "PartialWord":
        table = {"0": 0, "1": 1, "*": None}
        try:
            return cls(table[ch] for ch in text)
        except KeyError as exc:
            raise ValueError(f"partial-word text uses 0, 1, *; got {exc.args[0]!r}")

    def to_text(self) -> str:
        return "".join("*" if c is None else str(c) for c in self.cells)

    def compatible_with(self, bits: Sequence[int]) -> bool:
        """True iff some total word refines both, i.e. no defined cell disagrees."""
        if len(bits) != len(self.cells):
            return False
        return all(c is None or c == b for c, b in zip(self.cells, bits))

    def __len__(self) -> int:
        return len(self.cells)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialWord):
            return NotImplemented
        return self.cells == other.cells

    def __hash__(self) -> int:
        return hash(self.cells)

    def __repr__(self) -> str:
        return f"PartialWord({self.to_text()!r})"


@dataclass(frozen=True, slots=True)
class WindowQuery:
    """A validated pattern-in-window query: the pattern must fit the window."""

    pattern: Word
    window: int

    def __post_init__(self) -> None:
        if self.window < 0:
            raise ValueError("window length must be nonnegative")
        if len(self.pattern) > self.window:
            raise ValueError(
                f"pattern of length {len(self.pattern)} cannot fit a window of "
                f"length {self.window}"
            )


class MatchReport:
    """Per-window verdicts for one bounded-range query.

    ``per_window[i]`` answers the window *ending* at position ``t = window + i``
    (1-based), i.e. starting at position ``i + 1``.  ``first_hit`` is the
    1-based start of the earliest matching window, or ``None``.
    """

    __slots__ = ("pattern_length", "window", "word_length", "per_window")

    def __init__(
        self,
        pattern_length: int,
        window: int,
        word_length: int,
        per_window: "Sequence[bool] | np.ndarray",
    ) -> None:
        self.pattern_length = pattern_length
        self.window = window
        self.word_length = word_length
        self.per_window = per_window
        expected = max(word_length - window, 0) + 1
        assert len(per_window) == expected, "one verdict per window position"

    @property
    def found(self) -> bool:
        if isinstance(self.per_window, np.ndarray):
            return bool(self.per_window.any())
        return any(self.per_window)

    @property
    def first_hit(self) -> int | None:
        if isinstance(self.per_window, np.ndarray):
            if not self.per_window.any():
                return None
            return int(self.per_window.argmax()) + 1
        for i, hit in enumerate(self.per_window):
            if hit:
                return i + 1
        return None

    def __repr__(self) -> str:
        return (
            f"MatchReport(m={self.pattern_length}, p={self.window}, "
            f"n={self.word_length}, found={self.found}, first_hit={self.first_hit})"
        )


class SymbolTable:
    """Maps text characters to 1-based ids in first-appearance order.

    A convenience for embedding arbitrary text as integer words.  Note the
    command-line letter mode deliberately does *not* use it: there the fixed
    ``a`` -> 1 ... ``z`` -> 26 scheme keeps order-sensitive answers (least
    witnesses, canonical rotations) independent of input order.
    """

    __slots__ = ("_ids",)

    def __init__(self) -> None:
        self._ids: dict[str, int] = {}

    def id_for(self, ch: str) -> int:
        got = self._ids.get(ch)
        if got is None:
            got = len(self._ids) + 1
            self._ids[ch] = got
        return got

    def encode(self, text: str) -> Word:
        ids = [self.id_for(ch) for ch in text]
        return Word(ids, alphabet_size=len(self._ids))

    def decode(self, word: Word) -> str:
        rev = {v: k for k, v in self._ids.items()}
        return "".join(rev[s] for s in word.symbols)

    def mapping(self) -> dict[str, int]:
        return dict(self._ids)

    def __len__(self) -> int:
        return len(self._ids)


def classic_subsequence(u: Word, w: Word) -> bool:
    """Unbounded subsequence test by the standard left-to-right greedy scan.

    >>> classic_subsequence(Word.from_letters("ca"), Word.from_letters("ababcc"))
    False
    >>> classic_subsequence(Word.from_letters("ca"), Word.from_letters("abccab"))
    True
    >>> classic_subsequence(Word(), Word.from_letters("abc"))
    True
    """
    m = len(u)
    if m == 0:
        return True
    if m > len(w):
        return False
    us = u.symbols
    i = 0
    for c in w.symbols:
        if c == us[i]:
            i += 1
            if i == m:
                return True
    return False


def window_at(w: Word, p: int, t: int) -> Word:
    """The window of length ``p`` ending at 1-based position ``t``.

    The start is clamped to the beginning of the word, so for ``t < p`` the
    result is the prefix ``w[1:t]``.

    >>> window_at(Word.from_letters("abcd"), 2, 3).to_letters()
    'bc'
    >>> window_at(Word.from_letters("abcd"), 10, 3).to_letters()
    'abc'
    """
    if p < 1:
        raise ValueError("window length must be at least 1")
    if not 1 <= t <= len(w):
        raise ValueError(f"window end {t} outside [1:{len(w)}]")
    return w[max(0, t - p) : t]
