"""Instance generators mapping hard source problems onto window deciders.

Each generator builds a target instance whose answer provably equals the
source answer, so the deciders in :mod:`windowseq.matching`,
:mod:`windowseq.absent` and :mod:`windowseq.analysis` can be exercised on
structured inputs and round-tripped against independent source oracles.

Target alphabets are fixed symbol tables: the bracket gadgets use
``{0, 1, #, [, ]}`` as ids ``1..5``; the partial-word gadgets use
``{0, 1, #}`` as ids ``1..3``; the padding constructions append a fresh
``$`` symbol after the source alphabet.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Any, Sequence

from .words import PartialWord, Word

__all__ = [
    "OvInstance",
    "ReductionInstance",
    "KIND_OV_TO_MATCH",
    "KIND_SAT3_TO_PW",
    "KIND_PW_TO_KPNONUNIV",
    "KIND_KPNONUNIV_TO_KPNONEQUIV",
    "KIND_MATCH_TO_PMAS",
    "KIND_MATCH_TO_PMAS_STREAM",
    "ov_to_match",
    "sat3_to_partial_words",
    "partial_words_to_kp_non_univ",
    "kp_non_univ_to_kp_non_equiv",
    "psas_instance_from_partial_words",
    "match_to_pmas",
    "match_to_pmas_stream",
]

# symbol ids of the gadget alphabet {0, 1, #, [, ]}
_ZERO, _ONE, _HASH, _OPEN, _CLOSE = 1, 2, 3, 4, 5
_GADGET_SIGMA = 5
_PW_SIGMA = 3  # {0, 1, #}

KIND_OV_TO_MATCH = "OV_TO_MATCH"
KIND_SAT3_TO_PW = "SAT3_TO_PW"
KIND_PW_TO_KPNONUNIV = "PW_TO_KPNONUNIV"
KIND_KPNONUNIV_TO_KPNONEQUIV = "KPNONUNIV_TO_KPNONEQUIV"
KIND_PW_TO_PSAS = "PW_TO_PSAS"
KIND_MATCH_TO_PMAS = "MATCH_TO_PMAS"
KIND_MATCH_TO_PMAS_STREAM = "MATCH_TO_PMAS_STREAM"


def _digest(source: Any) -> str:
    blob = json.dumps(source, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("ascii")).hexdigest()


@dataclass(frozen=True)
class OvInstance:
    """Two equal-sized sets of {0,1}-vectors of a common dimension."""

    set_a: tuple[tuple[int, ...], ...]
    set_b: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "set_a", tuple(tuple(v) for v in self.set_a))
        object.__setattr__(self, "set_b", tuple(tuple(v) for v in self.set_b))
        if not self.set_a or not self.set_b:
            raise ValueError("vector sets must be nonempty")
        if len(self.set_a) != len(self.set_b):
            # the window-counting argument in the match construction needs
            # equally many vectors on both sides
            raise ValueError("vector sets must have equal size")
        d = len(self.set_a[0])
        if d < 1:
            raise ValueError("vector dimension must be at least 1")
        for vec in self.set_a + self.set_b:
            if len(vec) != d:
                raise ValueError("all vectors must share one dimension")
            if any(x not in (0, 1) for x in vec):
                raise ValueError("vector entries must be 0 or 1")

    @property
    def size(self) -> int:
        return len(self.set_a)

    @property
    def dimension(self) -> int:
        return len(self.set_a[0])

    def digest(self) -> str:
        return _digest({"a": self.set_a, "b": self.set_b})


@dataclass(frozen=True)
class ReductionInstance:
    """A constructed target instance plus a digest of the source it encodes."""

    kind: str
    payload: dict[str, Any]
    source_digest: str


def _psi_a(vec: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = []
    for bit in vec:
        out += (_ZERO, _ZERO, _HASH) if bit else (_ZERO, _ONE, _HASH)
    return tuple(out)


def _psi_b(vec: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = []
    for bit in vec:
        out += (_ONE if bit else _ZERO, _HASH)
    return tuple(out)


def _block(body: tuple[int, ...]) -> tuple[int, ...]:
    return (_OPEN,) + body + (_CLOSE,)


def ov_to_match(inst: OvInstance) -> ReductionInstance:
    """Encode an orthogonal-vectors question as a window-matching question.

    Per vector bit, the host side spells ``01#`` for 0 and ``00#`` for 1 and
    the pattern side spells the bit plus ``#``; a bit-pattern then embeds in a
    bit-host cell exactly when the product of the two bits is 0.  The host
    lists the A-vectors in bracket blocks, padded with all-zero blocks and
    fenced by all-one blocks, and is doubled; the pattern lists the B-vectors
    fenced by all-one blocks.  A window of length ``|W|`` can align the
    pattern iff some pair is orthogonal.
    """
    n, d = inst.size, inst.dimension
    ones = _block(_psi_a((1,) * d))
    zeros = _block(_psi_a((0,) * d))
    host: list[int] = list(ones) + list(zeros)
    for vec in inst.set_a:
        host += _block(_psi_a(vec)) + zeros
    host += ones
    pattern: list[int] = list(_block(_psi_b((1,) * d)))
    for vec in inst.set_b:
        pattern += _block(_psi_b(vec))
    pattern += _block(_psi_b((1,) * d))
    assert len(host) == (2 * n + 3) * (3 * d + 2)
    assert len(pattern) == (n + 2) * (2 * d + 2)
    payload = {
        "u": Word(pattern, _GADGET_SIGMA),
        "w": Word(host + host, _GADGET_SIGMA),
        "p": len(host),
    }
    return ReductionInstance(KIND_OV_TO_MATCH, payload, inst.digest())


def sat3_to_partial_words(
    clauses: Sequence[Sequence[int]], n_vars: int
) -> list[PartialWord]:
    """One partial word per clause; an assignment satisfies every clause iff
    its bit word is compatible with none of the outputs.

    Clauses are sequences of 1 to 3 nonzero ints: ``j`` for the variable
    ``x_j``, ``-j`` for its negation.  A clause holding both a literal and
    its negation is rejected (it is trivially true and would make the
    correspondence fail).
    """
    if n_vars < 1:
        raise ValueError("need at least one variable")
    out: list[PartialWord] = []
    for clause in clauses:
        lits = tuple(clause)
        if not 1 <= len(lits) <= 3:
            raise ValueError(f"clause size must be 1..3, got {len(lits)}")
        cells: list[int | None] = [None] * n_vars
        for lit in lits:
            if not 1 <= abs(lit) <= n_vars:
                raise ValueError(f"literal {lit} outside 1..{n_vars}")
        if any(-lit in lits for lit in lits):
            raise ValueError(f"clause {lits} holds a literal and its negation")
        for lit in lits:
            # falsifying the clause pins each mentioned variable to the
            # value making its literal false
            cells[abs(lit) - 1] = 0 if lit > 0 else 1
        out.append(PartialWord(cells))
    return out


def _cell_gadget(cell: int | None) -> tuple[int, ...]:
    if cell == 0:
        return (_ZERO, _HASH)
    if cell == 1:
        return (_ONE, _HASH)
    return (_ZERO, _ONE, _HASH)


# Linear de Bruijn word over {0,1,#}: every ordered pair is a factor, so
# every window of length 2 realises one pair and all nine arise.
_UNIVERSAL_L1 = Word(
    (_ZERO, _ZERO, _ONE, _ONE, _ZERO, _HASH, _ONE, _HASH, _HASH, _ZERO),
    _PW_SIGMA,
)


def _source_accepted_l1(members: Sequence[PartialWord]) -> bool:
    return any(
        all(not pw.compatible_with((b,)) for pw in members) for b in (0, 1)
    )


def _check_members(members: Sequence[PartialWord], length: int) -> None:
    if length < 1:
        raise ValueError("partial words must have positive length")
    for pw in members:
        if len(pw) != length:
            raise ValueError(
                f"partial word {pw.to_text()!r} does not have length {length}"
            )


def _selector_host(members: Sequence[PartialWord], length: int) -> tuple[Word, int, int]:
    """Host word, subsequence length ``k`` and window ``p`` whose length-``k``
    window-subsequence set misses some word iff some bit word of length
    ``length`` is compatible with no member.

    The prefix ``V`` supplies every length-``2L`` word except the selectors
    ``a_1 # a_2 # ... a_L #`` (those need ``L+1`` of its ``L`` blocks); a run
    of ``0``s shields ``V``'s trailing block from the ``#`` run that follows,
    and each cell-gadget word ``u_i`` sits between ``#`` runs of full window
    length, so a selector is present iff it embeds in some ``u_i`` alone,
    which happens iff its bit word is compatible with member ``i``.

    Window length 2 cannot isolate the gadget words this way, so for
    ``length == 1`` the source (two candidate bit words) is decided directly
    and a fixed yes- or no-instance is returned.
    """
    _check_members(members, length)
    big_l = length
    if big_l == 1:
        if _source_accepted_l1(members):
            return Word((_ZERO, _ONE, _HASH), _PW_SIGMA), 2, 2
        return _UNIVERSAL_L1, 2, 2
    vee_block = (_HASH,) * (2 * big_l) + (_ZERO, _ONE) * (2 * big_l)
    vee = vee_block * big_l
    p = len(vee)
    assert p == 6 * big_l * big_l
    host = list(vee) + [_ZERO] * p + [_HASH] * p
    for pw in members:
        for cell in pw.cells:
            host += _cell_gadget(cell)
        host += [_HASH] * p
    return Word(host, _PW_SIGMA), 2 * big_l, p


def _members_digest(members: Sequence[PartialWord], length: int) -> str:
    return _digest({"s": [pw.to_text() for pw in members], "L": length})


def partial_words_to_kp_non_univ(
    members: Sequence[PartialWord], length: int
) -> ReductionInstance:
    """Non-universality instance accepted iff some bit word of the given
    length is compatible with no member."""
    w, k, p = _selector_host(members, length)
    payload = {"w": w, "k": k, "p": p}
    return ReductionInstance(
        KIND_PW_TO_KPNONUNIV, payload, _members_digest(members, length)
    )


def kp_non_univ_to_kp_non_equiv(
    members: Sequence[PartialWord], length: int
) -> ReductionInstance:
    """Non-equivalence instance accepted iff some bit word of the given
    length is compatible with no member.

    The companion host is the same construction applied to the single
    all-wildcard partial word, which every bit word is compatible with: its
    window-subsequence set is the full power set level, so the two sets
    differ exactly when the primary host misses something.
    """
    w, k, p = _selector_host(members, length)
    all_wild = PartialWord([None] * length)
    companion, k2, p2 = _selector_host([all_wild], length)
    assert (k, p) == (k2, p2)
    payload = {"w": w, "v": companion, "k": k, "p": p}
    return ReductionInstance(
        KIND_KPNONUNIV_TO_KPNONEQUIV, payload, _members_digest(members, length)
    )


def psas_instance_from_partial_words(
    members: Sequence[PartialWord], length: int
) -> tuple[Word, Word, int]:
    """Pattern, host and window such that the pattern is a shortest absent
    window subsequence of the host iff every bit word of the given length is
    compatible with some member.

    The pattern ``(0#)^L 0`` is absent from every window by construction, so
    it is shortest-absent exactly when all words one letter shorter are
    present, i.e. when the non-universality host is universal.
    """
    w, k, p = _selector_host(members, length)
    v = Word((_ZERO, _HASH) * length + (_ZERO,), _PW_SIGMA)
    assert len(v) == k + 1
    return v, w, p


def _merged_sigma(u: Word, w: Word) -> int:
    return max(u.alphabet_size, w.alphabet_size)


def match_to_pmas(u: Word, w: Word, p0: int) -> tuple[Word, Word, int]:
    """Instance whose pattern is a minimal absent window subsequence of the
    built host iff ``u`` is *not* a window-``p0`` subsequence of ``w``.

    Every source letter is diluted to ``a $^(sigma-1)`` so a window of
    ``p0 * sigma`` letters sees at most ``p0`` source letters; a long ``$``
    run separates that zone from a tail of ``sigma``-permutations ending in
    ``u[1] ... u[m-1]``, which supplies every deletion of ``u`` (but never
    ``u`` itself) inside one window.
    """
    m, n = len(u), len(w)
    if p0 < 1:
        raise ValueError("window must be positive")
    if m > p0:
        raise ValueError(f"pattern length {m} exceeds window {p0}")
    sigma = _merged_sigma(u, w)
    present = u.alph() | w.alph()
    missing = [c for c in range(1, sigma + 1) if c not in present]
    if missing:
        raise ValueError(f"symbol {missing[0]} occurs in neither word")
    dollar = sigma + 1
    host: list[int] = []
    for a in w.symbols:
        host.append(a)
        host += [dollar] * (sigma - 1)
    host += [dollar] * (3 * p0 * sigma)
    for i in range(m - 1):
        host += [c for c in range(1, sigma + 1) if c != u[i]]
        host.append(u[i])
    assert len(host) == sigma * n + 3 * p0 * sigma + sigma * max(m - 1, 0)
    return Word(u.symbols, dollar), Word(host, dollar), p0 * sigma


def match_to_pmas_stream(u: Word, w: Word, p: int) -> tuple[Word, Word, int]:
    """Instance whose pattern is a minimal absent window subsequence of the
    built host iff ``u`` is absent from every window-``p`` range of ``w``.

    The host appends, after ``w``, each single-letter deletion of ``u``
    behind a ``$`` run one longer than the window, so the deletions are all
    present, no window mixes two appended parts, and ``u`` itself stays
    absent from the appended tail.
    """
    m = len(u)
    if m < 1:
        raise ValueError("pattern must be nonempty")
    if m > p + 1:
        # a deletion of u must fit inside one window for the answers to agree
        raise ValueError(f"pattern length {m} exceeds window {p} + 1")
    sigma = _merged_sigma(u, w)
    dollar = sigma + 1
    host = list(w.symbols)
    for i in range(m):
        host += [dollar] * (p + 1)
        host += [u[j] for j in range(m) if j != i]
    assert len(host) == len(w) + m * (p + 1) + m * (m - 1)
    return Word(u.symbols, dollar), Word(host, dollar), p
