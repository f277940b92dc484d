"""Batch command-line surface over the library.

Word arguments are literal words or paths: when the token names an existing
file its contents are used, otherwise the token itself is the word, and ``-``
reads standard input.  Two input modes exist.  The default ``--alphabet
ascii`` reads lowercase letters with the fixed mapping ``a`` -> 1 ... ``z``
-> 26, so order-sensitive answers (least witnesses, canonical rotations) do
not depend on the order words appear on the command line.  ``--alphabet
ints`` reads whitespace- or comma-separated positive symbol ids and has no
size limit.

Exit codes follow scripting conventions: 0 means the decision is YES (or the
computation succeeded), 1 means NO, and 2 flags usage errors, malformed
input or an exhausted enumeration budget.  ``--json`` switches reports to
one compact JSON object with sorted keys, so identical inputs produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path
from typing import Sequence

import numpy as np

from .absent import is_p_absent, is_pmas, is_psas, pmas_report
from .analysis import DEFAULT_CANDIDATE_BUDGET, kp_non_equivalent, kp_non_universal
from .circular import (
    best_iterated_circular_match,
    circular_match,
    iterated_circular_match,
    minimal_representation,
)
from .errors import BudgetExceededError
from .matching import matcher_init, p_subsequence_match
from .oracles import oracle_min_rep, oracle_p_match, oracle_pmas
from .reductions import (
    KIND_MATCH_TO_PMAS,
    KIND_MATCH_TO_PMAS_STREAM,
    KIND_PW_TO_PSAS,
    KIND_SAT3_TO_PW,
    OvInstance,
    kp_non_univ_to_kp_non_equiv,
    match_to_pmas,
    match_to_pmas_stream,
    ov_to_match,
    partial_words_to_kp_non_univ,
    psas_instance_from_partial_words,
    sat3_to_partial_words,
)
from .words import PartialWord, Word

# ------------------------------------------------------------------ word I/O


def _read_text(token: str) -> str:
    if token == "-":
        return sys.stdin.read()
    path = Path(token)
    if path.is_file():
        return path.read_text()
    return token


def _parse_word(ns: argparse.Namespace, text: str) -> Word:
    if ns.alphabet == "ascii":
        return Word.from_letters("".join(text.split()), ns.sigma)
    ids = []
    for tok in text.replace(",", " ").split():
        try:
            ids.append(int(tok))
        except ValueError:
            raise ValueError(f"not an integer symbol id: {tok!r}") from None
    return Word(ids, ns.sigma)


def _word(ns: argparse.Namespace, token: str) -> Word:
    return _parse_word(ns, _read_text(token))


def _render(ns: argparse.Namespace, word: Word | None):
    """JSON value for a word: text in letter mode, id list otherwise."""
    if word is None:
        return None
    if ns.alphabet == "ascii":
        return word.to_letters()
    return list(word.symbols)


def _word_str(ns: argparse.Namespace, word: Word) -> str:
    text = word.to_letters() if ns.alphabet == "ascii" else ",".join(
        str(s) for s in word.symbols
    )
    return text or "(empty)"


def _with_alphabet(ns: argparse.Namespace, report: dict, *words: Word) -> dict:
    if ns.alphabet == "ascii":
        used = sorted({s for w in words for s in w.symbols})
        report["alphabet"] = {chr(ord("a") + s - 1): s for s in used}
    return report


def _emit(ns: argparse.Namespace, report: dict, human: str) -> None:
    if ns.json:
        sys.stdout.write(
            json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n"
        )
    else:
        print(human)


# --------------------------------------------------------------- subcommands


def _cmd_match(ns: argparse.Namespace) -> int:
    u = _word(ns, ns.pattern)
    if ns.stream:
        return _stream_match(ns, u)
    w = _word(ns, ns.host)
    rep = p_subsequence_match(u, w, ns.p)
    report = _with_alphabet(
        ns,
        {
            "found": rep.found,
            "first_hit": rep.first_hit,
            "m": rep.pattern_length,
            "n": rep.word_length,
            "p": rep.window,
        },
        u,
        w,
    )
    human = (
        f"present; first window starts at {rep.first_hit}"
        if rep.found
        else "absent from every window"
    )
    _emit(ns, report, human)
    return 0 if rep.found else 1


def _stream_match(ns: argparse.Namespace, u: Word) -> int:
    """Feed the host through the streaming matcher, one verdict line per
    position ``t >= p`` (``t hit``); no window-length clamping happens
    because the host length is not known in advance."""
    if ns.p < 0:
        raise ValueError("window length must be nonnegative")
    host = _word(ns, ns.host)
    state = matcher_init(u, ns.p) if len(u) <= ns.p else None
    hit_any = False
    out = sys.stdout
    for t, c in enumerate(host.symbols, start=1):
        hit = state.step(c) if state is not None else False
        if t >= ns.p:
            out.write(f"{t} {int(hit)}\n")
            hit_any = hit_any or hit
    return 0 if hit_any else 1


def _cmd_pabsent(ns: argparse.Namespace) -> int:
    u = _word(ns, ns.pattern)
    w = _word(ns, ns.host)
    absent = is_p_absent(u, w, ns.p)
    report = _with_alphabet(
        ns, {"absent": absent, "m": len(u), "n": len(w), "p": ns.p}, u, w
    )
    _emit(ns, report, "absent" if absent else "present in some window")
    return 0 if absent else 1


def _cmd_pmas(ns: argparse.Namespace) -> int:
    v = _word(ns, ns.pattern)
    w = _word(ns, ns.host)
    if ns.diagnose:
        rep = pmas_report(v, w, ns.p)
        verdict = rep.is_minimal_absent
        report = {
            "pmas": verdict,
            "first_occurrence": rep.first_occurrence,
            "covered": list(rep.covered),
        }
        human = (
            f"pmas={verdict} first_occurrence={rep.first_occurrence} "
            f"covered={''.join(str(int(c)) for c in rep.covered)}"
        )
    else:
        verdict = is_pmas(v, w, ns.p)
        report = {"pmas": verdict}
        human = "minimal absent" if verdict else "not a minimal absent subsequence"
    _emit(ns, _with_alphabet(ns, report, v, w), human)
    return 0 if verdict else 1


def _cmd_psas(ns: argparse.Namespace) -> int:
    v = _word(ns, ns.pattern)
    w = _word(ns, ns.host)
    verdict = is_psas(v, w, ns.p, ns.budget)
    report = _with_alphabet(ns, {"psas": verdict}, v, w)
    _emit(
        ns, report, "shortest absent" if verdict else "not a shortest absent subsequence"
    )
    return 0 if verdict else 1


def _cmd_nonuniv(ns: argparse.Namespace) -> int:
    w = _word(ns, ns.host)
    witness = kp_non_universal(w, ns.k, ns.p, ns.budget, threads=ns.threads)
    report = _with_alphabet(
        ns,
        {
            "non_universal": witness is not None,
            "witness": _render(ns, witness),
            "k": ns.k,
            "p": ns.p,
        },
        w,
    )
    human = (
        f"non-universal; witness {_word_str(ns, witness)}"
        if witness is not None
        else "universal: every word of that length occurs in some window"
    )
    _emit(ns, report, human)
    return 0 if witness is not None else 1


def _cmd_nonequiv(ns: argparse.Namespace) -> int:
    w = _word(ns, ns.host)
    v = _word(ns, ns.other)
    witness = kp_non_equivalent(w, v, ns.k, ns.p, ns.budget, threads=ns.threads)
    report = _with_alphabet(
        ns,
        {
            "non_equivalent": witness is not None,
            "witness": _render(ns, witness),
            "k": ns.k,
            "p": ns.p,
        },
        w,
        v,
    )
    human = (
        f"non-equivalent; separated by {_word_str(ns, witness)}"
        if witness is not None
        else "equivalent: the window subsequence sets coincide"
    )
    _emit(ns, report, human)
    return 0 if witness is not None else 1


def _cmd_minrep(ns: argparse.Namespace) -> int:
    w = _word(ns, ns.host)
    mr = minimal_representation(w)
    report = _with_alphabet(
        ns,
        {
            "root": _render(ns, mr.root),
            "n": mr.total_length,
            "offset": mr.rotation_offset,
        },
        w,
    )
    _emit(
        ns,
        report,
        f"root {_word_str(ns, mr.root)} n={mr.total_length} offset={mr.rotation_offset}",
    )
    return 0


def _cmd_circmatch(ns: argparse.Namespace) -> int:
    v = _word(ns, ns.pattern)
    w = _word(ns, ns.host)
    found = circular_match(v, w)
    report = _with_alphabet(ns, {"found": found}, v, w)
    _emit(ns, report, "present in one traversal" if found else "absent")
    return 0 if found else 1


def _cmd_itmatch(ns: argparse.Namespace) -> int:
    v = _word(ns, ns.pattern)
    w = _word(ns, ns.host)
    ell = iterated_circular_match(v, w)
    report: dict = {"ell": ell}
    if ns.ell is not None:
        report["within"] = ell <= ns.ell
    _emit(ns, _with_alphabet(ns, report, v, w), f"traversals needed: {ell}")
    if ns.ell is not None:
        return 0 if ell <= ns.ell else 1
    return 0


def _cmd_bestitmatch(ns: argparse.Namespace) -> int:
    v = _word(ns, ns.pattern)
    w = _word(ns, ns.host)
    ell, offset = best_iterated_circular_match(v, w, threads=ns.threads)
    report = _with_alphabet(ns, {"ell": ell, "offset": offset}, v, w)
    _emit(
        ns, report, f"traversals needed: {ell} from rotation offset {offset}"
    )
    return 0


# ------------------------------------------------------------------- reduce


def _canonical_digest(source) -> str:
    blob = json.dumps(source, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def _need(src: dict, key: str):
    if key not in src:
        raise ValueError(f"reduction source misses the {key!r} field")
    return src[key]


def _json_word(value) -> Word:
    """Words inside reduction sources are self-describing: a string of
    letters or a list of integer ids, independent of ``--alphabet``."""
    if isinstance(value, str):
        return Word.from_letters(value)
    if isinstance(value, list):
        return Word(value)
    raise ValueError(f"expected a word (string or id list), got {value!r}")


def _manifest(kind: str, payload: dict, digest: str) -> dict:
    rendered: dict = {}
    sigma = 0
    for key, value in payload.items():
        if isinstance(value, Word):
            rendered[key] = list(value.symbols)
            sigma = max(sigma, value.alphabet_size)
        else:
            rendered[key] = value
    if sigma:
        rendered["sigma"] = sigma
    return {"kind": kind, "payload": rendered, "source_digest": digest}


def _members_from_source(src: dict) -> tuple[list[PartialWord], int]:
    texts = _need(src, "words")
    members = [PartialWord.from_text(t) for t in texts]
    length = src.get("length")
    if length is None:
        if not members:
            raise ValueError("an empty family needs an explicit 'length'")
        length = len(members[0])
    return members, int(length)


def _build_reduction(kind: str, src: dict) -> dict:
    if kind == "ov-match":
        inst = OvInstance(_need(src, "a"), _need(src, "b"))
        ri = ov_to_match(inst)
        return _manifest(ri.kind, dict(ri.payload), ri.source_digest)
    if kind == "sat-pwords":
        clauses = [list(c) for c in _need(src, "clauses")]
        n_vars = int(_need(src, "n_vars"))
        words = sat3_to_partial_words(clauses, n_vars)
        payload = {"words": [pw.to_text() for pw in words], "length": n_vars}
        digest = _canonical_digest({"clauses": clauses, "n_vars": n_vars})
        return _manifest(KIND_SAT3_TO_PW, payload, digest)
    if kind == "pwords-nonuniv":
        members, length = _members_from_source(src)
        ri = partial_words_to_kp_non_univ(members, length)
        return _manifest(ri.kind, dict(ri.payload), ri.source_digest)
    if kind == "pwords-nonequiv":
        members, length = _members_from_source(src)
        ri = kp_non_univ_to_kp_non_equiv(members, length)
        return _manifest(ri.kind, dict(ri.payload), ri.source_digest)
    if kind == "pwords-psas":
        members, length = _members_from_source(src)
        v, w, p = psas_instance_from_partial_words(members, length)
        digest = _canonical_digest(
            {"s": [pw.to_text() for pw in members], "L": length}
        )
        return _manifest(KIND_PW_TO_PSAS, {"v": v, "w": w, "p": p}, digest)
    if kind == "match-pmas":
        u = _json_word(_need(src, "u"))
        w = _json_word(_need(src, "w"))
        p0 = int(_need(src, "p0"))
        v2, w2, p2 = match_to_pmas(u, w, p0)
        digest = _canonical_digest(
            {"u": list(u.symbols), "w": list(w.symbols), "p0": p0}
        )
        return _manifest(
            KIND_MATCH_TO_PMAS, {"v": v2, "w": w2, "p": p2}, digest
        )
    if kind == "match-pmas-stream":
        u = _json_word(_need(src, "u"))
        w = _json_word(_need(src, "w"))
        p = int(_need(src, "p"))
        v2, w2, p2 = match_to_pmas_stream(u, w, p)
        digest = _canonical_digest(
            {"u": list(u.symbols), "w": list(w.symbols), "p": p}
        )
        return _manifest(
            KIND_MATCH_TO_PMAS_STREAM, {"v": v2, "w": w2, "p": p2}, digest
        )
    raise ValueError(f"unknown reduction kind {kind!r}")


def _cmd_reduce(ns: argparse.Namespace) -> int:
    text = _read_text(ns.source)
    try:
        src = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"reduction source is not valid JSON: {exc}") from None
    if not isinstance(src, dict):
        raise ValueError("reduction source must be a JSON object")
    manifest = _build_reduction(ns.kind, src)
    if ns.out_dir is not None:
        out = Path(ns.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for key, value in manifest["payload"].items():
            if isinstance(value, list) and value and isinstance(value[0], str):
                (out / f"{key}.txt").write_text("\n".join(value) + "\n")
            elif isinstance(value, list):
                (out / f"{key}.txt").write_text(
                    " ".join(str(s) for s in value) + "\n"
                )
        (out / "manifest.json").write_text(
            json.dumps(manifest, sort_keys=True, separators=(",", ":")) + "\n"
        )
    sys.stdout.write(
        json.dumps(manifest, sort_keys=True, separators=(",", ":")) + "\n"
    )
    return 0


# ------------------------------------------------------------------- oracle


def _cmd_oracle_match(ns: argparse.Namespace) -> int:
    u = _word(ns, ns.pattern)
    w = _word(ns, ns.host)
    rep = oracle_p_match(u, w, ns.p)
    report = _with_alphabet(
        ns, {"found": rep.found, "first_hit": rep.first_hit}, u, w
    )
    _emit(ns, report, f"found={rep.found} first_hit={rep.first_hit}")
    return 0 if rep.found else 1


def _cmd_oracle_pmas(ns: argparse.Namespace) -> int:
    v = _word(ns, ns.pattern)
    w = _word(ns, ns.host)
    verdict = oracle_pmas(v, w, ns.p)
    _emit(ns, _with_alphabet(ns, {"pmas": verdict}, v, w), f"pmas={verdict}")
    return 0 if verdict else 1


def _cmd_oracle_minrep(ns: argparse.Namespace) -> int:
    w = _word(ns, ns.host)
    mr = oracle_min_rep(w)
    report = _with_alphabet(
        ns,
        {
            "root": _render(ns, mr.root),
            "n": mr.total_length,
            "offset": mr.rotation_offset,
        },
        w,
    )
    _emit(
        ns,
        report,
        f"root {_word_str(ns, mr.root)} n={mr.total_length} offset={mr.rotation_offset}",
    )
    return 0


# -------------------------------------------------------------------- bench


def _cmd_bench(ns: argparse.Namespace) -> int:
    rng = np.random.default_rng(ns.seed)
    sigma = ns.sigma
    w = Word(rng.integers(1, sigma + 1, size=ns.n), sigma)
    u = Word(rng.integers(1, sigma + 1, size=ns.m), sigma)
    p = ns.p if ns.p is not None else max(ns.m, ns.n // 2)
    out = sys.stdout
    out.write("n,m,p,wall_ns\n")
    for _ in range(ns.repeat):
        t0 = time.perf_counter_ns()
        p_subsequence_match(u, w, p)
        out.write(f"{ns.n},{ns.m},{p},{time.perf_counter_ns() - t0}\n")
    return 0


# ------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--alphabet",
        choices=("ascii", "ints"),
        default="ascii",
        help="word input mode: lowercase letters (a=1..z=26) or integer ids",
    )
    common.add_argument(
        "--json", action="store_true", help="emit one compact JSON report"
    )
    common.add_argument(
        "--sigma",
        type=int,
        default=None,
        help="declare the alphabet size (default: largest symbol seen per word)",
    )

    parser = argparse.ArgumentParser(
        prog="windowseq",
        description="Subsequence matching and analysis in fixed-length "
        "windows of words, including circular words.",
        epilog="Word arguments are literals, file paths (a path wins when the "
        "file exists) or '-' for standard input.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = add("match", _cmd_match, "does the pattern occur in some window?")
    sp.add_argument("pattern")
    sp.add_argument("host")
    sp.add_argument("--p", type=int, required=True, help="window length")
    sp.add_argument(
        "--stream",
        action="store_true",
        help="print one 't hit' line per host position t >= p instead of a report",
    )

    sp = add("pabsent", _cmd_pabsent, "is the pattern absent from every window?")
    sp.add_argument("pattern")
    sp.add_argument("host")
    sp.add_argument("--p", type=int, required=True, help="window length")

    sp = add("pmas", _cmd_pmas, "is the pattern a minimal absent window subsequence?")
    sp.add_argument("pattern")
    sp.add_argument("host")
    sp.add_argument("--p", type=int, required=True, help="window length")
    sp.add_argument(
        "--diagnose",
        action="store_true",
        help="full scan: first occurrence and per-deletion coverage",
    )

    sp = add("psas", _cmd_psas, "is the pattern a shortest absent window subsequence?")
    sp.add_argument("pattern")
    sp.add_argument("host")
    sp.add_argument("--p", type=int, required=True, help="window length")
    sp.add_argument(
        "--budget",
        type=int,
        default=1 << 24,
        help="candidate limit for the one-shorter sweep",
    )

    sp = add("nonuniv", _cmd_nonuniv, "least length-k word missing from every window")
    sp.add_argument("host")
    sp.add_argument("--k", type=int, required=True, help="subsequence length")
    sp.add_argument("--p", type=int, required=True, help="window length")
    sp.add_argument(
        "--budget", type=int, default=DEFAULT_CANDIDATE_BUDGET, help="candidate limit"
    )
    sp.add_argument("--threads", type=int, default=1, help="enumeration threads")

    sp = add(
        "nonequiv",
        _cmd_nonequiv,
        "least length-k word present in exactly one host's windows",
    )
    sp.add_argument("host")
    sp.add_argument("other")
    sp.add_argument("--k", type=int, required=True, help="subsequence length")
    sp.add_argument("--p", type=int, required=True, help="window length")
    sp.add_argument(
        "--budget", type=int, default=DEFAULT_CANDIDATE_BUDGET, help="candidate limit"
    )
    sp.add_argument("--threads", type=int, default=1, help="enumeration threads")

    sp = add("minrep", _cmd_minrep, "minimal representation of a circular word")
    sp.add_argument("host")

    sp = add("circmatch", _cmd_circmatch, "subsequence of one full traversal?")
    sp.add_argument("pattern")
    sp.add_argument("host")

    sp = add("itmatch", _cmd_itmatch, "traversals needed from the canonical rotation")
    sp.add_argument("pattern")
    sp.add_argument("host")
    sp.add_argument(
        "--ell",
        type=int,
        default=None,
        help="also decide whether the count is at most this bound",
    )

    sp = add("bestitmatch", _cmd_bestitmatch, "fewest traversals over all rotations")
    sp.add_argument("pattern")
    sp.add_argument("host")
    sp.add_argument("--threads", type=int, default=1, help="offset-scan threads")

    sp = add("reduce", _cmd_reduce, "materialize a hardness-reduction instance")
    sp.add_argument(
        "kind",
        choices=(
            "ov-match",
            "sat-pwords",
            "pwords-nonuniv",
            "pwords-nonequiv",
            "pwords-psas",
            "match-pmas",
            "match-pmas-stream",
        ),
    )
    sp.add_argument("source", help="JSON source instance (path or '-')")
    sp.add_argument(
        "--out-dir", default=None, help="also write word files and manifest.json here"
    )

    op = sub.add_parser("oracle", help="reference implementations for cross-checks")
    osub = op.add_subparsers(dest="op", required=True)
    sp = osub.add_parser("match", parents=[common])
    sp.set_defaults(func=_cmd_oracle_match)
    sp.add_argument("pattern")
    sp.add_argument("host")
    sp.add_argument("--p", type=int, required=True)
    sp = osub.add_parser("pmas", parents=[common])
    sp.set_defaults(func=_cmd_oracle_pmas)
    sp.add_argument("pattern")
    sp.add_argument("host")
    sp.add_argument("--p", type=int, required=True)
    sp = osub.add_parser("minrep", parents=[common])
    sp.set_defaults(func=_cmd_oracle_minrep)
    sp.add_argument("host")

    bp = sub.add_parser("bench", help="timing rows as CSV (n,m,p,wall_ns)")
    bsub = bp.add_subparsers(dest="target", required=True)
    sp = bsub.add_parser("match")
    sp.set_defaults(func=_cmd_bench)
    sp.add_argument("--n", type=int, required=True, help="host length")
    sp.add_argument("--m", type=int, required=True, help="pattern length")
    sp.add_argument("--sigma", type=int, default=4, help="alphabet size")
    sp.add_argument("--p", type=int, default=None, help="window (default n//2)")
    sp.add_argument("--repeat", type=int, default=5, help="timing rows")
    sp.add_argument("--seed", type=int, default=0, help="generator seed")

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage problems itself
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return ns.func(ns)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
