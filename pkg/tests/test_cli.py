"""Command-line surface: exit codes, JSON shapes, manifests, error paths."""

from __future__ import annotations

import io
import json
import sys

import pytest

from windowseq.cli import build_parser, run


def invoke(capsys, *argv: str):
    code = run(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def payload(out: str) -> dict:
    return json.loads(out)


class TestMatch:
    def test_hit_json(self, capsys):
        code, out, _ = invoke(capsys, "match", "ab", "acb", "--p", "3", "--json")
        assert code == 0
        assert out == (
            '{"alphabet":{"a":1,"b":2,"c":3},"first_hit":1,'
            '"found":true,"m":2,"n":3,"p":3}\n'
        )

    def test_miss_sets_exit_one(self, capsys):
        code, out, _ = invoke(capsys, "match", "ab", "acb", "--p", "2", "--json")
        assert code == 1
        report = payload(out)
        assert report["found"] is False and report["first_hit"] is None

    def test_human_line(self, capsys):
        code, out, _ = invoke(capsys, "match", "ab", "acb", "--p", "3")
        assert code == 0 and out == "present; first window starts at 1\n"

    def test_host_from_file(self, capsys, tmp_path):
        hostfile = tmp_path / "host.txt"
        hostfile.write_text("acb\n")
        code, out, _ = invoke(
            capsys, "match", "ab", str(hostfile), "--p", "3", "--json"
        )
        assert code == 0 and payload(out)["found"] is True

    def test_missing_window_flag(self, capsys):
        code, _, err = invoke(capsys, "match", "ab", "acb")
        assert code == 2 and "usage" in err

    def test_bad_letters(self, capsys):
        code, _, err = invoke(capsys, "match", "aB", "ab", "--p", "2")
        assert code == 2
        assert err == "error: from_letters accepts only a-z, got 'aB'\n"


class TestStream:
    def stream(self, capsys, monkeypatch, text, *argv):
        monkeypatch.setattr(sys, "stdin", io.StringIO(text))
        return invoke(capsys, *argv)

    def test_reports_each_step(self, capsys, monkeypatch):
        code, out, _ = self.stream(
            capsys, monkeypatch, "acbacb", "match", "ab", "-", "--p", "3", "--stream"
        )
        assert code == 0
        assert out == "3 1\n4 0\n5 0\n6 1\n"

    def test_no_hit_exits_one(self, capsys, monkeypatch):
        code, out, _ = self.stream(
            capsys, monkeypatch, "cccc", "match", "ab", "-", "--p", "3", "--stream"
        )
        assert code == 1
        assert out == "3 0\n4 0\n"

    def test_oversized_pattern_never_hits(self, capsys):
        code, out, _ = invoke(
            capsys, "match", "abb", "acb", "--p", "2", "--stream"
        )
        assert code == 1
        assert out == "2 0\n3 0\n"


class TestAbsenceCommands:
    def test_pabsent(self, capsys):
        code, out, _ = invoke(capsys, "pabsent", "ab", "acb", "--p", "2", "--json")
        assert code == 0
        assert out == '{"absent":true,"alphabet":{"a":1,"b":2,"c":3},"m":2,"n":3,"p":2}\n'
        code, out, _ = invoke(capsys, "pabsent", "ab", "acb", "--p", "3", "--json")
        assert code == 1 and payload(out)["absent"] is False

    def test_pmas(self, capsys):
        code, out, _ = invoke(capsys, "pmas", "ba", "ab", "--p", "2", "--json")
        assert code == 0 and payload(out)["pmas"] is True
        code, out, _ = invoke(capsys, "pmas", "ba", "ab", "--p", "2")
        assert out == "minimal absent\n"

    def test_pmas_diagnose(self, capsys):
        code, out, _ = invoke(
            capsys, "pmas", "ba", "ab", "--p", "2", "--diagnose", "--json"
        )
        assert code == 0
        assert out == (
            '{"alphabet":{"a":1,"b":2},"covered":[true,true],'
            '"first_occurrence":null,"pmas":true}\n'
        )

    def test_psas(self, capsys):
        code, out, _ = invoke(capsys, "psas", "cc", "abcabc", "--p", "3", "--json")
        assert code == 0 and payload(out)["psas"] is True
        code, out, _ = invoke(capsys, "psas", "ab", "aaaa", "--p", "2", "--json")
        assert code == 1 and payload(out)["psas"] is False

    def test_psas_budget_bails_out(self, capsys):
        code, _, err = invoke(
            capsys, "psas", "aaa", "ab", "--p", "2", "--budget", "2"
        )
        assert code == 2 and err.startswith("budget exceeded:")


class TestAnalysisCommands:
    def test_nonuniv_witness(self, capsys):
        code, out, _ = invoke(capsys, "nonuniv", "abab", "--k", "2", "--p", "2", "--json")
        assert code == 0
        assert out == (
            '{"alphabet":{"a":1,"b":2},"k":2,"non_universal":true,'
            '"p":2,"witness":"aa"}\n'
        )
        code, out, _ = invoke(capsys, "nonuniv", "abab", "--k", "2", "--p", "2")
        assert out == "non-universal; witness aa\n"

    def test_nonuniv_universal_host(self, capsys):
        code, out, _ = invoke(capsys, "nonuniv", "ab", "--k", "1", "--p", "1", "--json")
        assert code == 1
        report = payload(out)
        assert report["non_universal"] is False and report["witness"] is None

    def test_nonuniv_budget_exceeded(self, capsys):
        code, _, err = invoke(
            capsys,
            "nonuniv", "abababababab", "--k", "5", "--p", "4", "--budget", "10",
        )
        assert code == 2
        assert err == "budget exceeded: needs 32 candidates, exceeding the budget of 10\n"

    def test_nonuniv_short_host_needs_no_budget(self, capsys):
        code, out, _ = invoke(
            capsys,
            "nonuniv", "abab", "--k", "30", "--p", "2", "--budget", "100", "--json",
        )
        assert code == 0 and payload(out)["witness"] == "a" * 30

    def test_nonequiv(self, capsys):
        code, out, _ = invoke(
            capsys, "nonequiv", "abab", "aabb", "--k", "2", "--p", "2", "--json"
        )
        assert code == 0 and payload(out)["witness"] == "aa"
        code, out, _ = invoke(
            capsys, "nonequiv", "abab", "abab", "--k", "2", "--p", "2", "--json"
        )
        assert code == 1 and payload(out)["witness"] is None


class TestCircularCommands:
    def test_minrep(self, capsys):
        code, out, _ = invoke(capsys, "minrep", "baaba", "--json")
        assert code == 0
        assert out == '{"alphabet":{"a":1,"b":2},"n":5,"offset":3,"root":"ab"}\n'

    def test_circmatch(self, capsys):
        code, out, _ = invoke(capsys, "circmatch", "ca", "ababcc", "--json")
        assert code == 0 and payload(out)["found"] is True
        code, out, _ = invoke(capsys, "circmatch", "d", "ababcc", "--json")
        assert code == 1 and payload(out)["found"] is False

    def test_itmatch(self, capsys):
        code, out, _ = invoke(capsys, "itmatch", "ca", "ababcc", "--json")
        assert code == 0 and payload(out)["ell"] == 2

    def test_itmatch_bound(self, capsys):
        code, out, _ = invoke(capsys, "itmatch", "ca", "ababcc", "--ell", "1", "--json")
        assert code == 1
        report = payload(out)
        assert report["ell"] == 2 and report["within"] is False

    def test_itmatch_missing_symbol(self, capsys):
        code, _, err = invoke(capsys, "itmatch", "d", "abc")
        assert code == 2
        assert err == "error: symbol 4 does not occur in the host word\n"

    def test_bestitmatch(self, capsys):
        code, out, _ = invoke(capsys, "bestitmatch", "ca", "ababcc", "--json")
        assert code == 0
        report = payload(out)
        assert (report["ell"], report["offset"]) == (1, 2)
        code, out2, _ = invoke(
            capsys, "bestitmatch", "ca", "ababcc", "--threads", "2", "--json"
        )
        assert payload(out2) == report


class TestIntsAlphabet:
    def test_match_without_letter_map(self, capsys):
        code, out, _ = invoke(
            capsys, "match", "1,2", "1 3 2", "--p", "3", "--alphabet", "ints", "--json"
        )
        assert code == 0
        report = payload(out)
        assert "alphabet" not in report and report["found"] is True

    def test_witnesses_render_as_id_lists(self, capsys):
        code, out, _ = invoke(
            capsys,
            "nonuniv", "1 2 1 2", "--k", "2", "--p", "2", "--alphabet", "ints", "--json",
        )
        assert code == 0 and payload(out)["witness"] == [1, 1]
        code, out, _ = invoke(capsys, "minrep", "1 2", "--alphabet", "ints", "--json")
        assert payload(out)["root"] == [1, 2]

    def test_sigma_widens_the_alphabet(self, capsys):
        base = ["nonuniv", "1 1", "--k", "1", "--p", "1", "--alphabet", "ints"]
        code, out, _ = invoke(capsys, *base, "--json")
        assert code == 1 and payload(out)["witness"] is None
        code, out, _ = invoke(capsys, *base, "--sigma", "2", "--json")
        assert code == 0 and payload(out)["witness"] == [2]

    def test_garbage_ids(self, capsys):
        code, _, err = invoke(
            capsys, "match", "1 x", "1 2", "--p", "2", "--alphabet", "ints"
        )
        assert code == 2 and err.startswith("error:")


class TestOracleCommands:
    def test_match(self, capsys):
        code, out, _ = invoke(capsys, "oracle", "match", "ab", "acb", "--p", "3", "--json")
        assert code == 0
        assert out == '{"alphabet":{"a":1,"b":2,"c":3},"first_hit":1,"found":true}\n'

    def test_pmas(self, capsys):
        code, out, _ = invoke(capsys, "oracle", "pmas", "ba", "ab", "--p", "2", "--json")
        assert code == 0 and payload(out)["pmas"] is True

    def test_minrep_agrees_with_main_command(self, capsys):
        _, fast, _ = invoke(capsys, "minrep", "baaba", "--json")
        _, slow, _ = invoke(capsys, "oracle", "minrep", "baaba", "--json")
        assert payload(fast)["root"] == payload(slow)["root"] == "ab"
        assert payload(fast)["offset"] == payload(slow)["offset"] == 3


def write_source(tmp_path, name: str, obj) -> str:
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


class TestReduce:
    def test_ov_manifest(self, capsys, tmp_path):
        src = write_source(
            tmp_path, "ov.json", {"a": [[1, 0], [0, 1]], "b": [[1, 1], [0, 0]]}
        )
        code, out, _ = invoke(capsys, "reduce", "ov-match", src)
        assert code == 0
        man = payload(out)
        assert man["kind"] == "OV_TO_MATCH"
        assert man["payload"]["p"] == 56
        assert man["payload"]["u"][:6] == [4, 2, 3, 2, 3, 5]
        assert len(man["payload"]["w"]) == 112
        assert man["payload"]["sigma"] == 5
        assert man["source_digest"] == (
            "ef7e2096afde6dc0e9884c26b7777c0f5c2ec7aa42317e070a9432b393ac63b1"
        )

    def test_out_dir_files_round_trip(self, capsys, tmp_path):
        src = write_source(
            tmp_path, "ov.json", {"a": [[1, 0], [0, 1]], "b": [[1, 1], [0, 0]]}
        )
        out_dir = tmp_path / "inst"
        code, out, _ = invoke(
            capsys, "reduce", "ov-match", src, "--out-dir", str(out_dir)
        )
        assert code == 0
        man = payload(out)
        assert payload((out_dir / "manifest.json").read_text()) == man
        code, out, _ = invoke(
            capsys,
            "match", str(out_dir / "u.txt"), str(out_dir / "w.txt"),
            "--p", "56", "--alphabet", "ints", "--json",
        )
        assert code == 0 and payload(out)["found"] is True

    def test_sat_manifest(self, capsys, tmp_path):
        src = write_source(
            tmp_path, "sat.json", {"clauses": [[1, -2], [2]], "n_vars": 2}
        )
        code, out, _ = invoke(capsys, "reduce", "sat-pwords", src)
        assert code == 0
        man = payload(out)
        assert man["kind"] == "SAT3_TO_PW"
        assert man["payload"] == {"length": 2, "words": ["01", "*0"]}

    def test_pwords_kinds_share_the_source_digest(self, capsys, tmp_path):
        src = write_source(tmp_path, "pw.json", {"words": ["0*", "11"]})
        digests = {}
        for kind in ("pwords-nonuniv", "pwords-nonequiv", "pwords-psas"):
            code, out, _ = invoke(capsys, "reduce", kind, src)
            assert code == 0
            digests[kind] = payload(out)["source_digest"]
        assert len(set(digests.values())) == 1
        assert digests["pwords-nonuniv"] == (
            "c5bbc9311295e7677f054b1594365b13bb50b131769e4b0b1ef2c6bab7377eaf"
        )

    def test_match_pmas_manifest(self, capsys, tmp_path):
        src = write_source(tmp_path, "mp.json", {"u": "ab", "w": "ba", "p0": 2})
        code, out, _ = invoke(capsys, "reduce", "match-pmas", src)
        assert code == 0
        man = payload(out)
        assert man["payload"]["v"] == [1, 2]
        assert man["payload"]["w"] == [2, 3, 1, 3] + [3] * 12 + [2, 1]
        assert man["payload"]["p"] == 4
        # int-list words denote the same source, bit for bit
        src2 = write_source(
            tmp_path, "mp2.json", {"u": [1, 2], "w": [2, 1], "p0": 2}
        )
        _, out2, _ = invoke(capsys, "reduce", "match-pmas", src2)
        assert out2 == out

    def test_match_pmas_stream_manifest(self, capsys, tmp_path):
        src = write_source(tmp_path, "mps.json", {"u": "ab", "w": "ba", "p": 2})
        code, out, _ = invoke(capsys, "reduce", "match-pmas-stream", src)
        assert code == 0
        man = payload(out)
        assert man["payload"]["w"] == [2, 1, 3, 3, 3, 2, 3, 3, 3, 1]
        assert man["payload"]["p"] == 2

    def test_runs_are_byte_identical(self, capsys, tmp_path):
        src = write_source(tmp_path, "pw.json", {"words": ["0*", "11"]})
        _, first, _ = invoke(capsys, "reduce", "pwords-nonuniv", src)
        _, second, _ = invoke(capsys, "reduce", "pwords-nonuniv", src)
        assert first == second

    def test_missing_field(self, capsys, tmp_path):
        src = write_source(tmp_path, "pw.json", {"words": ["0*", "11"]})
        code, _, err = invoke(capsys, "reduce", "ov-match", src)
        assert code == 2
        assert err == "error: reduction source misses the 'a' field\n"

    def test_invalid_json(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{nope")
        code, _, err = invoke(capsys, "reduce", "ov-match", str(bad))
        assert code == 2 and err.startswith("error: reduction source is not valid JSON")


class TestBench:
    def test_csv_rows(self, capsys):
        code, out, _ = invoke(
            capsys, "bench", "match", "--n", "200", "--m", "4", "--repeat", "2"
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,m,p,wall_ns"
        assert len(lines) == 3
        for row in lines[1:]:
            n, m, p, wall = row.split(",")
            assert (int(n), int(m), int(p)) == (200, 4, 100)
            assert int(wall) > 0


class TestParser:
    def test_unknown_command(self, capsys):
        assert invoke(capsys, "frobnicate")[0] == 2

    def test_parser_builds_once(self):
        parser = build_parser()
        ns = parser.parse_args(["match", "ab", "acb", "--p", "3"])
        assert ns.p == 3
