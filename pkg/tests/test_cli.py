import csv
import io
import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from zerosum.cli import main
from zerosum.hypergraph import Hypergraph, Weighting, complete_equipartite, complete_hypergraph, unbalancedness
from zerosum.serialize import (dump_hypergraph, dump_weighting, fmt_rational, load_hypergraph, load_weighting,
                               parse_rational)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    return json.loads(out)


class TestSerialization:
    def test_rational_format(self):
        assert fmt_rational(4) == "4/1"
        assert fmt_rational(F(-6, 4)) == "-3/2"
        assert fmt_rational(F(0)) == "0/1"
        assert parse_rational("-6/4") == F(-3, 2)
        with pytest.raises(ValueError):
            parse_rational("1/0")

    @pytest.mark.parametrize("H", [complete_hypergraph(4, 2), complete_equipartite(3, 2),
                                   Hypergraph(5, 3, ((4, 0, 2), (1, 2, 3)))])
    def test_hypergraph_round_trip(self, H):
        text = dump_hypergraph(H)
        assert text.endswith("\n")
        assert load_hypergraph(text) == H
        assert dump_hypergraph(load_hypergraph(text)) == text

    def test_weighting_round_trip(self):
        f = Weighting((1, F(-1, 2), 0, F(2, 3)))
        text = dump_weighting(f)
        assert json.loads(text) == {"values": ["1/1", "-1/2", "0/1", "2/3"]}
        assert dump_weighting(load_weighting(text)) == text

    def test_non_canonical_input_canonicalised(self):
        assert dump_weighting(load_weighting('{"values": ["2/4", "-1", "0"]}')) == \
            '{"values": ["1/2", "-1/1", "0/1"]}\n'
        with pytest.raises(ValueError):
            load_weighting('{"values": ["-3"]}')

    def test_format_layout(self):
        assert dump_hypergraph(complete_equipartite(2, 1)) == \
            '{"n": 2, "r": 2, "edges": [[0, 1]], "classes": [[0], [1]]}\n'


class TestBound:
    def test_complete(self, capsys):
        assert run_json(capsys, "bound", "complete", "--n", "6", "--r", "3")["value"] == "4/1"

    def test_complete_partite(self, capsys):
        assert run_json(capsys, "bound", "complete-partite", "--r", "3", "--n", "2")["value"] == "2/1"

    def test_balogh_smyth(self, capsys):
        out = run_json(capsys, "bound", "balogh-smyth", "--r", "3", "--n", "2", "--D", "1", "--alpha", "0")
        assert out["value"] == pytest.approx(2.3094010768, rel=1e-10)

    def test_equipartite(self, capsys):
        out = run_json(capsys, "bound", "equipartite", "--r", "3", "--n", "2", "--e", "6")
        assert out["value"] == "5/3" and out["parameters"]["beta"] == "2/3"

    def test_invalid(self, capsys):
        code, _, err = run(capsys, "bound", "complete", "--n", "2", "--r", "3")
        assert code == 1 and "1 <= r <= n" in err

    def test_usage_error_is_invalid_input(self, capsys):
        code, _, _ = run(capsys, "bound", "nonsense", "--n", "2", "--r", "3")
        assert code == 1


class TestConstruct:
    def test_majority(self, capsys):
        out = run_json(capsys, "construct", "majority", "--n", "6", "--r", "3")
        assert out["X"] == "4/1" and out["total_sum"] == "0/1" and out["attained"] is True

    def test_threshold(self, capsys):
        out = run_json(capsys, "construct", "equipartite-threshold", "--r", "2", "--n", "4", "--k", "2")
        assert out["X"] == "2/1" and out["attained"] is True

    def test_odd_majority_warns(self, capsys):
        out = run_json(capsys, "construct", "majority", "--n", "5", "--r", "2")
        assert out["total_sum"] != "0/1"
        assert any("zero" in w for w in out["warnings"])

    def test_regime(self, capsys):
        code, _, _ = run(capsys, "construct", "equipartite-majority", "--r", "2", "--n", "2")
        assert code == 1

    def test_emit(self, capsys, tmp_path):
        stem = tmp_path / "sub" / "maj"
        run_json(capsys, "construct", "majority", "--n", "4", "--r", "2", "--emit", str(stem))
        H = load_hypergraph((tmp_path / "sub" / "maj.hypergraph.json").read_text())
        f = load_weighting((tmp_path / "sub" / "maj.weighting.json").read_text())
        assert H == complete_hypergraph(4, 2) and len(f) == 6


class TestSolve:
    def test_lp(self, capsys):
        assert run_json(capsys, "solve", "lp", "--complete", "4", "2")["value"] == "1/1"

    def test_enumerate(self, capsys):
        out = run_json(capsys, "solve", "enumerate", "--complete", "4", "2")
        assert out["value"] == "1/1" and out["explored"] == 20

    def test_reduced(self, capsys):
        assert run_json(capsys, "solve", "reduced", "--complete", "6", "3")["value"] == "4/1"

    def test_reduced_needs_complete(self, capsys):
        code, _, _ = run(capsys, "solve", "reduced", "--equipartite", "2", "2")
        assert code == 1

    def test_file_odd_edges(self, capsys, tmp_path):
        p = tmp_path / "odd_edges.json"
        p.write_text(dump_hypergraph(complete_hypergraph(3, 2)))
        code, _, err = run(capsys, "solve", "enumerate", "--file", str(p))
        assert code == 2 and "zero-sum" in err

    def test_budget(self, capsys):
        code, _, _ = run(capsys, "solve", "enumerate", "--complete", "8", "2")
        assert code == 3

    def test_bad_file(self, capsys, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text('{"n": 3, "r": 2, "edges": [[0, 5]]}\n')
        assert run(capsys, "solve", "lp", "--file", str(p))[0] == 1

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "solve", "lp", "--file", str(tmp_path / "nope.json"))
        assert code == 1 and "cannot read" in err

    def test_emit_witness(self, capsys, tmp_path):
        p = tmp_path / "w.json"
        run_json(capsys, "solve", "lp", "--complete", "3", "2", "--emit", str(p))
        f = load_weighting(p.read_text())
        H = complete_hypergraph(3, 2)
        assert sum(f.values) == 0 and unbalancedness(H, f) == F(1, 2)


class TestVerify:
    def test_monotonicity(self, capsys):
        code, out, _ = run(capsys, "verify", "monotonicity", "--n-max", "30", "--r-max", "8")
        assert code == 0 and "FAIL" not in out

    def test_oracle_vs_bound(self, capsys, monkeypatch):
        monkeypatch.setenv("ZS_THREADS", "1")
        code, out, _ = run(capsys, "verify", "oracle-vs-bound", "--n-max", "5")
        assert code == 0 and out.strip().endswith("pass")

    def test_shifts(self, capsys):
        code, out, _ = run(capsys, "verify", "shifts", "--trials", "100", "--seed", "7")
        assert code == 0

    def test_seed_reproducible(self, capsys):
        a = run(capsys, "verify", "symmetry", "--trials", "20", "--seed", "3", "--format", "json")[1]
        b = run(capsys, "verify", "symmetry", "--trials", "20", "--seed", "3", "--format", "json")[1]
        assert a == b


class TestTable:
    def test_complete_grid(self, capsys, monkeypatch):
        monkeypatch.setenv("ZS_THREADS", "1")
        code, out, _ = run(capsys, "table", "complete", "--n-min", "3", "--n-max", "6", "--r-min", "2",
                           "--r-max", "3")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == 0 and len(rows) == 8
        by = {(int(r["n"]), int(r["r"])): r for r in rows}
        assert by[4, 2]["complete_bound"] == "1/1" and by[4, 2]["lp"] == "1/1" and by[4, 2]["equal"] == "True"
        assert by[5, 2]["complete_bound"] == "4/3" and by[5, 2]["lp"] == "4/3"
        assert list(rows[0]) == ["n", "r", "complete_bound", "literal_bound", "max_chi", "k_star", "lp", "equal"]

    def test_equipartite(self, capsys, monkeypatch):
        monkeypatch.setenv("ZS_THREADS", "1")
        code, out, _ = run(capsys, "table", "equipartite", "--n-min", "2", "--n-max", "3", "--r-min", "2",
                           "--r-max", "3", "--lp-n-max", "6")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 4
        bs = [r["balogh_smyth"] for r in rows]
        assert all(len(b.replace(".", "").lstrip("0")) <= 12 for b in bs)

    def test_parallel_order_stable(self, capsys, monkeypatch):
        monkeypatch.setenv("ZS_THREADS", "1")
        serial = run(capsys, "table", "complete", "--n-max", "5", "--lp-n-max", "5")[1]
        monkeypatch.setenv("ZS_THREADS", "3")
        parallel = run(capsys, "table", "complete", "--n-max", "5", "--lp-n-max", "5")[1]
        assert serial == parallel


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "zerosum", "bound", "complete", "--n", "4", "--r", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "value: 1/1" in proc.stdout
