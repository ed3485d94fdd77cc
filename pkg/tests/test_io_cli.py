"""File formats and the command line surface."""

import json

import pytest
from hypothesis import given, settings

from eopack.cli import main
from eopack.generators import (complete_graph, cycle_graph, path_graph,
                               petersen_graph, star_graph)
from eopack.graph import Graph
from eopack.io import (ParseError, parse_graph, parse_pairs, write_graph,
                       write_name_map, write_pairs)

from conftest import graph_strategy


class TestGraphFiles:
    def test_round_trip(self, tmp_path):
        p = tmp_path / "g.gr"
        for g in (petersen_graph(), path_graph(2), Graph.from_edges(3, []),
                  complete_graph(5)):
            write_graph(g, p)
            assert parse_graph(p) == g

    @given(graph_strategy(max_n=9))
    @settings(max_examples=40, deadline=None)
    def test_round_trip_property(self, tmp_path_factory, g):
        p = tmp_path_factory.mktemp("io") / "g.gr"
        write_graph(g, p, comment="generated")
        assert parse_graph(p) == g

    def test_comments_and_blanks_skipped(self, tmp_path):
        p = tmp_path / "g.gr"
        p.write_text("c hello\n\np edge 3 2\nc mid\ne 1 2\n\ne 2 3\n")
        g = parse_graph(p)
        assert g.n == 3 and g.m == 2

    def _expect_error(self, tmp_path, text, fragment):
        p = tmp_path / "bad.gr"
        p.write_text(text)
        with pytest.raises(ParseError) as exc:
            parse_graph(p)
        assert fragment in str(exc.value)

    def test_error_cases(self, tmp_path):
        self._expect_error(tmp_path, "e 1 2\n", "before problem line")
        self._expect_error(tmp_path, "p edge 2 1\np edge 2 1\ne 1 2\n",
                           "second problem line")
        self._expect_error(tmp_path, "p edge 2 1\ne 1 3\n", "out of range")
        self._expect_error(tmp_path, "p edge 2 1\ne 1 1\n", "self-loop")
        self._expect_error(tmp_path, "p edge 3 2\ne 1 2\ne 2 1\n", "duplicate")
        self._expect_error(tmp_path, "p edge 3 2\ne 1 2\n", "promised 2")
        self._expect_error(tmp_path, "p edge 3 1\nq 1 2\n", "unrecognized")
        self._expect_error(tmp_path, "p edge x 1\n", "malformed problem")
        self._expect_error(tmp_path, "", "missing problem line")

    def test_error_reports_line_number(self, tmp_path):
        p = tmp_path / "bad.gr"
        p.write_text("p edge 3 2\ne 1 2\ne 9 1\n")
        with pytest.raises(ParseError, match="line 3"):
            parse_graph(p)


class TestPairFiles:
    def test_round_trip(self, tmp_path):
        g = cycle_graph(6)
        p = tmp_path / "pairs.txt"
        write_pairs(g, [0, 2, 4], p)
        assert parse_pairs(p, g) == [0, 2, 4]

    def test_rejects_non_edge(self, tmp_path):
        g = path_graph(4)
        p = tmp_path / "pairs.txt"
        p.write_text("1 3\n")
        with pytest.raises(ParseError, match="not an edge"):
            parse_pairs(p, g)

    def test_name_map(self, tmp_path):
        p = tmp_path / "g.names"
        write_name_map({"hub": 0, "rim_1": 1}, p)
        text = p.read_text()
        assert "hub 1" in text and "rim_1 2" in text


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, json.loads(captured.out), captured.err


class TestCli:
    @pytest.fixture()
    def c10(self, tmp_path):
        p = tmp_path / "c10.gr"
        write_graph(cycle_graph(10), p)
        return str(p)

    @pytest.fixture()
    def star(self, tmp_path):
        p = tmp_path / "star.gr"
        write_graph(star_graph(5), p)
        return str(p)

    def test_solve_exact(self, capsys, c10):
        code, rep, err = run_cli(capsys, "solve", c10, "--method", "exact")
        assert code == 0
        assert rep["schema"] == "eopack/1"
        assert rep["value"] == 4
        assert rep["witness_valid"] and len(rep["witness"]) == 4
        assert rep["ok"]
        assert "eop number = 4" in err

    def test_solve_auto_picks_tree(self, capsys, star):
        code, rep, _ = run_cli(capsys, "solve", star)
        assert code == 0
        assert rep["method"] == "tree"
        assert rep["value"] == 5

    def test_solve_tree_rejects_cycle(self, capsys, c10):
        code, rep, _ = run_cli(capsys, "solve", c10, "--method", "tree")
        assert code == 2
        assert rep["error"]["type"] == "NotATreeError"

    def test_verify(self, capsys, tmp_path, c10):
        s = tmp_path / "set.txt"
        s.write_text("1 2\n4 5\n")
        code, rep, _ = run_cli(capsys, "verify", c10, "--set", str(s))
        assert code == 0 and rep["valid"]
        s.write_text("1 2\n3 4\n")
        code, rep, _ = run_cli(capsys, "verify", c10, "--set", str(s))
        assert code == 1 and not rep["valid"]

    def test_alpha(self, capsys, c10):
        code, rep, _ = run_cli(capsys, "alpha", c10)
        assert code == 0 and rep["value"] == 5

    def test_gadget_with_output(self, capsys, tmp_path):
        src = tmp_path / "p3.gr"
        write_graph(path_graph(3), src)
        out = tmp_path / "gadget.gr"
        code, rep, _ = run_cli(capsys, "gadget", "universal", str(src),
                               "--out", str(out), "--verify")
        assert code == 0
        assert rep["verification"]["passed"]
        built = parse_graph(out)
        assert built.n == rep["gadget"]["n"]
        names = (tmp_path / "gadget.gr.names").read_text().splitlines()
        assert len(names) == built.n

    def test_gadget_eulerian_counts(self, capsys, tmp_path):
        src = tmp_path / "p3.gr"
        write_graph(path_graph(3), src)
        code, rep, _ = run_cli(capsys, "gadget", "eulerian", str(src))
        assert code == 0
        assert rep["gadget"] == {"n": 54, "m": 63}

    def test_bounds(self, capsys, star):
        code, rep, _ = run_cli(capsys, "bounds", star)
        assert code == 0
        assert rep["is_tight"] and rep["is_star_forest"]
        assert rep["characterization_consistent"]

    def test_removal(self, capsys, tmp_path):
        p = tmp_path / "p3.gr"
        write_graph(path_graph(3), p)
        code, rep, _ = run_cli(capsys, "removal", str(p))
        assert code == 0
        assert rep["value"] == 2
        assert all(e["within_bounds"] for e in rep["entries"])

    def test_realize(self, capsys, tmp_path):
        out = tmp_path / "r.gr"
        code, rep, _ = run_cli(capsys, "realize", "--a", "6", "--b", "4",
                               "--out", str(out))
        assert code == 0
        assert rep["achieved"] == {"before": 4, "after": 6}
        assert out.exists()

    def test_realize_out_of_range(self, capsys):
        code, rep, _ = run_cli(capsys, "realize", "--a", "9", "--b", "4")
        assert code == 2 and rep["error"]["type"] == "ValueError"

    def test_family_f(self, capsys, tmp_path):
        out = tmp_path / "f.gr"
        code, rep, _ = run_cli(capsys, "family-f", "--k", "3",
                               "--sizes", "1,6,4", "--out", str(out))
        assert code == 0
        assert rep["recognized"] and rep["is_tight"]
        g = parse_graph(out)
        assert g.min_degree() == 3

    def test_family_f_infeasible(self, capsys):
        code, rep, _ = run_cli(capsys, "family-f", "--k", "3",
                               "--sizes", "1,3,3")
        assert code == 2
        assert rep["error"]["type"] == "InfeasiblePatternError"

    def test_charsmall(self, capsys, tmp_path):
        p = tmp_path / "k4.gr"
        write_graph(complete_graph(4), p)
        code, rep, _ = run_cli(capsys, "charsmall", str(p))
        assert code == 0
        assert rep["value"] == 1 and rep["value_1_consistent"]

    def test_bench_tree(self, capsys):
        code, rep, _ = run_cli(capsys, "bench-tree", "--n", "50,200",
                               "--repeat", "1", "--compare")
        assert code == 0
        assert [row["n"] for row in rep["results"]] == [50, 200]
        assert all(row["agree"] for row in rep["results"])

    def test_missing_file(self, capsys):
        code, rep, _ = run_cli(capsys, "solve", "/nonexistent/file.gr")
        assert code == 2
        assert rep["error"]["type"] == "FileNotFoundError"

    def test_parse_error_is_json(self, capsys, tmp_path):
        p = tmp_path / "bad.gr"
        p.write_text("p edge 2 1\ne 1 7\n")
        code, rep, _ = run_cli(capsys, "solve", str(p))
        assert code == 2
        assert rep["error"]["type"] == "ParseError"
        assert "line 2" in rep["error"]["message"]
