"""Command line front end: golden JSON fields, exit codes, error paths."""

import json

import pytest

from qfiber import groebner as groebner_mod
from qfiber.cli import main

QG2 = """\
ring R = Fp(32003)[x1, x2, x3, a1, a2], grevlex;
ideal X = x1 - a1^2, x2 - a1*a2, x3 - a2^2;
ideal Y = x1, x2, x3;
"""

TWO_POINTS = """\
ring R = Fp(32003)[x, y], grevlex;
ideal X = y, x^2 - 1;
ideal Y = y;
"""

TRANSVERSAL = """\
ring R = Fp(32003)[x, y], grevlex;
ideal X = x;
ideal Y = y;
"""


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), err


class TestTable:
    def test_rows_match_published_values(self, capsys):
        code, doc, _ = run_json(capsys, "table", "--n-min", "2",
                                "--n-max", "3")
        assert code == 0
        assert doc["all_pass"] is True
        rows = doc["rows"]
        assert [(r["n"], r["deg_Z"], r["q"], r["mu"]) for r in rows] == \
            [(2, 3, "3/1", 3), (3, 6, "6/1", 3)]
        assert all(r["pass"] for r in rows)
        assert all("seconds" in r and "seed" in r for r in rows)

    def test_text_layout(self, capsys):
        code, out, _ = run(capsys, "table", "--n-min", "2", "--n-max", "2",
                           "--output", "text")
        assert code == 0
        assert "deg Z" in out
        assert "ok" in out

    def test_extended_gate(self, capsys):
        code, out, err = run(capsys, "table", "--n-min", "2", "--n-max", "7")
        assert code == 1
        assert "--extended" in err

    def test_range_check(self, capsys):
        code, _, err = run(capsys, "table", "--n-min", "1", "--n-max", "3")
        assert code == 1

    def test_abort_marks_rows_and_exits_3(self, capsys):
        before = groebner_mod.DEFAULT_MAX_PAIRS
        code, doc, _ = run_json(capsys, "table", "--n-min", "4",
                                "--n-max", "4", "--max-pairs", "5")
        assert code == 3
        assert doc["rows"][0]["aborted"] is True
        # the budget override must not leak into the process
        assert groebner_mod.DEFAULT_MAX_PAIRS == before

    def test_parallel_rows(self, capsys):
        code, doc, _ = run_json(capsys, "table", "--n-min", "2",
                                "--n-max", "3", "--jobs", "2")
        assert code == 0
        assert doc["all_pass"] is True


class TestCompute:
    def test_quadric_graph_session(self, capsys, tmp_path):
        f = tmp_path / "qg2.txt"
        f.write_text(QG2)
        code, doc, _ = run_json(capsys, "compute", "--input", str(f))
        assert code == 0
        assert doc["q"] == "3/1"
        assert doc["mu_Q"] == 3
        assert doc["deg_Z"] == 3
        assert (doc["dim_X"], doc["codim_Y"]) == (2, 3)
        assert doc["licci"][0]["verdict"] == "Licci"
        assert doc["checks"]["qlength"]["status"] == "pass"
        assert doc["checks"]["main1"]["status"] == "report-only"

    def test_two_points_component_isolation(self, capsys, tmp_path):
        f = tmp_path / "two.txt"
        f.write_text(TWO_POINTS)
        code, doc, _ = run_json(capsys, "compute", "--input", str(f))
        assert code == 0
        assert doc["deg_Z"] == 2
        assert doc["q"] == "2/1"
        assert doc["components"] == [
            {"length": 1, "dim_Q": 1, "mu": 1},
            {"length": 1, "dim_Q": 1, "mu": 1},
        ]
        points = sorted(tuple(e["point"]) for e in doc["licci"])
        assert points == [(1, 0), (32002, 0)]
        assert all(e["verdict"] == "Licci" and e["rule"] == "CI"
                   for e in doc["licci"])
        qc = doc["checks"]["qlength"]
        assert qc["decomposition_bound"] == "2/1"
        assert qc["decomposition_holds"] is True

    def test_transversal_reports_null_q(self, capsys, tmp_path):
        f = tmp_path / "tr.txt"
        f.write_text(TRANSVERSAL)
        code, doc, _ = run_json(capsys, "compute", "--input", str(f))
        assert code == 0
        assert doc["q"] is None
        assert doc["dim_Q"] == 0
        assert doc["checks"]["qlength"]["status"] == "skipped"
        assert "note" in doc

    def test_not_finite(self, capsys, tmp_path):
        f = tmp_path / "big.txt"
        f.write_text("ring R = Fp(32003)[x, y, z], grevlex;\n"
                     "ideal X = x;\nideal Y = y;\n")
        code, _, err = run(capsys, "compute", "--input", str(f))
        assert code == 1
        assert "intersection not finite" in err

    def test_empty_intersection(self, capsys, tmp_path):
        f = tmp_path / "empty.txt"
        f.write_text("ring R = Fp(32003)[x, y], grevlex;\n"
                     "ideal X = x;\nideal Y = x - 1, y;\n")
        code, _, err = run(capsys, "compute", "--input", str(f))
        assert code == 1
        assert "empty" in err

    def test_missing_ideal(self, capsys, tmp_path):
        f = tmp_path / "noy.txt"
        f.write_text("ring R = Fp(32003)[x, y], grevlex;\nideal X = x;\n")
        code, _, err = run(capsys, "compute", "--input", str(f))
        assert code == 1
        assert "X and Y" in err

    def test_parse_error(self, capsys, tmp_path):
        f = tmp_path / "bad.txt"
        f.write_text("ring R = Fp(32003)[x, y], grevlex;\nideal X = x +;\n")
        code, _, err = run(capsys, "compute", "--input", str(f))
        assert code == 1
        assert "line 2" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "compute", "--input", "/no/such/file")
        assert code == 1


class TestBounds:
    def test_secant(self, capsys):
        code, doc, _ = run_json(capsys, "bounds", "secant",
                                "--n", "2", "--l", "3")
        assert code == 0
        assert doc["bound_value"] == "4/1"
        assert doc["satisfied"] is True

    def test_corank(self, capsys):
        code, doc, _ = run_json(capsys, "bounds", "corank", "--d", "4")
        assert code == 0
        assert doc["value"] == 10

    def test_mather_violated_is_informational(self, capsys):
        code, doc, _ = run_json(capsys, "bounds", "mather", "--n", "1",
                                "--c", "1", "--coranks", "1")
        assert code == 0
        assert doc["satisfied"] is False

    def test_plane(self, capsys):
        code, doc, _ = run_json(capsys, "bounds", "plane", "--n", "1",
                                "--r", "3", "--l", "3", "--t", "2")
        assert code == 0
        assert doc["bound_value"] == "5/1"

    def test_cnr(self, capsys):
        code, doc, _ = run_json(capsys, "bounds", "cnr", "--n", "2",
                                "--r", "5")
        assert code == 0
        assert doc["value"] == 4

    def test_bad_args_exit_1(self, capsys):
        code, _, err = run(capsys, "bounds", "plane", "--n", "1", "--r", "3",
                           "--l", "3", "--t", "1")
        assert code == 1


class TestScenario:
    def test_fatpoint(self, capsys):
        code, doc, _ = run_json(capsys, "scenario", "fatpoint")
        assert code == 0
        assert doc["deg_Z"] == 4
        assert doc["hilb_tangent_dim"] == 18
        assert doc["dim_Q"] == 6
        assert doc["seed"] == 0
        assert doc["session"].startswith("ring R = Fp(32003)")

    def test_quadric_graph(self, capsys):
        code, doc, _ = run_json(capsys, "scenario", "quadric-graph",
                                "--n", "2", "--seed", "1")
        assert code == 0
        assert doc["q"] == "3/1"
        assert doc["mu_Q"] == 3
        assert doc["seed"] == 1

    def test_quadric_graph_needs_n(self, capsys):
        code, _, err = run(capsys, "scenario", "quadric-graph")
        assert code == 1

    def test_reye(self, capsys):
        code, doc, _ = run_json(capsys, "scenario", "reye", "--seed", "3")
        assert code == 0
        assert doc["line_degree"] == 3
        assert doc["det_degree"] == 4
        assert doc["point_on_line"] is True
        assert doc["passed"] is True

    def test_secant_demo(self, capsys):
        code, doc, _ = run_json(capsys, "scenario", "secant-demo",
                                "--n", "1", "--l", "2")
        assert code == 0
        assert doc["cone_nonempty"] is True
        assert doc["passed"] is True
        assert doc["r"] == 3

    def test_secant_demo_rejects_parameters(self, capsys):
        code, _, err = run(capsys, "scenario", "secant-demo",
                           "--n", "1", "--l", "3")
        assert code == 1


class TestPlumbing:
    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0

    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == 1

    def test_no_command(self, capsys):
        assert main([]) == 1
