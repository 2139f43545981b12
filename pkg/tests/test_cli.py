import json

import pytest

from logfan.cli import main, parse_bundle_expr, parse_order
from logfan.cohomology import SplitBundle, Summand
from logfan.fans import fan_from_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestPlumbing:
    def test_version(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["--version"])
        assert exc.value.code == 0
        assert "logfan 0.1.0" in capsys.readouterr().out

    def test_unknown_flag_rejected(self):
        with pytest.raises(SystemExit) as exc:
            main(["hkr", "--pair", "P1:pt", "--frobnicate"])
        assert exc.value.code == 2

    def test_unknown_subcommand_rejected(self):
        with pytest.raises(SystemExit) as exc:
            main(["transmogrify"])
        assert exc.value.code == 2


class TestFan:
    def test_dump_and_check(self, capsys, monkeypatch, tmp_path):
        code, out, _ = run(capsys, "fan", "dump", "--pairs",
                           "A1:0,A1:0,A1:0")
        assert code == 0
        data = json.loads(out)
        assert len(data["rays"]) == 7 and len(data["cones"]) == 6
        path = tmp_path / "fan.json"
        path.write_text(out)
        code, out, _ = run(capsys, "fan", "check", str(path))
        assert code == 0
        assert "smooth=True" in out and "face-closed=True" in out

    def test_check_flags_non_smooth(self, capsys, tmp_path):
        bad = {"rank": 2, "rays": [[1, 0], [1, 2]], "cones": [[0, 1]],
               "labels": {}}
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(bad))
        code, out, _ = run(capsys, "fan", "check", str(path))
        assert code == 1
        assert "smooth=False" in out


class TestLogProduct:
    def test_table(self, capsys):
        code, out, _ = run(capsys, "logproduct", "--pairs", "P1:pt,P2:H")
        assert code == 0
        assert "1 exceptional" in out
        assert "stratum {1,2}" in out

    def test_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "logproduct", "--pairs", "P1:pt,P1:pt",
                           "--json")
        assert code == 0
        data = json.loads(out)
        fan = fan_from_json(data)
        assert len(fan.rays()) == 5 and len(fan.cones) == 5
        assert data["stratum_ray"] == {"1,2": [1, 1]}
        assert data["strict_transforms"] == {"1": [1, 0], "2": [0, 1]}

    def test_custom_order(self, capsys):
        base = run(capsys, "logproduct", "--pairs", "P1:pt,P1:pt,P1:pt",
                   "--json")[1]
        alt = run(capsys, "logproduct", "--pairs", "P1:pt,P1:pt,P1:pt",
                  "--order", "1,2;1,2,3;1,3;2,3", "--json")[1]
        assert json.loads(base)["cones"] == json.loads(alt)["cones"]

    def test_invalid_order_is_computation_error(self, capsys):
        code, _, err = run(capsys, "logproduct", "--pairs",
                           "P1:pt,P1:pt,P1:pt", "--order", "1,2;1,3;1,2,3;2,3")
        assert code == 1
        assert "NotABuildingSetOrder" in err


class TestCohomology:
    def test_table_vanishing(self, capsys):
        code, out, _ = run(capsys, "cohomology", "--base", "P2",
                           "--bundle", "O(-1)^2")
        assert code == 0 and out.strip() == "(zero)"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "cohomology", "--base", "P2",
                           "--bundle", "O(1)", "--json")
        assert code == 0 and json.loads(out) == {"dims": {"0": 3}}

    def test_shifted_sum(self, capsys):
        code, out, _ = run(capsys, "cohomology", "--base", "P1",
                           "--bundle", "O+O(-1)[1]", "--json")
        assert code == 0 and json.loads(out) == {"dims": {"0": 1}}

    def test_ambiguous_curve_degree_exits_one(self, capsys):
        code, _, err = run(capsys, "cohomology", "--base", "C2",
                           "--bundle", "O(1)")
        assert code == 1 and "AmbiguousDegree" in err

    def test_bundle_grammar(self):
        assert parse_bundle_expr("O(-1)^2") == SplitBundle.sum_of([-1, -1])
        assert parse_bundle_expr("O+O(-1)[1]") == SplitBundle(
            (Summand(0, 0), Summand(-1, 1)))
        with pytest.raises(ValueError):
            parse_bundle_expr("Q(3)")


class TestHkr:
    def test_p1_json_exact(self, capsys):
        code, out, _ = run(capsys, "hkr", "--pair", "P1:pt", "--json")
        assert code == 0 and out.strip() == '{"dims": {"0": 1}}'

    def test_curve_table(self, capsys):
        code, out, _ = run(capsys, "hkr", "--pair", "C2:pt")
        assert code == 0
        assert out.splitlines() == ["-1: 2", "0: 1", "1: 2"]

    def test_cohomology_variant(self, capsys):
        code, out, _ = run(capsys, "hkr", "--pair", "P1:pt",
                           "--cohomology", "--json")
        assert code == 0 and json.loads(out) == {"dims": {"0": 1, "1": 2}}


class TestChernEuler:
    def test_chern_example(self, capsys):
        code, out, _ = run(capsys, "chern", "--pair", "P1:pt", "--kernel",
                           "diag(O,0)+diag(O(5),1)")
        assert code == 0 and out.strip() == "0"

    def test_chern_expansion(self, capsys):
        code, out, _ = run(capsys, "chern", "--pair", "P1:pt", "--target",
                           "P2:H", "--kernel", "graph(deg=1)+graph(deg=1)")
        assert code == 0 and out.strip() == "2"

    def test_euler_graph_example(self, capsys):
        code, out, _ = run(capsys, "euler", "--source", "P1:pt",
                           "--target", "P2:H", "--kernel", "graph(deg=1)",
                           "--against", "graph(deg=1)")
        assert code == 0 and out.strip() == "0"

    def test_euler_trace_and_json_compose(self, capsys):
        code, out, _ = run(capsys, "euler", "--source", "P1:pt",
                           "--target", "P2:H", "--kernel", "graph(deg=1)",
                           "--against", "graph(deg=1)", "--trace", "--json")
        assert code == 0
        lines = out.splitlines()
        assert any(line.startswith("adjoint:") for line in lines)
        assert "excess: O(1)" in lines
        assert "sym: O + O(-1)[1]" in lines
        assert json.loads(lines[-1]) == {"value": 0}

    def test_bad_kernel_grammar_exits_two(self, capsys):
        code, _, err = run(capsys, "chern", "--pair", "P1:pt", "--kernel",
                           "diag(O)")
        assert code == 2 and "usage error" in err

    def test_unsupported_composition_exits_one(self, capsys):
        code, _, err = run(capsys, "euler", "--source", "P1:pt",
                           "--target", "P2:H", "--kernel", "graph(deg=2)",
                           "--against", "graph(deg=2)")
        assert code == 1 and "FormalityUnavailable" in err


class TestVerify:
    def test_all_cases_pass(self, capsys):
        code, out, _ = run(capsys, "verify")
        assert code == 0
        assert "[FAIL]" not in out
        assert "fan-octant-rays" in out

    def test_sign_flip_negative_control(self, capsys):
        code, out, _ = run(capsys, "verify", "--sign-flip")
        assert code == 1
        assert "[FAIL] hh-shift-sign" in out

    def test_json_shape(self, capsys):
        code, out, _ = run(capsys, "verify", "--json")
        data = json.loads(out)
        assert data["passed"] is True
        assert all(set(c) == {"case_id", "claim", "expected", "actual",
                              "pass"} for c in data["cases"])


class TestDeterminism:
    @pytest.mark.parametrize("argv", [
        ("logproduct", "--pairs", "P1:pt,P2:H", "--json"),
        ("hkr", "--pair", "P3:H", "--json"),
        ("fan", "dump", "--pairs", "A1:0,A1:0"),
    ])
    def test_identical_output(self, capsys, argv):
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first == second


def test_parse_order():
    assert parse_order("1,2;1,2,3", 3) == [frozenset({0, 1}),
                                           frozenset({0, 1, 2})]
