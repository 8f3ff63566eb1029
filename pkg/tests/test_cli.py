import json
from fractions import Fraction
from pathlib import Path

import pytest
import yaml

import main as cli
from checks import suite
from core.errors import ConsistencyError
from core.ring import LaurentPoly1

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def small_config(tmp_path):
    path = tmp_path / "small.yaml"
    path.write_text(yaml.safe_dump({
        "knot_grid": "n=2..3,m=1..2",
        "link_grid": "n=1..3",
        "g_range": "g=2..10",
        "torus_limit": 8,
        "workers": 2,
    }), encoding="utf-8")
    return str(path)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_alex_agrees(capsys):
    code, out, _ = run(capsys, "alex", "knm:2,1")
    assert code == 0
    assert "t^4 - t^3 + t - 1 + t^-1 - t^-3 + t^-4" in out
    assert "AGREE" in out and "DISAGREE" not in out


def test_alex_of_a_connected_sum(capsys):
    code, data = run_json(capsys, "alex", "sum:torus:2,3+torus:2,3")
    assert code == 0
    assert data["closed_form"] == str(LaurentPoly1({1: 1, 0: -1, -1: 1}) ** 2)
    assert data["agree"] is True


def test_alex_disagreement_exits_2(capsys, monkeypatch):
    monkeypatch.setattr(cli, "alexander_of_closure", lambda word: LaurentPoly1.one())
    code, out, _ = run(capsys, "alex", "torus:2,3")
    assert code == cli.EXIT_DISAGREE
    assert "DISAGREE" in out


@pytest.mark.parametrize(
    "argv, golden",
    [
        (("dinv", "knm:3,1", "10"), "dinv_knm_3_1_at_10.json"),
        (("dinv", "k2b:5,5", "3", "3"), "dinv_k55_at_3_3.json"),
        (("slopes", "torus:3,5"), "slopes_torus_5_3.json"),
    ],
)
def test_json_matches_golden(capsys, argv, golden):
    code, data = run_json(capsys, *argv)
    assert code == 0
    assert data == json.loads((GOLDEN / golden).read_text(encoding="utf-8"))


def test_dinv_text_flags_the_maximum(capsys):
    code, out, _ = run(capsys, "dinv", "knm:3,1", "10")
    assert code == 0
    assert "-1/4  <- max" in out
    assert "all negative: True" in out


def test_dinv_unknot_is_a_lens_space(capsys):
    code, data = run_json(capsys, "dinv", "torus:unknot", "5")
    assert code == 0
    assert [e["d"] for e in data["entries"]] == ["1/1", "1/5", "-1/5", "-1/5", "1/5"]


def test_dinv_text_prints_integers_bare(capsys):
    code, out, _ = run(capsys, "dinv", "torus:unknot", "5")
    assert code == 0
    lines = [line.split() for line in out.splitlines()]
    assert ["0", "1", "<-", "max"] in lines
    assert "max d = 1; all negative: False" in out
    assert "1/1" not in out


def test_dinv_rejects_rational_slopes_with_a_hint(capsys):
    code, out, err = run(capsys, "dinv", "knm:3,1", "21/2")
    assert code == cli.EXIT_USAGE
    assert out == ""
    assert "check knm:3,1 --slope 21/2" in err


@pytest.mark.parametrize(
    "argv",
    [
        ("dinv", "knm:3,1", "0"),
        ("dinv", "knm:3,1", "10", "11"),
        ("dinv", "Ln:2", "4"),
        ("dinv", "sum:torus:2,3+torus:2,3", "5"),
        ("dinv", "figure8", "5"),
        ("check", "Ln:2", "--p1", "4"),
        ("check", "Ln:2", "--slope", "3"),
        ("check", "knm:3,1", "--p1", "4", "--p2", "5"),
        ("hfunc", "Ln:1", "--window", "-1"),
        ("alex", "Ln:2"),
    ],
)
def test_usage_errors_exit_1(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == cli.EXIT_USAGE
    assert err.startswith("error: ")


def test_argparse_errors_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["reproduce", "--scope", "nonsense"])
    assert exc.value.code == cli.EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        cli.main(["alex", "knm:3,1", "--config", "/nowhere/settings.yaml"])
    assert exc.value.code == cli.EXIT_USAGE


def test_check_knot_windows(capsys):
    code, data = run_json(capsys, "check", "knm:3,1")
    assert code == 0
    assert [c["region"] for c in data["nonfillable"]] == ["[9, 10]"]
    assert [c["region"] for c in data["stein"]] == ["(-inf, 9)", "[13, inf)"]


def test_check_torus_knot_uses_m(capsys):
    code, out, _ = run(capsys, "check", "torus:3,2")
    assert code == 0
    assert "[1, 4) - below Sfc = m = 4 [Sfc = m(T(p,q))] [Thm 1.1] [Thm 2.1]" in out
    assert "[4, inf) - Sfc = 4 [Sfc = m(T(p,q))]" in out
    code, data = run_json(capsys, "check", "torus:5,3")
    assert [c["region"] for c in data["nonfillable"]] == ["[7, 27/2)"]
    assert data["nonfillable"][0]["interval"]["hi"] == "27/2"


def test_check_single_slope(capsys):
    code, out, _ = run(capsys, "check", "knm:3,1", "--slope", "11")
    assert code == 0
    assert "slope 11 is unknown: (10, 13)" in out


def test_check_link_point(capsys):
    code, data = run_json(capsys, "check", "Ln:2", "--p1", "2", "--p2", "6")
    assert code == 0
    assert data["nonfillable"][0]["region"] == "(2, 6)"
    code, data = run_json(capsys, "check", "Ln:3", "--p1", "2", "--p2", "8")
    assert "criterion inapplicable: n+1 = 4 is a square" in data["notes"]


def test_check_link_sweep(capsys):
    code, data = run_json(capsys, "check", "k2b:5,5")
    assert code == 0
    (report,) = data["reports"]
    assert report["subject"] == "K(5,5) (3,3)"
    assert report["notes"][0] == "case: (3,3)"


def test_consistency_error_exits_2(capsys, monkeypatch):
    def broken(subject, slope=None):
        raise ConsistencyError("windows overlap")

    monkeypatch.setattr(cli, "knot_verdict", broken)
    code, _, err = run(capsys, "check", "knm:3,1")
    assert code == cli.EXIT_DISAGREE
    assert "internal error: windows overlap" in err


def test_slopes_for_a_twisted_knot(capsys):
    code, out, _ = run(capsys, "slopes", "knm:3,1")
    assert code == 0
    assert "Sfc = 10 (lower_bound) [Prop 2.2]" in out
    assert "q*" not in out


def test_hfunc_window(capsys):
    code, data = run_json(capsys, "hfunc", "k2b:5,5", "--window", "2")
    assert code == 0
    assert data["radius"] == 2
    assert len(data["entries"]) == 25
    assert sum(e["h"] for e in data["entries"]) == 5


def test_reproduce_single_scope_echoes_values(capsys, small_config):
    code, out, _ = run(capsys, "reproduce", "--scope", "k55-table", "--config", small_config)
    assert code == cli.EXIT_OK
    assert "PASS  k55-table" in out
    assert "max d = -1/3" in out
    assert "1/1 checks passed" in out


def test_reproduce_with_grid_override(capsys, small_config):
    code, data = run_json(capsys, "reproduce", "--scope", "knm-negative",
                          "--grid", "n=2..4,m=1..2", "--config", small_config)
    assert code == cli.EXIT_OK
    assert data["passed"] is True
    assert data["outcomes"][0]["checked"] == 6


def test_reproduce_by_result_label(capsys, small_config):
    code, out, _ = run(capsys, "reproduce", "--scope", "prop1.6", "--config", small_config)
    assert code == cli.EXIT_OK
    assert "PASS  k55-table" in out
    assert "d(0, 0) = -1" in out
    assert sum(line.strip().startswith("d(") for line in out.splitlines()) == 9


def test_reproduce_label_with_the_full_knot_grid(capsys, small_config):
    code, data = run_json(capsys, "reproduce", "--scope", "lemma3.3",
                          "--grid", "n=2..8,m=1..5", "--config", small_config)
    assert code == cli.EXIT_OK
    assert [o["name"] for o in data["outcomes"]] == ["knm-negative"]
    assert data["outcomes"][0]["checked"] == 35


def test_reproduce_label_spanning_two_steps(capsys, small_config):
    code, data = run_json(capsys, "reproduce", "--scope", "thm1.1", "--config", small_config)
    assert code == cli.EXIT_OK
    assert [o["name"] for o in data["outcomes"]] == ["knm-negative", "kpnm-negative"]


def test_reproduce_failure_exits_3(capsys, small_config, monkeypatch):
    monkeypatch.setitem(suite.K55_TABLE, (0, 0), Fraction(0))
    code, out, _ = run(capsys, "reproduce", "--scope", "k55-table", "--config", small_config)
    assert code == cli.EXIT_REPRODUCE
    assert "FAIL  k55-table" in out


def test_bad_grid_is_a_usage_error(capsys, small_config):
    code, _, err = run(capsys, "reproduce", "--scope", "torsion", "--grid", "n=5..2",
                       "--config", small_config)
    assert code == cli.EXIT_USAGE
    assert "empty grid range" in err


def test_out_writes_the_payload(capsys, tmp_path):
    target = tmp_path / "reports" / "table.json"
    code, _, _ = run(capsys, "dinv", "knm:3,1", "10", "--out", str(target))
    assert code == 0
    assert json.loads(target.read_text(encoding="utf-8"))["max"] == "-1/4"


def test_out_with_unknown_suffix(capsys, tmp_path):
    code, _, err = run(capsys, "alex", "knm:3,1", "--out", str(tmp_path / "x.csv"))
    assert code == cli.EXIT_USAGE
    assert "cannot export" in err
