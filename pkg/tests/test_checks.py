import pytest

from checks.runner import CheckPlan, CheckRunner, StepOutcome
from checks import suite
from checks.suite import (
    SCOPE_ALIASES,
    SCOPES,
    build_context,
    build_plan,
    build_runner,
    knm_torsion,
    ln_h,
    run_suite,
)
from core.errors import ConsistencyError, InvariantError
from core.floer import HFunctionGrid
from core.ring import LaurentPoly1, LaurentPoly2
from utils.settings import AppSettings


@pytest.fixture
def small():
    return AppSettings(
        knot_grid="n=2..3,m=1..2",
        link_grid="n=1..3",
        g_range="g=2..12",
        torus_limit=9,
        workers=2,
    )


def _ok(runner, ctx):
    return {**ctx, "seen": ctx.get("seen", 0) + 1}, StepOutcome("ok", checked=1)


def _fails(runner, ctx):
    count, failures = runner.fan_out(lambda x: [] if x % 2 else [f"{x} is even"], range(5))
    return ctx, StepOutcome("fails", count, failures)


def _aborts(runner, ctx):
    raise ConsistencyError("windows overlap")


def test_runner_threads_context_through_a_plan():
    runner = CheckRunner(workers=3)
    runner.register("ok", _ok)
    runner.register_many({"fails": _fails, "aborts": _aborts})
    assert runner.names == ["ok", "fails", "aborts"]

    ctx = runner.run_plan(CheckPlan("demo", ["ok", "fails", "ok", "aborts"]), {"outcomes": ["stale"]})
    assert ctx["seen"] == 2
    statuses = [o.status for o in ctx["outcomes"]]
    assert statuses == ["PASS", "FAIL", "PASS", "FAIL"]
    assert ctx["outcomes"][1].failures == ["0 is even", "2 is even", "4 is even"]
    assert ctx["outcomes"][1].checked == 5
    assert ctx["outcomes"][3].failures == ["aborted: windows overlap"]


def test_unknown_step_and_scope():
    with pytest.raises(InvariantError):
        CheckRunner().run_step("missing", {})
    with pytest.raises(InvariantError):
        build_plan("everything")
    assert build_plan().steps == list(SCOPES)
    assert set(build_runner().names) == set(SCOPES)


def test_result_labels_resolve_to_steps():
    assert build_plan("prop1.6").steps == ["k55-table"]
    assert build_plan("lemma3.3").steps == ["knm-negative"]
    assert build_plan("thm1.1").steps == ["knm-negative", "kpnm-negative"]
    assert build_plan("ex4.5").name == "ex4.5"
    for steps in SCOPE_ALIASES.values():
        assert set(steps) <= set(SCOPES)


def test_negative_h_fails_the_ln_step(small, monkeypatch):
    one = LaurentPoly1.one()
    bad = HFunctionGrid(LaurentPoly2({(0, 0): 1}), (one, one))
    monkeypatch.setattr(suite, "h_function", lambda link: bad)
    (outcome,) = run_suite(small, "ln-hfunction")
    assert not outcome.passed
    assert all("negative h values" in msg for msg in outcome.failures)


def test_fan_out_keeps_subject_order():
    runner = CheckRunner(workers=4)
    count, failures = runner.fan_out(lambda x: [str(x)], range(20))
    assert count == 20
    assert failures == [str(x) for x in range(20)]


def test_grid_override_replaces_a_variable_everywhere(small):
    ctx = build_context(small, "n=4..5")
    assert list(ctx["knot_grid"]["n"]) == [4, 5]
    assert list(ctx["knot_grid"]["m"]) == [1, 2]
    assert list(ctx["link_grid"]["n"]) == [4, 5]
    assert list(ctx["g_range"]["g"]) == list(range(2, 13))


def test_expected_value_tables():
    assert [knm_torsion(3, 1, i) for i in range(7)] == [2, 2, 1, 1, 1, 0, 0]
    assert [ln_h(1, 0, s) for s in range(3)] == [1, 1, 0]
    assert ln_h(1, 3, 0) == 1 and ln_h(1, 3, 1) == 0


@pytest.mark.parametrize("scope", SCOPES)
def test_each_scope_passes_on_a_small_grid(small, scope):
    (outcome,) = run_suite(small, scope)
    assert outcome.name == scope
    assert outcome.passed, outcome.failures
    assert outcome.checked > 0


def test_k55_scope_echoes_the_table(small):
    (outcome,) = run_suite(small, "k55-table")
    assert "max d = -1/3" in outcome.echo
    assert "d(0, 0) = -1" in outcome.echo


def test_square_parameter_is_reported_not_failed(small):
    (outcome,) = run_suite(small, "ln-obstruction")
    assert outcome.echo == ["L_3 (2,8): inapplicable, n+1 = 4 is a square"]


def test_all_scopes_in_order(small):
    outcomes = run_suite(small, "all", workers=1)
    assert [o.name for o in outcomes] == list(SCOPES)
    assert all(o.passed for o in outcomes)
