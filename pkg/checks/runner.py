# checks/runner.py
"""
Named verification steps run as a plan.

A step is a callable ``(runner, ctx) -> (ctx, StepOutcome)``. Steps fan their
subjects out over a thread pool with ``runner.fan_out``; every subject check
returns a list of failure messages, empty when it passes.
"""
from __future__ import annotations

import logging
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from core.errors import ConsistencyError, InvariantError

log = logging.getLogger(__name__)


@dataclass
class StepOutcome:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    echo: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "checked": self.checked,
            "failures": list(self.failures),
            "echo": list(self.echo),
        }


Step = Callable[["CheckRunner", dict], "tuple[dict, StepOutcome]"]


class CheckPlan:
    def __init__(self, name: str, steps: list[str]):
        self.name = name
        self.steps = list(steps or [])


class CheckRunner:
    def __init__(self, workers: int = 4):
        self.workers = max(1, int(workers))
        self._steps: dict[str, Step] = {}

    def register(self, name: str, func: Step) -> None:
        self._steps[str(name)] = func

    def register_many(self, mapping: dict[str, Step]) -> None:
        self._steps.update(mapping or {})

    @property
    def names(self) -> list[str]:
        return list(self._steps)

    def fan_out(self, check: Callable[[object], list[str]], subjects: Iterable) -> tuple[int, list[str]]:
        """Run ``check`` on every subject; returns (count, failures in subject order)."""
        subjects = list(subjects)
        if self.workers == 1 or len(subjects) < 2:
            results = [check(s) for s in subjects]
        else:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                results = list(pool.map(check, subjects))
        return len(subjects), [msg for msgs in results for msg in msgs]

    def run_step(self, name: str, ctx: dict) -> dict:
        name = str(name)
        fn = self._steps.get(name)
        if not fn:
            raise InvariantError(f"unknown check {name!r}; known: {', '.join(self._steps)}")
        log.info("running check: %s", name)
        try:
            res_ctx, outcome = fn(self, dict(ctx or {}))
        except (InvariantError, ConsistencyError) as e:
            log.exception("check %s aborted", name)
            res_ctx, outcome = dict(ctx or {}), StepOutcome(name, failures=[f"aborted: {e}"])
        res_ctx = dict(res_ctx or {})
        res_ctx.setdefault("outcomes", []).append(outcome)
        log.info("check %s: %s (%d checked)", name, outcome.status, outcome.checked)
        return res_ctx

    def run_plan(self, plan: CheckPlan, ctx: dict) -> dict:
        ctx = dict(ctx or {})
        ctx["outcomes"] = []
        log.info("plan '%s' started", plan.name)
        for step in plan.steps:
            ctx = self.run_step(step, ctx)
        failed = [o.name for o in ctx["outcomes"] if not o.passed]
        log.info("plan '%s' complete, %d failing", plan.name, len(failed))
        return ctx


__all__ = ["StepOutcome", "CheckPlan", "CheckRunner"]
