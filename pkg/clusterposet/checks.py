"""
Check Reports Module

Structured pass/fail results shared by the verification drivers, plus the
thread pool the per-object checks run on.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Optional, TypeVar

from clusterposet.config import get_int

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"

T = TypeVar("T")
R = TypeVar("R")


@dataclass
class CheckResult:
    check: str
    status: str = PASS
    counterexample: Optional[Dict[str, Any]] = None
    detail: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def fail(self, counterexample: Dict[str, Any], detail: str | None = None) -> "CheckResult":
        # Only the first counterexample is kept.
        if self.passed:
            self.status = FAIL
            self.counterexample = counterexample
            self.detail = detail
        return self

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"check": self.check, "status": self.status}
        if self.counterexample is not None:
            data["counterexample"] = self.counterexample
        if self.detail:
            data["detail"] = self.detail
        return data


@dataclass
class Report:
    """
    An ordered list of check results.
    """

    subject: Dict[str, Any] = field(default_factory=dict)
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, result: CheckResult) -> CheckResult:
        self.checks.append(result)
        level = logging.INFO if result.passed else logging.WARNING
        logger.log(level, "%s: %s", result.check, result.status)
        return result

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            **self.subject,
            "status": PASS if self.passed else FAIL,
            "checks": [c.to_dict() for c in self.checks],
        }


def parallel_map(fn: Callable[[T], R], items: Iterable[T]) -> List[R]:
    """
    Map fn over items on the [verify] thread pool; results keep input order.
    """
    items = list(items)
    workers = max(1, get_int("verify", "workers", 4))
    if workers == 1 or len(items) < 2:
        return [fn(item) for item in items]

    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
