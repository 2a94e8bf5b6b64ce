"""
검증 체크 레지스트리: 이름 붙은 교차 검증을 데코레이터로 등록/실행.

각 체크는 대상(TwoSummandSpace 또는 RootSystem)을 받아 반례 문자열 목록을
반환합니다. 빈 목록이면 통과입니다. 체크 내부 예외는 전파하지 않고 실패로
기록합니다.

사용 예시:
    registry = CheckRegistry()

    @registry.check("t_oracle")
    def t_oracle_agrees(ts, ctx):
        ...
        return witnesses

    outcomes = registry.run(CheckScope.SPACE, ts, "E6:2", ctx)
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, List, Tuple

from ..core.schema import CheckOutcome

logger = logging.getLogger(__name__)


class CheckScope(str, Enum):
    """체크 대상 종류."""
    SPACE = "space"
    ROOT_SYSTEM = "root_system"


@dataclass
class CheckContext:
    """체크 공통 입력: 재조정 검증용 양의 유리수 표본."""
    scales: List[Fraction] = field(default_factory=list)


# 체크 시그니처: (subject, CheckContext) -> 반례 목록
CheckFn = Callable[[Any, CheckContext], List[str]]


class CheckRegistry:
    """범위별로 이름 붙은 체크를 등록 순서대로 보관합니다."""

    def __init__(self):
        self._checks: Dict[CheckScope, List[Tuple[str, CheckFn]]] = {scope: [] for scope in CheckScope}

    def register(self, name: str, fn: CheckFn, *, scope: CheckScope = CheckScope.SPACE):
        if any(existing == name for existing, _ in self._checks[scope]):
            raise ValueError(f"이미 등록된 체크: {scope.value}/{name}")
        self._checks[scope].append((name, fn))

    def check(self, name: str, *, scope: CheckScope = CheckScope.SPACE):
        """데코레이터로 체크를 등록합니다."""
        def decorator(fn: CheckFn) -> CheckFn:
            self.register(name, fn, scope=scope)
            return fn
        return decorator

    def names(self, scope: CheckScope = CheckScope.SPACE) -> List[str]:
        return [name for name, _ in self._checks[scope]]

    def run(self, scope: CheckScope, subject: Any, label: str, ctx: CheckContext) -> List[CheckOutcome]:
        """등록된 체크를 모두 실행하고 결과를 반환합니다."""
        outcomes = []
        for name, fn in list(self._checks[scope]):
            start = time.perf_counter()
            try:
                witnesses = list(fn(subject, ctx))
            except Exception as exc:
                witnesses = [f"{type(exc).__name__}: {exc}"]
            elapsed_ms = (time.perf_counter() - start) * 1000
            outcome = CheckOutcome(name=name, subject=label, passed=not witnesses, witnesses=witnesses, elapsed_ms=elapsed_ms)
            if witnesses:
                logger.warning("check %s failed on %s: %s", name, label, witnesses[:3])
            outcomes.append(outcome)
        return outcomes
