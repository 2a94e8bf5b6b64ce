"""
verify 명령 실행기: 공간별 교차 검증을 병렬로 수행하고 결정적 순서로 집계.

- collect_lie_types(max_rank): rank ≤ max_rank 인 모든 단순 타입 (A 포함)
- collect_spaces(max_rank): B, C, D (ℓ ≤ max_rank) 와 예외형의 two-summand 공간
- run_verification(max_rank): ThreadPoolExecutor 로 공간별 체크를 분산 실행
"""

from __future__ import annotations

import logging
import random
from concurrent.futures import ThreadPoolExecutor, as_completed
from fractions import Fraction
from typing import List, Optional

from ..config import Config
from ..core.errors import InvalidArgument
from ..core.flagspace import TwoSummandSpace, enumerate_spaces
from ..core.rootsys import build_root_system
from ..core.schema import CheckOutcome, FAMILIES, LieType, VerificationSummary
from .checks import DEFAULT_REGISTRY
from .registry import CheckContext, CheckRegistry, CheckScope

logger = logging.getLogger(__name__)

MIN_RANK = 2
MAX_RANK = 8

_EXCEPTIONAL = (LieType("G", 2), LieType("F", 4), LieType("E", 6), LieType("E", 7), LieType("E", 8))
_MIN_CLASSICAL_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}


def collect_lie_types(max_rank: int) -> List[LieType]:
    types = []
    for family in ("A", "B", "C", "D"):
        for rank in range(_MIN_CLASSICAL_RANK[family], max_rank + 1):
            types.append(LieType(family, rank))
    types.extend(t for t in _EXCEPTIONAL if t.rank <= max_rank)
    return sorted(types, key=lambda t: (FAMILIES.index(t.family), t.rank))


def collect_spaces(max_rank: int) -> List[TwoSummandSpace]:
    spaces = []
    for lie_type in collect_lie_types(max_rank):
        spaces.extend(enumerate_spaces(lie_type))
    return spaces


def rescale_samples(seed: int, count: int) -> List[Fraction]:
    """재현 가능한 양의 유리수 표본."""
    rng = random.Random(seed)
    return [Fraction(rng.randint(1, 60), rng.randint(1, 60)) for _ in range(count)]


def _space_key(outcome: CheckOutcome):
    family_rank, _, node = outcome.subject.partition(":")
    return (FAMILIES.index(family_rank[0]), int(family_rank[1:]), int(node or 0), outcome.name)


def run_verification(
    max_rank: int,
    *,
    max_workers: Optional[int] = None,
    seed: Optional[int] = None,
    samples: Optional[int] = None,
    registry: CheckRegistry = DEFAULT_REGISTRY,
) -> VerificationSummary:
    """모든 루트 시스템/공간 체크를 실행합니다.

    Args:
        max_rank: 2 ≤ max_rank ≤ 8.
        max_workers: 스레드 수 (기본값: Config.VERIFY_MAX_WORKERS).
        seed, samples: 재조정 표본 설정 (기본값: Config).
    """
    if not isinstance(max_rank, int) or not MIN_RANK <= max_rank <= MAX_RANK:
        raise InvalidArgument("max_rank", max_rank, f"{MIN_RANK}..{MAX_RANK}")
    if max_workers is not None and max_workers < 1:
        raise InvalidArgument("workers", max_workers, "≥ 1")

    ctx = CheckContext(
        scales=rescale_samples(
            Config.RANDOM_SEED if seed is None else seed,
            Config.RESCALE_SAMPLES if samples is None else samples,
        )
    )
    lie_types = collect_lie_types(max_rank)
    spaces = collect_spaces(max_rank)
    logger.info("verify %d: %d lie types, %d spaces", max_rank, len(lie_types), len(spaces))

    outcomes: List[CheckOutcome] = []
    for lie_type in lie_types:
        outcomes.extend(registry.run(CheckScope.ROOT_SYSTEM, build_root_system(lie_type), str(lie_type), ctx))

    workers = max_workers or Config.VERIFY_MAX_WORKERS
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = {
            executor.submit(registry.run, CheckScope.SPACE, space, space.subject, ctx): space
            for space in spaces
        }
        for future in as_completed(futures):
            outcomes.extend(future.result())

    outcomes.sort(key=_space_key)
    return VerificationSummary(
        max_rank=max_rank,
        spaces_covered=[space.subject for space in spaces],
        lie_types_covered=[str(t) for t in lie_types],
        outcomes=outcomes,
    )
