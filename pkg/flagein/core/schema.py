"""flagein 전체에서 공유되는 핵심 데이터 모델.

Lie 타입, 불변 계량, 아핀 다항식(bordered Hessian 값), 임계점 판정 결과 등
모듈 사이를 오가는 값 객체를 정의합니다. 모든 수치는 ``Fraction`` 기반의
정확한 유리수이며, 부동소수점은 ``*_approx`` 필드에만 나타납니다.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from .errors import InvalidType

# 단순근 기저 {α_1, …, α_ℓ} 위의 정수 계수 벡터
RootVec = Tuple[int, ...]
# 기본 무게 기저 {Λ_1, …, Λ_ℓ} 위의 유리수 계수 벡터
WeightVec = Tuple[Fraction, ...]

Rational = Union[int, Fraction]

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")


def _canonical_alternative(family: str, rank: int) -> Optional[str]:
    if family in ("B", "C") and rank == 1:
        return "A1"
    if family == "D" and rank == 3:
        return "A3"
    if family == "D" and rank == 2:
        return "A1×A1 (simple이 아님)"
    return None


@dataclass(frozen=True, order=True)
class LieType:
    """단순 Lie 타입 (family, rank).

    Attributes:
        family: A~G 중 하나 (대소문자 무관, 대문자로 정규화).
        rank: 양의 정수 rank ℓ.
    """
    family: str
    rank: int

    def __post_init__(self):
        family = str(self.family).strip().upper()
        object.__setattr__(self, "family", family)
        rank = self.rank
        if family not in FAMILIES or not isinstance(rank, int) or isinstance(rank, bool):
            raise InvalidType(family, rank)
        valid = {
            "A": rank >= 1,
            "B": rank >= 2,
            "C": rank >= 2,
            "D": rank >= 4,
            "E": rank in (6, 7, 8),
            "F": rank == 4,
            "G": rank == 2,
        }[family]
        if not valid:
            raise InvalidType(family, rank, _canonical_alternative(family, rank))

    @property
    def is_classical(self) -> bool:
        return self.family in ("A", "B", "C", "D")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def to_fraction(value: Union[Rational, str, float]) -> Fraction:
    """정수/문자열("p/q")을 Fraction으로 변환합니다."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("정확한 계산에는 float 을 사용할 수 없습니다")
    return Fraction(value)


@dataclass(frozen=True)
class InvariantMetric:
    """대각 G-불변 계량 x1(−B)|m1 + x2(−B)|m2.

    Attributes:
        x1: m1 위의 계수 (양의 유리수).
        x2: m2 위의 계수 (양의 유리수).
    """
    x1: Fraction
    x2: Fraction

    def __post_init__(self):
        x1 = to_fraction(self.x1)
        x2 = to_fraction(self.x2)
        if x1 <= 0 or x2 <= 0:
            raise ValueError(f"계량 계수는 양수여야 합니다: ({x1}, {x2})")
        object.__setattr__(self, "x1", x1)
        object.__setattr__(self, "x2", x2)

    def scaled(self, s: Rational) -> "InvariantMetric":
        s = to_fraction(s)
        return InvariantMetric(self.x1 * s, self.x2 * s)

    @property
    def ratio(self) -> Fraction:
        """ray 불변량 x2/x1."""
        return self.x2 / self.x1


@dataclass(frozen=True)
class EinsteinSolutionSet:
    """두 개의 불변 Einstein 계량 (x1 = 1 정규화) 과 구조 상수 t."""
    kaehler: InvariantMetric
    non_kaehler: InvariantMetric
    t: Fraction


@dataclass(frozen=True)
class AffinePoly:
    """승수 c에 대한 아핀 다항식 a0 + a1·c (bordered Hessian 행렬식)."""
    a0: Fraction
    a1: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a0", to_fraction(self.a0))
        object.__setattr__(self, "a1", to_fraction(self.a1))

    def evaluate(self, c: Rational) -> Fraction:
        return self.a0 + self.a1 * to_fraction(c)

    def factored(self) -> str:
        """a0·(1+rc) 형태 문자열. a0 = 0 이면 전개형을 반환합니다."""
        if self.a0 == 0:
            return self.expanded()
        r = self.a1 / self.a0
        sign = "+" if r >= 0 else "-"
        return f"{self.a0}·(1{sign}{abs(r)}c)"

    def expanded(self) -> str:
        sign = "+" if self.a1 >= 0 else "-"
        return f"{self.a0} {sign} {abs(self.a1)}·c"


class MetricKind(str, Enum):
    KAEHLER = "Kaehler"
    NON_KAEHLER = "NonKaehler"


class BorderedVerdict(str, Enum):
    """bordered Hessian 부호 규칙에 의한 판정."""
    LOCAL_MIN = "LocalMin"
    LOCAL_MAX = "LocalMax"
    SADDLE = "Saddle"


class OracleVerdict(str, Enum):
    """부피 등위 곡선 위 2계 도함수 부호에 의한 판정."""
    LOCAL_MIN = "LocalMin"
    LOCAL_MAX = "LocalMax"
    DEGENERATE = "Degenerate"


@dataclass
class CriticalPointReport:
    """하나의 Einstein 계량에 대한 임계점 분석 결과.

    Attributes:
        metric: 분석한 계량.
        kind: Kähler / non-Kähler 구분.
        S: 스칼라 곡률 (정확값).
        V: 부피 x1^d1·x2^d2.
        multiplier_c: 평가에 사용한 Lagrange 승수.
        hessian_poly: |H| 의 c 에 대한 아핀 다항식.
        hessian_value: multiplier_c 에서의 |H| 값.
        bordered_verdict: |H| 부호 규칙 판정.
        oracle_d2: 부피 고정 곡선 위 S 의 2계 도함수.
        oracle_verdict: oracle_d2 부호 판정.
        derived_c: −S/(nV) 로 유도된 승수 (multiplier_c 와 다를 수 있음).
        multiplier_source: "derived" 또는 "supplied".
    """
    metric: InvariantMetric
    kind: MetricKind
    S: Fraction
    V: Fraction
    multiplier_c: Fraction
    hessian_poly: AffinePoly
    hessian_value: Fraction
    bordered_verdict: BorderedVerdict
    oracle_d2: Fraction
    oracle_verdict: OracleVerdict
    derived_c: Optional[Fraction] = None
    multiplier_source: str = "derived"

    @property
    def methods_agree(self) -> bool:
        """두 판정이 모두 비퇴화일 때 일치 여부."""
        if self.oracle_d2 == 0 or self.hessian_value == 0:
            return True
        return self.bordered_verdict.value == self.oracle_verdict.value


@dataclass
class CheckOutcome:
    """검증 레지스트리의 개별 체크 결과.

    Attributes:
        name: 체크 이름 (예: 't_oracle', 'eq11_identity').
        subject: 대상 식별자 (예: 'E6:2', 'F4').
        passed: 통과 여부.
        witnesses: 실패 시 반례/사유 목록.
    """
    name: str
    subject: str
    passed: bool
    witnesses: List[str] = field(default_factory=list)
    elapsed_ms: float = 0.0


@dataclass
class VerificationSummary:
    """verify 명령의 전체 결과."""
    max_rank: int
    spaces_covered: List[str] = field(default_factory=list)
    lie_types_covered: List[str] = field(default_factory=list)
    outcomes: List[CheckOutcome] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for o in self.outcomes if o.passed)

    @property
    def failed(self) -> int:
        return sum(1 for o in self.outcomes if not o.passed)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def counts_by_check(self) -> Dict[str, Dict[str, int]]:
        counts: Dict[str, Dict[str, int]] = {}
        for outcome in self.outcomes:
            bucket = counts.setdefault(outcome.name, {"pass": 0, "fail": 0})
            bucket["pass" if outcome.passed else "fail"] += 1
        return counts
