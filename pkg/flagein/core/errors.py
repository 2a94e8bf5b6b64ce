"""
도메인 예외 정의 및 CLI 종료 코드 분류.

루트 시스템 구성, painted diagram 검증, Weyl 차원 공식, 임계점 판정 단계에서
발생하는 오류를 구조화된 예외로 표현합니다. CLI는 ``classify_error`` 로
예외를 분류한 뒤 ``exit_code_for`` 로 종료 코드를 결정합니다.

- 0: 성공
- 1: 검증 실패 / 내부 일관성 오류
- 2: 사용법 오류 (잘못된 타입, 랭크, 노드, 인자)
- 3: two-summand 공간이 아님 (painted node의 mark ≠ 2)
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence


class FlagEinError(Exception):
    """flagein 전체 예외의 기반 클래스."""


class InvalidType(FlagEinError):
    """지원하지 않는 (family, rank) 조합."""

    def __init__(self, family: str, rank: int, alternative: Optional[str] = None):
        self.family = family
        self.rank = rank
        self.alternative = alternative
        message = f"유효하지 않은 Lie 타입: {family}{rank}"
        if alternative:
            message += f" ({alternative} 를 사용하세요)"
        super().__init__(message)


class InvalidNode(FlagEinError):
    """painted node 번호가 1..rank 범위를 벗어남."""

    def __init__(self, node: int, rank: int):
        self.node = node
        self.rank = rank
        super().__init__(f"painted node {node} 이(가) 범위 [1, {rank}] 밖입니다")


class DimensionMismatch(FlagEinError):
    """벡터 길이가 루트 시스템의 rank와 다름."""

    def __init__(self, expected: int, got: int):
        self.expected = expected
        self.got = got
        super().__init__(f"벡터 길이 {got} ≠ rank {expected}")


class NotARoot(FlagEinError):
    """루트가 아닌 벡터가 루트 자리에 전달됨."""

    def __init__(self, vector: Sequence[int]):
        self.vector = tuple(vector)
        super().__init__(f"루트가 아닙니다: {self.vector}")


class HeightNotTwo(FlagEinError):
    """painted node의 mark가 2가 아님 (two-summand 조건 위반)."""

    def __init__(self, mark: int, node: int, symmetric_space: Optional[str] = None):
        self.mark = mark
        self.node = node
        self.symmetric_space = symmetric_space
        message = f"α{node} 의 mark(height)가 {mark} 입니다; two-summand 조건은 mark = 2"
        if symmetric_space:
            message += f". 이 diagram은 Hermitian symmetric space {symmetric_space} 를 결정합니다"
        super().__init__(message)


class BadLevel(FlagEinError):
    """grading level이 {0, 1, 2} 밖."""

    def __init__(self, level: int):
        self.level = level
        super().__init__(f"grading level {level} 은(는) {{0, 1, 2}} 에 속하지 않습니다")


class NotUnique(FlagEinError):
    """최고 무게 후보가 유일하지 않음 (내부 불일치)."""

    def __init__(self, level: int, candidates: Sequence[Sequence[int]]):
        self.level = level
        self.candidates = [tuple(c) for c in candidates]
        super().__init__(f"level {level} 의 최고 무게 후보가 {len(self.candidates)}개: {self.candidates}")


class NotDominant(FlagEinError):
    """(λ, α) < 0 인 양의 루트가 존재."""

    def __init__(self, witness: Sequence[int], pairing: Fraction):
        self.witness = tuple(witness)
        self.pairing = pairing
        super().__init__(f"dominant 가 아닙니다: (λ, {self.witness}) = {pairing} < 0")


class NonIntegerResult(FlagEinError):
    """Weyl 차원 공식이 정수가 아닌 값을 반환 (내부 일관성 실패)."""

    def __init__(self, value: Fraction):
        self.value = value
        super().__init__(f"Weyl 차원 공식 결과가 정수가 아닙니다: {value}")


class InvalidArgument(FlagEinError, ValueError):
    """명령 인자(max_rank, 스레드 수 등)가 허용 범위 밖."""

    def __init__(self, name: str, value, allowed: str):
        self.name = name
        self.value = value
        self.allowed = allowed
        super().__init__(f"{name} = {value!r} 는 허용 범위({allowed}) 밖입니다")


class NotCritical(FlagEinError):
    """계량이 Einstein ray 위에 있지 않음."""

    def __init__(self, residual: Fraction, what: str = "Einstein 다항식"):
        self.residual = residual
        self.what = what
        super().__init__(f"임계점이 아닙니다: {what} 잔차 = {residual}")


class ErrorClass(str, Enum):
    """CLI 종료 코드 결정을 위한 예외 분류."""
    USAGE = "usage"
    NOT_TWO_SUMMAND = "not_two_summand"
    VERIFICATION = "verification"
    INTERNAL = "internal"


_EXIT_CODES = {
    ErrorClass.USAGE: 2,
    ErrorClass.NOT_TWO_SUMMAND: 3,
    ErrorClass.VERIFICATION: 1,
    ErrorClass.INTERNAL: 1,
}


def classify_error(exc: BaseException) -> ErrorClass:
    """예외를 에러 클래스로 분류합니다."""
    if isinstance(exc, HeightNotTwo):
        return ErrorClass.NOT_TWO_SUMMAND
    if isinstance(exc, (InvalidType, InvalidNode, DimensionMismatch, InvalidArgument)):
        return ErrorClass.USAGE
    if isinstance(exc, (NotUnique, NonIntegerResult, NotDominant)):
        return ErrorClass.INTERNAL
    if isinstance(exc, FlagEinError):
        return ErrorClass.VERIFICATION
    return ErrorClass.INTERNAL


def exit_code_for(error_class: ErrorClass) -> int:
    return _EXIT_CODES[error_class]
