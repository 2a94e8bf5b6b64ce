import os
from dotenv import load_dotenv

# .env 파일 로드 (환경 변수 오버라이드 허용)
load_dotenv(override=True)

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
_FORMATS = ("text", "json", "csv")


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        print(f"⚠️ {name}={raw!r} 는 정수가 아닙니다. 기본값 {default} 사용")
        return default


class Config:
    """
    flagein 의 운영 설정을 관리하는 중앙 구성 클래스입니다.
    환경 변수(.env)에서 설정값을 읽어옵니다.

    모든 설정은 실행 방식(병렬도, 로그 수준, 출력 위치)만 바꾸며
    계산 결과(차원, t, Einstein 계량, 판정)에는 영향을 주지 않습니다.

    - FLAGEIN_VERIFY_MAX_WORKERS: verify 명령의 스레드 수
    - FLAGEIN_LOG_LEVEL: flagein 로거 수준
    - FLAGEIN_REPORT_DIR: analyze --save 저장 디렉토리
    - FLAGEIN_DEFAULT_FORMAT: 기본 출력 형식 (text/json/csv)
    - FLAGEIN_RANDOM_SEED / FLAGEIN_RESCALE_SAMPLES: ray 재조정 검증용 난수 설정
    """

    # =================================================================
    # 검증 (verify) 설정
    # =================================================================
    VERIFY_MAX_WORKERS = _int_env("FLAGEIN_VERIFY_MAX_WORKERS", 4)
    if VERIFY_MAX_WORKERS < 1:
        print(f"⚠️ FLAGEIN_VERIFY_MAX_WORKERS={VERIFY_MAX_WORKERS} 범위 초과 (≥ 1). 기본값 4 사용")
        VERIFY_MAX_WORKERS = 4

    # 재조정 불변성 / 동차성 검증에 쓰는 양의 유리수 표본
    RANDOM_SEED = _int_env("FLAGEIN_RANDOM_SEED", 20240101)
    RESCALE_SAMPLES = _int_env("FLAGEIN_RESCALE_SAMPLES", 20)
    if RESCALE_SAMPLES < 1:
        print(f"⚠️ FLAGEIN_RESCALE_SAMPLES={RESCALE_SAMPLES} 범위 초과 (≥ 1). 기본값 20 사용")
        RESCALE_SAMPLES = 20

    # =================================================================
    # 로깅 / 출력 설정
    # =================================================================
    LOG_LEVEL = os.getenv("FLAGEIN_LOG_LEVEL", "WARNING").strip().upper()
    if LOG_LEVEL not in _LOG_LEVELS:
        print(f"⚠️ FLAGEIN_LOG_LEVEL={LOG_LEVEL!r} 는 알 수 없는 수준입니다. WARNING 사용")
        LOG_LEVEL = "WARNING"

    REPORT_DIR = os.getenv("FLAGEIN_REPORT_DIR", "output")

    DEFAULT_FORMAT = os.getenv("FLAGEIN_DEFAULT_FORMAT", "text").strip().lower()
    if DEFAULT_FORMAT not in _FORMATS:
        print(f"⚠️ FLAGEIN_DEFAULT_FORMAT={DEFAULT_FORMAT!r} 는 지원하지 않습니다. text 사용")
        DEFAULT_FORMAT = "text"

    @classmethod
    def validate(cls):
        """설정값을 검증하고 잘못된 항목을 모두 모아 EnvironmentError 로 보고합니다."""
        problems = []
        if not isinstance(cls.VERIFY_MAX_WORKERS, int) or cls.VERIFY_MAX_WORKERS < 1:
            problems.append(f"VERIFY_MAX_WORKERS={cls.VERIFY_MAX_WORKERS!r} (≥ 1 정수)")
        if not isinstance(cls.RESCALE_SAMPLES, int) or cls.RESCALE_SAMPLES < 1:
            problems.append(f"RESCALE_SAMPLES={cls.RESCALE_SAMPLES!r} (≥ 1 정수)")
        if not isinstance(cls.RANDOM_SEED, int):
            problems.append(f"RANDOM_SEED={cls.RANDOM_SEED!r} (정수)")
        if cls.LOG_LEVEL not in _LOG_LEVELS:
            problems.append(f"LOG_LEVEL={cls.LOG_LEVEL!r} ({', '.join(_LOG_LEVELS)})")
        if cls.DEFAULT_FORMAT not in _FORMATS:
            problems.append(f"DEFAULT_FORMAT={cls.DEFAULT_FORMAT!r} ({', '.join(_FORMATS)})")
        if not cls.REPORT_DIR:
            problems.append("REPORT_DIR 가 비어 있습니다")

        if problems:
            raise EnvironmentError("잘못된 flagein 설정: " + "; ".join(problems))
        return True
