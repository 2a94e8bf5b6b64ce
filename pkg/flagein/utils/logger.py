import json
import logging
import os
import sys
from typing import Any, Dict, Optional

from ..config import Config

_PACKAGE_LOGGER = "flagein"


def configure_logging(level: Optional[str] = None) -> logging.Logger:
    """flagein 패키지 로거에 stderr 핸들러를 한 번만 붙이고 수준을 설정합니다."""
    logger = logging.getLogger(_PACKAGE_LOGGER)
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
        logger.addHandler(handler)
    logger.setLevel(level or Config.LOG_LEVEL)
    return logger


def get_logger(name: str) -> logging.Logger:
    if not name.startswith(_PACKAGE_LOGGER):
        name = f"{_PACKAGE_LOGGER}.{name}"
    return logging.getLogger(name)


class ReportLogger:
    """
    analyze 보고서(직렬화된 dict)를 JSON 파일로 저장하는 유틸리티입니다.
    골든 파일과 같은 형식(sort_keys, indent=2)으로 기록합니다.
    """

    @staticmethod
    def save_report_to_json(payload: Dict[str, Any], name: str, output_dir: Optional[str] = None) -> Optional[str]:
        """
        보고서를 ``{output_dir}/{name}_report.json`` 으로 저장합니다.

        Args:
            payload: 직렬화된 보고서 (reporting.report.to_payload 결과)
            name: 파일명 기준 (예: "E6_2")
            output_dir: 저장 디렉토리 (기본값: Config.REPORT_DIR)
        """
        output_dir = output_dir or Config.REPORT_DIR
        try:
            os.makedirs(output_dir, exist_ok=True)
            json_path = os.path.join(output_dir, f"{os.path.basename(name)}_report.json")
            with open(json_path, "w", encoding="utf-8") as f:
                f.write(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False))
                f.write("\n")
            print(f"📄 보고서 저장 완료: {json_path}", file=sys.stderr)
            return json_path
        except OSError as e:
            print(f"⚠️ 보고서 저장 실패 ({name}): {e}", file=sys.stderr)
            return None
