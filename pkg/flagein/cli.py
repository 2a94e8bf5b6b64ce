"""
flagein 명령행 인터페이스.

Usage:
    flagein list E 8 [--dedup] [--format text|json|csv]
    flagein analyze E 6 2 [--format text|json] [--c -1/8192] [--save]
    flagein verify 8 [--format text|json] [--workers 4]
    flagein --version

종료 코드: 0 성공, 1 검증 실패, 2 사용법 오류, 3 two-summand 공간이 아님.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import __version__
from .config import Config
from .core.errors import ErrorClass, classify_error, exit_code_for
from .core.schema import LieType, to_fraction
from .reporting.render import (
    render_analysis_text,
    render_json,
    render_list_csv,
    render_list_text,
    render_verify_text,
    verify_payload,
)
from .reporting.report import build_analysis_report, list_payload, to_payload
from .utils.logger import ReportLogger, configure_logging, get_logger

logger = get_logger(__name__)

NUMBERING_HELP = """\
노드 번호 규칙:
  A_ℓ  α1 − α2 − … − αℓ
  B_ℓ  α1 − … − α(ℓ−1) ⇒ αℓ      (αℓ 짧은 루트)
  C_ℓ  α1 − … − α(ℓ−1) ⇐ αℓ      (αℓ 긴 루트)
  D_ℓ  α1 − … − α(ℓ−2) 에 α(ℓ−1), αℓ 이 분기
  E_ℓ  α1 − α2 − … − α(ℓ−1), αℓ 은 α3 에 연결
  F4   α1 − α2 ⇒ α3 − α4
  G2   α1 ⇛ α2                   (α2 짧은 루트)
"""


def _rational(value: str):
    try:
        return to_fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"유리수가 아닙니다: {value!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagein",
        description="두 개의 isotropy summand 를 갖는 flag manifold 의 Einstein 계량 분석 (정확한 유리수 연산)",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="Lie 타입의 two-summand 공간 목록")
    p_list.add_argument("family", help="A~G")
    p_list.add_argument("rank", type=int)
    p_list.add_argument("--dedup", action="store_true", help="diagram automorphism 궤도당 한 노드만 표시")
    p_list.add_argument("--format", choices=["text", "json", "csv"], default=Config.DEFAULT_FORMAT)

    p_analyze = sub.add_parser(
        "analyze",
        help="painted diagram 하나를 끝까지 분석",
        epilog=NUMBERING_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p_analyze.add_argument("family", help="A~G")
    p_analyze.add_argument("rank", type=int)
    p_analyze.add_argument("node", type=int, help="painted 단순근 번호 (1-based)")
    p_analyze.add_argument(
        "--format",
        choices=["text", "json"],
        default=Config.DEFAULT_FORMAT if Config.DEFAULT_FORMAT != "csv" else "text",
    )
    p_analyze.add_argument("--c", dest="multiplier", type=_rational, default=None, help="|H| 를 평가할 승수 c (예: 1/2)")
    p_analyze.add_argument("--save", action="store_true", help="JSON 보고서를 FLAGEIN_REPORT_DIR 에 저장")

    p_verify = sub.add_parser("verify", help="rank ≤ max_rank 전체 교차 검증")
    p_verify.add_argument("max_rank", type=int)
    p_verify.add_argument("--format", choices=["text", "json"], default="text")
    p_verify.add_argument("--workers", type=int, default=None, help=f"스레드 수 (기본값: {Config.VERIFY_MAX_WORKERS})")
    return parser


def cmd_list(args) -> int:
    payload = list_payload(LieType(args.family, args.rank), dedup=args.dedup)
    if args.format == "json":
        print(render_json(payload))
    elif args.format == "csv":
        print(render_list_csv(payload))
    else:
        print(render_list_text(payload))
    return 0


def cmd_analyze(args) -> int:
    lie_type = LieType(args.family, args.rank)
    report = build_analysis_report(lie_type, args.node, args.multiplier)
    payload = to_payload(report)
    if args.save:
        ReportLogger.save_report_to_json(payload, f"{lie_type}_{args.node}")
    print(render_json(payload) if args.format == "json" else render_analysis_text(payload))
    return 0


def cmd_verify(args) -> int:
    # 지연 import: verify 경로에서만 registry 체크를 로드
    from .verification.runner import run_verification

    summary = run_verification(args.max_rank, max_workers=args.workers)
    print(render_json(verify_payload(summary)) if args.format == "json" else render_verify_text(summary))
    return 0 if summary.ok else exit_code_for(ErrorClass.VERIFICATION)


_COMMANDS = {"list": cmd_list, "analyze": cmd_analyze, "verify": cmd_verify}


def main(argv: Optional[List[str]] = None) -> int:
    configure_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    try:
        return _COMMANDS[args.command](args)
    except Exception as exc:
        error_class = classify_error(exc)
        if error_class == ErrorClass.INTERNAL:
            logger.exception("내부 오류")
        print(f"❌ {exc}", file=sys.stderr)
        return exit_code_for(error_class)


if __name__ == "__main__":
    sys.exit(main())
