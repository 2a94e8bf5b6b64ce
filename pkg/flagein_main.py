"""
flagein CLI 실행 스크립트 (설치 없이 저장소 루트에서 실행).

Usage:
    python flagein_main.py list E 8
    python flagein_main.py analyze E 6 2 --format json
    python flagein_main.py verify 8
"""

import sys

from flagein.cli import main

if __name__ == "__main__":
    sys.exit(main())
