"""
Kinvar 명령행 실행 파일

실행 방법:
    python app.py selftest
    python app.py binary-dim 4 3 --method cs
"""
import sys
from pathlib import Path

# 프로젝트 루트를 Python 경로에 추가
project_root = Path(__file__).parent
sys.path.append(str(project_root))

from src.cli.main import main

if __name__ == "__main__":
    raise SystemExit(main())
