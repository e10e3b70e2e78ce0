import os
from pathlib import Path
from dotenv import load_dotenv

# 프로젝트 루트
BASE_DIR = Path(__file__).resolve().parent.parent
load_dotenv(BASE_DIR / ".env")

# 도구 정보
TOOL_NAME = "qhg"
TOOL_VERSION = "0.1.0"

# 데이터 경로
DATA_DIR = Path(os.getenv("QHG_DATA_DIR") or BASE_DIR / "data")
GROUPS_DIR = DATA_DIR / "groups"
REPORTS_DIR = Path(os.getenv("QHG_REPORTS_DIR") or DATA_DIR / "reports")

# 로그
LOG_LEVEL = os.getenv("QHG_LOG_LEVEL", "WARNING")
LOG_FORMAT = "[%(name)s] %(message)s"

# 구조 파일이 선언할 수 있는 최대 차원
MAX_DIM = int(os.getenv("QHG_MAX_DIM", "400"))

# verify 다중 파일 작업 스레드 수
DEFAULT_JOBS = int(os.getenv("QHG_JOBS", "1"))
