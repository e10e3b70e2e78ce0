"""결정적 JSON 출력

키 정렬, 고정 들여쓰기, 스칼라는 이미 정확 문자열. 같은 입력이면 바이트 단위로 같다.
"""

import json
import logging
import sys
from pathlib import Path

logger = logging.getLogger(__name__)


def dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2, sort_keys=True, default=str) + "\n"


def write_json(obj, path: str | Path | None = None) -> Path | None:
    """path 가 없으면 stdout 으로."""
    text = dumps(obj)
    if path is None:
        sys.stdout.write(text)
        return None
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info("[출력] 저장 완료: %s", path)
    return path
