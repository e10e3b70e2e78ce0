"""군 / 부분군 JSON

군:     {"elements": ["e", "(12)", ...], "table": [[int × N] × N]}
부분군: {"members": ["e", "(12)"]}  (라벨 또는 인덱스)

파일이 없는 이름 sₖ / dₘ / zₘ 은 치환군 생성기로 만든다 ("s4", "d5", "z7").
"""

import re
from pathlib import Path

from config.settings import GROUPS_DIR
from constructions.groups import (
    FiniteGroup,
    cyclic_group,
    dihedral_group,
    group_from_table,
    subgroup_from_labels,
    symmetric_group,
)
from parsers.errors import SchemaError
from parsers.structure_json import read_json

_NAMED_GROUP = re.compile(r"^([sdz])(\d+)$")
_GENERATORS = {"s": symmetric_group, "d": dihedral_group, "z": cyclic_group}


def resolve_path(name: str | Path) -> Path:
    """경로가 없으면 번들 data/groups 에서 찾는다 ("s3" → data/groups/s3.json)."""
    path = Path(name)
    if path.exists():
        return path
    for candidate in (GROUPS_DIR / path.name, GROUPS_DIR / f"{path.name}.json"):
        if candidate.exists():
            return candidate
    return path


def named_group(name: str) -> FiniteGroup | None:
    match = _NAMED_GROUP.match(name)
    if match is None:
        return None
    kind, size = match.group(1), int(match.group(2))
    if size < 1:
        raise SchemaError(f"군 이름 {name}: 크기는 1 이상이어야 한다")
    return _GENERATORS[kind](size)


def load_group(source) -> FiniteGroup:
    if isinstance(source, str) and not resolve_path(source).exists():
        G = named_group(source)
        if G is not None:
            return G
    data = source if isinstance(source, dict) else read_json(resolve_path(source))
    if not isinstance(data, dict) or "elements" not in data or "table" not in data:
        raise SchemaError("군 JSON 에는 'elements' 와 'table' 이 있어야 한다")
    if not isinstance(data["elements"], list) or not isinstance(data["table"], list):
        raise SchemaError("'elements' 와 'table' 은 목록이어야 한다")
    return group_from_table(data)


def load_subgroup(source, G: FiniteGroup) -> tuple:
    data = source if isinstance(source, dict) else read_json(resolve_path(source))
    if not isinstance(data, dict) or not isinstance(data.get("members"), list):
        raise SchemaError("부분군 JSON 에는 'members' 목록이 있어야 한다")
    return subgroup_from_labels(G, data["members"])
