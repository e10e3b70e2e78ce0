"""하이퍼그룹 JSON 입출력

{
  "algebra": {"dim": n, "labels": [...], "mult": [[[스칼라 × n] × n] × n],
              "star": {"matrix": [[...]]}?},
  "comult": [[스칼라 × n²] × n],      # comult[k] = Δ(eₖ)
  "counit": [스칼라 × n],
  "left_integral": [스칼라 × n],
  "antipode": [[...]]?,                 # 주어지면 유도된 S 와 정확히 비교
  "pairing": [[...]]?                   # dual 출력에만 붙는다 (읽을 때는 무시)
}
"""

import json
import logging
from pathlib import Path

from algebra.structure import StructureAlgebra
from config.settings import MAX_DIM
from hypergroup.model import QuantumHypergroup
from hypergroup.pipeline import build_hypergroup
from linalg.matrix import Matrix
from parsers.errors import SchemaError
from parsers.scalar_text import format_matrix, format_vector, parse_matrix, parse_vector

logger = logging.getLogger(__name__)

_TOP_KEYS = {"algebra", "comult", "counit", "left_integral", "antipode", "pairing"}


def read_json(path: str | Path):
    """파일 → JSON. 디코드 오류는 SchemaError 로 바꾼다 (OSError 는 그대로)."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: JSON 형식 오류 ({exc.msg}, line {exc.lineno})") from exc


def _require(data: dict, key: str, where: str):
    if key not in data:
        raise SchemaError(f"{where}: '{key}' 가 없다")
    return data[key]


def parse_algebra(frag: dict) -> StructureAlgebra:
    if not isinstance(frag, dict):
        raise SchemaError("algebra 는 객체여야 한다")
    n = _require(frag, "dim", "algebra")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise SchemaError(f"algebra.dim 이 양의 정수가 아니다: {n!r}")
    if n > MAX_DIM:
        raise SchemaError(f"algebra.dim={n} 이 상한 {MAX_DIM} 을 넘는다")
    mult = _require(frag, "mult", "algebra")
    if not isinstance(mult, list) or len(mult) != n or any(
            not isinstance(row, list) or len(row) != n for row in mult):
        raise SchemaError(f"algebra.mult 는 {n}×{n} 목록이어야 한다")
    table = [[parse_vector(cell, n) for cell in row] for row in mult]
    labels = frag.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != n):
        raise SchemaError(f"algebra.labels 길이가 {n} 이 아니다")
    star = None
    if frag.get("star") is not None:
        star_frag = frag["star"]
        if not isinstance(star_frag, dict):
            raise SchemaError("algebra.star 는 {\"matrix\": ...} 여야 한다")
        star = parse_matrix(_require(star_frag, "matrix", "algebra.star"), n, n)
    return StructureAlgebra(table, labels=[str(x) for x in labels] if labels else None, star=star)


def parse_structure(data: dict) -> tuple:
    """(alg, comult, counit, left_integral, antipode | None)"""
    if not isinstance(data, dict):
        raise SchemaError("최상위는 객체여야 한다")
    unknown = set(data) - _TOP_KEYS
    if unknown:
        raise SchemaError(f"알 수 없는 키: {sorted(unknown)}")
    alg = parse_algebra(_require(data, "algebra", "root"))
    n = alg.dim
    comult_rows = _require(data, "comult", "root")
    if not isinstance(comult_rows, list) or len(comult_rows) != n:
        raise SchemaError(f"comult 는 기저마다 하나씩 {n} 개여야 한다")
    comult = Matrix.from_columns([parse_vector(col, n * n) for col in comult_rows], n * n)
    counit = parse_vector(_require(data, "counit", "root"), n)
    left_integral = parse_vector(_require(data, "left_integral", "root"), n)
    antipode = None
    if data.get("antipode") is not None:
        antipode = parse_matrix(data["antipode"], n, n)
    return alg, comult, counit, left_integral, antipode


def import_structure_json(source) -> QuantumHypergroup:
    """경로 또는 이미 읽은 dict → 전체 파이프라인을 통과한 QuantumHypergroup"""
    data = source if isinstance(source, dict) else read_json(source)
    alg, comult, counit, left_integral, antipode = parse_structure(data)
    logger.info("[입력] dim=%d 구조 읽음", alg.dim)
    return build_hypergroup(alg, comult, counit, left_integral, antipode=antipode)


def hypergroup_to_json(h: QuantumHypergroup, include_antipode: bool = True) -> dict:
    alg = h.alg
    n = h.dim
    frag = {
        "dim": n,
        "labels": list(alg.labels),
        "mult": [[format_vector(alg.mult[i][j]) for j in range(n)] for i in range(n)],
    }
    if alg.star is not None:
        frag["star"] = {"matrix": format_matrix(alg.star)}
    out = {
        "algebra": frag,
        "comult": [format_vector(t) for t in h.coproducts],
        "counit": format_vector(h.counit),
        "left_integral": format_vector(h.left_integral),
    }
    if include_antipode and h.derived is not None:
        out["antipode"] = format_matrix(h.data.S)
    return out


def dual_to_json(pkg) -> dict:
    """쌍대 구조 + "pairing" (Pᵢⱼ = ⟨ωᵢ, eⱼ⟩)"""
    out = hypergroup_to_json(pkg.dual)
    out["pairing"] = format_matrix(pkg.pairing)
    return out
