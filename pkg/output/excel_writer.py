"""엑셀 검증 워크북 생성 모듈

시트 "요약"(차원·유형·δ·τ), "검증"(전체 검증 레코드), "행렬"(S, σ, σ′).
스칼라는 정확 분수 문자열 그대로 셀에 넣는다.
"""

import logging
from pathlib import Path

from openpyxl import Workbook
from openpyxl.styles import Alignment, Border, Font, PatternFill, Side
from openpyxl.utils import get_column_letter

from config.settings import REPORTS_DIR

logger = logging.getLogger(__name__)

# 스타일
HEADER_FONT = Font(bold=True, size=11)
TITLE_FONT = Font(bold=True, size=14)
SECTION_FONT = Font(bold=True, size=11, color="FFFFFF")
SECTION_FILL = PatternFill(start_color="4472C4", end_color="4472C4", fill_type="solid")
FAIL_FILL = PatternFill(start_color="F4CCCC", end_color="F4CCCC", fill_type="solid")
THIN_BORDER = Border(
    left=Side(style="thin"),
    right=Side(style="thin"),
    top=Side(style="thin"),
    bottom=Side(style="thin"),
)
WRAP_ALIGNMENT = Alignment(wrap_text=True, vertical="top")


def _text(val) -> str:
    if isinstance(val, dict):
        return f"{val.get('re', '0')}+{val.get('im', '0')}i"
    if isinstance(val, (list, tuple)):
        return "(" + ", ".join(_text(v) for v in val) + ")"
    if isinstance(val, bool):
        return "예" if val else "아니오"
    return "" if val is None else str(val)


def _write_section_header(ws, row: int, title: str, cols: int):
    for c in range(1, cols + 1):
        cell = ws.cell(row=row, column=c)
        cell.fill = SECTION_FILL
        cell.font = SECTION_FONT
    ws.cell(row=row, column=1, value=title)


def _summary_sheet(ws, report: dict, name: str):
    summary = report.get("summary", {})
    ws.column_dimensions["A"].width = 22
    ws.column_dimensions["B"].width = 60
    ws.cell(row=1, column=1, value=name or "양자 하이퍼그룹").font = TITLE_FONT
    ws.merge_cells(start_row=1, start_column=1, end_row=1, end_column=2)
    row = 3
    _write_section_header(ws, row, "요약", 2)
    row += 1
    items = [
        ("도구", f"{report.get('tool')} {report.get('version')}"),
        ("입력 다이제스트", report.get("input_digest")),
        ("수준", report.get("level")),
        ("결과", report.get("status")),
        ("차원", summary.get("dim")),
    ]
    kind = summary.get("type", {})
    for key in ("unital", "compact", "discrete", "finite"):
        if key in kind:
            items.append((key, kind[key]))
    for key, label in (("delta", "δ"), ("delta_inv", "δ⁻¹"), ("tau", "τ"),
                       ("antipode_square_identity", "S² = id"),
                       ("coproduct_homomorphism", "Δ 준동형")):
        if key in summary:
            items.append((label, summary[key]))
    if "dual" in summary:
        items.append(("δ̂ (A 위 함수)", summary["dual"]["delta_functional"]))
        items.append(("τ̂", summary["dual"]["tau"]))
    for label, val in items:
        ws.cell(row=row, column=1, value=label).font = HEADER_FONT
        ws.cell(row=row, column=2, value=_text(val))
        row += 1
    for r in range(3, row):
        for c in (1, 2):
            ws.cell(row=r, column=c).border = THIN_BORDER


def _checks_sheet(ws, checks: list[dict]):
    for i, w in enumerate((34, 48, 8, 48), 1):
        ws.column_dimensions[get_column_letter(i)].width = w
    for c, title in enumerate(("이름", "항등식", "결과", "증인"), 1):
        ws.cell(row=1, column=c, value=title).font = HEADER_FONT
    for r, check in enumerate(checks, 2):
        values = (check["name"], check["anchor"], check["status"],
                  "" if check.get("witness") is None else str(check["witness"]))
        for c, val in enumerate(values, 1):
            cell = ws.cell(row=r, column=c, value=val)
            cell.border = THIN_BORDER
            cell.alignment = WRAP_ALIGNMENT
            if check["status"] != "pass":
                cell.fill = FAIL_FILL


def _matrix_sheet(ws, summary: dict):
    labels = summary.get("labels") or []
    n = len(labels)
    ws.column_dimensions["A"].width = 14
    row = 1
    for key, title in (("antipode", "S"), ("sigma", "σ"), ("sigma_prime", "σ′")):
        rows = summary.get(key)
        if not rows:
            continue
        _write_section_header(ws, row, title, n + 1)
        row += 1
        for c, label in enumerate(labels, 2):
            ws.cell(row=row, column=c, value=label).font = HEADER_FONT
        row += 1
        for i, values in enumerate(rows):
            ws.cell(row=row, column=1, value=labels[i]).font = HEADER_FONT
            for j, val in enumerate(values, 2):
                ws.cell(row=row, column=j, value=_text(val)).border = THIN_BORDER
            row += 1
        row += 1


def generate_excel(report: dict, path: str | Path | None = None, name: str = "") -> Path:
    """검증 리포트를 엑셀 워크북으로 저장한다."""
    if path is None:
        REPORTS_DIR.mkdir(parents=True, exist_ok=True)
        path = REPORTS_DIR / f"{report.get('input_digest', 'report')[:12]}_검증.xlsx"
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    wb = Workbook()
    ws = wb.active
    ws.title = "요약"
    _summary_sheet(ws, report, name)
    _checks_sheet(wb.create_sheet("검증"), report.get("checks", []))
    _matrix_sheet(wb.create_sheet("행렬"), report.get("summary", {}))

    wb.save(path)
    logger.info("[엑셀] 저장 완료: %s", path)
    return path
