import json

import pytest
from openpyxl import load_workbook

from analysis.suite import make_report, run_suite
from output.excel_writer import generate_excel
from output.json_writer import dumps, write_json
from output.report_writer import render_markdown, save_report


@pytest.fixture
def report(s3h12_json):
    return make_report(s3h12_json, run_suite(s3h12_json, "full"))


@pytest.fixture
def failing_report(s3h12_json):
    s3h12_json["counit"] = ["1", "1"]
    return make_report(s3h12_json, run_suite(s3h12_json, "full"))


def test_dumps_is_sorted_and_stable():
    text = dumps({"b": 1, "a": [1, "½"]})
    assert text.index('"a"') < text.index('"b"')
    assert "½" in text
    assert text.endswith("\n")
    assert dumps(json.loads(text)) == text


def test_write_json_to_file_and_stdout(tmp_path, capsys):
    path = write_json({"x": "1/2"}, tmp_path / "sub" / "out.json")
    assert json.loads(path.read_text(encoding="utf-8")) == {"x": "1/2"}
    assert write_json([1]) is None
    assert json.loads(capsys.readouterr().out) == [1]


def test_markdown_report_sections(report):
    text = render_markdown(report, "s3h12")
    assert text.startswith("# 양자 하이퍼그룹 검증 리포트: s3h12")
    assert "✅ 통과" in text
    assert "| τ | 1 |" in text
    assert "### 쌍대적분 공간" in text
    assert "#### σ′" in text
    assert "## 실패 항목" not in text
    assert text == render_markdown(report, "s3h12")


def test_markdown_lists_failures(failing_report):
    text = render_markdown(failing_report)
    assert "❌ 실패" in text
    assert "**counit-left**" in text


def test_save_report_default_path(report, tmp_path, monkeypatch):
    monkeypatch.setattr("output.report_writer.REPORTS_DIR", tmp_path)
    path = save_report(report)
    assert path.parent == tmp_path
    assert path.name.startswith(report["input_digest"][:12])


def test_excel_workbook(report, tmp_path):
    path = generate_excel(report, tmp_path / "r.xlsx", "s3h12")
    wb = load_workbook(path)
    assert wb.sheetnames == ["요약", "검증", "행렬"]
    assert wb["요약"]["A1"].value == "s3h12"
    checks = wb["검증"]
    assert checks["A1"].value == "이름"
    assert checks.max_row == len(report["checks"]) + 1
    assert checks["C2"].value == "pass"


def test_excel_marks_failures(failing_report, tmp_path):
    wb = load_workbook(generate_excel(failing_report, tmp_path / "f.xlsx"))
    statuses = [row[2].value for row in wb["검증"].iter_rows(min_row=2)]
    assert "fail" in statuses
