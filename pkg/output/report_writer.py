"""마크다운 리포트 생성 모듈

검증 리포트(dict)를 사람이 읽는 마크다운으로 옮긴다.
요약 → 유도 데이터 → 실패 항목 → 부록(전체 검증 표) 순서.
"""

import logging
from pathlib import Path

from config.settings import REPORTS_DIR

logger = logging.getLogger(__name__)


def _fmt_vec(values) -> str:
    if values is None:
        return "-"
    return "(" + ", ".join(_fmt_scalar(v) for v in values) + ")"


def _fmt_scalar(val) -> str:
    if isinstance(val, dict):
        re_part, im_part = val.get("re", "0"), val.get("im", "0")
        return f"{re_part}+{im_part}i"
    return str(val)


def _matrix_table(title: str, rows: list, labels: list) -> list[str]:
    lines = [f"#### {title}\n"]
    lines.append("| | " + " | ".join(labels) + " |")
    lines.append("|---" * (len(labels) + 1) + "|")
    # 행렬 열 j = 기저 j 의 상
    for i, row in enumerate(rows):
        lines.append(f"| {labels[i]} | " + " | ".join(_fmt_scalar(v) for v in row) + " |")
    lines.append("")
    return lines


def render_markdown(report: dict, name: str = "") -> str:
    summary = report.get("summary", {})
    checks = report.get("checks", [])
    passed = sum(1 for c in checks if c["status"] == "pass")
    status = "✅ 통과" if report.get("status") == "pass" else "❌ 실패"

    parts = [f"# 양자 하이퍼그룹 검증 리포트{': ' + name if name else ''}\n"]
    parts.append(f"- 도구: {report.get('tool')} {report.get('version')}")
    parts.append(f"- 입력 다이제스트: `{report.get('input_digest')}`")
    parts.append(f"- 수준: {report.get('level')}")
    parts.append(f"- 결과: {status} ({passed}/{len(checks)})\n")

    parts.append("## 요약\n")
    parts.append("| 항목 | 값 |")
    parts.append("|------|----|")
    parts.append(f"| 차원 | {summary.get('dim', '-')} |")
    kind = summary.get("type")
    if kind:
        flags = ", ".join(k for k in ("unital", "compact", "discrete", "finite") if kind.get(k)) or "-"
        parts.append(f"| 유형 | {flags} |")
    if "delta" in summary:
        parts.append(f"| δ | {_fmt_vec(summary['delta'])} |")
        parts.append(f"| δ⁻¹ | {_fmt_vec(summary['delta_inv'])} |")
        parts.append(f"| τ | {summary['tau']} |")
        parts.append(f"| S² = id | {'예' if summary.get('antipode_square_identity') else '아니오'} |")
        parts.append(f"| Δ 준동형 | {'예' if summary.get('coproduct_homomorphism') else '아니오'} |")
    dual = summary.get("dual")
    if dual:
        parts.append(f"| δ̂ (ω 계수) | {_fmt_vec(dual['delta'])} |")
        parts.append(f"| δ̂ (A 위 함수) | {_fmt_vec(dual['delta_functional'])} |")
        parts.append(f"| τ̂ | {dual['tau']} |")
    parts.append("")

    cointegrals = summary.get("cointegrals")
    if cointegrals:
        parts.append("### 쌍대적분 공간\n")
        for side in ("left", "right"):
            vectors = cointegrals.get(side, [])
            shown = ", ".join(_fmt_vec(v) for v in vectors) or "없음"
            parts.append(f"- {side}: {shown}")
        parts.append("")

    labels = summary.get("labels")
    if labels and "sigma" in summary:
        parts.append("### 유도 행렬\n")
        parts.extend(_matrix_table("S", summary["antipode"], labels))
        parts.extend(_matrix_table("σ", summary["sigma"], labels))
        parts.extend(_matrix_table("σ′", summary["sigma_prime"], labels))

    failures = [c for c in checks if c["status"] != "pass"]
    if failures:
        parts.append("## 실패 항목\n")
        for c in failures:
            parts.append(f"- **{c['name']}** `{c['anchor']}`, 증인: `{c.get('witness')}`")
        parts.append("")

    parts.append("\n---\n\n## 부록: 전체 검증 결과\n")
    parts.append("| 이름 | 항등식 | 결과 |")
    parts.append("|------|--------|------|")
    for c in checks:
        mark = "pass" if c["status"] == "pass" else "**fail**"
        parts.append(f"| {c['name']} | `{c['anchor']}` | {mark} |")
    parts.append("")
    return "\n".join(parts)


def save_report(report: dict, path: str | Path | None = None, name: str = "") -> Path:
    """마크다운 리포트를 저장한다. path 가 없으면 REPORTS_DIR/<다이제스트 앞 12자>.md"""
    if path is None:
        REPORTS_DIR.mkdir(parents=True, exist_ok=True)
        path = REPORTS_DIR / f"{report.get('input_digest', 'report')[:12]}_검증.md"
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_markdown(report, name), encoding="utf-8")
    logger.info("[리포트] 저장 완료: %s", path)
    return path
