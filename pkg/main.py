"""qhg: 유한차원 대수적 양자 하이퍼그룹 정확 검증 도구

사용법:
    python main.py build double-coset --group s3 --subgroup data/groups/h12.json --out s3h12.json
    python main.py build compression --group s3 --unit hecke:data/groups/h12.json --out c.json
    python main.py build compression --algebra cs3.json --unit hecke:h12 --out c.json
    python main.py verify s3h12.json --level full
    python main.py verify a.json b.json --jobs 2 --out reports.json
    python main.py dual s3h12.json --out dual.json
    python main.py bidual s3h12.json
    python main.py report s3h12.json --out s3h12.md --xlsx s3h12.xlsx

종료 코드: 0 = 전부 통과, 1 = 검증 실패, 2 = 입력 오류.
"""

import argparse
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

# 프로젝트 루트를 path에 추가
sys.path.insert(0, str(Path(__file__).parent))

from analysis.suite import LEVELS, make_report, run_suite, type_label
from config.checks import all_passed
from config.settings import DEFAULT_JOBS, LOG_FORMAT, LOG_LEVEL, TOOL_NAME, TOOL_VERSION
from constructions.compression import compress, hecke_unit
from constructions.double_coset import double_coset_hypergroup, function_algebra
from constructions.group_algebra import group_algebra_hopf, group_from_algebra
from constructions.sweedler import sweedler_fixture
from duality.bidual import bidual_check
from duality.dual import build_dual
from hypergroup.cointegrals import classify_type
from hypergroup.errors import ValidationFailed
from hypergroup.relations import coproduct_is_homomorphism
from output.excel_writer import generate_excel
from output.json_writer import dumps, write_json
from output.report_writer import render_markdown, save_report
from parsers.errors import SchemaError
from parsers.group_json import load_group, load_subgroup, resolve_path
from parsers.scalar_text import parse_vector
from parsers.structure_json import dual_to_json, hypergroup_to_json, import_structure_json, read_json

logger = logging.getLogger(TOOL_NAME)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
BUILD_KINDS = ("double-coset", "group-algebra", "function-algebra", "compression", "sweedler")


# ============================================================
# build
# ============================================================

def _need(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise SchemaError(f"build {args.kind}: --{name} 가 필요하다")
    return value


def _unit_vector(unit: str, args, algebra):
    """--unit "hecke:<부분군 파일>" 또는 벡터 JSON 파일 ({"vector": [...]} 또는 목록).

    hecke 단위에 --group 이 없으면 --algebra 의 군대수 곱셈표에서 G 를 복원한다.
    """
    if unit.startswith("hecke:"):
        if args.group is None and args.algebra:
            G = group_from_algebra(algebra.alg)
        else:
            G = load_group(_need(args, "group"))
        H = load_subgroup(unit[len("hecke:"):], G)
        if G.order != algebra.dim:
            raise SchemaError(f"hecke 단위: |G|={G.order} 와 대수 차원 {algebra.dim} 이 다르다")
        return hecke_unit(G, H, algebra)
    data = read_json(resolve_path(unit))
    values = data.get("vector") if isinstance(data, dict) else data
    return parse_vector(values, algebra.dim)


def _build(args):
    kind = args.kind
    if kind == "sweedler":
        return sweedler_fixture()
    if kind == "compression":
        if args.algebra:
            algebra = import_structure_json(resolve_path(args.algebra))
        else:
            algebra = group_algebra_hopf(load_group(_need(args, "group")))
        return compress(algebra, _unit_vector(_need(args, "unit"), args, algebra)).hypergroup
    G = load_group(_need(args, "group"))
    if kind == "double-coset":
        return double_coset_hypergroup(G, load_subgroup(_need(args, "subgroup"), G))
    if kind == "group-algebra":
        return group_algebra_hopf(G)
    return function_algebra(G)


def cmd_build(args) -> int:
    h = _build(args)
    write_json(hypergroup_to_json(h), args.out)
    kind = classify_type(h)
    label = type_label({"type": kind})
    line = (f"hypergroup: dim={h.dim} type={label} "
            f"Δ-hom={'yes' if coproduct_is_homomorphism(h) else 'no'}")
    print(line, file=sys.stdout if args.out else sys.stderr)
    return EXIT_OK


# ============================================================
# verify / report
# ============================================================

def _verify_one(path: str, level: str) -> tuple[int, dict]:
    try:
        data = read_json(path)
        result = run_suite(data, level)
    except (SchemaError, OSError) as exc:
        logger.error("[verify] %s: 입력 오류: %s", path, exc)
        return EXIT_INPUT, {"file": str(path), "error": "input", "message": str(exc)}
    report = make_report(data, result)
    return (EXIT_OK if result.passed else EXIT_FAIL), report


def cmd_verify(args) -> int:
    jobs = max(1, args.jobs)
    if jobs > 1 and len(args.files) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(lambda p: _verify_one(p, args.level), args.files))
    else:
        outcomes = [_verify_one(p, args.level) for p in args.files]

    reports = [report for _, report in outcomes]
    write_json(reports[0] if len(reports) == 1 else reports, args.out)
    codes = [code for code, _ in outcomes]
    if EXIT_INPUT in codes:
        return EXIT_INPUT
    return EXIT_FAIL if EXIT_FAIL in codes else EXIT_OK


def cmd_report(args) -> int:
    data = read_json(args.file)
    result = run_suite(data, args.level)
    report = make_report(data, result)
    name = Path(args.file).stem
    if args.out:
        save_report(report, args.out, name)
    else:
        sys.stdout.write(render_markdown(report, name))
    if args.xlsx:
        generate_excel(report, args.xlsx, name)
    return EXIT_OK if result.passed else EXIT_FAIL


# ============================================================
# dual / bidual
# ============================================================

def cmd_dual(args) -> int:
    pkg = build_dual(import_structure_json(args.file))
    write_json(dual_to_json(pkg), args.out)
    return EXIT_OK


def cmd_bidual(args) -> int:
    pkg = build_dual(import_structure_json(args.file))
    records = bidual_check(pkg)
    status = {r["name"]: r["status"] for r in records}
    iso = all(status.get(name) == "pass" for name in
              ("bidual-bijective", "bidual-product", "bidual-coproduct", "bidual-counit", "bidual-antipode"))
    lines = [
        f"Γ isomorphism: {'pass' if iso else 'fail'}",
        f"φ̂̂∘Γ=φ: {status.get('bidual-integral', 'fail')}",
    ]
    lines += [f"  {r['name']}: {r['status']}" for r in records]
    print("\n".join(lines))
    if args.out:
        write_json(records, args.out)
    return EXIT_OK if all_passed(records) else EXIT_FAIL


# ============================================================
# 진입점
# ============================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=TOOL_NAME,
                                     description="유한차원 대수적 양자 하이퍼그룹 정확 검증 도구")
    parser.add_argument("--version", action="version", version=f"{TOOL_NAME} {TOOL_VERSION}")
    parser.add_argument("-v", "--verbose", action="store_true", help="진행 로그 (INFO)")
    parser.add_argument("-q", "--quiet", action="store_true", help="오류 로그만")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="군 데이터에서 하이퍼그룹 JSON 생성")
    p.add_argument("kind", choices=BUILD_KINDS)
    p.add_argument("--group", help="군 JSON (또는 data/groups 의 이름)")
    p.add_argument("--subgroup", help="부분군 JSON")
    p.add_argument("--algebra", help="압축할 하이퍼그룹 JSON (없으면 --group 의 군대수)")
    p.add_argument("--unit", help="hecke:<부분군 JSON> 또는 벡터 JSON")
    p.add_argument("--out", help="출력 경로 (없으면 stdout)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="검증 리포트 (JSON)")
    p.add_argument("files", nargs="+")
    p.add_argument("--level", choices=LEVELS, default="full")
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=DEFAULT_JOBS, help="작업 스레드 수")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dual", help="쌍대 하이퍼그룹 JSON (+pairing)")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("bidual", help="이중쌍대 동형 Γ 검증")
    p.add_argument("file")
    p.add_argument("--out", help="검증 레코드 JSON 저장 경로")
    p.set_defaults(func=cmd_bidual)

    p = sub.add_parser("report", help="마크다운 / 엑셀 리포트")
    p.add_argument("file")
    p.add_argument("--level", choices=LEVELS, default="full")
    p.add_argument("--out", help="마크다운 저장 경로 (없으면 stdout)")
    p.add_argument("--xlsx", help="엑셀 저장 경로")
    p.set_defaults(func=cmd_report)
    return parser


def _configure_logging(args):
    level = LOG_LEVEL
    if args.verbose:
        level = "INFO"
    elif args.quiet:
        level = "ERROR"
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args)
    try:
        return args.func(args)
    except (SchemaError, OSError) as exc:
        print(f"입력 오류: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValidationFailed as exc:
        print(dumps(exc.as_dict()), end="", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
