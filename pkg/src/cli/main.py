"""
Kinvar 명령행 진입점

사용 예:
    python app.py binary-dim 4 3 --method cs
    python app.py --json springer 4 --trunc 12
    python app.py straighten "(13)(24)"
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass, field
from enum import Enum
import logging
import re
import sys
from typing import Any, Dict, Optional, Sequence, Tuple

import pandas as pd

from config.settings import CLI_CONSTANTS, SYMBOL_NAMES, VERIFICATION_DEFAULTS, resolve_truncation
from src.algebra.polynomial import SparsePolynomial
from src.cli.selftest import run_selftest
from src.cli.serialization import dumps
from src.forms.binary_form import BinaryForm, binary_coefficient_names, invariant_basis, reynolds
from src.forms.ternary_form import ternary_invariant_basis
from src.forms.transvectant import transvectant
from src.hilbert.counting import (
    bedratyuk_invariant_dim,
    bedratyuk_table,
    binary_invariant_dim,
    howe_dimension,
)
from src.hilbert.springer import covariant_table, springer_bigraded, springer_covariant_series
from src.molien.groups import SubgroupMode, available_groups, get_group
from src.molien.molien_series import molien_series
from src.points.line_graphs import GraphCombination, noncrossing_matchings
from src.points.six_points_line import coble_ring_checks
from src.points.six_points_plane import six_plane_checks
from src.tableaux.brackets import parse_bracket_expression, pluecker_straighten, symbolic_invariant
from src.tableaux.young import Tableau, parse_tableau

logger = logging.getLogger(__name__)

EXIT_CODES = CLI_CONSTANTS["exit_codes"]


class OutputFormat(Enum):
    """결과 출력 형식"""
    HUMAN = "human"
    JSON = "json"


@dataclass
class JobResult:
    """명령 실행 결과"""
    command: str                               # 하위 명령 이름
    result: Any                                # 계산 결과
    passed: Optional[bool] = None              # 검증 명령의 통과 여부 (계산 명령은 None)
    parameters: Dict[str, Any] = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        if self.passed is False:
            return EXIT_CODES["verification_failure"]
        return EXIT_CODES["ok"]


# --- 입력 해석 ---

_MONOMIAL_FACTOR = re.compile(r"([a-z])(\d+)(?:\^(\d+))?")


def parse_binary_monomial(text: str, d: int) -> SparsePolynomial:
    """'a0*a4', 'a0a4', 'a2^2' 형식의 계수 단항식

    Raises:
        ValueError: 해석할 수 없거나 범위를 벗어난 계수
    """
    prefix = SYMBOL_NAMES["binary_coefficient"]
    source = text.replace("*", "").replace(" ", "")
    if not source:
        raise ValueError("빈 단항식입니다.")
    pos = 0
    result = SparsePolynomial.constant(1, binary_coefficient_names(d))
    while pos < len(source):
        match = _MONOMIAL_FACTOR.match(source, pos)
        if not match or match.group(1) != prefix:
            raise ValueError(f"단항식을 해석할 수 없습니다: {source[pos:]!r} ({prefix}0..{prefix}{d} 만 허용)")
        index, power = int(match.group(2)), int(match.group(3) or 1)
        if index > d:
            raise ValueError(f"계수 {prefix}{index} 는 차수 {d} 형식에 없습니다.")
        result = result * SparsePolynomial.variable(f"{prefix}{index}") ** power
        pos = match.end()
    return result


def parse_tableau_text(text: str) -> Tuple[Tableau, int]:
    """타블로 문자열 또는 브래킷 단항식('[12]^4')을 (타블로, 부호) 로

    Raises:
        ValueError: 브래킷 단항식이 하나가 아니거나 계수가 ±1 이 아닌 경우
    """
    if not text.strip().startswith("["):
        return parse_tableau(text), 1
    expression = parse_bracket_expression(text)
    if len(expression.terms) != 1:
        raise ValueError(f"브래킷 단항식 하나만 타블로로 바꿀 수 있습니다: {text!r}")
    (columns, coeff), = expression.terms.items()
    if abs(coeff) != 1:
        raise ValueError(f"타블로 브래킷의 계수는 ±1 이어야 합니다: {coeff}")
    rows = [[col[i] for col in columns] for i in range(len(columns[0]))]
    return Tableau.from_rows(rows), int(coeff)


def _two_forms(d: int, e: int, same: bool):
    f = BinaryForm.symbolic(d)
    if same:
        if d != e:
            raise ValueError(f"--self 는 같은 차수에서만 쓸 수 있습니다. (d={d}, e={e})")
        return f, f
    g = BinaryForm.from_coefficients([SparsePolynomial.variable(f"b{i}") for i in range(e + 1)])
    return f, g


# --- 명령 처리기 ---

def _cmd_binary_invariants(args) -> JobResult:
    basis = invariant_basis(args.d, args.g)
    return JobResult("binary-invariants", basis, parameters={"d": args.d, "g": args.g})


def _cmd_binary_dim(args) -> JobResult:
    if args.method == "cs":
        dim = binary_invariant_dim(args.d, args.g)
    else:
        dim = len(invariant_basis(args.d, args.g))
    return JobResult("binary-dim", dim, parameters={"d": args.d, "g": args.g, "method": args.method})


def _cmd_reynolds(args) -> JobResult:
    monomial = parse_binary_monomial(args.monomial, args.d)
    return JobResult("reynolds", reynolds(monomial, args.d, args.g), parameters={"d": args.d, "g": args.g})


def _cmd_transvectant(args) -> JobResult:
    f, g = _two_forms(args.d, args.e, args.self_)
    result = transvectant(f, g, args.n)
    return JobResult("transvectant", result, parameters={"d": args.d, "e": args.e, "n": args.n})


def _cmd_ternary_invariants(args) -> JobResult:
    basis = ternary_invariant_basis(args.d, args.g)
    return JobResult("ternary-invariants", basis, parameters={"d": args.d, "g": args.g})


def _cmd_bedratyuk(args) -> JobResult:
    return JobResult("bedratyuk", bedratyuk_invariant_dim(args.d, args.g), parameters={"d": args.d, "g": args.g})


def _cmd_bedratyuk_table(args) -> JobResult:
    return JobResult("bedratyuk-table", bedratyuk_table(args.d, args.g), parameters={"d": args.d, "g": args.g})


def _cmd_springer(args) -> JobResult:
    if args.bigraded:
        series = springer_bigraded(args.d, args.trunc)
    else:
        series = springer_covariant_series(args.d, args.e, args.trunc)
    return JobResult("springer", series, parameters={"d": args.d, "e": args.e, "bigraded": args.bigraded})


def _cmd_covariant_table(args) -> JobResult:
    table = covariant_table(args.d, args.max_degree, args.max_order)
    return JobResult("covariant-table", table, parameters={"d": args.d, "max_degree": args.max_degree})


def _cmd_molien(args) -> JobResult:
    group, mode = get_group(args.group)
    if args.even:
        mode = SubgroupMode.EVEN
    series = molien_series(group.character(args.rep), group, mode, args.trunc)
    return JobResult("molien", series, parameters={"group": group.name, "rep": args.rep, "subgroup": mode.value})


def _cmd_howe(args) -> JobResult:
    return JobResult("howe", howe_dimension(args.d, args.k), parameters={"d": args.d, "k": args.k})


def _cmd_symbolic_expand(args) -> JobResult:
    tableau, sign = parse_tableau_text(args.tableau)
    content = tableau.content()
    counts = set(content.values())
    if len(counts) != 1:
        raise ValueError(f"모든 라벨이 같은 횟수만큼 나와야 합니다: {content}")
    d = counts.pop()
    n = tableau.shape.n_rows - 1
    result = symbolic_invariant(tableau, d, len(content), n)
    return JobResult("symbolic-expand", result.scale(sign), parameters={"tableau": str(tableau), "d": d, "n": n})


def _cmd_straighten(args) -> JobResult:
    text = args.expression.strip()
    if text.startswith("("):
        result = GraphCombination.parse(text).straighten()
        kind = "graph"
    else:
        result = pluecker_straighten(parse_bracket_expression(text))
        kind = "bracket"
    return JobResult("straighten", result, parameters={"kind": kind})


def _cmd_noncrossing(args) -> JobResult:
    matchings = noncrossing_matchings(args.d, args.weight)
    return JobResult("noncrossing", [str(m) for m in matchings], parameters={"d": args.d, "weight": args.weight})


def _cmd_six_line_checks(args) -> JobResult:
    report = coble_ring_checks(args.trials, args.seed)
    return JobResult("six-line-checks", report, passed=report.passed)


def _cmd_six_plane_checks(args) -> JobResult:
    table = six_plane_checks(args.trials, args.seed)
    passed = bool(table["passed"].all()) if len(table) else True
    return JobResult("six-plane-checks", table, passed=passed)


def _cmd_selftest(args) -> JobResult:
    table = run_selftest(args.seed, args.trials, args.only)
    return JobResult("selftest", table, passed=bool(table["passed"].all()))


# --- 파서 ---

def _add_dg(parser: argparse.ArgumentParser):
    parser.add_argument("d", type=int, help="형식 차수")
    parser.add_argument("g", type=int, help="불변식 차수")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kinvar",
        description="고전 불변식 이론 계산 도구 (정확한 유리수 연산)",
    )
    parser.add_argument("--json", action="store_true", help="JSON 형식으로 출력")
    parser.add_argument("--verbose", action="store_true", help="디버그 로그 출력")
    parser.add_argument("--seed", type=int, default=VERIFICATION_DEFAULTS["random_seed"], help="무작위 검증 시드")
    parser.add_argument("--trunc", type=int, default=None, help="급수 절단 차수 (기본 20 또는 KINVAR_TRUNCATION)")
    parser.add_argument("--trials", type=int, default=None, help="무작위 검증 반복 횟수")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("binary-invariants", help="이진 형식 불변식 기저 (커널 방법)")
    _add_dg(p)
    p.set_defaults(handler=_cmd_binary_invariants)

    p = sub.add_parser("binary-dim", help="이진 형식 불변식 공간 차원")
    _add_dg(p)
    p.add_argument("--method", choices=["kernel", "cs"], default="kernel", help="커널 방법 또는 케일리-실베스터")
    p.set_defaults(handler=_cmd_binary_dim)

    p = sub.add_parser("reynolds", help="레이놀즈 사영")
    _add_dg(p)
    p.add_argument("monomial", help="계수 단항식 (예: a0*a4)")
    p.set_defaults(handler=_cmd_reynolds)

    p = sub.add_parser("transvectant", help="(f, g)_n 트랜스벡턴트")
    p.add_argument("d", type=int, help="f 의 차수 (계수 a_i)")
    p.add_argument("e", type=int, help="g 의 차수 (계수 b_i)")
    p.add_argument("n", type=int, help="트랜스벡턴트 차수")
    p.add_argument("--self", dest="self_", action="store_true", help="g = f 로 계산")
    p.set_defaults(handler=_cmd_transvectant)

    p = sub.add_parser("ternary-invariants", help="삼진 형식 불변식 기저")
    _add_dg(p)
    p.set_defaults(handler=_cmd_ternary_invariants)

    p = sub.add_parser("bedratyuk", help="베드라튝 공식으로 삼진 불변식 차원")
    _add_dg(p)
    p.set_defaults(handler=_cmd_bedratyuk)

    p = sub.add_parser("bedratyuk-table", help="가중치 삼각형 h 표")
    _add_dg(p)
    p.set_defaults(handler=_cmd_bedratyuk_table)

    p = sub.add_parser("springer", help="스프링거 힐베르트 급수")
    p.add_argument("d", type=int, help="형식 차수")
    p.add_argument("e", type=int, nargs="?", default=0, help="공변식 위수 (기본 0)")
    p.add_argument("--bigraded", action="store_true", help="(차수, 위수) 이중 급수")
    p.set_defaults(handler=_cmd_springer)

    p = sub.add_parser("covariant-table", help="공변식 개수표")
    p.add_argument("d", type=int, help="형식 차수")
    p.add_argument("max_degree", type=int, help="최대 차수 g")
    p.add_argument("--max-order", type=int, default=None, help="최대 위수 e")
    p.set_defaults(handler=_cmd_covariant_table)

    p = sub.add_parser("molien", help="몰리엔 급수")
    p.add_argument("group", help=f"군 이름 ({', '.join(available_groups())})")
    p.add_argument("rep", help="표현 이름")
    p.add_argument("--even", action="store_true", help="짝치환 부분군으로 제한")
    p.set_defaults(handler=_cmd_molien)

    p = sub.add_parser("howe", help="직선 위 d 점의 하우 공식")
    p.add_argument("d", type=int, help="점 개수")
    p.add_argument("k", type=int, help="차수")
    p.set_defaults(handler=_cmd_howe)

    p = sub.add_parser("symbolic-expand", help="타블로 함수 전개 (예: 111122,223333 또는 [12]^4)")
    p.add_argument("tableau", help="타블로 문자열")
    p.set_defaults(handler=_cmd_symbolic_expand)

    p = sub.add_parser("straighten", help="직선화 ('(13)(24)' 그래프 또는 '[14][23]' 브래킷)")
    p.add_argument("expression", help="그래프 또는 브래킷 식")
    p.set_defaults(handler=_cmd_straighten)

    p = sub.add_parser("noncrossing", help="교차 없는 매칭 그래프")
    p.add_argument("d", type=int, help="점 개수")
    p.add_argument("weight", type=int, nargs="+", help="꼭짓점별 차수 h1 ... hd")
    p.set_defaults(handler=_cmd_noncrossing)

    p = sub.add_parser("six-line-checks", help="직선 위 여섯 점 관계 검증")
    p.set_defaults(handler=_cmd_six_line_checks)

    p = sub.add_parser("six-plane-checks", help="평면 위 여섯 점 크레모나 검증")
    p.set_defaults(handler=_cmd_six_plane_checks)

    p = sub.add_parser("selftest", help="전체 회귀 검사")
    p.add_argument("--only", nargs="+", default=None, help="실행할 검사 이름")
    p.set_defaults(handler=_cmd_selftest)
    return parser


# --- 출력 ---

def format_human(job: JobResult) -> str:
    result = job.result
    if isinstance(result, pd.DataFrame):
        return result.to_string(index=result.index.name is not None)
    if isinstance(result, list):
        if not result:
            return "(없음)"
        return "\n".join(str(item) for item in result)
    if hasattr(result, "passed") and not isinstance(result, pd.DataFrame):
        lines = [f"passed: {result.passed}"]
        lines += [f"{k}: {v}" for k, v in vars(result).items() if k != "details"]
        return "\n".join(lines)
    return str(result)


def format_json(job: JobResult) -> str:
    payload = {"command": job.command, "parameters": job.parameters, "result": job.result}
    if job.passed is not None:
        payload["passed"] = job.passed
    return dumps(payload)


def configure_logging(verbose: bool):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CODES["ok"] if exc.code == 0 else EXIT_CODES["usage_error"]
    if not getattr(args, "handler", None):
        parser.print_usage(sys.stderr)
        return EXIT_CODES["usage_error"]
    configure_logging(args.verbose)
    output = OutputFormat.JSON if args.json else OutputFormat(CLI_CONSTANTS["default_format"])
    try:
        args.trunc = resolve_truncation(args.trunc)
        job = args.handler(args)
    except ValueError as exc:
        print(f"오류: {exc}", file=sys.stderr)
        return EXIT_CODES["usage_error"]
    print(format_json(job) if output is OutputFormat.JSON else format_human(job))
    if job.passed is False:
        logger.warning(f"{job.command}: 검증 실패")
    return job.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
