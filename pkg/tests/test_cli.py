"""명령행 인터페이스와 JSON 직렬화 테스트"""
import json
from fractions import Fraction

import pandas as pd
import pytest

from src.algebra.polynomial import symbols
from src.cli.main import (
    JobResult,
    format_human,
    format_json,
    main,
    parse_binary_monomial,
    parse_tableau_text,
)
from src.cli.selftest import SELFTEST_CHECKS, run_selftest
from src.cli.serialization import (
    fraction_from_json,
    fraction_to_json,
    polynomial_from_json,
    series_from_json,
)
from src.points.six_points_line import CobleReport


@pytest.fixture
def quartic_I():
    a0, a1, a2, a3, a4 = symbols("a0 a1 a2 a3 a4")
    return a0 * a4 - 4 * a1 * a3 + 3 * a2 ** 2


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.strip(), captured.err


# --- 입력 해석 ---

class TestParsing:
    """명령행 인자 해석 테스트"""

    @pytest.mark.parametrize("text", ["a0*a4", "a0a4", "a0 * a4"])
    def test_monomial_forms(self, text):
        a0, a4 = symbols("a0 a4")
        assert parse_binary_monomial(text, 4) == a0 * a4

    def test_monomial_power(self):
        (a2,) = symbols("a2")
        assert parse_binary_monomial("a2^2", 4) == a2 ** 2

    def test_monomial_out_of_range(self):
        with pytest.raises(ValueError, match="형식에 없습니다"):
            parse_binary_monomial("a5", 4)

    def test_monomial_wrong_prefix(self):
        with pytest.raises(ValueError, match="해석할 수 없습니다"):
            parse_binary_monomial("b1", 4)

    def test_monomial_empty(self):
        with pytest.raises(ValueError, match="빈 단항식"):
            parse_binary_monomial(" ", 4)

    def test_tableau_string(self):
        tableau, sign = parse_tableau_text("111122,223333")
        assert str(tableau) == "111122,223333"
        assert sign == 1

    def test_bracket_sugar(self):
        tableau, sign = parse_tableau_text("[12]^4")
        assert str(tableau) == "1111,2222"
        assert sign == 1

    def test_bracket_sign(self):
        tableau, sign = parse_tableau_text("[21]")
        assert str(tableau) == "1,2"
        assert sign == -1

    def test_bracket_sum_rejected(self):
        with pytest.raises(ValueError, match="하나만"):
            parse_tableau_text("[12] + [34]")


# --- 명령 실행 ---

class TestCommands:
    """하위 명령 실행 테스트"""

    def test_binary_dim_cs(self, capsys):
        code, out, _ = _run(capsys, "binary-dim", "4", "3", "--method", "cs")
        assert code == 0
        assert out == "1"

    def test_binary_dim_kernel(self, capsys):
        code, out, _ = _run(capsys, "binary-dim", "6", "4")
        assert code == 0
        assert out == "2"

    def test_bedratyuk(self, capsys):
        code, out, _ = _run(capsys, "bedratyuk", "4", "3")
        assert code == 0
        assert out == "1"

    def test_howe(self, capsys):
        assert _run(capsys, "howe", "8", "1")[1] == "14"

    def test_graph_straighten(self, capsys):
        code, out, _ = _run(capsys, "straighten", "(13)(24)")
        assert code == 0
        assert out == "(12)(34) + (14)(23)"

    def test_bracket_straighten(self, capsys):
        assert _run(capsys, "straighten", "[14][23]")[1] == "-[12][34] + [13][24]"

    def test_noncrossing(self, capsys):
        code, out, _ = _run(capsys, "noncrossing", "4", "1", "1", "1", "1")
        assert code == 0
        assert out.splitlines() == ["(12)(34)", "(14)(23)"]

    def test_reynolds_json(self, capsys, quartic_I):
        code, out, _ = _run(capsys, "--json", "reynolds", "4", "2", "a2^2")
        assert code == 0
        payload = json.loads(out)
        assert payload["command"] == "reynolds"
        assert polynomial_from_json(payload["result"]) == quartic_I.scale(Fraction(1, 15))

    def test_symbolic_expand_json(self, capsys, quartic_I):
        code, out, _ = _run(capsys, "--json", "symbolic-expand", "[12]^4")
        assert code == 0
        assert polynomial_from_json(json.loads(out)["result"]) == 2 * quartic_I

    def test_springer_json(self, capsys):
        code, out, _ = _run(capsys, "--json", "--trunc", "6", "springer", "4")
        assert code == 0
        series = series_from_json(json.loads(out)["result"])
        assert series.truncation == 6
        assert [int(c) for c in series.coefficients()] == [1, 0, 1, 1, 1, 1, 2]

    def test_molien(self, capsys):
        code, out, _ = _run(capsys, "--trunc", "4", "molien", "S4", "W")
        assert code == 0
        assert "O(deg 5)" in out

    def test_covariant_table(self, capsys):
        code, out, _ = _run(capsys, "covariant-table", "3", "2", "--max-order", "3")
        assert code == 0
        assert "degree" in out

    def test_selftest_subset(self, capsys):
        code, out, _ = _run(capsys, "--json", "selftest", "--only", "howe", "reynolds")
        assert code == 0
        payload = json.loads(out)
        assert payload["passed"] is True
        assert {row["name"] for row in payload["result"]} == {"howe", "reynolds"}


class TestExitCodes:
    """종료 코드 테스트"""

    def test_no_command(self, capsys):
        code, _, err = _run(capsys)
        assert code == 1
        assert "usage" in err

    def test_unknown_command(self, capsys):
        assert _run(capsys, "frobnicate")[0] == 1

    def test_help(self, capsys):
        code, out, _ = _run(capsys, "--help")
        assert code == 0
        assert "kinvar" in out

    def test_value_error(self, capsys):
        code, _, err = _run(capsys, "howe", "5", "1")
        assert code == 1
        assert "오류" in err

    def test_unknown_group(self, capsys):
        code, _, err = _run(capsys, "molien", "S7", "W")
        assert code == 1
        assert "지원하지 않는 군" in err

    def test_unknown_selftest_name(self, capsys):
        assert _run(capsys, "selftest", "--only", "nope")[0] == 1

    def test_verification_failure(self):
        job = JobResult("six-line-checks", CobleReport(), passed=False)
        assert job.exit_code == 2
        assert JobResult("howe", 5).exit_code == 0


# --- 출력 형식 ---

class TestFormatting:
    """사람용/JSON 출력 테스트"""

    def test_human_report(self):
        text = format_human(JobResult("six-line-checks", CobleReport(trials=3), passed=False))
        assert text.splitlines()[0] == "passed: False"
        assert "trials: 3" in text

    def test_human_empty_list(self):
        assert format_human(JobResult("noncrossing", [])) == "(없음)"

    def test_human_dataframe(self):
        df = pd.DataFrame({"a": [1, 2]})
        assert "a" in format_human(JobResult("table", df))

    def test_json_fraction(self):
        payload = json.loads(format_json(JobResult("x", Fraction(-3, 4))))
        assert payload["result"] == "-3/4"
        assert "passed" not in payload

    def test_fraction_roundtrip(self):
        assert fraction_from_json(fraction_to_json(Fraction(5, 7))) == Fraction(5, 7)
        assert fraction_from_json("3") == 3

    def test_fraction_garbage(self):
        with pytest.raises(ValueError, match="유리수 문자열"):
            fraction_from_json("x/y")


class TestSelftest:
    """회귀 검사 모음 테스트"""

    def test_names_unique(self):
        names = [check.name for check in SELFTEST_CHECKS]
        assert len(names) == len(set(names))

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            run_selftest(only=["nope"])

    def test_columns(self):
        df = run_selftest(seed=1, trials=2, only=["quartic_invariants", "molien"])
        assert list(df.columns) == ["name", "description", "passed", "detail", "seconds"]
        assert df["passed"].all()

    def test_bedratyuk_and_schur_pass(self):
        df = run_selftest(only=["bedratyuk", "schur"]).set_index("name")
        assert df["passed"].all()
        assert "[23, 19, 19, 15, 16, 15]" in df.loc["bedratyuk", "detail"]
        assert "(0,): 1}" in df.loc["schur", "detail"]

    def test_aronhold_uses_recorded_ratio(self):
        df = run_selftest(seed=3, trials=3, only=["aronhold"])
        assert df["passed"].all()
        assert "-3" in df.iloc[0]["detail"]

    def test_kempe_detail_plain_numbers(self):
        detail = run_selftest(only=["kempe"]).iloc[0]["detail"]
        assert "Fraction" not in detail
        assert "t0 = (-1, -1, 1, 1, 1)" in detail

    def test_full_run_passes(self, capsys):
        """전체 회귀 검사: 모든 항목 통과, 종료 코드 0"""
        code, out, _ = _run(capsys, "--json", "selftest")
        payload = json.loads(out)
        failed = [row["name"] for row in payload["result"] if not row["passed"]]
        assert failed == []
        assert len(payload["result"]) == len(SELFTEST_CHECKS)
        assert code == 0
