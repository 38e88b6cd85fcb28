"""
공개 상수 회귀 검사 모듈

알려진 불변식, 차원, 힐베르트 급수, 항등식을 한 번에 재계산해
DataFrame 으로 보고합니다. 무작위 검사는 시드로 재현됩니다.
"""
from dataclasses import dataclass
from fractions import Fraction
import time
from typing import Callable, List, Optional, Tuple
import logging

import pandas as pd

from config.settings import ALGEBRA_CONSTANTS, VERIFICATION_DEFAULTS
from src.algebra.algebra_utils import make_rng, random_rational_vector
from src.algebra.polynomial import SparsePolynomial
from src.algebra.series import one_minus, series_matches_rational
from src.forms.aronhold import aronhold_invariant, aronhold_pfaffian
from src.forms.binary_form import (
    BinaryForm,
    apply_D,
    apply_Delta,
    invariant_basis,
    reynolds,
    weighted_exponents,
)
from src.forms.ternary_form import (
    TernaryForm,
    cubic_invariant_A,
    ternary_invariant_basis,
    ternary_isobaric_monomials,
)
from src.forms.transvectant import cubic_covariant_suite, gherardelli_determinant, quartic_invariants
from src.hilbert.counting import (
    bedratyuk_h,
    bedratyuk_invariant_dim,
    binary_invariant_dim,
    howe_dimension,
    howe_series,
    ternary_weight_enumerator,
)
from src.hilbert.springer import springer_bigraded, springer_covariant_series
from src.molien.groups import get_group
from src.molien.molien_series import molien_series
from src.points.line_graphs import GraphCombination, graph_evaluate, graph_straighten, noncrossing_matchings
from src.points.six_points_line import (
    SIX_CYCLE,
    TRANSPOSITION_12,
    coble_ring_checks,
    joubert_permutation_action,
    random_line_configuration,
    t_coordinates,
    t_graph,
)
from src.points.six_points_plane import PlaneConfig, verify_plane_configuration
from src.tableaux.schur import plethysm_character, sl_decompose
from src.tableaux.young import semistandard_tableaux

logger = logging.getLogger(__name__)

CheckResult = Tuple[bool, str]


@dataclass(frozen=True)
class SelftestCheck:
    """회귀 검사 항목"""
    name: str                                      # 검사 이름
    description: str                               # 확인하는 내용
    run: Callable[[int, int], CheckResult]         # (시드, 시행 횟수) → (통과 여부, 상세)


def _t():
    return SparsePolynomial.variable("t")


def _z():
    return SparsePolynomial.variable("z")


# --- 이진 형식 ---

def _check_quartic_invariants(seed: int, trials: int) -> CheckResult:
    I, J = quartic_invariants(BinaryForm.symbolic(4))
    basis2 = invariant_basis(4, 2)
    basis3 = invariant_basis(4, 3)
    ok = basis2 == [I] and basis3 == [J]
    return ok, f"I = {basis2[0] if basis2 else None}, J = {basis3[0] if basis3 else None}"


def _check_reynolds(seed: int, trials: int) -> CheckResult:
    I, _ = quartic_invariants(BinaryForm.symbolic(4))
    a = [SparsePolynomial.variable(f"a{i}") for i in range(5)]
    expected = [
        (a[0] * a[4], I.scale(Fraction(2, 5))),
        (a[1] * a[3], I.scale(Fraction(-1, 10))),
        (a[2] * a[2], I.scale(Fraction(1, 15))),
    ]
    ok = all(reynolds(m, 4, 2) == target for m, target in expected)
    for i in range(5):
        for j in range(i, 5):
            if i + j != 4:
                ok = ok and reynolds(a[i] * a[j], 4, 2).is_zero()
    return ok, "R(a0a4) = 2/5 I, R(a1a3) = -1/10 I, R(a2²) = 1/15 I"


def _check_cubic_syzygy(seed: int, trials: int) -> CheckResult:
    suite = cubic_covariant_suite(BinaryForm.symbolic(3))
    return suite.syzygy_holds, "36H³ + 9Δf² + Q² = 0"


def _check_gherardelli(seed: int, trials: int) -> CheckResult:
    f = BinaryForm.symbolic(4)
    I, J = quartic_invariants(f)
    t = _t()
    expansion = gherardelli_determinant(f).determinant
    expected = t ** 3 / 2 - t * I / 2 + J
    return expansion == expected, "det = t³/2 - (I/2)t + J"


def _check_cs_vs_kernel(seed: int, trials: int) -> CheckResult:
    mismatches = []
    for d in range(1, 7):
        for g in range(1, 9):
            if (d * g) % 2:
                continue
            if binary_invariant_dim(d, g) != len(invariant_basis(d, g)):
                mismatches.append((d, g))
    return not mismatches, f"불일치 {mismatches}" if mismatches else "d <= 6, g <= 8 일치"


def _check_commutator(seed: int, trials: int) -> CheckResult:
    for d in range(1, 6):
        for g in range(1, 5):
            variables = tuple(f"a{i}" for i in range(d + 1))
            for p in range(d * g + 1):
                for exps in weighted_exponents(d, g, p):
                    m = SparsePolynomial(variables, {exps: 1})
                    bracket = apply_D(apply_Delta(m, d), d) - apply_Delta(apply_D(m, d), d)
                    if bracket != m.scale(d * g - 2 * p):
                        return False, f"d={d}, g={g}, 단항식 {m}"
    return True, "[D, Δ] = (dg - 2p)·id (d <= 5, g <= 4)"


# --- 삼진 형식 ---

def _check_isobaric_counts(seed: int, trials: int) -> CheckResult:
    s43 = ternary_isobaric_monomials(4, 3)
    s36 = ternary_isobaric_monomials(3, 6)
    got = (len(s43), s43.total_monomials, len(s36), s36.total_monomials)
    return got == (23, 680, 103, 5005), f"{got}"


def _check_bedratyuk(seed: int, trials: int) -> CheckResult:
    enumerator = ternary_weight_enumerator(4, 3)
    hexagon = [
        bedratyuk_h(enumerator, 4, 3, *triple)
        for triple in [(4, 4, 4), (5, 3, 4), (3, 4, 5), (5, 2, 5), (3, 3, 6), (4, 2, 6)]
    ]
    dim = bedratyuk_invariant_dim(4, 3, enumerator)
    return hexagon == [23, 19, 19, 15, 16, 15] and dim == 1, f"h = {hexagon}, dim = {dim}"


def _check_cubic_invariant_A(seed: int, trials: int) -> CheckResult:
    basis = ternary_invariant_basis(4, 3)
    A = cubic_invariant_A()
    ok = len(basis) == 1 and basis[0].is_proportional_to(A) and len(A) == 23
    return ok, f"항 {len(A)}개, 비 {basis[0].ratio_to(A) if basis else None}"


def _check_aronhold(seed: int, trials: int) -> CheckResult:
    S = aronhold_invariant()
    rng = make_rng(seed)
    expected = Fraction(ALGEBRA_CONSTANTS["aronhold_pfaffian_ratio"])
    checked = 0
    ok = len(S) == 25
    for _ in range(trials):
        phi = TernaryForm(3, tuple(random_rational_vector(rng, 10)))
        pf = aronhold_pfaffian(phi)
        value = S.evaluate({name: c.constant_value() for name, c in phi.coefficient_map().items()})
        if not value:
            continue
        checked += 1
        if Fraction(pf) / value != expected:
            return False, f"파피안/불변식 = {Fraction(pf) / value} (기대값 {expected})"
    fermat = TernaryForm.from_coefficients(3, {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1})
    ok = ok and checked > 0 and aronhold_pfaffian(fermat) == 0
    return ok, f"25항, 파피안/불변식 = {expected} ({checked}회)"


# --- 급수 ---

def _check_springer(seed: int, trials: int) -> CheckResult:
    z = "z"
    f3 = springer_covariant_series(3, 0, 20)
    f4 = springer_covariant_series(4, 0, 20)
    ok = series_matches_rational(f3, 1, [one_minus({z: 4})])
    ok = ok and series_matches_rational(f4, 1, [one_minus({z: 2}), one_minus({z: 3})])
    zz, w = _z(), SparsePolynomial.variable("w")
    F3 = springer_bigraded(3, 20)
    F4 = springer_bigraded(4, 20)
    ok = ok and series_matches_rational(
        F3, 1 + zz ** 3 * w ** 3, [one_minus({z: 4}), one_minus({z: 1, "w": 3}), one_minus({z: 2, "w": 2})]
    )
    ok = ok and series_matches_rational(
        F4, 1 + zz ** 3 * w ** 6,
        [one_minus({z: 2}), one_minus({z: 3}), one_minus({z: 1, "w": 4}), one_minus({z: 2, "w": 4})],
    )
    return ok, "F_3, F_4 (일변수/이중 차수) N=20"


def _check_molien(seed: int, trials: int) -> CheckResult:
    s4, full = get_group("S4")
    _, even4 = get_group("A4")
    s6, _ = get_group("S6")
    _, even6 = get_group("A6")
    t = "t"
    d23 = [one_minus({t: 2}), one_minus({t: 3})]
    d2to6 = [one_minus({t: i}) for i in range(2, 7)]
    T = _t()
    ok = series_matches_rational(molien_series(s4.character("W"), s4, full, 20), 1, d23)
    ok = ok and series_matches_rational(molien_series(s4.character("W"), s4, even4, 20), 1 + T ** 3, d23)
    ok = ok and series_matches_rational(molien_series(s6.character("X5"), s6, even6, 20), 1 + T ** 15, d2to6)
    ok = ok and series_matches_rational(molien_series(s6.character("X8"), s6, full, 20), 1, d2to6)
    return ok, "Σ4/W, Alt(4)/W, Alt(6)/X5, Σ6/X8 (N=20)"


def _check_howe(seed: int, trials: int) -> CheckResult:
    T = _t()
    series = howe_series(8, 8)
    ok = howe_dimension(6, 1) == 5
    ok = ok and series_matches_rational(series, 1 + 8 * T + 22 * T ** 2 + 8 * T ** 3 + T ** 4, [one_minus({"t": 1})] * 6)
    return ok, f"howe(6,1) = {howe_dimension(6, 1)}, d=8 급수 일치"


# --- 타블로 ---

def _check_schur(seed: int, trials: int) -> CheckResult:
    first = sl_decompose(plethysm_character(2, 4, 2))
    second = sl_decompose(plethysm_character(2, 3, 3))
    third = sl_decompose(plethysm_character(3, 2, 3))
    ok = first == {(8,): 1, (4,): 1, (0,): 1}
    ok = ok and second == {(6,): 1, (4, 2): 1}
    ok = ok and third == {(6,): 1, (4, 2): 1, (0,): 1}
    return ok, f"S²S⁴C² = {first}, S²S³C³ = {second}, S³S²C³ = {third}"


# --- 점 구성 ---

def _check_kempe(seed: int, trials: int) -> CheckResult:
    matchings = noncrossing_matchings(6, (1,) * 6)
    t0 = t_coordinates(t_graph("t0"))
    ssyt = semistandard_tableaux((6, 6), content={k: 2 for k in range(1, 7)})
    ok = len(matchings) == 5 and t0 == (-1, -1, 1, 1, 1) and len(ssyt) == 15
    t0_text = "(" + ", ".join(str(c) for c in t0) + ")"
    return ok, f"매칭 {len(matchings)}개, t0 = {t0_text}, 반표준 타블로 {len(ssyt)}개"


def _check_straightening_evaluation(seed: int, trials: int) -> CheckResult:
    rng = make_rng(seed)
    identities = [t_graph("t0"), GraphCombination.parse("(13)(24)"), GraphCombination.parse("(15)(26)(37)(48)")]
    for combination in identities:
        straight = graph_straighten(combination)
        for _ in range(VERIFICATION_DEFAULTS["evaluation_trials"]):
            points = random_line_configuration(rng, combination.d)
            if graph_evaluate(combination, points) != graph_evaluate(straight, points):
                return False, f"{combination} 값 불일치"
    return True, f"{len(identities)}개 식 × {VERIFICATION_DEFAULTS['evaluation_trials']}회 일치"


def _check_joubert(seed: int, trials: int) -> CheckResult:
    report = coble_ring_checks(trials=min(trials, 5), seed=seed)
    swap = joubert_permutation_action(TRANSPOSITION_12)
    cycle = joubert_permutation_action(SIX_CYCLE)
    swap_ok = [swap[x] for x in "ABC"] == [(-1, "D"), (-1, "E"), (-1, "F")]
    cycle_ok = all(sign == -1 for sign, _ in cycle.values()) and len({y for _, y in cycle.values()}) == 6
    return report.passed and swap_ok and cycle_ok, f"코블 {report.passed}, (12) {swap_ok}, (123456) {cycle_ok}"


def _check_cremona(seed: int, trials: int) -> CheckResult:
    rng = make_rng(seed)
    failures = 0
    for _ in range(trials):
        if not verify_plane_configuration(PlaneConfig.random(rng)).passed:
            failures += 1
    return failures == 0, f"실패 {failures}/{trials}"


SELFTEST_CHECKS: List[SelftestCheck] = [
    SelftestCheck("quartic_invariants", "이진 사차 형식 I, J (커널 방법)", _check_quartic_invariants),
    SelftestCheck("reynolds", "레이놀즈 사영 값", _check_reynolds),
    SelftestCheck("isobaric_counts", "삼진 등가중 단항식 개수", _check_isobaric_counts),
    SelftestCheck("bedratyuk", "베드라튝 표와 6항 공식", _check_bedratyuk),
    SelftestCheck("cubic_invariant_A", "평면 사차곡선의 삼차 불변식", _check_cubic_invariant_A),
    SelftestCheck("aronhold", "아론홀드 불변식과 파피안", _check_aronhold),
    SelftestCheck("springer", "스프링거 급수 F_3, F_4", _check_springer),
    SelftestCheck("molien", "몰리엔 급수", _check_molien),
    SelftestCheck("cayley_sylvester_vs_kernel", "케일리-실베스터 대 커널 방법", _check_cs_vs_kernel),
    SelftestCheck("kempe", "켐프 기저, t0 직선화, 반표준 타블로", _check_kempe),
    SelftestCheck("joubert", "주베르 불변식과 코블 관계", _check_joubert),
    SelftestCheck("howe", "하우 공식", _check_howe),
    SelftestCheck("cremona", "크레모나 6면체 방정식", _check_cremona),
    SelftestCheck("cubic_syzygy", "이진 삼차 시지지", _check_cubic_syzygy),
    SelftestCheck("gherardelli", "게라르델리 행렬식", _check_gherardelli),
    SelftestCheck("commutator", "[D, Δ] 고유값", _check_commutator),
    SelftestCheck("straightening_evaluation", "직선화 값 보존", _check_straightening_evaluation),
    SelftestCheck("schur", "플레티즘 분해", _check_schur),
]


def run_selftest(
    seed: Optional[int] = None,
    trials: Optional[int] = None,
    only: Optional[List[str]] = None
) -> pd.DataFrame:
    """검사 결과표 (name, description, passed, detail, seconds)

    Raises:
        ValueError: 알 수 없는 검사 이름
    """
    seed = seed if seed is not None else VERIFICATION_DEFAULTS["random_seed"]
    trials = trials if trials is not None else VERIFICATION_DEFAULTS["random_trials"]
    names = {check.name for check in SELFTEST_CHECKS}
    if only:
        unknown = [n for n in only if n not in names]
        if unknown:
            raise ValueError(f"알 수 없는 검사 이름입니다: {unknown} (가능: {sorted(names)})")
    records = []
    for check in SELFTEST_CHECKS:
        if only and check.name not in only:
            continue
        start = time.perf_counter()
        try:
            passed, detail = check.run(seed, trials)
        except (ValueError, RuntimeError) as e:
            passed, detail = False, f"오류: {e}"
        elapsed = time.perf_counter() - start
        log = logger.info if passed else logger.warning
        log(f"[{'PASS' if passed else 'FAIL'}] {check.name}: {detail} ({elapsed:.1f}초)")
        records.append({
            "name": check.name,
            "description": check.description,
            "passed": bool(passed),
            "detail": detail,
            "seconds": round(elapsed, 3),
        })
    return pd.DataFrame(records)
