"""
정확한 JSON 직렬화 모듈

- 유리수: "분자/분모" 문자열
- 다항식: {"variables": [...], "terms": {"지수,지수,...": "분자/분모"}}
- 절단 급수: 다항식 + "truncation"
부동소수점은 어디에도 쓰지 않습니다.
"""
from dataclasses import asdict, is_dataclass
from fractions import Fraction
import json
from typing import Any, Dict

import numpy as np
import pandas as pd

from src.algebra.polynomial import SparsePolynomial
from src.algebra.series import TruncatedSeries
from src.forms.binary_form import BinaryForm
from src.forms.ternary_form import TernaryForm


def fraction_to_json(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def fraction_from_json(text: str) -> Fraction:
    """'num/den' 또는 정수 문자열

    Raises:
        ValueError: 해석할 수 없는 문자열
    """
    try:
        return Fraction(text)
    except (TypeError, ValueError, ZeroDivisionError):
        raise ValueError(f"유리수 문자열이 아닙니다: {text!r}")


def polynomial_to_json(poly: SparsePolynomial) -> Dict[str, Any]:
    return {
        "variables": list(poly.variables),
        "terms": {
            ",".join(str(e) for e in exps): fraction_to_json(coeff)
            for exps, coeff in poly.sorted_terms()
        },
    }


def polynomial_from_json(data: Dict[str, Any]) -> SparsePolynomial:
    """polynomial_to_json 의 역

    Raises:
        ValueError: 지수 길이가 변수 수와 다른 경우
    """
    variables = tuple(data["variables"])
    terms = {}
    for key, value in data["terms"].items():
        exps = tuple(int(e) for e in key.split(",")) if key else ()
        if len(exps) != len(variables):
            raise ValueError(f"지수 {key!r} 의 길이가 변수 수 {len(variables)} 와 다릅니다.")
        terms[exps] = fraction_from_json(value)
    return SparsePolynomial(variables, terms)


def series_to_json(series: TruncatedSeries) -> Dict[str, Any]:
    data = polynomial_to_json(series.polynomial)
    data["truncation"] = series.truncation
    return data


def series_from_json(data: Dict[str, Any]) -> TruncatedSeries:
    return TruncatedSeries(polynomial_from_json(data), int(data["truncation"]))


def to_jsonable(obj: Any) -> Any:
    """계산 결과를 JSON 으로 옮길 수 있는 값으로 변환"""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return fraction_to_json(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, SparsePolynomial):
        return polynomial_to_json(obj)
    if isinstance(obj, TruncatedSeries):
        return series_to_json(obj)
    if isinstance(obj, (BinaryForm, TernaryForm)):
        return {"degree": obj.degree, "polynomial": polynomial_to_json(obj.to_polynomial())}
    if isinstance(obj, pd.DataFrame):
        return [to_jsonable(record) for record in obj.reset_index().to_dict(orient="records")]
    if is_dataclass(obj):
        data = to_jsonable(asdict(obj))
        if hasattr(obj, "passed"):
            data["passed"] = bool(obj.passed)
        return data
    if isinstance(obj, dict):
        return {str(k) if not isinstance(k, tuple) else ",".join(map(str, k)): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return str(obj)


def dumps(obj: Any) -> str:
    return json.dumps(to_jsonable(obj), ensure_ascii=False, sort_keys=True, indent=2)
