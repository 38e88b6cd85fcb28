"""
Kinvar 고전 불변식론 계산 엔진 메인 패키지
"""

__version__ = "0.1.0"
__author__ = "Kinvar Team"
__description__ = "이진/삼진 형식의 불변식, 공변식, 힐베르트 급수 계산 도구"
