"""
flagein: two-summand generalized flag manifolds 의 불변 Einstein 계량 분석.

루트 시스템, painted Dynkin diagram, Weyl 차원 공식, Einstein 방정식,
bordered Hessian 판정을 정확한 유리수 연산으로 계산하고 교차 검증합니다.
"""

__version__ = "1.0.0"
