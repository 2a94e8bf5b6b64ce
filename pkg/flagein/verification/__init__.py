"""교차 검증 레지스트리와 실행기."""
