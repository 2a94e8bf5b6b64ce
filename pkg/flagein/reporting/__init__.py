"""보고서 조립과 렌더링."""
