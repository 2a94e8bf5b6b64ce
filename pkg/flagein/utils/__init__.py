"""로깅 유틸리티."""
