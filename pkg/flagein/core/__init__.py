"""루트 시스템 · flag manifold · Einstein 계량 핵심 모듈."""
