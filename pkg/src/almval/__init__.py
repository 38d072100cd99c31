"""2-adic valuations of the integer sequence A(l, m) and related checks."""
from .arith import A_direct, B_compute, DomainError, INF, s2, v2, v2_factorial
from .reduction import composition, run_algorithm
from .valuation import decompose, detect_simple, v2_A_closed

__version__ = "0.1.0"

__all__ = [
    "A_direct", "B_compute", "DomainError", "INF", "s2", "v2", "v2_factorial",
    "composition", "run_algorithm", "decompose", "detect_simple", "v2_A_closed",
]
