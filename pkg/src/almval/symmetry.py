"""Block-reduced valuation sequences and the fold (reflect-and-raise) model."""
from dataclasses import dataclass

from .arith import DomainError
from .valuation import simplicity_exponent, v2_A_fast


def reduced_sequence(l, count):
    """One value per block: v2(A(l, l + j * 2^(1+v2(l)))) for j = 0..count-1."""
    if l < 1:
        raise DomainError("reduced_sequence needs l >= 1")
    if count < 1:
        raise ValueError("count must be >= 1")
    mu = simplicity_exponent(l)
    return [v2_A_fast(l, l + (j << mu)) for j in range(count)]


@dataclass(frozen=True)
class FoldModel:
    """D_0 = initial_segment, D_(j+1) = D_j + [center_value + j + 1] + D_j."""
    initial_segment: tuple
    center_value: int
    verified_depth: int

    def length(self, depth):
        return ((len(self.initial_segment) + 1) << depth) - 1

    def expand(self, depth):
        d = list(self.initial_segment)
        for j in range(depth):
            d = d + [self.center_value + j + 1] + d
        return d

    def generate(self, count):
        """First ``count`` entries of the infinite folded sequence."""
        depth = 0
        while self.length(depth) < count:
            depth += 1
        return self.expand(depth)[:count]


MIN_SEGMENT = 3
MIN_GENERATIONS = 2


def detect_fold(seq):
    """Smallest odd initial segment (length >= 3) whose fold model reproduces
    all of ``seq`` and is confirmed through two full generations.

    Returns a ``FoldModel`` whose ``verified_depth`` is the largest j with
    D_j lying entirely inside ``seq``, or None when no candidate works.
    """
    seq = list(seq)
    if len(seq) < 3:
        raise ValueError("need at least 3 entries")
    for size in range(MIN_SEGMENT, len(seq) // 3 + 1, 2):
        init = tuple(seq[:size])
        model = FoldModel(init, init[size // 2], 0)
        if model.length(MIN_GENERATIONS) > len(seq):
            break
        if model.generate(len(seq)) != seq:
            continue
        depth = MIN_GENERATIONS
        while model.length(depth + 1) <= len(seq):
            depth += 1
        return FoldModel(init, init[size // 2], depth)
    return None


def regenerates(model, seq):
    """Expanding to ``verified_depth`` reproduces ``seq`` up to that length."""
    d = model.expand(model.verified_depth)
    return len(d) <= len(seq) and d == list(seq[:len(d)])
