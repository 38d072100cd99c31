"""The F/T/c reduction of v2(A(l, .)) and the binary composition of l.

Sequences are finite prefixes of infinite sequences. Every operation here
keeps track of how much of the prefix is still trustworthy; ``run_algorithm``
sizes the starting prefix so each stage can certify its block length.
"""
from dataclasses import dataclass, field
import json

from .arith import DomainError, s2, v2
from .valuation import detect_simple, v2_A_fast


class InconclusiveError(RuntimeError):
    """A prefix was too short to certify its block length."""


class ReductionError(AssertionError):
    """The reduction produced something the theory rules out."""


@dataclass(frozen=True)
class ValuationPrefix:
    """Entries j = 1, 2, ... of m -> v2(A(l, start_m + j - 1))."""
    l: int
    start_m: int
    values: tuple

    def __post_init__(self):
        if not self.values:
            raise ValueError("empty prefix")

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]


def x_prefix(l, length):
    """The first ``length`` entries of X(l) = {v2(A(l, l+m-1)) : m >= 1}."""
    if length < 1:
        raise ValueError("length must be >= 1")
    return ValuationPrefix(l=l, start_m=l, values=tuple(v2_A_fast(l, m) for m in range(l, l + length)))


def op_F(seq):
    """Repeat the first entry: {a1, a2, ...} -> {a1, a1, a2, ...}."""
    seq = tuple(seq)
    if not seq:
        raise ValueError("empty sequence")
    return seq[:1] + seq


def op_T(seq, times=1):
    """Keep the odd-indexed (1-based) entries, ``times`` times over."""
    seq = tuple(seq)
    if not seq:
        raise ValueError("empty sequence")
    return seq[::1 << times]


def c_prefix(n):
    """Ruler sequence {v2(m) : m = 1..n}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return tuple(v2(m) for m in range(1, n + 1))


def subtract_c(seq):
    seq = tuple(seq)
    return tuple(a - b for a, b in zip(seq, c_prefix(len(seq))))


def is_constant(seq):
    return len(set(seq)) <= 1


# compositions

def binary_exponents(l):
    return tuple(k for k in range(l.bit_length()) if (l >> k) & 1)


def composition(l):
    """Read l in binary right to left; each part counts digits up to the next 1.

    >>> composition(13), composition(14)
    ((1, 2, 1), (2, 1, 1))
    """
    if l < 1:
        raise DomainError("composition needs l >= 1")
    parts, run = [], 0
    for digit in reversed(bin(l)[2:]):
        run += 1
        if digit == "1":
            parts.append(run)
            run = 0
    return tuple(parts)


def composition_from_exponents(l):
    ks = binary_exponents(l)
    return (ks[0] + 1,) + tuple(b - a for a, b in zip(ks, ks[1:]))


def composition_step(l):
    """Build the composition of l from that of l // 2 (even: bump first part; odd: prepend 1)."""
    if l < 2:
        raise DomainError("composition_step needs l >= 2")
    parent = composition(l >> 1)
    if l & 1:
        return (1,) + parent
    return (parent[0] + 1,) + parent[1:]


def omega_length(l):
    if l < 1:
        raise DomainError("l must be >= 1")
    return s2(l)


# the algorithm

@dataclass(frozen=True)
class SequenceOpTrace:
    stage: int
    exponent: int
    index: int  # j with after == X(j) + cumulative offset
    shift: int  # translate constant added during this stage
    before: tuple
    after: tuple


@dataclass(frozen=True)
class ReductionTrace:
    l: int
    stages: tuple = field(default_factory=tuple)
    reduced_constant: int = 0

    @property
    def omega(self):
        return tuple(st.exponent for st in self.stages)


def stage_shift(l, n):
    """Translate constant picked up by one stage on X(l) using T^n then c, F.

    The first n-1 halvings are even steps (3 * l/2 each); the last is odd
    (3 * (l-1)/2 + 2).
    """
    t = 0
    for _ in range(n - 1):
        if l & 1:
            raise ReductionError("even halving applied to odd index %d" % l)
        l >>= 1
        t += 3 * l
    if not l & 1:
        raise ReductionError("odd step applied to even index %d" % l)
    l >>= 1
    return l, t + 3 * l + 2


def initial_length(l, final_len):
    b = l.bit_length()
    return final_len * (1 << b) + b


def run_algorithm(l, final_len=4):
    """Run the reduction on X(l) until the sequence is constant.

    Each cycle certifies the block exponent n from the data, applies T n
    times, subtracts the ruler sequence and duplicates the head with F. The
    data-driven steps are checked against the index bookkeeping: n must be
    the next composition part and the result a translate of X(j).
    """
    if l < 1:
        raise DomainError("run_algorithm needs l >= 1")
    if final_len < 2:
        raise ValueError("final_len must be >= 2")
    X = x_prefix(l, initial_length(l, final_len)).values
    expected = composition(l)
    stages = []
    cur, offset = l, 0
    while True:
        cert = detect_simple(X)
        if cert is None:
            raise InconclusiveError(
                "stage %d: prefix of length %d shows no block boundary; "
                "raise final_len" % (len(stages) + 1, len(X)))
        n = cert.exponent
        if len(stages) >= len(expected) or n != expected[len(stages)]:
            raise ReductionError("stage %d: certified exponent %d, composition of %d is %s"
                                 % (len(stages) + 1, n, l, expected))
        Z = subtract_c(op_T(X, n))
        if min(Z) < 0:
            raise ReductionError("negative entry after subtracting c at stage %d" % (len(stages) + 1))
        W = op_F(Z)
        j, t = stage_shift(cur, n)
        ref = x_prefix(j, len(W)).values if j else (0,) * len(W)
        if any(w - r != offset + t for w, r in zip(W, ref)):
            raise ReductionError("stage %d: result is not X(%d) + %d" % (len(stages) + 1, j, offset + t))
        stages.append(SequenceOpTrace(stage=len(stages) + 1, exponent=n, index=j,
                                      shift=t, before=tuple(X), after=W))
        cur, offset, X = j, offset + t, W
        if is_constant(W):
            break
    if cur != 0:
        raise ReductionError("constant sequence reached with index %d left" % cur)
    return ReductionTrace(l=l, stages=tuple(stages), reduced_constant=X[0])


def trace_records(trace, head=16):
    """One dict per stage: stage, exponent, index, shift and the first ``head`` entries."""
    return [{"stage": st.stage, "exponent": st.exponent, "index": st.index,
             "shift": st.shift, "after": list(st.after[:head])}
            for st in trace.stages]


def trace_to_jsonl(trace, head=16):
    return "".join(json.dumps(rec, separators=(",", ":")) + "\n" for rec in trace_records(trace, head))


@dataclass(frozen=True)
class TranslateCheck:
    l: int
    j: int
    shift: int
    compared: int
    verified: bool


def translate_check(l, prefix_len=128):
    """One cycle on X(l): even l gives T(X(l)) = X(l/2) + 3l/2, odd l gives
    F(T(X(l)) - c) = X((l-1)/2) + 3(l-1)/2 + 2. Compared entrywise."""
    if l < 2:
        raise DomainError("translate_check needs l >= 2")
    X = x_prefix(l, prefix_len).values
    if l & 1:
        j = (l - 1) >> 1
        shift = 3 * j + 2
        out = op_F(subtract_c(op_T(X)))
    else:
        j = l >> 1
        shift = 3 * j
        out = op_T(X)
    ref = x_prefix(j, len(out)).values
    ok = all(a == b + shift for a, b in zip(out, ref))
    return TranslateCheck(l=l, j=j, shift=shift, compared=len(out), verified=ok)
