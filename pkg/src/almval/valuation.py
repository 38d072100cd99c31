"""Closed-form 2-adic valuation of A(l, m) and the block structure in m."""
from dataclasses import dataclass

from .arith import DomainError, pochhammer_v2, s2, v2, v2_factorial


def _check_lm(l, m):
    if l < 0 or m < 0 or l > m:
        raise DomainError("need 0 <= l <= m, got l=%d m=%d" % (l, m))


def v2_A_pochhammer(l, m):
    _check_lm(l, m)
    return pochhammer_v2(m + 1 - l, 2 * l) + l


def v2_A_fast(l, m):
    # Legendre on (m+l)!/(m-l)! collapses to bit counts
    return 3 * l + s2(m - l) - s2(m + l)


def v2_A_closed(l, m):
    """v2(A(l, m)) = v2((m+1-l)_{2l}) + l, cross-checked against bit counts.

    >>> v2_A_closed(60, 60), v2_A_closed(60, 68)
    (176, 180)
    """
    slow = v2_A_pochhammer(l, m)
    fast = v2_A_fast(l, m)
    if slow != fast:
        raise AssertionError("fast path disagrees at l=%d m=%d: %d != %d" % (l, m, fast, slow))
    return fast


def jump(l, m):
    """v2(A(l, m+1)) - v2(A(l, m)); signed."""
    if m < l:
        raise DomainError("jump needs m >= l")
    return v2(m + l + 1) - v2(m - l + 1)


def simplicity_exponent(l):
    """log2 of the block length of m -> v2(A(l, m))."""
    if l < 1:
        raise DomainError("block length undefined for l=%d (sequence is constant)" % l)
    return 1 + v2(l)


@dataclass(frozen=True)
class BlockDescriptor:
    l: int
    k: int
    mu: int
    start: int
    value: int

    @property
    def size(self):
        return 1 << self.mu

    @property
    def members(self):
        return range(self.start, self.start + self.size)


def block_of(l, m):
    """The aligned block C(k, l) containing m, with its common valuation."""
    _check_lm(l, m)
    mu = simplicity_exponent(l)
    k = (m - l) >> mu
    start = l + (k << mu)
    return BlockDescriptor(l=l, k=k, mu=mu, start=start, value=v2_A_closed(l, start))


def block(l, k):
    mu = simplicity_exponent(l)
    return block_of(l, l + (k << mu))


@dataclass(frozen=True)
class SimpleCertificate:
    """Blocks of length 2**exponent hold; ``witness`` (1-based) breaks the next doubling."""
    exponent: int
    witness: int


def detect_simple(prefix):
    """Largest n such that ``prefix`` is constant on aligned blocks of 2**n.

    Returns a ``SimpleCertificate`` whose witness is the first 1-based index j
    with prefix[j] != prefix[j-1] inside an aligned block of length 2**(n+1).
    Returns None (inconclusive) when no such violation is visible, e.g. for
    a constant prefix.
    """
    values = list(prefix)
    if not values:
        raise ValueError("empty prefix")
    changes = [j for j in range(1, len(values)) if values[j] != values[j - 1]]
    if not changes:
        return None
    # a change between 0-based j-1 and j sits on a 2**n boundary iff 2**n | j;
    # the first size it breaks is 2**(v2(j)+1)
    n = min(v2(j) for j in changes)
    witness = next(j for j in changes if v2(j) == n)
    return SimpleCertificate(exponent=n, witness=witness + 1)


def is_simple_of(prefix, exponent):
    """True iff ``prefix`` is constant on aligned blocks of 2**exponent."""
    size = 1 << exponent
    return all(prefix[j] == prefix[j - 1] for j in range(1, len(prefix)) if j % size)


def halve_relation(l, m):
    """v2(A(l, m)) expressed through v2(A(l // 2, M0)), M0 = (m + l % 2) // 2."""
    if not 1 <= l <= m:
        raise DomainError("need 1 <= l <= m, got l=%d m=%d" % (l, m))
    odd = l & 1
    h = l >> 1
    M0 = (m + odd) >> 1
    value = 2 * l - h + v2_A_closed(h, M0)
    if odd:
        value += v2(M0 - h)
    return value


@dataclass(frozen=True)
class LambdaMask:
    l: int
    lambdas: tuple  # parity bits of l >> k, lowest first
    exponents: tuple  # k with bit k of l set, increasing


def lambda_mask(l):
    if l < 0:
        raise DomainError("l must be >= 0")
    lambdas = tuple((l >> k) & 1 for k in range(l.bit_length()))
    return LambdaMask(l=l, lambdas=lambdas,
                      exponents=tuple(k for k, bit in enumerate(lambdas) if bit))


def M_k(l, m, k):
    """floor((m + sum_{n<=k} 2^n * bit_n(l)) / 2^(k+1))."""
    mask = lambda_mask(l).lambdas
    carry = sum(bit << n for n, bit in enumerate(mask[:k + 1]))
    return (m + carry) >> (k + 1)


@dataclass(frozen=True)
class Decomposition:
    base: int
    terms: tuple
    exponents: tuple

    @property
    def total(self):
        return self.base + sum(self.terms)


def decompose(l, m):
    """Split v2(A(l, m)) into 2l + v2(l!) plus one term per set bit of l.

    The term for bit k is v2(M_k - floor(l / 2^(k+1))), which as a function
    of m is constant on blocks of length 2^(k+1).
    """
    if not 1 <= l <= m:
        raise DomainError("need 1 <= l <= m, got l=%d m=%d" % (l, m))
    mask = lambda_mask(l)
    terms = tuple(v2(M_k(l, m, k) - (l >> (k + 1))) for k in mask.exponents)
    return Decomposition(base=2 * l + v2_factorial(l), terms=terms, exponents=mask.exponents)


def bitwise_sum(l, m):
    """Same decomposition summed over every k, with the parity bits as weights."""
    if not 1 <= l <= m:
        raise DomainError("need 1 <= l <= m, got l=%d m=%d" % (l, m))
    mask = lambda_mask(l)
    total = 2 * l + v2_factorial(l)
    for k, bit in enumerate(mask.lambdas):
        if bit:
            total += v2(M_k(l, m, k) - (l >> (k + 1)))
    return total


def valuation_row(l, count, start=None):
    """[v2(A(l, m)) for m = start, start+1, ...], ``count`` entries; start defaults to l."""
    if start is None:
        start = l
    if start < l:
        raise DomainError("start must be >= l")
    return [v2_A_fast(l, m) for m in range(start, start + count)]
