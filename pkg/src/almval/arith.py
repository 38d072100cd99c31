"""Exact integer layer: 2-adic utilities and the big-integer values A, B, T.

Everything here is computed in Python ints; nothing touches floating point
except the ``INF`` marker returned for the valuation of zero.
"""
from functools import lru_cache
import math

INF = math.inf


class DomainError(ValueError):
    """Index arguments outside the region where a quantity is defined."""


def v2(n):
    """Exponent of the largest power of two dividing ``n`` (``INF`` for 0)."""
    if n == 0:
        return INF
    n = abs(n)
    return (n & -n).bit_length() - 1


def s2(n):
    """Number of ones in the binary expansion of ``n``."""
    if n < 0:
        raise DomainError("s2 needs n >= 0, got %d" % n)
    return n.bit_count()


def v2_factorial(n):
    # Legendre: v2(n!) = n - s2(n)
    if n < 0:
        raise DomainError("factorial of negative %d" % n)
    return n - s2(n)


def pochhammer(a, k):
    """Rising product a(a+1)...(a+k-1); empty product for k = 0."""
    if k == 0:
        return 1
    if a >= 1:
        return math.perm(a + k - 1, k)
    return math.prod(range(a, a + k))


def pochhammer_v2(a, k):
    """2-adic valuation of the rising product (a)_k, for a >= 1."""
    if a < 1:
        raise DomainError("pochhammer_v2 needs a >= 1, got %d" % a)
    if k < 0:
        raise DomainError("negative length %d" % k)
    return v2_factorial(a + k - 1) - v2_factorial(a - 1)


factorial = lru_cache(maxsize=None)(math.factorial)


def _check_lm(l, m):
    if l < 0 or m < 0 or l > m:
        raise DomainError("need 0 <= l <= m, got l=%d m=%d" % (l, m))


@lru_cache(maxsize=512)
def _A_weights(m):
    # per-k weight 2^k C(2m-2k, m-k) C(m+k, m), shared by every l of a row
    return tuple((1 << k) * math.comb(2 * m - 2 * k, m - k) * math.comb(m + k, m)
                 for k in range(m + 1))


def _A_from_weights(l, m, weights):
    total = sum(weights[k] * math.comb(k, l) for k in range(l, m + 1))
    total *= factorial(l) * factorial(m)
    shift = m - l
    if total & ((1 << shift) - 1):
        raise ArithmeticError("A(%d, %d): sum not divisible by 2^%d" % (l, m, shift))
    return total >> shift


def A_direct(l, m):
    """A(l, m) from the defining sum, divided by 2^(m-l) once at the end.

    >>> A_direct(0, 2), A_direct(1, 2)
    (21, 60)
    """
    _check_lm(l, m)
    return _A_from_weights(l, m, _A_weights(m))


def A_row(m):
    """[A(0, m), ..., A(m, m)] sharing the l-independent part of the sum."""
    if m < 0:
        raise DomainError("m must be >= 0, got %d" % m)
    weights = _A_weights(m)
    return [_A_from_weights(l, m, weights) for l in range(m + 1)]


SPECIAL_KINDS = ("diag", "subdiag", "l0", "l1")


def A_special(kind, m):
    """Closed forms for A(m, m), A(m-1, m), A(0, m) and A(1, m)."""
    if kind == "diag":
        if m < 0:
            raise DomainError("m must be >= 0")
        return (1 << m) * factorial(2 * m)
    if kind == "subdiag":
        if m < 1:
            raise DomainError("subdiag needs m >= 1")
        return (1 << (m - 1)) * factorial(2 * m - 1) * (2 * m + 1)
    if kind == "l0":
        if m < 0:
            raise DomainError("m must be >= 0")
        return math.prod(4 * k - 1 for k in range(1, m + 1))
    if kind == "l1":
        if m < 1:
            raise DomainError("l1 needs m >= 1 (A(1, m) requires l <= m)")
        return ((2 * m + 1) * math.prod(4 * k - 1 for k in range(1, m + 1))
                - math.prod(4 * k + 1 for k in range(1, m + 1)))
    raise ValueError("unknown kind %r, expected one of %s" % (kind, SPECIAL_KINDS))


def B_divisor(l, m):
    return (1 << l) * pochhammer(m + 1 - l, 2 * l)


def B_compute(l, m, A=None):
    """Odd part of A(l, m) after removing 2^l (m+1-l)_{2l}.

    ``A`` may be passed in when the caller already holds A(l, m).
    """
    _check_lm(l, m)
    if A is None:
        A = A_direct(l, m)
    q, r = divmod(A, B_divisor(l, m))
    if r:
        raise ArithmeticError("B(%d, %d): inexact division" % (l, m))
    return q


def B_recurrence_check(l, m, row=None):
    """True iff B(l-1, m) = (2m+1) B(l, m) - (m-l)(m+l+1) B(l+1, m).

    ``row`` is an optional precomputed ``A_row(m)``.
    """
    if not 1 <= l <= m - 1:
        raise DomainError("recurrence needs 1 <= l <= m-1, got l=%d m=%d" % (l, m))
    if row is None:
        row = [None] * (m + 1)
        for j in (l - 1, l, l + 1):
            row[j] = A_direct(j, m)
    b_prev, b, b_next = (B_compute(j, m, row[j]) for j in (l - 1, l, l + 1))
    return b_prev == (2 * m + 1) * b - (m - l) * (m + l + 1) * b_next


def T_mk(m, k):
    """(2(m-k))! / (2^(m-k) (m-k)!), the odd double factorial (2m-2k-1)!!."""
    if not 0 <= k <= m:
        raise DomainError("need 0 <= k <= m, got m=%d k=%d" % (m, k))
    d = m - k
    q, r = divmod(factorial(2 * d), (1 << d) * factorial(d))
    assert r == 0
    return q


def odd_double_factorial(n):
    """n(n-2)(n-4)... down to 1; equals 1 for n <= 0."""
    return math.prod(range(n, 0, -2))


def second_proof_sum(l, m):
    """The inner sum sum_k T(m, l+k) (m-k-l+1)_{2k+2l} / k! over 0 <= k <= m-l.

    Its valuation plus l is v2(A(l, m)).
    """
    _check_lm(l, m)
    total = 0
    for k in range(m - l + 1):
        q, r = divmod(pochhammer(m - k - l + 1, 2 * k + 2 * l), factorial(k))
        assert r == 0
        total += T_mk(m, l + k) * q
    return total


def tail_terms_dominated(l, m):
    """Check that every k >= 1 term of ``second_proof_sum`` has strictly
    larger 2-adic valuation than the k = 0 term."""
    _check_lm(l, m)
    lead = pochhammer_v2(m - l + 1, 2 * l)
    for k in range(1, m - l + 1):
        if pochhammer_v2(m - k - l + 1, 2 * k + 2 * l) - v2_factorial(k) <= lead:
            return False
    return True
