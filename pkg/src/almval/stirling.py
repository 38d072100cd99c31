"""Stirling numbers of the second kind and their 2-adic valuations."""
from dataclasses import dataclass
from functools import lru_cache

from .arith import DomainError, s2, v2


def iter_rows(n_max):
    """Yield rows [S(n, 0), ..., S(n, n)] for n = 0..n_max, one row held at a time."""
    row = [1]
    yield row
    for n in range(1, n_max + 1):
        nxt = [0] * (n + 1)
        for k in range(1, n + 1):
            nxt[k] = (k * row[k] if k < n else 0) + row[k - 1]
        row = nxt
        yield row


@lru_cache(maxsize=16)
def stirling_row(n):
    if n < 0:
        raise DomainError("n must be >= 0")
    for row in iter_rows(n):
        pass
    return tuple(row)


def stirling2(n, k):
    """S(n, k): partitions of an n-set into k nonempty blocks."""
    if not 0 <= k <= n:
        raise DomainError("need 0 <= k <= n, got n=%d k=%d" % (n, k))
    return stirling_row(n)[k]


@dataclass(frozen=True)
class StirlingTable:
    n_max: int
    rows: tuple

    @classmethod
    def build(cls, n_max):
        return cls(n_max=n_max, rows=tuple(tuple(r) for r in iter_rows(n_max)))

    def __call__(self, n, k):
        return self.rows[n][k]


def check_lengyel(n):
    """[v2(S(2^n, k)) == s2(k) - 1 for k = 1..2^n]."""
    if n < 1:
        raise DomainError("n must be >= 1")
    row = stirling_row(1 << n)
    return [v2(row[k]) == s2(k) - 1 for k in range(1, (1 << n) + 1)]


def _row_bound_ok(n, row):
    return all(v2(row[k]) >= s2(k) - s2(n) for k in range(n + 1))


def check_wannemacker_bound(n):
    """v2(S(n, k)) >= s2(k) - s2(n) for all 0 <= k <= n (v2(0) counts as infinite)."""
    if n < 1:
        raise DomainError("n must be >= 1")
    return _row_bound_ok(n, stirling_row(n))


def wannemacker_sweep(n_max):
    """First row n in 1..n_max violating the bound, or None."""
    for n, row in enumerate(iter_rows(n_max)):
        if n and not _row_bound_ok(n, row):
            return n
    return None


def scan_companion_conjecture(n):
    """[v2(S(2^n + 1, k + 1)) == s2(k) - 1 for k = 1..2^n]; reported, not a theorem."""
    if n < 1:
        raise DomainError("n must be >= 1")
    row = stirling_row((1 << n) + 1)
    return [v2(row[k + 1]) == s2(k) - 1 for k in range(1, (1 << n) + 1)]
