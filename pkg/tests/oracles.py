"""Slow, independent reference computations used only by the tests."""
from fractions import Fraction
from math import comb


def v2_by_division(n):
    assert n != 0
    n, a = abs(n), 0
    while n % 2 == 0:
        n //= 2
        a += 1
    return a


def popcount_by_halving(n):
    ones = 0
    while n:
        ones += n % 2
        n //= 2
    return ones


def factorial_by_product(n):
    f = 1
    for i in range(2, n + 1):
        f *= i
    return f


def A_by_fractions(l, m):
    """Each term divided by 2^(m-l) separately, summed as rationals."""
    total = Fraction(0)
    for k in range(l, m + 1):
        total += Fraction(2 ** k * comb(2 * m - 2 * k, m - k) * comb(m + k, m) * comb(k, l), 2 ** (m - l))
    total *= factorial_by_product(l) * factorial_by_product(m)
    assert total.denominator == 1
    return total.numerator


def stirling_inclusion_exclusion(n, k):
    s = sum((-1) ** j * comb(k, j) * (k - j) ** n for j in range(k + 1))
    q, r = divmod(s, factorial_by_product(k))
    assert r == 0
    return q


def bell_triangle(n_max):
    """Bell numbers B_0..B_n_max via the Aitken array."""
    bells = [1]
    row = [1]
    for _ in range(n_max):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
        bells.append(row[0])
    return bells


def ruler_fold_reference(depth):
    """2 + v2(j) for j = 1 .. 4 * 2^depth - 1."""
    return [2 + v2_by_division(j) for j in range(1, 4 * 2 ** depth)]
