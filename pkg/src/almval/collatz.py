"""Collatz orbits up to their first parity change, and v2(3^m - 1)."""
from dataclasses import dataclass

from .arith import DomainError, v2
from .valuation import v2_A_closed


def collatz_step(i):
    """i/2 for even i, (3i+1)/2 for odd i."""
    if i < 1:
        raise DomainError("collatz_step needs i >= 1")
    return i >> 1 if i % 2 == 0 else (3 * i + 1) >> 1


@dataclass(frozen=True)
class CollatzOrbit:
    seed: int
    iterates: tuple
    parity_change_index: int


def orbit(m, max_steps=None):
    """Iterate from m until the parity first differs from m's."""
    if m < 1:
        raise DomainError("orbit needs m >= 1")
    if max_steps is None:
        max_steps = m.bit_length() + 2
    parity = m & 1
    its = [m]
    x = m
    for step in range(1, max_steps + 1):
        x = collatz_step(x)
        its.append(x)
        if x & 1 != parity:
            return CollatzOrbit(seed=m, iterates=tuple(its), parity_change_index=step)
    raise RuntimeError("no parity change for m=%d within %d steps" % (m, max_steps))


def parity_change_index(m):
    if m < 1:
        raise DomainError("m must be >= 1")
    return v2(m * (m + 1))


def parity_index_from_A(m):
    """v2(A(1, m)) - 1, the same index read off the integral sequence."""
    return v2_A_closed(1, m) - 1


def odd_orbit_formula_holds(m):
    """For odd m = 2^j n - 1 (n odd): T^i(m) = 3^i 2^(j-i) n - 1 for 0 <= i <= j."""
    if m < 1 or m % 2 == 0:
        raise DomainError("needs odd m >= 1")
    j = v2(m + 1)
    n = (m + 1) >> j
    x = m
    for i in range(j + 1):
        if x != 3 ** i * (1 << (j - i)) * n - 1:
            return False
        x = collatz_step(x)
    return True


def v2_3m_minus_1_oracle(m):
    return v2(3 ** m - 1)


def v2_3m_minus_1_lte(m):
    # lifting the exponent for p = 2
    return 1 if m & 1 else v2(m) + 2


def v2_3m_minus_1(m):
    """v2(3^m - 1) by big-integer power, checked against the LTE shortcut."""
    if m < 1:
        raise DomainError("m must be >= 1")
    exact = v2_3m_minus_1_oracle(m)
    if exact != v2_3m_minus_1_lte(m):
        raise AssertionError("LTE shortcut disagrees at m=%d" % m)
    return exact


def printed_closed_form(m):
    """lambda_m + v2(2m), the closed form as printed; disagrees with the oracle
    for every m (1 short for even m, 1 over for odd m)."""
    return (m & 1) + v2(2 * m)


def gf_coefficients(n_max):
    """Coefficients of x^1..x^n_max in x^2/(1-x^2) + sum_k x^(2^k)/(1-x^(2^k))."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    coeff = [0] * (n_max + 1)
    for m in range(2, n_max + 1, 2):
        coeff[m] += 1
    p = 1
    while p <= n_max:
        for m in range(p, n_max + 1, p):
            coeff[m] += 1
        p <<= 1
    return coeff[1:]


def closed_form_report(n_max):
    """Rows (m, oracle, lte, generating function, printed form) for m = 1..n_max."""
    gf = gf_coefficients(n_max)
    return [(m, v2_3m_minus_1_oracle(m), v2_3m_minus_1_lte(m), gf[m - 1], printed_closed_form(m))
            for m in range(1, n_max + 1)]
