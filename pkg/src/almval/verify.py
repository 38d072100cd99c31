"""Invariant sweeps behind ``almval verify``.

Each suite yields ``Check`` results; a failed check carries the first
counterexample found. Default limits are the acceptance-test scales.
"""
from dataclasses import dataclass

from . import arith, collatz, reduction, stirling, symmetry, valuation
from .arith import v2, v2_factorial


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def _first(pairs, pred):
    for args in pairs:
        if not pred(*args):
            return args
    return None


def _check(name, counterexample, summary=""):
    if counterexample is None:
        return Check(name, True, summary)
    return Check(name, False, "counterexample %s" % (counterexample,))


def suite_arith(limit=200, recurrence_limit=100, claim_limit=60, factorial_limit=2000):
    bad_int = bad_odd = None
    bad_oracle = None
    for m in range(limit + 1):
        row = arith.A_row(m)
        for l, a in enumerate(row):
            if bad_int is None and m <= 40 and a != arith.A_direct(l, m):
                bad_int = (l, m)
            if bad_odd is None and arith.B_compute(l, m, a) % 2 == 0:
                bad_odd = (l, m)
            if bad_oracle is None and arith.pochhammer_v2(m - l + 1, 2 * l) + l != v2(a):
                bad_oracle = (l, m)
    yield _check("A row evaluation matches A_direct (m <= 40)", bad_int)
    yield _check("B(l, m) odd for m <= %d" % limit, bad_odd)
    yield _check("v2(A) = v2((m-l+1)_2l) + l for m <= %d" % limit, bad_oracle)

    bad_rec = None
    for m in range(2, recurrence_limit + 1):
        row = arith.A_row(m)
        for l in range(1, m):
            if not arith.B_recurrence_check(l, m, row):
                bad_rec = (l, m)
                break
        if bad_rec:
            break
    yield _check("B recurrence exact for m <= %d" % recurrence_limit, bad_rec)

    f, bad_leg = 1, None
    for n in range(factorial_limit + 1):
        if n:
            f *= n
        if v2(f) != v2_factorial(n):
            bad_leg = n
            break
    yield _check("Legendre v2(n!) for n <= %d" % factorial_limit, bad_leg)

    pairs = ((l, m) for m in range(claim_limit + 1) for l in range(m + 1))
    yield _check("tail terms dominated (m <= %d)" % claim_limit,
                 _first(pairs, arith.tail_terms_dominated))


def suite_valuation(limit=200, l_max=64, span=4096, prefix=1024, decomp_span=512):
    pairs = [(l, m) for m in range(limit + 1) for l in range(m + 1)]
    yield _check("closed form = v2(A_direct) for m <= %d" % limit,
                 _first(pairs, lambda l, m: valuation.v2_A_closed(l, m) == v2(arith.A_direct(l, m))))

    def telescopes(l):
        row = valuation.valuation_row(l, span + 1)
        return all(row[i + 1] - row[i] == valuation.jump(l, l + i) for i in range(span))
    yield _check("jump telescopes (l <= %d, m <= l + %d)" % (l_max, span),
                 _first(((l,) for l in range(l_max + 1)), telescopes))

    def blocks_ok(l):
        vals = [valuation.block(l, k).value for k in range(257)]
        if any(a == b for a, b in zip(vals, vals[1:])):
            return False
        mu = valuation.simplicity_exponent(l)
        row = valuation.valuation_row(l, 257 << mu)
        return all(row[i] == vals[i >> mu] for i in range(len(row)))
    yield _check("blocks constant, neighbours differ (l <= %d)" % l_max,
                 _first(((l,) for l in range(1, l_max + 1)), blocks_ok))

    def even_start(l):
        return len(set(valuation.valuation_row(l, 4))) == 1
    yield _check("even l: first four values equal",
                 _first(((l,) for l in range(2, l_max + 1, 2)), even_start))

    def certified(l):
        cert = valuation.detect_simple(valuation.valuation_row(l, prefix))
        return cert is not None and cert.exponent == valuation.simplicity_exponent(l)
    yield _check("detect_simple finds 2^(1+v2(l)) on %d values (l <= %d)" % (prefix, l_max),
                 _first(((l,) for l in range(1, l_max + 1)), certified))

    def halves(l, m):
        return valuation.halve_relation(l, m) == valuation.v2_A_closed(l, m)
    yield _check("halving relation (l <= %d)" % l_max,
                 _first(((l, m) for l in range(1, l_max + 1) for m in range(l, l + decomp_span + 1)), halves))

    def decomposes(l, m):
        d = valuation.decompose(l, m)
        return d.total == valuation.v2_A_closed(l, m) == valuation.bitwise_sum(l, m)
    yield _check("decomposition totals (l <= %d, m <= l + %d)" % (l_max, decomp_span),
                 _first(((l, m) for l in range(1, l_max + 1) for m in range(l, l + decomp_span + 1)),
                        decomposes))


def suite_reduction(limit=1024, translate_limit=256):
    def reduces(l):
        tr = reduction.run_algorithm(l)
        return (tr.omega == reduction.composition(l) == reduction.composition_from_exponents(l)
                and len(tr.omega) == reduction.omega_length(l)
                and tr.reduced_constant == 2 * l + v2_factorial(l) == valuation.v2_A_closed(l, l)
                and sum(tr.omega) == l.bit_length())
    yield _check("Omega = composition, |Omega| = s2, constant = 2l + v2(l!) (l <= %d)" % limit,
                 _first(((l,) for l in range(1, limit + 1)), reduces))
    yield _check("composition step rule (l <= %d)" % limit,
                 _first(((l,) for l in range(2, limit + 1)),
                        lambda l: reduction.composition_step(l) == reduction.composition(l)))

    def translates(l):
        res = reduction.translate_check(l, 128)
        return res.verified and res.compared >= 64
    yield _check("one cycle gives a translate of X(l // 2) (l <= %d)" % translate_limit,
                 _first(((l,) for l in range(2, translate_limit + 1)), translates))


def suite_collatz(limit=100_000, formula_limit=10_000, gf_limit=512, bridge_limit=10_000):
    yield _check("parity change index = v2(m(m+1)) (m <= %d)" % limit,
                 _first(((m,) for m in range(1, limit + 1)),
                        lambda m: collatz.orbit(m).parity_change_index == collatz.parity_change_index(m)))
    yield _check("odd-seed orbit formula (m <= %d)" % formula_limit,
                 _first(((m,) for m in range(1, formula_limit + 1, 2)), collatz.odd_orbit_formula_holds))
    gf = collatz.gf_coefficients(gf_limit)
    yield _check("generating function = v2(3^m - 1) (m <= %d)" % gf_limit,
                 _first(((m,) for m in range(1, gf_limit + 1)),
                        lambda m: gf[m - 1] == collatz.v2_3m_minus_1(m)))
    yield _check("a_m = v2(A(1, m)) - 1 (m <= %d)" % bridge_limit,
                 _first(((m,) for m in range(1, bridge_limit + 1)),
                        lambda m: collatz.parity_index_from_A(m) == collatz.parity_change_index(m)))
    miss = sum(1 for row in collatz.closed_form_report(gf_limit) if row[4] != row[1])
    yield Check("printed closed form (informational)", True,
                "differs from oracle at %d of %d values" % (miss, gf_limit))


def suite_stirling(limit=8, bound_limit=256):
    yield _check("v2(S(2^n, k)) = s2(k) - 1 (n <= %d)" % limit,
                 _first(((n,) for n in range(1, limit + 1)), lambda n: all(stirling.check_lengyel(n))))
    bad = stirling.wannemacker_sweep(bound_limit)
    yield _check("v2(S(n, k)) >= s2(k) - s2(n) (n <= %d)" % bound_limit, bad)
    results = {n: stirling.scan_companion_conjecture(n) for n in range(1, limit + 1)}
    failing = sorted(n for n, r in results.items() if not all(r))
    yield Check("companion identity S(2^n+1, k+1) (reported, n <= %d)" % limit, True,
                "all true" if not failing else "false for n in %s" % failing)


def suite_symmetry(count=1023):
    seq = symmetry.reduced_sequence(1, count)
    model = symmetry.detect_fold(seq)
    ok = (model is not None and model.initial_segment == (2, 3, 2) and model.center_value == 3
          and model.generate(count) == seq)
    yield Check("l = 1 fold model {2,3,2} regenerates %d entries" % count, ok,
                "" if ok else "got %r" % (model,))
    for l in (9, 53):
        m = symmetry.detect_fold(symmetry.reduced_sequence(l, 400))
        consistent = m is None or symmetry.regenerates(m, symmetry.reduced_sequence(l, 400))
        yield Check("l = %d fold model self-consistent" % l, consistent,
                    "no match" if m is None else "initial=%s depth=%d" % (list(m.initial_segment), m.verified_depth))


SUITES = {
    "arith": suite_arith,
    "valuation": suite_valuation,
    "reduction": suite_reduction,
    "collatz": suite_collatz,
    "stirling": suite_stirling,
    "symmetry": suite_symmetry,
}


def run_suite(name, limit=None):
    """Run one suite (or ``all``); ``limit`` overrides a single suite's main scale."""
    if name == "all" and limit is not None:
        raise ValueError("--limit applies to a single suite, not 'all'")
    names = list(SUITES) if name == "all" else [name]
    for n in names:
        fn = SUITES[n]
        yield from (fn() if limit is None else fn(limit))
