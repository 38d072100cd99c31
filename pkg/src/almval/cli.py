"""Command line front end.

Exit codes: 0 success, 1 a verified property failed, 2 usage or domain error.
"""
import argparse
import json
import sys

from . import collatz, reduction, symmetry
from .arith import DomainError, A_direct, v2
from .valuation import v2_A_closed
from .verify import SUITES, run_suite

EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _braces(values):
    return "{" + ",".join(str(v) for v in values) + "}"


def _jsonl(rows):
    return "".join(json.dumps(r, separators=(",", ":")) + "\n" for r in rows)


def _csv(header, rows):
    lines = [",".join(header)]
    lines += [",".join(str(v) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def _emit(text, out=None):
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError("cannot write %s: %s" % (out, exc.strerror)) from None


def cmd_valuation(args):
    l, m = args.l, args.m
    if not 0 <= l <= m:
        raise DomainError("need 0 <= l <= m, got l=%d m=%d" % (l, m))
    rec = {"l": l, "m": m}
    if args.method in ("closed", "both"):
        rec["closed"] = v2_A_closed(l, m)
    if args.method in ("direct", "both"):
        rec["direct"] = v2(A_direct(l, m))
    if args.method == "both":
        rec["agree"] = rec["closed"] == rec["direct"]
    if args.format == "jsonl":
        _emit(_jsonl([rec]))
    elif args.method == "both":
        _emit("closed=%d direct=%d agree=%s\n" % (rec["closed"], rec["direct"], str(rec["agree"]).lower()))
    else:
        _emit("%d\n" % rec[args.method])
    return EXIT_FAIL if rec.get("agree") is False else 0


def cmd_figure(args):
    if args.l < 0 or args.count < 1:
        raise DomainError("need l >= 0 and count >= 1")
    rows = [(mp, args.l + mp - 1, v2_A_closed(args.l, args.l + mp - 1)) for mp in range(1, args.count + 1)]
    if args.format == "jsonl":
        text = _jsonl({"m_prime": a, "m": b, "v2": c} for a, b, c in rows)
    else:
        text = _csv(("m_prime", "m", "v2"), rows)
    _emit(text, args.out)
    return 0


def _reduce_record(l, final_len):
    try:
        trace = reduction.run_algorithm(l, final_len)
    except reduction.InconclusiveError as exc:
        raise UsageError("%s (try --final-len larger than %d)" % (exc, final_len)) from None
    comp = reduction.composition(l)
    return trace, {"l": l, "binary": bin(l)[2:], "omega": list(trace.omega),
                   "composition": list(comp), "equal": trace.omega == comp,
                   "constant": trace.reduced_constant}


def cmd_reduce(args):
    if args.final_len < 2:
        raise DomainError("--final-len must be >= 2")
    if args.table:
        lo, hi = args.table
        if lo < 1 or hi < lo:
            raise DomainError("--table needs 1 <= lmin <= lmax")
        recs = [_reduce_record(l, args.final_len)[1] for l in range(lo, hi + 1)]
        if args.format == "jsonl":
            _emit(_jsonl(recs))
        else:
            _emit(_csv(("l", "binary", "omega", "composition", "equal", "constant"),
                       ((r["l"], r["binary"], " ".join(map(str, r["omega"])),
                         " ".join(map(str, r["composition"])), int(r["equal"]), r["constant"])
                        for r in recs)))
        return 0 if all(r["equal"] for r in recs) else EXIT_FAIL
    if args.l is None:
        raise UsageError("reduce needs l or --table LMIN LMAX")
    if args.l < 1:
        raise DomainError("reduce needs l >= 1")
    trace, rec = _reduce_record(args.l, args.final_len)
    if args.format == "jsonl":
        _emit(_jsonl([rec]))
    else:
        _emit("omega=%s composition=%s equal=%s constant=%d\n"
              % (_braces(rec["omega"]), _braces(rec["composition"]),
                 str(rec["equal"]).lower(), rec["constant"]))
    if args.trace:
        _emit(reduction.trace_to_jsonl(trace))
    return 0 if rec["equal"] else EXIT_FAIL


def cmd_collatz(args):
    if args.scan is not None:
        if args.scan < 1:
            raise DomainError("--scan needs n >= 1")
        failures = [m for m in range(1, args.scan + 1)
                    if collatz.orbit(m).parity_change_index != collatz.parity_change_index(m)]
        rec = {"checked": args.scan, "agreements": args.scan - len(failures), "failures": len(failures)}
        if args.format == "jsonl":
            _emit(_jsonl([rec]))
        else:
            _emit("checked=%d agreements=%d failures=%d\n" % (rec["checked"], rec["agreements"], rec["failures"]))
            for m in failures[:10]:
                _emit("counterexample m=%d\n" % m)
        return EXIT_FAIL if failures else 0
    if args.m is None:
        raise UsageError("collatz needs m or --scan N")
    if args.m < 1:
        raise DomainError("collatz needs m >= 1")
    orb = collatz.orbit(args.m)
    predicted = collatz.parity_change_index(args.m)
    rec = {"m": args.m, "orbit": list(orb.iterates), "predicted": predicted,
           "observed": orb.parity_change_index, "agree": predicted == orb.parity_change_index}
    if args.format == "jsonl":
        _emit(_jsonl([rec]))
    else:
        _emit("orbit=%s predicted=%d observed=%d agree=%s\n"
              % (_braces(rec["orbit"]), predicted, rec["observed"], str(rec["agree"]).lower()))
    return 0 if rec["agree"] else EXIT_FAIL


def cmd_verify(args):
    try:
        checks = run_suite(args.suite, args.limit)
        failed = 0
        total = 0
        for c in checks:
            total += 1
            failed += not c.ok
            line = "%s %s" % ("PASS" if c.ok else "FAIL", c.name)
            if c.detail:
                line += ": " + c.detail
            _emit(line + "\n")
            sys.stdout.flush()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit("summary: %d passed, %d failed\n" % (total - failed, failed))
    return EXIT_FAIL if failed else 0


def cmd_symmetry(args):
    if args.l < 1 or args.count < 3:
        raise DomainError("symmetry needs l >= 1 and count >= 3")
    seq = symmetry.reduced_sequence(args.l, args.count)
    model = symmetry.detect_fold(seq)
    if model is None:
        rec = {"l": args.l, "count": args.count, "model": None}
        summary = "model=none\n"
    else:
        rec = {"l": args.l, "count": args.count, "model": {
            "initial": list(model.initial_segment), "center": model.center_value,
            "depth": model.verified_depth}}
        summary = "initial=%s center=%d depth=%d\n" % (
            _braces(model.initial_segment), model.center_value, model.verified_depth)
    mu = 1 + v2(args.l)
    data = _csv(("j", "m", "v2"), ((j + 1, args.l + (j << mu), v) for j, v in enumerate(seq)))
    if args.format == "jsonl":
        _emit(_jsonl([rec]))
    elif args.format == "csv":
        _emit(data)
    else:
        _emit(summary)
    if args.out:
        _emit(data, args.out)
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="almval", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("valuation", help="2-adic valuation of A(l, m)")
    s.add_argument("l", type=int)
    s.add_argument("m", type=int)
    s.add_argument("--method", choices=("closed", "direct", "both"), default="closed")
    s.add_argument("--format", choices=("plain", "jsonl"), default="plain")
    s.set_defaults(func=cmd_valuation)

    s = sub.add_parser("figure", help="rows m', m, v2(A(l, m)) for plotting")
    s.add_argument("l", type=int)
    s.add_argument("count", type=int)
    s.add_argument("--out", help="write to this file instead of stdout")
    s.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    s.set_defaults(func=cmd_figure)

    s = sub.add_parser("reduce", help="reduction sequence and composition of l")
    s.add_argument("l", type=int, nargs="?")
    s.add_argument("--trace", action="store_true", help="append one JSON record per stage")
    s.add_argument("--table", type=int, nargs=2, metavar=("LMIN", "LMAX"))
    s.add_argument("--final-len", type=int, default=4, help="entries kept after the last stage")
    s.add_argument("--format", choices=("plain", "csv", "jsonl"), default="plain",
                   help="single l: plain or jsonl; --table: csv (default) or jsonl")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("collatz", help="orbit of m up to its first parity change")
    s.add_argument("m", type=int, nargs="?")
    s.add_argument("--scan", type=int, metavar="N", help="check every m in 1..N")
    s.add_argument("--format", choices=("plain", "jsonl"), default="plain")
    s.set_defaults(func=cmd_collatz)

    s = sub.add_parser("verify", help="run invariant sweeps")
    s.add_argument("suite", choices=tuple(SUITES) + ("all",))
    s.add_argument("--limit", type=int, help="main scale of a single suite")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("symmetry", help="block-reduced sequence and fold model")
    s.add_argument("l", type=int)
    s.add_argument("count", type=int)
    s.add_argument("--out", help="write the reduced sequence CSV here")
    s.add_argument("--format", choices=("plain", "csv", "jsonl"), default="plain")
    s.set_defaults(func=cmd_symmetry)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "reduce" and args.table and args.format == "plain":
        args.format = "csv"
    try:
        return args.func(args)
    except (DomainError, UsageError) as exc:
        print("almval %s: error: %s" % (args.command, exc), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
