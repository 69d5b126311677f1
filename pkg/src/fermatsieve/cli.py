"""Command-line front end.

Subcommands: factor (specialized sieve for N = 4n^2+1), factor-generic
(plain difference of squares), candidates (interval and residue-set
inspection), audit (claim verification ledger), fermat (Fermat-number
searches), bench (strategy comparison).

Exit codes: 0 success/found, 1 legitimate negative (prime or budget
exhausted), 2 invalid input, 3 internal inconsistency.  Human-readable
text goes to stdout, diagnostics to stderr; --json output and report
files are stable-key-ordered so identical runs produce identical bytes.
"""

import argparse
import csv
import json
import sys

from . import __version__, arith, audit, bench, fermat_generic, fermat_numbers, quadform

EXIT_FOUND = 0
EXIT_NEGATIVE = 1
EXIT_INVALID = 2
EXIT_INCONSISTENT = 3


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_INVALID


def _envelope(command: str, parameters: dict, results) -> str:
    payload = {
        "command": command,
        "parameters": parameters,
        "results": results,
        "tool_version": __version__,
    }
    return json.dumps(payload, sort_keys=True, indent=2)


def _resolve_generator(args) -> int | None:
    """Generator n from --n, or recovered from --N (which must be 4n^2+1)."""
    if args.n is not None:
        return args.n if args.n >= 1 else None
    N = args.N
    if N < 5 or (N - 1) % 4 != 0:
        return None
    n = arith.isqrt((N - 1) // 4)
    return n if n >= 1 and 4 * n * n + 1 == N else None


def _pair_dict(pair: quadform.FactorPair, offset: int) -> dict:
    return {
        "a": pair.a,
        "b": pair.b,
        "u": pair.witness_u,
        "center": quadform.CENTER_STEP * pair.witness_u + offset,
        "d": pair.d,
    }


def cmd_factor(args) -> int:
    n = _resolve_generator(args)
    if n is None:
        return _fail("need --n >= 1 or --N of the form 4n^2+1 with n >= 1")
    t = quadform.make_target(n)
    primes = quadform.default_filter_primes(t, args.prime_bound)
    pairs = quadform.sieve_enumerate(
        t, primes, use_heuristic_filters=args.heuristic_filters, want_all=args.all
    )
    if pairs:
        verdict = "composite"
    elif args.heuristic_filters:
        verdict = "unknown"  # heuristic skips can hide a true witness
    else:
        verdict = "prime"
    parameters = {
        "n": t.n,
        "N": t.N,
        "all": args.all,
        "heuristic_filters": args.heuristic_filters,
        "prime_bound": args.prime_bound,
    }
    results = {
        "parity": t.parity,
        "verdict": verdict,
        "pairs": [_pair_dict(p, t.offset) for p in pairs],
    }
    if args.json:
        print(_envelope("factor", parameters, results))
    else:
        print(f"N = {t.N} = 4*{t.n}^2 + 1 ({t.parity} generator)")
        for p in pairs:
            center = quadform.CENTER_STEP * p.witness_u + t.offset
            print(f"u={p.witness_u} center={center} d={p.d}: {t.N} = {p.a} * {p.b}")
        if not pairs:
            if verdict == "prime":
                print(f"{t.N} is prime (candidate interval exhausted)")
            else:
                print("no factor found; heuristic filters were on, so this is not a primality verdict")
    return EXIT_FOUND if pairs else EXIT_NEGATIVE


def cmd_factor_generic(args) -> int:
    N = args.N
    if N < 9 or N % 2 == 0:
        return _fail("factor-generic needs odd N >= 9")
    outcome = fermat_generic.fermat_factor(N, step_budget=args.budget)
    parameters = {"N": N, "budget": args.budget}
    if isinstance(outcome, fermat_generic.SquareSplit):
        results = {
            "verdict": "composite",
            "c": outcome.c,
            "d": outcome.d,
            "pair": [outcome.a, outcome.b],
        }
        if args.json:
            print(_envelope("factor-generic", parameters, results))
        else:
            print(
                f"{N} = {outcome.c}^2 - {outcome.d}^2 = {outcome.a} * {outcome.b} "
                f"(c={outcome.c}, d={outcome.d})"
            )
        return EXIT_FOUND
    verdict = "prime" if outcome is fermat_generic.Verdict.PRIME else "budget-exhausted"
    if args.json:
        print(_envelope("factor-generic", parameters, {"verdict": verdict}))
    else:
        print(f"{N}: {verdict}")
    return EXIT_NEGATIVE


def cmd_candidates(args) -> int:
    if args.n < 1:
        return _fail("need --n >= 1")
    t = quadform.make_target(args.n)
    u_min, u_sup = quadform.u_interval(t)
    span = quadform.u_range(t)
    results = {
        "N": t.N,
        "parity": t.parity,
        "u_min": u_min,
        "u_sup": f"{u_sup.numerator}/{u_sup.denominator}",
        "count": len(span),
        "u_values": list(span) if len(span) <= 1000 else None,
    }
    if args.prime is not None:
        p = args.prime
        if p == 2 or not arith.is_prime(p):
            return _fail("--prime must be an odd prime")
        if t.N % p == 0:
            return _fail(f"{p} divides N = {t.N}; it is a factor, not a filter")
        parametric = sorted(quadform.admissible_residues_parametric(t, p))
        qr = sorted(quadform.admissible_residues_qr(t, p))
        results["prime"] = p
        results["parametric"] = parametric
        results["qr"] = qr
        results["equal"] = parametric == qr
    parameters = {"n": t.n, "prime": args.prime}
    if args.json:
        print(_envelope("candidates", parameters, results))
    else:
        shown = f" {list(span)}" if 0 < len(span) <= 50 else ""
        print(
            f"N = {t.N}: u in [{u_min}, {u_sup}), {len(span)} candidate(s){shown}"
        )
        if args.prime is not None:
            print(
                f"prime {args.prime}: parametric {results['parametric']} "
                f"qr {results['qr']} equal={results['equal']}"
            )
    return EXIT_FOUND


def cmd_audit(args) -> int:
    parts = args.range.split(":")
    if len(parts) != 2:
        return _fail("--range must look like lo:hi")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        return _fail("--range bounds must be integers")
    if lo < 1 or lo > hi:
        return _fail(f"bad range [{lo}, {hi}]: need 1 <= lo <= hi")
    try:
        selected = audit.parse_claim_spec(args.claims)
    except ValueError as exc:
        return _fail(str(exc))
    try:
        fermat_indices = [int(x) for x in args.fermat_indices.split(",") if x.strip()]
    except ValueError:
        return _fail("--fermat-indices must be a comma-separated list of integers")
    if any(i < 0 or i > 30 for i in fermat_indices):
        return _fail("--fermat-indices must lie in [0, 30]")

    reports = []
    quad = selected & audit.QUAD_CLAIMS
    if quad:
        reports.extend(audit.audit_claims(lo, hi, quad, args.prime_bound))
    fermat_claims = selected & audit.FERMAT_CLAIMS
    if fermat_claims:
        fermat_reports = audit.audit_fermat(fermat_indices, args.prime_bound)
        reports.extend(r for r in fermat_reports if r.claim in fermat_claims)

    bad = [
        (r.claim, v)
        for r in reports
        for v in r.violations
        if not audit.verify_violation(r.claim, v)
    ]
    if bad:
        claim, v = bad[0]
        print(
            f"internal inconsistency: recorded violation failed re-verification "
            f"({claim.value}: n={v.n}, detail={v.detail})",
            file=sys.stderr,
        )
        return EXIT_INCONSISTENT

    parameters = {
        "range": f"{lo}:{hi}",
        "claims": sorted(c.value for c in selected),
        "prime_bound": args.prime_bound,
        "fermat_indices": fermat_indices,
    }
    results = [audit.report_to_dict(r) for r in reports]
    text = _envelope("audit", parameters, results)
    if args.json:
        with open(args.json, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text + "\n")
    for r in reports:
        print(
            f"{r.claim.value}: instances={r.instances_tested} "
            f"violations={len(r.violations)}"
        )
    return EXIT_FOUND


def cmd_fermat(args) -> int:
    if args.index < 0:
        return _fail("--index must be >= 0")
    if args.index > 30:
        return _fail("F_n beyond index 30 is not a desk-scale object; refusing")
    if args.mode == "lucas" and args.index < 4:
        return _fail("lucas mode needs index >= 4")
    if args.mode == "lambda" and args.index < 5:
        return _fail("lambda mode needs index >= 5")
    t = fermat_numbers.make_fermat(args.index)
    filters_on = args.filters == "on"
    parameters = {
        "index": args.index,
        "mode": args.mode,
        "budget": args.budget,
        "filters": args.filters,
    }

    if args.mode == "lucas":
        hits = fermat_numbers.lucas_search(t, args.budget)
        results = {
            "F": t.value,
            "divisors": [{"s": h.s, "divisor": h.divisor} for h in hits],
        }
        if args.json:
            print(_envelope("fermat", parameters, results))
        else:
            for h in hits:
                print(f"s={h.s} divisor={h.divisor} divides F_{args.index}")
            if not hits:
                print(f"no divisor of F_{args.index} with s <= {args.budget}")
        return EXIT_FOUND if hits else EXIT_NEGATIVE

    primes = [p for p in arith.primes_up_to(97) if p % 4 == 3] if filters_on else ()
    outcome = fermat_numbers.lambda_search(
        t, args.budget, mod3=filters_on, mod4=filters_on, primes_3mod4=primes
    )
    results = {
        "F": t.value,
        "exhausted": outcome.exhausted,
        "examined": outcome.examined,
        "skipped": outcome.skipped,
        "hits": [
            {
                "lambda": h.lam,
                "center": h.center,
                "pair": [h.center - h.root, h.center + h.root],
            }
            for h in outcome.hits
        ],
    }
    if args.json:
        print(_envelope("fermat", parameters, results))
    else:
        for h in outcome.hits:
            print(
                f"lambda={h.lam} center={h.center}: "
                f"F_{args.index} = {h.center - h.root} * {h.center + h.root}"
            )
        if not outcome.hits:
            tail = "budget exhausted" if outcome.exhausted else "interval exhausted"
            print(f"no factor pair found ({tail})")
    return EXIT_FOUND if outcome.hits else EXIT_NEGATIVE


def cmd_bench(args) -> int:
    try:
        targets = [int(x) for x in args.targets.split(",") if x.strip()]
    except ValueError:
        return _fail("--targets must be a comma-separated list of integers")
    if not targets:
        return _fail("no targets given")
    if args.strategies.lower() == "all":
        strategies = list(bench.Strategy)
    else:
        try:
            strategies = [bench.Strategy(s.strip()) for s in args.strategies.split(",")]
        except ValueError:
            names = ", ".join(s.value for s in bench.Strategy)
            return _fail(f"--strategies must be 'all' or a list from: {names}")
    try:
        rows = bench.run_bench(targets, strategies, repetitions=args.repetitions)
    except ValueError as exc:
        return _fail(str(exc))
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["strategy", "n", "N", "candidates", "found", "elapsed_ns"])
            for row in rows:
                writer.writerow(
                    [
                        row.strategy,
                        row.target_n,
                        row.N,
                        row.candidates_examined,
                        "true" if row.found else "false",
                        row.elapsed_ns,
                    ]
                )
    for row in rows:
        print(
            f"{row.strategy:<28} n={row.target_n:<6} candidates={row.candidates_examined:<8} "
            f"found={str(row.found).lower():<5} elapsed_ns={row.elapsed_ns}"
        )
    return EXIT_FOUND


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fermatsieve",
        description="Difference-of-squares factoring toolkit for 4n^2+1 and Fermat numbers",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", help="factor N = 4n^2+1 with the candidate sieve")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int, help="generator n (N = 4n^2+1)")
    group.add_argument("--N", type=int, help="target N, validated to the 4n^2+1 form")
    p.add_argument("--all", action="store_true", help="report every factor pair")
    p.add_argument(
        "--heuristic-filters",
        action="store_true",
        help="also apply the heuristic congruence skips (may miss factors)",
    )
    p.add_argument("--prime-bound", type=int, default=97, help="filter primes <= bound")
    p.add_argument("--json", action="store_true", help="emit a JSON envelope")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("factor-generic", help="plain difference-of-squares factoring")
    p.add_argument("--N", type=int, required=True, help="odd N >= 9")
    p.add_argument("--budget", type=int, default=None, help="max centers to examine")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_factor_generic)

    p = sub.add_parser("candidates", help="inspect the u interval and residue sets")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--prime", type=int, default=None, help="show residue sets mod this prime")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_candidates)

    p = sub.add_parser("audit", help="run the claim audit and write its ledger")
    p.add_argument("--range", required=True, help="generator range lo:hi")
    p.add_argument("--claims", default="all", help="comma-separated claim ids, or 'all'")
    p.add_argument("--prime-bound", type=int, default=97)
    p.add_argument("--json", default=None, metavar="PATH", help="write the report JSON here")
    p.add_argument(
        "--fermat-indices",
        default="5,6",
        help="Fermat indices to audit when F-claims are selected",
    )
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("fermat", help="search for Fermat-number divisors")
    p.add_argument("--index", type=int, required=True, help="Fermat index n of F_n")
    p.add_argument("--mode", choices=("lucas", "lambda"), required=True)
    p.add_argument("--budget", type=int, default=10000)
    p.add_argument("--filters", choices=("on", "off"), default="off")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fermat)

    p = sub.add_parser("bench", help="compare factoring strategies")
    p.add_argument("--targets", required=True, help="comma-separated generators n")
    p.add_argument("--strategies", default="all")
    p.add_argument("--csv", default=None, metavar="PATH")
    p.add_argument("--repetitions", type=int, default=5)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.func(args)


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
