"""Command-line interface: count, distribution, table, verify, factors.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input or refused
computation.  Counts can exceed 2**63, so JSON carries them as decimal
strings; text and CSV print plain decimal digits.
"""

import argparse
import collections
import json
import sys

from . import counting, galois, oracle, spectrum
from .errors import KnormalError


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knormal",
        description="Exact counts of k-normal elements of F_{q^n} over F_q.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_q(p):
        p.add_argument("--q", type=int, required=True, help="field order (prime power)")

    def add_n(p):
        p.add_argument("--n", type=int, required=True, help="extension degree")

    def add_format(p, default):
        p.add_argument(
            "--format",
            choices=("text", "csv", "json"),
            default=default,
            help=f"output format (default {default})",
        )

    p = sub.add_parser("count", help="number of k-normal elements")
    add_q(p)
    add_n(p)
    p.add_argument("--k", type=int, required=True, help="normality defect k")
    add_format(p, "text")
    p.set_defaults(handler=cmd_count)

    p = sub.add_parser("distribution", help="counts for every k = 0..n")
    add_q(p)
    add_n(p)
    add_format(p, "text")
    p.set_defaults(handler=cmd_distribution)

    p = sub.add_parser("table", help="counts over a range of n")
    add_q(p)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k-max", type=int, default=0, help="largest k column (default 0)")
    add_format(p, "csv")
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("verify", help="cross-check formulas against ground truth")
    add_q(p)
    add_n(p)
    p.add_argument(
        "--oracle",
        choices=("brute", "cosets", "closed-forms", "all"),
        default="all",
        help="which independent checks to run (default all)",
    )
    p.add_argument(
        "--max-brute",
        type=int,
        default=oracle.DEFAULT_MAX_ORDER,
        help="largest q**n the brute-force sweep will accept",
    )
    p.add_argument(
        "--modulus-trials",
        type=int,
        default=1,
        help="how many distinct field representations to sweep",
    )
    add_format(p, "text")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("factors", help="structure of x**n - 1 over F_q")
    add_q(p)
    add_n(p)
    add_format(p, "text")
    p.set_defaults(handler=cmd_factors)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except KnormalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


def cmd_count(args) -> int:
    value = counting.count_k_normal(args.q, args.n, args.k)
    if args.format == "json":
        _emit_json({"q": args.q, "n": args.n, "k": args.k, "count": str(value)})
    elif args.format == "csv":
        print("q,n,k,count")
        print(f"{args.q},{args.n},{args.k},{value}")
    else:
        print(value)
    return 0


def cmd_distribution(args) -> int:
    dist = counting.distribution(args.q, args.n)
    total = dist.total()
    power = args.q**args.n
    if args.format == "json":
        _emit_json(
            {
                "q": args.q,
                "n": args.n,
                "counts": [str(c) for c in dist.counts],
                "sum_check": total == power,
            }
        )
    elif args.format == "csv":
        print("k,count")
        for k, c in enumerate(dist.counts):
            print(f"{k},{c}")
    else:
        for k, c in enumerate(dist.counts):
            print(f"N_{k} = {c}")
        print(f"sum = {total} = {args.q}^{args.n}")
    if total != power:
        print("error: counts do not sum to q**n", file=sys.stderr)
        return 1
    return 0


def cmd_table(args) -> int:
    if args.n_min < 1 or args.n_min > args.n_max or args.k_max < 0:
        print(
            f"error: invalid range n = {args.n_min}..{args.n_max}, k_max = {args.k_max}",
            file=sys.stderr,
        )
        return 2
    rows = []
    for n in range(args.n_min, args.n_max + 1):
        dist = counting.distribution(args.q, n)
        rows.append([dist[k] for k in range(min(args.k_max, n) + 1)])
    header = ["n"] + [f"N_{k}" for k in range(args.k_max + 1)]
    if args.format == "json":
        _emit_json(
            {
                "q": args.q,
                "k_max": args.k_max,
                "rows": [
                    {"n": args.n_min + i, "counts": [str(c) for c in row]}
                    for i, row in enumerate(rows)
                ],
            }
        )
        return 0
    cells = [
        [str(args.n_min + i)]
        + [str(row[k]) if k < len(row) else "" for k in range(args.k_max + 1)]
        for i, row in enumerate(rows)
    ]
    if args.format == "csv":
        print(",".join(header))
        for line in cells:
            print(",".join(line))
    else:
        widths = [
            max(len(header[c]), max(len(line[c]) for line in cells))
            for c in range(len(header))
        ]
        print("  ".join(h.rjust(w) for h, w in zip(header, widths)))
        for line in cells:
            print("  ".join(v.rjust(w) for v, w in zip(line, widths)))
    return 0


def cmd_factors(args) -> int:
    params = spectrum.derive_params(args.q, args.n)
    pattern = spectrum.degree_pattern(params)
    count = spectrum.omega(params)
    pairs = [
        ("q", params.q),
        ("p", params.p),
        ("m", params.m),
        ("n", params.n),
        ("n0", params.n0),
        ("s", params.s),
        ("d", params.d),
    ]
    if args.format == "json":
        _emit_json(
            dict(pairs)
            | {"v": {str(r): v for r, v in pattern.items()}, "omega": count}
        )
    elif args.format == "csv":
        print("key,value")
        for key, value in pairs:
            print(f"{key},{value}")
        for r, v in pattern.items():
            print(f"v_{r},{v}")
        print(f"omega,{count}")
    else:
        for key, value in pairs:
            print(f"{key} = {value}")
        for r, v in pattern.items():
            print(f"v_{r} = {v}")
        print(f"omega = {count}")
    return 0


def cmd_verify(args) -> int:
    checks = _run_checks(
        args.q, args.n, args.oracle, args.max_brute, args.modulus_trials
    )
    passed = all(ok for _, ok, _ in checks)
    if args.format == "json":
        _emit_json(
            {
                "q": args.q,
                "n": args.n,
                "checks": [
                    {"name": name, "passed": ok, "detail": detail}
                    for name, ok, detail in checks
                ],
                "passed": passed,
            }
        )
    else:
        for name, ok, detail in checks:
            line = f"{'PASS' if ok else 'FAIL'} {name}"
            if detail and not ok:
                line += f" ({detail})"
            print(line)
        state = "all passed" if passed else "FAILED"
        print(f"{len(checks)} checks, {state}")
    return 0 if passed else 1


def _run_checks(q, n, which, max_brute, modulus_trials):
    """Each check is (name, passed, detail); independent routes only."""
    checks = []
    dist = counting.distribution(q, n)
    if which in ("brute", "all"):
        for trial in range(modulus_trials):
            brute = oracle.brute_force_distribution(
                q, n, max_order=max_brute, modulus_index=trial
            )
            name = "formula-vs-brute"
            if modulus_trials > 1:
                name += f"[modulus {trial}]"
            checks.append(
                (name, brute == dist, f"{brute.counts} vs {dist.counts}")
            )
    if which in ("cosets", "all"):
        params = spectrum.derive_params(q, n)
        pattern = spectrum.degree_pattern(params)
        sizes = collections.Counter(oracle.cyclotomic_cosets(q, params.n0))
        ok = dict(sizes) == pattern.entries and spectrum.omega(params) == sum(
            sizes.values()
        )
        checks.append(
            ("pattern-vs-cosets", ok, f"{dict(sizes)} vs {pattern.entries}")
        )
    if which in ("closed-forms", "all"):
        forms = {
            1: counting.closed_form_n1,
            2: counting.closed_form_n2,
            3: counting.closed_form_n3,
        }
        bad = []
        for k, form in forms.items():
            if k <= n and form(q, n) != dist[k]:
                bad.append(k)
        checks.append(
            ("closed-forms", not bad, f"mismatch at k in {bad}" if bad else "")
        )
    if which == "all":
        checks.append(
            ("sum-rule", dist.total() == q**n, f"{dist.total()} != {q}^{n}")
        )
    return checks


def _emit_json(payload) -> None:
    print(json.dumps(payload, sort_keys=True))


if __name__ == "__main__":
    entry()
