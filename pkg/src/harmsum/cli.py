"""Command-line front end: compute, verify, table, search, selftest.

Exit codes: 0 success, 1 a verification or selftest failure, 2 usage error.
Data goes to stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import acceptance
from .lacunary import check_f_congruence, check_kappa_congruence
from .modarith import Prime, fermat_quotient
from .quotients import x_of, z_of
from .recurrence import F_SPEC, G_SPEC, J_SPEC, KAPPA_SPEC, eval_mod, multisection_block, terms_exact
from .search import DEFAULT_SEGMENT, CheckpointError, SearchTarget, _small_primes, format_hit, iter_scan
from .sums import COMPONENT_TABLE, SumSpec, check_oracle_equivalence, s_components, verify_relations

SEQUENCES = {"f": F_SPEC, "g": G_SPEC, "j": J_SPEC, "kappa": KAPPA_SPEC}


class UsageError(Exception):
    pass


def _emit(record: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(record))
    else:
        print("\t".join(str(v) for v in record.values()))


def _quantity(p: int, what: str) -> int:
    if what == "q2":
        return fermat_quotient(2, p)
    if what == "q3":
        return fermat_quotient(3, p)
    if what == "X":
        return x_of(p)
    if what == "Z":
        return z_of(p)
    t = SearchTarget.parse(what)
    if t.kind != "sum":
        raise ValueError(f"unknown quantity {what!r}")
    return s_components(t.spec, p)


def cmd_compute(args) -> int:
    try:
        p = Prime(args.p)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    wanted = args.what or ["all"]
    if "all" in wanted:
        wanted = [w for w in ("q2", "q3", "X", "Z") if SearchTarget(w).applies_to(p)]
        wanted += [f"sum:{k}/{N}" for N in sorted(COMPONENT_TABLE) if p > N for k in range(N)]
    for what in wanted:
        try:
            value = _quantity(p, what)
        except ValueError as exc:
            raise UsageError(f"{what} at p = {p}: {exc}") from None
        _emit({"p": int(p), "quantity": what, "value": int(value)}, args.format)
    return 0


def _verify_prime(p: int) -> list[str]:
    failures = []
    if p >= 5:
        for spec in (F_SPEC, KAPPA_SPEC, J_SPEC):
            if eval_mod(spec, p, p) != 0:
                failures.append(f"{spec.name}(p) divisible by p")
        if not check_f_congruence(p):
            failures.append("f(p) T-sum congruence mod p^2")
        if not check_kappa_congruence(p):
            failures.append("kappa(p) T-sum congruence mod p^2")
    if p > 18:
        failures += verify_relations(p).failures
        failures += check_oracle_equivalence(p).failures
    return failures


def cmd_verify(args) -> int:
    if args.pmin > args.pmax:
        raise UsageError("--pmin must not exceed --pmax")
    primes = [int(p) for p in _small_primes(args.pmax) if p >= args.pmin]
    failed = 0
    for p in primes:
        for name in _verify_prime(p):
            failed += 1
            _emit({"p": p, "failed": name}, args.format)
    print(f"checked {len(primes)} primes in [{args.pmin}, {args.pmax}]: {failed} failures", file=sys.stderr)
    return 1 if failed else 0


def cmd_table(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    if args.name == "h-block":
        for cls in [args.cls] if args.cls else [1, 2, 3, 4]:
            for m, value in enumerate(multisection_block(cls, args.n), 1):
                _emit({"class": cls, "m": m, "value": value}, args.format)
        return 0
    for n, value in enumerate(terms_exact(SEQUENCES[args.name], args.n), 1):
        _emit({"n": n, "value": value}, args.format)
    return 0


def cmd_search(args) -> int:
    try:
        targets = [SearchTarget.parse(t) for t in args.target]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    hi = args.bound if args.bound is not None else args.pmax
    if hi is None:
        raise UsageError("give --bound or --pmax")
    if not 2 <= args.pmin <= hi:
        raise UsageError("need 2 <= pmin <= bound")
    try:
        for hit in iter_scan(targets, args.pmin, hi, args.workers, args.segment, args.checkpoint):
            print(format_hit(hit, args.format), flush=True)
    except CheckpointError as exc:
        raise UsageError(str(exc)) from None
    return 0


def cmd_selftest(args) -> int:
    results = acceptance.run_all(extended=args.extended, echo=lambda line: print(line, flush=True))
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="harmsum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="residues of q2, q3, X, Z and s(k,N) at one prime")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--what", action="append", help="all | q2 | q3 | X | Z | sum:k/N (repeatable)")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="check every identity over a prime range")
    p.add_argument("--pmin", type=int, default=5)
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="exact sequence values")
    p.add_argument("--name", choices=(*SEQUENCES, "h-block"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cls", type=int, choices=(1, 2, 3, 4), help="h-block class (default: all four)")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("search", help="primes where targets vanish")
    p.add_argument("--target", action="append", required=True, help="X | Z | q2 | q3 | sum:k/N (repeatable)")
    p.add_argument("--bound", type=int, help="upper end of the prime range")
    p.add_argument("--pmin", type=int, default=2)
    p.add_argument("--pmax", type=int, help="alias for --bound")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--segment", type=int, default=DEFAULT_SEGMENT)
    p.add_argument("--checkpoint", help="resume from and record progress in this file")
    p.add_argument("--format", choices=("tsv", "json"), default="json")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("selftest", help="run the acceptance checks")
    p.add_argument("--extended", action="store_true", help="include the search to 3e7")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"harmsum: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
