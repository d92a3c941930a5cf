"""Command-line front end.

Subcommands: bound, expect-kernel, mc, table1, oracle, mds, intersect,
limit-q, apps {pir,sdmm,csst}, example-mds.  Exit codes: 0 success,
1 failed oracle check, 2 usage or validation error, 3 enumeration budget
exceeded, 4 I/O error.  Exact rationals print as num/den plus a decimal
rendering to 10 significant digits; estimates and app reports print as
JSON.  STARPROD_THREADS overrides --threads when the flag is absent.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

import mpmath

from . import apps, catalog, exact, oracle, sampling
from .codes import code_from_matrix
from .errors import BudgetExceeded, StarprodError
from .matrices import load_matrix, save_matrix
from .sampling import RandomModel


def _dec(x: Fraction) -> str:
    with mpmath.workdps(25):
        val = mpmath.mpf(x.numerator) / mpmath.mpf(x.denominator)
        return mpmath.nstr(val, 10)


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _emit(args, plain_lines, payload) -> None:
    if getattr(args, "format", "plain") == "json":
        print(json.dumps(payload))
    else:
        for line in plain_lines:
            print(line)


def _params(args) -> exact.Params:
    return exact.Params(q=args.q, n=args.n, k1=args.k1, k2=args.k2)


def _model(args) -> RandomModel:
    return RandomModel.UNIFORM_SUBSPACE if args.model == "uniform" else RandomModel.SYSTEMATIC


def _load_code(path):
    try:
        mat = load_matrix(path)
    except OSError:
        raise
    return code_from_matrix(mat)


# -- subcommands -------------------------------------------------------------


def cmd_bound(args) -> int:
    p = _params(args)
    res = exact.star_dim_lower_bound(p)
    e = res.kernel_expectation
    _emit(
        args,
        [
            f"E[kernel] = {_frac(e)} (= {_dec(e)})",
            f"bound = {res.bound:.10g}",
        ],
        {
            "q": p.q,
            "n": p.n,
            "k1": p.k1,
            "k2": p.k2,
            "kernel_num": str(e.numerator),
            "kernel_den": str(e.denominator),
            "bound": res.bound,
        },
    )
    return 0


def cmd_expect_kernel(args) -> int:
    p = _params(args)
    e = exact.expected_kernel_size(p)
    _emit(
        args,
        [f"E[kernel] = {_frac(e)} (= {_dec(e)})"],
        {
            "q": p.q,
            "n": p.n,
            "k1": p.k1,
            "k2": p.k2,
            "kernel_num": str(e.numerator),
            "kernel_den": str(e.denominator),
        },
    )
    return 0


def cmd_mc(args) -> int:
    p = _params(args)
    model = _model(args)
    fn = {
        "star-dim": sampling.mc_star_dim,
        "kernel-size": sampling.mc_kernel_size,
        "full-dim": sampling.mc_full_dim_frequency,
    }[args.stat]
    est = fn(p, model, args.samples, args.seed, args.threads)
    obj = est.to_json()
    obj["stat"] = args.stat
    if args.stat == "full-dim" and p.n >= p.k1 * p.k2:
        # advisory asymptotic bound, reported beside the frequency
        obj["asymptotic_bound"] = exact.full_dim_probability_bound(p.q, p.n, p.k1, p.k2)
    print(json.dumps(obj))
    return 0


def cmd_table1(args) -> int:
    rows = sampling.reproduce_table1(args.samples, args.seed, args.threads)
    if args.format == "json":
        print(json.dumps([r.to_json() for r in rows]))
    else:
        print(sampling.TABLE1_CSV_HEADER)
        for r in rows:
            print(r.to_csv())
    return 0


def _oracle_kernel(args):
    for q in (2, 3, 5, 7):
        if q > args.qmax:
            continue
        for n in range(1, args.nmax + 1):
            for k1 in range(1, min(n, args.kmax) + 1):
                for k2 in range(k1, min(n, args.kmax) + 1):
                    p = exact.Params(q=q, n=n, k1=k1, k2=k2)
                    pairs = oracle.systematic_count(q, n, k1) * oracle.systematic_count(q, n, k2)
                    if pairs > oracle.DEFAULT_BUDGET:
                        continue
                    yield (
                        f"kernel q={q} n={n} k1={k1} k2={k2}",
                        exact.expected_kernel_size(p) == oracle.exact_expected_kernel(p),
                    )


def _oracle_zerodiag(args):
    for q in (2, 3, 5, 7):
        if q > args.qmax:
            continue
        for k1 in range(1, args.kmax + 1):
            for k2 in range(k1, args.kmax + 2):
                counts = oracle.count_zero_diag_oracle(k1, k2, q)
                ok = True
                for r in range(k1 + 1):
                    if counts.by_rank.get(r, 0) != exact.count_zero_diag_rank(k1, k2, r, q):
                        ok = False
                yield f"zerodiag q={q} k1={k1} k2={k2}", ok


def _oracle_intersection(args):
    for q in (2, 3):
        if q > args.qmax:
            continue
        for n in range(1, args.nmax + 1):
            for k1 in range(1, n + 1):
                for k2 in range(k1, n + 1):
                    p = exact.Params(q=q, n=n, k1=k1, k2=k2)
                    yield (
                        f"intersection q={q} n={n} k1={k1} k2={k2}",
                        exact.expected_intersection_dim(p) == oracle.exact_expected_intersection(p),
                    )


def _oracle_support(args):
    from .fields import field_make
    from .codes import support as code_support
    for q in (2, 3):
        if q > args.qmax:
            continue
        field = field_make(q)
        for n in range(1, args.nmax + 1):
            for ell in range(1, n + 1):
                counts = {}
                for c in oracle.enumerate_subspaces(field, n, ell):
                    counts[len(code_support(c))] = counts.get(len(code_support(c)), 0) + 1
                ok = all(
                    counts.get(s, 0)
                    == exact.binom(n, s) * exact.count_subspaces_with_support(q, n, ell, s)
                    for s in range(n + 1)
                )
                yield f"support q={q} n={n} ell={ell}", ok


def _oracle_mds(args):
    from .fields import field_make
    from .codes import is_mds
    grid = [(2, 3, 2), (3, 4, 2)]
    for q, n, k1 in grid:
        if q > args.qmax or n > args.nmax:
            continue
        field = field_make(q)
        codes_found = [c for c in oracle.enumerate_subspaces(field, n, k1) if is_mds(c)]
        for k2 in range(1, n + 1):
            if not (k2 == 1 or k2 >= n - k1 + 1):
                continue
            want = exact.expected_star_dim_mds(q, n, k1, k2)
            ok = all(
                oracle.exact_expected_star_dim_fixed(c, k2) == want for c in codes_found
            )
            yield f"mds q={q} n={n} k1={k1} k2={k2} ({len(codes_found)} codes)", ok


def cmd_oracle(args) -> int:
    checks = {
        "kernel": _oracle_kernel,
        "zerodiag": _oracle_zerodiag,
        "intersection": _oracle_intersection,
        "support": _oracle_support,
        "mds": _oracle_mds,
    }
    names = list(checks) if args.check == "all" else [args.check]
    failed = 0
    for name in names:
        for label, ok in checks[name](args):
            print(f"{'PASS' if ok else 'FAIL'} {label}")
            failed += 0 if ok else 1
    print(f"{'all checks passed' if failed == 0 else f'{failed} checks FAILED'}")
    return 0 if failed == 0 else 1


def cmd_mds(args) -> int:
    val = exact.expected_star_dim_mds(args.q, args.n, args.k1, args.k2)
    _emit(
        args,
        [f"E[star dim] = {_frac(val)} (= {_dec(val)})"],
        {
            "q": args.q,
            "n": args.n,
            "k1": args.k1,
            "k2": args.k2,
            "value_num": str(val.numerator),
            "value_den": str(val.denominator),
        },
    )
    return 0


def cmd_intersect(args) -> int:
    p = _params(args)
    val = exact.expected_intersection_dim(p)
    lines = [f"E[intersection dim] = {_frac(val)} (= {_dec(val)})"]
    payload = {
        "q": p.q,
        "n": p.n,
        "k1": p.k1,
        "k2": p.k2,
        "value_num": str(val.numerator),
        "value_den": str(val.denominator),
    }
    if args.mc:
        est = sampling.mc_intersection_dim(p, args.samples, args.seed, args.threads)
        lines.append(json.dumps(est.to_json()))
        payload["estimate"] = est.to_json()
    _emit(args, lines, payload)
    return 0


def cmd_limit_q(args) -> int:
    qs = [int(tok) for tok in args.qlist.split(",") if tok.strip()]
    rows = []
    for q in qs:
        p = exact.Params(q=q, n=args.n, k1=args.k1, k2=args.k2)
        e = exact.expected_kernel_size(p)
        lim = exact.kernel_limit_value(p)
        rows.append(
            {
                "q": q,
                "kernel_num": str(e.numerator),
                "kernel_den": str(e.denominator),
                "limit_num": str(lim.numerator),
                "limit_den": str(lim.denominator),
                "abs_gap": float(abs(e - lim)),
            }
        )
    _emit(
        args,
        [
            f"q={r['q']}: E = {r['kernel_num']}/{r['kernel_den']}, "
            f"limit = {r['limit_num']}/{r['limit_den']}, |gap| = {r['abs_gap']:.6g}"
            for r in rows
        ],
        rows,
    )
    return 0


def cmd_apps(args) -> int:
    if args.app == "pir":
        rep = apps.pir_rate_bounds(_load_code(args.c), _load_code(args.d))
    elif args.app == "sdmm":
        rep = apps.sdmm_thresholds(_load_code(args.ca), _load_code(args.cb))
    else:
        c2 = _load_code(args.c2) if args.c2 else None
        rep = apps.csst_envelope(_load_code(args.c1), c2)
    print(json.dumps(rep.to_json()))
    return 0


def cmd_example_mds(args) -> int:
    if args.code:
        codes = [("C", _load_code(args.code))]
    else:
        a, b = catalog.mds63_gf7_codes()
        codes = [("C1", a), ("C2", b)]
    if args.dump:
        os.makedirs(args.dump, exist_ok=True)
        for name, c in codes:
            path = os.path.join(args.dump, f"{name}.mat")
            save_matrix(c.basis, path)
            print(f"wrote {path}")
    threads = sampling.resolve_threads(args.threads)
    for name, c in codes:
        val = oracle.exact_expected_star_dim_fixed(c, args.l, threads=threads)
        print(f"E[dim {name}*D] (dim D = {args.l}) = {_frac(val)} (= {_dec(val)})")
    return 0


# -- parser ------------------------------------------------------------------


def _add_params(sp, with_n=True):
    sp.add_argument("-q", type=int, required=True, help="field order (prime power)")
    if with_n:
        sp.add_argument("-n", type=int, required=True, help="code length")
    sp.add_argument("-k1", type=int, required=True, help="first dimension")
    sp.add_argument("-k2", type=int, required=True, help="second dimension")


def _add_common(sp):
    sp.add_argument("--format", choices=["plain", "json"], default="plain")


def _add_mc_opts(sp):
    sp.add_argument("--samples", type=int, default=sampling.DEFAULT_SAMPLES)
    sp.add_argument("--seed", type=int, default=sampling.DEFAULT_SEED)
    sp.add_argument("--threads", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starprod",
        description="Star products of linear codes: exact formulas, Monte Carlo, oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="exact kernel expectation and the Jensen bound")
    _add_params(p)
    _add_common(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("expect-kernel", help="exact expected kernel size")
    _add_params(p)
    _add_common(p)
    p.set_defaults(func=cmd_expect_kernel)

    p = sub.add_parser("mc", help="Monte Carlo estimate (JSON)")
    _add_params(p)
    _add_mc_opts(p)
    p.add_argument("--model", choices=["systematic", "uniform"], default="systematic")
    p.add_argument(
        "--stat", choices=["star-dim", "kernel-size", "full-dim"], default="star-dim"
    )
    p.set_defaults(func=cmd_mc)

    p = sub.add_parser("table1", help="36-row bound-vs-Monte-Carlo benchmark grid")
    _add_mc_opts(p)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("oracle", help="formula-vs-enumeration consistency checks")
    p.add_argument(
        "--check",
        choices=["kernel", "zerodiag", "intersection", "support", "mds", "all"],
        default="all",
    )
    p.add_argument("--qmax", type=int, default=3)
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--kmax", type=int, default=3)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("mds", help="expected star dimension, fixed MDS code vs uniform code")
    _add_params(p)
    _add_common(p)
    p.set_defaults(func=cmd_mds)

    p = sub.add_parser("intersect", help="expected intersection dimension")
    _add_params(p)
    _add_common(p)
    p.add_argument("--mc", action="store_true", help="also run a Monte Carlo estimate")
    _add_mc_opts(p)
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("limit-q", help="kernel expectation against its large-field limit")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k1", type=int, required=True)
    p.add_argument("-k2", type=int, required=True)
    p.add_argument("--qlist", default="2,3,5,7,11,13,17,19,23")
    _add_common(p)
    p.set_defaults(func=cmd_limit_q)

    p = sub.add_parser("apps", help="application figure-of-merit calculators")
    appsub = p.add_subparsers(dest="app", required=True)
    pa = appsub.add_parser("pir", help="retrieval-rate bounds")
    pa.add_argument("--c", required=True, help="matrix file for the storage code")
    pa.add_argument("--d", required=True, help="matrix file for the query code")
    pa.set_defaults(func=cmd_apps)
    pa = appsub.add_parser("sdmm", help="recovery threshold and straggler tolerance")
    pa.add_argument("--ca", required=True)
    pa.add_argument("--cb", required=True)
    pa.set_defaults(func=cmd_apps)
    pa = appsub.add_parser("csst", help="CSS-T pair feasibility over GF(2)")
    pa.add_argument("--c1", required=True)
    pa.add_argument("--c2", default=None)
    pa.set_defaults(func=cmd_apps)

    p = sub.add_parser("example-mds", help="exact fixed-code star expectations over GF(7)")
    p.add_argument("--l", type=int, default=2, help="dimension of the random partner code")
    p.add_argument("--code", default=None, help="matrix file overriding the built-in pair")
    p.add_argument("--dump", default=None, help="directory to write the generator matrices to")
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=cmd_example_mds)

    return parser


def main(argv=None) -> int:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(line_buffering=True)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args) or 0
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except BrokenPipeError:
        # downstream consumer closed the pipe; exit quietly
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (StarprodError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
