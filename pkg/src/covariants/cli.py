"""socov: command-line access to the counts, tables, identity checks and certificates.

Exit codes: 0 verified, 1 identity/certificate failure, 2 usage error,
3 refusal of an infeasible exhaustive computation.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import freeness, invariants
from .bruteforce import BruteForceTooLarge, so_invariant_dim_bruteforce
from .fields import QQ, parse_field
from .invariants import divide_check
from .multilinear import verify
from .weyl import MODULE_KINDS, highest_weight, parse_weight, poincare_multiplicity

SCHEMA = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INFEASIBLE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _parse_mode(text):
    if text is None:
        return None, None
    if text == "exhaustive":
        return "exhaustive", None
    if text == "randomized":
        return "randomized", None
    if text.startswith("randomized:"):
        try:
            trials = int(text.split(":", 1)[1])
        except ValueError:
            raise UsageError(f"bad trial count in --mode {text!r}")
        if trials < 1:
            raise UsageError("--mode randomized:T needs T >= 1")
        return "randomized", trials
    raise UsageError(f"--mode must be exhaustive or randomized[:T], got {text!r}")


def _parse_divide(text):
    if not text:
        return None
    try:
        degs = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--divide expects comma-separated degrees, got {text!r}")
    if not degs or any(d < 1 for d in degs):
        raise UsageError("--divide degrees must be positive")
    return degs


# commands ----------------------------------------------------------------

def cmd_dims(args):
    n = args.n if args.n is not None else 2
    if not 1 <= n <= invariants.N_MAX:
        raise UsageError(f"dims supports 1 <= n <= {invariants.N_MAX}")
    A = invariants.count_invariants_wedge_sym(n)
    B = invariants.count_B_plus(n)
    out = {
        "A": {"graded": list(A.coeffs), "total": A.total, "closed_form": 2 ** (n + 1)},
        "B_plus": {"graded": list(B.coeffs), "total": B.total, "closed_form": 2 * n * 2**n},
    }
    ok = A.total == 2 ** (n + 1) and B.total == 2 * n * 2**n
    out["status"] = "PASS" if ok else "FAIL"
    table = [f"n = {n}",
             _row("degree", range(max(len(A.coeffs), len(B.coeffs)))),
             _row("A", A.coeffs), _row("B+", B.coeffs),
             f"totals: A = {A.total} (2^(n+1) = {2 ** (n + 1)}), "
             f"B+ = {B.total} (2n 2^n = {2 * n * 2**n})  {out['status']}"]
    return out, table, ok


def cmd_poincare(args):
    n = args.n if args.n is not None else 3
    if n == 2:
        raise UsageError("rank 2 is not handled by the D_n character engine; "
                         "use `socov bruteforce --n 2 --target skew|sym|scalar`")
    if n < 3:
        raise UsageError("poincare needs n >= 3")
    if args.source not in MODULE_KINDS:
        raise UsageError(f"--source must be one of {MODULE_KINDS}")
    try:
        target = parse_weight(args.target, n) if args.target else highest_weight("sym2_traceless", n)
    except (ValueError, IndexError):
        raise UsageError(f"cannot parse --target {args.target!r}")
    kmax = args.kmax if args.kmax is not None else 10
    try:
        table, poly = poincare_multiplicity(args.source, target, n, kmax, args.duality)
    except ValueError as e:
        raise UsageError(str(e))
    out = {"source": args.source, "target": list(target), "n": n, "kmax": kmax,
           "duality_dim": args.duality,
           "table": [{"degree": k, "multiplicity": m} for k, m in enumerate(table)],
           "poincare": poly.to_list(), "poincare_text": str(poly)}
    lines = [_row("degree", range(len(table))), _row("multiplicity", table), f"P(t) = {poly}"]
    ok = True
    degs = _parse_divide(args.divide)
    if degs:
        div = divide_check(poly, degs)
        out["division"] = {"divisor_degrees": degs, "quotient": div.quotient.to_list(),
                           "remainder": div.remainder.to_list(), "exact": div.exact}
        lines.append(f"divide by prod(1 + t^d), d in {degs}: "
                     + ("exact, quotient " + str(div.quotient) if div.exact
                        else "remainder != 0: " + str(div.remainder)))
    return out, lines, ok


def cmd_bruteforce(args):
    n = args.n if args.n is not None else 2
    target = args.target or "skew"
    if target not in ("sym", "skew", "scalar"):
        raise UsageError("--target must be sym, skew or scalar")
    field = args.field_obj
    m = 2 * n
    N = m * (m + 1) // 2
    ks = [args.k] if args.k is not None else list(range(N + 1))
    dims = [so_invariant_dim_bruteforce(k, n, target, None if field == QQ else field,
                                        exact=field == QQ) for k in ks]
    out = {"n": n, "target": target, "degrees": ks, "dims": dims, "total": sum(dims)}
    return out, [_row("degree", ks), _row("dim", dims), f"total = {sum(dims)}"], True


def cmd_verify(args):
    n = args.n if args.n is not None else 2
    if n not in (2, 3):
        raise UsageError("verify supports n = 2, 3")
    if args.field_obj != QQ:
        raise UsageError("verify runs over the rationals; drop --field")
    fn = verify.VERIFIERS[args.identity]
    mode, trials = _parse_mode(args.mode)
    kw = {"seed": args.seed}
    if trials is not None:
        kw["trials"] = trials
    if args.identity in ("al", "eq2-vanish"):
        if mode == "exhaustive":
            raise UsageError(f"{args.identity} is a randomized check")
    elif mode is not None:
        kw["mode"] = mode
    rep = fn(n, **kw)
    lines = [f"{rep['identity']} n={n} mode={rep['mode']} seed={args.seed}: {rep['status']}"]
    for k, v in rep["scalars_found"].items():
        lines.append(f"  {k} = {v}")
    if "witness" in rep:
        lines.append(f"  witness: {rep['witness']}")
    return rep, lines, rep["status"] == "PASS"


def cmd_freeness(args):
    case = args.case
    if case == "bplus":
        n = args.n if args.n is not None else 2
        if n not in (2, 3):
            raise UsageError("freeness bplus supports n = 2, 3")
        rep = freeness.certify_freeness_Bplus(n, seed=args.seed, threads=args.threads)
        lines = [_row("k", [r["k"] for r in rep["per_degree"]]),
                 _row("candidates", [r["candidates"] for r in rep["per_degree"]]),
                 _row("rank", [r["rank"] for r in rep["per_degree"]]),
                 _row("oracle", [r["oracle"] for r in rep["per_degree"]]),
                 f"total rank {rep['total_rank']} of {rep['expected_total']}: {rep['status']}"]
    else:
        expected_n = {"bminus-sym": 3, "bminus-skew": 4}[case]
        if args.n is not None and args.n != expected_n:
            raise UsageError(f"{case} is defined for n = {expected_n}")
        rep = freeness.certify_non_freeness(case)
        lines = [_row("degree", [r["degree"] for r in rep["table"]]),
                 _row("multiplicity", [r["multiplicity"] for r in rep["table"]]),
                 f"remainder mod divisor: {rep['remainder']}",
                 "not divisible: non-free" if rep["status"] == "PASS" else "divisible"]
    return rep, lines, rep["status"] == "PASS"


def _row(head, vals):
    vals = [str(v) for v in vals]
    return f"{head:>12} | " + " ".join(f"{v:>3}" for v in vals)


COMMANDS = {"dims": cmd_dims, "poincare": cmd_poincare, "bruteforce": cmd_bruteforce,
            "verify": cmd_verify, "freeness": cmd_freeness}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--kmax", type=int)
    common.add_argument("--field", default="rational", help="rational | prime:P")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--mode", help="exhaustive | randomized[:T]")
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--threads", type=int, default=1)

    p = argparse.ArgumentParser(prog="socov", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("dims", parents=[common], help="graded invariant counts for A and B+")
    pp = sub.add_parser("poincare", parents=[common], help="multiplicity table of an irreducible")
    pp.add_argument("--source", default="sym2_traceless", help=", ".join(MODULE_KINDS))
    pp.add_argument("--target", help='highest weight, e.g. "2e1" or "e1+e2"')
    pp.add_argument("--duality", type=int, help="complete by c_k = c_(D-k)")
    pp.add_argument("--divide", help="comma-separated degrees d of prod (1 + t^d)")
    pb = sub.add_parser("bruteforce", parents=[common], help="so(2n)-kernel dimensions")
    pb.add_argument("--target", help="sym | skew | scalar")
    pb.add_argument("--k", type=int)
    pv = sub.add_parser("verify", parents=[common], help="check an identity")
    pv.add_argument("identity", choices=sorted(verify.VERIFIERS))
    pf = sub.add_parser("freeness", parents=[common], help="freeness / non-freeness certificate")
    pf.add_argument("case", choices=("bplus", "bminus-sym", "bminus-skew"))
    return p


def _config(args):
    cfg = {k: v for k, v in vars(args).items() if k != "field_obj"}
    return dict(sorted(cfg.items()))


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.field_obj = parse_field(args.field)
        if args.threads < 1:
            raise UsageError("--threads must be >= 1")
        result, lines, ok = COMMANDS[args.command](args)
    except UsageError as e:
        print(f"socov: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        if isinstance(e, BruteForceTooLarge):
            print(f"socov: infeasible: {e}", file=sys.stderr)
            return EXIT_INFEASIBLE
        print(f"socov: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except verify.Infeasible as e:
        print(f"socov: infeasible: {e}", file=sys.stderr)
        return EXIT_INFEASIBLE
    if args.format == "json":
        doc = {"schema": SCHEMA, "command": args.command, "seed": args.seed,
               "config": _config(args), "result": result}
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        print(f"# socov {args.command} (seed {args.seed})")
        print("\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
