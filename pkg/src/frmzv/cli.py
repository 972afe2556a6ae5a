"""Command-line interface: ``python -m frmzv <subcommand> ...``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import List, Optional

import mpmath

from . import checks
from .finite import fmzv_mod_p
from .index import IndexFormatError, dual, format_index, index_to_word, parse_index
from .numerics import DEFAULT_PREC, error_bound, eval_star, mzv_holder
from .products import shuffle_indices, stuffle
from .regularization import regularize
from .series import gamma_quotient_series
from .symmetric import frmzv, frmzv_star_star, sum_S, sum_S_star

PREC_ENV = "FRMZV_PREC"


def _default_prec() -> int:
    raw = os.environ.get(PREC_ENV)
    if raw is None:
        return DEFAULT_PREC
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"error: {PREC_ENV}={raw!r} is not an integer") from None


def _index_arg(text: str):
    try:
        return parse_index(text)
    except IndexFormatError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _prime_range(text: str):
    lo, sep, hi = text.partition("..")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=False)


def _expansion_obj(exp) -> dict:
    return {"value": exp.value.to_json_obj(), "t_degree": exp.t_degree}


# ---------------------------------------------------------------------------
# subcommands

def cmd_parse(args, out) -> int:
    idx = args.index
    print(_dump({"index": format_index(idx), "word": index_to_word(idx), "weight": sum(idx),
                 "depth": len(idx), "height": sum(1 for k in idx if k > 1),
                 "admissible": bool(idx) and idx[0] >= 2}), file=out)
    return 0


def cmd_dual(args, out) -> int:
    print(format_index(dual(args.index)), file=out)
    return 0


def cmd_product(args, out) -> int:
    f = stuffle if args.mode == "stuffle" else shuffle_indices
    print(f(args.u, args.v).to_json(), file=out)
    return 0


def cmd_regularize(args, out) -> int:
    print(_dump(regularize(args.mode, args.index).to_json_obj()), file=out)
    return 0


def cmd_frmzv(args, out) -> int:
    if args.mode == "starstar":
        exp = frmzv_star_star(args.index)
    else:
        exp = frmzv(args.mode, args.index)
    obj = _expansion_obj(exp)
    if args.eval:
        obj["numeric"] = mpmath.nstr(exp.evaluate(args.prec), int(args.prec * 0.30103))
    print(_dump(obj), file=out)
    return 0


def cmd_sums(args, out) -> int:
    f = sum_S_star if args.star else sum_S
    print(_dump(_expansion_obj(f(args.k, args.n, args.i))), file=out)
    return 0


def cmd_eval(args, out) -> int:
    value = eval_star(args.index, args.prec) if args.star else mzv_holder(args.index, args.prec)
    digits = int(args.prec * 0.30103)
    print(_dump({"index": format_index(args.index), "star": args.star,
                 "value": mpmath.nstr(value, digits),
                 "error_bound": mpmath.nstr(error_bound(args.prec), 3)}), file=out)
    return 0


def cmd_series(args, out) -> int:
    G = gamma_quotient_series(args.order, args.prec)
    digits = int(args.prec * 0.30103)
    rows = []
    for total in range(args.order + 1):
        for p in range(total + 1):
            c = G[p, total - p]
            if c != 0:
                rows.append({"x": p, "y": total - p, "coeff": mpmath.nstr(c, digits)})
    print(_dump({"series": "gamma-quotient", "order": args.order, "terms": rows,
                 "error_bound": mpmath.nstr(error_bound(args.prec), 3)}), file=out)
    return 0


def cmd_fmzv(args, out) -> int:
    v = fmzv_mod_p(args.index, args.prime)
    print(_dump({"index": format_index(args.index), "prime": v.prime, "residue": v.residue}),
          file=out)
    return 0


def cmd_verify(args, out) -> int:
    names = list(checks.GROUPS) if args.claim == "all" else [args.claim]
    # without --prec or the environment variable each group keeps its own default
    prec = args.prec
    if prec is None and PREC_ENV in os.environ:
        prec = _default_prec()
    params = {"prec": prec, "max_k": args.max_k, "max_weight": args.max_weight,
              "primes": args.primes}
    results = checks.run_checks(names, jobs=args.jobs, **params)
    if args.json:
        for r in results:
            print(_dump(r.to_json_obj()), file=out)
    elif args.csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["claim_id", "status", "residual", "cases", "elapsed_ms", "paper_ref"])
        for r in results:
            w.writerow([r.claim_id, r.status, r.residual, r.cases, round(r.elapsed_ms, 1),
                        r.paper_ref])
        out.write(buf.getvalue())
    else:
        width = max(len(r.claim_id) for r in results)
        for r in results:
            print(f"{r.claim_id:<{width}}  {r.status:<4}  residual={r.residual:<11} "
                  f"cases={r.cases:<5} {r.elapsed_ms:9.1f} ms", file=out)
            for f in r.failures:
                print(f"{'':<{width}}    failing: {f}", file=out)
    return 0 if all(r.passed for r in results) else 1


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="frmzv",
                                 description="Finite real multiple zeta values toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse an index and show its invariants")
    p.add_argument("index", type=_index_arg)
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("dual", help="dual of an admissible index")
    p.add_argument("index", type=_index_arg)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("product", help="stuffle or shuffle product as JSON")
    p.add_argument("--mode", choices=["stuffle", "shuffle"], required=True)
    p.add_argument("u", type=_index_arg)
    p.add_argument("v", type=_index_arg)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("regularize", help="regularized polynomial in T as JSON")
    p.add_argument("--mode", choices=["harmonic", "shuffle"], required=True)
    p.add_argument("index", type=_index_arg)
    p.set_defaults(func=cmd_regularize)

    p = sub.add_parser("frmzv", help="finite real MZV as a combination of MZVs")
    p.add_argument("--mode", choices=["harmonic", "star", "shuffle", "starstar"],
                   required=True, help="'star' is the harmonic (*) version")
    p.add_argument("--eval", action="store_true", help="also print a numeric value")
    p.add_argument("--prec", type=int, default=None)
    p.add_argument("index", type=_index_arg)
    p.set_defaults(func=cmd_frmzv)

    p = sub.add_parser("sumS", help="sum of finite values over (k, n, i)")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.add_argument("i", type=int)
    p.add_argument("--star", action="store_true", help="sum the star-star values instead")
    p.set_defaults(func=cmd_sums)

    p = sub.add_parser("eval", help="numeric MZV or star value")
    p.add_argument("--star", action="store_true")
    p.add_argument("--prec", type=int, default=None)
    p.add_argument("index", type=_index_arg)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("series", help="truncated generating series")
    p.add_argument("name", choices=["gamma-quotient"])
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--prec", type=int, default=None)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("fmzv", help="finite MZV modulo a prime")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("index", type=_index_arg)
    p.set_defaults(func=cmd_fmzv)

    p = sub.add_parser("verify", help="run verification sweeps")
    p.add_argument("claim", choices=["all", *checks.GROUPS, *checks.ALIASES])
    p.add_argument("--max-k", type=int, default=None)
    p.add_argument("--max-weight", type=int, default=None,
                   help="weight cap; by default each check uses its acceptance range")
    p.add_argument("--prec", type=int, default=None)
    p.add_argument("--primes", type=_prime_range, default=None, metavar="LO..HI")
    p.add_argument("--jobs", type=int, default=1)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if getattr(args, "prec", None) is None and args.command in {"frmzv", "eval", "series"}:
        args.prec = _default_prec()
    try:
        return args.func(args, out)
    except (ValueError, IndexFormatError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
