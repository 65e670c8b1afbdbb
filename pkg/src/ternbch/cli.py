"""Command-line interface: ``ternbch <command> [options]``.

Exit codes: 0 ok, 2 bad parameters, 3 capacity exceeded without --force,
4 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import charsums as ch
from . import codes as cd
from . import cosets as cs
from . import verify as vf
from .errors import CapacityError, DomainError, TernbchError, UsageError, VerificationError
from .field import FieldContext, field_new, parse_modulus
from .poly import canonical_residues


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2)


def _context(args) -> FieldContext:
    if args.m is None:
        raise UsageError("--m is required")
    modulus = parse_modulus(args.modulus) if args.modulus else None
    return field_new(args.m, modulus)


def _weights_json(wd: dict[int, int]) -> dict[str, int]:
    return {str(w): c for w, c in sorted(wd.items())}


def _weights_csv(wd: dict[int, int]) -> str:
    return "weight,count\n" + "".join(f"{w},{c}\n" for w, c in sorted(wd.items()))


# -- commands -----------------------------------------------------------------

def cmd_field(args) -> int:
    ctx = _context(args)
    payload = {
        "m": ctx.m,
        "n": ctx.n,
        "modulus": list(ctx.modulus.coeffs),
        "primitive_check": ctx.primitive_check(),
    }
    if args.json:
        print(_dump(payload))
    else:
        print(f"GF(3^{ctx.m}): n = {ctx.n}")
        print(f"modulus: {ctx.modulus}  (ascending coefficients {payload['modulus']})")
        print(f"order of alpha: {ctx.alpha_order()}")
    return 0


def cmd_cosets(args) -> int:
    if args.m is None:
        raise UsageError("--m is required")
    n = 3**args.m - 1
    table = cs.acl_table(n, force=args.force)
    if args.top is not None:
        if args.top < 1:
            raise DomainError("--top must be positive")
        ranked = cs.top_acl_oracle(n, args.top, force=args.force)
        if args.json:
            print(_dump([c.to_dict(args.verbose) for _, group in ranked for c in group]))
        else:
            for rank, (value, group) in enumerate(ranked, 1):
                sizes = ",".join(str(c.size) for c in group)
                print(f"rank {rank}  cosets {len(group)}  sizes [{sizes}]  acl {value}")
        return 0
    every = [table.coset(L) for L in sorted(table.entries)]
    if args.json:
        print(_dump([c.to_dict(args.verbose) for c in every]))
    else:
        for c in every:
            line = f"leader {c.leader}  acl {c.acl}  size {c.size}"
            if args.verbose:
                line += f"  {list(c.elements)}"
            print(line)
    return 0


def _compute_weights(args, code: cd.CyclicCode, ctx: FieldContext) -> dict[int, int]:
    mode = args.weights
    tag = code.family
    if mode in ("trace", "closed") and tag is None:
        raise UsageError(f"--weights {mode} needs --family")
    results: dict[str, dict[int, int]] = {}
    if mode in ("exhaustive", "all"):
        results["exhaustive"] = cd.weight_distribution_exhaustive(code, args.max_dim, args.workers)
    if mode == "trace" or (mode == "all" and tag and cd.family_spec(tag).has_trace_form):
        if tag in ("E", "G") and args.m >= 5 and not args.force:
            raise CapacityError(f"trace enumeration of family {tag} at m >= 5 needs --force")
        results["trace"] = cd.weight_distribution_trace(tag, args.m, ctx, args.workers)
    if mode == "closed" or (mode == "all" and tag and cd.family_spec(tag).has_closed_form):
        results["closed"] = cd.closed_form_distribution(tag, args.m)
    first = next(iter(results.values()))
    for name, wd in results.items():
        if wd != first:
            raise VerificationError(f"weight distributions disagree: {name} differs from {next(iter(results))}")
    return first


def cmd_code(args) -> int:
    if (args.family is None) == (args.defining_set is None):
        raise UsageError("give exactly one of --family or --defining-set")
    ctx = _context(args)
    if args.family is not None:
        code = cd.construct_family(args.family, args.m, ctx)
    else:
        try:
            reps = [int(t) for t in args.defining_set.split(",") if t.strip()]
        except ValueError:
            raise UsageError(f"cannot parse residues {args.defining_set!r}") from None
        Z = cd.closure_of(canonical_residues(reps, ctx.n), ctx.n)
        code = cd.code_from_defining_set(Z, ctx)
    wd = _compute_weights(args, code, ctx)
    report = cd.verify_bch_bound(code, wd)
    if args.csv:
        sys.stdout.write(_weights_csv(wd))
        return 0
    payload: dict = {"family": code.family, "m": args.m, "n": code.n, "k": code.dimension}
    if code.designed_distance is not None:
        payload["designed_distance"] = code.designed_distance
    payload.update({
        "generator": list(code.generator.coeffs),
        "defining_set": sorted(code.defining_set),
        "lcd": cd.is_lcd(code),
        "weights": _weights_json(wd),
        "min_distance": cd.minimum_distance(wd),
        "bch_bound_report": report.to_dict(),
    })
    if args.json:
        print(_dump(payload))
    else:
        name = f"family {code.family}" if code.family else "custom code"
        print(f"{name}: [n={code.n}, k={code.dimension}, d={payload['min_distance']}] over GF(3)")
        if code.designed_distance is not None:
            print(f"designed distance: {code.designed_distance}")
        print(f"LCD: {payload['lcd']}")
        print(f"generator: {code.generator}")
        print(f"weight enumerator: {vf.enumerator_string(wd)}")
        print(f"BCH bound: run {report.run} -> d >= {report.bound} ({'ok' if report.passed else 'VIOLATED'})")
    return 0 if report.passed else 4


def _parse_log(text: str | None, ctx: FieldContext) -> int:
    if text is None:
        raise UsageError("--a and --b are required without --scan")
    if text.strip().lower() == "zero":
        return 0
    try:
        return ctx.exp_of(int(text) % ctx.n)
    except ValueError:
        raise UsageError(f"expected a discrete log or 'zero', got {text!r}") from None


def cmd_kloosterman(args) -> int:
    ctx = _context(args)
    if args.scan:
        scan = ch.kloosterman_bound_scan(args.m, force=args.force, workers=args.workers, ctx=ctx)
        if args.json:
            print(_dump(scan.to_dict()))
        else:
            status = "PASS" if scan.passed else "FAIL"
            print(f"{status} m={scan.m}: max K = {scan.max_value} at (a, b) = {scan.argmax}, "
                  f"bound {scan.bound}, gap {scan.gap}")
        return 0 if scan.passed else 4
    a, b = _parse_log(args.a, ctx), _parse_log(args.b, ctx)
    k = ch.kloosterman_sum(a, b, ctx)
    if args.json:
        print(_dump({"m": args.m, "a": args.a, "b": args.b, **k.to_json()}))
    else:
        print(k)
    return 0


def cmd_gauss(args) -> int:
    if args.s is None:
        raise UsageError("--s is required")
    g = ch.gauss_quadratic(args.s)
    if args.json:
        print(_dump({"s": args.s, **g.to_json()}))
    else:
        print(g)
    return 0


def cmd_verify(args) -> int:
    report = vf.cmd_verify(args.scope, args.max_m, args.force, args.workers, args.max_dim)
    if args.json:
        print(_dump(report.to_dict(args.timing)))
    else:
        for r in report.records:
            tag = "INFO" if r.informational else ("PASS" if r.passed else "FAIL")
            line = f"{tag}  {r.check}  {r.anchor}"
            if args.timing:
                line += f"  [{r.runtime:.3f}s]"
            print(line)
            if r.informational or not r.passed or args.verbose:
                print(f"      expected {json.dumps(r.expected, ensure_ascii=False)}")
                print(f"      actual   {json.dumps(r.actual, ensure_ascii=False)}")
        failed = len(report.failures())
        print(f"{len(report.records)} records, {failed} failed: {'PASS' if report.passed else 'FAIL'}")
    return 0 if report.passed else 4


# -- parser -------------------------------------------------------------------

def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, help="extension degree (field GF(3^m), length 3^m - 1)")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--csv", action="store_true", help="emit CSV where a table is available")
    common.add_argument("--workers", type=_positive, default=1, help="worker processes for enumeration")
    common.add_argument("--force", action="store_true", help="lift capacity limits")
    common.add_argument("--modulus", help="ascending coefficients of a primitive modulus, e.g. 2,1,1")
    common.add_argument("--max-dim", type=int, default=None,
                        help="enumeration budget in dimension (default $BCH3_MAX_DIM or 16)")
    common.add_argument("--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="ternbch", description="Ternary primitive BCH and LCD BCH codes.")
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("field", parents=[common], help="describe GF(3^m)")
    f.set_defaults(func=cmd_field)

    c = sub.add_parser("cosets", parents=[common], help="cyclotomic cosets and absolute leaders")
    c.add_argument("--top", type=int, help="only the k largest absolute leaders")
    c.set_defaults(func=cmd_cosets)

    k = sub.add_parser("code", parents=[common], help="construct a code and its weight distribution")
    k.add_argument("--family", choices=list(cd.FAMILIES), type=str.upper)
    k.add_argument("--defining-set", help="comma-separated residues; each is closed under x3")
    k.add_argument("--weights", choices=["exhaustive", "trace", "closed", "all"], default="exhaustive")
    k.set_defaults(func=cmd_code)

    kl = sub.add_parser("kloosterman", parents=[common], help="Kloosterman sums")
    kl.add_argument("--scan", action="store_true", help="check the upper bound over all (a, b)")
    kl.add_argument("--a", help="log of a, or 'zero'")
    kl.add_argument("--b", help="log of b, or 'zero'")
    kl.set_defaults(func=cmd_kloosterman)

    g = sub.add_parser("gauss", parents=[common], help="quadratic Gauss sum over GF(3^s)")
    g.add_argument("--s", type=int)
    g.set_defaults(func=cmd_gauss)

    v = sub.add_parser("verify", parents=[common], help="run the verification sweep")
    v.add_argument("--scope", choices=vf.SCOPES, default="all")
    v.add_argument("--max-m", type=int, default=6)
    v.add_argument("--timing", action="store_true", help="include per-record runtimes")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TernbchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
