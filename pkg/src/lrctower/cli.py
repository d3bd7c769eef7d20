"""Command-line surface: construct, verify, repair-demo, bounds, regimes, tradeoff.

Same flags and seed give byte-identical outputs.  The LRC_MAX_ENUM
environment variable overrides the 10^7 exhaustive-enumeration cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import gcd
from pathlib import Path

from . import bounds as bnd
from .construct import construct_lrc
from .descriptor import load_code, write_descriptor
from .errors import LrcError, NotAPrimePower, RegimeViolation, VariantMismatch
from .field import make_field
from .groups import ADDITIVE, MULTIPLICATIVE, RecoveryGroup, build_recovery_group
from .repair import DEFAULT_ENUM_CAP, ErasurePattern, random_codewords, repair, verify_code
from .tower import GS95, GS96, TowerSpec


def _field_for_ell(ell: int):
    pw = bnd.is_prime_power(ell)
    if pw is None:
        raise NotAPrimePower(f"l = {ell} is not a prime power")
    p, w = pw
    return make_field(p, 2 * w)


def parse_group_spec(spec: TowerSpec, text: str) -> RecoveryGroup:
    """Mini-language: add:kernel | add:gens=a,b | mul:ORDER | norm1:ORDER."""
    kind, _, rest = text.partition(":")
    if kind == "add":
        if rest == "kernel":
            return build_recovery_group(spec, ADDITIVE, shifts="kernel")
        if rest.startswith("gens="):
            gens = [int(x) for x in rest[len("gens="):].split(",") if x]
            return build_recovery_group(spec, ADDITIVE, shifts=gens)
        raise ValueError(f"bad additive group spec {text!r}")
    if kind == "mul":
        if spec.variant != GS96:
            raise VariantMismatch("xz-tower scalars are norm-one elements; use norm1:ORDER")
        return build_recovery_group(spec, MULTIPLICATIVE, order=int(rest))
    if kind == "norm1":
        if spec.variant != GS95:
            raise VariantMismatch("norm1 groups live on the xz-tower; use mul:ORDER")
        return build_recovery_group(spec, MULTIPLICATIVE, order=int(rest))
    raise ValueError(f"unknown group kind {kind!r}")


def validate_regime(spec: TowerSpec, g1: RecoveryGroup, g2: RecoveryGroup) -> str:
    """Map the group pair onto its admissible regime; name the condition
    that fails otherwise.  Returns the regime token."""
    ell = spec.ell
    kinds = (g1.kind, g2.kind)
    if spec.variant == GS96:
        if ADDITIVE in kinds and MULTIPLICATIVE in kinds:
            add = g1 if g1.kind == ADDITIVE else g2
            mul = g1 if g1.kind == MULTIPLICATIVE else g2
            u, pv = mul.order, add.order
            if (pv - 1) % u != 0 or (ell - 1) % u != 0:
                raise RegimeViolation(
                    f"thm33: scalar order {u} must divide gcd({pv} - 1, l - 1)"
                )
            return "thm33"
        if kinds == (MULTIPLICATIVE, MULTIPLICATIVE):
            if gcd(g1.order, g2.order) != 1:
                raise RegimeViolation("thm34.1: gcd(r1+1, r2+1) = 1 violated")
            return "thm34.1"
        if g1.order * g2.order > ell:
            raise RegimeViolation("thm34.2: (r1+1)(r2+1) <= l violated")
        return "thm34.2"
    if kinds == (MULTIPLICATIVE, MULTIPLICATIVE):
        if gcd(g1.order, g2.order) != 1:
            raise RegimeViolation("thm35.1: gcd(r1+1, r2+1) = 1 violated")
        return "thm35.1"
    if kinds == (ADDITIVE, ADDITIVE):
        if g1.order * g2.order > ell:
            raise RegimeViolation("thm35.2: (r1+1)(r2+1) <= l violated")
        return "thm35.2"
    raise RegimeViolation(
        "xz-tower pairs must be norm1/norm1 or add/add (no mixed regime)"
    )


def _enum_cap() -> int:
    return int(os.environ.get("LRC_MAX_ENUM", DEFAULT_ENUM_CAP))


def cmd_construct(args) -> int:
    fld = _field_for_ell(args.ell)
    spec = TowerSpec(args.variant, fld, args.m)
    g1 = parse_group_spec(spec, args.group1)
    g2 = parse_group_spec(spec, args.group2)
    regime = validate_regime(spec, g1, g2)
    code = construct_lrc(spec, g1, g2, args.distance)
    write_descriptor(code, args.out, seed=args.seed)
    p = code.params
    print(f"{p.n} {p.k} {p.d_designed} {p.r1} {p.r2}")
    if args.verbose:
        print(f"regime {regime}; dims V1={code.dims.dim_v1} V2={code.dims.dim_v2} "
              f"sum={code.dims.dim_sum} budget={code.dims.budget}")
    return 0


def cmd_verify(args) -> int:
    code = load_code(args.path)
    exact = True if args.exact_distance else (False if args.skip_distance else None)
    report = verify_code(
        code, seed=args.seed, rounds=args.rounds,
        distance_cap=_enum_cap(), exact_distance=exact,
    )
    print(f"locality {'pass' if report.locality_passed else 'FAIL'}")
    print(f"repair {'pass' if report.repair_mismatches == 0 else 'FAIL'} "
          f"({report.repair_words} codewords)")
    if report.distance is None:
        print("distance skipped")
    else:
        print(f"distance {report.distance} (designed {report.d_designed}) "
              f"{'pass' if report.distance_ok else 'FAIL'}")
    for f in report.failures:
        print(f"failure: {f}")
    print("OK" if report.ok else "FAILED")
    if args.report:
        Path(args.report).write_text(
            json.dumps(report.to_json(), sort_keys=True, indent=2) + "\n"
        )
    return 0 if report.ok else 1


def cmd_repair_demo(args) -> int:
    code = load_code(args.path)
    word = [int(x) for x in random_codewords(code, 1, seed=args.seed)[0]]
    i = args.coord if args.coord is not None else args.seed % code.params.n
    truth = word[i]
    print(f"codeword: {word}")
    print(f"erasing coordinate {i} (symbol {truth})")
    for j in (1, 2):
        if args.set and j != args.set:
            continue
        idx = code.recovery_sets[i][j - 1]
        got = repair(code, ErasurePattern(tuple(word), i, j)).value
        status = "ok" if got == truth else "MISMATCH"
        print(f"set {j} {list(idx)} -> repaired symbol {got} [{status}]")
        if got != truth:
            return 1
    return 0


def cmd_bounds(args) -> int:
    rs = [int(x) for x in args.r.split(",") if x]
    if len(rs) == 1 and args.t > 1:
        rs = rs * args.t
    if len(rs) != args.t:
        raise ValueError("length of --r must equal --t")
    r_scalar = max(rs)
    rows = [
        ("singleton", bnd.singleton_lrc(args.n, args.k, r_scalar)),
        ("tb", bnd.tb_bound(args.n, args.k, r_scalar, args.t)),
        ("wz", bnd.wz_bound(args.n, args.k, r_scalar, args.t)),
        ("rpdv", bnd.rpdv_bound(args.n, args.k, r_scalar, args.t)),
        ("bt", bnd.bt_bound(args.n, args.k, sorted(rs))),
        ("bmq", bnd.bmq_bound(args.n, args.k, rs)),
    ]
    for name, val in rows:
        print(f"{name} {val}")
    if args.csv:
        lines = ["bound,value"] + [f"{name},{val}" for name, val in rows]
        Path(args.csv).write_text("\n".join(lines) + "\n")
    return 0


def cmd_regimes(args) -> int:
    rows = bnd.regimes(args.ell)
    for row in rows:
        note = "" if row.line_defined else "  [line undefined at r1=r2=1]"
        print(f"{row.theorem} r1={row.r1} r2={row.r2}{note}")
    if args.csv:
        Path(args.csv).write_text(bnd.regimes_csv(rows))
    return 0


def cmd_tradeoff(args) -> int:
    if args.variant == bnd.BTV:
        line = bnd.btv_line(args.ell, args.r1, args.r2)
    else:
        line = bnd.gs_line(args.ell, args.r1, args.r2, args.variant)
    print(f"family {line.family} ell={line.ell} r1={line.r1} r2={line.r2}")
    print(f"slope {line.slope.numerator}/{line.slope.denominator} "
          f"({float(line.slope):.12g})")
    print(f"intercept {line.intercept.numerator}/{line.intercept.denominator} "
          f"({float(line.intercept):.12g})")
    if line.vacuous:
        print("vacuous: intercept is not positive at this size")
    if args.csv:
        Path(args.csv).write_text(bnd.tradeoff_csv([line]))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lrctower")
    sub = ap.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("construct", help="build a code and write its descriptor")
    c.add_argument("--variant", choices=[GS96, GS95], required=True)
    c.add_argument("--ell", type=int, required=True)
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--group1", required=True)
    c.add_argument("--group2", required=True)
    c.add_argument("--distance", type=int, required=True)
    c.add_argument("--out", required=True)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--verbose", action="store_true")
    c.set_defaults(fn=cmd_construct)

    v = sub.add_parser("verify", help="check a descriptor; exit 0 iff all pass")
    v.add_argument("--in", dest="path", required=True)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--rounds", type=int, default=100)
    v.add_argument("--exact-distance", action="store_true")
    v.add_argument("--skip-distance", action="store_true")
    v.add_argument("--report")
    v.set_defaults(fn=cmd_verify)

    d = sub.add_parser("repair-demo", help="erase one symbol and repair it")
    d.add_argument("--in", dest="path", required=True)
    d.add_argument("--coord", type=int)
    d.add_argument("--set", type=int, choices=[1, 2])
    d.add_argument("--seed", type=int, default=0)
    d.set_defaults(fn=cmd_repair_demo)

    b = sub.add_parser("bounds", help="evaluate the six distance bounds")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--t", type=int, required=True)
    b.add_argument("--r", required=True, help="comma-separated localities")
    b.add_argument("--csv")
    b.set_defaults(fn=cmd_bounds)

    g = sub.add_parser("regimes", help="admissible locality pairs for one l")
    g.add_argument("--ell", type=int, required=True)
    g.add_argument("--csv")
    g.set_defaults(fn=cmd_regimes)

    t = sub.add_parser("tradeoff", help="rate/distance trade-off line")
    t.add_argument("--ell", type=int, required=True)
    t.add_argument("--r1", type=int, required=True)
    t.add_argument("--r2", type=int, required=True)
    t.add_argument("--variant", choices=[bnd.BTV, bnd.THM33, bnd.THM34, bnd.THM35],
                   required=True)
    t.add_argument("--csv")
    t.set_defaults(fn=cmd_tradeoff)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (LrcError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
