"""Command-line front end for batch computations with skew cyclic codes.

Subcommands: field check, factor, code build|dual|gray|matrix|distance|
idempotent|contains, census, verify. Every JSON output embeds the code
description block, so results can be re-fed to other subcommands. All
sampling is seeded; given the same flags and seed, output is identical.

Exit codes: 0 success, 1 failed verification or violated precondition,
2 malformed configuration.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import codes as codes_mod
from . import oracle as oracle_mod
from .codes import (
    CodeError,
    census,
    code_from_combined,
    code_from_components,
    component_code_new,
    count_skew_cyclic_codes,
    HypothesisViolated,
    TableTooLarge,
)
from .finite_field import EnumerationTooLarge, Field, FieldError, field_from_string
from .ring_r import gray_map, lee_weight, ring_vector_from_string, ring_vector_to_string
from .skew_poly import (
    SkewPolyError,
    factor_xn_minus_1,
    poly_from_string,
    poly_to_string,
    ring_poly_from_string,
)


class CliConfigError(Exception):
    pass


def _parse_field(args) -> Field:
    if not args.field:
        raise CliConfigError("--field is required (e.g. p=3,m=2,mod=1,0,1)")
    try:
        return field_from_string(args.field)
    except (FieldError, ValueError) as exc:
        raise CliConfigError(f"bad field spec {args.field!r}: {exc}") from exc


def _parse_code(args, fld: Field):
    have_triple = args.g1 or args.g2 or args.g3
    if args.g and have_triple:
        raise CliConfigError("give either --g or the --g1/--g2/--g3 triple, not both")
    if not args.g and not (args.g1 and args.g2 and args.g3):
        raise CliConfigError("a code needs --g (over R) or all of --g1 --g2 --g3")
    if args.n is None:
        raise CliConfigError("--n is required")
    try:
        if args.g:
            g = ring_poly_from_string(args.g, fld, args.aut)
            return code_from_combined(g, args.n)
        comps = [
            component_code_new(args.n, poly_from_string(s, fld, args.aut))
            for s in (args.g1, args.g2, args.g3)
        ]
    except (ValueError,) as exc:
        raise CliConfigError(f"bad generator polynomial: {exc}") from exc
    return code_from_components(*comps)


def _emit(payload: dict, table_lines: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in table_lines:
            print(line)


# ---------------------------------------------------------------------------
# subcommands


def cmd_field(args) -> int:
    if args.action != "check":
        raise CliConfigError(f"unknown field action {args.action!r}")
    fld = _parse_field(args)
    payload = {
        "field": {"p": fld.p, "m": fld.m, "mod": list(fld.modulus)},
        "q": fld.q,
        "valid": True,
    }
    _emit(
        payload,
        [
            f"field F_{fld.q} = Z_{fld.p}[w]/(f), f = {list(fld.modulus)}",
            f"q = {fld.q}, modulus irreducible: yes",
        ],
        args.format,
    )
    return 0


def cmd_factor(args) -> int:
    fld = _parse_field(args)
    if args.n is None:
        raise CliConfigError("--n is required")
    t_i = fld.check_aut_exponent(args.aut)
    if math.gcd(args.n, t_i) != 1:
        raise HypothesisViolated(
            f"gcd(n, t_i) = {math.gcd(args.n, t_i)} != 1 "
            f"(n = {args.n}, t_i = {t_i}); the census formula does not apply"
        )
    fac = factor_xn_minus_1(args.n, fld, args.aut)
    over_field, over_ring = fac.census_counts()
    payload = {
        "field": {"p": fld.p, "m": fld.m, "mod": list(fld.modulus)},
        "aut": args.aut,
        "n": args.n,
        "factors": [
            {"poly": poly_to_string(g), "multiplicity": s} for g, s in fac.factors
        ],
        "codes_over_field": over_field,
        "codes_over_ring": over_ring,
    }
    lines = [f"x^{args.n} - 1 over F_{fld.p ** args.aut}:"]
    for g, s in fac.factors:
        lines.append(f"  ({poly_to_string(g)})^{s}")
    lines.append(f"skew cyclic codes over F_{fld.q}: {over_field}")
    lines.append(f"skew cyclic codes over R:       {over_ring}")
    _emit(payload, lines, args.format)
    return 0


def _code_payload(code) -> dict:
    block = codes_mod.code_to_json(code)
    return {
        "code": block,
        "dims": [c.dim for c in code.components],
        "cardinality": code.size,
        "combined_generator": poly_to_string(code.g_combined),
    }


def cmd_code(args) -> int:
    fld = _parse_field(args)
    code = _parse_code(args, fld)
    action = args.action
    if action == "build":
        payload = _code_payload(code)
        _emit(
            payload,
            [
                f"skew cyclic code over R, n = {code.n}, aut = {code.aut}",
                f"generators: {', '.join(poly_to_string(c.g) for c in code.components)}",
                f"dims: {[c.dim for c in code.components]}  |C| = {code.size}",
                f"combined generator: {poly_to_string(code.g_combined)}",
            ],
            args.format,
        )
        return 0
    if action == "dual":
        dual = code.dual()
        payload = _code_payload(code)
        payload["dual"] = codes_mod.code_to_json(dual)
        payload["h"] = [poly_to_string(c.h) for c in code.components]
        payload["htilde"] = [
            poly_to_string(c.reciprocal_cofactor()) for c in code.components
        ]
        payload["dual_generators"] = [poly_to_string(c.g) for c in dual.components]
        payload["dual_combined_generator"] = poly_to_string(dual.g_combined)
        payload["dual_cardinality"] = dual.size
        lines = [f"dual of code with n = {code.n}:"]
        for k, c in enumerate(code.components, 1):
            lines.append(f"  h{k} = {poly_to_string(c.h)}")
            lines.append(f"  h~{k} = {poly_to_string(c.reciprocal_cofactor())}")
        lines.append(
            "dual generators: "
            + ", ".join(poly_to_string(c.g) for c in dual.components)
        )
        lines.append(f"dual combined generator: {poly_to_string(dual.g_combined)}")
        lines.append(f"|dual| = {dual.size}")
        _emit(payload, lines, args.format)
        return 0
    if action == "gray":
        if args.word:
            word = ring_vector_from_string(fld, args.word)
            if len(word) != code.n:
                raise CodeError(f"word length {len(word)} != n = {code.n}")
            img = gray_map(word)
            payload = _code_payload(code)
            payload["word"] = ring_vector_to_string(word)
            payload["gray_image"] = [str(x) for x in img]
            payload["lee_weight"] = lee_weight(word)
            payload["member"] = code.contains(word)
            _emit(
                payload,
                [
                    f"gray image: {' '.join(str(x) for x in img)}",
                    f"lee weight: {lee_weight(word)}",
                ],
                args.format,
            )
            return 0
        rows = code.gray_generator_rows()
        from . import linalg

        rank = linalg.rank(linalg.to_index_rows(rows, fld), fld)
        payload = _code_payload(code)
        payload["gray_generator_matrix"] = [[str(x) for x in row] for row in rows]
        payload["gray_rank"] = rank
        payload["gray_length"] = 3 * code.n
        lines = [f"gray image parameters: [{3 * code.n}, {rank}] over F_{fld.q}"]
        for row in rows:
            lines.append("  " + " ".join(str(x) for x in row))
        _emit(payload, lines, args.format)
        return 0
    if action == "matrix":
        mat = code.generator_matrix()
        payload = _code_payload(code)
        payload["generator_matrix"] = [[str(x) for x in row] for row in mat.rows]
        lines = [f"generator matrix over R ({len(mat.rows)} rows):"]
        for row in mat.rows:
            lines.append("  " + "  ".join(str(x) for x in row))
        _emit(payload, lines, args.format)
        return 0
    if action == "distance":
        dist = code.min_lee_distance(args.bound)
        payload = _code_payload(code)
        payload["min_lee_distance"] = dist.value
        payload["degenerate"] = dist.degenerate
        payload["component_distances"] = [
            None
            if c.is_zero_code()
            else c.min_hamming_distance(args.bound).value
            for c in code.components
        ]
        label = f"{dist.value}" + (" (zero code)" if dist.degenerate else "")
        _emit(payload, [f"min Lee distance: {label}"], args.format)
        return 0
    if action == "idempotent":
        e = code.idempotent_generator()
        payload = _code_payload(code)
        payload["idempotent"] = poly_to_string(e)
        payload["component_idempotents"] = [
            poly_to_string(c.idempotent_generator()) for c in code.components
        ]
        payload["idempotent_verified"] = True
        _emit(
            payload,
            [
                f"idempotent generator (e*e = e mod x^{code.n} - 1, verified):",
                f"  e = {poly_to_string(e)}",
            ],
            args.format,
        )
        return 0
    if action == "contains":
        if not args.word:
            raise CliConfigError("contains requires --word")
        word = ring_vector_from_string(fld, args.word)
        member = code.contains(word)
        payload = _code_payload(code)
        payload["word"] = ring_vector_to_string(word)
        payload["member"] = member
        _emit(payload, [f"member: {member}"], args.format)
        return 0
    raise CliConfigError(f"unknown code action {action!r}")


def cmd_census(args) -> int:
    fld = _parse_field(args)
    if args.n is None:
        raise CliConfigError("--n is required")
    all_codes = census(args.n, fld, args.aut)
    count = len(all_codes)
    t_i = fld.check_aut_exponent(args.aut)
    formula = None
    if math.gcd(args.n, t_i) == 1:
        formula = count_skew_cyclic_codes(args.n, fld, args.aut)
    if count > args.bound:
        print(f"census size {count} exceeds table bound {args.bound}")
        raise TableTooLarge(f"{count} rows > bound {args.bound}")
    rows = []
    for code in all_codes:
        try:
            dist = code.min_lee_distance(args.distance_bound)
            dist_val, degenerate = dist.value, dist.degenerate
        except EnumerationTooLarge:
            dist_val, degenerate = None, False
        rows.append(
            {
                "g1": poly_to_string(code.c1.g),
                "g2": poly_to_string(code.c2.g),
                "g3": poly_to_string(code.c3.g),
                "cardinality": code.size,
                "min_lee_distance": dist_val,
                "degenerate": degenerate,
            }
        )
    payload = {
        "field": {"p": fld.p, "m": fld.m, "mod": list(fld.modulus)},
        "aut": args.aut,
        "n": args.n,
        "count": count,
        "count_formula": formula[1] if formula else None,
        "rows": rows,
    }
    lines = [
        f"census of skew cyclic codes over R, n = {args.n}, q = {fld.q}: "
        f"{count} codes"
    ]
    for r in rows:
        d = "-" if r["min_lee_distance"] is None else str(r["min_lee_distance"])
        lines.append(
            f"  ({r['g1']} | {r['g2']} | {r['g3']})  |C| = {r['cardinality']}  d = {d}"
        )
    _emit(payload, lines, args.format)
    return 0


def cmd_verify(args) -> int:
    if args.matrix:
        try:
            with open(args.matrix) as fh:
                raw = json.load(fh)
            entries = []
            for item in raw:
                bounds = oracle_mod.Bounds(**item.get("bounds", {}))
                entries.append(
                    oracle_mod.TestMatrixEntry(
                        p=item["p"],
                        m=item["m"],
                        i=item["i"],
                        n=item["n"],
                        modulus=tuple(item["modulus"]) if "modulus" in item else None,
                        seed=item.get("seed", args.seed),
                        bounds=bounds,
                    )
                )
        except (OSError, KeyError, TypeError, ValueError) as exc:
            raise CliConfigError(f"bad matrix file {args.matrix!r}: {exc}") from exc
    else:
        entries = [
            oracle_mod.TestMatrixEntry(p=3, m=2, i=1, n=n, seed=args.seed)
            for n in (1, 3, 5)
        ]
    reports = oracle_mod.verify_all(entries, inject_broken=args.inject_broken)
    for rep in reports:
        print(rep.to_json())
    failed = [r for r in reports if not r.passed]
    print()
    print(f"claims checked: {len(reports)}, passed: {len(reports) - len(failed)}, "
          f"failed: {len(failed)}")
    for r in failed:
        print(f"  FAIL {r.claim} on {json.dumps(r.config, sort_keys=True)}")
    return 1 if failed else 0


# ---------------------------------------------------------------------------


def _add_common(sp, with_n=True):
    sp.add_argument("--field", help="field spec, e.g. p=3,m=2,mod=1,0,1")
    sp.add_argument("--aut", type=int, default=1, help="automorphism exponent i")
    if with_n:
        sp.add_argument("--n", type=int, help="code length")
    sp.add_argument(
        "--format", choices=("table", "json"), default="table", help="output format"
    )
    sp.add_argument("--seed", type=int, default=0, help="seed for sampled checks")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewcyclic",
        description="exact computations with skew cyclic codes over "
        "F_q + vF_q + v^2F_q (v^3 = v)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("field", help="field utilities")
    sp.add_argument("action", choices=("check",))
    _add_common(sp, with_n=False)
    sp.set_defaults(func=cmd_field)

    sp = sub.add_parser("factor", help="factor x^n - 1 and count codes")
    _add_common(sp)
    sp.set_defaults(func=cmd_factor)

    sp = sub.add_parser("code", help="operations on a single code")
    sp.add_argument(
        "action",
        choices=("build", "dual", "gray", "matrix", "distance", "idempotent", "contains"),
    )
    _add_common(sp)
    sp.add_argument("--g1", help="first component generator over F_q")
    sp.add_argument("--g2", help="second component generator over F_q")
    sp.add_argument("--g3", help="third component generator over F_q")
    sp.add_argument("--g", help="combined generator over R")
    sp.add_argument("--word", help="vector over R, semicolon-separated a|b|c elements")
    sp.add_argument("--bound", type=int, default=10**6, help="enumeration bound")
    sp.set_defaults(func=cmd_code)

    sp = sub.add_parser("census", help="list every skew cyclic code of length n")
    _add_common(sp)
    sp.add_argument("--bound", type=int, default=10**4, help="max table rows")
    sp.add_argument(
        "--distance-bound",
        type=int,
        default=10**6,
        help="skip distances above this enumeration size",
    )
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("verify", help="run the verification suite")
    sp.add_argument("--matrix", help="JSON file with test matrix entries")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument(
        "--inject-broken",
        action="store_true",
        help="also run the suite on a deliberately corrupted code "
        "(must fail, demonstrating witnesses)",
    )
    sp.add_argument("--format", choices=("table", "json"), default="table")
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except CliConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except (CodeError, SkewPolyError, FieldError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
