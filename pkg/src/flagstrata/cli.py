"""Command-line front end: every verification as a subcommand.

Output is TSV by default (one greppable row per checked cell) or JSON with
--format json.  Exit status: 0 all checks pass, 1 a verification failed,
2 invalid configuration.  Enumerations are canonically sorted, so output is
byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import comb

from . import coweights as cw
from . import flagcount as fc
from . import levi as lv
from . import orbits as ob
from . import schur as sc
from . import strata as st

DEFAULT_BOUNDS = {
    "schur_n": 3,
    "schur_d": 4,
    "margin_size": 5,
    "brute_flag_size": 5,
    "brute_aut_size": 4,
    "mass_d": 4,
    "induced_total": 6,
    "invariants_r": 4,
    "orbit_total_q2": 4,
    "orbit_total_q3": 3,
    "levi_rank": 4,
    "levi_bound": 2,
    "identity_n": 4,
}


class ConfigError(Exception):
    pass


def _parse_bounds(pairs) -> dict[str, int]:
    bounds = dict(DEFAULT_BOUNDS)
    for pair in pairs or ():
        if "=" not in pair:
            raise ConfigError(f"bad --bound {pair!r}, expected key=value")
        key, _, value = pair.partition("=")
        if key not in bounds:
            raise ConfigError(f"unknown bound {key!r}; known: {', '.join(sorted(bounds))}")
        try:
            bounds[key] = int(value)
        except ValueError as exc:
            raise ConfigError(f"bound {key} needs an integer, got {value!r}") from exc
        if bounds[key] > DEFAULT_BOUNDS[key]:
            print(
                f"warning: bound {key}={bounds[key]} above default "
                f"{DEFAULT_BOUNDS[key]}; runtime grows quickly",
                file=sys.stderr,
            )
    return bounds


def _emit(rows, header, fmt, payload=None):
    if fmt == "json":
        if payload is None:
            payload = [dict(zip(header, row)) for row in rows]
        print(json.dumps(payload, default=str))
    else:
        print("\t".join(header))
        for row in rows:
            print("\t".join(str(x) for x in row))


def _fmt_vec(v) -> str:
    return cw.format_coweight(v) if v else "-"


# ---------------------------------------------------------------------------
# subcommands


def cmd_schur(args, bounds):
    n, d, dp = args.n, args.d, args.dp
    if n < 1 or not 0 <= d <= dp:
        raise ConfigError("need n >= 1 and 0 <= d <= dp")
    dec = sc.decompose_schur(sc.product_char(n, d, dp))
    index = sc.dominant_index(n, d, dp)
    rows = []
    for lam in sorted(dec, reverse=True):
        rows.append((_fmt_vec(lam), dec[lam], lam in index))
    ok = dec == {lam: 1 for lam in index}
    rows.append(("all-multiplicity-one-and-index-exact", len(index), ok))
    payload = {
        "n": n,
        "d": d,
        "dp": dp,
        "decomposition": sc.decomposition_to_json(dec),
        "match": ok,
    }
    return ("lambda", "mult", "match"), rows, ok, payload


def cmd_strata(args, bounds):
    d, dp = args.d, args.dp
    if not 0 <= d <= dp:
        raise ConfigError("need 0 <= d <= dp")
    rows = []
    ok = True
    pairings = st.enumerate_pairings(d, dp)
    covered = 0
    c_pairs = []
    for j, jp, disjoint in st.enumerate_c_pairs(d, dp):
        if disjoint:
            ws = st.strata_involutions(j, jp, d + dp)
            covered += len(ws)
            names = [w.cycle_notation() for w in ws]
        else:
            names = []
        c_pairs.append({"J": list(j), "Jp": list(jp), "disjoint": disjoint, "strata": names})
        rows.append(("c-pair", _fmt_vec(j), _fmt_vec(jp), disjoint, ";".join(names) or "-"))
    if covered != len(pairings):
        ok = False
    rows.append(("pairings", len(pairings), "strata-cover", covered == len(pairings), "-"))
    characters = st.character_table(d, dp)
    for ctype, value in sorted(characters.items(), reverse=True):
        rows.append(("character", _fmt_vec(ctype), value, "-", "-"))
    induced_ok = st.verify_induced_realization(d, dp) if d + dp <= 7 else "skipped"
    if induced_ok is False:
        ok = False
    rows.append(("induced-model-match", induced_ok, "-", "-", "-"))
    payload = {
        "d": d,
        "dp": dp,
        "pairings": [[list(b) for b in alpha] for alpha in pairings],
        "c_pairs": c_pairs,
        "characters": {_fmt_vec(ct): val for ct, val in sorted(characters.items(), reverse=True)},
        "strata_cover": covered == len(pairings),
        "induced_model_match": induced_ok,
    }
    return ("kind", "a", "b", "c", "d"), rows, ok, payload


def cmd_flagdim(args, bounds):
    dmax = args.dmax
    if dmax < 0:
        raise ConfigError("need dmax >= 0")
    rows = []
    ok = True
    for mu, mup, deg, margin, inter in fc.fiber_mass_table(dmax):
        good = margin <= 0 and (margin == 0) == inter and deg == margin - sum(mup)
        ok = ok and good
        rows.append((_fmt_vec(mu), _fmt_vec(mup), deg, margin, inter, good))
    return ("mu", "mup", "degree", "margin", "interleaved", "ok"), rows, ok, None


def cmd_fibermass(args, bounds):
    d, dp = args.d, args.dp
    if not 0 <= d <= dp:
        raise ConfigError("need 0 <= d <= dp")
    _, deg, lead = fc.collided_fiber_mass(d, dp)
    expected = st.pairing_count(d, dp)
    ok = deg == -dp and lead == expected
    rows = [(d, dp, deg, lead, expected, ok)]
    return ("d", "dp", "degree", "leading", "pairings", "match"), rows, ok, None


def cmd_orbits(args, bounds):
    d, dp, q = args.d, args.dp, args.q
    if d < 0 or dp < 0:
        raise ConfigError("need d, dp >= 0")
    if q not in (2, 3):
        raise ConfigError("q must be 2 or 3")
    if d + dp > ob.ORBIT_LIMIT[q]:
        raise ConfigError(f"d + dp capped at {ob.ORBIT_LIMIT[q]} for q={q}")
    count = ob.k_orbits(d, dp, q)
    bar = ob.classifying_pairs(d, dp)
    dual = len(ob.dual_classifying_pairs(d, dp))
    ok = count == len(bar) == dual
    rows = [(d, dp, q, count, len(bar), dual, ok)]
    payload = {
        "d": d,
        "dp": dp,
        "q": q,
        "orbits": count,
        "pairs": [ob.pair_to_json(w, j) for w, j in bar],
        "dual_pair_count": dual,
        "match": ok,
    }
    return ("d", "dp", "q", "orbits", "pairs", "dual_pairs", "match"), rows, ok, payload


def cmd_levi(args, bounds):
    levi = lv.parse_blocks(args.n, args.blocks)
    if args.lam_bound < 0 or args.nu_bound < 0:
        raise ConfigError("bounds must be >= 0")
    res = lv.sweep_inequality(levi, args.lam_bound, args.nu_bound, jobs=args.jobs)
    rows = [
        (
            str(levi),
            lv.is_antistandard(levi),
            res["pairs_checked"],
            len(res["equalities"]),
            len(res["failures"]),
            res["holds"],
        )
    ]
    for lam, nu, mu, mu_dom, f, rhs in res["equalities"]:
        rows.append(
            ("equality", _fmt_vec(lam), _fmt_vec(nu), _fmt_vec(mu), f, rhs)
        )
    for lam, nu, _ in res["failures"]:
        rows.append(("FAILED-bound", _fmt_vec(lam), _fmt_vec(nu), "-", "-", False))
    payload = {
        "levi": [list(b) for b in levi.blocks],
        "antistandard": lv.is_antistandard(levi),
        "pairs_checked": res["pairs_checked"],
        "holds": res["holds"],
        "equalities": [
            {
                "lam": list(lam),
                "nu": list(nu),
                "mu": list(mu),
                "mu_dom": list(mu_dom),
                "f": f,
                "rhs": rhs,
            }
            for lam, nu, mu, mu_dom, f, rhs in res["equalities"]
        ],
        "failures": [
            {"lam": list(lam), "nu": list(nu)} for lam, nu, _ in res["failures"]
        ],
    }
    return ("levi", "antistandard", "pairs", "equalities", "failures", "holds"), rows, res["holds"], payload


# ---------------------------------------------------------------------------
# selftest


def _selftest_checks(bounds, jobs):
    """Yield (name, callable) pairs covering the whole acceptance battery."""

    def schur_sweep():
        for n in range(1, bounds["schur_n"] + 1):
            for d in range(0, bounds["schur_d"] + 1):
                for dp in range(d, bounds["schur_d"] + 1):
                    if not sc.verify_multiplicity_free(n, d, dp):
                        return False
        return True

    def margin_sweep():
        top = bounds["margin_size"]
        for dd in range(top + 1):
            for pp in range(top + 1):
                for mu in cw.partitions(dd):
                    for mup in cw.partitions(pp):
                        margin, equal = cw.flag_mass_margin(mu, mup)
                        _, _, gap = cw.special_transposition_chain(
                            cw.interleave(mu, mup, max(len(mu), len(mup), 1))
                        )
                        if margin > 0 or equal != cw.is_interleaved(mu, mup):
                            return False
                        if equal != (gap == 0):
                            return False
                        if fc.fiber_mass(mu, mup).degree != margin - pp:
                            return False
        return True

    def brute_flag_sweep():
        for size in range(bounds["brute_flag_size"] + 1):
            for mu in cw.partitions(size):
                if fc.count_flags_poly(mu)(2) != fc.count_flags_brute(mu, 2):
                    return False
        for size in range(bounds["brute_aut_size"] + 1):
            for mu in cw.partitions(size):
                for q in (2, 3):
                    if fc.aut_order_poly(mu)(q) != fc.count_commutant_units_brute(mu, q):
                        return False
        return True

    def mass_sweep():
        for d in range(bounds["mass_d"] + 1):
            for dp in range(d, bounds["mass_d"] + 1):
                _, deg, lead = fc.collided_fiber_mass(d, dp)
                if deg != -dp or lead != st.pairing_count(d, dp):
                    return False
        return True

    def strata_vectors():
        pairs22 = st.enumerate_c_pairs(2, 2)
        disjoint = sorted((j, jp) for j, jp, flag in pairs22 if flag)
        if disjoint != [((1, 2), (3, 4)), ((1, 3), (2, 4))]:
            return False
        one = [w.cycle_notation() for w in st.strata_involutions((1, 3), (2, 4), 4)]
        two = sorted(w.cycle_notation() for w in st.strata_involutions((1, 2), (3, 4), 4))
        return one == ["(1 2)(3 4)"] and two == ["(1 3)(2 4)", "(1 4)(2 3)"]

    def induced_sweep():
        for total in range(bounds["induced_total"] + 1):
            for d in range(total // 2 + 1):
                dp = total - d
                if not st.verify_induced_realization(d, dp):
                    return False
                for r in range(1, bounds["invariants_r"] + 1):
                    got = st.invariants_dim(d, dp, r)
                    want = (comb(comb(r, 2) + d - 1, d) if d else 1) * (
                        comb(r + dp - d - 1, dp - d) if dp > d else 1
                    )
                    if got != want:
                        return False
        return True

    def orbit_sweep():
        for q, cap_key in ((2, "orbit_total_q2"), (3, "orbit_total_q3")):
            for total in range(bounds[cap_key] + 1):
                for d in range(total // 2 + 1):
                    if not ob.verify_counts(d, total - d, q):
                        return False
        return True

    def levi_sweep():
        for n in range(1, bounds["levi_rank"] + 1):
            for levi in lv.antistandard_levis(n):
                res = lv.sweep_inequality(
                    levi, bounds["levi_bound"], bounds["levi_bound"], jobs=jobs
                )
                if not res["holds"]:
                    return False
        return True

    def identity_audit():
        for n in range(1, bounds["identity_n"] + 1):
            for d in range(6):
                for dp in range(6):
                    for g in range(4):
                        if not cw.fibration_dim_identity(n, d, dp, g)[2]:
                            return False
        for n in range(1, 4):
            for d in range(0, 5):
                for dp in range(d, 5):
                    if not sc.verify_index_reversal(n, d, dp):
                        return False
        return True

    yield "schur-multiplicity-free", schur_sweep
    yield "flag-mass-margins", margin_sweep
    yield "flag-count-recursion-vs-brute", brute_flag_sweep
    yield "collided-mass-degree-and-leading", mass_sweep
    yield "strata-test-vectors", strata_vectors
    yield "induced-character-and-invariants", induced_sweep
    yield "orbit-counts-vs-classifying-pairs", orbit_sweep
    yield "levi-pairing-gap-bound", levi_sweep
    yield "dimension-identity-audits", identity_audit


def cmd_selftest(args, bounds):
    rows = []
    ok = True
    for name, check in _selftest_checks(bounds, args.jobs):
        passed = bool(check())
        ok = ok and passed
        rows.append((name, "PASS" if passed else "FAIL"))
    return ("check", "status"), rows, ok, None


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagstrata",
        description="exact verification battery for flag, strata and orbit combinatorics",
    )
    parser.add_argument("--format", choices=("tsv", "json"), default="tsv")
    parser.add_argument(
        "--jobs",
        type=int,
        default=int(os.environ.get("FLAGSTRATA_JOBS", "1")),
        help="worker processes for the big sweeps (default: FLAGSTRATA_JOBS or 1)",
    )
    parser.add_argument(
        "--bound",
        action="append",
        metavar="KEY=VALUE",
        help="override a selftest sweep bound (repeatable)",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=0,
        help="reserved; every algorithm here is exact and deterministic",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schur", help="multiplicity-free decomposition table")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("dp", type=int)

    p = sub.add_parser("strata", help="condition-C pairs, pairings, strata, characters")
    p.add_argument("d", type=int)
    p.add_argument("dp", type=int)

    p = sub.add_parser("flagdim", help="exhaustive flag-mass margins up to a size")
    p.add_argument("dmax", type=int)

    p = sub.add_parser("fibermass", help="total groupoid mass degree and leading term")
    p.add_argument("d", type=int)
    p.add_argument("dp", type=int)

    p = sub.add_parser("orbits", help="orbit count against classifying pairs")
    p.add_argument("d", type=int)
    p.add_argument("dp", type=int)
    p.add_argument("q", type=int)

    p = sub.add_parser("levi", help="pairing-gap inequality sweep for a block Levi")
    p.add_argument("n", type=int)
    p.add_argument("blocks", help='JSON block list, e.g. "[[1,3],[2,4]]"')
    p.add_argument("lam_bound", type=int)
    p.add_argument("nu_bound", type=int)

    sub.add_parser("selftest", help="run the full verification battery")

    return parser


COMMANDS = {
    "schur": cmd_schur,
    "strata": cmd_strata,
    "flagdim": cmd_flagdim,
    "fibermass": cmd_fibermass,
    "orbits": cmd_orbits,
    "levi": cmd_levi,
    "selftest": cmd_selftest,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        bounds = _parse_bounds(args.bound)
        if args.jobs < 1:
            raise ConfigError("--jobs must be >= 1")
        header, rows, ok, payload = COMMANDS[args.command](args, bounds)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(rows, header, args.format, payload)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
