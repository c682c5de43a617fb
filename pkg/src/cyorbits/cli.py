"""Command-line interface.

Subcommands: orbit, tables, verify, screen, catalog dump, pf check.
Exit codes: 0 success, 1 verification or golden mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import families, tables
from .families import DELTA2, DELTA4, catalog, family, verify_identities, verify_power_lemma
from .golden import golden_rows
from .linalg import det, is_prime, mat_mul, solve_invariant_skew_form, transpose, mat_pow
from .orbits import is_complete, orbit_mod_p
from .picard_fuchs import compare_invariants
from .screening import Verdict, conjecture_screen
from .words import word_search

USAGE_ERROR = 2
MISMATCH = 1


def _fail_usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return USAGE_ERROR


def _parse_vector(text: str):
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError(f"expected 4 comma-separated integers, got {text!r}")
    return tuple(int(x.strip()) for x in parts)


def _parse_family(d: int, k: int):
    try:
        return family(d, k)
    except KeyError as exc:
        raise ValueError(str(exc)) from None


# ---------------- orbit ----------------


def cmd_orbit(args) -> int:
    try:
        seed = _parse_vector(args.seed)
        fam = _parse_family(args.d, args.k)
    except ValueError as exc:
        return _fail_usage(str(exc))
    if not is_prime(args.p):
        return _fail_usage(f"{args.p} is not prime")

    orbit = orbit_mod_p(seed, args.p, fam)
    complete = is_complete(orbit)
    if args.format == "text":
        if complete:
            print(f"Complete ({len(orbit)} vectors)")
        else:
            for v in orbit.vectors():
                print(tables.format_vector(v))
    elif args.format == "json":
        doc = {
            "d": fam.d,
            "k": fam.k,
            "p": args.p,
            "seed": list(seed),
            "status": "Complete" if complete else "Listed",
            "count": len(orbit),
            "vectors": [] if complete else [list(v) for v in orbit.vectors()],
        }
        print(json.dumps(doc, indent=1))
    else:  # csv
        print("d,k,p,seed_tag,status,vector")
        tag = f"seed {' '.join(str(x) for x in seed)}"
        if complete:
            print(f"{fam.d},{fam.k},{args.p},{tag},Complete,")
        else:
            for v in orbit.vectors():
                print(f"{fam.d},{fam.k},{args.p},{tag},Listed,{' '.join(str(x) for x in v)}")
    return 0


# ---------------- tables ----------------


def cmd_tables(args) -> int:
    if args.out_dir is None and args.diff is None:
        return _fail_usage("nothing to do: pass --out-dir and/or --diff")
    try:
        primes = tuple(int(x) for x in args.primes.split(","))
    except ValueError:
        return _fail_usage(f"bad prime list {args.primes!r}")
    for p in primes:
        if not is_prime(p):
            return _fail_usage(f"{p} is not prime")

    built = tables.build_tables(primes=primes, threads=args.threads)

    if args.out_dir is not None:
        out = Path(args.out_dir)
        try:
            out.mkdir(parents=True, exist_ok=True)
            for name in tables.TABLE_NAMES:
                text = tables.render_table(name, built[name], args.format)
                ext = args.format
                (out / f"{name}.{ext}").write_text(text, encoding="utf-8", newline="\n")
        except OSError as exc:
            return _fail_usage(f"cannot write to {args.out_dir}: {exc}")
        print(f"wrote {len(tables.TABLE_NAMES)} tables to {out}")

    if args.diff is not None:
        if args.diff == "golden":
            reference = {name: golden_rows(name) for name in tables.TABLE_NAMES}
        else:
            try:
                reference = tables.load_reference_dir(args.diff)
            except (OSError, KeyError, ValueError) as exc:
                return _fail_usage(f"cannot load reference tables: {exc}")
        problems = []
        total = 0
        for name in tables.TABLE_NAMES:
            ref_rows = [r for r in reference[name] if r["p"] in primes]
            total += len(ref_rows)
            problems.extend(tables.diff_rows(name, built[name], ref_rows))
        if problems:
            for line in problems:
                print(line)
            print(f"{len(problems)} mismatches")
            return MISMATCH
        print(f"tables match the reference data ({total} rows)")
    return 0


# ---------------- verify ----------------


def _corrupted_bases():
    bases = families.quintic_bases()
    s1 = [list(r) for r in bases.S1]
    s1[0][0] += 1
    return bases._replace(S1=tuple(tuple(r) for r in s1))


def cmd_verify(args) -> int:
    checks = []
    bases = _corrupted_bases() if args.inject_fault else None
    checks.extend(verify_identities(bases))

    for fam in catalog():
        for p in tables.DEFAULT_PRIMES:
            sub = verify_power_lemma(fam, p)
            checks.append(
                families.Check(f"power lemma for {fam} mod {p}", all(c.passed for c in sub))
            )

    for fam in catalog():
        ok = all(
            families.m0_power(fam, m) == mat_pow(families.m0(fam), m) for m in range(51)
        )
        checks.append(families.Check(f"closed-form M0^m = mat_pow (m <= 50) for {fam}", ok))

    for fam in catalog():
        gens = [families.m0(fam), families.M1]
        basis = solve_invariant_skew_form(gens)
        ok = bool(basis) and any(det(om) != 0 for om in basis)
        minf = families.m_infinity(fam)
        for om in basis:
            for g in gens + [minf]:
                ok = ok and mat_mul(mat_mul(g, om), transpose(g)) == om
        checks.append(families.Check(f"invariant skew form for {fam}", ok))

    failures = 0
    for check in checks:
        print(f"{'PASS' if check.passed else 'FAIL'}  {check.name}")
        failures += 0 if check.passed else 1
    print(f"{len(checks) - failures}/{len(checks)} checks passed")
    return MISMATCH if failures else 0


# ---------------- screen ----------------


def cmd_screen(args) -> int:
    try:
        vector = _parse_vector(args.vector)
    except ValueError as exc:
        return _fail_usage(str(exc))
    verdict = conjecture_screen(vector)
    print(verdict.value)
    if not args.search:
        return 0
    if verdict is Verdict.TORUS_CANDIDATE:
        seed = DELTA2
    elif verdict is Verdict.SPHERE_CANDIDATE:
        seed = DELTA4
    else:
        print("search skipped: only candidate classes have a seed orbit to search from")
        return 0
    try:
        word = word_search(
            seed,
            vector,
            family(5, 5),
            max_len=args.max_len,
            max_abs_entry=args.max_entry,
        )
    except ValueError as exc:
        return _fail_usage(str(exc))
    if word is None:
        print(f"no witness found (max-len={args.max_len}, max-entry={args.max_entry}); "
              "absence is not a disproof")
    else:
        body = "" if not word.factors else str(word)
        print(f"witness: [{body}]")
    return 0


# ---------------- catalog ----------------


def cmd_catalog_dump(args) -> int:
    doc = [
        {"d": f.d, "k": f.k, "A": str(f.A), "B": str(f.B), "label": f.label}
        for f in catalog()
    ]
    print(json.dumps(doc, indent=1, ensure_ascii=False))
    return 0


# ---------------- pf ----------------


def _parse_complex(text: str) -> complex:
    return complex(text.replace("i", "j").replace(" ", ""))


def cmd_pf_check(args) -> int:
    try:
        d, k = (int(x) for x in args.family.split(","))
        fam = _parse_family(d, k)
    except ValueError as exc:
        return _fail_usage(f"bad --family: {exc}")
    try:
        base = _parse_complex(args.base)
    except ValueError:
        return _fail_usage(f"bad --base {args.base!r}")
    if args.radius <= 0:
        return _fail_usage("radius must be positive")

    reports = compare_invariants(fam, tol=args.tol, base=base, radius=args.radius)
    doc = [
        {
            "family": [r.d, r.k],
            "loop": r.loop,
            "charpoly_numeric": [[c.real, c.imag] for c in r.charpoly_numeric],
            "charpoly_integer": list(r.charpoly_integer),
            "matched": r.matched,
            "max_dev": r.max_dev,
            "err": r.err,
            "pass": r.passed,
        }
        for r in reports
    ]
    print(json.dumps(doc, indent=1))
    return 0 if all(r.passed for r in reports) else MISMATCH


# ---------------- parser ----------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyorbits",
        description="Monodromy orbit catalogs for the fourteen hypergeometric "
        "mirror Calabi-Yau families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_orbit = sub.add_parser("orbit", help="orbit of a seed vector mod p")
    p_orbit.add_argument("--d", type=int, required=True)
    p_orbit.add_argument("--k", type=int, required=True)
    p_orbit.add_argument("--p", type=int, required=True)
    p_orbit.add_argument("--seed", required=True, help="n1,n2,n3,n4")
    p_orbit.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_orbit.set_defaults(func=cmd_orbit)

    p_tables = sub.add_parser("tables", help="emit or diff the three orbit catalogs")
    p_tables.add_argument(
        "--primes", default=",".join(str(p) for p in tables.DEFAULT_PRIMES)
    )
    p_tables.add_argument("--out-dir")
    p_tables.add_argument("--format", choices=("json", "csv", "md"), default="json")
    p_tables.add_argument(
        "--diff",
        metavar="REF",
        help='"golden" for the bundled reference data, or a directory of table JSON files',
    )
    p_tables.add_argument("--threads", type=int, default=1)
    p_tables.set_defaults(func=cmd_tables)

    p_verify = sub.add_parser("verify", help="run the exact verification suite")
    p_verify.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p_verify.set_defaults(func=cmd_verify)

    p_screen = sub.add_parser("screen", help="screen an integer class mod 2 and mod 5")
    p_screen.add_argument("vector", help="n1,n2,n3,n4")
    p_screen.add_argument("--search", action="store_true", help="search for a witness word")
    p_screen.add_argument("--max-len", type=int, default=12)
    p_screen.add_argument("--max-entry", type=int, default=10**6)
    p_screen.set_defaults(func=cmd_screen)

    p_catalog = sub.add_parser("catalog", help="family catalog utilities")
    catalog_sub = p_catalog.add_subparsers(dest="catalog_command", required=True)
    p_dump = catalog_sub.add_parser("dump", help="emit the fourteen families as JSON")
    p_dump.set_defaults(func=cmd_catalog_dump)

    p_pf = sub.add_parser("pf", help="Picard-Fuchs numerical cross-checks")
    pf_sub = p_pf.add_subparsers(dest="pf_command", required=True)
    p_check = pf_sub.add_parser("check", help="compare numeric and integer monodromy invariants")
    p_check.add_argument("--family", default="5,5", help="d,k")
    p_check.add_argument("--tol", type=float, default=1e-4)
    p_check.add_argument("--base", default="0.5+0.25i")
    p_check.add_argument("--radius", type=float, default=0.45)
    p_check.set_defaults(func=cmd_pf_check)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
