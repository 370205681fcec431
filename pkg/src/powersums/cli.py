"""Command-line front end.

Verbs: construct | spectrum | verify | bounds | search. Exit codes are a
stable contract: 0 success/verified, 1 verification failed, 2 usage or
hypothesis error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds as bounds_mod
from . import difference_sets as ds_mod
from . import optimizer as opt_mod
from . import power_sums as ps_mod
from .errors import PowersumsError

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2)


def _fmt(x: float) -> str:
    return f"{x:.12g}"


# ---------------------------------------------------------------------------
# construct


def _construct_set(kind: str, n: int | None, p: int | None) -> ds_mod.DifferenceSet:
    if kind == "ruzsa":
        if p is None:
            raise PowersumsError("ruzsa requires --p (the prime)")
        return ds_mod.ruzsa(p)
    if n is None:
        raise PowersumsError(f"{kind} requires --n")
    return ds_mod.singer(n) if kind == "singer" else ds_mod.bose(n)


def cmd_construct(args) -> int:
    ds = _construct_set(args.kind, args.n, args.p)
    cert = ds_mod.certify(ds)
    ok = ds_mod.certificate_matches_kind(ds, cert)
    record = {"set": ds.to_json_dict(), "certificate": cert.to_json_dict()}
    if args.format == "human":
        lines = [
            f"{ds.kind} set: n={ds.n} modulus={ds.modulus}",
            f"residues: {list(ds.residues)}",
            f"certificate: {cert.verdict}"
            + (f" (divisor {cert.divisor})" if cert.divisor else "")
            + (f" (witness {cert.witness})" if cert.witness is not None else ""),
        ]
        _emit("\n".join(lines), args.output)
    else:
        _emit(_dump_json(record), args.output)
    return EXIT_OK if ok else EXIT_FAILED


# ---------------------------------------------------------------------------
# spectrum


def _system_for(args) -> tuple[ps_mod.PowerSumSystem, dict]:
    """Build the tuple plus metadata for optional report extras."""
    if args.file:
        return ps_mod.load_system(args.file), {}
    if args.kind is None:
        raise PowersumsError("spectrum needs --kind or --file")
    if args.kind == "turan":
        if args.n is None:
            raise PowersumsError("turan requires --n")
        return ps_mod.turan_tuple(args.n), {}
    ds = _construct_set(args.kind, args.n, args.p)
    return ps_mod.from_difference_set(ds), {"kind": ds.kind, "set_n": ds.n}


def _ruzsa_bracket_check(sys: ps_mod.PowerSumSystem, meta: dict) -> dict | None:
    """For ruzsa tuples of size n with n+1 prime: compare the max over
    v = 1..n^2 against the open-problem bracket [sqrt(n), sqrt(n+1)]."""
    if meta.get("kind") != "ruzsa":
        return None
    n = meta["set_n"]
    try:
        lo, hi = bounds_mod.prime_bracket(n)
    except PowersumsError:
        return None
    sp = ps_mod.spectrum(sys, n * n)
    return {
        "n": n,
        "range": n * n,
        "lower": lo.value,
        "upper": hi.value,
        "construction_max": sp.max_value,
        "attains_upper": abs(sp.max_value - hi.value) <= 1e-9,
        "within_bracket": lo.value - 1e-9 <= sp.max_value <= hi.value + 1e-9,
    }


def cmd_spectrum(args) -> int:
    sys_, meta = _system_for(args)
    if args.range is None:
        raise PowersumsError("spectrum requires --range")
    if args.format == "csv":
        import io

        buf = io.StringIO()
        ps_mod.write_spectrum_csv(sys_, args.range, buf)
        _emit(buf.getvalue(), args.output)
        return EXIT_OK
    sp = ps_mod.spectrum(sys_, args.range)
    bracket = _ruzsa_bracket_check(sys_, meta)
    if args.format == "human":
        lines = [f"n={sp.n} range={sp.nu_range}"]
        lines += [f"nu={i + 1} abs={_fmt(float(v))}" for i, v in enumerate(sp.values)]
        lines.append(f"max={_fmt(sp.max_value)} at nu={sp.argmax_nu}")
        if bracket:
            lines.append(
                f"bracket [{_fmt(bracket['lower'])}, {_fmt(bracket['upper'])}] over "
                f"nu<=({bracket['n']})^2: construction max {_fmt(bracket['construction_max'])}"
            )
        _emit("\n".join(lines), args.output)
    else:
        record = sp.to_json_dict()
        if bracket:
            record["bracket_check"] = bracket
        _emit(_dump_json(record), args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    certs: list[bounds_mod.EqualityCertificate] = []
    if args.theorem == 1:
        certs.append(bounds_mod.verify_theorem1(args.n))
    else:
        if args.all_i:
            for i in range(2, args.n):
                certs.append(bounds_mod.verify_theorem2(args.n, i))
        else:
            if args.i is None:
                raise PowersumsError("theorem 2 requires --i or --all-i")
            certs.append(bounds_mod.verify_theorem2(args.n, args.i))
    if args.format == "human":
        lines = []
        for c in certs:
            lines.append(
                f"theorem {c.theorem} n={c.n}"
                + (f" i={c.i}" if c.i is not None else "")
                + f" range={c.nu_range}: bound={_fmt(c.lower_bound.value.value)}"
                f" construction={_fmt(c.construction_max)} verdict={c.verdict}"
            )
        _emit("\n".join(lines), args.output)
    else:
        records = [c.to_json_dict() for c in certs]
        _emit(_dump_json(records[0] if len(records) == 1 else records), args.output)
    return EXIT_OK if all(c.verdict == "equal" for c in certs) else EXIT_FAILED


# ---------------------------------------------------------------------------
# bounds


def cmd_bounds(args) -> int:
    if args.n < 1:
        raise PowersumsError(f"n must be at least 1, got {args.n}")
    reports = []
    if args.m is not None:
        reports.append(bounds_mod.cassels_bound(args.n, args.m))
    if args.c is not None:
        reports.append(bounds_mod.ncs_bound(args.n, args.c))
    if args.m is None and args.c is None:
        reports.append(bounds_mod.cassels_bound(args.n, args.n))
        if args.n >= 2:
            reports.append(bounds_mod.ncs_bound(args.n, args.n - 1))
        reports.append(bounds_mod.ncs_bound(args.n, args.n))
    rows = bounds_mod.reference_values(args.n)
    if args.format == "human":
        lines = []
        for b in reports:
            lines.append(
                f"{b.name} bound (n={b.n}, param={b.param}): range {b.range_limit}, "
                f"value {b.value} = {_fmt(b.value.value)}  [{b.constraint}]"
            )
        for row in rows:
            value = (
                f"value {_fmt(row.value)}"
                if row.value is not None
                else f"bracket [{_fmt(row.bracket[0])}, {_fmt(row.bracket[1])}]"
            )
            applicable = "yes" if row.applicable else "no"
            lines.append(
                f"{row.name}: range {row.nu_range}, {value}, applicable {applicable} "
                f"[{row.constraint}; {row.condition}]"
            )
        _emit("\n".join(lines), args.output)
    else:
        record = {
            "bounds": [b.to_json_dict() for b in reports],
            "references": [r.to_json_dict() for r in rows],
        }
        _emit(_dump_json(record), args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# search


def cmd_search(args) -> int:
    spec = opt_mod.SearchSpec(
        n=args.n,
        nu_range=args.range,
        constraint=args.constraint,
        restarts=args.restarts,
        seed=args.seed,
        radial_slack=args.cap_slack,
    )
    result = opt_mod.minimize(spec)
    record = result.to_json_dict()
    known = bounds_mod.known_construction(spec.n, spec.nu_range, spec.constraint)
    if known is not None:
        system, label = known
        match = opt_mod.compare_to_construction(result, system, label)
        record["construction_match"] = match.to_json_dict()
    if args.format == "human":
        lines = [
            f"search n={spec.n} range={spec.nu_range} constraint={spec.constraint} "
            f"restarts={spec.restarts} seed={spec.seed}",
            f"best value {_fmt(result.best_value)}",
        ]
        bc = record["bound_check"]
        if bc["bound"] is not None:
            lines.append(
                f"lower bound {_fmt(bc['bound'])} ({bc['name']}): "
                + ("satisfied" if bc["satisfied"] else "VIOLATED")
            )
        if "construction_match" in record:
            cm = record["construction_match"]
            lines.append(
                f"vs {cm['construction']} construction: distance {_fmt(cm['distance'])}, "
                f"objective gap {_fmt(cm['objective_gap'])}, {cm['verdict']}"
            )
        _emit("\n".join(lines), args.output)
    else:
        _emit(_dump_json(record), args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powersums",
        description="difference sets, power-sum spectra, bound certificates, minimax search",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("json", "csv", "human"), default="json")
        p.add_argument("--output", default=None, help="output path (default stdout)")

    p = sub.add_parser("construct", help="build a difference set and certify it")
    p.add_argument("--kind", choices=ds_mod.KINDS, required=True)
    p.add_argument("--n", type=int, default=None, help="set size (singer/bose)")
    p.add_argument("--p", type=int, default=None, help="prime parameter (ruzsa)")
    add_common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("spectrum", help="evaluate |S_v| over a range")
    p.add_argument("--kind", choices=(*ds_mod.KINDS, "turan"), default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--p", type=int, default=None, help="prime parameter (ruzsa)")
    p.add_argument("--file", default=None, help="JSON tuple file instead of --kind")
    p.add_argument("--range", type=int, default=None, required=False)
    add_common(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", help="certify a theorem equality")
    p.add_argument("--theorem", type=int, choices=(1, 2), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--all-i", action="store_true")
    add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="print bound reports and reference rows")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None, help="cassels parameter")
    p.add_argument("--c", type=int, default=None, help="ncs parameter")
    add_common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("search", help="multi-start minimax search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--range", type=int, required=True)
    p.add_argument(
        "--constraint", choices=opt_mod.CONSTRAINTS, default="unit"
    )
    p.add_argument("--restarts", type=int, default=50)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument(
        "--cap-slack",
        type=float,
        default=1.0,
        help="C in the radial cap 1 + C/n for non-unit constraints",
    )
    add_common(p)
    p.set_defaults(func=cmd_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except PowersumsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
