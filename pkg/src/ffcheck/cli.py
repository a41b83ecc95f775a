"""Command-line entry point.

Exit status: 0 when every check passed (or a witness was found), 1 when a
check failed or a counterexample turned up, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Callable

from . import bounds, charsum, engine, galois, polyring
from .modnt import factorize, prime_modulus, prime_power, small_primes
from .sieve import build_sieve

FORMATS = ("json", "csv", "text")


@dataclass
class RunConfig:
    subcommand: str
    params: dict[str, Any] = field(default_factory=dict)
    fmt: str = "json"
    out: str | None = None


def parse_sigma(s: str) -> int:
    if s in ("+1", "1", "+"):
        return 1
    if s in ("-1", "-"):
        return -1
    raise argparse.ArgumentTypeError(f"sigma must be +1 or -1, got {s!r}")


def positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def _text(obj: Any, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(_text(x, indent) if isinstance(x, dict) else f"{pad}- {x}" for x in obj)
    return f"{pad}{obj}"


def _csv(rows: list[dict]) -> str:
    import csv
    import io

    if not rows:
        return ""
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: json.dumps(v) if isinstance(v, (dict, list)) else v for k, v in r.items()})
    return buf.getvalue()


def render(obj: Any, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(obj, indent=2) + "\n"
    if fmt == "csv":
        rows = obj if isinstance(obj, list) else [obj]
        return _csv(rows)
    return _text(obj) + "\n"


# subcommands: each returns (payload, ok) ---------------------------------------------


def cmd_bounds_table(a) -> tuple[Any, bool]:
    rows = bounds.bounds_table(a.n_max)
    if a.format == "csv":
        return bounds.table_csv(rows), True
    if a.format == "text":
        return bounds.table_text(rows), True
    return json.loads(bounds.table_json(rows)), True


def cmd_thresholds(a):
    rep = bounds.verify_thresholds()
    d = rep.to_dict()
    d["certified_search_limits"] = {str(k): v for k, v in engine.certified_limits().items()}
    return d, rep.passed


def cmd_large_omega(a):
    rep = bounds.check_large_omega_lemma()
    return rep.to_dict(), rep.passed


def cmd_witness(a):
    w = engine.witness(a.p, a.sigma)
    if w is None:
        return {"p": a.p, "sigma": a.sigma, "a": None}, False
    return w.to_dict(), True


def cmd_charsum(a):
    prime_modulus(a.p)
    ds = [a.d] if a.d else [d for d in range(1, a.p + 2) if (a.p + 1) % d == 0]
    profs = [charsum.profile(a.p, a.sigma, d) for d in ds]
    payload = [pr.to_dict() for pr in profs]
    ok = all(pr.identity_holds() for pr in profs)
    if a.p >= 13:
        ok = ok and all(pr.within_weil_bound() for pr in profs)
    return payload if len(payload) > 1 or a.format == "csv" else payload[0], ok


def cmd_identity(a):
    if a.p:
        ps = [prime_modulus(a.p)]
    else:
        ps = [q for q in small_primes(a.hi - 1) if q > max(a.lo, 3)]
    sigmas = [a.sigma] if a.sigma else [1, -1]
    rows, ok = [], True
    for p in ps:
        for s in sigmas:
            r = charsum.count_report(p, s)
            divs = [d for d in range(1, p + 2) if (p + 1) % d == 0]
            profs = [charsum.profile(p, s, d) for d in divs]
            k = factorize(p + 1).rad
            row = r.to_dict()
            row["doubled_identity_holds"] = all(pr.identity_holds() for pr in profs)
            row["floor_identity_failures"] = [pr.d for pr in profs if not pr.floor_identity_holds()]
            row["refined_F_rad"] = charsum.refined_F(p, s, k)
            good = r.agrees and r.count1_holds and row["doubled_identity_holds"]
            row["passed"] = good
            ok = ok and good
            rows.append(row)
    return rows if len(rows) > 1 or a.format == "csv" else rows[0], ok


def cmd_search(a):
    table = build_sieve(max(a.hi, 2))
    rep = engine.search(a.lo, a.hi, a.mode, table, threads=a.threads, chunk_size=a.chunk_size)
    return rep.to_dict(), rep.verified


def cmd_disc(a):
    if a.poly:
        if not a.p:
            raise UsageError("--poly needs --p")
        f = polyring.parse_poly(a.poly, a.p)
        cert = polyring.realization_cert(f, f.degX, a.p, a.group)
        d = {"poly": str(f), **cert.to_dict()}
        return d, cert.hypotheses_verified
    if a.family == "table":
        checks = polyring.disc_table(a.p)
        payload = [c.to_dict() for c in checks]
        return payload if len(payload) > 1 or a.format == "csv" else payload[0], all(c.matches for c in checks)
    if a.family == "new":
        ps = [a.p] if a.p else [5, 7, 11, 13]
        reps = [polyring.disc_family_new(p) for p in ps]
        common = set.intersection(*(set(r.matching) for r in reps))
        payload = {"reports": [r.to_dict() for r in reps], "variant_matching_all": sorted(common)}
        return payload, bool(common)
    pairs = [(a.p, a.a)] if a.p else [(7, 3), (11, 5), (13, 3)]
    if any(x is None for pr in pairs for x in pr):
        raise UsageError("--family mtr needs both --p and --a")
    reps = [polyring.disc_family_mtr(p, x) for p, x in pairs]
    payload = [r.to_dict() for r in reps]
    return payload if len(payload) > 1 or a.format == "csv" else payload[0], all(r.matches for r in reps)


def cmd_galois(a):
    q = a.q or a.p
    if not q:
        raise UsageError("galois needs --p or --q")
    p, _ = prime_power(q)
    if a.poly:
        f = polyring.parse_poly(a.poly, p)
    elif p in polyring.TABLE_FAMILY:
        f = polyring.parse_poly(polyring.TABLE_FAMILY[p][0], p)
    else:
        raise UsageError(f"no table polynomial over F_{p}; pass --poly")
    rep = galois.sample_evidence(f, q, a.samples, a.seed)
    d = {"poly": str(f), **rep.to_dict()}
    return d, rep.coherent


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="json", help="output format (default: json)")
    common.add_argument("--out", default=None, help="write the report here instead of stdout")

    ap = argparse.ArgumentParser(prog="ffcheck", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="subcommand", required=True, metavar="SUBCOMMAND")

    def add(name: str, fn: Callable, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help_, description=help_)
        sp.set_defaults(func=fn)
        return sp

    sp = add("bounds-table", cmd_bounds_table, "worst-case sieve bound table R(l,s), L(l,s)")
    sp.add_argument("--n-max", type=positive, default=12, help="last row (default: 12, max 20)")

    add("thresholds", cmd_thresholds, "check the search-range thresholds")
    add("large-omega", cmd_large_omega, "check the omega(N) >= 13 totient lemma")

    sp = add("witness", cmd_witness, "minimal witness a for (p, sigma)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--sigma", type=parse_sigma, required=True, help="+1 or -1")

    sp = add("charsum", cmd_charsum, "N(d), eta sum and xi(d) for d | p+1")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--sigma", type=parse_sigma, required=True, help="+1 or -1")
    sp.add_argument("--d", type=positive, default=None, help="divisor of p+1 (default: all)")

    sp = add("identity", cmd_identity, "exact inclusion-exclusion identities for one p or a range")
    sp.add_argument("--p", type=int, default=None)
    sp.add_argument("--lo", type=int, default=13, help="range mode: primes in (lo, hi) (default lo: 13)")
    sp.add_argument("--hi", type=int, default=1000, help="(default: 1000)")
    sp.add_argument("--sigma", type=parse_sigma, default=None, help="+1 or -1 (default: both)")

    sp = add("search", cmd_search, "exhaustive witness search over a prime range")
    sp.add_argument("--lo", type=int, default=13, help="(default: 13)")
    sp.add_argument("--hi", type=int, required=True)
    sp.add_argument("--mode", choices=engine.MODES, default="full", help="(default: full)")
    sp.add_argument(
        "--threads", type=positive, default=engine.default_threads(), help="worker processes (default: all cores)"
    )
    sp.add_argument("--chunk-size", type=positive, default=20000, help="primes per work unit (default: 20000)")

    sp = add("disc", cmd_disc, "discriminant checks for the polynomial families")
    sp.add_argument("--family", choices=("table", "mtr", "new"), default="table", help="(default: table)")
    sp.add_argument("--p", type=int, default=None, help="field characteristic (default: every built-in case)")
    sp.add_argument("--a", type=int, default=None, help="parameter a for --family mtr")
    sp.add_argument("--poly", default=None, help="check an arbitrary monic polynomial instead")
    sp.add_argument("--group", default=None, help="group evidence for --poly: S_n or A_n")

    sp = add("galois", cmd_galois, "Frobenius cycle-type sampling")
    sp.add_argument("--p", type=int, default=None, help="prime field (default polynomial: the table entry)")
    sp.add_argument("--q", type=int, default=None, help="sample over F_q, q a power of p")
    sp.add_argument("--poly", default=None)
    sp.add_argument("--samples", type=positive, default=200, help="(default: 200)")
    sp.add_argument("--seed", type=int, default=0, help="64-bit sampling seed (default: 0)")
    return ap


def run(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    params = {k: v for k, v in vars(a).items() if k not in ("func", "format", "out")}
    cfg = RunConfig(a.subcommand, params, a.format, a.out)
    try:
        payload, ok = a.func(a)
    except (UsageError, ValueError) as e:
        print(f"ffcheck {cfg.subcommand}: error: {e}", file=sys.stderr)
        return 2
    text = payload if isinstance(payload, str) else render(payload, cfg.fmt)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
