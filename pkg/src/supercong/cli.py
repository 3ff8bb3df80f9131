"""Command-line front end: catalog listing, single checks, prime sweeps,
and the brute-force oracle suites.

Exit codes: 0 success (Holds / NotApplicable only), 1 counterexample
(some Fails), 2 usage error (bad arguments, composite prime, unknown id),
3 anomaly or oracle mismatch.  Counterexamples dominate anomalies.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from typing import Optional

from .primes import is_prime
from .reference import SUITES, run_suite
from .registry import Grids, catalog, check, get_statement, summarize, sweep
from .verdicts import Status, Verdict

_FIELDS = ("id", "p", "params", "status", "branch", "lhs", "rhs",
           "modulus", "diagnostics")

_STATUS_EXIT = {
    Status.HOLDS: 0,
    Status.NOT_APPLICABLE: 0,
    Status.FAILS: 1,
    Status.ANOMALY: 3,
}


def _fmt_params(params: dict) -> str:
    return ",".join(f"{k}={params[k]}" for k in sorted(params))


def record_of(v: Verdict) -> dict:
    """Flat key/value record; every number is a decimal string so 64-bit
    consumers never overflow on p^3-sized values."""
    return {
        "id": v.id,
        "p": str(v.p),
        "params": _fmt_params(v.params),
        "status": v.status.value,
        "branch": v.branch,
        "lhs": "" if v.lhs is None else str(v.lhs),
        "rhs": "" if v.rhs is None else str(v.rhs),
        "modulus": "" if v.modulus is None else str(v.modulus),
        "diagnostics": v.diagnostics,
    }


def _emit(records, summary, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(records, separators=(",", ":")))
        out.write("\n")
        out.write(json.dumps(summary, separators=(",", ":")))
        out.write("\n")
        return
    delim = "," if fmt == "csv" else "\t"
    w = csv.writer(out, delimiter=delim, lineterminator="\n")
    w.writerow(_FIELDS)
    for r in records:
        w.writerow([r[f] for f in _FIELDS])
    out.write("# " + " ".join(f"{k}={v}" for k, v in summary.items()) + "\n")


def resolve_ids(spec: Optional[str]) -> Optional[list]:
    """Expand a comma-separated id list; a bare prefix picks up its lettered
    sub-ids (2.2 -> 2.2i, 2.2ii; 4.22 -> 4.22a..g).  None/"all" means all."""
    if spec is None or spec.strip().lower() == "all":
        return None
    known = [s.id for s in catalog()]
    out = []
    for tok in spec.split(","):
        tok = tok.strip()
        if not tok:
            continue
        hits = [i for i in known
                if i == tok or (i.startswith(tok) and i[len(tok):].isalpha())]
        if not hits:
            raise ValueError(f"unknown statement id {tok!r}")
        out.extend(i for i in hits if i not in out)
    return out


def _odd_prime(p: int) -> bool:
    return p > 2 and is_prime(p)


# ---------------------------------------------------------------------------
# subcommands


def cmd_list(args) -> int:
    for s in catalog():
        mod = "mod p" if s.modexp == 1 else f"mod p^{s.modexp}"
        parts = [s.id, s.applies, mod]
        if s.params:
            parts.append("params: " + ",".join(s.params))
        if s.proven:
            parts.append("PROVEN")
        parts.append(s.formula)
        print(" | ".join(parts))
    return 0


def cmd_check(args) -> int:
    try:
        st = get_statement(args.id)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not _odd_prime(args.prime):
        print(f"error: --prime must be an odd prime, got {args.prime}",
              file=sys.stderr)
        return 2
    params = {}
    if args.params:
        for tok in args.params.split(","):
            name, sep, val = tok.partition("=")
            try:
                if not sep:
                    raise ValueError
                params[name.strip()] = int(val)
            except ValueError:
                print(f"error: malformed parameter {tok!r} (want name=int)",
                      file=sys.stderr)
                return 2
    if set(params) != set(st.params):
        need = ",".join(st.params) if st.params else "none"
        print(f"error: statement {st.id} takes parameters: {need}",
              file=sys.stderr)
        return 2
    verdict = check(args.id, args.prime, params or None,
                    e_override=args.mod_exp)
    rec = record_of(verdict)
    for f in _FIELDS:
        if f == "diagnostics" and not args.verbose:
            continue
        print(f"{f}: {rec[f]}")
    return _STATUS_EXIT[verdict.status]


def cmd_sweep(args) -> int:
    try:
        ids = resolve_ids(args.ids)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.min >= args.max:
        print("error: --min must be below --max", file=sys.stderr)
        return 2
    gkw = {}
    if args.q_max is not None:
        gkw["q_max"] = args.q_max
    if args.b_max is not None:
        gkw["b_max"] = args.b_max
    if args.k_max is not None:
        gkw["k_max"] = args.k_max
    t0 = time.time()
    try:
        verdicts = sweep(ids=ids, pmin=args.min, pmax=args.max,
                         grids=Grids(**gkw), jobs=args.jobs,
                         e_override=args.mod_exp)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    wall = time.time() - t0
    counts = summarize(verdicts)
    records = [record_of(v) for v in verdicts]
    # wall_time stays blank in the report so outputs are byte-identical
    # across runs and worker counts; the measured time goes to stderr.
    summary = {
        "holds": str(counts["Holds"]),
        "fails": str(counts["Fails"]),
        "notapplicable": str(counts["NotApplicable"]),
        "anomalies": str(counts["Anomaly"]),
        "wall_time": "",
    }
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            _emit(records, summary, args.format, fh)
    else:
        _emit(records, summary, args.format, sys.stdout)
    print(f"swept {len(records)} instances in {wall:.2f}s: "
          f"{counts['Holds']} holds, {counts['Fails']} fails, "
          f"{counts['NotApplicable']} not applicable, "
          f"{counts['Anomaly']} anomalies", file=sys.stderr)
    if counts["Fails"]:
        return 1
    if counts["Anomaly"]:
        return 3
    return 0


def cmd_oracle(args) -> int:
    rep = run_suite(args.suite, args.max)
    print(rep.summary())
    for m in rep.mismatches[:20]:
        print("  " + m)
    if len(rep.mismatches) > 20:
        print(f"  ... and {len(rep.mismatches) - 20} more")
    return 0 if rep.ok else 3


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="supercong",
        description="Verify power-residue, Lucas-sequence and binomial-sum "
                    "congruence statements over ranges of primes.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p_list = sub.add_parser("list", help="print the statement catalog")
    p_list.set_defaults(fn=cmd_list)

    p_check = sub.add_parser("check", help="check one statement at one prime")
    p_check.add_argument("id", help="statement id, e.g. 2.1 or 4.22b")
    p_check.add_argument("--prime", type=int, required=True,
                         help="odd prime p")
    p_check.add_argument("--params", default=None,
                         help="comma-separated name=value, e.g. b=3 or q=7")
    p_check.add_argument("--verbose", action="store_true",
                         help="print diagnostics (representations, branches, "
                              "candidate values)")
    p_check.add_argument("--mod-exp", type=int, choices=(1, 2, 3),
                         default=None, help="override the modulus exponent")
    p_check.set_defaults(fn=cmd_check)

    p_sweep = sub.add_parser("sweep", help="check statements over a prime range")
    p_sweep.add_argument("--ids", default="all",
                         help="comma-separated ids or 'all'; bare prefixes "
                              "expand (2.2 -> 2.2i,2.2ii)")
    p_sweep.add_argument("--min", type=int, default=3,
                         help="lower prime bound, inclusive (default 3)")
    p_sweep.add_argument("--max", type=int, required=True,
                         help="upper prime bound, exclusive")
    p_sweep.add_argument("--q-max", type=int, default=None,
                         help="upper bound for the twin prime q grids")
    p_sweep.add_argument("--b-max", type=int, default=None,
                         help="upper bound for the b parameter grids")
    p_sweep.add_argument("--k-max", type=int, default=None,
                         help="upper bound for the k parameter grids")
    p_sweep.add_argument("--jobs", type=int, default=1,
                         help="worker process count (default 1)")
    p_sweep.add_argument("--format", choices=("json", "csv", "tsv"),
                         default="json")
    p_sweep.add_argument("--out", default=None,
                         help="output path (default: standard output)")
    p_sweep.add_argument("--mod-exp", type=int, choices=(1, 2, 3),
                         default=None, help="override the modulus exponent")
    p_sweep.set_defaults(fn=cmd_sweep)

    p_oracle = sub.add_parser("oracle", help="run a brute-force oracle suite")
    p_oracle.add_argument("suite", choices=sorted(SUITES))
    p_oracle.add_argument("--max", type=int, default=None,
                          help="suite-specific bound (index or prime cap)")
    p_oracle.set_defaults(fn=cmd_oracle)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except BrokenPipeError:
        # downstream consumer (head, grep -m) closed the pipe; not an error
        try:
            sys.stdout.close()
        except OSError:
            pass
        return 0


if __name__ == "__main__":
    sys.exit(main())
