"""Acceptance gate: one test (and one printed pass/fail line) per criterion.

Criteria, in order:
  1. proven statements sweep clean for p < 5000
  2. claimed check ranges at desk scale are Holds-only
  3. pinned spot values, exact oracle first, then the fast path
  4. brute-force oracle equivalence suites report zero mismatches
  5. reports are byte-identical across worker counts
  6. (soft) 4.x-family sweep speed and O(p) term-walk linearity
"""
import json
import time

from supercong import cli
from supercong.modarith import PrimePower
from supercong.reference import (
    exact_factorial_sum,
    run_suite,
)
from supercong.registry import catalog, check, summarize, sweep
from supercong.sums import SumSpec, factorial_sum
from supercong.verdicts import Status

JOBS = 4  # criteria that do not pin a worker count sweep in parallel


def _line(num, label, ok, detail=""):
    tag = "PASS" if ok else "FAIL"
    msg = f"ACCEPTANCE {num} ({label}): {tag}"
    if detail:
        msg += f" - {detail}"
    print(msg)
    return msg


def _clean(counts):
    return counts["Fails"] == 0 and counts["Anomaly"] == 0


def test_criterion_1_proven_oracle_sweep():
    proven = [s.id for s in catalog() if s.proven]
    t0 = time.time()
    vs = sweep(ids=proven, pmin=3, pmax=5000, jobs=1)
    wall = time.time() - t0
    counts = summarize(vs)
    ok = _clean(counts) and wall < 120
    msg = _line(1, "proven sweep p<5000", ok,
                f"{counts['Holds']} holds, {counts['Fails']} fails, "
                f"{counts['Anomaly']} anomalies, {wall:.1f}s single-threaded")
    assert ok, msg


def test_criterion_2_claimed_ranges_hold():
    ranges = [
        ("2.1,2.2,2.3", 20000, {}),
        ("2.7,2.8,2.9", 5000, {"q_max": 50}),
        ("3.1", 2000, {"b_max": 19}),
        ("3.2,3.3,3.4", 2000, {"b_max": 40}),
        ("3.5,3.6", 2000, {"k_max": 20}),
        (",".join(s.id for s in catalog()
                  if s.id[0] == "4" and not s.proven), 1000, {}),
    ]
    details = []
    all_ok = True
    for ids, pmax, gkw in ranges:
        from supercong.registry import Grids

        vs = sweep(ids=cli.resolve_ids(ids), pmin=3, pmax=pmax,
                   grids=Grids(**gkw), jobs=JOBS)
        counts = summarize(vs)
        ok = _clean(counts)
        all_ok = all_ok and ok
        label = ids if len(ids) < 20 else "4.1-4.46"
        details.append(f"{label} p<{pmax}: "
                       f"{counts['Fails']}F/{counts['Anomaly']}A"
                       + ("" if ok else " <- FAIL"))
    msg = _line(2, "claimed ranges", all_ok, "; ".join(details))
    assert all_ok, msg


def test_criterion_3_spot_values():
    checks = []

    # exact big-rational oracle first, fast engine second
    checks.append(exact_factorial_sum(SumSpec("ZP", -16), 5, 2) == 17)
    checks.append(factorial_sum(SumSpec("ZP", -16), PrimePower(5, 2)) == 17)

    checks.append(exact_factorial_sum(
        SumSpec("ZP", 16, weight=(5, 2)), 7, 2) == 14)
    checks.append(factorial_sum(
        SumSpec("ZP", 16, weight=(5, 2)), PrimePower(7, 2)) == 14)

    checks.append(exact_factorial_sum(SumSpec("SEXTIC", 1728), 13, 2) == 10)
    checks.append(factorial_sum(SumSpec("SEXTIC", 1728), PrimePower(13, 2)) == 10)

    v = check("2.1", 13)
    checks.append(v.status is Status.HOLDS and v.lhs == 3 and v.rhs == 3)

    ok = all(checks)
    msg = _line(3, "spot values", ok,
                "Z_5(-16)=17, 4.22b@7=14, RV1@13=10, 2.1@13 lhs=rhs=3"
                if ok else f"failed flags: {checks}")
    assert ok, msg


def test_criterion_4_oracle_equivalences():
    details = []
    all_ok = True
    for name in ("franel", "lucas", "factorial", "sums", "identity"):
        rep = run_suite(name)
        all_ok = all_ok and rep.ok
        details.append(f"{name}: {rep.checks} checks, "
                       f"{len(rep.mismatches)} mismatches")
    msg = _line(4, "oracle equivalences", all_ok, "; ".join(details))
    assert all_ok, msg


def test_criterion_5_byte_identical_reports(tmp_path):
    a, b = tmp_path / "jobs1.json", tmp_path / "jobs8.json"
    code1 = cli.main(["sweep", "--ids", "all", "--max", "500",
                      "--jobs", "1", "--out", str(a)])
    code8 = cli.main(["sweep", "--ids", "all", "--max", "500",
                      "--jobs", "8", "--out", str(b)])
    same = a.read_bytes() == b.read_bytes()
    ok = same and code1 == code8 == 0
    msg = _line(5, "determinism", ok,
                f"{a.stat().st_size} bytes, jobs 1 vs 8 "
                + ("identical" if same else "DIFFER"))
    assert ok, msg


def test_criterion_6_soft_performance():
    four = [s.id for s in catalog()
            if s.id[0] in "4Z" or s.id.startswith("RV") or s.id == "DED"]
    t0 = time.time()
    vs = sweep(ids=four, pmin=3, pmax=2000, jobs=1, e_override=2)
    wall = time.time() - t0
    counts = summarize(vs)

    # linearity probe: one O(p) engine timed at doubling primes; a linear
    # walk doubles, a quadratic one quadruples
    spec = SumSpec("SEXTIC", 1728)

    def cost(p):
        pp = PrimePower(p, 2)
        reps, best = 3, float("inf")
        for _ in range(reps):
            t = time.perf_counter()
            factorial_sum(spec, pp)
            best = min(best, time.perf_counter() - t)
        return best

    c1, c2, c4 = cost(1009), cost(2003), cost(4001)
    r21, r42 = c2 / c1, c4 / c2
    linear = r21 < 3.2 and r42 < 3.2
    ok = _clean(counts) and wall < 60 and linear
    msg = _line(6, "soft performance", ok,
                f"4.x-family sweep p<2000 e=2: {wall:.1f}s single-threaded; "
                f"doubling ratios {r21:.2f}, {r42:.2f}")
    assert ok, msg
