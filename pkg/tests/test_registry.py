"""Catalog integrity, single checks, grids, and sweep behaviour."""
import random

import pytest

from supercong.registry import (
    ConjectureInstance,
    Grids,
    catalog,
    check,
    get_statement,
    instances_for,
    summarize,
    sweep,
)
from supercong.verdicts import Status


def test_catalog_shape():
    cat = catalog()
    ids = [s.id for s in cat]
    assert len(ids) == len(set(ids))
    assert len(cat) > 100
    proven = {s.id for s in cat if s.proven}
    assert "T2.1" in proven and "RV1" in proven and "DED" in proven
    for s in cat:
        assert s.modexp in (1, 2, 3)
        assert s.formula and s.applies


def test_get_statement_unknown():
    with pytest.raises(ValueError):
        get_statement("9.99")


def test_check_21_spot():
    v = check("2.1", 13)
    assert v.status is Status.HOLDS
    assert v.lhs == v.rhs == 3
    assert v.modulus == 13
    # hypothesis unmet at p = 7 (not 13 mod 24)
    assert check("2.1", 7).status is Status.NOT_APPLICABLE


def test_check_spot_values():
    v = check("4.14", 5)
    assert (v.status, v.lhs, v.modulus) == (Status.HOLDS, 17, 25)
    v = check("4.22b", 7)
    assert (v.status, v.lhs, v.modulus) == (Status.HOLDS, 14, 49)
    v = check("RV1", 13)
    assert (v.status, v.lhs, v.modulus) == (Status.HOLDS, 10, 169)


def test_check_e_override():
    v = check("RV1", 13, e_override=1)
    assert v.modulus == 13 and v.lhs == 10 % 13
    v = check("2.1", 13, e_override=1)
    assert v.modulus == 13


def test_check_param_validation():
    with pytest.raises(ValueError):
        check("2.7i", 13)  # q missing
    with pytest.raises(ValueError):
        check("2.7i", 13, {"q": 11, "z": 1})
    v = check("2.7i", 13, {"q": 11})
    assert v.params == {"q": 11}
    assert v.status in (Status.HOLDS, Status.NOT_APPLICABLE)


def test_check_accepts_instance():
    inst = ConjectureInstance("3.5", 11, (("k", 1),))
    v = check(inst)
    assert v.id == "3.5" and v.p == 11 and v.params == {"k": 1}


def test_check_is_pure():
    for sid, p in (("4.31", 23), ("4.38", 17), ("2.1", 13), ("3.8", 11)):
        v1 = check(sid, p)
        v2 = check(sid, p)
        assert v1 == v2


def test_instances_for_grids():
    assert list(instances_for("2.7i", 13, Grids(q_max=50))) == [
        {"q": 3}, {"q": 11}, {"q": 19}, {"q": 43}]
    assert list(instances_for("DED", 13, Grids())) == [
        {"m": 2}, {"m": 3}, {"m": 5}]
    ks = [d["k"] for d in instances_for("3.5", 13, Grids(k_max=8))]
    assert ks == [1, 3, 5, 7]
    assert list(instances_for("2.1", 13, Grids())) == [{}]


def test_sweep_order_and_determinism():
    ids = ["2.1", "RV1", "3.5", "4.14"]
    one = sweep(ids=ids, pmin=3, pmax=120, jobs=1)
    par = sweep(ids=ids, pmin=3, pmax=120, jobs=3)
    assert one == par
    keys = [v.sort_key() for v in one]
    assert keys == sorted(keys)


def test_sweep_bound_guard():
    with pytest.raises(ValueError):
        sweep(ids=["RV1"], pmax=3_000_000)
    with pytest.raises(ValueError):
        sweep(ids=["no-such-id"], pmax=50)


def test_sweep_skips_two():
    vs = sweep(ids=["2.1"], pmin=2, pmax=10)
    assert all(v.p != 2 for v in vs)


def test_summarize_counts():
    vs = sweep(ids=["RV1", "RV2"], pmin=3, pmax=200)
    counts = summarize(vs)
    assert counts["Fails"] == 0 and counts["Anomaly"] == 0
    assert counts["Holds"] + counts["NotApplicable"] == len(vs)
    assert counts["Holds"] > 0


def test_proven_statements_hold_sample():
    rng = random.Random(47)
    proven = [s.id for s in catalog() if s.proven]
    for sid in proven:
        vs = sweep(ids=[sid], pmin=3, pmax=400)
        assert all(v.status in (Status.HOLDS, Status.NOT_APPLICABLE) for v in vs)
        # and each proven family actually fires somewhere in range
        assert any(v.status is Status.HOLDS for v in vs), sid


def test_branch_labels_populated():
    # every Holds verdict carries its branch and the congruence sides
    vs = sweep(ids=["4.14", "4.15", "4.31", "4.38"], pmin=3, pmax=150)
    for v in vs:
        if v.status is Status.HOLDS:
            assert v.lhs is not None and v.rhs is not None
            assert v.modulus is not None
            assert v.lhs % v.modulus == v.rhs % v.modulus == v.lhs


def test_excluded_primes_not_applicable():
    # hypothesis carve-outs pinned during validation
    assert check("4.40", 5).status is Status.NOT_APPLICABLE
    assert check("4.23b", 5).status is Status.NOT_APPLICABLE
    assert check("2.6i", 17).status is Status.NOT_APPLICABLE
