"""Lucas sequence pairs: doubling vs streaming vs exact integers."""
import random

import pytest

from supercong.lucas import LucasPair, lucas_stream, lucas_uv
from supercong.modarith import PrimePower
from supercong.reference import exact_lucas_pair

FIB = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610]


def test_fibonacci_spot():
    pp = PrimePower(10007, 1)
    for n, f in enumerate(FIB):
        pair = lucas_uv(1, -1, n, pp)
        assert pair.u == f
    assert lucas_uv(1, -1, 10, pp).v == 123  # classic Lucas numbers
    assert exact_lucas_pair(2, -1, 7) == (169, 478)  # Pell


def test_doubling_matches_stream():
    rng = random.Random(23)
    for _ in range(20):
        b = rng.randrange(-8, 9)
        c = rng.randrange(-8, 9) or 1
        p = rng.choice((13, 31, 97))
        e = rng.randrange(1, 4)
        pp = PrimePower(p, e)
        for pair in lucas_stream(b, c, 150, pp):
            dbl = lucas_uv(b, c, pair.n, pp)
            assert (dbl.u, dbl.v, dbl.cpow) == (pair.u, pair.v, pair.cpow)


def test_stream_matches_exact_integers():
    pp = PrimePower(101, 2)
    pe = pp.m
    for b, c in ((1, -1), (3, 1), (4, -3), (6, 2)):
        u0, u1, v0, v1 = 0, 1, 2, b
        for pair in lucas_stream(b, c, 120, pp):
            assert pair.u == u0 % pe and pair.v == v0 % pe
            assert pair.cpow == pow(c, pair.n, pe)
            u0, u1 = u1, b * u1 - c * u0
            v0, v1 = v1, b * v1 - c * v0


def test_vn_identity():
    # V_n = 2 U_{n+1} - b U_n, a standard consequence of the recurrence
    pp = PrimePower(53, 3)
    pe = pp.m
    rng = random.Random(29)
    for _ in range(60):
        b = rng.randrange(-9, 10)
        c = rng.randrange(-9, 10) or 2
        n = rng.randrange(0, 300)
        un = lucas_uv(b, c, n, pp)
        un1 = lucas_uv(b, c, n + 1, pp)
        assert un.v == (2 * un1.u - b * un.u) % pe


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        lucas_uv(1, -1, -1, PrimePower(5, 1))
