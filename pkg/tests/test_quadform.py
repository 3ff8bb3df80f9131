"""Quadratic form representations and the sign conventions built on them."""
import random

import pytest

from supercong.primes import sieve
from supercong.quadform import (
    QuadRep,
    delta,
    normalize_odd_part_sign,
    represent,
    two_adic_split,
    two_squares_normalized,
)
from supercong.verdicts import Anomaly


def test_represent_spot():
    reps = represent(13, 1, 1)
    assert [(r.x, r.y) for r in reps] == [(2, 3), (3, 2)]
    assert represent(7, 1, 1) == []
    assert [(r.x, r.y) for r in represent(12, 1, 3)] == [(0, 2), (3, 1)]


def test_represent_exhaustive_small():
    rng = random.Random(3)
    for _ in range(300):
        a = rng.randrange(1, 12)
        b = rng.randrange(1, 12)
        N = rng.randrange(1, 400)
        got = {(r.x, r.y) for r in represent(N, a, b)}
        want = {
            (x, y)
            for x in range(N + 1)
            for y in range(N + 1)
            if a * x * x + b * y * y == N
        }
        assert got == want
        for r in represent(N, a, b):
            assert (r.a, r.b, r.N) == (a, b, N)


def test_two_adic_split():
    s = two_adic_split(48)
    assert (s.alpha, s.t0) == (4, 3)
    assert two_adic_split(-40).t0 == -5
    with pytest.raises(ValueError):
        two_adic_split(0)
    rng = random.Random(5)
    for _ in range(200):
        t = rng.randrange(-10**6, 10**6) or 1
        s = two_adic_split(t)
        assert s.t0 % 2 == 1
        assert s.t0 * 2**s.alpha == t


def test_normalize_odd_part_sign():
    # odd part of the result is always 1 mod 4
    rng = random.Random(7)
    for _ in range(300):
        t = rng.randrange(-10**5, 10**5) or 3
        nt = normalize_odd_part_sign(t)
        assert abs(nt) == abs(t)
        assert two_adic_split(nt).t0 % 4 == 1
    with pytest.raises(Anomaly):
        normalize_odd_part_sign(0)


def test_delta():
    assert delta(16) == 1
    assert delta(8) == 1
    assert delta(4) == -1
    assert delta(0) == 1
    assert delta(-24) == 1
    assert delta(2) == -1


def test_two_squares_normalized():
    for p in sieve(3000):
        if p % 4 != 1:
            continue
        c, d = two_squares_normalized(p)
        assert c * c + d * d == p
        assert c % 2 == 1 and c % 4 == 1
        assert two_adic_split(d).t0 % 4 == 1
    with pytest.raises(Anomaly):
        two_squares_normalized(7)
