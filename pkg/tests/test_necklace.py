import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from matroidlab.errors import DivisibilityError
from matroidlab.necklace import (GridNecklace, Necklace1D, fair_split_1d, fair_split_grid, min_cuts,
                                 min_cuts_batch, necklaces, tight_example, verify_1d, verify_grid)


def N(s):
    return Necklace1D.parse(s)


def test_split_examples():
    S = fair_split_1d(N("AABB"), 2, 2)
    assert S.cuts == (1, 3) and S.part_of == (1, 2, 1) and verify_1d(N("AABB"), 2, S)
    S = fair_split_1d(N("ABAB"), 2, 1)
    assert S.cuts == (2,) and verify_1d(N("ABAB"), 2, S)
    assert fair_split_1d(N("AABB"), 2, 1) is None


def test_divisibility_is_distinct():
    with pytest.raises(DivisibilityError):
        fair_split_1d(N("AAB"), 2, 2)
    with pytest.raises(DivisibilityError):
        min_cuts(N("AB"), 2)


def test_min_cuts_examples():
    assert min_cuts(N("AABB"), 2) == 2
    assert min_cuts(N("AABBCC"), 2) == 3
    assert min_cuts(N("AA"), 2) == 1


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("q", [2, 3])
def test_tight_examples(k, q):
    T = tight_example(k, q)
    assert len(T) == k * q and min_cuts(T, q) == k * (q - 1)
    assert str(tight_example(2, 2)) == "AABB"


def test_grid_examples():
    G = GridNecklace.parse([["A", "B"], ["B", "A"]])
    S = fair_split_grid(G, 2, (1, 0))
    assert S.cuts == ((1,), ()) and verify_grid(G, 2, S)
    assert fair_split_grid(G, 2, (0, 0)) is None


def test_grid_matches_1d():
    rng = random.Random(4)
    for _ in range(40):
        n = rng.choice([2, 4, 6])
        s = [rng.randrange(2) for _ in range(n)]
        if s.count(0) % 2 or s.count(1) % 2:
            continue
        Nk = Necklace1D.from_any(s)
        S = fair_split_grid(GridNecklace([list(Nk.beads)]), 2, (0, n - 1))
        assert len(S.cuts[1]) == min_cuts(Nk, 2)


def test_batch_matches_solver():
    rng = random.Random(9)
    for q in (2, 3):
        for _ in range(60):
            n = q * rng.randint(1, 3)
            s = [rng.randrange(2) for _ in range(n)]
            if s.count(0) % q or s.count(1) % q:
                continue
            Nk = Necklace1D.from_any(s)
            assert min_cuts_batch([[b - 1 for b in Nk.beads]], q, 2)[0] == min_cuts(Nk, q)


def test_necklace_enumeration():
    assert len(necklaces(3, 3)) == 5            # aaa aab aba abb abc
    assert len(necklaces(4, 2)) == 8


def test_alon_bound_twelve_beads():
    for n in (3, 6, 9, 12):
        S = necklaces(n, 2)
        counts = np.stack([(S == c).sum(axis=1) for c in range(2)], axis=1)
        S = S[(counts % 3 == 0).all(axis=1)]
        used = S.max(axis=1) + 1
        mc = min_cuts_batch(S, 3, 2)
        assert (mc >= 0).all() and (mc <= 2 * used).all()


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=1, max_size=5))
def test_splittings_verify(half):
    rng = random.Random(len(half))
    beads = half + half
    rng.shuffle(beads)
    Nk = Necklace1D.from_any(beads)
    S = fair_split_1d(Nk, 2, Nk.k)
    assert S is not None and verify_1d(Nk, 2, S) and len(S.cuts) <= Nk.k
