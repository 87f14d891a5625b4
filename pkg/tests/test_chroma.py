import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from matroidlab.chroma import (canonical_lists, chromatic_number, color_from_lists, decide_w_colorable,
                               fractional_chromatic, multiple_independent_exchange,
                               multiple_symmetric_exchange, partition_exchange)
from matroidlab.core import complete_graph, direct_sum, uniform
from matroidlab.core.elements import bits_of, elems, popcount
from matroidlab.corpus import corpus
from matroidlab.errors import InfeasibleLists, LoopError
from matroidlab.union import partition_into_independent

from helpers import brute_chi


def test_chromatic_examples():
    assert chromatic_number(uniform(4, 2)) == 2
    assert chromatic_number(complete_graph(5)) == 3
    assert fractional_chromatic(complete_graph(5)) == Fraction(5, 2)
    assert fractional_chromatic(uniform(4, 2)) == 2
    assert fractional_chromatic(uniform(3, 1)) == 3


def test_loops_rejected():
    with pytest.raises(LoopError):
        chromatic_number(direct_sum(uniform(2, 0), uniform(2, 1)))


@pytest.mark.parametrize("name,M", corpus())
def test_chromatic_routes(name, M):
    a = chromatic_number(M, "formula")
    assert a == chromatic_number(M, "partition")
    f = fractional_chromatic(M)
    assert -(-f.numerator // f.denominator) == a
    if M.n <= 8:
        assert a == brute_chi(M)


def test_decide_examples():
    U = uniform(4, 2)
    assert decide_w_colorable(U, 2).ok
    d = decide_w_colorable(U, 1)
    assert not d.ok and d.witness == 0b1111
    # sizes from a partition into independent sets
    M = complete_graph(4)
    parts = partition_into_independent(M, 2).covering.classes
    sizes = [0] * M.n
    for i, V in parts:
        for e in bits_of(V):
            sizes[e] = i + 1
    assert decide_w_colorable(M, sizes).ok
    col = color_from_lists(M, canonical_lists(sizes))
    assert col.verify(M, canonical_lists(sizes))


def test_color_from_lists_examples():
    U = uniform(4, 2)
    col = color_from_lists(U, [{1, 2}] * 4)
    assert sorted(popcount(V) for V in col.color_classes().values()) == [2, 2]
    col = color_from_lists(uniform(2, 1), [{1, 2}, {1, 2}])
    assert col.assignment[0] != col.assignment[1]
    with pytest.raises(InfeasibleLists) as exc:
        color_from_lists(uniform(3, 1), [{1, 2}] * 3)
    assert exc.value.violating_set == 0b111


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([c for c in corpus() if c[1].n <= 6]), st.data())
def test_decide_routes_agree(item, data):
    name, M = item
    sizes = data.draw(st.lists(st.integers(0, 3), min_size=M.n, max_size=M.n))
    w = data.draw(st.lists(st.integers(0, 2), min_size=M.n, max_size=M.n))
    a = decide_w_colorable(M, sizes, w)
    b = decide_w_colorable(M, sizes, w, method="scan")
    assert a.ok == b.ok
    try:
        col = color_from_lists(M, canonical_lists(sizes), w)
        assert a.ok and col.verify(M, canonical_lists(sizes))
    except InfeasibleLists:
        assert not a.ok


def _sym_pair_brute(M, B1, B2, A1):
    out = []
    for c in combinations(elems(B2), popcount(A1)):
        A2 = sum(1 << e for e in c)
        X, Y = (B1 & ~A1) | A2, (B2 & ~A2) | A1
        if popcount(X) == popcount(Y) == M.full_rank and M._indep(X) and M._indep(Y):
            out.append(A2)
    return out


def test_mse_examples():
    U = uniform(4, 2)
    assert multiple_symmetric_exchange(U, [0, 1], [2, 3], [0]) == 0b0100
    assert multiple_symmetric_exchange(U, [0, 1], [2, 3], []) == 0
    assert multiple_symmetric_exchange(U, [0, 1], [2, 3], [0, 1]) == 0b1100


@pytest.mark.parametrize("name,M", [c for c in corpus() if c[1].n <= 7])
def test_mse_against_brute(name, M):
    rng = random.Random(name)
    bases = sorted(M.bases())
    for _ in range(15):
        B1, B2 = rng.choice(bases), rng.choice(bases)
        A1 = sum(1 << e for e in bits_of(B1) if rng.random() < 0.5)
        valid = _sym_pair_brute(M, B1, B2, A1)
        assert valid, "symmetric exchange property fails?"
        A2 = multiple_symmetric_exchange(M, B1, B2, A1)
        assert A2 in valid
        assert multiple_symmetric_exchange(M, B1, B2, A1, lexmin=False) in valid


def test_independent_exchange():
    M = complete_graph(4)
    I1, I2 = 0b000011, 0b100100
    A2 = multiple_independent_exchange(M, I1, I2, 0b01)
    assert M._indep((I1 & ~1) | A2) and M._indep((I2 & ~A2) | 1)


def test_partition_exchange_examples():
    U = uniform(4, 2)
    assert partition_exchange(U, 0b0011, 0b1100, [0b1100]) == [0b0011]
    parts = partition_exchange(U, 0b0011, 0b1100, [0b0100, 0b1000])
    B = 0b1100
    for P, A in zip([0b0100, 0b1000], parts):
        X = (B & ~P) | A
        assert popcount(X) == 2
    assert parts[0] | parts[1] == 0b0011
    # k = 2 agrees with the multiple symmetric exchange
    M = complete_graph(4)
    bases = sorted(M.bases())
    rng = random.Random(3)
    for _ in range(20):
        A, B = rng.choice(bases), rng.choice(bases)
        B1 = sum(1 << e for e in bits_of(B) if rng.random() < 0.5)
        parts = partition_exchange(M, A, B, [B1, B & ~B1])
        assert parts[0] | parts[1] == A and not parts[0] & parts[1]
        for P, Ai in zip([B1, B & ~B1], parts):
            X = (B & ~P) | Ai
            assert popcount(X) == 3 and M._indep(X)
