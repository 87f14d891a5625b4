import json

import pytest
from hypothesis import given, settings, strategies as st

from matroidlab.core import (ElementSet, canonical_json, check_axioms, circuits, closure, complete_graph,
                             construct, contract, describe, direct_sum, dual, explicit_bases,
                             explicit_independent, graphic, is_independent, laminar, linear_gf, linear_q,
                             rank, transversal, uniform)
from matroidlab.core.elements import full, popcount
from matroidlab.corpus import corpus
from matroidlab.errors import CapExceeded, MalformedSpec, UniverseMismatch

from helpers import brute_bases, brute_rank

K4 = complete_graph(4)


def es(items, n):
    return ElementSet.of(items, n)


def test_independence_examples():
    assert is_independent(uniform(4, 2), es([0, 1], 4))
    assert not is_independent(K4, es([0, 1, 3], 6))          # edges 01, 02, 12
    assert is_independent(transversal(3, [[0, 1], [1, 2]]), es([0, 2], 3))


def test_rank_examples():
    assert rank(uniform(4, 2), es(range(4), 4)) == 2
    assert rank(K4, es(range(6), 6)) == 3
    for _, M in corpus():
        assert rank(M, ElementSet(0, M.n)) == 0


def test_closure_examples():
    U = uniform(4, 2)
    assert closure(U, es([0], 4)) == es([0], 4)
    assert closure(U, es([0, 1], 4)) == es(range(4), 4)
    assert closure(K4, es([0, 3], 6)) == es([0, 1, 3], 6)    # 01, 12 close to the triangle with 02


def test_circuit_examples():
    assert sorted(c.tolist() for c in circuits(uniform(4, 2))) == [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]
    assert [c.tolist() for c in circuits(uniform(2, 1))] == [[0, 1]]
    assert circuits(uniform(3, 3)) == []


def test_construct_examples():
    D = dual(uniform(3, 1))
    assert sorted(D.bases()) == sorted(uniform(3, 2).bases())
    C = contract(K4, [0])
    assert C.full_rank == 2 and C.n == 5
    assert direct_sum(uniform(1, 1), uniform(3, 1)).full_rank == 2


def test_axiom_examples():
    assert check_axioms(uniform(4, 2)).ok
    bad = explicit_independent(3, [[], [0], [1], [0, 1], [2]])
    rep = check_axioms(bad)
    assert not rep.ok
    aug = rep["augmentation"]
    assert not aug.passed and aug.witness == (0b100, 0b011)
    assert check_axioms(explicit_independent(3, [[], [0], [1], [2], [0, 1], [0, 2], [1, 2], [0, 1, 2]])).ok


def test_axiom_cap():
    with pytest.raises(CapExceeded):
        check_axioms(uniform(14, 3))


def test_universe_errors():
    with pytest.raises(UniverseMismatch):
        ElementSet(1 << 5, 4)
    with pytest.raises(UniverseMismatch):
        ElementSet(0, 65)
    with pytest.raises(UniverseMismatch):
        es([0], 3) | es([0], 4)


def test_malformed_specs():
    for bad in [{"kind": "uniform", "n": 3}, {"kind": "nope"}, [], {"kind": "linear_gf", "p": 4, "matrix": [[1]]}]:
        with pytest.raises(MalformedSpec):
            construct(bad)


@pytest.mark.parametrize("name,M", corpus())
def test_round_trip(name, M):
    d = describe(M)
    text = canonical_json(d)
    again = construct(json.loads(text))
    assert canonical_json(describe(again)) == text
    assert sorted(again.bases()) == sorted(M.bases())


@pytest.mark.parametrize("name,M", corpus())
def test_rank_matches_brute(name, M):
    if M.n > 8:
        pytest.skip("brute rank kept to small ground sets")
    for A in range(1 << M.n):
        assert M._rank(A) == brute_rank(M, A)
    assert sorted(M.bases()) == brute_bases(M)


def test_fano_depends_on_field():
    # columns 110, 101, 011 sum to zero mod 2 but have determinant -2 over Q
    from matroidlab.corpus import FANO
    assert not linear_gf(2, FANO)._indep(0b0111000)
    assert linear_q(FANO)._indep(0b0111000)
    assert linear_gf(3, FANO)._indep(0b0111000)


@st.composite
def matroid_and_sets(draw):
    name, M = draw(st.sampled_from([c for c in corpus() if c[1].n <= 10]))
    g = full(M.n)
    A = draw(st.integers(0, g))
    B = draw(st.integers(0, g))
    return M, A, B


@settings(max_examples=300, deadline=None)
@given(matroid_and_sets())
def test_rank_submodular_monotone(data):
    M, A, B = data
    r = M._rank
    assert r(A | B) + r(A & B) <= r(A) + r(B)
    assert r(A & B) <= r(A) <= min(popcount(A), M.full_rank)


@settings(max_examples=200, deadline=None)
@given(matroid_and_sets())
def test_closure_idempotent_and_rank_preserving(data):
    M, A, _ = data
    C = M.closure(A)
    assert C & A == A and M.closure(C) == C and M._rank(C) == M._rank(A)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, (1 << 8) - 1), st.integers(0, (1 << 8) - 1))
def test_element_set_algebra(a, b):
    A, B = ElementSet(a, 8), ElementSet(b, 8)
    assert int(A | B) == a | b and int(A & B) == a & b and int(A - B) == a & ~b
    assert (A & B) <= A and len(A.complement()) == 8 - len(A)
