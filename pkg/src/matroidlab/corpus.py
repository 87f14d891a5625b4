"""A fixed corpus of small loopless matroids used by the test and acceptance suites."""
from __future__ import annotations

from .core import (complete_graph, contract, delete, direct_sum, dual, explicit_bases, graphic, laminar,
                   linear_gf, linear_q, restrict, transversal, uniform)

FANO = [[1, 0, 0, 1, 1, 0, 1],
        [0, 1, 0, 1, 0, 1, 1],
        [0, 0, 1, 0, 1, 1, 1]]

AG32 = [[1, 0, 0, 0, 0, 1, 1, 1],
        [0, 1, 0, 0, 1, 0, 1, 1],
        [0, 0, 1, 0, 1, 1, 0, 1],
        [0, 0, 0, 1, 1, 1, 1, 0]]

TERNARY_37 = [[1, 0, 0, 1, 1, 0, 1],
              [0, 1, 0, 1, 2, 1, 1],
              [0, 0, 1, 0, 0, 1, 2]]

TERNARY_24 = [[1, 0, 1, 1],
              [0, 1, 1, 2]]

RATIONAL_36 = [[1, 0, 0, 1, "1/2", 2],
               [0, 1, 0, 1, 3, "-1"],
               [0, 0, 1, 0, 1, 1]]

RATIONAL_48 = [[1, 0, 0, 0, 1, 1, 2, 0],
               [0, 1, 0, 0, 1, 0, "1/3", 1],
               [0, 0, 1, 0, 0, 1, 1, 1],
               [0, 0, 0, 1, 0, 0, 0, 1]]


def _vamos():
    from itertools import combinations
    pairs = [(0, 1), (2, 3), (4, 5), (6, 7)]
    bad = {tuple(sorted(a + b)) for a, b in combinations(pairs, 2)}
    bad.discard((0, 1, 6, 7))          # the one missing plane
    return explicit_bases(8, [list(S) for S in combinations(range(8), 4) if S not in bad])


def corpus():
    """(name, matroid) pairs, at least thirty, all loopless."""
    K4 = complete_graph(4)
    fano = linear_gf(2, FANO)
    W4 = graphic(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)])
    items = [
        ("U(1,3)", uniform(3, 1)),
        ("U(2,4)", uniform(4, 2)),
        ("U(2,5)", uniform(5, 2)),
        ("U(3,5)", uniform(5, 3)),
        ("U(3,6)", uniform(6, 3)),
        ("U(2,6)", uniform(6, 2)),
        ("U(4,8)", uniform(8, 4)),
        ("U(3,7)", uniform(7, 3)),
        ("M(K4)", K4),
        ("M(K5)", complete_graph(5)),
        ("M(K4-e)", graphic(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])),
        ("M(bowtie)", graphic(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])),
        ("M(K2,3)", graphic(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])),
        ("M(W4)", W4),
        ("M(K5-e)", graphic(5, [(a, b) for a in range(5) for b in range(a + 1, 5) if (a, b) != (3, 4)])),
        ("M(theta)", graphic(4, [(0, 1), (0, 1), (0, 2), (2, 1), (0, 3), (3, 1)])),
        ("Fano", fano),
        ("AG(3,2)", linear_gf(2, AG32)),
        ("GF3 3x7", linear_gf(3, TERNARY_37)),
        ("GF3 2x4", linear_gf(3, TERNARY_24)),
        ("Q 3x6", linear_q(RATIONAL_36)),
        ("Q 4x8", linear_q(RATIONAL_48)),
        ("transversal 6", transversal(6, [[0, 1, 2], [2, 3], [3, 4, 5]])),
        ("transversal 7", transversal(7, [[0, 1, 2, 3], [3, 4], [4, 5, 6], [0, 6]])),
        ("laminar 6", laminar(6, [[0, 1, 2], [0, 1, 2, 3, 4, 5]], [1, 3])),
        ("laminar 8", laminar(8, [[0, 1], [2, 3, 4], [0, 1, 2, 3, 4], [5, 6, 7]], [1, 2, 2, 2])),
        ("Vamos", _vamos()),
        ("dual M(W4)", dual(W4)),
        ("dual Fano", dual(fano)),
        ("dual M(K2,3)", dual(graphic(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]))),
        ("Fano delete 6", delete(fano, [6])),
        ("Fano contract 6", contract(fano, [6])),
        ("M(K5) restrict", restrict(complete_graph(5), [0, 1, 2, 4, 5, 7])),
        ("U(1,2)+U(2,3)", direct_sum(uniform(2, 1), uniform(3, 2))),
        ("M(K4)+U(1,1)", direct_sum(K4, uniform(1, 1))),
    ]
    for name, M in items:
        M.name = name
    return items


def small(max_ground):
    return [(name, M) for name, M in corpus() if M.n <= max_ground]
