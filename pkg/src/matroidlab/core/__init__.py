"""Matroid oracles and constructions, with an axiom checker."""
from .elements import ElementSet, as_mask, bits_of, elems, full, mask_of, popcount, subsets_canonical
from .matroid import (BlowUp, Contraction, DirectSum, Dual, Explicit, Graphic, Join, Laminar, LinearGF,
                      LinearQ, Matroid, Restriction, Transversal, Uniform)
from .constructions import (blowup, canonical_json, complete_graph, construct, contract, delete, describe,
                            direct_sum, dual, explicit_bases, explicit_independent, graphic, join, laminar,
                            linear_gf, linear_q, load, restrict, transversal, uniform)
from .axioms import AxiomReport, AxiomResult, check_axioms


def _out(M, m):
    return ElementSet(m, M.n) if M.n <= 64 else m


def is_independent(M, A) -> bool:
    return M.is_independent(A)


def rank(M, A) -> int:
    return M.rank(A)


def closure(M, A):
    return _out(M, M.closure(A))


def circuits(M, cap=None):
    return [_out(M, c) for c in M.circuits(cap)]


def bases(M, cap=None):
    return [_out(M, b) for b in M.bases(cap)]
