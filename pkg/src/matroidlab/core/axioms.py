"""Exhaustive axiom checks for small oracles.

Each check either passes or records a concrete witness that can be
re-queried against the oracle.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..errors import CapExceeded
from .elements import bits_of, elems, mask_of, popcount


@dataclass
class AxiomResult:
    axiom: str
    passed: bool
    witness: tuple | None = None
    note: str = ""

    def as_dict(self):
        w = None
        if self.witness is not None:
            w = [list(elems(x)) if (self.axiom, i) not in _ELEMENT_SLOTS else x
                 for i, x in enumerate(self.witness)]
        return {"axiom": self.axiom, "passed": self.passed, "witness": w, "note": self.note}


# witness slots holding single elements rather than sets
_ELEMENT_SLOTS = {
    ("basis_exchange", 2),
    ("rank_monotone", 1),
    ("rank_submodular", 1), ("rank_submodular", 2),
    ("closure_monotone", 1),
    ("closure_exchange", 1), ("closure_exchange", 2),
    ("circuit_elimination", 2),
}


@dataclass
class AxiomReport:
    checked_axioms: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.checked_axioms)

    def failures(self):
        return [r for r in self.checked_axioms if not r.passed]

    def __getitem__(self, name):
        for r in self.checked_axioms:
            if r.axiom == name:
                return r
        raise KeyError(name)

    def as_dict(self):
        return [r.as_dict() for r in self.checked_axioms]


def check_axioms(M, cap: int = 12) -> AxiomReport:
    n = M.n
    if n > cap:
        raise CapExceeded(f"exhaustive axiom check on {n} elements exceeds cap {cap}")
    N = 1 << n
    ground = N - 1
    indep = [M._indep(m) for m in range(N)]
    pc = [popcount(m) for m in range(N)]
    report = AxiomReport()
    add = report.checked_axioms.append

    # I1: empty set independent
    add(AxiomResult("empty_independent", indep[0], None if indep[0] else (0,)))

    # I2: downward closure (removing one element suffices)
    w = None
    for m in range(N):
        if indep[m]:
            for e in bits_of(m):
                if not indep[m & ~(1 << e)]:
                    w = (m, m & ~(1 << e))
                    break
            if w:
                break
    add(AxiomResult("downward_closed", w is None, w))

    # largest independent subset size, by subset DP
    rb = [0] * N
    for m in range(1, N):
        if indep[m]:
            rb[m] = pc[m]
        else:
            best = 0
            for e in bits_of(m):
                v = rb[m & ~(1 << e)]
                if v > best:
                    best = v
            rb[m] = best

    # I3: augmentation.  I fails to augment from some larger J exactly when the
    # largest set avoiding I's extensions, E minus ext(I), has a bigger independent subset.
    w = None
    order = sorted((m for m in range(N) if indep[m]), key=lambda m: (pc[m], elems(m)))
    for I in order:
        ext = 0
        for e in bits_of(ground & ~I):
            if indep[I | 1 << e]:
                ext |= 1 << e
        A = ground & ~ext
        if rb[A] > pc[I]:
            for c in combinations(elems(A), pc[I] + 1):
                J = mask_of(c)
                if indep[J]:
                    w = (I, J)
                    break
            break
    add(AxiomResult("augmentation", w is None, w))

    # bases: equicardinal and the exchange axiom
    maxsize = max(pc[m] for m in range(N) if indep[m]) if indep[0] else 0
    bases = [m for m in range(N) if indep[m] and all(not indep[m | 1 << e] for e in bits_of(ground & ~m))]
    w = None
    for B in bases:
        if pc[B] != maxsize:
            w = (B,)
            break
    add(AxiomResult("bases_equicardinal", w is None, w))
    bset = set(bases)
    w = None
    for B1 in bases:
        for B2 in bases:
            if B1 == B2:
                continue
            for e in bits_of(B1 & ~B2):
                if not any((B1 & ~(1 << e)) | 1 << f in bset for f in bits_of(B2 & ~B1)):
                    w = (B1, B2, e)
                    break
            if w:
                break
        if w:
            break
    add(AxiomResult("basis_exchange", w is None, w))

    # rank function from the oracle under test
    r = [M._rank(m) for m in range(N)]
    w = next(((m,) for m in range(N) if r[m] != rb[m]), None)
    add(AxiomResult("rank_matches_independence", w is None, w,
                    "" if w is None else f"oracle rank {r[w[0]]} vs max independent subset {rb[w[0]]}"))
    w = next(((m,) for m in range(N) if not 0 <= r[m] <= pc[m]), None)
    add(AxiomResult("rank_bounds", w is None, w))
    w = None
    for m in range(N):
        for e in bits_of(ground & ~m):
            if r[m | 1 << e] < r[m]:
                w = (m, e)
                break
        if w:
            break
    add(AxiomResult("rank_monotone", w is None, w))
    # local submodularity r(A+e)+r(A+f) >= r(A+e+f)+r(A) is equivalent to the full axiom
    w = None
    for m in range(N):
        out = elems(ground & ~m)
        for e, f in combinations(out, 2):
            a, b = m | 1 << e, m | 1 << f
            if r[a] + r[b] < r[a | b] + r[m]:
                w = (m, e, f)
                break
        if w:
            break
    add(AxiomResult("rank_submodular", w is None, w))

    # closure operator, from the rank table
    cl = [0] * N
    for m in range(N):
        c = m
        for e in bits_of(ground & ~m):
            if r[m | 1 << e] == r[m]:
                c |= 1 << e
        cl[m] = c
    oracle_cl = [M.closure(m) for m in range(N)]
    w = next(((m,) for m in range(N) if oracle_cl[m] != cl[m]), None)
    add(AxiomResult("closure_matches_rank", w is None, w))
    w = next(((m,) for m in range(N) if m & ~cl[m]), None)
    add(AxiomResult("closure_extensive", w is None, w))
    w = None
    for m in range(N):
        for e in bits_of(ground & ~m):
            if cl[m] & ~cl[m | 1 << e]:
                w = (m, e)
                break
        if w:
            break
    add(AxiomResult("closure_monotone", w is None, w))
    w = next(((m,) for m in range(N) if cl[cl[m]] != cl[m]), None)
    add(AxiomResult("closure_idempotent", w is None, w))
    w = None
    for m in range(N):
        for e in bits_of(ground & ~cl[m]):
            gained = cl[m | 1 << e] & ~cl[m]
            for f in bits_of(gained & ~(1 << e)):
                if not cl[m | 1 << f] >> e & 1:
                    w = (m, e, f)
                    break
            if w:
                break
        if w:
            break
    add(AxiomResult("closure_exchange", w is None, w))

    # circuits: minimal dependent sets
    circ = [m for m in range(1, N) if not indep[m] and all(indep[m & ~(1 << e)] for e in bits_of(m))]
    w = None
    for a, b in combinations(circ, 2):
        if a & ~b == 0 or b & ~a == 0:
            w = (a, b)
            break
    add(AxiomResult("circuits_antichain", w is None, w))
    w = None
    for a, b in combinations(circ, 2):
        for e in bits_of(a & b):
            if indep[(a | b) & ~(1 << e)]:
                w = (a, b, e)
                break
        if w:
            break
    add(AxiomResult("circuit_elimination", w is None, w))
    return report
