"""Weighted matroid union, partition into independent sets, disjoint bases, intersection.

The main solver is augmenting-path matroid partition on the exchange digraph;
weights are handled by blowing every element up into parallel copies.  A
second, slow solver works by induction on the ground set
(split along a tight set, otherwise contract one element into one matroid) and
is used as an oracle on small instances.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .core.elements import ElementSet, bits_of, elems, full, mask_of, popcount, subsets_canonical
from .core.matroid import BlowUp, Dual, Matroid
from .errors import CapExceeded, UniverseMismatch


@dataclass
class WCovering:
    classes: list          # [(matroid index, mask)]
    weight: tuple          # weight[e] = number of classes containing e

    def coverage(self, n):
        cnt = [0] * n
        for _, V in self.classes:
            for e in bits_of(V):
                cnt[e] += 1
        return cnt

    def verify(self, Ms) -> bool:
        n = Ms[0].n
        if any(not Ms[i]._indep(V) for i, V in self.classes):
            return False
        return self.coverage(n) == list(self.weight)

    def color_of(self):
        """element -> sorted tuple of class positions containing it"""
        out = {}
        for pos, (_, V) in enumerate(self.classes):
            for e in bits_of(V):
                out.setdefault(e, []).append(pos)
        return {e: tuple(v) for e, v in out.items()}

    def as_lists(self):
        return [{"matroid": i, "set": list(elems(V))} for i, V in self.classes]


@dataclass
class UnionCertificate:
    covering: WCovering | None = None
    violating_set: int | None = None

    @property
    def ok(self) -> bool:
        return self.covering is not None

    def __bool__(self):
        return self.ok

    def violating(self, n):
        if self.violating_set is None:
            return None
        return ElementSet(self.violating_set, n) if n <= 64 else self.violating_set


def _check_ground(Ms):
    if not Ms:
        raise ValueError("need at least one matroid")
    n = Ms[0].n
    if any(M.n != n for M in Ms):
        raise UniverseMismatch("matroids do not share a ground set")
    return n


def _weights(w, n):
    if w is None:
        return [1] * n
    if isinstance(w, dict):
        wl = [0] * n
        for e, v in w.items():
            wl[int(e)] = int(v)
    elif isinstance(w, int):
        wl = [w] * n
    else:
        wl = [int(v) for v in w]
    if len(wl) != n or any(v < 0 for v in wl):
        raise ValueError("weights must be nonnegative, one per element")
    return wl


def union_deficiency(Ms, w, A: int) -> int:
    """Σ r_i(A) − w(A); negative means A violates the covering condition."""
    return sum(M._rank(A) for M in Ms) - sum(w[e] for e in bits_of(A))


# ---------------------------------------------------------------------------
# augmenting-path partition

class _Partition:
    """Disjoint classes I_i ∈ I(M_i), grown one element at a time by shortest augmenting paths."""

    def __init__(self, Ms):
        self.Ms = Ms
        self.k = len(Ms)
        self.I = [0] * self.k
        self.owner = {}

    def _bfs(self, sources):
        Ms, I, owner, k = self.Ms, self.I, self.owner, self.k
        parent = {s: None for s in sources}
        queue = deque(sorted(sources))
        while queue:
            x = queue.popleft()
            ox = owner.get(x)
            for i in range(k):
                if i != ox and Ms[i]._extends(I[i], x):
                    return x, i, parent
            bx = 1 << x
            for i in range(k):
                if i == ox:
                    continue
                for y in bits_of(I[i]):
                    if y in parent:
                        continue
                    if Ms[i]._indep((I[i] & ~(1 << y)) | bx):
                        parent[y] = x
                        queue.append(y)
        return None, None, parent

    def _apply(self, sink, cls, parent):
        path = [sink]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        path.reverse()                      # source ... sink
        old = [self.owner.get(x) for x in path]
        for t in range(len(path) - 1):
            c = old[t + 1]
            x, y = path[t], path[t + 1]
            self.I[c] = (self.I[c] & ~(1 << y)) | 1 << x
            self.owner[x] = c
        self.I[cls] |= 1 << sink
        self.owner[sink] = cls
        for c in set(o for o in old[1:] if o is not None) | {cls}:
            if not self.Ms[c]._indep(self.I[c]):
                raise RuntimeError("augmentation produced a dependent class; is every input a matroid?")

    def insert(self, s) -> int | None:
        """Try to cover s.  Returns None on success, else the set reachable from s."""
        sink, cls, parent = self._bfs([s])
        if sink is None:
            return mask_of(parent)
        self._apply(sink, cls, parent)
        return None

    def settle(self, uncovered):
        """Augment from any uncovered element until impossible; returns (uncovered, reachable)."""
        uncovered = set(uncovered)
        while True:
            if not uncovered:
                return uncovered, 0
            sink, cls, parent = self._bfs(sorted(uncovered))
            if sink is None:
                return uncovered, mask_of(parent)
            src = sink
            while parent[src] is not None:
                src = parent[src]
            self._apply(sink, cls, parent)
            uncovered.discard(src)


def _run_partition(Ms, elements, stop_on_failure=False):
    P = _Partition(Ms)
    uncovered = []
    for e in elements:
        reach = P.insert(e)
        if reach is not None:
            if stop_on_failure:
                return P, [e], reach
            uncovered.append(e)
    left, reach = P.settle(uncovered)
    return P, sorted(left), reach


def matroid_union(Ms, w=None, method="augment", stop_on_failure=False) -> UnionCertificate:
    """A w-covering V_1,…,V_k (V_i independent in M_i), or a set A with Σ r_i(A) < w(A)."""
    Ms = list(Ms)
    n = _check_ground(Ms)
    w = _weights(w, n)
    if method == "recursion":
        return union_by_recursion(Ms, w)
    if method != "augment":
        raise ValueError(f"unknown method {method!r}")
    if all(v <= 1 for v in w):
        P, left, reach = _run_partition(Ms, [e for e in range(n) if w[e]], stop_on_failure)
        if left:
            A = reach
        else:
            return UnionCertificate(covering=WCovering(list(enumerate(P.I)), tuple(w)))
    else:
        blown = [BlowUp(M, w, ground_cap=None) for M in Ms]
        origin = blown[0].origin
        P, left, reach = _run_partition(blown, range(len(origin)), stop_on_failure)
        if left:
            A = mask_of(origin[j] for j in bits_of(reach))
        else:
            classes = [(i, mask_of(origin[j] for j in bits_of(V))) for i, V in enumerate(P.I)]
            return UnionCertificate(covering=WCovering(classes, tuple(w)))
    if union_deficiency(Ms, w, A) >= 0:
        raise RuntimeError("violating set failed to re-verify")
    return UnionCertificate(violating_set=A)


def verify_certificate(Ms, w, cert: UnionCertificate) -> bool:
    n = _check_ground(Ms)
    w = _weights(w, n)
    if cert.covering is not None:
        return cert.violating_set is None and cert.covering.verify(Ms) and list(cert.covering.weight) == w
    return cert.violating_set is not None and union_deficiency(Ms, w, cert.violating_set) < 0


# ---------------------------------------------------------------------------
# brute-force solver following the inductive proof

def first_violator(Ms, w, within=None):
    """First A (ascending size, then lexicographic) with Σ r_i(A) < w(A), or None."""
    n = Ms[0].n
    m = full(n) if within is None else within
    for A in subsets_canonical(m, 1):
        if union_deficiency(Ms, w, A) < 0:
            return A
    return None


def union_by_recursion(Ms, w, cap=10):
    Ms = list(Ms)
    n = _check_ground(Ms)
    w = _weights(w, n)
    if n > cap:
        raise CapExceeded(f"proof-recursion solver limited to {cap} elements")
    bad = first_violator(Ms, w)
    if bad is not None:
        return UnionCertificate(violating_set=bad)
    k = len(Ms)
    V = _solve(full(n), [M._rank for M in Ms], list(w))
    return UnionCertificate(covering=WCovering(list(zip(range(k), V)), tuple(w)))


def _contracted(r, A):
    rA = r(A)
    return lambda X: r(X | A) - rA


def _solve(S, rks, w):
    k = len(rks)
    if S == 0 or all(w[e] == 0 for e in bits_of(S)):
        return [0] * k
    # a proper nonempty tight subset splits the problem
    if popcount(S) > 1:
        for A in subsets_canonical(S, 1, popcount(S) - 1):
            if sum(r(A) for r in rks) == sum(w[e] for e in bits_of(A)):
                left = _solve(A, rks, w)
                right = _solve(S & ~A, [_contracted(r, A) for r in rks], w)
                return [a | b for a, b in zip(left, right)]
    # otherwise contract one element into one matroid where it is not a loop
    e = next(x for x in bits_of(S) if w[x] > 0)
    i = next(j for j in range(k) if rks[j](1 << e) > 0)
    w2 = list(w)
    w2[e] -= 1
    rks2 = list(rks)
    rks2[i] = _contracted(rks[i], 1 << e)
    V = _solve(S, rks2, w2)
    V[i] |= 1 << e
    return V


# ---------------------------------------------------------------------------
# corollaries

def partition_into_independent(M: Matroid, k: int, stop_on_failure=False) -> UnionCertificate:
    if k < 1:
        raise ValueError("k must be at least 1")
    return matroid_union([M] * k, None, stop_on_failure=stop_on_failure)


def disjoint_bases(M: Matroid, k: int) -> UnionCertificate:
    """k pairwise disjoint bases, or A with k·r(A) + |E∖A| < k·r(E)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    r = M.full_rank
    P, left, reach = _run_partition([M] * k, range(M.n))
    if all(popcount(I) == r for I in P.I):
        cov = 0
        for I in P.I:
            cov |= I
        weight = tuple(1 if cov >> e & 1 else 0 for e in range(M.n))
        return UnionCertificate(covering=WCovering(list(enumerate(P.I)), weight))
    A = reach
    if k * M._rank(A) + popcount(M.ground & ~A) >= k * r:
        raise RuntimeError("disjoint-bases certificate failed to re-verify")
    return UnionCertificate(violating_set=A)


def max_common_independent(M1: Matroid, M2: Matroid):
    """Largest common independent set I and A with |I| = r1(A) + r2(E∖A).

    Partition E into I1 ∈ I(M1) and I2 ∈ I(M2*) as well as possible; then
    I1 minus a dual basis extending I2 is independent in both and optimal.
    """
    n = _check_ground([M1, M2])
    D = Dual(M2)
    P, left, reach = _run_partition([M1, D], range(n))
    I1, I2 = P.I
    Bstar = I2
    for e in list(bits_of(M1.ground & ~I1 & ~I2)) + list(bits_of(I1)):
        if D._extends(Bstar, e):
            Bstar |= 1 << e
    I = I1 & ~Bstar
    A = reach
    if not (M1._indep(I) and M2._indep(I)):
        raise RuntimeError("common independent set failed to re-verify")
    if popcount(I) != M1._rank(A) + M2._rank(M1.ground & ~A):
        raise RuntimeError("min-max certificate failed to re-verify")
    return I, A


def max_common_independent_brute(M1, M2):
    n = _check_ground([M1, M2])
    for size in range(n, -1, -1):
        for c in combinations(range(n), size):
            I = mask_of(c)
            if M1._indep(I) and M2._indep(I):
                return I
    return 0


def min_max_value(M1, M2):
    n = M1.n
    g = full(n)
    return min(M1._rank(A) + M2._rank(g & ~A) for A in range(1 << n))
