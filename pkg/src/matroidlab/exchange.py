"""Symmetric exchanges between sequences of bases, strong base orderability and exchange paths."""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, permutations, product

import numpy as np
from scipy.optimize import linear_sum_assignment

from .core.elements import as_mask, bits_of, elems, popcount
from .errors import CapExceeded


def _basis_check(M, B):
    return popcount(B) == M.full_rank and M._indep(B)


class BaseSequence(tuple):
    """An ordered tuple of bases (bitmasks) of one matroid."""

    def __new__(cls, M, bases):
        bs = tuple(as_mask(B, M.n) for B in bases)
        for B in bs:
            if not _basis_check(M, B):
                raise ValueError(f"{elems(B)} is not a basis")
        return super().__new__(cls, bs)


@dataclass(frozen=True)
class ExchangeMove:
    i: int
    j: int
    e: int          # leaves B_i, enters B_j
    f: int          # leaves B_j, enters B_i

    def apply(self, M, seq):
        seq = list(seq)
        Bi, Bj = seq[self.i], seq[self.j]
        if self.i == self.j or not (Bi >> self.e & 1) or not (Bj >> self.f & 1):
            raise ValueError(f"move {self} does not fit the sequence")
        Ni = (Bi & ~(1 << self.e)) | 1 << self.f
        Nj = (Bj & ~(1 << self.f)) | 1 << self.e
        if not (_basis_check(M, Ni) and _basis_check(M, Nj)):
            raise ValueError(f"move {self} does not give two bases")
        seq[self.i], seq[self.j] = Ni, Nj
        return seq


def _union(seq):
    c = Counter()
    for B in seq:
        c.update(bits_of(B))
    return c


def is_compatible(X, Y) -> bool:
    if len(X) != len(Y):
        raise ValueError("sequences have different lengths")
    return _union(X) == _union(Y)


def overlap(X, Y) -> int:
    """max over permutations π of Σ |B_i ∩ D_π(i)|."""
    if len(X) != len(Y):
        raise ValueError("sequences have different lengths")
    n = len(X)
    if n == 0:
        return 0
    if n <= 6:
        return max(sum(popcount(X[i] & Y[p[i]]) for i in range(n)) for p in permutations(range(n)))
    W = np.array([[popcount(a & b) for b in Y] for a in X])
    r, c = linear_sum_assignment(W, maximize=True)
    return int(W[r, c].sum())


def best_matching(X, Y):
    """A permutation p realizing the overlap (D_p(i) paired with B_i)."""
    n = len(X)
    W = np.array([[popcount(a & b) for b in Y] for a in X])
    r, c = linear_sum_assignment(W, maximize=True)
    p = [0] * n
    for a, b in zip(r, c):
        p[a] = int(b)
    return p


# ---------------------------------------------------------------------------
# exchange graphs on sequences of bases

def _pair_moves(M, basis_set, Bi, Bj, multiple):
    """Pairs reachable from (Bi, Bj) by one symmetric exchange (or one multiple exchange)."""
    out = []
    P, Q = elems(Bi & ~Bj), elems(Bj & ~Bi)
    if not multiple:
        for e in P:
            for f in Q:
                Ni = (Bi & ~(1 << e)) | 1 << f
                Nj = (Bj & ~(1 << f)) | 1 << e
                if Ni in basis_set and Nj in basis_set:
                    out.append((Ni, Nj))
        return out
    common = Bi & Bj
    for size in range(1, len(P) + 1):
        for A in combinations(P, size):
            am = sum(1 << x for x in A)
            for A2 in combinations(Q, size):
                a2 = sum(1 << x for x in A2)
                Ni = (Bi & ~am) | a2
                Nj = (Bj & ~a2) | am
                if Ni in basis_set and Nj in basis_set:
                    out.append((Ni, Nj))
    return out


class _DSU:
    def __init__(self):
        self.p = {}

    def find(self, x):
        p = self.p
        p.setdefault(x, x)
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            if b < a:
                a, b = b, a
            self.p[b] = a


def te_verify(M, n: int, relation="r2", cap=10 ** 6):
    """Is every compatibility class of length-n base sequences connected under the relation?

    r1: ordered sequences, single symmetric exchanges.  r2: multisets (order
    forgotten), single symmetric exchanges.  r3: multisets, multiple symmetric
    exchanges on a pair.  Returns (ok, None) or (False, (X, Y)), the least
    disconnected pair.
    """
    if relation not in ("r1", "r2", "r3"):
        raise ValueError(f"unknown relation {relation!r}")
    bases = sorted(M.bases())
    bset = set(bases)
    if relation == "r1":
        count = len(bases) ** n
        verts = product(bases, repeat=n)
    else:
        from math import comb
        count = comb(len(bases) + n - 1, n)
        verts = combinations_with_replacement(bases, n)
    if count > cap:
        raise CapExceeded(f"{count} sequences exceed the cap {cap}")
    dsu = _DSU()
    classes = {}
    multiple = relation == "r3"
    moves_cache = {}
    for v in verts:
        classes.setdefault(tuple(sorted(_union(v).items())), []).append(v)
        dsu.find(v)
        for i, j in combinations(range(n), 2):
            key = (v[i], v[j])
            if key not in moves_cache:
                moves_cache[key] = _pair_moves(M, bset, v[i], v[j], multiple)
            for Ni, Nj in moves_cache[key]:
                w = list(v)
                w[i], w[j] = Ni, Nj
                w = tuple(w) if relation == "r1" else tuple(sorted(w))
                dsu.union(v, w)
    worst = None
    for members in classes.values():
        roots = {}
        for v in members:
            roots.setdefault(dsu.find(v), v)
        if len(roots) > 1:
            reps = sorted(roots.values())
            pair = (reps[0], reps[1])
            if worst is None or pair < worst:
                worst = pair
    return worst is None, worst


# ---------------------------------------------------------------------------
# strong base orderability

def _sbo_bijection(M, B1, B2):
    """π: B1∖B2 → B2∖B1 with B1 − A + π(A) a basis for all A, by backtracking; None if none exists."""
    P, Q = elems(B1 & ~B2), elems(B2 & ~B1)
    k = len(P)
    assign = [None] * k
    used = set()

    def ok_with(t):
        # subsets containing position t, other positions < t
        for size in range(t + 1):
            for S in combinations(range(t), size):
                A = S + (t,)
                X = B1
                for s in A:
                    X = (X & ~(1 << P[s])) | 1 << assign[s]
                if not _basis_check(M, X):
                    return False
        return True

    def rec(t):
        if t == k:
            return True
        for q in Q:
            if q in used:
                continue
            assign[t] = q
            if ok_with(t):
                used.add(q)
                if rec(t + 1):
                    return True
                used.discard(q)
        assign[t] = None
        return False

    if not rec(0):
        return None
    pi = {x: x for x in bits_of(B1 & B2)}
    pi.update(zip(P, assign))
    return pi


def _is_sbo_pair(M, B1, B2, pi):
    P = elems(B1 & ~B2)
    for size in range(len(P) + 1):
        for A in combinations(P, size):
            X = B1
            for a in A:
                X = (X & ~(1 << a)) | 1 << pi[a]
            if not _basis_check(M, X):
                return False
    return True


@dataclass
class SBOCertificate:
    bijections: dict        # (B1, B2) with B1 < B2 -> {b: π(b)}

    def pi(self, B1, B2):
        if B1 == B2:
            return {x: x for x in bits_of(B1)}
        if B1 < B2:
            return self.bijections[(B1, B2)]
        fwd = self.bijections[(B2, B1)]
        return {v: k for k, v in fwd.items()}

    def verify(self, M) -> bool:
        return all(_is_sbo_pair(M, a, b, pi) for (a, b), pi in self.bijections.items())


def is_strongly_base_orderable(M, max_diff=7):
    """(True, certificate) or (False, (B1, B2)) for the first base pair without a good bijection."""
    bases = sorted(M.bases())
    cert = {}
    for B1, B2 in combinations(bases, 2):
        if popcount(B1 & ~B2) > max_diff:
            raise CapExceeded(f"base pair differs in more than {max_diff} elements")
        pi = _sbo_bijection(M, B1, B2)
        if pi is None:
            return False, (B1, B2)
        cert[(B1, B2)] = pi
    return True, SBOCertificate(cert)


def sbo_pair_brute(M, B1, B2) -> bool:
    """Some bijection B1∖B2 → B2∖B1 works; tries every permutation."""
    P, Q = elems(B1 & ~B2), elems(B2 & ~B1)
    for perm in permutations(Q):
        pi = {x: x for x in bits_of(B1 & B2)}
        pi.update(zip(P, perm))
        if _is_sbo_pair(M, B1, B2, pi):
            return True
    return False


def is_sbo_brute(M):
    bases = sorted(M.bases())
    return all(sbo_pair_brute(M, a, b) for a, b in combinations(bases, 2))


# ---------------------------------------------------------------------------
# exchange paths for strongly base orderable matroids

def _split_pair(M, B1, B2, pi, side):
    """Swap the pairs (b, π(b)) with b ∈ B1∖B2 on the T side, one at a time; returns moves as (e, f)."""
    steps = []
    for b in elems(B1 & ~B2):
        if side[b] == 1:
            steps.append((b, pi[b]))
    return steps


def _two_color(edges, vertices):
    adj = {v: [] for v in vertices}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    side = {}
    for s in sorted(vertices):
        if s in side:
            continue
        side[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for y in adj[x]:
                if y not in side:
                    side[y] = 1 - side[x]
                    q.append(y)
                elif side[y] == side[x]:
                    raise RuntimeError("exchange graph is not bipartite")
    return side


def sbo_exchange_path(M, X, Y, cert: SBOCertificate, levels=None):
    """Single symmetric exchanges taking X to a permutation of Y.

    Each round pairs X with Y by a maximum-overlap permutation, picks e in
    B_i∖D_i and the j with e ∈ D_j∖B_j, two-colors the union of the matchings
    π_B: B_i → B_j and π_D: D_i → D_j into S and T, and moves both pairs to
    their S/T splits.  The X-side swaps are emitted directly; the Y-side swaps
    are undone at the end in reverse order.  ``levels`` collects the overlap
    after every round.
    """
    X, Y = list(X), list(Y)
    if len(X) != len(Y):
        raise ValueError("sequences have different lengths")
    if not is_compatible(X, Y):
        raise ValueError("sequences are not compatible")
    n = len(X)
    r = M.full_rank
    cur, tgt = list(X), list(Y)
    moves = []
    undo = []                        # (before pair, after pair) on the Y side
    last = overlap(cur, tgt)
    if levels is not None:
        levels.append(last)
    while last < r * n:
        p = best_matching(cur, tgt)
        i = next(t for t in range(n) if cur[t] & ~tgt[p[t]])
        e = (cur[i] & ~tgt[p[i]] & -(cur[i] & ~tgt[p[i]])).bit_length() - 1
        j = next(t for t in range(n) if t != i and tgt[p[t]] >> e & 1 and not cur[t] >> e & 1)
        B1, B2, D1, D2 = cur[i], cur[j], tgt[p[i]], tgt[p[j]]
        piB, piD = cert.pi(B1, B2), cert.pi(D1, D2)
        edges = [(b, piB[b]) for b in bits_of(B1 & ~B2)] + [(d, piD[d]) for d in bits_of(D1 & ~D2)]
        verts = set(bits_of((B1 ^ B2) | (D1 ^ D2)))
        side = _two_color(edges, verts)
        for b, f in _split_pair(M, B1, B2, piB, side):
            mv = ExchangeMove(i, j, b, f)
            cur = mv.apply(M, cur)
            moves.append(mv)
        a, c = p[i], p[j]
        for d, g in _split_pair(M, D1, D2, piD, side):
            before = (tgt[a], tgt[c])
            tgt = ExchangeMove(a, c, d, g).apply(M, tgt)
            undo.append((before, (tgt[a], tgt[c]), d, g))
        now = overlap(cur, tgt)
        if now <= last:
            raise RuntimeError("overlap failed to increase")
        last = now
        if levels is not None:
            levels.append(now)
    # cur is a permutation of tgt; walk the Y-side swaps back
    for before, after, d, g in reversed(undo):
        pa = next(t for t in range(n) if cur[t] == after[0])
        pc = next(t for t in range(n) if t != pa and cur[t] == after[1])
        mv = ExchangeMove(pa, pc, g, d)
        cur = mv.apply(M, cur)
        if (cur[pa], cur[pc]) != before:
            raise RuntimeError("undo step did not restore the pair")
        moves.append(mv)
    if Counter(cur) != Counter(Y):
        raise RuntimeError("path does not end at a permutation of the target")
    return moves


def apply_moves(M, X, moves):
    seq = list(X)
    for mv in moves:
        seq = mv.apply(M, seq)
    return seq


def exchange_distance(M, X, Y, relation="r2", cap=10 ** 6):
    """Fewest single symmetric exchanges from X to a permutation of Y (r2), by BFS; None if unreachable."""
    bset = set(M.bases())
    norm = (lambda s: tuple(sorted(s))) if relation == "r2" else tuple
    start, goal = norm(X), norm(Y)
    dist = {start: 0}
    q = deque([start])
    while q:
        v = q.popleft()
        if v == goal:
            return dist[v]
        if len(dist) > cap:
            raise CapExceeded("BFS exceeded the state cap")
        for i, j in combinations(range(len(v)), 2):
            for Ni, Nj in _pair_moves(M, bset, v[i], v[j], False):
                w = list(v)
                w[i], w[j] = Ni, Nj
                w = norm(w)
                if w not in dist:
                    dist[w] = dist[v] + 1
                    q.append(w)
    return None


# ---------------------------------------------------------------------------
# B-degree and balanced bases

def b_degree(B, Bp) -> int:
    return popcount(Bp & ~B)


def balanced_reduction(M, B, Bp):
    """Bases B_1..B_d, each one exchange away from B, with B_1+…+B_d = (d−1)·B + B′ as multisets."""
    B, Bp = as_mask(B, M.n), as_mask(Bp, M.n)
    if not (_basis_check(M, B) and _basis_check(M, Bp)):
        raise ValueError("inputs must be bases")
    out = []
    cur = Bp
    while b_degree(B, cur) > 1:
        e = (cur & ~B & -(cur & ~B)).bit_length() - 1
        for f in bits_of(B & ~cur):
            B1 = (B & ~(1 << f)) | 1 << e
            B2 = (cur & ~(1 << e)) | 1 << f
            if _basis_check(M, B1) and _basis_check(M, B2):
                out.append(B1)
                cur = B2
                break
        else:
            raise RuntimeError("no symmetric exchange found; is the oracle a matroid?")
    if b_degree(B, cur) == 1:
        out.append(cur)
    return out


# ---------------------------------------------------------------------------
# Blasiak's graphs

def _partitions_into_bases(M, k, bases, cap):
    """All sets of k pairwise disjoint bases covering E, as sorted tuples."""
    ground = M.ground
    out = []

    def rec(left, chosen, start):
        if len(out) > cap:
            raise CapExceeded("too many base partitions")
        if left == 0:
            if len(chosen) == k:
                out.append(tuple(chosen))
            return
        low = left & -left
        for idx in range(len(bases)):
            B = bases[idx]
            if B & low and B & ~left == 0:
                rec(left & ~B, chosen + [B], idx)

    rec(ground, [], 0)
    return sorted({tuple(sorted(p)) for p in out})


def blasiak_graph(M, k: int, cap=10 ** 5):
    """Component structure of 𝔅_k(M), with a disconnection witness."""
    from .union import disjoint_bases
    if k < 2:
        raise ValueError("k must be at least 2")
    if M.n != k * M.full_rank or not disjoint_bases(M, k).ok:
        raise ValueError(f"ground set is not a union of {k} disjoint bases")
    bases = sorted(M.bases())
    verts = _partitions_into_bases(M, k, bases, cap)
    index = {v: t for t, v in enumerate(verts)}
    dsu = _DSU()
    for t in range(len(verts)):
        dsu.find(t)
    if k == 2:
        bset = set(bases)
        for v in verts:
            for Ni, Nj in _pair_moves(M, bset, v[0], v[1], False):
                w = tuple(sorted((Ni, Nj)))
                dsu.union(index[v], index[w])
    else:
        by_basis = {}
        for t, v in enumerate(verts):
            for B in v:
                by_basis.setdefault(B, []).append(t)
        for ts in by_basis.values():
            for t in ts[1:]:
                dsu.union(ts[0], t)
    comps = {}
    for t in range(len(verts)):
        comps.setdefault(dsu.find(t), []).append(t)
    witness = None
    if len(comps) > 1:
        roots = sorted(min(c) for c in comps.values())
        witness = (verts[roots[0]], verts[roots[1]])
    return {"vertices": len(verts), "components": len(comps), "connected": len(comps) <= 1,
            "witness": witness}
