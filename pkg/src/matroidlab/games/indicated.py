"""Indicated coloring: Alice points at an element, Bob picks any proper color for it."""
from __future__ import annotations

from ..core.elements import bits_of, elems, popcount, subsets_canonical
from ..errors import CapExceeded, ProtocolViolation
from ..union import WCovering


class IndicatedAlice:
    """Alice's strategy on M_1..M_k, given a partition E = V_1 ∪ … ∪ V_k with V_i independent in M_i.

    The current game is on the uncolored part S of the innermost open region,
    with ranks ρ_i(X) = r_i(X ∪ U_i) − r_i(U_i).  If some proper nonempty
    X ⊊ S has Σ ρ_i(X) = |X|, the least such X becomes a nested region played
    out first; otherwise Alice indicates the least element of S.
    """

    def __init__(self, M_list, partition: WCovering, max_region=16):
        self.Ms = list(M_list)
        self.k = len(self.Ms)
        self.n = self.Ms[0].n
        ground = self.Ms[0].ground
        cover = 0
        for i, V in partition.classes:
            if not self.Ms[i]._indep(V) or V & cover:
                raise ValueError("partition classes must be disjoint and independent")
            cover |= V
        if cover != ground:
            raise ValueError("partition does not cover the ground set")
        self.U = [0] * self.k
        self.regions = [ground]
        self.pending = None
        self.max_region = max_region

    def _rho(self, X):
        return sum(M._rank(X | U) - M._rank(U) for M, U in zip(self.Ms, self.U))

    def _uncolored(self):
        c = 0
        for U in self.U:
            c |= U
        return self.Ms[0].ground & ~c

    def next_indication(self, state=None):
        if self.pending is not None:
            return self.pending
        free = self._uncolored()
        while self.regions and not self.regions[-1] & free:
            self.regions.pop()
        if not self.regions:
            return None
        S = self.regions[-1] & free
        size = popcount(S)
        if size > self.max_region:
            raise CapExceeded(f"tight-set search limited to regions of {self.max_region} elements")
        if size > 1:
            for X in subsets_canonical(S, 1, size - 1):
                if self._rho(X) == popcount(X):
                    self.regions.append(X)
                    S = X
                    break
        self.pending = S & -S
        self.pending = self.pending.bit_length() - 1
        return self.pending

    def on_bob_color(self, state, element, color):
        if self.pending is None or element != self.pending:
            raise ProtocolViolation(f"element {element} was not the indicated one")
        if not 1 <= color <= self.k:
            raise ProtocolViolation(f"color {color} is not in 1..{self.k}")
        if not self.Ms[color - 1]._extends(self.U[color - 1], element):
            raise ProtocolViolation(f"color {color} on element {element} is not proper")
        self.U[color - 1] |= 1 << element
        self.pending = None

    def legal_colors(self, e):
        return [c for c in range(1, self.k + 1) if self.Ms[c - 1]._extends(self.U[c - 1], e)]

    def copy(self):
        s = object.__new__(IndicatedAlice)
        s.__dict__.update(self.__dict__)
        s.U = list(self.U)
        s.regions = list(self.regions)
        return s

    def done(self):
        return self._uncolored() == 0


def indicated_alice(M_list, partition):
    return IndicatedAlice(M_list, partition)


def indicated_exhaustive(M_list, partition, max_ground=7, stats=None):
    """Alice's strategy against every Bob coloring; returns (won, losing line)."""
    if M_list[0].n > max_ground:
        raise CapExceeded(f"indicated game tree limited to {max_ground} elements")
    memo = {}

    def rec(a, line):
        if a.done():
            return None
        key = (tuple(a.U), tuple(a.regions))
        if key in memo:
            return memo[key]
        e = a.next_indication()
        cols = a.legal_colors(e)
        res = None
        if not cols:
            res = line + [(e, None)]
        for c in cols:
            b = a.copy()
            b.on_bob_color(None, e, c)
            bad = rec(b, line + [(e, c)])
            if bad is not None:
                res = bad
                break
        memo[key] = res
        return res

    bad = rec(indicated_alice(M_list, partition), [])
    if stats is not None:
        stats["states"] = len(memo)
    return bad is None, bad


def indicated_chromatic_number(M, max_ground=7):
    """Least k for which the indicated strategy wins on k copies of M, starting from χ(M)."""
    from ..chroma import chromatic_number
    from ..union import partition_into_independent
    k = chromatic_number(M)
    while True:
        cert = partition_into_independent(M, k)
        if cert.ok and indicated_exhaustive([M] * k, cert.covering, max_ground)[0]:
            return k
        k += 1
