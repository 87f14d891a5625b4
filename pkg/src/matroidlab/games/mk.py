"""The transversal lower-bound matroids M_k and Bob's block-mimicking strategy on them.

Layout for M_k: C = {c_{i,j} : 1 ≤ i ≤ k, 1 ≤ j ≤ 2k−1} occupies elements
0..k(2k−1)−1 with c_{i,j} at (i−1)(2k−1)+(j−1).  Block D_m (1 ≤ m ≤ 3k(2k−1))
holds d_{1,m}..d_{k,m} right after C, in order.  The family is D_1, D_2, …
followed by 2k−1 copies of the whole ground set.
"""
from __future__ import annotations

import random

from ..core.elements import bits_of, elems, mask_of, popcount
from ..core.matroid import Transversal
from ..errors import NoLegalMove
from .state import ALICE, GameState


class MkLayout:
    def __init__(self, k):
        if k < 3:
            raise ValueError("M_k is defined for k ≥ 3")
        self.k = k
        self.c_size = k * (2 * k - 1)
        self.blocks = 3 * k * (2 * k - 1)
        self.n = self.c_size + self.blocks * k
        self.C = (1 << self.c_size) - 1

    def c(self, i, j):
        return (i - 1) * (2 * self.k - 1) + (j - 1)

    def d(self, i, m):
        return self.c_size + (m - 1) * self.k + (i - 1)

    def block(self, m):
        start = self.c_size + (m - 1) * self.k
        return ((1 << self.k) - 1) << start

    def block_of(self, e):
        """Block number of a D element, or 0 for elements of C."""
        if e < self.c_size:
            return 0
        return (e - self.c_size) // self.k + 1

    def family(self):
        fam = [elems(self.block(m)) for m in range(1, self.blocks + 1)]
        everything = list(range(self.n))
        return fam + [everything] * (2 * self.k - 1)

    def standard_partition(self):
        """V_i = {c_{i,1..2k−1}} ∪ {d_{i,1..3k(2k−1)}}: k independent sets covering E."""
        return [mask_of([self.c(i, j) for j in range(1, 2 * self.k)] +
                        [self.d(i, m) for m in range(1, self.blocks + 1)])
                for i in range(1, self.k + 1)]


def construct_Mk(k: int) -> Transversal:
    L = MkLayout(k)
    M = Transversal(L.n, L.family(), ground_cap=None, spec={"kind": "mk", "k": k})
    M.layout = L
    return M


def _layout(M, k):
    L = getattr(M, "layout", None)
    return L if L is not None and L.k == k else MkLayout(k)


def group(L, h, i):
    """D_i ∪ D_{i+h} ∪ D_{i+2h} as a list of block numbers."""
    return [i, i + h, i + 2 * h]


def bob_mk_move(state: GameState, k: int):
    """Bob's answer to Alice's last move on M_k with h ≤ 2k−2 colors.

    Alice colored c ∈ C with i, or anything in D_i ∪ D_{i+h} ∪ D_{i+2h}: Bob
    colors another element of that group with i, choosing first among blocks
    already holding color i (so as few blocks as possible carry i), least
    element first.  Any other Alice move gets a harmless reply outside C.
    """
    h = state.k
    if h > 2 * k - 2:
        raise ValueError(f"the strategy needs at most {2 * k - 2} colors, got {h}")
    L = _layout(state.matroids[0], k)
    unc = state.uncolored
    target = None
    last = state.last_move
    if last is not None and last[0] == ALICE:
        _, e, col = last
        m = L.block_of(e)
        if m == 0:
            target = col
        elif m <= 3 * h:
            target = (m - 1) % h + 1
    if target is not None:
        U = state.classes[target - 1]
        cands = []
        for m in group(L, h, target):
            B = L.block(m)
            fresh = 0 if U & B else 1
            cands.extend((fresh, y) for y in bits_of(B & unc))
        for _, y in sorted(cands):
            if state.legal(y, target):
                return y, target
    # harmless replies: ungrouped blocks, then anything outside C, then anything
    outside = L.C | mask_of(e for m in range(1, 3 * h + 1) for e in bits_of(L.block(m)))
    for region in (unc & ~outside, unc & ~L.C, unc):
        for y in bits_of(region):
            for c in range(1, h + 1):
                if state.legal(y, c):
                    return y, c
    raise NoLegalMove("Bob has no legal move")


def mk_counters(state: GameState, k: int):
    """Per color i: c_i in C, and over the group of D_i: d_i colored i, f_i other colors, ε_i."""
    h = state.k
    L = _layout(state.matroids[0], k)
    out = {}
    for i in range(1, h + 1):
        U = state.classes[i - 1]
        G = 0
        eps = 0
        for m in group(L, h, i):
            B = L.block(m)
            G |= B
            eps += bool(U & B)
        colored = state.colored_mask
        d = popcount(U & G)
        out[i] = {"c": popcount(U & L.C), "d": d, "f": popcount(colored & G) - d, "eps": eps}
    return out


def spade_holds(state, k):
    return all(v["d"] >= v["c"] + v["f"] or v["d"] >= k + 2 for v in mk_counters(state, k).values())


def greedy_alice(rng=None):
    """Alice colors C as fast as she can: a C element (random if rng given) with its least legal color."""
    def move(state):
        L = _layout(state.matroids[0], _k_of(state))
        pool = list(bits_of(state.uncolored & L.C))
        if rng is not None:
            rng.shuffle(pool)
        for e in pool:
            for c in range(1, state.k + 1):
                if state.legal(e, c):
                    return e, c
        return next(state.legal_moves(), None)
    return move


def random_alice(rng):
    """A uniformly random element that has some legal color, with a random legal color."""
    def move(state):
        pool = list(bits_of(state.uncolored))
        rng.shuffle(pool)
        colors = list(range(1, state.k + 1))
        for e in pool:
            rng.shuffle(colors)
            for c in colors:
                if state.legal(e, c):
                    return e, c
        return None
    return move


def _k_of(state):
    L = getattr(state.matroids[0], "layout", None)
    if L is None:
        raise ValueError("state is not a play on M_k")
    return L.k


def play_mk(k=3, h=None, alice="greedy", seed=0, M=None):
    """One game on M_k with h colors, Alice first, Bob using bob_mk_move.

    Returns (winner, state, counters).
    """
    from .coloring import play_game
    M = construct_Mk(k) if M is None else M
    h = 2 * k - 2 if h is None else h
    rng = random.Random(seed)
    strat = greedy_alice(rng) if alice == "greedy" else random_alice(rng)
    winner, state = play_game([M] * h, strat, lambda s: bob_mk_move(s, k))
    return winner, state, mk_counters(state, k)
