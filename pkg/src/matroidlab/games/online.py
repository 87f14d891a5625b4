"""On-line list coloring: Bob reveals color r on a set each round, Alice colors an independent part of it."""
from __future__ import annotations

from itertools import combinations

from ..chroma import canonical_lists, color_from_lists, decide_w_colorable, multiple_independent_exchange
from ..core.elements import ElementSet, as_mask, bits_of, elems, popcount
from ..errors import CapExceeded, InfeasibleLists, ProtocolViolation
from ..union import _weights


class OnlineState:
    """Play state plus the maintained classes I_1..I_K.

    Class I_p is the p-th color still to come for every element it holds;
    together they form a remaining_w-coloring from the lists {1..remaining_ℓ(e)}.
    """

    def __init__(self, M, ell, w=None):
        from ..chroma import _sizes
        self.M = M
        n = M.n
        self.remaining_l = _sizes(ell, n)
        self.remaining_w = _weights(w, n)
        self.K = max(self.remaining_l, default=0)
        lists = canonical_lists(self.remaining_l)
        try:
            classes = color_from_lists(M, lists, self.remaining_w).color_classes()
        except InfeasibleLists as exc:
            raise InfeasibleLists(f"not w-colorable from lists of these sizes: {exc}",
                                  exc.violating_set) from None
        self.classes = [classes.get(p, 0) for p in range(1, self.K + 1)]
        self.lists_revealed = {e: set() for e in range(n)}
        self.colors = {e: set() for e in range(n)}
        self.round = 0
        self.rounds = []            # (revealed mask, colored mask)

    @property
    def current_wcoloring(self):
        return list(self.classes)

    def eligible(self) -> int:
        return sum(1 << e for e in range(self.M.n) if self.remaining_l[e] > 0)

    def over(self) -> bool:
        return self.eligible() == 0

    def won(self) -> bool:
        return self.over() and not any(self.remaining_w)

    def invariant_holds(self) -> bool:
        n = self.M.n
        cnt = [0] * n
        for p, I in enumerate(self.classes, start=1):
            if not self.M._indep(I):
                return False
            for e in bits_of(I):
                if p > self.remaining_l[e]:
                    return False
                cnt[e] += 1
        return cnt == self.remaining_w

    def copy(self):
        s = object.__new__(OnlineState)
        s.M = self.M
        s.remaining_l = list(self.remaining_l)
        s.remaining_w = list(self.remaining_w)
        s.K = self.K
        s.classes = list(self.classes)
        s.lists_revealed = {e: set(v) for e, v in self.lists_revealed.items()}
        s.colors = {e: set(v) for e, v in self.colors.items()}
        s.round = self.round
        s.rounds = list(self.rounds)
        return s

    def key(self):
        return tuple(self.classes), tuple(self.remaining_l), tuple(self.remaining_w)


def online_alice_respond(state: OnlineState, bob_set, cache=None):
    """The independent subset of Bob's set Alice colors with this round's color.

    X_1 = V ∩ I_1 is pushed down the chain: an exchange Y_{i+1} ⊆ I_{i+1} with
    (I''_i ∖ X_i) ∪ Y_{i+1} and (I_{i+1} ∖ Y_{i+1}) ∪ X_i independent, and
    X_{i+1} = V ∩ I''_{i+1}.  Alice colors X_K; the classes I'_i (I'_K being
    I''_K ∖ X_K) color the rest from the lists shortened on V.  ``cache``
    (a dict) memoizes exchanges across calls on the same matroid.
    """
    M = state.M
    V = as_mask(bob_set, M.n)
    if V == 0:
        raise ProtocolViolation("Bob must reveal a nonempty set")
    if V & ~state.eligible():
        raise ProtocolViolation(f"elements {elems(V & ~state.eligible())} already have full lists")
    I = state.classes
    K = len(I)
    new = [0] * K
    cur = I[0]                      # I''_1 = I_1
    X = V & cur
    for i in range(K - 1):
        if cache is None:
            Y = multiple_independent_exchange(M, cur, I[i + 1], X)
        else:
            ck = (cur, I[i + 1], X)
            Y = cache.get(ck)
            if Y is None:
                Y = cache[ck] = multiple_independent_exchange(M, cur, I[i + 1], X)
        new[i] = (cur & ~X) | Y
        cur = (I[i + 1] & ~Y) | X
        X = V & cur
    new[K - 1] = cur & ~X
    chosen = X
    if not M._indep(chosen):
        raise RuntimeError("chosen set is dependent")
    state.round += 1
    for e in bits_of(V):
        state.lists_revealed[e].add(state.round)
        state.remaining_l[e] -= 1
    for e in bits_of(chosen):
        state.remaining_w[e] -= 1
        state.colors[e].add(state.round)
    state.classes = new
    state.rounds.append((V, chosen))
    if not state.invariant_holds():
        raise RuntimeError("maintained coloring broke after the exchange chain")
    return ElementSet(chosen, M.n) if M.n <= 64 else chosen


def final_coloring_ok(state: OnlineState, w=None) -> bool:
    """Every element got its weight, every color class is independent, colors come from revealed lists."""
    M = state.M
    if not state.won():
        return False
    if w is not None:
        w = _weights(w, M.n)
        if any(len(state.colors[e]) != w[e] for e in range(M.n)):
            return False
    for V, chosen in state.rounds:
        if chosen & ~V or not M._indep(chosen):
            return False
    return all(state.colors[e] <= state.lists_revealed[e] for e in range(M.n))


def online_exhaustive(M, ell, w=None, max_ground=5, stats=None):
    """Alice's chain strategy against every Bob reveal sequence; returns (won, losing reveals)."""
    if M.n > max_ground:
        raise CapExceeded(f"reveal tree limited to {max_ground} elements")
    root = OnlineState(M, ell, w)
    memo = {}
    exchanges = {}

    def rec(s):
        if s.over():
            return None if s.won() and final_coloring_ok(s) else [r for r, _ in s.rounds]
        key = s.key()
        if key in memo:
            return memo[key]
        res = None
        elig = list(bits_of(s.eligible()))
        for size in range(1, len(elig) + 1):
            for c in combinations(elig, size):
                t = s.copy()
                online_alice_respond(t, sum(1 << e for e in c), exchanges)
                bad = rec(t)
                if bad is not None:
                    res = bad
                    break
            if res is not None:
                break
        memo[key] = res
        return res

    bad = rec(root)
    if stats is not None:
        stats["states"] = len(memo)
    return bad is None, bad


def residual_feasible(state: OnlineState) -> bool:
    return decide_w_colorable(state.M, state.remaining_l, state.remaining_w).ok
