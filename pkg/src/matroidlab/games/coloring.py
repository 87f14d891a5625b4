"""The alternating coloring game: Alice's 2-covering strategy and exhaustive game search."""
from __future__ import annotations

from ..core.elements import bits_of, elems, popcount
from ..errors import CapExceeded, NoLegalMove, ProtocolViolation
from ..union import WCovering, matroid_union, partition_into_independent
from .state import ALICE, BOB, GameState


def two_covering(matroids) -> WCovering:
    """Sets V_1..V_d, V_i independent in M_i, covering every element exactly twice."""
    cert = matroid_union(matroids, 2)
    if not cert.ok:
        raise ValueError(f"no 2-covering exists; violating set {elems(cert.violating_set)}")
    return cert.covering


def doubled_partition(M, k=None) -> WCovering:
    """A partition into k independent sets, each used twice: a 2-covering for 2k colors."""
    from ..chroma import chromatic_number
    k = chromatic_number(M) if k is None else k
    cert = partition_into_independent(M, k)
    if not cert.ok:
        raise ValueError(f"M has no partition into {k} independent sets")
    parts = [V for _, V in cert.covering.classes]
    classes = list(enumerate(parts + parts))
    return WCovering(classes, tuple([2] * M.n))


def _covering_sets(covering, k):
    V = [0] * k
    for i, S in covering.classes:
        if not 0 <= i < k:
            raise ValueError(f"covering class for color {i + 1} but only {k} colors")
        if V[i]:
            raise ValueError("covering must give exactly one set per color")
        V[i] = S
    return V


def clubs_holds(state: GameState, covering, colored=None, classes=None) -> bool:
    """Every U_i ∪ (V_i ∖ C) is independent in M_i."""
    V = _covering_sets(covering, state.k)
    C = state.colored_mask if colored is None else colored
    U = state.classes if classes is None else classes
    return all(M._indep(U[i] | (V[i] & ~C)) for i, M in enumerate(state.matroids))


def _obvious(state, V):
    C = state.colored_mask
    for e in bits_of(state.uncolored):
        for i in range(state.k):
            if V[i] >> e & 1 and state.legal(e, i + 1):
                return e, i + 1
    # reached only when the invariant failed; keep playing legally
    return next(state.legal_moves(), None)


def alice_game_move(state: GameState, covering: WCovering):
    """Alice's reply keeping U_i ∪ (V_i ∖ C) independent for every color i.

    If Bob's last move (e, j) broke the condition for j, grow U_j ∪ e inside
    U_j ∪ e ∪ (V_j ∖ C); the one element f of V_j ∖ C left out is colored with
    its other covering color.  Otherwise the least uncolored element e gets a
    color i with e ∈ V_i.
    """
    if state.finished():
        return None
    V = _covering_sets(covering, state.k)
    last = state.last_move
    if last is not None and last[0] == BOB:
        _, e, j = last
        Uj = state.classes[j - 1] & ~(1 << e)
        before = state.colored_mask & ~(1 << e)
        if not clubs_holds(state, covering, before, [U & ~(1 << e) for U in state.classes]):
            raise ProtocolViolation("the covering invariant did not hold before Bob's move")
        M = state.matroids[j - 1]
        free = V[j - 1] & ~before
        if not M._indep(Uj | 1 << e | free):
            X = Uj | 1 << e
            for y in bits_of(free):
                if M._extends(X, y):
                    X |= 1 << y
            left = free & ~X
            if popcount(left) != 1:
                raise ProtocolViolation("augmentation left more than one element out")
            f = left.bit_length() - 1
            other = [i for i in range(state.k) if i != j - 1 and V[i] >> f & 1]
            if not other or not state.legal(f, other[0] + 1):
                raise ProtocolViolation(f"element {f} has no admissible second covering color")
            return f, other[0] + 1
    return _obvious(state, V)


def covering_strategy(covering):
    return lambda state: alice_game_move(state, covering)


def _key(state, symmetric):
    cls = tuple(sorted(state.classes)) if symmetric else tuple(state.classes)
    return cls, state.turn


def _all_same(matroids):
    first = matroids[0]
    return all(M is first for M in matroids) or len({repr(M.spec()) for M in matroids}) == 1


def alice_beats_every_bob(matroids, alice, first=ALICE, max_ground=12, stats=None):
    """Does the fixed Alice strategy win against every Bob play?  Returns (won, losing line)."""
    n = matroids[0].n
    if n > max_ground:
        raise CapExceeded(f"Bob-side search limited to {max_ground} elements")
    memo = {}

    def bob_node(state):
        key = tuple(state.classes)
        if key in memo:
            return memo[key]
        res = None
        if not state.finished():
            moves = list(state.legal_moves())
            if not moves:
                res = list(state.history)
            for mv in moves:
                s = state.copy()
                s.play(*mv)
                bad = alice_node(s)
                if bad is not None:
                    res = bad
                    break
        memo[key] = res
        return res

    def alice_node(state):
        if state.finished():
            return None
        mv = alice(state)
        if mv is None:
            return list(state.history)
        state.play(*mv)
        return bob_node(state)

    s = GameState(matroids, turn=first)
    bad = alice_node(s) if first == ALICE else bob_node(s)
    if stats is not None:
        stats["bob_states"] = len(memo)
    return bad is None, bad


def _solver(matroids):
    symmetric = _all_same(matroids)
    memo = {}

    def win(state):
        # True iff Alice wins from here
        if state.finished():
            return True
        key = _key(state, symmetric)
        if key in memo:
            return memo[key]
        moves = list(state.legal_moves())
        if not moves:
            res = False
        elif state.turn == ALICE:
            res = False
            for mv in _dedupe(state, moves, symmetric):
                s = state.copy()
                s.play(*mv)
                if win(s):
                    res = True
                    break
        else:
            res = True
            for mv in _dedupe(state, moves, symmetric):
                s = state.copy()
                s.play(*mv)
                if not win(s):
                    res = False
                    break
        memo[key] = res
        return res

    return win


def _check_caps(matroids, max_ground, max_colors):
    n, k = matroids[0].n, len(matroids)
    if n > max_ground or k > max_colors:
        raise CapExceeded(f"full minimax limited to {max_ground} elements and {max_colors} colors")


def minimax(matroids, first=ALICE, max_ground=8, max_colors=4):
    """Optimal-play winner of the coloring game on M_1..M_k."""
    _check_caps(matroids, max_ground, max_colors)
    win = _solver(matroids)
    return ALICE if win(GameState(matroids, turn=first)) else BOB


def best_move(state, max_ground=8, max_colors=4, _cache={}):
    """A move winning for the player to move if one exists, else the first legal move."""
    _check_caps(state.matroids, max_ground, max_colors)
    key = tuple(id(M) for M in state.matroids)
    if key not in _cache:
        _cache.clear()
        _cache[key] = _solver(state.matroids)
    win = _cache[key]
    moves = list(state.legal_moves())
    want = state.turn == ALICE
    for mv in moves:
        s = state.copy()
        s.play(*mv)
        if win(s) == want:
            return mv
    return moves[0] if moves else None


def _dedupe(state, moves, symmetric):
    if not symmetric:
        return moves
    # colors with equal classes are interchangeable
    seen = set()
    out = []
    for e, c in moves:
        key = (e, state.classes[c - 1])
        if key not in seen:
            seen.add(key)
            out.append((e, c))
    return out


def game_value(M, k, fixed_alice=None, first=ALICE, max_ground=None, max_colors=4):
    """Winner of the k-color game on M under optimal play, or against every Bob if Alice is fixed.

    ``fixed_alice`` is a move function of the state, or the string "covering"
    for the 2-covering strategy (needs a 2-covering of k copies of M).
    """
    if isinstance(M, (list, tuple)):
        matroids = list(M)
    else:
        matroids = [M] * k
    if fixed_alice is None:
        return minimax(matroids, first, 8 if max_ground is None else max_ground, max_colors)
    if fixed_alice == "covering":
        fixed_alice = covering_strategy(two_covering(matroids))
    won, _ = alice_beats_every_bob(matroids, fixed_alice, first, 12 if max_ground is None else max_ground)
    return ALICE if won else BOB


def game_chromatic_number(M, start=1, stop=None, max_ground=8, max_colors=4):
    """Least k ≤ stop for which Alice wins the minimax game, or None."""
    stop = stop if stop is not None else max_colors
    for k in range(max(1, start), stop + 1):
        if game_value(M, k, max_ground=max_ground, max_colors=max_colors) == ALICE:
            return k
    return None


def play_game(matroids, alice, bob, first=ALICE, check=None):
    """Run one game; ``check(state)`` is called after every Alice move."""
    state = GameState(matroids, turn=first)
    while not state.finished():
        if not state.has_move():
            break
        if state.turn == ALICE:
            mv = alice(state)
            if mv is None:
                raise NoLegalMove("Alice strategy found no move")
            state.play(*mv)
            if check is not None:
                check(state)
        else:
            state.play(*bob(state))
    return (ALICE if state.finished() else BOB), state
