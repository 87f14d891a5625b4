import random

import pytest

from matroidlab.chroma import chromatic_number, decide_w_colorable
from matroidlab.core import Restriction, complete_graph, graphic, uniform
from matroidlab.core.elements import bits_of, popcount
from matroidlab.corpus import corpus
from matroidlab.errors import CapExceeded, NoLegalMove, ProtocolViolation
from matroidlab.games import (ALICE, BOB, GameState, IndicatedAlice, MkLayout, OnlineState,
                              alice_beats_every_bob, alice_game_move, best_move, bob_mk_move, clubs_holds,
                              construct_Mk, covering_strategy, doubled_partition, final_coloring_ok,
                              game_chromatic_number, game_value, indicated_alice, indicated_exhaustive,
                              minimax, mk_counters, online_alice_respond, online_exhaustive, play_game,
                              play_mk, two_covering)
from matroidlab.games.online import residual_feasible
from matroidlab.union import WCovering, matroid_union, partition_into_independent

K4 = complete_graph(4)


# --- game state ---------------------------------------------------------------

def test_state_rules():
    s = GameState([uniform(3, 1)] * 2)
    s.play(0, 1)
    assert s.turn == BOB and not s.legal(0, 2) and not s.legal(1, 1) and s.legal(1, 2)
    with pytest.raises(ValueError):
        s.play(1, 1)
    s.play(1, 2)
    assert not s.has_move() and not s.finished() and s.is_proper()


# --- Alice's covering strategy ------------------------------------------------

def test_fresh_game_obvious_move():
    U = uniform(4, 2)
    cov = WCovering([(0, 0b0011), (1, 0b0011), (2, 0b1100), (3, 0b1100)], (2, 2, 2, 2))
    s = GameState([U] * 4)
    e, c = alice_game_move(s, cov)
    assert e == 0 and c in (1, 2)


def test_parallel_pair_reply():
    # two colors admit no 2-covering of U_{1,2}; the only legal reply is the other element, other color
    U = uniform(2, 1)
    for e in (0, 1):
        for c in (1, 2):
            s = GameState([U] * 2, turn=BOB)
            s.play(e, c)
            assert best_move(s) == (1 - e, 3 - c)
            assert list(s.legal_moves()) == [(1 - e, 3 - c)]
    # with the partition {0}, {1} as the covering, Bob's moves that respect it get the mirrored reply
    cov = WCovering([(0, 0b01), (1, 0b10)], (1, 1))
    for e, c in [(0, 1), (1, 2)]:
        s = GameState([U] * 2, turn=BOB)
        s.play(e, c)
        assert alice_game_move(s, cov) == (1 - e, 3 - c)


def test_scripted_k4_keeps_clubs():
    rng = random.Random(7)
    cov = two_covering([K4] * 4)
    for _ in range(30):
        s = GameState([K4] * 4)
        while not s.finished():
            if s.turn == ALICE:
                s.play(*alice_game_move(s, cov))
                assert clubs_holds(s, cov)
            else:
                moves = list(s.legal_moves())
                assert moves
                s.play(*rng.choice(moves))
        assert s.is_proper()


def test_clubs_violation_detected():
    U = uniform(4, 2)
    cov = WCovering([(0, 0b0011), (1, 0b0011), (2, 0b1100), (3, 0b1100)], (2, 2, 2, 2))
    s = GameState([U] * 4, colored={2: 1, 3: 1}, turn=BOB)     # class 1 already full outside V_1
    s.play(0, 2)
    with pytest.raises(ProtocolViolation):
        alice_game_move(s, cov)


@pytest.mark.parametrize("first", [ALICE, BOB])
@pytest.mark.parametrize("name,M", [c for c in corpus() if c[1].n <= 7])
def test_covering_beats_every_bob(first, name, M):
    k = 2 * chromatic_number(M)
    won, line = alice_beats_every_bob([M] * k, covering_strategy(two_covering([M] * k)), first)
    assert won, line


def test_game_value_examples():
    assert game_value(uniform(2, 1), 2) == ALICE
    assert game_value(uniform(3, 1), 2) == BOB
    assert game_value(uniform(4, 2), 4, fixed_alice="covering") == ALICE
    assert game_chromatic_number(K4) == 3


def test_minimax_caps():
    with pytest.raises(CapExceeded):
        minimax([uniform(9, 2)] * 2)


def test_best_move_is_optimal_on_small_games():
    # with best_move on both sides the result matches minimax
    for M, k in [(K4, 2), (K4, 3), (uniform(3, 1), 3), (uniform(5, 2), 3)]:
        w, s = play_game([M] * k, best_move, best_move)
        assert w == minimax([M] * k)


# --- M_k ------------------------------------------------------------------------

def test_mk_construction():
    M = construct_Mk(3)
    L = M.layout
    assert M.n == 150 and L.c_size == 15 and M.full_rank == 50
    assert all(M._indep(V) for V in L.standard_partition())
    assert sum(L.standard_partition()) == M.ground
    for m in range(1, L.blocks + 1, 17):
        assert M._rank(L.C | L.block(m)) == 6
    assert partition_into_independent(M, 3).ok and not partition_into_independent(M, 2).ok


def test_m4_partition():
    M = construct_Mk(4)
    parts = M.layout.standard_partition()
    assert len(parts) == 4 and all(M._indep(V) for V in parts)
    assert not partition_into_independent(M, 3).ok


def test_bob_mimics_in_c():
    M = construct_Mk(3)
    L = M.layout
    s = GameState([M] * 4)
    s.play(L.c(1, 1), 2)
    e, c = bob_mk_move(s, 3)
    assert c == 2 and e == min(bits_of(L.block(2)))


def test_bob_answers_in_group():
    M = construct_Mk(3)
    L = M.layout
    s = GameState([M] * 4)
    x = min(bits_of(L.block(5)))             # block 5 lies in the group of color 1
    s.play(x, 3)
    e, c = bob_mk_move(s, 3)
    assert c == 1 and L.block_of(e) in (1, 5, 9)


def test_bob_color_cap():
    M = construct_Mk(3)
    with pytest.raises(ValueError):
        bob_mk_move(GameState([M] * 5), 3)


@pytest.mark.parametrize("alice", ["greedy", "random"])
def test_mk_games(alice):
    M = construct_Mk(3)
    for seed in range(10):
        w, s, cnt = play_mk(3, 4, alice, seed, M)
        assert w == BOB and s.is_proper()
        assert all(v["c"] <= 3 for v in cnt.values())


# --- on-line game -------------------------------------------------------------

def test_online_first_round_u24():
    U = uniform(4, 2)
    s = OnlineState(U, 2)
    X = online_alice_respond(s, 0b1111)
    assert len(X) == 2 and U._indep(int(X))
    assert s.invariant_holds() and residual_feasible(s)


def test_online_single_reveals():
    U = uniform(4, 2)
    s = OnlineState(U, 2)
    for e in range(4):
        before = s.copy()
        X = online_alice_respond(s, 1 << e)
        assert int(X) in (0, 1 << e)
        assert residual_feasible(s)


def test_online_protocol_errors():
    s = OnlineState(uniform(3, 1), 3)
    with pytest.raises(ProtocolViolation):
        online_alice_respond(s, 0)
    for _ in range(3):
        online_alice_respond(s, 0b001)
    with pytest.raises(ProtocolViolation):
        online_alice_respond(s, 0b001)


@pytest.mark.parametrize("name,M", [c for c in corpus() if c[1].n <= 5])
def test_online_exhaustive(name, M):
    won, bad = online_exhaustive(M, chromatic_number(M))
    assert won, bad


def test_online_random_play_final_coloring():
    rng = random.Random(5)
    for name, M in [c for c in corpus() if c[1].n <= 8]:
        s = OnlineState(M, chromatic_number(M))
        while not s.over():
            el = list(bits_of(s.eligible()))
            V = sum(1 << e for e in el if rng.random() < 0.6) or 1 << rng.choice(el)
            online_alice_respond(s, V)
        assert final_coloring_ok(s, 1), name


def test_online_weights():
    M = uniform(3, 1)
    won, _ = online_exhaustive(M, 4, w=[2, 1, 1])
    assert won


# --- indicated game -------------------------------------------------------------

def test_indicated_u24():
    U = uniform(4, 2)
    part = partition_into_independent(U, 2).covering
    won, bad = indicated_exhaustive([U, U], part)
    assert won


def test_indicated_single_element():
    U = uniform(1, 1)
    part = partition_into_independent(U, 1).covering
    a = indicated_alice([U], part)
    assert a.next_indication() == 0 and a.legal_colors(0) == [1]
    a.on_bob_color(None, 0, 1)
    assert a.done()


def test_indicated_rejects_bad_moves():
    U = uniform(4, 2)
    a = indicated_alice([U, U], partition_into_independent(U, 2).covering)
    e = a.next_indication()
    with pytest.raises(ProtocolViolation):
        a.on_bob_color(None, (e + 1) % 4, 1)


@pytest.mark.parametrize("name,M", [c for c in corpus() if c[1].n <= 7])
def test_indicated_exhaustive(name, M):
    k = chromatic_number(M)
    won, bad = indicated_exhaustive([M] * k, partition_into_independent(M, k).covering)
    assert won, bad


def test_tight_sets_matter():
    """Least-element indication alone loses on some mixed pairs; the tight-set strategy never does."""
    rng = random.Random(11)
    naive_losses = 0
    for _ in range(400):
        n = rng.randint(3, 6)
        Ms = []
        for _ in range(2):
            F = [e for e in range(n) if rng.random() < 0.7] or [0]
            Ms.append(Restriction(uniform(n, rng.randint(1, 3)), F, keep_ground=True))
        cert = matroid_union(Ms)
        if not cert.ok:
            continue
        won, _ = indicated_exhaustive(Ms, cert.covering)
        assert won
        naive_losses += not _naive_all(Ms)
    assert naive_losses > 0


def _naive_all(Ms):
    """Least uncolored element first, against every Bob coloring."""
    n = Ms[0].n

    def rec(U, e):
        if e == n:
            return True
        cols = [i for i in range(len(Ms)) if Ms[i]._extends(U[i], e)]
        if not cols:
            return False
        for i in cols:
            V = list(U)
            V[i] |= 1 << e
            if not rec(V, e + 1):
                return False
        return True

    return rec([0] * len(Ms), 0)
