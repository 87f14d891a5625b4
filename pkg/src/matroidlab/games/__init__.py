"""Coloring games: alternating, on-line list, and indicated variants."""
from .state import ALICE, BOB, GameState
from .coloring import (alice_beats_every_bob, best_move, alice_game_move, clubs_holds, covering_strategy,
                       doubled_partition, game_chromatic_number, game_value, minimax, play_game,
                       two_covering)
from .mk import (MkLayout, bob_mk_move, construct_Mk, greedy_alice, mk_counters, play_mk, random_alice,
                 spade_holds)
from .online import OnlineState, final_coloring_ok, online_alice_respond, online_exhaustive
from .indicated import IndicatedAlice, indicated_alice, indicated_chromatic_number, indicated_exhaustive
