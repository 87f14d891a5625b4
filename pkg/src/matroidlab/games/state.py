"""Play state for the coloring games, where color c must stay independent in matroid c."""
from __future__ import annotations

from ..core.elements import bits_of, elems, popcount

ALICE, BOB = "alice", "bob"


class GameState:
    """Colors are 1..k; ``matroids[c-1]`` governs color c."""

    def __init__(self, matroids, colored=None, turn=ALICE, last_move=None):
        self.matroids = list(matroids)
        self.k = len(self.matroids)
        self.n = self.matroids[0].n
        self.ground = self.matroids[0].ground
        self.classes = [0] * self.k
        self.colored = {}
        self.turn = turn
        self.last_move = last_move          # (player, element, color)
        self.history = []
        for e, c in (colored or {}).items():
            self.colored[e] = c
            self.classes[c - 1] |= 1 << e

    @property
    def color_pool(self):
        return set(range(1, self.k + 1))

    @property
    def colored_mask(self) -> int:
        m = 0
        for V in self.classes:
            m |= V
        return m

    @property
    def uncolored(self) -> int:
        return self.ground & ~self.colored_mask

    def finished(self) -> bool:
        return self.uncolored == 0

    def legal(self, e: int, c: int) -> bool:
        if not 1 <= c <= self.k or not 0 <= e < self.n or e in self.colored:
            return False
        return self.matroids[c - 1]._extends(self.classes[c - 1], e)

    def legal_moves(self):
        for e in bits_of(self.uncolored):
            for c in range(1, self.k + 1):
                if self.matroids[c - 1]._extends(self.classes[c - 1], e):
                    yield e, c

    def has_move(self) -> bool:
        return next(self.legal_moves(), None) is not None

    def play(self, e: int, c: int, player=None):
        if not self.legal(e, c):
            raise ValueError(f"illegal move: element {e} with color {c}")
        player = player or self.turn
        self.colored[e] = c
        self.classes[c - 1] |= 1 << e
        self.last_move = (player, e, c)
        self.history.append(self.last_move)
        self.turn = BOB if player == ALICE else ALICE

    def copy(self):
        s = GameState(self.matroids, dict(self.colored), self.turn, self.last_move)
        s.history = list(self.history)
        return s

    def is_proper(self) -> bool:
        return all(M._indep(V) for M, V in zip(self.matroids, self.classes))

    def summary(self):
        return {"colored": {str(e): c for e, c in sorted(self.colored.items())},
                "classes": [list(elems(V)) for V in self.classes],
                "complete": self.finished(), "size": popcount(self.colored_mask)}

