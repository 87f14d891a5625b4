"""Fair splitting of discrete necklaces: interval cuts in 1-D and axis-aligned cuts on grids."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from string import ascii_lowercase

import numpy as np

from .errors import CapExceeded, DivisibilityError


@dataclass(frozen=True)
class Necklace1D:
    beads: tuple

    def __post_init__(self):
        if not self.beads:
            raise ValueError("necklace must be nonempty")
        used = sorted(set(self.beads))
        if used != list(range(1, len(used) + 1)):
            raise ValueError("colors must be 1..k with every color used")

    @classmethod
    def parse(cls, text):
        text = text.strip().lower()
        if not text or any(ch not in ascii_lowercase for ch in text):
            raise ValueError(f"bead string must be letters, got {text!r}")
        return cls(tuple(ascii_lowercase.index(ch) + 1 for ch in text))

    @classmethod
    def from_any(cls, seq):
        """Relabel colors in order of first appearance."""
        m = {}
        for b in seq:
            m.setdefault(b, len(m) + 1)
        return cls(tuple(m[b] for b in seq))

    @property
    def k(self):
        return max(self.beads)

    def __len__(self):
        return len(self.beads)

    def counts(self):
        c = [0] * self.k
        for b in self.beads:
            c[b - 1] += 1
        return c

    def __str__(self):
        return "".join(ascii_lowercase[b - 1].upper() for b in self.beads)


@dataclass
class Splitting:
    cuts: tuple                  # 1-D: positions; grid: one tuple per axis
    part_of: tuple               # piece index -> part in 1..q
    pieces: list = field(default_factory=list)

    def to_json(self):
        return {"cuts": [list(c) if isinstance(c, tuple) else c for c in self.cuts],
                "parts": list(self.part_of)}


def _check_div(counts, q):
    if q < 1:
        raise ValueError("q must be positive")
    bad = [i + 1 for i, c in enumerate(counts) if c % q]
    if bad:
        raise DivisibilityError(f"counts of colors {bad} are not divisible by {q}")


def _label(vecs, q, target):
    """First part assignment (restricted growth order) giving every part the target vector."""
    m = len(vecs)
    k = len(target)
    loads = [[0] * k for _ in range(q)]
    labels = [0] * m
    seen = set()

    def rec(j, used):
        if j == m:
            return all(L == target for L in loads)
        key = (j, tuple(sorted(tuple(L) for L in loads)))
        if key in seen:
            return False
        v = vecs[j]
        for p in range(min(used + 1, q)):
            L = loads[p]
            if all(L[c] + v[c] <= target[c] for c in range(k)):
                for c in range(k):
                    L[c] += v[c]
                labels[j] = p + 1
                if rec(j + 1, max(used, p + 1)):
                    return True
                for c in range(k):
                    L[c] -= v[c]
        seen.add(key)
        return False

    return list(labels) if rec(0, 0) else None


def _pieces_1d(N, cuts):
    bounds = (0,) + tuple(cuts) + (len(N),)
    out = []
    for a, b in zip(bounds, bounds[1:]):
        v = [0] * N.k
        for x in N.beads[a:b]:
            v[x - 1] += 1
        out.append(v)
    return out


def verify_1d(N, q, S: Splitting) -> bool:
    cuts = list(S.cuts)
    if cuts != sorted(set(cuts)) or any(not 1 <= c < len(N) for c in cuts):
        return False
    vecs = _pieces_1d(N, cuts)
    if len(S.part_of) != len(vecs) or any(not 1 <= p <= q for p in S.part_of):
        return False
    tot = N.counts()
    loads = [[0] * N.k for _ in range(q)]
    for v, p in zip(vecs, S.part_of):
        for c in range(N.k):
            loads[p - 1][c] += v[c]
    return all(L[c] * q == tot[c] for L in loads for c in range(N.k))


def fair_split_1d(N: Necklace1D, q: int, t: int):
    """A fair q-splitting with at most t cuts (fewest cuts, then lexicographic), or None."""
    counts = N.counts()
    _check_div(counts, q)
    if t > len(N) - 1:
        t = len(N) - 1
    target = [c // q for c in counts]
    for s in range(t + 1):
        for cuts in combinations(range(1, len(N)), s):
            vecs = _pieces_1d(N, cuts)
            lab = _label(vecs, q, target)
            if lab is not None:
                return Splitting(tuple(cuts), tuple(lab), vecs)
    return None


def min_cuts(N: Necklace1D, q: int) -> int:
    _check_div(N.counts(), q)
    S = fair_split_1d(N, q, len(N) - 1)
    if S is None:
        raise RuntimeError("no fair splitting even with every cut")
    t = len(S.cuts)
    if t > N.k * (q - 1):
        raise RuntimeError(f"{N} needs {t} cuts, more than k(q-1)")
    return t


def tight_example(k: int, q: int) -> Necklace1D:
    if k < 1 or q < 2:
        raise ValueError("need k ≥ 1 and q ≥ 2")
    return Necklace1D(tuple(c for c in range(1, k + 1) for _ in range(q)))


# ---------------------------------------------------------------------------
# batch minimum cuts for many necklaces of one length

def _labelings(m, q):
    """Restricted growth strings of length m over q parts using every part."""
    out = []

    def rec(pre, used):
        if len(pre) == m:
            if used == q:
                out.append(tuple(pre))
            return
        for p in range(min(used + 1, q)):
            rec(pre + [p], max(used, p + 1))

    rec([], 0)
    return out


@lru_cache(maxsize=None)
def _cut_rows(n, q, s):
    """Coefficient rows over prefix positions 0..n: row·P is the load of one part."""
    rows = []
    for cuts in combinations(range(1, n), s):
        bounds = (0,) + cuts + (n,)
        for lab in _labelings(s + 1, q):
            R = np.zeros((q - 1, n + 1), dtype=np.int64)
            for j, p in enumerate(lab):
                if p < q - 1:
                    R[p, bounds[j + 1]] += 1
                    R[p, bounds[j]] -= 1
            rows.append(R)
    if not rows:
        return np.zeros((0, q - 1, n + 1), dtype=np.int64)
    return np.stack(rows)


def min_cuts_batch(beads, q, k_max, chunk=2048):
    """Fewest cuts of a fair q-splitting for every row of ``beads`` (0-based colors), up to k_max(q−1).

    Entries are -1 where no splitting within the range exists.
    """
    beads = np.asarray(beads, dtype=np.int64)
    N, n = beads.shape
    onehot = (beads[:, :, None] == np.arange(k_max)[None, None, :]).astype(np.int64)
    P = np.concatenate([np.zeros((N, 1, k_max), dtype=np.int64), np.cumsum(onehot, axis=1)], axis=1)
    tot = P[:, -1, :]
    if np.any(tot % q):
        raise DivisibilityError("some color count is not divisible by q")
    target = tot // q
    best = np.full(N, -1, dtype=np.int64)
    for s in range(min(k_max * (q - 1), n - 1) + 1):
        rows = _cut_rows(n, q, s)
        if len(rows) == 0:
            continue
        todo = np.nonzero(best < 0)[0]
        for a in range(0, len(todo), chunk):
            idx = todo[a:a + chunk]
            loads = np.einsum("rpn,bnc->brpc", rows, P[idx])
            ok = (loads == target[idx][:, None, None, :]).all(axis=(2, 3)).any(axis=1)
            best[idx[ok]] = s
        if not np.any(best < 0):
            break
    return best


def necklaces(n, k):
    """All bead strings of length n over at most k colors with colors in first-appearance order."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    codes = np.arange(k ** n, dtype=np.int64)
    digits = np.stack([(codes // k ** (n - 1 - j)) % k for j in range(n)], axis=1)
    keep = np.ones(len(digits), dtype=bool)
    running = np.zeros(len(digits), dtype=np.int64)       # number of colors seen so far
    for j in range(n):
        d = digits[:, j]
        keep &= d <= running
        running = np.maximum(running, d + 1)
    return digits[keep]


def goldberg_west_scan(max_beads=14, k=3):
    """min_cuts(N, 2) ≤ (colors of N) for every necklace up to max_beads beads with even counts."""
    checked, violations, worst = 0, [], {}
    for n in range(2, max_beads + 1, 2):
        S = necklaces(n, k)
        counts = np.stack([(S == c).sum(axis=1) for c in range(k)], axis=1)
        S = S[(counts % 2 == 0).all(axis=1)]
        used = S.max(axis=1) + 1
        mc = min_cuts_batch(S, 2, k)
        checked += len(S)
        bad = (mc < 0) | (mc > used)
        for row in S[bad][:5]:
            violations.append("".join(ascii_lowercase[x] for x in row))
        for u in range(1, k + 1):
            sel = used == u
            if sel.any():
                worst[u] = max(worst.get(u, 0), int(mc[sel].max()))
    return {"checked": checked, "violations": violations, "max_cuts_by_colors": worst}


# ---------------------------------------------------------------------------
# grids

@dataclass(frozen=True)
class GridNecklace:
    cells: np.ndarray

    def __init__(self, cells):
        a = np.asarray(cells)
        if a.ndim == 0 or any(s < 1 for s in a.shape):
            raise ValueError("grid dimensions must all be at least 1")
        object.__setattr__(self, "cells", a.astype(np.int64))

    @classmethod
    def parse(cls, obj):
        def conv(x):
            if isinstance(x, list):
                return [conv(y) for y in x]
            if isinstance(x, str):
                return ascii_lowercase.index(x.lower()) + 1
            return int(x)
        return cls(conv(obj))

    @property
    def k(self):
        return int(self.cells.max())

    def counts(self):
        return [int((self.cells == c).sum()) for c in range(1, self.k + 1)]


def _grid_pieces(G, cuts):
    axes = []
    for d, cs in enumerate(cuts):
        b = (0,) + tuple(cs) + (G.cells.shape[d],)
        axes.append(list(zip(b, b[1:])))
    out = []
    for box in product(*axes):
        sl = tuple(slice(a, b) for a, b in box)
        block = G.cells[sl]
        out.append([int((block == c).sum()) for c in range(1, G.k + 1)])
    return out


def fair_split_grid(G: GridNecklace, q: int, budget, cap=10 ** 6):
    """Axis-aligned full cuts, at most budget[i] across axis i, with a fair labeling of the boxes."""
    counts = G.counts()
    _check_div(counts, q)
    shape = G.cells.shape
    if len(budget) != len(shape):
        raise ValueError("budget needs one entry per axis")
    pieces_max = 1
    for t, s in zip(budget, shape):
        pieces_max *= min(t, s - 1) + 1
    if q ** pieces_max > cap * q:
        raise CapExceeded(f"{pieces_max} pieces give too many labelings")
    target = [c // q for c in counts]
    options = []
    for t, s in zip(budget, shape):
        options.append([c for r in range(min(t, s - 1) + 1) for c in combinations(range(1, s), r)])
    cands = sorted(product(*options), key=lambda cs: (sum(len(c) for c in cs), cs))
    for cuts in cands:
        vecs = _grid_pieces(G, cuts)
        lab = _label(vecs, q, target)
        if lab is not None:
            return Splitting(tuple(cuts), tuple(lab), vecs)
    return None


def verify_grid(G, q, S: Splitting) -> bool:
    vecs = _grid_pieces(G, S.cuts)
    if len(vecs) != len(S.part_of):
        return False
    tot = G.counts()
    loads = [[0] * G.k for _ in range(q)]
    for v, p in zip(vecs, S.part_of):
        if not 1 <= p <= q:
            return False
        for c in range(G.k):
            loads[p - 1][c] += v[c]
    return all(L[c] * q == tot[c] for L in loads for c in range(G.k))
