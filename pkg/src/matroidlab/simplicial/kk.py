"""Squashed order, shadows, cascade representations and f-vector validity.

Sets of vertices are sorted tuples of positive integers.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, count, islice
from math import comb


def _colex(k, m):
    """k-subsets of 1..m in squashed order."""
    if k == 0:
        yield ()
        return
    for top in range(k, m + 1):
        for S in _colex(k - 1, top - 1):
            yield S + (top,)


def squashed_order(k, avoid=None):
    """All k-subsets of the positive integers in squashed order (infinite for k ≥ 1)."""
    if k == 0:
        yield ()
        return
    for top in count(k):
        if top == avoid:
            continue
        for S in _colex(k - 1, top - 1):
            if avoid is None or avoid not in S:
                yield S + (top,)


def squashed_less(A, B) -> bool:
    """A precedes B: max(A∖B) < max(B∖A)."""
    a, b = set(A) - set(B), set(B) - set(A)
    if not a and not b:
        return False
    return max(a, default=0) < max(b, default=0)


def squashed_key(A):
    return tuple(sorted(A, reverse=True))


def squashed_prefix(k: int, n: int):
    """S_k(n): the first n k-subsets in squashed order."""
    if n < 0 or k < 0:
        raise ValueError("k and n must be nonnegative")
    if k == 0:
        return [()] if n >= 1 else []
    return list(islice(squashed_order(k), n))


def squashed_prefix_avoiding(k: int, n: int, i: int):
    """S_k^i(n): the first n k-subsets in squashed order not containing i."""
    if n < 0 or k < 0:
        raise ValueError("k and n must be nonnegative")
    if k == 0:
        return [()] if n >= 1 else []
    return list(islice(squashed_order(k, avoid=i), n))


def shadow(U):
    """All (k−1)-subsets of members of U, in squashed order."""
    U = [tuple(sorted(A)) for A in U]
    if not U:
        return []
    k = len(U[0])
    if any(len(A) != k for A in U):
        raise ValueError("shadow needs sets of one cardinality")
    if k == 0:
        raise ValueError("the empty set has no shadow")
    out = {S for A in U for S in combinations(A, k - 1)}
    return sorted(out, key=squashed_key)


@dataclass(frozen=True)
class CascadeRep:
    k: int
    terms: tuple          # a_k > a_{k-1} > ... > a_t, the j-th binomial is C(a_j, j)

    def value(self) -> int:
        return sum(comb(a, self.k - idx) for idx, a in enumerate(self.terms))

    def pairs(self):
        return [(a, self.k - idx) for idx, a in enumerate(self.terms)]


def cascade(n: int, k: int) -> CascadeRep:
    """n = C(a_k, k) + C(a_{k−1}, k−1) + … + C(a_t, t), with a_k > … > a_t ≥ t ≥ 1."""
    if k < 1:
        raise ValueError("k must be positive")
    if n < 1:
        raise ValueError("cascade representation needs n ≥ 1")
    terms = []
    j = k
    r = n
    while r > 0:
        a = j
        while comb(a + 1, j) <= r:
            a += 1
        terms.append(a)
        r -= comb(a, j)
        j -= 1
    return CascadeRep(k, tuple(terms))


def delta(n: int, k: int) -> int:
    """|δ S_k(n)| = Σ C(a_j, j−1) over the cascade of n; zero for n = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 0
    rep = cascade(n, k)
    return sum(comb(a, j - 1) for a, j in rep.pairs())


def is_valid_fvector(f) -> bool:
    """(f_0, …, f_d) is an f-vector iff f_{k−1} ≥ |δ S_{k+1}(f_k)| for k = 1..d."""
    f = [int(x) for x in f]
    if any(x < 0 for x in f):
        return False
    return all(f[k - 1] >= delta(f[k], k + 1) for k in range(1, len(f)))
