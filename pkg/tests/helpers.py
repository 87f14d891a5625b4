"""Brute-force oracles shared by the tests."""
from itertools import combinations

from matroidlab.core.elements import bits_of, popcount


def brute_rank(M, A):
    best = 0
    items = list(bits_of(A))
    for r in range(len(items) + 1):
        for c in combinations(items, r):
            if M._indep(sum(1 << e for e in c)):
                best = r
    return best


def brute_bases(M):
    r = brute_rank(M, M.ground)
    return sorted(sum(1 << e for e in c) for c in combinations(range(M.n), r)
                  if M._indep(sum(1 << e for e in c)))


def brute_partition(M, k):
    """Does E split into k independent sets?  Tries every assignment of elements to classes."""
    n = M.n
    classes = [0] * k

    def rec(e):
        if e == n:
            return True
        for i in range(k):
            if M._extends(classes[i], e):
                classes[i] |= 1 << e
                if rec(e + 1):
                    return True
                classes[i] &= ~(1 << e)
            if classes[i] == 0:
                break
        return False

    return rec(0)


def brute_chi(M):
    k = 1
    while not brute_partition(M, k):
        k += 1
    return k
