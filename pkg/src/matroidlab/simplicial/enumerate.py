"""Exhaustive enumeration of k-set families on a small vertex set, vectorized.

A family U of k-subsets of {0..v−1} splits at the last vertex into B (sets
avoiding it) and C (the other sets with it removed); then
|δU| = |δB ∪ C| + |δC|.  B is taken up to relabeling of the other v−1
vertices (orbit representatives), C over all of its 2^C(v−1, k−1) values.
Families are bitmasks over the k-subsets listed in lexicographic order.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .kk import delta


@lru_cache(maxsize=None)
def ksets(v, k):
    return tuple(combinations(range(v), k))


@lru_cache(maxsize=None)
def kindex(v, k):
    return {S: i for i, S in enumerate(ksets(v, k))}


def _or_table(images):
    """T[mask] = OR of images[j] over bits j of mask, for all masks."""
    m = len(images)
    T = np.zeros(1 << m, dtype=np.int64)
    for j, im in enumerate(images):
        T[1 << j: 1 << (j + 1)] = T[: 1 << j] | np.int64(im)
    return T


@lru_cache(maxsize=None)
def shadow_table(v, k):
    """Shadow of every family of k-subsets of {0..v−1}, as a mask over (k−1)-subsets."""
    idx = kindex(v, k - 1)
    images = [sum(1 << idx[S] for S in combinations(A, k - 1)) for A in ksets(v, k)]
    return _or_table(images)


def _set_perm(v, k, perm):
    idx = kindex(v, k)
    return [idx[tuple(sorted(perm[x] for x in A))] for A in ksets(v, k)]


@lru_cache(maxsize=None)
def orbit_representatives(v, k):
    """Least family in each orbit of families of k-subsets of {0..v−1} under vertex relabeling."""
    m = len(ksets(v, k))
    N = 1 << m
    gens = [(1, 0) + tuple(range(2, v)), tuple(range(1, v)) + (0,)] if v >= 2 else []
    src, dst = [], []
    nodes = np.arange(N, dtype=np.int64)
    for g in gens:
        img = _or_table([1 << j for j in _set_perm(v, k, g)])
        src.append(nodes)
        dst.append(img)
    if not gens:
        return nodes
    src = np.concatenate(src)
    dst = np.concatenate(dst)
    G = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(N, N))
    _, labels = connected_components(G, directed=True, connection="weak")
    reps = np.full(labels.max() + 1, N, dtype=np.int64)
    np.minimum.at(reps, labels, nodes)
    return np.sort(reps)


def _popcount(a):
    return np.bitwise_count(a).astype(np.int64)


def split_scan(v, k, visit):
    """Call visit(B, C, size, shadow_size) for each orbit rep B and the array of all C."""
    if k < 2:
        raise ValueError("split scan needs k ≥ 2")
    w = v - 1
    shB = shadow_table(w, k)
    shC = shadow_table(w, k - 1)
    Cs = np.arange(len(shC), dtype=np.int64)
    pcC = _popcount(Cs)
    shCsize = _popcount(shC)
    for B in orbit_representatives(w, k):
        B = int(B)
        dB = int(shB[B])
        size = pcC + bin(B).count("1")
        shadow_size = _popcount(Cs | np.int64(dB)) + shCsize
        visit(B, Cs, size, shadow_size)


def kk_check(v, k, max_n=None):
    """Minimum |δU| over families of n k-subsets of v vertices, for every n; checked against delta."""
    best = {}

    def visit(B, Cs, size, sh):
        order = np.lexsort((sh, size))
        s, t = size[order], sh[order]
        first = np.r_[True, s[1:] != s[:-1]]
        for n, m in zip(s[first].tolist(), t[first].tolist()):
            if n and (max_n is None or n <= max_n):
                best[n] = min(best.get(n, m), m)

    split_scan(v, k, visit)
    violations = {n: (m, delta(n, k)) for n, m in best.items() if m < delta(n, k)}
    return best, violations


def join_family(v, k, B, C):
    """Family mask over k-subsets of {0..v−1} from its split at vertex v−1."""
    w = v - 1
    full_idx = kindex(v, k)
    out = 0
    for j, A in enumerate(ksets(w, k)):
        if B >> j & 1:
            out |= 1 << full_idx[A]
    for j, A in enumerate(ksets(w, k - 1)):
        if C >> j & 1:
            out |= 1 << full_idx[A + (w,)]
    return out


def extremal_families(v, k):
    """Masks (over k-subsets of v vertices) of all extremal families, up to relabeling of v−1 vertices."""
    top = len(ksets(v, k))
    dtab = np.array([0] + [delta(n, k) for n in range(1, top + 1)], dtype=np.int64)
    found = []

    def visit(B, Cs, size, sh):
        hit = (size > 0) & (sh == dtab[size])
        for C in Cs[hit].tolist():
            found.append((B, C))

    split_scan(v, k, visit)
    return [join_family(v, k, B, C) for B, C in found]


@lru_cache(maxsize=None)
def _perm_tables(v, k):
    """Lookup tables mapping 7-bit chunks of a family mask to their images under every permutation."""
    m = len(ksets(v, k))
    perms = list(permutations(range(v)))
    chunks = (m + 6) // 7
    tab = np.zeros((chunks, 128, len(perms)), dtype=np.int64)
    for p, perm in enumerate(perms):
        sp = _set_perm(v, k, perm)
        for c in range(chunks):
            bits = [1 << sp[j] if j < m else 0 for j in range(7 * c, 7 * c + 7)]
            tab[c, :, p] = _or_table(bits)
    return tab


def canonical_masks(v, k, masks, batch=512):
    """Least image of each family under all relabelings of the v vertices."""
    tab = _perm_tables(v, k)
    masks = np.asarray(masks, dtype=np.int64)
    out = np.empty(len(masks), dtype=np.int64)
    for s in range(0, len(masks), batch):
        part = masks[s: s + batch]
        img = np.zeros((len(part), tab.shape[2]), dtype=np.int64)
        for c in range(tab.shape[0]):
            img |= tab[c][(part >> (7 * c)) & 127]
        out[s: s + batch] = img.min(axis=1)
    return out


def mask_to_sets(v, k, mask, one_based=True):
    off = 1 if one_based else 0
    return [tuple(x + off for x in A) for j, A in enumerate(ksets(v, k)) if mask >> j & 1]


def extremal_classes(v, k):
    """One representative per isomorphism class of extremal families of k-subsets of v vertices."""
    if k == 1:
        return [(1 << n) - 1 for n in range(1, v + 1)]
    fams = extremal_families(v, k)
    if not fams:
        return []
    canon = canonical_masks(v, k, fams)
    return sorted(set(canon.tolist()))
