"""Chromatic numbers, colorings from lists, and exchange properties obtained from list coloring."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil
from typing import NamedTuple

from .core.elements import ElementSet, as_mask, bits_of, elems, full, mask_of, popcount, subsets_canonical
from .core.matroid import Contraction, Matroid, Restriction
from .errors import CapExceeded, InfeasibleLists, LoopError, enum_cap
from .union import matroid_union, partition_into_independent, _weights


def flats(M: Matroid):
    """All closed sets, generated upward from cl(∅) by single-element closures."""
    start = M.closure(0)
    seen = {start}
    stack = [start]
    while stack:
        F = stack.pop()
        for e in bits_of(M.ground & ~F):
            G = M.closure(F | 1 << e)
            if G not in seen:
                seen.add(G)
                stack.append(G)
    return sorted(seen, key=lambda m: (popcount(m), elems(m)))


def _require_loopless(M):
    loops = M.loops()
    if loops:
        raise LoopError(f"element {elems(loops)[0]} is a loop; no proper coloring exists")


def chromatic_number(M: Matroid, method="auto") -> int:
    """max ⌈|A|/r(A)⌉ over nonempty flats, or the least k admitting a partition into k independent sets."""
    _require_loopless(M)
    if M.n == 0:
        return 0
    if method == "auto":
        method = "formula" if M.n <= enum_cap(20) else "partition"
    if method == "formula":
        return max(-(-popcount(F) // M._rank(F)) for F in flats(M) if F)
    if method == "partition":
        k = max(1, -(-M.n // M.full_rank))
        while not partition_into_independent(M, k, stop_on_failure=True).ok:
            k += 1
        return k
    raise ValueError(f"unknown method {method!r}")


def fractional_chromatic(M: Matroid) -> Fraction:
    _require_loopless(M)
    if M.n == 0:
        return Fraction(0)
    if M.n > enum_cap(20):
        raise CapExceeded(f"flat enumeration on {M.n} elements exceeds the cap")
    return max(Fraction(popcount(F), M._rank(F)) for F in flats(M) if F)


def chromatic_by_partition_search(M: Matroid) -> int:
    """Least k for which M partitions into k independent sets, searching k = 1, 2, ..."""
    _require_loopless(M)
    k = 0 if M.n == 0 else 1
    while M.n and not partition_into_independent(M, k, stop_on_failure=True).ok:
        k += 1
    return k


# ---------------------------------------------------------------------------
# list colorings

class Decision(NamedTuple):
    ok: bool
    witness: int | None

    def __bool__(self):
        return self.ok


def _sizes(ell, n):
    if callable(ell):
        return [int(ell(e)) for e in range(n)]
    if isinstance(ell, dict):
        return [int(ell.get(e, 0)) for e in range(n)]
    if isinstance(ell, int):
        return [ell] * n
    return [int(x) for x in ell]


def seymour_deficiency(M, sizes, w, A) -> int:
    top = max((sizes[e] for e in bits_of(A)), default=0)
    total = 0
    for i in range(1, top + 1):
        total += M._rank(mask_of(e for e in bits_of(A) if sizes[e] >= i))
    return total - sum(w[e] for e in bits_of(A))


def decide_w_colorable(M: Matroid, ell, w=None, method="union") -> Decision:
    """Is M w-colorable from every list assignment with sizes ell?

    Decided by Σ_i r({e ∈ A : ℓ(e) ≥ i}) ≥ w(A) for all A.  The default route
    asks the union solver about M|Q_1, …, M|Q_d with Q_i = {e : ℓ(e) ≥ i}
    (its certificate is the witness); ``method="scan"`` checks every subset
    and reports the first violator in ascending size / lexicographic order.
    """
    n = M.n
    sizes = _sizes(ell, n)
    w = _weights(w, n)
    if method == "scan":
        if n > enum_cap(20):
            raise CapExceeded(f"subset scan on {n} elements exceeds the cap")
        for A in subsets_canonical(full(n), 1):
            if seymour_deficiency(M, sizes, w, A) < 0:
                return Decision(False, A)
        return Decision(True, None)
    d = max(sizes, default=0)
    if d == 0:
        bad = next((e for e in range(n) if w[e] > 0), None)
        return Decision(bad is None, None if bad is None else 1 << bad)
    Ms = [Restriction(M, mask_of(e for e in range(n) if sizes[e] >= i), keep_ground=True)
          for i in range(1, d + 1)]
    cert = matroid_union(Ms, w)
    if cert.ok:
        return Decision(True, None)
    return Decision(False, cert.violating_set)


@dataclass
class ProperColoring:
    assignment: dict      # element -> frozenset of colors
    weight: tuple

    def color_classes(self):
        out = {}
        for e, cs in self.assignment.items():
            for c in cs:
                out[c] = out.get(c, 0) | 1 << e
        return out

    def verify(self, M, lists=None) -> bool:
        if any(len(self.assignment.get(e, ())) != self.weight[e] for e in range(M.n)):
            return False
        if lists is not None:
            L = _lists(lists, M.n)
            if any(not set(self.assignment.get(e, ())) <= L[e] for e in range(M.n)):
                return False
        return all(M._indep(V) for V in self.color_classes().values())


def _lists(L, n):
    if isinstance(L, dict):
        out = [frozenset(int(c) for c in L.get(e, L.get(str(e), ()))) for e in range(n)]
    else:
        out = [frozenset(int(c) for c in x) for x in L]
    if len(out) != n:
        raise ValueError("need one list per element")
    if any(c < 1 for x in out for c in x):
        raise ValueError("colors are positive integers")
    return out


def canonical_lists(sizes):
    return [frozenset(range(1, s + 1)) for s in sizes]


def color_from_lists(M: Matroid, L, w=None) -> ProperColoring:
    """A proper w-coloring with every element's colors drawn from its list.

    One union instance over the restrictions M|Q_c, Q_c = {e : c ∈ L(e)}, each
    kept on the full ground set; the class chosen in M|Q_c becomes color c.
    """
    n = M.n
    L = _lists(L, n)
    w = _weights(w, n)
    colors = sorted(set().union(*L)) if L else []
    if not colors:
        if any(w):
            e = next(e for e in range(n) if w[e])
            raise InfeasibleLists("an element with positive weight has an empty list", 1 << e)
        return ProperColoring({}, tuple(w))
    Ms = [Restriction(M, mask_of(e for e in range(n) if c in L[e]), keep_ground=True) for c in colors]
    cert = matroid_union(Ms, w)
    if not cert.ok:
        raise InfeasibleLists(f"lists admit no coloring; violating set {elems(cert.violating_set)}",
                              cert.violating_set)
    assignment = {}
    for i, V in cert.covering.classes:
        for e in bits_of(V):
            assignment.setdefault(e, set()).add(colors[i])
    col = ProperColoring({e: frozenset(cs) for e, cs in assignment.items()}, tuple(w))
    if not col.verify(M, L):
        raise RuntimeError("coloring failed to re-verify")
    return col


# ---------------------------------------------------------------------------
# exchange properties through list coloring

def _exchange_by_coloring(M, X1, X2, A1):
    """A2 ⊆ X2 with (X1∖A1)∪A2 and (X2∖A2)∪A1 independent, for independent X1, X2.

    Contract X1∩X2; on the symmetric difference give A1 the list {1}, the rest
    of X1 the list {2} and X2 both colors; color 2 on X2 is the answer.
    """
    common = X1 & X2
    N = Contraction(M, common, keep_ground=True)
    L = [frozenset()] * M.n
    w = [0] * M.n
    for e in bits_of(X1 & ~X2):
        L[e] = frozenset([1]) if A1 >> e & 1 else frozenset([2])
        w[e] = 1
    for e in bits_of(X2 & ~X1):
        L[e] = frozenset([1, 2])
        w[e] = 1
    col = color_from_lists(N, L, w)
    C2 = col.color_classes().get(2, 0)
    return (C2 & X2) | (A1 & X2)


def _check_basis(M, B, name):
    if not M._indep(B) or popcount(B) != M.full_rank:
        raise ValueError(f"{name} is not a basis")


def _is_sym_pair(M, X1, X2, A1, A2, test):
    return test((X1 & ~A1) | A2) and test((X2 & ~A2) | A1)


def multiple_symmetric_exchange(M: Matroid, B1, B2, A1, lexmin=True, lex_cap=16):
    """A2 ⊆ B2 such that (B1∖A1)∪A2 and (B2∖A2)∪A1 are both bases.

    The list-coloring construction always produces a valid A2; with ``lexmin``
    the lexicographically least valid choice is returned instead (searched only
    when |B2∖B1| ≤ lex_cap).
    """
    B1, B2, A1 = as_mask(B1, M.n), as_mask(B2, M.n), as_mask(A1, M.n)
    _check_basis(M, B1, "B1")
    _check_basis(M, B2, "B2")
    if A1 & ~B1:
        raise ValueError("A1 is not a subset of B1")
    A2 = _exchange_by_coloring(M, B1, B2, A1)
    isb = lambda X: popcount(X) == M.full_rank and M._indep(X)
    if not _is_sym_pair(M, B1, B2, A1, A2, isb):
        raise RuntimeError("exchange failed to re-verify")
    if lexmin and popcount(B2 & ~B1) <= lex_cap:
        fixed = A1 & B2
        for c in combinations(elems(B2 & ~B1), popcount(A1 & ~B2)):
            cand = mask_of(c) | fixed
            if _is_sym_pair(M, B1, B2, A1, cand, isb):
                return cand
    return A2


def multiple_independent_exchange(M: Matroid, I1, I2, A1):
    """A2 ⊆ I2 such that (I1∖A1)∪A2 and (I2∖A2)∪A1 are independent."""
    I1, I2, A1 = as_mask(I1, M.n), as_mask(I2, M.n), as_mask(A1, M.n)
    if not (M._indep(I1) and M._indep(I2)):
        raise ValueError("inputs must be independent")
    if A1 & ~I1:
        raise ValueError("A1 is not a subset of I1")
    A2 = _exchange_by_coloring(M, I1, I2, A1)
    if not _is_sym_pair(M, I1, I2, A1, A2, M._indep):
        raise RuntimeError("exchange failed to re-verify")
    return A2


def partition_exchange(M: Matroid, A, B, parts, mode="replace_in_B"):
    """Split A = A_1 ⊔ … ⊔ A_k against a partition B = B_1 ⊔ … ⊔ B_k.

    replace_in_B: every (B∖B_i)∪A_i is a basis.
    replace_in_A: every (A∖A_i)∪B_i is a basis.
    """
    n = M.n
    A, B = as_mask(A, n), as_mask(B, n)
    parts = [as_mask(P, n) for P in parts]
    _check_basis(M, A, "A")
    _check_basis(M, B, "B")
    acc = 0
    for P in parts:
        if P & acc:
            raise ValueError("parts are not disjoint")
        acc |= P
    if acc != B:
        raise ValueError("parts do not partition B")
    k = len(parts)
    if mode not in ("replace_in_B", "replace_in_A"):
        raise ValueError(f"unknown mode {mode!r}")
    if k == 1:
        return [A]
    common = A & B
    N = Contraction(M, common, keep_ground=True)
    Ap = A & ~B
    everything = frozenset(range(1, k + 1))
    L = [frozenset()] * n
    w = [0] * n
    for i, P in enumerate(parts, start=1):
        for e in bits_of(P & ~A):
            if mode == "replace_in_B":
                L[e], w[e] = everything - {i}, k - 1
            else:
                L[e], w[e] = frozenset([i]), 1
    for e in bits_of(Ap):
        L[e] = everything
        w[e] = 1 if mode == "replace_in_B" else k - 1
    classes = color_from_lists(N, L, w).color_classes()
    out = []
    for i, P in enumerate(parts, start=1):
        C = classes.get(i, 0)
        Ai = (C & Ap) if mode == "replace_in_B" else (Ap & ~C)
        out.append(Ai | (P & A))
    for Ai, P in zip(out, parts):
        X = (B & ~P) | Ai if mode == "replace_in_B" else (A & ~Ai) | P
        if not (popcount(X) == M.full_rank and M._indep(X)):
            raise RuntimeError("partition exchange failed to re-verify")
    return out
