"""Pure simplicial complexes given by facets: extremality and vertex decomposability."""
from __future__ import annotations

from itertools import combinations

from ..errors import CapExceeded, MalformedSpec
from .kk import delta, shadow, squashed_key


def _norm(F):
    return tuple(sorted(set(int(v) for v in F)))


def maximal(sets):
    sets = sorted({_norm(S) for S in sets}, key=lambda S: (-len(S), S))
    out = []
    for S in sets:
        s = set(S)
        if not any(s <= set(T) for T in out):
            out.append(S)
    return sorted(out, key=lambda S: (len(S), S))


class Complex:
    """A simplicial complex given by its facets (an antichain of vertex sets)."""

    def __init__(self, facets, check=True):
        fs = sorted({_norm(F) for F in facets}, key=lambda S: (len(S), S))
        if not fs:
            fs = [()]                                   # {∅}
        if check:
            for A, B in combinations(fs, 2):
                if set(A) <= set(B) or set(B) <= set(A):
                    raise ValueError(f"facets {A} and {B} are nested")
        self.facets = fs

    @classmethod
    def generated_by(cls, sets):
        return cls(maximal(sets) or [()], check=False)

    @classmethod
    def from_matroid(cls, M):
        """The independence complex, elements relabeled 1..n."""
        return cls([tuple(e + 1 for e in range(M.n) if B >> e & 1) for B in M.bases()], check=False)

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict) or "facets" not in obj:
            raise MalformedSpec('complex must be {"vertices": n, "facets": [[...], ...]}')
        return cls(obj["facets"])

    def to_json(self):
        return {"vertices": len(self.vertices), "facets": [list(F) for F in self.facets]}

    @property
    def vertices(self):
        return sorted({v for F in self.facets for v in F})

    @property
    def dimension(self) -> int:
        return max(len(F) for F in self.facets) - 1

    @property
    def pure(self) -> bool:
        return len({len(F) for F in self.facets}) == 1

    def faces(self):
        out = set()
        for F in self.facets:
            for r in range(len(F) + 1):
                out.update(combinations(F, r))
        return out

    @property
    def f_vector(self):
        f = [0] * (self.dimension + 1)
        for S in self.faces():
            if S:
                f[len(S) - 1] += 1
        return tuple(f)

    def link(self, x):
        return Complex([tuple(v for v in F if v != x) for F in self.facets if x in F], check=False)

    def deletion(self, x):
        return Complex.generated_by([tuple(v for v in F if v != x) for F in self.facets])

    def key(self):
        return tuple(self.facets)

    def __eq__(self, other):
        return isinstance(other, Complex) and self.facets == other.facets

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Complex({self.facets})"


def is_extremal(D: Complex) -> bool:
    """f_{d−1} = |δ S_{d+1}(f_d)|: as few codimension-one faces as the facet count allows."""
    if not D.pure:
        raise ValueError("extremality is defined for pure complexes")
    k = len(D.facets[0])
    if k <= 1:
        return True
    return len(shadow(D.facets)) == delta(len(D.facets), k)


# shedding trees: "empty", ("vertex", v), or (x, link_tree, deletion_tree)

def is_vertex_decomposable(D: Complex, cap=16, memo=None):
    """(True, shedding tree) if D is pure and vertex decomposable, else (False, None)."""
    if len(D.vertices) > cap:
        raise CapExceeded(f"vertex decomposability search limited to {cap} vertices")
    memo = {} if memo is None else memo
    tree = _vd(D, memo)
    return tree is not None, tree


def _vd(D, memo):
    if not D.pure:
        return None
    if D.facets == [()]:
        return "empty"
    if len(D.facets) == 1 and len(D.facets[0]) == 1:
        return ("vertex", D.facets[0][0])
    key = D.key()
    if key in memo:
        return memo[key]
    memo[key] = None
    for x in D.vertices:
        lk = _vd(D.link(x), memo)
        if lk is None:
            continue
        dl = _vd(D.deletion(x), memo)
        if dl is not None:
            memo[key] = (x, lk, dl)
            break
    return memo[key]


def verify_shedding(D: Complex, tree) -> bool:
    """Re-check a shedding tree against the recursive definition."""
    if not D.pure:
        return False
    if tree == "empty":
        return D.facets == [()]
    if isinstance(tree, tuple) and tree[0] == "vertex":
        return D.facets == [(tree[1],)]
    if not (isinstance(tree, tuple) and len(tree) == 3):
        return False
    x, lk, dl = tree
    if x not in D.vertices:
        return False
    return verify_shedding(D.link(x), lk) and verify_shedding(D.deletion(x), dl)


def extremal_shedding_vertex(D: Complex):
    """A vertex whose link and deletion are both extremal, for extremal D of positive dimension.

    With B_i the facets avoiding i and C_i the facets through i with i removed,
    any i with |δB_i| > |C_i| works; if there is none the facets are all
    k-subsets of the vertex set and every vertex works.
    """
    if not D.pure or D.dimension < 1:
        raise ValueError("needs a pure complex of positive dimension")
    if not is_extremal(D):
        raise ValueError("complex is not extremal")
    U = D.facets
    V = D.vertices
    k = len(U[0])
    chosen = None
    if len(U) == len(list(combinations(V, k))):
        chosen = V[0]
    else:
        for i in V:
            B = [F for F in U if i not in F]
            C = [tuple(v for v in F if v != i) for F in U if i in F]
            if B and len(shadow(B)) > len(C):
                chosen = i
                break
    if chosen is None:
        raise RuntimeError("no vertex with a larger deletion shadow; facets are not extremal after all")
    if not (is_extremal(D.link(chosen)) and D.deletion(chosen).pure and is_extremal(D.deletion(chosen))):
        raise RuntimeError(f"vertex {chosen} failed to re-verify")
    return chosen


def extremal_decomposition(D: Complex):
    """A shedding tree built only from extremal_shedding_vertex choices."""
    if D.facets == [()]:
        return "empty"
    if D.dimension == 0:
        # points: shed them one by one
        if len(D.facets) == 1:
            return ("vertex", D.facets[0][0])
        x = D.facets[0][0]
        return (x, "empty", extremal_decomposition(D.deletion(x)))
    x = extremal_shedding_vertex(D)
    return (x, extremal_decomposition(D.link(x)), extremal_decomposition(D.deletion(x)))
