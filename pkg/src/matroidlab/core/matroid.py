"""Matroid oracles: a common interface and the concrete backends.

Every oracle answers independence queries on integer masks over its ground
set {0, ..., n-1}. Rank, closure, bases and circuits are derived from the
independence oracle unless a backend has something cheaper.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from ..errors import CapExceeded, MalformedSpec, UniverseMismatch, enum_cap
from .elements import MAX_UNIVERSE, as_mask, bits_of, elems, full, mask_of, popcount
from .linalg import is_prime, parse_rational, rank_mod_p, rank_rational

_CACHE_LIMIT = 1 << 16


class Matroid:
    kind = "abstract"

    def __init__(self, n: int, ground_cap: int | None = MAX_UNIVERSE):
        if n < 0:
            raise MalformedSpec("negative ground set size")
        if ground_cap is not None and n > ground_cap:
            raise MalformedSpec(f"ground set of size {n} exceeds the cap of {ground_cap}")
        self.n = n
        self.ground = full(n)
        self._full_rank = None

    # -- the oracle -------------------------------------------------------
    def _indep(self, m: int) -> bool:
        raise NotImplementedError

    def _extends(self, I: int, e: int) -> bool:
        """Is I + e independent, given that I is?"""
        return self._indep(I | 1 << e)

    def _greedy(self, m: int) -> int:
        I = 0
        for e in bits_of(m):
            if self._extends(I, e):
                I |= 1 << e
        return I

    def _rank(self, m: int) -> int:
        return popcount(self._greedy(m))

    # -- public, mask in / mask out ----------------------------------------
    def mask(self, A) -> int:
        return as_mask(A, self.n)

    def is_independent(self, A) -> bool:
        return self._indep(as_mask(A, self.n))

    def rank(self, A=None) -> int:
        if A is None:
            return self.full_rank
        return self._rank(as_mask(A, self.n))

    @property
    def full_rank(self) -> int:
        if self._full_rank is None:
            self._full_rank = self._rank(self.ground)
        return self._full_rank

    def basis_of(self, A) -> int:
        """Greedy maximal independent subset of A (ascending element order)."""
        return self._greedy(as_mask(A, self.n))

    def closure(self, A) -> int:
        m = as_mask(A, self.n)
        I = self._greedy(m)
        cl = m
        for e in bits_of(self.ground & ~m):
            if not self._extends(I, e):
                cl |= 1 << e
        return cl

    def is_basis(self, A) -> bool:
        m = as_mask(A, self.n)
        return popcount(m) == self.full_rank and self._indep(m)

    def is_circuit(self, A) -> bool:
        m = as_mask(A, self.n)
        if m == 0 or self._indep(m):
            return False
        return all(self._indep(m & ~(1 << e)) for e in bits_of(m))

    def loops(self) -> int:
        return mask_of(e for e in range(self.n) if not self._indep(1 << e))

    def is_loopless(self) -> bool:
        return self.loops() == 0

    def independent_sets(self, within=None):
        """Every independent subset of ``within`` (default E), by depth-first extension."""
        m = self.ground if within is None else as_mask(within, self.n)
        es = elems(m)

        def rec(I, start):
            yield I
            for t in range(start, len(es)):
                e = es[t]
                if self._extends(I, e):
                    yield from rec(I | 1 << e, t + 1)

        yield from rec(0, 0)

    def bases(self, cap=None):
        cap = enum_cap(20) if cap is None else cap
        if self.n > cap:
            raise CapExceeded(f"basis enumeration on {self.n} elements exceeds cap {cap}")
        r = self.full_rank
        es = elems(self.ground)
        out = []

        def rec(I, size, start):
            if size == r:
                out.append(I)
                return
            for t in range(start, len(es) - (r - size) + 1):
                e = es[t]
                if self._extends(I, e):
                    rec(I | 1 << e, size + 1, t + 1)

        rec(0, 0, 0)
        return out

    def circuits(self, cap=None):
        """All circuits as masks, sorted lexicographically by their elements."""
        cap = enum_cap(20) if cap is None else cap
        if self.n > cap:
            raise CapExceeded(f"circuit enumeration on {self.n} elements exceeds cap {cap}")
        found = []
        # a circuit C arises exactly once as I + e with I = C - max(C) independent
        for I in self.independent_sets():
            top = I.bit_length()
            for e in range(top, self.n):
                if self._extends(I, e):
                    continue
                C = I | 1 << e
                if all(self._indep(C & ~(1 << f)) for f in bits_of(I)):
                    found.append(C)
        found.sort(key=elems)
        return found

    # -- description ---------------------------------------------------------
    def spec(self) -> dict:
        raise NotImplementedError

    def __repr__(self):
        return f"<{type(self).__name__} n={self.n} rank={self.full_rank}>"


class _Cached(Matroid):
    """Backends with costly queries memoise independence per instance."""

    def __init__(self, n, ground_cap=MAX_UNIVERSE):
        super().__init__(n, ground_cap)
        self._memo = {}

    def _indep(self, m):
        r = self._memo.get(m)
        if r is None:
            if len(self._memo) > _CACHE_LIMIT:
                self._memo.clear()
            r = self._memo[m] = self._compute_indep(m)
        return r

    def _compute_indep(self, m):
        raise NotImplementedError


# ---------------------------------------------------------------------------
# concrete backends

class Uniform(Matroid):
    kind = "uniform"

    def __init__(self, n: int, b: int):
        super().__init__(n)
        if not 0 <= b:
            raise MalformedSpec("uniform matroid bound must be nonnegative")
        self.b = b

    def _indep(self, m):
        return popcount(m) <= self.b

    def _extends(self, I, e):
        return popcount(I) < self.b

    def _rank(self, m):
        return min(popcount(m), self.b)

    def spec(self):
        return {"kind": "uniform", "n": self.n, "rank": self.b}


class Graphic(Matroid):
    """Cycle matroid of a multigraph; element i is edge i."""

    kind = "graphic"

    def __init__(self, vertices: int, edges):
        edges = [tuple(int(x) for x in e) for e in edges]
        super().__init__(len(edges))
        for u, v in edges:
            if not (0 <= u < vertices and 0 <= v < vertices):
                raise MalformedSpec(f"edge ({u},{v}) uses a vertex outside 0..{vertices - 1}")
        self.vertices = vertices
        self.edges = edges

    def _forest(self, m, stop_on_cycle):
        parent = list(range(self.vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        size = 0
        for e in bits_of(m):
            u, v = self.edges[e]
            a, b = find(u), find(v)
            if a == b:
                if stop_on_cycle:
                    return -1
                continue
            parent[a] = b
            size += 1
        return size

    def _indep(self, m):
        return self._forest(m, True) >= 0

    def _rank(self, m):
        return self._forest(m, False)

    def spec(self):
        return {"kind": "graphic", "vertices": self.vertices, "edges": [list(e) for e in self.edges]}


class LinearGF(_Cached):
    """Column matroid of a matrix over GF(p); element j is column j."""

    kind = "linear_gf"

    def __init__(self, p: int, matrix):
        if not is_prime(p):
            raise MalformedSpec(f"{p} is not prime")
        rows = [[int(x) for x in row] for row in matrix]
        width = len(rows[0]) if rows else 0
        if any(len(r) != width for r in rows):
            raise MalformedSpec("matrix rows have unequal length")
        super().__init__(width)
        self.p = p
        self.matrix = [[x % p for x in r] for r in rows]
        self.cols = [tuple(r[j] for r in self.matrix) for j in range(width)]
        if p == 2:
            self._bitcols = [mask_of(i for i, x in enumerate(c) if x) for c in self.cols]

    def _compute_indep(self, m):
        return self._colrank(m) == popcount(m)

    def _colrank(self, m):
        if self.p == 2:
            basis = []
            for j in bits_of(m):
                v = self._bitcols[j]
                for b in basis:
                    v = min(v, v ^ b)
                if v:
                    basis.append(v)
            return len(basis)
        return rank_mod_p([self.cols[j] for j in bits_of(m)], self.p)

    def _rank(self, m):
        return self._colrank(m)

    def spec(self):
        return {"kind": "linear_gf", "p": self.p, "matrix": [list(r) for r in self.matrix]}


class LinearQ(_Cached):
    """Column matroid of a rational matrix, exact arithmetic."""

    kind = "linear_q"

    def __init__(self, matrix):
        rows = [[parse_rational(x) for x in row] for row in matrix]
        width = len(rows[0]) if rows else 0
        if any(len(r) != width for r in rows):
            raise MalformedSpec("matrix rows have unequal length")
        super().__init__(width)
        self.matrix = rows
        self.cols = [tuple(r[j] for r in rows) for j in range(width)]

    def _compute_indep(self, m):
        return self._rank(m) == popcount(m)

    def _rank(self, m):
        return rank_rational([self.cols[j] for j in bits_of(m)])

    def spec(self):
        def enc(x: Fraction):
            return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return {"kind": "linear_q", "matrix": [[enc(x) for x in r] for r in self.matrix]}


class Transversal(Matroid):
    """Partial transversals of a set family, via augmenting-path matching."""

    kind = "transversal"

    def __init__(self, n: int, family, ground_cap=MAX_UNIVERSE, spec=None):
        super().__init__(n, ground_cap)
        self.family = [tuple(sorted(set(int(x) for x in A))) for A in family]
        self.adj = [[] for _ in range(n)]
        for j, A in enumerate(self.family):
            for e in A:
                if not 0 <= e < n:
                    raise MalformedSpec(f"family member uses element {e} outside 0..{n - 1}")
                self.adj[e].append(j)
        self._spec = spec
        self._matchings = {0: {}}

    def _augment(self, match, e):
        """Try to add e to a matching (set index -> element), in place."""
        seen = set()
        adj = self.adj

        def go(x):
            for j in adj[x]:
                if j in seen:
                    continue
                seen.add(j)
                y = match.get(j)
                if y is None or go(y):
                    match[j] = x
                    return True
            return False

        return go(e)

    def _matching(self, m):
        """A matching saturating m if one exists, else None; cached for independent masks."""
        got = self._matchings.get(m, False)
        if got is not False:
            return got
        match = {}
        for e in bits_of(m):
            if not self._augment(match, e):
                match = None
                break
        if len(self._matchings) > _CACHE_LIMIT:
            self._matchings.clear()
            self._matchings[0] = {}
        self._matchings[m] = match
        return match

    def _indep(self, m):
        return self._matching(m) is not None

    def _extends(self, I, e):
        key = I | 1 << e
        got = self._matchings.get(key, False)
        if got is not False:
            return got is not None
        base = self._matching(I)
        if base is None:
            return self._indep(key)
        match = dict(base)
        ok = self._augment(match, e)
        self._matchings[key] = match if ok else None
        return ok

    def _rank(self, m):
        match = {}
        size = 0
        for e in bits_of(m):
            if self._augment(match, e):
                size += 1
        return size

    def spec(self):
        if self._spec is not None:
            return dict(self._spec)
        return {"kind": "transversal", "n": self.n, "family": [list(A) for A in self.family]}


class Laminar(Matroid):
    kind = "laminar"

    def __init__(self, n: int, family, capacities):
        super().__init__(n)
        fam = [tuple(sorted(set(int(x) for x in F))) for F in family]
        if len(fam) != len(capacities):
            raise MalformedSpec("laminar family and capacities differ in length")
        masks = []
        for F in fam:
            for e in F:
                if not 0 <= e < n:
                    raise MalformedSpec(f"laminar member uses element {e} outside 0..{n - 1}")
            masks.append(mask_of(F))
        for a, b in combinations(masks, 2):
            inter = a & b
            if inter and inter != a and inter != b:
                raise MalformedSpec(f"family is not laminar: {elems(a)} and {elems(b)} cross")
        caps = [int(c) for c in capacities]
        if any(c < 0 for c in caps):
            raise MalformedSpec("capacities must be nonnegative")
        self.family = fam
        self.masks = masks
        self.caps = caps

    def _indep(self, m):
        return all(popcount(m & F) <= c for F, c in zip(self.masks, self.caps))

    def spec(self):
        return {"kind": "laminar", "n": self.n, "family": [list(F) for F in self.family],
                "capacities": list(self.caps)}


class Explicit(Matroid):
    """Independence given by an explicit list: bases (downward closure taken) or independent sets.

    Nothing is assumed about the list, so this backend is also how non-matroids
    are fed to the axiom checker.
    """

    def __init__(self, n: int, bases=None, independent=None):
        super().__init__(n)
        if (bases is None) == (independent is None):
            raise MalformedSpec("give exactly one of bases / independent")
        if bases is not None:
            self.kind = "explicit_bases"
            self.members = sorted({as_mask(list(B), n) for B in bases}, key=elems)
            self._family = None
        else:
            self.kind = "explicit_independent"
            self.members = sorted({as_mask(list(B), n) for B in independent}, key=elems)
            self._family = set(self.members)

    def _indep(self, m):
        if self._family is not None:
            return m in self._family
        return any(m & ~B == 0 for B in self.members)

    def spec(self):
        key = "bases" if self._family is None else "independent"
        return {"kind": self.kind, "n": self.n, key: [list(elems(B)) for B in self.members]}


# ---------------------------------------------------------------------------
# derived oracles

class _Reindexed(Matroid):
    """Helper for minors on a sub-ground-set: new index j stands for old element origin[j]."""

    def _setup_map(self, keep):
        self.origin = elems(keep)

    def _up(self, m):
        o = self.origin
        out = 0
        for j in bits_of(m):
            out |= 1 << o[j]
        return out

    def down(self, m):
        """Translate a mask over the parent into this minor's indices (dropping outsiders)."""
        pos = {e: j for j, e in enumerate(self.origin)}
        return mask_of(pos[e] for e in bits_of(m) if e in pos)

    def up(self, A) -> int:
        return self._up(as_mask(A, self.n))


class Restriction(_Reindexed):
    kind = "restrict"

    def __init__(self, M: Matroid, F, keep_ground: bool = False):
        Fm = as_mask(F, M.n)
        self.parent = M
        self.F = Fm
        self.keep_ground = keep_ground
        if keep_ground:
            Matroid.__init__(self, M.n, None)
            self.origin = tuple(range(M.n))
        else:
            Matroid.__init__(self, popcount(Fm), None)
            self._setup_map(Fm)

    def _indep(self, m):
        if self.keep_ground:
            return m & ~self.F == 0 and self.parent._indep(m)
        return self.parent._indep(self._up(m))

    def _extends(self, I, e):
        if self.keep_ground:
            return bool(self.F >> e & 1) and self.parent._extends(I, e)
        return self.parent._extends(self._up(I), self.origin[e])

    def _rank(self, m):
        if self.keep_ground:
            return self.parent._rank(m & self.F)
        return self.parent._rank(self._up(m))

    def spec(self):
        d = {"kind": "restrict", "of": self.parent.spec(), "set": list(elems(self.F))}
        if self.keep_ground:
            d["keep_ground"] = True
        return d


class Contraction(_Reindexed):
    """M / F.  With keep_ground the elements of F stay as loops."""

    kind = "contract"

    def __init__(self, M: Matroid, F, keep_ground: bool = False):
        Fm = as_mask(F, M.n)
        self.parent = M
        self.F = Fm
        self.keep_ground = keep_ground
        self.IF = M._greedy(Fm)
        self.rF = popcount(self.IF)
        if keep_ground:
            Matroid.__init__(self, M.n, None)
            self.origin = tuple(range(M.n))
        else:
            Matroid.__init__(self, popcount(M.ground & ~Fm), None)
            self._setup_map(M.ground & ~Fm)

    def _lift(self, m):
        return m if self.keep_ground else self._up(m)

    def _indep(self, m):
        up = self._lift(m)
        if up & self.F:
            return False
        return self.parent._indep(up | self.IF)

    def _extends(self, I, e):
        up = self._lift(I)
        x = self.origin[e]
        if self.F >> x & 1:
            return False
        return self.parent._extends(up | self.IF, x)

    def _rank(self, m):
        up = self._lift(m)
        return self.parent._rank(up | self.F) - self.rF

    def spec(self):
        d = {"kind": "contract", "of": self.parent.spec(), "set": list(elems(self.F))}
        if self.keep_ground:
            d["keep_ground"] = True
        return d


class Dual(Matroid):
    kind = "dual"

    def __init__(self, M: Matroid):
        super().__init__(M.n, None)
        self.parent = M

    def _indep(self, m):
        return self.parent._rank(self.ground & ~m) == self.parent.full_rank

    def _rank(self, m):
        P = self.parent
        return popcount(m) - P.full_rank + P._rank(self.ground & ~m)

    def spec(self):
        return {"kind": "dual", "of": self.parent.spec()}


class DirectSum(Matroid):
    kind = "direct_sum"

    def __init__(self, parts):
        parts = list(parts)
        super().__init__(sum(P.n for P in parts), None)
        self.parts = parts
        self.offsets = []
        off = 0
        for P in parts:
            self.offsets.append(off)
            off += P.n

    def _split(self, m):
        for P, off in zip(self.parts, self.offsets):
            yield P, (m >> off) & P.ground

    def _indep(self, m):
        return all(P._indep(x) for P, x in self._split(m))

    def _extends(self, I, e):
        for P, off in zip(self.parts, self.offsets):
            if off <= e < off + P.n:
                return P._extends((I >> off) & P.ground, e - off)
        raise UniverseMismatch(f"element {e} outside the direct sum")

    def _rank(self, m):
        return sum(P._rank(x) for P, x in self._split(m))

    def spec(self):
        return {"kind": "direct_sum", "parts": [P.spec() for P in self.parts]}


class BlowUp(Matroid):
    """Replace element e by copies[e] pairwise parallel copies (0 deletes it).

    Copies of e are consecutive; ``origin[j]`` is the element copy j came from.
    """

    kind = "blowup"

    def __init__(self, M: Matroid, copies, ground_cap=MAX_UNIVERSE):
        copies = [int(c) for c in copies]
        if len(copies) != M.n or any(c < 0 for c in copies):
            raise MalformedSpec("blow-up needs one nonnegative copy count per element")
        super().__init__(sum(copies), ground_cap)
        self.parent = M
        self.copies = copies
        self.origin = tuple(e for e, c in enumerate(copies) for _ in range(c))
        self.first = []
        t = 0
        for c in copies:
            self.first.append(t)
            t += c

    def _collapse(self, m):
        out = 0
        for j in bits_of(m):
            b = 1 << self.origin[j]
            if out & b:
                return None
            out |= b
        return out

    def _indep(self, m):
        c = self._collapse(m)
        return c is not None and self.parent._indep(c)

    def _extends(self, I, e):
        c = self._collapse(I)
        x = self.origin[e]
        if c is None or c >> x & 1:
            return False
        return self.parent._extends(c, x)

    def _rank(self, m):
        out = 0
        for j in bits_of(m):
            out |= 1 << self.origin[j]
        return self.parent._rank(out)

    def spec(self):
        return {"kind": "blowup", "of": self.parent.spec(), "copies": list(self.copies)}


class Join(_Cached):
    """M_1 ∨ ... ∨ M_k with r(A) = min over B ⊆ A of Σ r_i(B) + |A∖B|."""

    kind = "join"

    def __init__(self, parts, cap=None):
        parts = list(parts)
        if not parts:
            raise MalformedSpec("join of no matroids")
        n = parts[0].n
        if any(P.n != n for P in parts):
            raise UniverseMismatch("join parts must share a ground set")
        super().__init__(n, None)
        self.parts = parts
        self.cap = enum_cap(20) if cap is None else cap

    def _rank(self, m):
        size = popcount(m)
        if size > self.cap:
            raise CapExceeded(f"join rank on {size} elements exceeds cap {self.cap}")
        best = size
        B = m
        while True:
            v = sum(P._rank(B) for P in self.parts) + size - popcount(B)
            if v < best:
                best = v
            if B == 0:
                break
            B = (B - 1) & m
        return best

    def _compute_indep(self, m):
        return self._rank(m) == popcount(m)

    def spec(self):
        return {"kind": "join", "parts": [P.spec() for P in self.parts]}
