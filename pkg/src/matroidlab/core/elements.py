"""Subsets of a small indexed ground set, stored as integer bitmasks.

Algorithms work on plain ``int`` masks; ``ElementSet`` is the checked
wrapper handed across the public API.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

from ..errors import UniverseMismatch

MAX_UNIVERSE = 64


def bits_of(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def elems(mask: int) -> tuple:
    return tuple(bits_of(mask))


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(items: Iterable[int]) -> int:
    m = 0
    for e in items:
        m |= 1 << e
    return m


def full(n: int) -> int:
    return (1 << n) - 1


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` (including 0 and mask), in no particular order."""
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def subsets_canonical(mask: int, min_size: int = 0, max_size: int | None = None) -> Iterator[int]:
    """Submasks by ascending popcount, then lexicographically by sorted elements."""
    es = elems(mask)
    hi = len(es) if max_size is None else min(max_size, len(es))
    for k in range(min_size, hi + 1):
        for c in combinations(es, k):
            yield mask_of(c)


def lex_key(mask: int) -> tuple:
    return elems(mask)


class ElementSet:
    """An immutable subset of {0, ..., universe_size - 1}."""

    __slots__ = ("bits", "universe_size")

    def __init__(self, bits: int = 0, universe_size: int = MAX_UNIVERSE):
        if not 0 <= universe_size <= MAX_UNIVERSE:
            raise UniverseMismatch(f"universe size {universe_size} outside 0..{MAX_UNIVERSE}")
        if bits < 0 or bits >> universe_size:
            raise UniverseMismatch(f"bits {bits:#x} outside universe of size {universe_size}")
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "universe_size", universe_size)

    def __setattr__(self, *_):
        raise AttributeError("ElementSet is immutable")

    @classmethod
    def of(cls, items: Iterable[int], universe_size: int) -> "ElementSet":
        items = list(items)
        for e in items:
            if not 0 <= e < universe_size:
                raise UniverseMismatch(f"element {e} outside universe of size {universe_size}")
        return cls(mask_of(items), universe_size)

    def _check(self, other: "ElementSet") -> int:
        if isinstance(other, ElementSet):
            if other.universe_size != self.universe_size:
                raise UniverseMismatch("element sets over different universes")
            return other.bits
        return ElementSet.of(other, self.universe_size).bits

    def __or__(self, other):
        return ElementSet(self.bits | self._check(other), self.universe_size)

    def __and__(self, other):
        return ElementSet(self.bits & self._check(other), self.universe_size)

    def __sub__(self, other):
        return ElementSet(self.bits & ~self._check(other), self.universe_size)

    def __xor__(self, other):
        return ElementSet(self.bits ^ self._check(other), self.universe_size)

    def complement(self) -> "ElementSet":
        return ElementSet(full(self.universe_size) & ~self.bits, self.universe_size)

    def issubset(self, other) -> bool:
        return self.bits & ~self._check(other) == 0

    def __le__(self, other):
        return self.issubset(other)

    def __iter__(self):
        return bits_of(self.bits)

    def __len__(self):
        return popcount(self.bits)

    def __contains__(self, e):
        return 0 <= e < self.universe_size and bool(self.bits >> e & 1)

    def __eq__(self, other):
        if isinstance(other, ElementSet):
            return self.bits == other.bits and self.universe_size == other.universe_size
        try:
            return set(self) == set(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.bits, self.universe_size))

    def __lt__(self, other):
        return lex_key(self.bits) < lex_key(self._check(other))

    def __int__(self):
        return self.bits

    def __index__(self):
        return self.bits

    def __repr__(self):
        return "{" + ",".join(map(str, self)) + "}"

    def tolist(self) -> list:
        return list(self)


def as_mask(A, n: int) -> int:
    """Coerce an ElementSet, int mask or iterable of indices to a mask over n elements."""
    if type(A) is int:
        m = A
    elif isinstance(A, ElementSet):
        if A.universe_size != n:
            raise UniverseMismatch(f"set over universe {A.universe_size}, matroid has {n} elements")
        m = A.bits
    else:
        m = 0
        for e in A:
            if not 0 <= e < n:
                raise UniverseMismatch(f"element {e} outside ground set of size {n}")
            m |= 1 << e
        return m
    if m < 0 or m >> n:
        raise UniverseMismatch(f"mask {m:#x} outside ground set of size {n}")
    return m
