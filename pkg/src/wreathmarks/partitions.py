"""Decorated integer partitions and indexed compositions.

A decorated partition is a finite-support map (decoration, size>=1) -> multiplicity;
decorations are conjugacy-class indices relative to some class table (which the
partition itself does not carry). Integer partitions are the special case where
every decoration is 0, matching Conj(e) having a single class.
"""

from __future__ import annotations

import math
from typing import Callable, Iterable


class DecoratedPartition:
    """Immutable; parts held sorted by (decoration, size) with multiplicity > 0."""

    __slots__ = ("parts", "_hash")

    def __init__(self, parts: Iterable = ()):
        acc: dict = {}
        for (dec, size), mult in parts:
            if size < 1:
                raise ValueError("part sizes must be >= 1")
            if mult < 0:
                raise ValueError("multiplicities must be >= 0")
            if mult:
                key = (dec, size)
                acc[key] = acc.get(key, 0) + mult
        self.parts = tuple(sorted(acc.items()))
        self._hash = hash(self.parts)

    @classmethod
    def from_part(cls, dec, size: int, mult: int = 1) -> "DecoratedPartition":
        return cls([((dec, size), mult)])

    @classmethod
    def empty(cls) -> "DecoratedPartition":
        return cls()

    @classmethod
    def from_sizes(cls, sizes: Iterable[int], dec=0) -> "DecoratedPartition":
        """An integer partition (all parts decorated by `dec`)."""
        acc: dict = {}
        for s in sizes:
            acc[s] = acc.get(s, 0) + 1
        return cls([((dec, s), m) for s, m in acc.items()])

    def items(self):
        return self.parts

    def multiplicity(self, dec, size: int) -> int:
        for (d, s), m in self.parts:
            if (d, s) == (dec, size):
                return m
        return 0

    def __add__(self, other: "DecoratedPartition") -> "DecoratedPartition":
        return DecoratedPartition(self.parts + other.parts)

    def __bool__(self):
        return bool(self.parts)

    @property
    def length(self) -> int:
        """Number of parts |lambda|."""
        return sum(m for _, m in self.parts)

    @property
    def size(self) -> int:
        """Sum of part sizes ||lambda||."""
        return sum(m * s for (_, s), m in self.parts)

    def factorial(self) -> int:
        """lambda! = product of multiplicity factorials."""
        out = 1
        for _, m in self.parts:
            out *= math.factorial(m)
        return out

    def multifactorial(self) -> int:
        """lambda!_mf = product of (size!)^multiplicity."""
        out = 1
        for (_, s), m in self.parts:
            out *= math.factorial(s) ** m
        return out

    def pushforward(self, f: Callable) -> "DecoratedPartition":
        """Apply f to decorations, fiber-summing multiplicities."""
        return DecoratedPartition([((f(d), s), m) for (d, s), m in self.parts])

    def undecorate(self) -> "DecoratedPartition":
        """lambda^sharp: forget decorations (all pushed to 0)."""
        return self.pushforward(lambda d: 0)

    def expand(self) -> list:
        """The multiset of parts as an explicit sorted list of (dec, size)."""
        out = []
        for (d, s), m in self.parts:
            out.extend([(d, s)] * m)
        return out

    def __eq__(self, other):
        return isinstance(other, DecoratedPartition) and self.parts == other.parts

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (self.size, self.length, self.parts)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if not self.parts:
            return "()"
        return "+".join((f"{m}·({d},{s})" if m > 1 else f"({d},{s})")
                        for (d, s), m in self.parts)


class Composition:
    """An ordered sequence of (decoration, size) parts."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable = ()):
        self.entries = tuple((d, int(s)) for d, s in entries)
        if any(s < 1 for _, s in self.entries):
            raise ValueError("part sizes must be >= 1")

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __add__(self, other: "Composition") -> "Composition":
        return Composition(self.entries + other.entries)

    @property
    def size(self) -> int:
        return sum(s for _, s in self.entries)

    def sizes(self) -> tuple:
        return tuple(s for _, s in self.entries)

    def decorations(self) -> tuple:
        return tuple(d for d, _ in self.entries)

    def un_index(self) -> DecoratedPartition:
        return DecoratedPartition([((d, s), 1) for d, s in self.entries])

    def pushforward(self, f: Callable) -> "Composition":
        return Composition([(f(d), s) for d, s in self.entries])

    def restrict(self, indices: Iterable[int]) -> "Composition":
        return Composition([self.entries[i] for i in indices])

    def __eq__(self, other):
        return isinstance(other, Composition) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "c" + repr(list(self.entries))


def canonical_composition(la: DecoratedPartition) -> Composition:
    """The composition listing lambda's parts in canonical (dec, size) order."""
    return Composition(la.expand())


def enumerate_partitions(num_decorations: int, n: int) -> list:
    """All decorated partitions of size n with decorations in range(num_decorations),
    in a fixed deterministic order."""
    items = [(d, s) for d in range(num_decorations) for s in range(1, n + 1)]
    out = []

    def rec(idx: int, remaining: int, acc: list):
        if remaining == 0:
            out.append(DecoratedPartition(list(acc)))
            return
        if idx == len(items):
            return
        d, s = items[idx]
        max_mult = remaining // s
        for m in range(max_mult + 1):
            if m:
                acc.append(((d, s), m))
            rec(idx + 1, remaining - m * s, acc)
            if m:
                acc.pop()

    rec(0, n, [])
    return sorted(out, key=DecoratedPartition.sort_key)


def enumerate_integer_partitions(n: int) -> list:
    return enumerate_partitions(1, n)


def compositions_of(la: DecoratedPartition) -> list:
    """All orderings of lambda's parts (distinct permutations of the multiset)."""
    pool = la.expand()
    out = []

    def rec(remaining: list, acc: list):
        if not remaining:
            out.append(Composition(list(acc)))
            return
        prev = None
        for i, part in enumerate(remaining):
            if part == prev:
                continue
            prev = part
            acc.append(part)
            rec(remaining[:i] + remaining[i + 1:], acc)
            acc.pop()

    rec(pool, [])
    return out


def compositions_matching_sizes(la: DecoratedPartition, sizes: tuple) -> list:
    """Compositions of lambda whose size sequence equals `sizes` exactly."""
    pool = la.expand()
    out = []

    def rec(remaining: list, pos: int, acc: list):
        if pos == len(sizes):
            if not remaining:
                out.append(Composition(list(acc)))
            return
        prev = None
        for i, part in enumerate(remaining):
            if part == prev:
                continue
            prev = part
            if part[1] != sizes[pos]:
                continue
            acc.append(part)
            rec(remaining[:i] + remaining[i + 1:], pos + 1, acc)
            acc.pop()

    if len(pool) == len(sizes):
        rec(pool, 0, [])
    return out


def count_compositions(la: DecoratedPartition) -> int:
    """|C(lambda)| = |lambda|! / lambda!."""
    return math.factorial(la.length) // la.factorial()


def multinomial(la: DecoratedPartition) -> int:
    """||lambda||! / lambda!_mf, always an integer."""
    num = math.factorial(la.size)
    den = la.multifactorial()
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"multinomial of {la!r} not integral")
    return q
