"""Multisets of words with rational multiplicities, and multiset-valued maps."""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Mapping


class WordMultiset:
    """Words with nonnegative rational multiplicities; zero entries are dropped."""

    __slots__ = ("_mult",)

    def __init__(self, mult: Mapping | Iterable | None = None):
        items = mult.items() if isinstance(mult, Mapping) else ((w, 1) for w in (mult or ()))
        clean = {}
        for w, c in items:
            c = Fraction(c)
            if c < 0:
                raise ValueError(f"negative multiplicity {c} for {w}")
            if c:
                w = tuple(w)
                clean[w] = clean.get(w, 0) + c
        self._mult = clean

    def __getitem__(self, word) -> Fraction:
        return self._mult.get(tuple(word), Fraction(0))

    def __contains__(self, word) -> bool:
        return tuple(word) in self._mult

    def __iter__(self):
        return iter(sorted(self._mult))

    def __len__(self) -> int:
        return len(self._mult)

    def items(self):
        return sorted(self._mult.items())

    def support(self) -> set:
        return set(self._mult)

    def norm(self) -> Fraction:
        return sum(self._mult.values(), Fraction(0))

    def __add__(self, other: "WordMultiset") -> "WordMultiset":
        """Disjoint union: multiplicities add."""
        out = defaultdict(Fraction, self._mult)
        for w, c in other._mult.items():
            out[w] += c
        return WordMultiset(out)

    def __sub__(self, other: "WordMultiset") -> "WordMultiset":
        """Difference, clamped at zero."""
        return WordMultiset({w: max(c - other[w], 0) for w, c in self._mult.items()})

    def __and__(self, other: "WordMultiset") -> "WordMultiset":
        """Pointwise minimum."""
        return WordMultiset({w: min(c, other[w]) for w, c in self._mult.items()})

    def __mul__(self, r) -> "WordMultiset":
        r = Fraction(r)
        if r < 0:
            raise ValueError("cannot scale a multiset by a negative number")
        return WordMultiset({w: c * r for w, c in self._mult.items()})

    __rmul__ = __mul__

    def __le__(self, other: "WordMultiset") -> bool:
        return all(c <= other[w] for w, c in self._mult.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, WordMultiset):
            return NotImplemented
        return self._mult == other._mult

    def __hash__(self):
        return hash(frozenset(self._mult.items()))

    def filter(self, predicate) -> "WordMultiset":
        return WordMultiset({w: c for w, c in self._mult.items() if predicate(w)})

    def __repr__(self) -> str:
        body = ", ".join(f"{''.join(map(str, w))}: {c}" for w, c in self.items())
        return f"WordMultiset({{{body}}})"


class MultiMap:
    """Assigns to each source word a multiset of target words."""

    def __init__(self, assignment: Mapping | None = None):
        self.assignment = {tuple(w): m for w, m in (assignment or {}).items()}

    def __call__(self, word) -> WordMultiset:
        return self.assignment[tuple(word)]

    def image(self, source: WordMultiset) -> WordMultiset:
        """Σ_a m_A(a) · f(a)."""
        out = defaultdict(Fraction)
        for w, c in source.items():
            for target, d in self.assignment[w].items():
                out[target] += c * d
        return WordMultiset(out)

    def is_multi_injection(self, source: WordMultiset, target: WordMultiset) -> bool:
        return self.image(source) <= target

    def violations(self, source: WordMultiset, target: WordMultiset) -> list:
        img = self.image(source)
        return [(w, c, target[w]) for w, c in img.items() if c > target[w]]
