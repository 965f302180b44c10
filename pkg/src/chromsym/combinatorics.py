"""Compositions, partitions, ribbons, words and tableaux.

Compositions, partitions and words are plain tuples of positive integers.
That keeps them hashable and cheap to use as dictionary keys, which is what
every expansion routine in the package does with them.

Shapes use the French convention: row 1 is the bottom row, columns are
counted from the left, and a box is the pair ``(row, column)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Iterable, Iterator, Mapping, Sequence

Composition = tuple
Partition = tuple
Word = tuple


# ---------------------------------------------------------------------------
# compositions


def composition(parts: Iterable[int]) -> Composition:
    """Validate and freeze a composition; zero parts are dropped."""
    out = tuple(int(p) for p in parts if p != 0)
    if any(p < 0 for p in out):
        raise ValueError(f"negative part in {out}")
    return out


def sign(comp: Sequence[int]) -> int:
    """(-1) ** (|I| - len(I))."""
    return -1 if (sum(comp) - len(comp)) % 2 else 1


def m_power(comp: Sequence[int]) -> int:
    """2 ** (number of parts equal to 1)."""
    return 2 ** sum(1 for p in comp if p == 1)


def multiplicity(seq: Sequence[int], value: int) -> int:
    return sum(1 for p in seq if p == value)


def reverse(comp: Sequence[int]) -> Composition:
    return tuple(reversed(comp))


def partial_sums(comp: Sequence[int]) -> frozenset:
    """Descent set of a composition of n: its proper partial sums in [n-1]."""
    out, total = [], 0
    for p in comp[:-1]:
        total += p
        out.append(total)
    return frozenset(out)


def from_partial_sums(subset: Iterable[int], n: int) -> Composition:
    """Inverse of :func:`partial_sums` for compositions of ``n``."""
    if n == 0:
        return ()
    points = [0, *sorted(subset), n]
    return tuple(b - a for a, b in zip(points, points[1:]))


def conjugate(comp: Sequence[int]) -> Composition:
    """Conjugate composition: column lengths of the ribbon read right to left.

    Complement the descent set, then reflect it through ``i -> n - i``.
    """
    n = sum(comp)
    if n == 0:
        return ()
    desc = partial_sums(comp)
    return from_partial_sums((n - i for i in range(1, n) if i not in desc), n)


def refines(coarse: Sequence[int], fine: Sequence[int]) -> bool:
    """True iff ``fine`` splits the parts of ``coarse`` into consecutive blocks."""
    if sum(coarse) != sum(fine):
        raise ValueError(f"modulus mismatch: {tuple(coarse)} vs {tuple(fine)}")
    return partial_sums(coarse) <= partial_sums(fine)


def refinements(comp: Sequence[int]) -> list[Composition]:
    """Every composition refining ``comp`` (including itself)."""
    n = sum(comp)
    base = partial_sums(comp)
    free = [i for i in range(1, n) if i not in base]
    out = []
    for r in range(len(free) + 1):
        for extra in combinations(free, r):
            out.append(from_partial_sums(base.union(extra), n))
    return sorted(out, reverse=True)


def coarsenings(comp: Sequence[int]) -> list[Composition]:
    """Every composition that ``comp`` refines (including itself)."""
    n = sum(comp)
    base = sorted(partial_sums(comp))
    out = []
    for r in range(len(base) + 1):
        for kept in combinations(base, r):
            out.append(from_partial_sums(kept, n))
    return sorted(out, reverse=True)


def concatenations(left: Sequence[int], right: Sequence[int]) -> tuple[Composition, Composition]:
    """Return ``(left ◁ right, left ▷ right)``: plain and near concatenation."""
    if not left or not right:
        raise ValueError("near concatenation needs two nonempty compositions")
    left, right = tuple(left), tuple(right)
    return left + right, left[:-1] + (left[-1] + right[0],) + right[1:]


def _compositions_with_parts(n: int, allowed) -> list[Composition]:
    """Compositions of n with parts in ``allowed``, lexicographically decreasing."""
    choices = sorted((p for p in allowed if 1 <= p <= n), reverse=True)
    out: list[Composition] = []
    stack: list[int] = []

    def rec(left):
        if left == 0:
            out.append(tuple(stack))
            return
        for p in choices:
            if p <= left:
                stack.append(p)
                rec(left - p)
                stack.pop()

    rec(n)
    return out


_FAMILY_PARTS = {
    "all": lambda n: range(1, n + 1),
    "C": lambda n: (1, 2),
    "C_prime": lambda n: range(2, n + 1),
    "C_double_prime": lambda n: (1, 2),
}


def _in_family(comp: Composition, family: str) -> bool:
    if family == "all":
        return True
    if family == "C":
        return bool(comp) and comp[-1] == 1 and all(p in (1, 2) for p in comp)
    if family == "C_prime":
        return all(p >= 2 for p in comp)
    if family == "C_double_prime":
        return (
            bool(comp) and comp[0] == 1 and comp[-1] == 1 and all(p in (1, 2) for p in comp)
        )
    raise ValueError(f"unknown composition family {family!r}")


FAMILIES = ("all", "C", "C_prime", "C_double_prime")


@lru_cache(maxsize=None)
def enumerate_compositions(n: int, family: str = "all") -> tuple[Composition, ...]:
    """Compositions of ``n`` in lexicographically decreasing order.

    ``family`` is one of ``"all"``; ``"C"`` (parts in {1, 2}, last part 1);
    ``"C_prime"`` (all parts at least 2, the empty composition counts for
    n = 0); ``"C_double_prime"`` (parts in {1, 2}, first and last part 1).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if family not in FAMILIES:
        raise ValueError(f"unknown composition family {family!r}")
    return tuple(c for c in _compositions_with_parts(n, _FAMILY_PARTS[family](n)) if _in_family(c, family))


# ---------------------------------------------------------------------------
# hooks and block structure


def is_hook(comp: Sequence[int]) -> bool:
    """A hook is ``1^s t``: every part but the last equals 1."""
    return bool(comp) and all(p == 1 for p in comp[:-1])


@dataclass(frozen=True)
class HookDecomposition:
    """A composition written as hooks joined by ◁ (``"<"``) or ▷ (``">"``)."""

    hooks: tuple
    ops: tuple

    def result(self) -> Composition:
        out = self.hooks[0]
        for op, h in zip(self.ops, self.hooks[1:]):
            plain, near = concatenations(out, h)
            out = plain if op == "<" else near
        return out

    def sign(self) -> int:
        s = 1
        for h in self.hooks:
            s *= sign(h)
        return s

    def __str__(self) -> str:
        text = "".join(map(str, self.hooks[0]))
        for op, h in zip(self.ops, self.hooks[1:]):
            text += ("◁" if op == "<" else "▷") + "".join(map(str, h))
        return text


def _hooks_of_size(k: int) -> list[Composition]:
    return [(1,) * s + (k - s,) for s in range(k)]


def _box_steps(comp: Sequence[int]) -> list[str]:
    """Steps between consecutive boxes read row by row, top row first.

    ``"V"`` moves to the next row down, ``"H"`` moves right within a row.
    """
    steps = []
    for idx, part in enumerate(comp):
        if idx:
            steps.append("V")
        steps.extend("H" * (part - 1))
    return steps


def _segment_hook(steps: Sequence[str]) -> Composition | None:
    """Hook shape of a run of boxes with the given inner steps, if it is one."""
    seen_h = False
    for s in steps:
        if s == "H":
            seen_h = True
        elif seen_h:
            return None
    s = sum(1 for x in steps if x == "V")
    return (1,) * s + (len(steps) - s + 1,)


def hook_decompositions(
    target: Sequence[int] | None = None, relative_to: Sequence[int] | None = None
) -> list[HookDecomposition]:
    """Hook decompositions.

    With ``relative_to=I`` (and no target) this lists every decomposition
    whose hooks have sizes ``I``, whatever composition it produces.  With a
    target ``J`` alone it lists every way of cutting ``J`` into hooks.
    Passing both keeps the decompositions of ``J`` with block sizes ``I``.
    """
    if target is None and relative_to is None:
        raise ValueError("need a target composition or block sizes")
    if target is None:
        sizes = tuple(relative_to)
        out = []
        choices = [_hooks_of_size(k) for k in sizes]

        def extend(i, hooks, ops):
            if i == len(sizes):
                out.append(HookDecomposition(tuple(hooks), tuple(ops)))
                return
            for h in choices[i]:
                if i == 0:
                    extend(1, [h], [])
                else:
                    for op in "<>":
                        extend(i + 1, hooks + [h], ops + [op])

        if sizes:
            extend(0, [], [])
        return sorted(out, key=lambda d: (d.result(), d.hooks, d.ops), reverse=True)

    target = tuple(target)
    steps = _box_steps(target)
    n = sum(target)
    out = []
    for r in range(n):
        for cuts in combinations(range(n - 1), r):
            bounds = [-1, *cuts, n - 1]
            hooks, ops = [], []
            ok = True
            for a, b in zip(bounds, bounds[1:]):
                h = _segment_hook(steps[a + 1:b])
                if h is None:
                    ok = False
                    break
                hooks.append(h)
            if not ok:
                continue
            ops = ["<" if steps[c] == "V" else ">" for c in cuts]
            d = HookDecomposition(tuple(hooks), tuple(ops))
            if relative_to is None or tuple(map(sum, hooks)) == tuple(relative_to):
                out.append(d)
    return out


def restricted_hook_decompositions(target: Sequence[int]) -> list[HookDecomposition]:
    """Hook decompositions where every row tail starts a hook of length >= 2.

    A row tail is the last box of a row of length at least 2.
    """
    target = tuple(target)
    steps = _box_steps(target)
    n = sum(target)
    tails = set()
    for i in range(1, n):
        if steps[i - 1] == "H" and (i == n - 1 or steps[i] == "V"):
            tails.add(i)
    out = []
    for d in hook_decompositions(target):
        starts, pos = {}, 0
        for h in d.hooks:
            starts[pos] = sum(h)
            pos += sum(h)
        if all(starts.get(t, 0) >= 2 for t in tails):
            out.append(d)
    return out


def blocks(fine: Sequence[int], coarse: Sequence[int]) -> list[Composition]:
    """Split ``fine`` into consecutive blocks summing to the parts of ``coarse``."""
    if not refines(coarse, fine):
        raise ValueError(f"{tuple(fine)} does not refine {tuple(coarse)}")
    out, i = [], 0
    for target in coarse:
        block, total = [], 0
        while total < target:
            block.append(fine[i])
            total += fine[i]
            i += 1
        out.append(tuple(block))
    return out


def lp(fine: Sequence[int], coarse: Sequence[int]) -> int:
    """Product of the last parts of the blocks of ``fine`` with respect to ``coarse``."""
    prod = 1
    for block in blocks(fine, coarse):
        prod *= block[-1]
    return prod


# ---------------------------------------------------------------------------
# partitions


def is_partition(seq: Sequence[int]) -> bool:
    return all(p > 0 for p in seq) and all(a >= b for a, b in zip(seq, seq[1:]))


def partition(parts: Iterable[int]) -> Partition:
    """Sort into a partition, dropping zeros."""
    return tuple(sorted((p for p in parts if p), reverse=True))


def _partitions(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """Partitions of ``n`` in lexicographically decreasing order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(_partitions(n, n))


def conjugate_partition(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def dominance_leq(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """True iff every prefix sum of ``mu`` is at most the one of ``lam``."""
    if sum(mu) != sum(lam):
        raise ValueError(f"modulus mismatch: {tuple(mu)} vs {tuple(lam)}")
    a = b = 0
    for i in range(max(len(mu), len(lam))):
        a += mu[i] if i < len(mu) else 0
        b += lam[i] if i < len(lam) else 0
        if a > b:
            return False
    return True


def multiplicity_factorial(lam: Sequence[int]) -> int:
    """Product of m_i(λ)! over the distinct parts."""
    prod = 1
    for v in set(lam):
        prod *= factorial(multiplicity(lam, v))
    return prod


# ---------------------------------------------------------------------------
# skew shapes and tableaux


@dataclass(frozen=True)
class SkewShape:
    """``outer / inner`` in French convention; rows are numbered from the bottom."""

    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        outer, inner = tuple(self.outer), tuple(p for p in self.inner if p)
        if not is_partition(outer) or not is_partition(inner):
            raise ValueError(f"not partitions: {outer}/{inner}")
        if len(inner) > len(outer) or any(a < b for a, b in zip(outer, inner)):
            raise ValueError(f"{inner} is not contained in {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    def inner_row(self, r: int) -> int:
        return self.inner[r - 1] if r <= len(self.inner) else 0

    def boxes(self) -> list[tuple[int, int]]:
        return [
            (r, c)
            for r in range(1, len(self.outer) + 1)
            for c in range(self.inner_row(r) + 1, self.outer[r - 1] + 1)
        ]

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def is_ribbon(self) -> bool:
        cells = set(self.boxes())
        if not cells:
            return False
        for r, c in cells:
            if {(r + 1, c), (r, c + 1), (r + 1, c + 1)} <= cells:
                return False
        seen, stack = set(), [next(iter(cells))]
        while stack:
            r, c = stack.pop()
            if (r, c) in seen:
                continue
            seen.add((r, c))
            for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
                if nb in cells:
                    stack.append(nb)
        return seen == cells

    def row_lengths_top_down(self) -> Composition:
        return tuple(
            self.outer[r - 1] - self.inner_row(r) for r in range(len(self.outer), 0, -1)
        )

    def __str__(self) -> str:
        outer = "".join(map(str, self.outer))
        return f"{outer}/{''.join(map(str, self.inner))}" if self.inner else outer


def ribbon_shape(comp: Sequence[int]) -> SkewShape:
    """The ribbon whose row lengths, top to bottom, are the parts of ``comp``.

    Each row starts in the column where the row above it ends.
    """
    rows = list(reversed(tuple(comp)))
    if not rows:
        return SkewShape(())
    starts, ends = [], []
    start = 0
    for length in rows:
        if ends:
            end = starts[-1]
            start = end - length + 1
        else:
            end = start + length - 1
        starts.append(start)
        ends.append(end)
    shift = 1 - min(starts)
    outer = tuple(e + shift for e in ends)
    inner = tuple(s + shift - 1 for s in starts)
    return SkewShape(outer, inner)


@dataclass(frozen=True)
class Tableau:
    shape: SkewShape
    entries: Mapping = field(hash=False)

    def __post_init__(self):
        if set(self.entries) != set(self.shape.boxes()):
            raise ValueError("entries must fill exactly the boxes of the shape")

    def is_semistandard(self) -> bool:
        e = self.entries
        for (r, c), v in e.items():
            if v < 1:
                return False
            if (r, c + 1) in e and e[(r, c + 1)] < v:
                return False
            if (r + 1, c) in e and e[(r + 1, c)] <= v:
                return False
        return True

    def content(self) -> tuple:
        top = max(self.entries.values(), default=0)
        counts = [0] * top
        for v in self.entries.values():
            counts[v - 1] += 1
        return tuple(counts)


def reading_order(shape: SkewShape) -> list[tuple[int, int]]:
    """Rows from bottom to top, each row right to left."""
    return sorted(shape.boxes(), key=lambda b: (b[0], -b[1]))


def reading_word(tab: Tableau) -> Word:
    return tuple(tab.entries[b] for b in reading_order(tab.shape))


def word_shape(word: Sequence[int]) -> SkewShape:
    """sh(w): the ribbon of the conjugate of the run type."""
    return ribbon_shape(conjugate(run_type(word)))


def ribbon_tableau_from_word(word: Sequence[int]) -> Tableau:
    """The ribbon tableau of shape sh(w) whose reading word is ``w``."""
    shape = word_shape(word)
    return Tableau(shape, dict(zip(reading_order(shape), word)))


# ---------------------------------------------------------------------------
# words


def runs(word: Sequence[int]) -> list[Word]:
    """Maximal strictly increasing factors of ``word``."""
    if not word:
        raise ValueError("empty word has no run factorization")
    out, cur = [], [word[0]]
    for a in word[1:]:
        if a > cur[-1]:
            cur.append(a)
        else:
            out.append(tuple(cur))
            cur = [a]
    out.append(tuple(cur))
    return out


def run_type(word: Sequence[int]) -> Composition:
    return tuple(len(r) for r in runs(word))


def run_factorization(word: Sequence[int]):
    """Return ``(runs, run_type, shape)`` where shape is sh(w) as a SkewShape."""
    rs = runs(word)
    tau = tuple(len(r) for r in rs)
    return rs, tau, ribbon_shape(conjugate(tau))


def word_content(word: Sequence[int]) -> tuple:
    if not word:
        return ()
    counts = [0] * max(word)
    for a in word:
        counts[a - 1] += 1
    return tuple(counts)


def is_yamanouchi(word: Sequence[int]) -> bool:
    counts: dict[int, int] = {}
    for a in word:
        if a < 1:
            return False
        counts[a] = counts.get(a, 0) + 1
        if a > 1 and counts[a] > counts.get(a - 1, 0):
            return False
    return True


def format_word(word: Sequence[int]) -> str:
    return ",".join(map(str, word))


def format_composition(comp: Sequence[int]) -> str:
    return "[" + ",".join(map(str, comp)) + "]"


def parse_composition(text: str) -> Composition:
    """Parse ``[2,1,1]``, ``2,1,1`` or the empty ``[]``."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    if not body.strip():
        return ()
    try:
        parts = tuple(int(x) for x in body.split(","))
    except ValueError as exc:
        raise ValueError(f"not a composition: {text!r}") from exc
    if any(p <= 0 for p in parts):
        raise ValueError(f"not a composition: {text!r}")
    return parts


_TOKEN = re.compile(r"\[(\d+)\]|\[(\d+),(\d+)\]|\((\d+)\)|(\d)")


def parse_compact_word(text: str, aliases: Mapping[str, str] | None = None) -> Word:
    """Decode the compact word notation.

    ``[a]`` is 1..a, ``[a,b]`` is a..b, ``(d1d2...)`` lists single digits and
    a bare digit stands for itself.  Pieces are concatenated.  ``aliases``
    maps single characters (e.g. Greek letters) to compact text.
    """
    if aliases:
        text = "".join(aliases.get(ch, ch) for ch in text)
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty compact word")
    word: list[int] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"malformed compact word {text!r} at position {pos}")
        single, lo, hi, group, digit = m.groups()
        if single is not None:
            a = int(single)
            if a < 1:
                raise ValueError(f"empty interval in {text!r}")
            word.extend(range(1, a + 1))
        elif lo is not None:
            a, b = int(lo), int(hi)
            if a < 1 or a > b:
                raise ValueError(f"empty interval [{a},{b}] in {text!r}")
            word.extend(range(a, b + 1))
        elif group is not None:
            letters = [int(ch) for ch in group]
            if 0 in letters:
                raise ValueError(f"letter 0 in {text!r}")
            word.extend(letters)
        else:
            if digit == "0":
                raise ValueError(f"letter 0 in {text!r}")
            word.append(int(digit))
        pos = m.end()
    return tuple(word)


# ---------------------------------------------------------------------------
# Kostka numbers


def _horizontal_strips(outer: Partition, inner: Partition, size: int) -> Iterator[Partition]:
    """Partitions nu with inner ⊆ nu ⊆ outer and outer/nu a horizontal strip of ``size``."""
    rows = len(outer)

    def rec(i, left, acc):
        if i == rows:
            if left == 0:
                yield partition(acc)
            return
        lo = outer[i + 1] if i + 1 < rows else 0
        if i < len(inner):
            lo = max(lo, inner[i])
        hi = outer[i]
        for nu_i in range(hi, lo - 1, -1):
            taken = hi - nu_i
            if taken > left:
                break
            yield from rec(i + 1, left - taken, acc + [nu_i])

    yield from rec(0, size, [])


@lru_cache(maxsize=None)
def _ssyt_count(outer: Partition, inner: Partition, content: tuple) -> int:
    # peel the largest letter off as a horizontal strip
    if not content:
        return 1 if outer == inner else 0
    if len(inner) > len(outer):
        return 0
    if not dominance_leq_padded(content, outer, inner):
        return 0
    total = 0
    for nu in _horizontal_strips(outer, inner, content[-1]):
        total += _ssyt_count(nu, inner, content[:-1])
    return total


def dominance_leq_padded(content, outer, inner) -> bool:
    """Cheap necessary condition for a straight shape: sorted content ⪯ outer."""
    if inner:
        return True
    return dominance_leq(partition(content), outer)


def kostka(lam: Sequence[int], content: Sequence[int]) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``content``.

    The content may be any weak composition; Kostka numbers do not depend on
    its order, so it is sorted into a partition first.
    """
    lam = tuple(lam)
    if sum(lam) != sum(content):
        raise ValueError(f"modulus mismatch: {lam} vs {tuple(content)}")
    return _ssyt_count(lam, (), partition(content))


def skew_kostka(shape: SkewShape, content: Sequence[int]) -> int:
    if shape.size != sum(content):
        raise ValueError("modulus mismatch")
    return _ssyt_count(shape.outer, shape.inner, tuple(c for c in content if c))


def semistandard_tableaux(shape: SkewShape, content: Sequence[int]) -> list[Tableau]:
    """All SSYT of a shape with a given content, by brute-force filling.

    Exponential; meant as an independent check of :func:`kostka`.
    """
    boxes = sorted(shape.boxes(), key=lambda b: (b[0], b[1]))
    letters = []
    for i, c in enumerate(content, start=1):
        letters.extend([i] * c)
    if len(letters) != len(boxes):
        raise ValueError("modulus mismatch")
    remaining = list(content)
    out = []
    entries: dict = {}

    def rec(i):
        if i == len(boxes):
            out.append(Tableau(shape, dict(entries)))
            return
        r, c = boxes[i]
        for v in range(1, len(remaining) + 1):
            if not remaining[v - 1]:
                continue
            left = entries.get((r, c - 1))
            below = entries.get((r - 1, c))
            if left is not None and left > v:
                continue
            if below is not None and below >= v:
                continue
            remaining[v - 1] -= 1
            entries[(r, c)] = v
            rec(i + 1)
            del entries[(r, c)]
            remaining[v - 1] += 1

    rec(0)
    return out
