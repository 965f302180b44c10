"""Graphs and their chromatic symmetric functions.

Two independent routes compute X_G:

* :func:`csf_powersum` sums (-1)^{|E'|} p_{τ(E')} over edge subsets E', where
  τ(E') lists the component sizes of the spanning subgraph (V, E');
* :func:`csf_colorings` counts proper colourings by stable set partitions and
  lands in the monomial basis.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from pathlib import Path

from . import sym
from .combinatorics import multiplicity_factorial, partition
from .sym import SymElement

DEFAULT_MAX_EDGES = 24
MAX_COLORING_VERTICES = 8


class CapExceeded(RuntimeError):
    """Raised when an enumeration would exceed a configured size cap."""

    def __init__(self, message: str, estimate: int):
        super().__init__(f"{message} (estimated {estimate} subsets/items)")
        self.estimate = estimate


@dataclass(frozen=True)
class SimpleGraph:
    vertex_count: int
    edges: frozenset

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("a graph needs at least one vertex")
        clean = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= self.vertex_count and 1 <= v <= self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range")
            clean.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(clean))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degrees(self) -> tuple:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u - 1] += 1
            deg[v - 1] += 1
        return tuple(deg)

    def neighbours(self) -> dict:
        adj = {v: set() for v in range(1, self.vertex_count + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def from_edges(n: int, edges) -> SimpleGraph:
    return SimpleGraph(n, frozenset(tuple(e) for e in edges))


def path(n: int) -> SimpleGraph:
    return from_edges(n, [(i, i + 1) for i in range(1, n)])


def spider(legs) -> SimpleGraph:
    """Paths of the given lengths glued at a common end.

    The centre is vertex 1; each leg's vertices are numbered consecutively
    outward from the centre.
    """
    legs = tuple(legs)
    if not legs or any(int(p) != p or p < 1 for p in legs) or list(legs) != sorted(legs, reverse=True):
        raise ValueError(f"spider legs must form a partition, got {legs}")
    edges, nxt = [], 2
    for length in legs:
        prev = 1
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return from_edges(nxt - 1, edges)


def net() -> SimpleGraph:
    """Triangle with a pendant vertex on each corner."""
    return from_edges(6, [(1, 2), (2, 3), (1, 3), (1, 4), (2, 5), (3, 6)])


def read_edge_list(text: str) -> SimpleGraph:
    """Parse one ``u v`` pair per line; blank lines and ``#`` comments are skipped."""
    edges = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        edges.append((int(fields[0]), int(fields[1])))
    if not edges:
        raise ValueError("edge list is empty")
    n = max(max(e) for e in edges)
    return from_edges(n, edges)


def parse_graph_spec(spec: str) -> SimpleGraph:
    """``path:N``, ``spider:a,b,c``, ``claw``, ``net`` or ``file:PATH``."""
    kind, _, arg = spec.partition(":")
    kind = kind.strip().lower()
    if kind == "path":
        return path(int(arg))
    if kind == "spider":
        return spider(tuple(int(x) for x in arg.split(",")))
    if kind == "claw" and not arg:
        return spider((1, 1, 1))
    if kind == "net" and not arg:
        return net()
    if kind == "file":
        return read_edge_list(Path(arg).read_text())
    raise ValueError(f"unrecognised graph spec {spec!r}")


# ---------------------------------------------------------------------------
# power-sum expansion


def _check_cap(graph: SimpleGraph, max_edges: int):
    if len(graph.edges) > max_edges:
        raise CapExceeded(
            f"{len(graph.edges)} edges exceed the cap of {max_edges}", 2 ** len(graph.edges)
        )


def _subset_sum(n: int, edges: list, fixed: tuple) -> dict:
    """Σ (-1)^{|E'|} p_{τ(E')} over subsets E' extending a fixed choice.

    ``fixed`` gives in/out decisions for a prefix of ``edges``.  Union-find
    with union by size and no path compression, so a union is undone by
    restoring two entries.
    """
    parent = list(range(n + 1))
    size = [1] * (n + 1)
    out: Counter = Counter()

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def union(u, v):
        a, b = find(u), find(v)
        if a == b:
            return None
        if size[a] < size[b]:
            a, b = b, a
        parent[b] = a
        size[a] += size[b]
        return a, b

    def undo(token):
        if token is not None:
            a, b = token
            parent[b] = b
            size[a] -= size[b]

    def emit(used):
        tau = partition(size[v] for v in range(1, n + 1) if parent[v] == v)
        out[tau] += -1 if used % 2 else 1

    def rec(i, used):
        if i == len(edges):
            emit(used)
            return
        rec(i + 1, used)
        token = union(*edges[i])
        rec(i + 1, used + 1)
        undo(token)

    used = 0
    for (u, v), take in zip(edges, fixed):
        if take:
            union(u, v)
            used += 1
    rec(len(fixed), used)
    return dict(out)


def _subset_sum_task(args):
    return _subset_sum(*args)


def csf_powersum(
    graph: SimpleGraph, max_edges: int = DEFAULT_MAX_EDGES, workers: int = 1
) -> SymElement:
    """X_G in the power-sum basis by summing over all edge subsets.

    With ``workers > 1`` the subset space is split on the first few edges and
    the pieces run in separate processes; the sum does not depend on the split.
    """
    _check_cap(graph, max_edges)
    edges = graph.sorted_edges()
    n = graph.vertex_count
    if workers <= 1 or len(edges) < 4:
        return SymElement(n, "p", _subset_sum(n, edges, ()))
    depth = min(len(edges), max(1, (4 * workers - 1).bit_length()))
    prefixes = [tuple((mask >> i) & 1 for i in range(depth)) for mask in range(2 ** depth)]
    total: Counter = Counter()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_subset_sum_task, [(n, edges, p) for p in prefixes]):
            total.update(part)
    return SymElement(n, "p", total)


def csf_powersum_reference(graph: SimpleGraph, max_edges: int = DEFAULT_MAX_EDGES) -> SymElement:
    """Same sum as :func:`csf_powersum`, rebuilding components for each subset."""
    _check_cap(graph, max_edges)
    edges = graph.sorted_edges()
    n = graph.vertex_count
    out: Counter = Counter()
    for mask in range(2 ** len(edges)):
        parent = list(range(n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        chosen = [e for i, e in enumerate(edges) if mask >> i & 1]
        for u, v in chosen:
            parent[find(u)] = find(v)
        sizes = Counter(find(v) for v in range(1, n + 1))
        out[partition(sizes.values())] += -1 if len(chosen) % 2 else 1
    return SymElement(n, "p", out)


# ---------------------------------------------------------------------------
# colouring expansion


def csf_colorings(graph: SimpleGraph) -> SymElement:
    """X_G in monomials: [m_μ] = (#stable partitions of type μ) · Π m_i(μ)!.

    Set partitions are generated as restricted growth strings and kept only
    when every block is independent.
    """
    n = graph.vertex_count
    if n > MAX_COLORING_VERTICES:
        raise CapExceeded(f"{n} vertices exceed the colouring cap of {MAX_COLORING_VERTICES}", n ** n)
    adj = graph.neighbours()
    blocks = [0] * (n + 1)
    counts: Counter = Counter()

    def rec(v, nblocks):
        if v > n:
            sizes = Counter(blocks[1:])
            counts[partition(sizes.values())] += 1
            return
        for b in range(1, nblocks + 2):
            if any(blocks[u] == b for u in adj[v] if u < v):
                continue
            blocks[v] = b
            rec(v + 1, max(nblocks, b))
        blocks[v] = 0

    rec(1, 0)
    return SymElement(n, "m", {mu: c * multiplicity_factorial(mu) for mu, c in counts.items()})


# ---------------------------------------------------------------------------
# paths and spiders


@lru_cache(maxsize=None)
def path_csf(n: int) -> SymElement:
    """X_{P_n} in power sums, summing over compositions of n.

    A subset of the n-1 path edges is a composition of n (its component
    sizes in order); its sign is (-1)^{n - ℓ}.
    """
    out: dict = {}
    for lam in sym.partitions(n):
        arrangements = factorial(len(lam)) // multiplicity_factorial(lam)
        out[lam] = arrangements * (-1 if (n - len(lam)) % 2 else 1)
    return SymElement(n, "p", out)


def spider_csf_reduction(a: int, b: int, c: int) -> SymElement:
    """X_{S(a,b,c)} from path functions, in the power-sum basis.

    X_{S(a,b,c)} = X_{P_n} + Σ_{i=1}^{c} (X_{P_i} X_{P_{n-i}} - X_{P_{b+i}} X_{P_{n-b-i}})
    with n = a + b + c + 1.
    """
    if not a >= b >= c >= 1:
        raise ValueError("need a >= b >= c >= 1")
    n = a + b + c + 1

    def prod(i, j):
        return sym.multiply(path_csf(i), path_csf(j))

    total = path_csf(n)
    for i in range(1, c + 1):
        total = total + prod(i, n - i) - prod(b + i, n - b - i)
    return total


def spider_ab1(a: int, b: int) -> SymElement:
    """X_{S(a,b,1)} = X_{P_n} + e_1 X_{P_{n-1}} - X_{P_{a+1}} X_{P_{b+1}}, n = a + b + 2."""
    n = a + b + 2
    e1 = SymElement.basis_element("p", (1,))  # e_1 = p_1
    return path_csf(n) + sym.multiply(e1, path_csf(n - 1)) - sym.multiply(
        path_csf(a + 1), path_csf(b + 1)
    )
