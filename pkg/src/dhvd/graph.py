"""Simple undirected graphs with the neighborhood, component and twin machinery.

Vertex sets are plain frozensets of ints throughout the package; a Graph always
has dense vertex ids 0..n-1.  Name maps for external labels live at the CLI
boundary, not here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Adjacency is kept both as sorted tuples (canonical form, used for
    equality) and as int bitmasks (used by the solver kernels).
    """

    __slots__ = ("n", "adj", "bits", "m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        bits = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if bits[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u},{v})")
            bits[u] |= 1 << v
            bits[v] |= 1 << u
            m += 1
        self.n = n
        self.bits = tuple(bits)
        self.adj = tuple(tuple(_iter_bits(b)) for b in bits)
        self.m = m

    @classmethod
    def from_bits(cls, n: int, bits: list[int]) -> "Graph":
        g = object.__new__(cls)
        g.n = n
        g.bits = tuple(bits)
        g.adj = tuple(tuple(_iter_bits(b)) for b in bits)
        g.m = sum(b.bit_count() for b in bits) // 2
        return g

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.bits[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(self.adj[v])

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adj == other.adj
        )

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_of_mask(mask: int) -> list[int]:
    return list(_iter_bits(mask))


def induced_subgraph(g: Graph, a: frozenset[int] | set[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph of g induced by a, plus the relabeling map a -> 0..|a|-1.

    The map sends original ids to new ids; new ids follow sorted original
    order.  Raises ValueError if a contains a vertex outside g.
    """
    verts = sorted(a)
    if verts and (verts[0] < 0 or verts[-1] >= g.n):
        raise ValueError("vertex outside graph")
    relabel = {v: i for i, v in enumerate(verts)}
    edges = [
        (relabel[u], relabel[v])
        for u in verts
        for v in g.adj[u]
        if u < v and v in relabel
    ]
    return Graph(len(verts), edges), relabel


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Maximal connected vertex sets, ordered by smallest member."""
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for u in _iter_bits(frontier):
                nxt |= g.bits[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(frozenset(_iter_bits(comp)))
    return comps


def component_masks(bits: list[int] | tuple[int, ...], alive: int) -> list[int]:
    """Connected components of the graph restricted to the alive mask, as masks."""
    seen = 0
    comps = []
    rest = alive
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            for u in _iter_bits(frontier):
                nxt |= bits[u]
            frontier = nxt & alive & ~comp
            comp |= frontier
        comps.append(comp)
        seen |= comp
        rest = alive & ~seen
    return comps


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Unweighted distances from source; -1 for unreachable vertices."""
    dist = [-1] * g.n
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def are_twins(g: Graph, u: int, v: int) -> bool:
    """True iff N(u) and N(v) agree outside {u, v}."""
    if u == v:
        raise ValueError("twin test needs two distinct vertices")
    pair = (1 << u) | (1 << v)
    return (g.bits[u] & ~pair) == (g.bits[v] & ~pair)


@dataclass(frozen=True)
class TwinClassPartition:
    """Twin classes of G restricted to V(G)-S, split per component of G-S.

    classes[i] covers vertices that are pairwise twins in the full graph;
    s_attached[i] records whether the class has a neighbor in S.
    """

    classes: tuple[frozenset[int], ...]
    s_attached: tuple[bool, ...]

    def class_of(self, v: int) -> int:
        for i, c in enumerate(self.classes):
            if v in c:
                return i
        raise KeyError(v)


def twin_class_masks(bits, n: int, s_mask: int, alive: int | None = None) -> list[tuple[int, bool]]:
    """Twin classes as (mask, s_attached) pairs over alive free vertices.

    Twin-ness is evaluated in the graph restricted to alive (the solver's
    current graph); classes are intersected with the components of G-S so a
    class never spans two components.
    """
    if alive is None:
        alive = (1 << n) - 1
    free = alive & ~s_mask
    groups: dict[tuple[int, int], int] = {}
    # true twins share closed neighborhoods, false twins open ones; a class
    # is never mixed, so two hash passes plus a merge suffice
    for v in _iter_bits(free):
        row = bits[v] & alive
        groups.setdefault((0, row), 0)
        groups[(0, row)] |= 1 << v
        closed = row | (1 << v)
        groups.setdefault((1, closed), 0)
        groups[(1, closed)] |= 1 << v
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for v in _iter_bits(free):
        parent[v] = v
    for mask in groups.values():
        vs = bits_of_mask(mask)
        for w in vs[1:]:
            ra, rb = find(vs[0]), find(w)
            if ra != rb:
                parent[rb] = ra
    classes: dict[int, int] = {}
    for v in _iter_bits(free):
        r = find(v)
        classes.setdefault(r, 0)
        classes[r] |= 1 << v
    # split per component of G-S
    comps = component_masks(bits, free)
    out = []
    for cmask in classes.values():
        for comp in comps:
            part = cmask & comp
            if part:
                nbrs = 0
                for v in _iter_bits(part):
                    nbrs |= bits[v] & alive
                out.append((part, bool(nbrs & s_mask)))
    out.sort(key=lambda t: t[0] & -t[0])
    return out


def twin_classes(g: Graph, s: frozenset[int] | set[int]) -> TwinClassPartition:
    """Twin classes of g (twins taken in the full graph) on V(g)-s."""
    s_mask = mask_of(s)
    pairs = twin_class_masks(g.bits, g.n, s_mask)
    classes = tuple(frozenset(bits_of_mask(m)) for m, _ in pairs)
    flags = tuple(f for _, f in pairs)
    return TwinClassPartition(classes, flags)
