"""Immutable simple graphs over dense labels ``0..n-1`` and vertex sets.

Vertex sets are stored as integer bitmasks, so union, membership and
closed-neighbourhood expansion are single integer operations.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator, Sequence

from .errors import DomainError, ParseError


@dataclass(frozen=True)
class VertexSet:
    """A set of vertex indices with ascending iteration order."""

    mask: int = 0

    @classmethod
    def of(cls, vertices: Iterable[int]) -> VertexSet:
        mask = 0
        for v in vertices:
            if v < 0:
                raise ValueError(f"negative vertex index {v}")
            mask |= 1 << v
        return cls(mask)

    def __iter__(self) -> Iterator[int]:
        mask = self.mask
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.mask >> v & 1)

    def __or__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.mask | other.mask)

    def __and__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.mask & other.mask)

    def __sub__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.mask & ~other.mask)

    def isdisjoint(self, other: VertexSet) -> bool:
        return not self.mask & other.mask

    def issubset(self, other: VertexSet) -> bool:
        return not self.mask & ~other.mask

    def to_list(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()})"


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph with sorted adjacency lists.

    ``origin`` optionally maps each vertex back to the object it was derived
    from (a parent vertex for induced subgraphs, an edge for line graphs). It
    does not take part in equality.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    origin: tuple[Any, ...] | None = field(default=None, repr=False)

    def __post_init__(self) -> None:
        if len(self.adjacency) != self.n:
            raise DomainError("adjacency length does not match n")
        for v, nbrs in enumerate(self.adjacency):
            for i, w in enumerate(nbrs):
                if not 0 <= w < self.n:
                    raise DomainError(f"neighbour {w} of {v} out of range")
                if w == v:
                    raise DomainError(f"self-loop at {v}")
                if i and nbrs[i - 1] >= w:
                    raise DomainError(f"adjacency of {v} not strictly ascending")
        for v, nbrs in enumerate(self.adjacency):
            for w in nbrs:
                if v not in self.adjacency[w]:
                    raise DomainError(f"edge {v}-{w} not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   origin: Sequence[Any] | None = None) -> Graph:
        """Build a graph, rejecting loops, duplicate edges and bad indices."""
        if n < 0:
            raise DomainError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise DomainError(f"self-loop at {u}")
            if v in nbrs[u]:
                raise DomainError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs),
                   None if origin is None else tuple(origin))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    # cached derived tables; object.__setattr__ because the dataclass is frozen
    @property
    def degree(self) -> tuple[int, ...]:
        try:
            return self._degree  # type: ignore[attr-defined]
        except AttributeError:
            deg = tuple(len(a) for a in self.adjacency)
            object.__setattr__(self, "_degree", deg)
            return deg

    @property
    def open_masks(self) -> tuple[int, ...]:
        try:
            return self._open  # type: ignore[attr-defined]
        except AttributeError:
            masks = []
            for nbrs in self.adjacency:
                m = 0
                for w in nbrs:
                    m |= 1 << w
                masks.append(m)
            out = tuple(masks)
            object.__setattr__(self, "_open", out)
            return out

    @property
    def closed_masks(self) -> tuple[int, ...]:
        try:
            return self._closed  # type: ignore[attr-defined]
        except AttributeError:
            out = tuple(m | (1 << v) for v, m in enumerate(self.open_masks))
            object.__setattr__(self, "_closed", out)
            return out

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def max_degree(self) -> int:
        return max(self.degree, default=0)

    @property
    def num_edges(self) -> int:
        return sum(self.degree) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    def vertices(self) -> VertexSet:
        return VertexSet(self.full_mask)

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(self.open_masks[v])

    def closed_neighborhood(self, s: VertexSet | int) -> VertexSet:
        """N[S] for a vertex set, or N[v] for a single vertex."""
        if isinstance(s, int):
            return VertexSet(self.closed_masks[s])
        acc = 0
        closed = self.closed_masks
        for v in s:
            acc |= closed[v]
        return VertexSet(acc)

    def open_neighborhood(self, s: VertexSet) -> VertexSet:
        acc = 0
        for v in s:
            acc |= self.open_masks[v]
        return VertexSet(acc)

    def induced_subgraph(self, s: VertexSet) -> Graph:
        """G[S], relabelled ascending; ``origin`` maps back to parent vertices."""
        keep = s.to_list()
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph.from_edges(len(keep), edges, origin=keep)


@dataclass(frozen=True)
class ForestInfo:
    is_forest: bool
    is_tree: bool
    components: tuple[VertexSet, ...]


def components(g: Graph) -> tuple[VertexSet, ...]:
    """Connected components, ordered by their lowest vertex."""
    seen = 0
    out = []
    for root in range(g.n):
        if seen >> root & 1:
            continue
        comp = 1 << root
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if not comp >> w & 1:
                    comp |= 1 << w
                    queue.append(w)
        seen |= comp
        out.append(VertexSet(comp))
    return tuple(out)


def classify_forest(g: Graph) -> ForestInfo:
    comps = components(g)
    # acyclic iff |E| = |V| - c(G)
    is_forest = g.num_edges == g.n - len(comps)
    return ForestInfo(is_forest, is_forest and len(comps) == 1, comps)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise DomainError("path needs at least one vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    if leaves < 0:
        raise DomainError("leaf count must be non-negative")
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise DomainError("complete graph needs at least one vertex")
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def balanced_double_star(s: int) -> Graph:
    """Two adjacent centres, each carrying ``s`` pendant leaves.

    Labels: w1 = 0, w2 = 1, leaves of w1 are ``2..s+1`` and leaves of w2 are
    ``s+2..2s+1``.
    """
    if not isinstance(s, int) or s < 1:
        raise DomainError(f"balanced double star needs s >= 1, got {s}")
    edges = [(0, 1)]
    edges += [(0, 2 + j) for j in range(s)]
    edges += [(1, s + 2 + j) for j in range(s)]
    return Graph.from_edges(2 * s + 2, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges()]
        offset += g.n
    return Graph.from_edges(offset, edges)


def is_balanced_double_star(g: Graph) -> bool:
    if not classify_forest(g).is_tree:
        return False
    big = [d for d in g.degree if d > 1]
    return len(big) == 2 and big[0] == big[1]


def line_graph(g: Graph) -> Graph:
    """L(G): one vertex per edge of ``g`` (lexicographic edge order).

    ``origin[i]`` is the edge of ``g`` represented by vertex ``i``.
    """
    if g.n == 0 or len(components(g)) != 1:
        raise DomainError("line graph is defined here for connected graphs only")
    edge_list = g.edges()
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for idx, (u, v) in enumerate(edge_list):
        incident[u].append(idx)
        incident[v].append(idx)
    # two edges of a simple graph share at most one endpoint, so no duplicates
    pairs = [(a, b) for inc in incident for i, a in enumerate(inc) for b in inc[i + 1:]]
    return Graph.from_edges(len(edge_list), pairs, origin=edge_list)


def tree_from_parents(parents: Sequence[int]) -> Graph:
    """Tree on ``len(parents)`` vertices; ``parents[0]`` is ignored (root)."""
    return Graph.from_edges(len(parents), [(p, v) for v, p in enumerate(parents) if v])


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n <count>`` header followed by one ``u v`` edge per line."""
    lines = text.splitlines()
    body = [(i + 1, ln.strip()) for i, ln in enumerate(lines) if ln.strip()]
    if not body:
        raise ParseError("empty edge list", 1)
    lineno, header = body[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
        raise ParseError(f"line {lineno}: expected 'n <count>'", lineno)
    n = int(parts[1])
    seen: set[tuple[int, int]] = set()
    edges = []
    for lineno, line in body[1:]:
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"line {lineno}: expected 'u v'", lineno)
        u, v = int(parts[0]), int(parts[1])
        if u >= n or v >= n:
            raise ParseError(f"line {lineno}: vertex index out of range for n={n}", lineno)
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"line {lineno}: duplicate edge {key}", lineno)
        seen.add(key)
        edges.append(key)
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    return "\n".join([f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]) + "\n"
