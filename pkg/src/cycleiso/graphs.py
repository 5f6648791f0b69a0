"""Simple undirected graphs on contiguous integer ids, with bitmask vertex sets.

A vertex set is a plain Python int used as a bitmask (bit v set <=> vertex v
in the set).  Neighbourhood algebra -- closed neighbourhoods, deletions,
boundary edge counts -- then runs in a handful of machine-word operations,
which matters because these are the inner loops of exhaustive enumeration
and exact search.  Graphs are immutable after construction and safe to share.

graph6 support is bit-exact: column-major upper triangle x(0,1), x(0,2),
x(1,2), x(0,3), ..., six bits per byte, each byte offset by 63.  Only the
single-byte order header (n <= 62) is supported.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

VertexSet = int  # bitmask over vertex ids

GRAPH6_MAX_N = 62


class GraphFormatError(ValueError):
    """Malformed graph6 or edge-list input."""


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: VertexSet) -> Iterator[int]:
    """Iterate the vertex ids in a mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vertices_of(mask: VertexSet) -> tuple[int, ...]:
    return tuple(bits(mask))


class Graph:
    """Immutable simple graph: vertex ids 0..n-1, per-vertex neighbour bitmasks."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[VertexSet]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = tuple(adj)
        if len(adj) != n:
            raise ValueError("adjacency length must equal vertex count")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour id >= {n}")
            if row >> v & 1:
                raise ValueError(f"vertex {v} is adjacent to itself")
        for v, row in enumerate(adj):
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_hash", hash((n, adj)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def full_mask(self) -> VertexSet:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    @property
    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    @property
    def min_degree(self) -> int:
        return min((row.bit_count() for row in self.adj), default=0)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def closed_adj(self, v: int) -> VertexSet:
        return self.adj[v] | (1 << v)


def as_mask(g: Graph, s: Union[VertexSet, Iterable[int]]) -> VertexSet:
    """Coerce an int mask or an iterable of ids to a validated mask for g."""
    m = s if isinstance(s, int) else mask_of(s)
    if m < 0 or m & ~g.full_mask:
        raise ValueError("vertex set contains ids outside 0..n-1")
    return m


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph; duplicate edges collapse, loops are rejected."""
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop edge at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) outside id range 0..{n - 1}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of g under the permutation old id -> perm[old id]."""
    adj = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in bits(g.adj[v]):
            row |= 1 << perm[u]
        adj[perm[v]] = row
    return Graph(g.n, adj)


def closed_neighborhood(g: Graph, s: Union[VertexSet, Iterable[int]]) -> VertexSet:
    """N[S] = S together with every neighbour of a member of S."""
    m = as_mask(g, s)
    out = m
    for v in bits(m):
        out |= g.adj[v]
    return out


def open_neighborhood(g: Graph, s: Union[VertexSet, Iterable[int]]) -> VertexSet:
    """N(S): neighbours of S outside S."""
    m = as_mask(g, s)
    return closed_neighborhood(g, m) & ~m


def induced_subgraph(g: Graph, keep: Union[VertexSet, Iterable[int]]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph on `keep`, renumbered 0.., plus the embedding local id -> parent id."""
    m = as_mask(g, keep)
    embedding = vertices_of(m)
    index = {v: i for i, v in enumerate(embedding)}
    adj = [0] * len(embedding)
    for i, v in enumerate(embedding):
        row = 0
        for u in bits(g.adj[v] & m):
            row |= 1 << index[u]
        adj[i] = row
    return Graph(len(embedding), adj), embedding


def delete_closed_neighborhood(
    g: Graph, d: Union[VertexSet, Iterable[int]]
) -> tuple[Graph, tuple[int, ...]]:
    """G - N[D] on the surviving vertices, with the embedding back into g."""
    return induced_subgraph(g, g.full_mask & ~closed_neighborhood(g, d))


@dataclass(frozen=True)
class ComponentSplit:
    """Connected components as (subgraph, embedding into the parent) pairs."""

    parts: tuple[tuple[Graph, tuple[int, ...]], ...]

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)


def component_masks(g: Graph, within: VertexSet | None = None) -> list[VertexSet]:
    """Vertex masks of the connected components of g (or of g restricted to a mask)."""
    alive = g.full_mask if within is None else as_mask(g, within)
    out = []
    while alive:
        start = alive & -alive
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v] & alive & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        alive &= ~comp
    return out


def connected_components(g: Graph) -> ComponentSplit:
    return ComponentSplit(tuple(induced_subgraph(g, m) for m in component_masks(g)))


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(component_masks(g)) == 1


def boundary_edge_count(
    g: Graph, a: Union[VertexSet, Iterable[int]], b: Union[VertexSet, Iterable[int]]
) -> int:
    """e(A, B): edges with one end in A and the other in B; A and B must be disjoint."""
    ma = as_mask(g, a)
    mb = as_mask(g, b)
    if ma & mb:
        raise ValueError("boundary_edge_count requires disjoint vertex sets")
    return sum((g.adj[v] & mb).bit_count() for v in bits(ma))


# -- graph6 ------------------------------------------------------------------


def encode_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise GraphFormatError(f"graph6 support is limited to n <= {GRAPH6_MAX_N}")
    out = [g.n + 63]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | (g.adj[j] >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out).decode("ascii")


def parse_graph6(text: Union[str, bytes]) -> Graph:
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise GraphFormatError("empty graph6 string")
    if data[0] == 126:  # '~' starts the multi-byte order header
        raise GraphFormatError(f"graph6 orders above {GRAPH6_MAX_N} are not supported")
    n = data[0] - 63
    if not 0 <= n <= GRAPH6_MAX_N:
        raise GraphFormatError(f"bad graph6 order byte {data[0]!r}")
    nbits = n * (n - 1) // 2
    want = 1 + (nbits + 5) // 6
    if len(data) != want:
        raise GraphFormatError(f"graph6 string has {len(data)} bytes, expected {want}")
    stream = 0
    for byte in data[1:]:
        if not 63 <= byte <= 126:
            raise GraphFormatError(f"graph6 byte {byte!r} outside printable range 63..126")
        stream = (stream << 6) | (byte - 63)
    pad = 6 * (len(data) - 1) - nbits
    if stream & ((1 << pad) - 1):
        raise GraphFormatError("graph6 padding bits are not zero")
    stream >>= pad
    adj = [0] * n
    for j in range(n - 1, 0, -1):
        for i in range(j - 1, -1, -1):
            if stream & 1:
                adj[j] |= 1 << i
                adj[i] |= 1 << j
            stream >>= 1
    return Graph(n, adj)


# -- edge-list text format ----------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the "n <count>" header plus one "u v" pair per line."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphFormatError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n" or not head[1].isdigit():
        raise GraphFormatError('edge-list input must start with a "n <count>" header')
    n = int(head[1])
    edges = []
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"line {lineno}: non-integer vertex id") from exc
        edges.append((u, v))
    try:
        return from_edge_list(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
