"""The extremal family: trees wearing one k-cycle per vertex.

build(T, k) takes a tree T and hangs a private k-cycle off every tree
vertex by a single edge.  The result has (k+1)|V(T)| vertices and
(k+2)|V(T)| - 1 edges, the tree vertices form an isolating set, and these
graphs (together with the diamond for k = 4) are exactly the connected
graphs whose k-cycle isolation number attains (m+1)/(k+2).

Recognition inverts the construction without general subgraph-isomorphism
machinery: in a member, every constituent cycle is chordless and carries
exactly one vertex of degree 3 (the attachment) with the rest of degree 2,
so candidate cycles are forced and pairwise disjoint; what remains must be
a tree attached by one edge per cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .cycles import all_cycles
from .graphs import (
    Graph,
    VertexSet,
    bits,
    from_edge_list,
    mask_of,
    vertices_of,
)

MAX_TREE_N = 12


@dataclass(frozen=True)
class Tree:
    """A tree given by its vertex count and edge list (validated on creation)."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a tree has at least one vertex")
        object.__setattr__(
            self, "edges", tuple(sorted((min(u, v), max(u, v)) for u, v in self.edges))
        )
        g = from_edge_list(self.n, self.edges)
        if len(self.edges) != self.n - 1:
            raise ValueError("a tree on n vertices has exactly n-1 edges")
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v] & ~seen
            seen |= nxt
            frontier = nxt
        if seen != g.full_mask:
            raise ValueError("tree edges do not connect all vertices")

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj


@dataclass(frozen=True)
class Constituent:
    """One cycle of the construction: its anchor tree vertex and cycle layout."""

    connection: int
    attachment: int
    cycle: tuple[int, ...]


@dataclass(frozen=True)
class ConsDecomposition:
    """Witness that a graph is built from a tree plus one cycle per tree vertex."""

    k: int
    connection_vertices: VertexSet
    constituents: tuple[Constituent, ...]
    tree_edges: tuple[tuple[int, int], ...]

    def connection_of(self, vertex: int) -> int:
        """Connection vertex of the constituent containing `vertex`."""
        for c in self.constituents:
            if vertex == c.connection or vertex in c.cycle:
                return c.connection
        raise ValueError(f"vertex {vertex} not covered by the decomposition")

    @property
    def tree_size(self) -> int:
        return len(self.constituents)


def build(tree: Tree, k: int) -> tuple[Graph, ConsDecomposition]:
    """Attach a private k-cycle to every tree vertex by one edge.

    Numbering is deterministic: tree vertices keep ids 0..t-1, then cycles
    follow in tree-vertex order, each starting at its attachment vertex.
    """
    if k < 3:
        raise ValueError("cycle length must be at least 3")
    t = tree.n
    n = (k + 1) * t
    edges = list(tree.edges)
    constituents = []
    for i in range(t):
        base = t + i * k
        cyc = tuple(range(base, base + k))
        edges.extend((cyc[j], cyc[(j + 1) % k]) for j in range(k))
        edges.append((i, base))
        constituents.append(Constituent(connection=i, attachment=base, cycle=cyc))
    g = from_edge_list(n, edges)
    decomp = ConsDecomposition(
        k=k,
        connection_vertices=(1 << t) - 1,
        constituents=tuple(constituents),
        tree_edges=tree.edges,
    )
    return g, decomp


def expected_size(t: int, k: int) -> int:
    """Edge count of the construction on a t-vertex tree: (k+2)t - 1."""
    return (k + 2) * t - 1


def recognize(g: Graph, k: int) -> Optional[ConsDecomposition]:
    """Decomposition witnessing membership in the family, or None.

    Candidate constituent cycles are the chordless k-cycles whose vertices
    all have degree 2 in g except exactly one of degree 3; the degree
    pattern forces them to be pairwise disjoint, so no search is needed.
    """
    if k < 3:
        raise ValueError("cycle length must be at least 3")
    if g.n == 0 or g.n % (k + 1):
        return None
    t = g.n // (k + 1)
    if g.m != expected_size(t, k):
        return None
    degrees = g.degrees()
    candidates = []
    for cyc in all_cycles(g, k):
        degs = [degrees[v] for v in cyc]
        if sorted(degs) != [2] * (k - 1) + [3]:
            continue
        cm = mask_of(cyc)
        if any((g.adj[v] & cm).bit_count() != 2 for v in cyc):
            continue  # chord inside the cycle
        candidates.append(cyc)
    used = 0
    constituents = []
    for cyc in candidates:
        cm = mask_of(cyc)
        if cm & used:
            return None
        used |= cm
        attach = next(v for v in cyc if degrees[v] == 3)
        outside = g.adj[attach] & ~cm
        if outside.bit_count() != 1:
            return None
        connection = next(bits(outside))
        start = cyc.index(attach)
        cycle = tuple(cyc[(start + j) % k] for j in range(k))
        constituents.append(
            Constituent(connection=connection, attachment=attach, cycle=cycle)
        )
    if used.bit_count() != t * k:
        return None
    rest = g.full_mask & ~used
    if rest.bit_count() != t:
        return None
    anchors = {c.connection for c in constituents}
    if len(anchors) != len(constituents) or anchors != set(bits(rest)):
        return None
    for r in bits(rest):
        if (g.adj[r] & used).bit_count() != 1:
            return None
    tree_edges = tuple(
        (u, v) for u in bits(rest) for v in bits(g.adj[u] & rest) if u < v
    )
    if len(tree_edges) != t - 1:
        return None
    # connectivity of the connection vertices under tree_edges
    rest_ids = list(bits(rest))
    index = {v: i for i, v in enumerate(rest_ids)}
    adj = [0] * t
    for u, v in tree_edges:
        adj[index[u]] |= 1 << index[v]
        adj[index[v]] |= 1 << index[u]
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v] & ~seen
        seen |= nxt
        frontier = nxt
    if seen != (1 << t) - 1:
        return None
    constituents.sort(key=lambda c: c.connection)
    return ConsDecomposition(
        k=k,
        connection_vertices=rest,
        constituents=tuple(constituents),
        tree_edges=tree_edges,
    )


def canonical_isolating_set(decomp: ConsDecomposition) -> VertexSet:
    """The connection vertices: an isolating set of size (m+1)/(k+2)."""
    return decomp.connection_vertices


def verify_extremal_equality(g: Graph, k: int, node_budget: int | None = None) -> bool:
    """True when g is a family member and its isolation number attains (m+1)/(k+2)."""
    decomp = recognize(g, k)
    if decomp is None:
        return False
    from .isolation import iota_exact

    return Fraction(g.m + 1, k + 2) == iota_exact(g, k, node_budget).iota


def recovered_tree(decomp: ConsDecomposition) -> Tree:
    """The anchor tree of a decomposition, renumbered to 0..t-1."""
    ids = vertices_of(decomp.connection_vertices)
    index = {v: i for i, v in enumerate(ids)}
    return Tree(len(ids), tuple((index[u], index[v]) for u, v in decomp.tree_edges))


# -- tree enumeration up to isomorphism ---------------------------------------


def tree_canonical_key(tree: Tree) -> tuple:
    """Canonical key via centre-rooted AHU encoding; equal iff isomorphic."""
    adj = tree.adjacency()
    centers = _centers(tree.n, adj)

    def encode(root: int, parent: int) -> tuple:
        return tuple(sorted(encode(c, root) for c in adj[root] if c != parent))

    return (tree.n, min(encode(c, -1) for c in centers))


def _centers(n: int, adj: list[list[int]]) -> list[int]:
    if n == 1:
        return [0]
    degree = [len(a) for a in adj]
    layer = [v for v in range(n) if degree[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            degree[v] = 0
            for u in adj[v]:
                if degree[u] > 0:
                    degree[u] -= 1
                    if degree[u] == 1:
                        nxt.append(u)
        layer = nxt
    return sorted(layer)


def trees_isomorphic(a: Tree, b: Tree) -> bool:
    return tree_canonical_key(a) == tree_canonical_key(b)


def enumerate_trees(n: int) -> list[Tree]:
    """One representative per isomorphism class of trees on n vertices.

    Grown by leaf attachment: every tree on n vertices arises from one on
    n-1 by deleting a leaf, so attaching a new leaf everywhere and
    deduplicating by canonical key is exhaustive.
    """
    if not 1 <= n <= MAX_TREE_N:
        raise ValueError(f"tree enumeration supports 1 <= n <= {MAX_TREE_N}")
    level = [Tree(1, ())]
    for size in range(2, n + 1):
        seen: dict[tuple, Tree] = {}
        for tree in level:
            for v in range(tree.n):
                grown = Tree(size, tree.edges + ((v, size - 1),))
                key = tree_canonical_key(grown)
                if key not in seen:
                    seen[key] = grown
        level = [seen[key] for key in sorted(seen)]
    return level
