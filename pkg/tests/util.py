"""Shared builders and independent oracles for the test suite.

The oracles here deliberately avoid the library's own algorithms: cycle
existence scans raw vertex permutations, isolation numbers scan subsets in
increasing size, and isomorphism deduplication inserts whole permutation
orbits into a seen-set.  They are slow and obviously correct, which is the
point.
"""

from __future__ import annotations

from itertools import combinations, permutations

from cycleiso.graphs import Graph, from_edge_list


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def diamond() -> Graph:
    return from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)])


def c4_plus() -> Graph:
    # 4-cycle 0-1-2-3 with a pendant vertex 4 attached to 0
    return from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])


def disjoint_union(a: Graph, b: Graph) -> Graph:
    edges = a.edges() + [(u + a.n, v + a.n) for u, v in b.edges()]
    return from_edge_list(a.n + b.n, edges)


def graph_from_bitmask(n: int, mask: int) -> Graph:
    """Graph from an edge subset encoded over the pairs of range(n) in order."""
    pairs = list(combinations(range(n), 2))
    return from_edge_list(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def oracle_has_k_cycle(g: Graph, k: int) -> bool:
    """Scan k-permutations for a closed walk with all consecutive pairs adjacent."""
    if g.n < k:
        return False
    adj = g.adj
    for perm in permutations(range(g.n), k):
        if perm[0] != min(perm) or perm[1] > perm[-1]:
            continue  # rotations and reflections repeat the same vertex set
        if all(adj[perm[i]] >> perm[(i + 1) % k] & 1 for i in range(k)):
            return True
    return False


def oracle_all_k_cycles(g: Graph, k: int) -> set[frozenset[tuple[int, int]]]:
    """Every k-cycle as its edge set, deduplicated exactly."""
    found = set()
    for perm in permutations(range(g.n), k):
        if all(g.adj[perm[i]] >> perm[(i + 1) % k] & 1 for i in range(k)):
            found.add(
                frozenset(
                    (min(perm[i], perm[(i + 1) % k]), max(perm[i], perm[(i + 1) % k]))
                    for i in range(k)
                )
            )
    return found


def _perm_has_k_cycle(adj: dict[int, set[int]], keep: list[int], k: int) -> bool:
    if len(keep) < k:
        return False
    for perm in permutations(keep, k):
        if perm[0] != min(perm) or perm[1] > perm[-1]:
            continue
        if all(perm[(i + 1) % k] in adj[perm[i]] for i in range(k)):
            return True
    return False


def oracle_is_isolating(g: Graph, members: tuple[int, ...], k: int) -> bool:
    hood = set(members)
    for v in members:
        for u in range(g.n):
            if g.adj[v] >> u & 1:
                hood.add(u)
    keep = [v for v in range(g.n) if v not in hood]
    adj = {
        v: {u for u in keep if g.adj[v] >> u & 1} for v in keep
    }
    return not _perm_has_k_cycle(adj, keep, k)


def oracle_iota(g: Graph, k: int) -> int:
    """Increasing-size subset scan with no pruning."""
    for size in range(g.n + 1):
        for members in combinations(range(g.n), size):
            if oracle_is_isolating(g, members, k):
                return size
    raise AssertionError("unreachable: the whole vertex set isolates")


def oracle_connected_class_count(n: int) -> int:
    """Count connected graphs on n vertices up to isomorphism.

    Iterates every edge subset; each newly seen connected graph counts one
    class and its entire permutation orbit is inserted into the seen-set.
    """
    pairs = list(combinations(range(n), 2))
    pair_index = {p: i for i, p in enumerate(pairs)}
    perm_tables = []
    for perm in permutations(range(n)):
        table = []
        for u, v in pairs:
            pu, pv = perm[u], perm[v]
            table.append(pair_index[(min(pu, pv), max(pu, pv))])
        perm_tables.append(table)

    def connected(mask: int) -> bool:
        adj = [0] * n
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= adj[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << n) - 1

    seen_masks: set[int] = set()
    count = 0
    for mask in range(1 << len(pairs)):
        if mask in seen_masks or not connected(mask):
            continue
        count += 1
        for table in perm_tables:
            image = 0
            m = mask
            while m:
                low = m & -m
                image |= 1 << table[low.bit_length() - 1]
                m ^= low
            seen_masks.add(image)
    return count


def oracle_tree_class_count(n: int) -> int:
    """Count trees on n vertices up to isomorphism via Pruefer sequences."""
    if n == 1:
        return 1
    if n == 2:
        return 1
    pairs = list(combinations(range(n), 2))
    pair_index = {p: i for i, p in enumerate(pairs)}
    perm_tables = []
    for perm in permutations(range(n)):
        table = []
        for u, v in pairs:
            pu, pv = perm[u], perm[v]
            table.append(pair_index[(min(pu, pv), max(pu, pv))])
        perm_tables.append(table)

    def prufer_to_mask(seq: tuple[int, ...]) -> int:
        degree = [1] * n
        for v in seq:
            degree[v] += 1
        mask = 0
        work = list(seq)
        leaves = sorted(v for v in range(n) if degree[v] == 1)
        for v in work:
            leaf = leaves.pop(0)
            mask |= 1 << pair_index[(min(leaf, v), max(leaf, v))]
            degree[v] -= 1
            if degree[v] == 1:
                import bisect

                bisect.insort(leaves, v)
        u, v = leaves
        mask |= 1 << pair_index[(u, v)]
        return mask

    from itertools import product

    seen: set[int] = set()
    count = 0
    for seq in product(range(n), repeat=n - 2):
        mask = prufer_to_mask(tuple(seq))
        if mask in seen:
            continue
        count += 1
        for table in perm_tables:
            image = 0
            m = mask
            while m:
                low = m & -m
                image |= 1 << table[low.bit_length() - 1]
                m ^= low
            seen.add(image)
    return count
