"""Independent test oracles.

Everything here computes reference answers through a different route than
the package (networkx, ILP via scipy, elimination-order search) so that a
disagreement in a test points at a real defect rather than a shared bug.
"""

from __future__ import annotations

import itertools

import networkx as nx
import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp

from domrecon import Graph
from domrecon.graphs import is_minimal_dominating
from domrecon.treewidth import TreeDecomposition


def nx_to_graph(G: nx.Graph) -> Graph:
    mapping = {v: i for i, v in enumerate(sorted(G.nodes()))}
    return Graph(
        max(len(mapping), 1),
        [(mapping[u], mapping[v]) for u, v in G.edges()],
    )


def graph_to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def connected_atlas() -> dict[int, list[Graph]]:
    """One representative per isomorphism class of connected graphs, n <= 7."""
    out: dict[int, list[Graph]] = {n: [] for n in range(1, 8)}
    for G in nx.graph_atlas_g()[1:]:
        if nx.is_connected(G):
            out[G.number_of_nodes()].append(nx_to_graph(G))
    return out


def _iso_key(G: nx.Graph):
    degrees = sorted(d for _, d in G.degree())
    triangles = sorted(nx.triangles(G).values())
    nbdeg = sorted(
        sum(G.degree(u) for u in G[v]) for v in G
    )
    return (G.number_of_edges(), tuple(degrees), tuple(triangles), tuple(nbdeg))


def connected_order_8(seven_vertex: list[Graph]) -> list[Graph]:
    """Every connected 8-vertex graph, one per isomorphism class.

    Built by joining a new vertex to each nonempty neighborhood of each
    connected 7-vertex graph (every connected graph on 8 vertices has a
    non-cut vertex, so all classes are reached), then deduplicating with
    cheap invariants first and isomorphism tests inside each bucket.
    """
    buckets: dict[tuple, list[nx.Graph]] = {}
    result: list[Graph] = []
    for g7 in seven_vertex:
        base = graph_to_nx(g7)
        for mask in range(1, 1 << 7):
            G = base.copy()
            G.add_node(7)
            for v in range(7):
                if (mask >> v) & 1:
                    G.add_edge(7, v)
            key = _iso_key(G)
            bucket = buckets.setdefault(key, [])
            if any(nx.is_isomorphic(G, H) for H in bucket):
                continue
            bucket.append(G)
            result.append(nx_to_graph(G))
    return result


def all_minimal_dominating_sets(g: Graph) -> list[frozenset[int]]:
    out = []
    for size in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            if is_minimal_dominating(g, combo):
                out.append(frozenset(combo))
    return out


def _solve_binary(c, constraints) -> tuple[int, np.ndarray]:
    n = len(c)
    res = milp(
        c=np.asarray(c, dtype=float),
        constraints=constraints or None,
        integrality=np.ones(n),
        bounds=Bounds(0, 1),
    )
    assert res.success, res.message
    return round(res.fun), np.round(res.x).astype(int)


def milp_gamma(g: Graph) -> tuple[int, frozenset[int]]:
    """Minimum dominating set by integer programming."""
    rows = np.zeros((g.n, g.n))
    for v in range(g.n):
        rows[v, v] = 1
        for u in g.neighbors(v):
            rows[v, u] = 1
    value, x = _solve_binary(
        np.ones(g.n), [LinearConstraint(rows, lb=1, ub=np.inf)]
    )
    return value, frozenset(int(v) for v in np.flatnonzero(x[: g.n]))


def milp_alpha(g: Graph) -> int:
    """Maximum independent set by integer programming."""
    edges = list(g.edges())
    constraints = []
    if edges:
        rows = np.zeros((len(edges), g.n))
        for i, (u, v) in enumerate(edges):
            rows[i, u] = rows[i, v] = 1
        constraints.append(LinearConstraint(rows, lb=-np.inf, ub=1))
    value, _ = _solve_binary(-np.ones(g.n), constraints)
    return -value


def milp_gamma_upper(g: Graph) -> int:
    """Upper domination number by integer programming.

    A dominating set is minimal iff every member v has a private vertex w
    within N[v] whose closed neighborhood meets the set only in v. One
    binary p_{v,w} per such pair enforces that.
    """
    pairs = [(v, w) for v in range(g.n) for w in sorted({v, *g.neighbors(v)})]
    index = {vw: g.n + i for i, vw in enumerate(pairs)}
    total = g.n + len(pairs)
    rows, lbs, ubs = [], [], []

    def row(entries, lb, ub):
        r = np.zeros(total)
        for j, coeff in entries:
            r[j] = coeff
        rows.append(r)
        lbs.append(lb)
        ubs.append(ub)

    for v in range(g.n):
        row([(u, 1.0) for u in {v, *g.neighbors(v)}], 1, np.inf)
    for v, w in pairs:
        j = index[(v, w)]
        row([(v, 1.0), (j, -1.0)], 0, np.inf)
        for u in {w, *g.neighbors(w)} - {v}:
            row([(j, 1.0), (u, 1.0)], -np.inf, 1)
    for v in range(g.n):
        entries = [(index[(v, w)], 1.0) for w in sorted({v, *g.neighbors(v)})]
        row(entries + [(v, -1.0)], 0, np.inf)

    c = np.concatenate([-np.ones(g.n), np.zeros(len(pairs))])
    value, _ = _solve_binary(
        c, [LinearConstraint(np.vstack(rows), lb=lbs, ub=ubs)]
    )
    return -value


def degeneracy(g: Graph) -> int:
    remaining = set(range(g.n))
    degree = {v: g.degree(v) for v in remaining}
    best = 0
    while remaining:
        v = min(remaining, key=lambda u: (degree[u], u))
        best = max(best, degree[v])
        remaining.remove(v)
        for u in g.neighbors(v):
            if u in remaining:
                degree[u] -= 1
    return best


def _elimination_neighbors(adj: list[int], v: int, smask: int) -> int:
    # vertices outside smask reachable from v through smask
    result = 0
    seen = 1 << v
    stack = [v]
    while stack:
        u = stack.pop()
        new = adj[u] & ~seen
        seen |= new
        while new:
            bit = new & -new
            new ^= bit
            w = bit.bit_length() - 1
            if (smask >> w) & 1:
                stack.append(w)
            else:
                result |= bit
    return result


def _elimination_order(g: Graph, width: int) -> list[int] | None:
    full = g.full_mask
    adj = g.adj_mask
    dead: set[int] = set()
    order: list[int] = []

    def rec(smask: int) -> bool:
        if smask == full:
            return True
        if smask in dead:
            return False
        for v in range(g.n):
            if not (smask >> v) & 1:
                nb = _elimination_neighbors(adj, v, smask)
                if nb.bit_count() <= width:
                    order.append(v)
                    if rec(smask | (1 << v)):
                        return True
                    order.pop()
        dead.add(smask)
        return False

    return order if rec(0) else None


def exact_treewidth(g: Graph) -> int:
    width = degeneracy(g)
    while _elimination_order(g, width) is None:
        width += 1
    return width


def exact_tree_decomposition(g: Graph) -> TreeDecomposition:
    """Minimum-width decomposition from an optimal elimination order."""
    width = degeneracy(g)
    order = _elimination_order(g, width)
    while order is None:
        width += 1
        order = _elimination_order(g, width)
    position = {v: i for i, v in enumerate(order)}
    bags = []
    parents = []
    smask = 0
    for i, v in enumerate(order):
        nb = _elimination_neighbors(g.adj_mask, v, smask)
        bag = {v}
        parent = None
        best = None
        while nb:
            bit = nb & -nb
            nb ^= bit
            u = bit.bit_length() - 1
            bag.add(u)
            if best is None or position[u] < best:
                best = position[u]
        parent = best if best is not None else (i + 1 if i + 1 < g.n else None)
        bags.append(frozenset(bag))
        parents.append(parent)
        smask |= 1 << v
    edges = [(i, p) for i, p in enumerate(parents) if p is not None]
    return TreeDecomposition(
        n=g.n, bags=tuple(bags), tree_edges=tuple(edges), root=g.n - 1
    )


def tree_natural_decomposition(g: Graph) -> TreeDecomposition:
    """Width-1 decomposition of a tree: one bag per edge, rooted at 0."""
    if g.n == 1:
        return TreeDecomposition(n=1, bags=(frozenset({0}),), tree_edges=(), root=0)
    parent = {0: None}
    bfs_order = [0]
    queue = [0]
    while queue:
        u = queue.pop(0)
        for w in g.neighbors(u):
            if w not in parent:
                parent[w] = u
                bfs_order.append(w)
                queue.append(w)
    assert len(bfs_order) == g.n, "input is not a connected tree"
    bag_index = {}
    bags = []
    edges = []
    first_child = None
    for v in bfs_order[1:]:
        bags.append(frozenset({v, parent[v]}))
        bag_index[v] = len(bags) - 1
        if parent[v] == 0:
            if first_child is None:
                first_child = v
            else:
                edges.append((bag_index[v], bag_index[first_child]))
        else:
            edges.append((bag_index[v], bag_index[parent[v]]))
    return TreeDecomposition(
        n=g.n, bags=tuple(bags), tree_edges=tuple(edges), root=len(bags) - 1
    )
