"""Deterministic instance generators.

Fixed vertex numbering throughout so that oracle outputs and recorded
examples stay bit-stable across runs. All vertices are 0-based here, as
everywhere outside the file formats.
"""

from __future__ import annotations

import heapq
import random

from .graphs import Graph
from .treewidth import TreeDecomposition


def gen_star(n: int) -> Graph:
    """K_{1,n}: center 0 joined to leaves 1..n (n + 1 vertices).

    The leaf set is a frozen dominating set at k = n, and the upper
    domination number is n.
    """
    if n < 1:
        raise ValueError("a star needs at least one leaf")
    return Graph(n + 1, [(0, v) for v in range(1, n + 1)])


def gen_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    return Graph(n, [(v, v + 1) for v in range(n - 1)])


def gen_grid(rows: int, cols: int) -> Graph:
    """rows x cols grid; vertex (r, c) gets id r * cols + c."""
    if rows < 1 or cols < 1:
        raise ValueError("grid dimensions must be positive")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def gen_random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree, decoded from a seeded Pruefer sequence."""
    if n < 1:
        raise ValueError("a tree needs at least one vertex")
    if n == 1:
        return Graph(1, [])
    if n == 2:
        return Graph(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    # classic decode: repeatedly match the smallest leaf with the next code entry
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    last = sorted(leaves)
    edges.append((last[0], last[1]))
    return Graph(n, edges)


def _mynhardt_vertex(ell: int, i: int, j: int) -> int:
    # clique member c_i^j for i = 0..ell-1, j = 1..ell; u_0 is vertex 0
    return i * ell + j


def gen_mynhardt(ell: int) -> Graph:
    """The clique-matching family with a slow domination threshold.

    One outer clique C_0 plus ell - 1 inner cliques, each of size ell; a
    vertex u_0 joined to all of C_0; and a perfect matching between every
    inner clique and C_0 (the j-th members are matched). n = ell^2 + 1,
    the upper domination number is ell, and the reconfiguration graph
    stays disconnected up to threshold 2 ell - 2.

    Numbering: u_0 = vertex 0, C_0 = 1..ell, then each inner clique takes
    the next ell ids in order.
    """
    if ell < 3:
        raise ValueError("ell must be at least 3")
    edges = []
    for j in range(1, ell + 1):
        edges.append((0, _mynhardt_vertex(ell, 0, j)))
    for i in range(ell):
        members = [_mynhardt_vertex(ell, i, j) for j in range(1, ell + 1)]
        for a in range(ell):
            for b in range(a + 1, ell):
                edges.append((members[a], members[b]))
    for i in range(1, ell):
        for j in range(1, ell + 1):
            edges.append((_mynhardt_vertex(ell, i, j), _mynhardt_vertex(ell, 0, j)))
    return Graph(ell * ell + 1, edges)


def gen_mynhardt_td(ell: int) -> TreeDecomposition:
    """Width-ell tree decomposition of gen_mynhardt(ell).

    A central bag C_0 + u_0, and for each inner clique a chain of ell
    bags that sheds C_0 one vertex at a time while growing the inner
    clique: the j-th bag holds c_0^j..c_0^ell and c_i^1..c_i^j. Every bag
    has exactly ell + 1 vertices; 1 + (ell - 1) ell bags in total.
    """
    if ell < 3:
        raise ValueError("ell must be at least 3")
    central = frozenset([0] + [_mynhardt_vertex(ell, 0, j) for j in range(1, ell + 1)])
    bags = [central]
    edges = []
    for i in range(1, ell):
        for j in range(1, ell + 1):
            bag = frozenset(
                [_mynhardt_vertex(ell, 0, jj) for jj in range(j, ell + 1)]
                + [_mynhardt_vertex(ell, i, jj) for jj in range(1, j + 1)]
            )
            bags.append(bag)
            idx = len(bags) - 1
            edges.append((0 if j == 1 else idx - 1, idx))
    return TreeDecomposition(
        n=ell * ell + 1,
        bags=tuple(bags),
        tree_edges=tuple(edges),
        root=len(bags) - 1,
    )


def gen_mynhardt_pd(ell: int) -> TreeDecomposition:
    """Path decomposition of gen_mynhardt(ell), width 2 ell - 1.

    Bags: C_0 + u_0, then C_0 + C_i for each inner clique, in a path.
    The first bag hangs off the second so that the bags holding C_0 stay
    consecutive.
    """
    if ell < 3:
        raise ValueError("ell must be at least 3")
    outer = [_mynhardt_vertex(ell, 0, j) for j in range(1, ell + 1)]
    bags = [frozenset([0] + outer)]
    for i in range(1, ell):
        bags.append(
            frozenset(outer + [_mynhardt_vertex(ell, i, j) for j in range(1, ell + 1)])
        )
    edges = [(i, i + 1) for i in range(len(bags) - 1)]
    return TreeDecomposition(
        n=ell * ell + 1,
        bags=tuple(bags),
        tree_edges=tuple(edges),
        root=len(bags) - 1,
    )


def gen_suzuki_planar() -> Graph:
    """Nine-vertex planar graph whose reconfiguration graph breaks at k = 4.

    Three nested triangles (drawn concentrically, so the graph is plainly
    planar: each triangle sits inside the previous one and the connecting
    edges run radially between consecutive rings): outer 1,2,3, middle
    4,5,6, inner 7,8,9, with edges a_i b_i and b_i c_i. The middle
    triangle is a minimal dominating set stuck in a 7-node component of
    the reconfiguration graph at k = 4.
    """
    edges = [
        (0, 1), (1, 2), (0, 2),
        (3, 4), (4, 5), (3, 5),
        (6, 7), (7, 8), (6, 8),
        (0, 3), (1, 4), (2, 5),
        (3, 6), (4, 7), (5, 8),
    ]
    return Graph(9, edges)
