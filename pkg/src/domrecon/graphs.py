"""Simple undirected graphs with domination primitives.

Vertices are 0-based ints everywhere in this package; the 1-based ids of the
file format exist only inside parse_graph / format_graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


class GraphFormatError(ValueError):
    """Raised on malformed graph files. Carries the offending 1-based line."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class LimitError(RuntimeError):
    """Raised when a brute-force routine would exceed its configured limit."""


class Graph:
    """Immutable simple graph on vertices 0..n-1."""

    __slots__ = ("n", "_adj", "adj_mask", "nb_mask", "full_mask")

    def __init__(self, n: int, edges):
        if n < 1:
            raise ValueError("graph must have at least one vertex")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise ValueError(f"duplicate edge ({u},{v})")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(frozenset(s) for s in adj)
        # open and closed neighborhood bitmasks, the workhorses of every
        # domination check below
        self.adj_mask = tuple(sum(1 << w for w in s) for s in self._adj)
        self.nb_mask = tuple(self.adj_mask[v] | (1 << v) for v in range(n))
        self.full_mask = (1 << n) - 1

    @property
    def m(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        return sorted((u, v) for u in range(self.n) for v in self._adj[u] if u < v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def mask_of(vertices) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def set_of(mask: int) -> frozenset[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def is_connected(g: Graph) -> bool:
    """BFS connectivity; single-vertex graphs count as connected."""
    seen = 1
    frontier = [0]
    while frontier:
        nxt = []
        for v in frontier:
            fresh = g.adj_mask[v] & ~seen
            seen |= fresh
            while fresh:
                low = fresh & -fresh
                nxt.append(low.bit_length() - 1)
                fresh ^= low
        frontier = nxt
    return seen == g.full_mask


def parse_graph(text: str) -> Graph:
    """Parse the 'p ds <n> <m>' edge-list format (1-based, u < v)."""
    n = None
    declared_m = 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise GraphFormatError("duplicate header", lineno)
            if len(fields) != 4 or fields[1] != "ds":
                raise GraphFormatError("header must be 'p ds <n> <m>'", lineno)
            try:
                n, declared_m = int(fields[2]), int(fields[3])
            except ValueError:
                raise GraphFormatError("non-integer header field", lineno) from None
            if n < 1:
                raise GraphFormatError("vertex count must be at least 1", lineno)
            if declared_m < 0:
                raise GraphFormatError("negative edge count", lineno)
        elif fields[0] == "e":
            if n is None:
                raise GraphFormatError("edge before header", lineno)
            if len(fields) != 3:
                raise GraphFormatError("edge line must be 'e <u> <v>'", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphFormatError("non-integer vertex id", lineno) from None
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            if not (1 <= u < v <= n):
                raise GraphFormatError(
                    f"edge ({u},{v}) must satisfy 1 <= u < v <= {n}", lineno
                )
            if (u, v) in seen:
                raise GraphFormatError(f"duplicate edge ({u},{v})", lineno)
            seen.add((u, v))
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"unknown line type {fields[0]!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p ds' header")
    if len(edges) != declared_m:
        raise GraphFormatError(
            f"header declares {declared_m} edges but {len(edges)} were given"
        )
    return Graph(n, edges)


def format_graph(g: Graph, comments: list[str] | None = None) -> str:
    """Serialize to the 'p ds' format; inverse of parse_graph."""
    lines = [f"c {c}" for c in comments or []]
    lines.append(f"p ds {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_vertex_list(text: str) -> frozenset[int]:
    """Comma-separated 1-based ids, e.g. '1,3' -> frozenset({0, 2})."""
    items = [t for t in text.split(",") if t.strip()]
    if not items:
        return frozenset()
    try:
        ids = [int(t) for t in items]
    except ValueError:
        raise ValueError(f"bad vertex list {text!r}") from None
    if any(i < 1 for i in ids):
        raise ValueError("vertex ids are 1-based and positive")
    return frozenset(i - 1 for i in ids)


def format_vertex_list(s) -> str:
    return ",".join(str(v + 1) for v in sorted(s))


def is_dominating(g: Graph, s) -> bool:
    """True iff every vertex is in s or adjacent to a vertex of s."""
    cov = 0
    for v in s:
        cov |= g.nb_mask[v]
    return cov == g.full_mask


def is_minimal_dominating(g: Graph, s) -> bool:
    """Dominating, and no single vertex can be dropped."""
    members = sorted(s)
    cov = 0
    for v in members:
        cov |= g.nb_mask[v]
    if cov != g.full_mask:
        return False
    for v in members:
        rest = 0
        for u in members:
            if u != v:
                rest |= g.nb_mask[u]
        if rest == g.full_mask:
            return False
    return True


def reduce_to_minimal(g: Graph, s) -> tuple[frozenset[int], list[int]]:
    """Greedy minimalization of a dominating set.

    Scans vertices in ascending id, removes the first one whose removal keeps
    the set dominating, and restarts the scan; repeats until no vertex is
    removable. Returns the minimal subset and the removal order. Every prefix
    of the removal order passes through dominating sets only.
    """
    if not is_dominating(g, s):
        raise ValueError("input set is not dominating")
    current = set(s)
    removals: list[int] = []
    while True:
        for v in sorted(current):
            rest = 0
            for u in current:
                if u != v:
                    rest |= g.nb_mask[u]
            if rest == g.full_mask:
                current.remove(v)
                removals.append(v)
                break
        else:
            return frozenset(current), removals


def pop_removable(g: Graph, current: set[int], prefer_outside) -> int:
    """Remove and return the best droppable vertex of a dominating set.

    Candidates outside prefer_outside come first, lowest id breaking ties;
    a vertex is droppable when the rest still dominates. Mutates current.
    """
    full = g.full_mask
    nb = g.nb_mask
    for v in sorted(current, key=lambda v: (v in prefer_outside, v)):
        rest = 0
        for u in current:
            if u != v:
                rest |= nb[u]
        if rest == full:
            current.remove(v)
            return v
    raise ValueError(
        "no removable vertex above the claimed Gamma; is gamma_upper"
        " the true upper domination number?"
    )


def greedy_maximal_is(g: Graph, seed=frozenset()) -> frozenset[int]:
    """Grow an independent seed to a maximal independent set.

    Scans vertices in ascending id and adds every vertex with no neighbor in
    the current set. Deterministic; the result is a maximal independent set
    and therefore also a minimal dominating set.
    """
    smask = mask_of(seed)
    for v in seed:
        if g.adj_mask[v] & smask:
            raise ValueError("seed is not independent")
    for v in range(g.n):
        bit = 1 << v
        if not (smask & bit) and not (g.adj_mask[v] & smask):
            smask |= bit
    return set_of(smask)


@dataclass(frozen=True)
class GraphInvariants:
    """Exact domination/independence numbers with deterministic witnesses."""

    gamma_min: int
    gamma_upper: int
    alpha: int
    witness_min_ds: frozenset[int]
    witness_upper_ds: frozenset[int]
    witness_max_is: frozenset[int]


def exact_invariants(g: Graph, limit: int = 24) -> GraphInvariants:
    """Brute-force gamma, upper Gamma and alpha by full subset enumeration.

    Subsets are enumerated in size-then-lexicographic order, so each witness
    is the lexicographically first optimal set: the first dominating set
    found is the minimum-dominating witness, and the max-size records for
    minimal dominating / independent sets keep their first (lex-least)
    representative. Enumeration is 2**n; refuse above the vertex limit.
    """
    n = g.n
    if n > limit:
        raise LimitError(f"exact_invariants needs n <= {limit}, got {n}")
    nb = g.nb_mask
    adj = g.adj_mask
    full = g.full_mask
    gamma = None
    min_ds: tuple[int, ...] | None = None
    upper_size, upper_ds = -1, None
    alpha_size, max_is = 0, ()
    vertices = range(n)
    for size in range(n + 1):
        alpha_alive = alpha_size >= size - 1
        found_is = False
        for combo in itertools.combinations(vertices, size):
            cov = 0
            for v in combo:
                cov |= nb[v]
            if cov == full:
                if gamma is None:
                    gamma, min_ds = size, combo
                if size > upper_size and _is_minimal_given_cov(nb, combo, full):
                    upper_size, upper_ds = size, combo
            if alpha_alive and not found_is:
                mask = 0
                independent = True
                for v in combo:
                    if adj[v] & mask:
                        independent = False
                        break
                    mask |= 1 << v
                if independent:
                    found_is = True
                    if size > alpha_size or size == 0:
                        alpha_size, max_is = size, combo
    assert gamma is not None and upper_ds is not None
    return GraphInvariants(
        gamma_min=gamma,
        gamma_upper=upper_size,
        alpha=alpha_size,
        witness_min_ds=frozenset(min_ds),
        witness_upper_ds=frozenset(upper_ds),
        witness_max_is=frozenset(max_is),
    )


def _is_minimal_given_cov(nb, combo, full) -> bool:
    # every member needs a private closed neighbor (covered exactly once)
    for v in combo:
        rest = 0
        for u in combo:
            if u != v:
                rest |= nb[u]
        if rest == full:
            return False
    return True
