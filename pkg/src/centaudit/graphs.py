"""Simple undirected graphs: construction, edge-list I/O, generators, enumeration.

Vertices are always the integers ``0..n-1``. Graphs are immutable after
construction and safe to share across threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from random import Random
from typing import Iterable, Iterator, Mapping


class EdgeListError(ValueError):
    """Raised for malformed edge-list input; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    ``edges`` is canonical: each pair ``(u, v)`` has ``u < v`` and the tuple is
    sorted lexicographically, so two equal graphs compare and hash equal.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, validating simplicity (no loops, no duplicates)."""
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        canonical = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in canonical:
                raise ValueError(f"duplicate edge ({key[0]}, {key[1]})")
            canonical.add(key)
        return cls(n, tuple(sorted(canonical)))

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        """Adjacency sets indexed by vertex."""
        neighbors: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            neighbors[u].add(v)
            neighbors[v].add(u)
        return tuple(frozenset(s) for s in neighbors)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def is_connected(self) -> bool:
        """True iff every vertex is reachable from vertex 0 (vacuously for n <= 1)."""
        if self.n <= 1:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for w in self.adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise ValueError(f"invalid vertex id {v!r} for graph on {self.n} vertices")


@dataclass(frozen=True)
class SubgraphView:
    """An ordered subset of a host graph's vertices, seen as an induced subgraph.

    The view keeps host vertex ids; its induced edges are exactly the host
    edges with both endpoints among ``members``.
    """

    host: Graph
    members: tuple[int, ...]

    def __post_init__(self):
        seen = set()
        for v in self.members:
            self.host.check_vertex(v)
            if v in seen:
                raise ValueError(f"duplicate member {v}")
            seen.add(v)

    def __len__(self) -> int:
        return len(self.members)

    def induced_edges(self) -> tuple[tuple[int, int], ...]:
        """Host edges with both endpoints in the view, in host ids, sorted."""
        inside = set(self.members)
        return tuple(e for e in self.host.edges if e[0] in inside and e[1] in inside)

    def as_graph(self) -> Graph:
        """The induced subgraph relabeled to 0..len-1 following member order."""
        index = {v: i for i, v in enumerate(self.members)}
        edges = [(index[u], index[v]) for u, v in self.induced_edges()]
        return Graph.from_edges(len(self.members), edges)


# ---------------------------------------------------------------------------
# Edge-list text format
#
#   optional header line:  n <count>
#   one edge per line:     u v        (0-based ids, whitespace separated)
#   '#' starts a comment; blank lines ignored
# ---------------------------------------------------------------------------

def parse_edge_list(text: str | Iterable[str]) -> Graph:
    """Parse the edge-list text format into a Graph.

    Without a header, the vertex count is 1 + the largest id mentioned.
    Rejects malformed lines, self-loops, duplicate edges, and ids at or above
    a declared header count, reporting the offending line number.
    """
    lines = text.splitlines() if isinstance(text, str) else list(text)
    declared_n: int | None = None
    header_allowed = True
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    max_id = -1
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if header_allowed and tokens[0] == "n":
            header_allowed = False
            if len(tokens) != 2:
                raise EdgeListError("header must be 'n <count>'", lineno)
            try:
                declared_n = int(tokens[1])
            except ValueError:
                raise EdgeListError(f"bad vertex count {tokens[1]!r}", lineno) from None
            if declared_n < 0:
                raise EdgeListError(f"negative vertex count {declared_n}", lineno)
            continue
        header_allowed = False
        if len(tokens) != 2:
            raise EdgeListError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListError(f"non-integer vertex id in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise EdgeListError(f"negative vertex id in {line!r}", lineno)
        if u == v:
            raise EdgeListError(f"self-loop at vertex {u}", lineno)
        if declared_n is not None and (u >= declared_n or v >= declared_n):
            raise EdgeListError(
                f"vertex id {max(u, v)} >= declared count {declared_n}", lineno
            )
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise EdgeListError(f"duplicate edge {key[0]} {key[1]}", lineno)
        seen.add(key)
        edges.append(key)
        max_id = max(max_id, u, v)
    if declared_n is None:
        if max_id < 0:
            raise EdgeListError("empty edge list and no 'n <count>' header")
        declared_n = max_id + 1
    return Graph.from_edges(declared_n, edges)


def serialize_edge_list(g: Graph) -> str:
    """Canonical edge-list text: sorted edges, header only when ids alone
    would under-determine the vertex count (isolated vertices)."""
    lines = []
    top = 1 + max(v for _, v in g.edges) if g.edges else 0
    if top < g.n:
        lines.append(f"n {g.n}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "".join(line + "\n" for line in lines)


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """Star with center 0 and the given number of leaves."""
    if leaves < 0:
        raise ValueError("star needs leaves >= 0")
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def gnp_graph(n: int, p: float, seed: int = 0) -> Graph:
    """G(n, p): each of the n(n-1)/2 possible edges present with probability p."""
    if n < 1:
        raise ValueError("gnp needs n >= 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"gnp needs 0 <= p <= 1, got {p}")
    rng = Random(seed)
    edges = [pair for pair in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def watts_strogatz_graph(n: int, k: int, p: float, seed: int = 0) -> Graph:
    """Ring lattice (each vertex adjacent to its k/2 nearest on both sides)
    with each clockwise edge rewired with probability p.

    Rewiring avoids self-loops and duplicate edges and is skipped for vertices
    already adjacent to everything; p=0 returns the exact lattice.
    """
    if n < 1:
        raise ValueError("watts_strogatz needs n >= 1")
    if k % 2 != 0:
        raise ValueError(f"watts_strogatz needs even k, got {k}")
    if not 0 <= k < n:
        raise ValueError(f"watts_strogatz needs 0 <= k < n, got k={k} n={n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"watts_strogatz needs 0 <= p <= 1, got {p}")
    rng = Random(seed)
    neighbors: list[set[int]] = [set() for _ in range(n)]
    for span in range(1, k // 2 + 1):
        for i in range(n):
            j = (i + span) % n
            neighbors[i].add(j)
            neighbors[j].add(i)
    if p > 0:
        for span in range(1, k // 2 + 1):
            for i in range(n):
                j = (i + span) % n
                if rng.random() >= p:
                    continue
                if len(neighbors[i]) >= n - 1:
                    continue  # no legal target left
                w = rng.randrange(n)
                while w == i or w in neighbors[i]:
                    w = rng.randrange(n)
                neighbors[i].discard(j)
                neighbors[j].discard(i)
                neighbors[i].add(w)
                neighbors[w].add(i)
    edges = [(u, v) for u in range(n) for v in neighbors[u] if u < v]
    return Graph.from_edges(n, edges)


GENERATOR_MODELS = ("path", "cycle", "star", "complete", "gnp", "watts_strogatz")


def generate(model: str, params: Mapping[str, object], seed: int = 0) -> Graph:
    """Dispatch to a named generator; deterministic for fixed (model, params, seed)."""
    params = dict(params)
    try:
        if model == "path":
            return path_graph(int(params.pop("n")))
        if model == "cycle":
            return cycle_graph(int(params.pop("n")))
        if model == "star":
            return star_graph(int(params.pop("leaves")))
        if model == "complete":
            return complete_graph(int(params.pop("n")))
        if model == "gnp":
            return gnp_graph(int(params.pop("n")), float(params.pop("p")), seed)
        if model == "watts_strogatz":
            return watts_strogatz_graph(
                int(params.pop("n")), int(params.pop("k")), float(params.pop("p")), seed
            )
    except KeyError as missing:
        raise ValueError(f"model {model!r} requires parameter {missing}") from None
    raise ValueError(f"unknown model {model!r}; choose from {GENERATOR_MODELS}")


# ---------------------------------------------------------------------------
# Exhaustive enumeration of labeled connected graphs
#
# The adjacency bitmask assigns bit k to the k-th vertex pair in row-major
# upper-triangle order: (0,1), (0,2), ..., (0,n-1), (1,2), ...; enumeration
# is in ascending mask order, which fixes a reproducible graph order.
# ---------------------------------------------------------------------------

MAX_ENUMERATION_N = 8


def _pair_table(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def graph_from_mask(n: int, mask: int) -> Graph:
    """Graph whose edge set is the given adjacency bitmask."""
    pairs = _pair_table(n)
    if not 0 <= mask < (1 << len(pairs)):
        raise ValueError(f"mask {mask} out of range for n={n}")
    return Graph(n, tuple(p for k, p in enumerate(pairs) if mask >> k & 1))


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Yield every labeled simple connected graph on n vertices exactly once,
    in ascending adjacency-bitmask order. No isomorphism deduplication."""
    yield from enumerate_connected_range(n, 0, None)


def enumerate_connected_range(n: int, start: int, stop: int | None) -> Iterator[Graph]:
    """Connected graphs whose adjacency bitmask lies in [start, stop).

    Same order as :func:`enumerate_connected`; the full mask range may be
    partitioned across workers and the pieces concatenated.
    """
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUMERATION_N}, got {n}")
    pairs = _pair_table(n)
    total = 1 << len(pairs)
    if stop is None or stop > total:
        stop = total
    start = max(start, 0)
    full = (1 << n) - 1
    min_edges = n - 1
    for mask in range(start, stop):
        if mask.bit_count() < min_edges:
            continue
        rows = [0] * n
        for k, (u, v) in enumerate(pairs):
            if mask >> k & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        # bitmask BFS from vertex 0
        seen = 1
        frontier = rows[0] & ~seen
        seen |= frontier
        while frontier:
            reach = 0
            m = frontier
            while m:
                low = m & -m
                reach |= rows[low.bit_length() - 1]
                m ^= low
            frontier = reach & ~seen
            seen |= frontier
        if seen == full:
            yield Graph(n, tuple(p for k, p in enumerate(pairs) if mask >> k & 1))


# ---------------------------------------------------------------------------
# Neighborhoods and vertex subsets
# ---------------------------------------------------------------------------

def neighborhood(g: Graph, v: int, closed: bool = False) -> SubgraphView:
    """Open view: the neighbors of v. Closed view: neighbors plus v itself."""
    g.check_vertex(v)
    members = set(g.adj[v])
    if closed:
        members.add(v)
    return SubgraphView(g, tuple(sorted(members)))


SUBSET_ENUMERATION_MAX_N = 10
SUBSET_SAMPLE_COUNT = 1000


def induced_subsets(
    g: Graph,
    min_size: int,
    sample_count: int = SUBSET_SAMPLE_COUNT,
    seed: int = 0,
) -> Iterator[SubgraphView]:
    """Deterministic stream of vertex-subset views of a connected host.

    For hosts on at most 10 vertices this is every subset of size >= min_size
    (by size, then lexicographically); larger hosts get ``sample_count``
    distinct seeded random subsets. Subsets need not induce connected graphs.
    """
    if min_size < 2:
        raise ValueError(f"min_size must be >= 2, got {min_size}")
    if not g.is_connected():
        raise ValueError("host graph must be connected")
    if g.n <= SUBSET_ENUMERATION_MAX_N:
        for size in range(min_size, g.n + 1):
            for members in combinations(range(g.n), size):
                yield SubgraphView(g, members)
        return
    rng = Random(seed)
    seen: set[int] = set()
    while len(seen) < sample_count:
        mask = rng.getrandbits(g.n)
        if mask.bit_count() < min_size or mask in seen:
            continue
        seen.add(mask)
        yield SubgraphView(g, tuple(v for v in range(g.n) if mask >> v & 1))


def pendant_vertices(g: Graph) -> frozenset[int]:
    """The vertices of degree exactly 1."""
    return frozenset(v for v in range(g.n) if len(g.adj[v]) == 1)
