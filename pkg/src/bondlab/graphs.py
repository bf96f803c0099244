"""Simple undirected graphs on dense integer vertices, with graph6 I/O.

Adjacency is stored as one bitmask per vertex, so neighbourhood unions,
intersections and domination checks are single word operations.  Graphs are
immutable after construction; every operation returns a new value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "GraphFormatError",
    "DegreeStats",
    "parse_graph6",
    "emit_graph6",
    "make_family",
    "FAMILY_NAMES",
    "enumerate_connected_graphs",
    "girth",
    "degree_stats",
    "common_neighbors",
    "components",
    "components_with_vertices",
    "canonical_code",
]

GRAPH6_HEADER = ">>graph6<<"
_G6_MAX_N = 62

ENUMERATION_MAX_N = 6


class GraphFormatError(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the defect."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte {offset})"
        super().__init__(message)
        self.offset = offset


class Graph:
    """Loop-free undirected graph with vertices ``0..n-1``.

    ``adjacency[v]`` is a bitmask of the neighbours of ``v``.  The edge count
    ``m`` is derived once and cached.
    """

    __slots__ = ("n", "adjacency", "m")

    def __init__(self, n: int, adjacency: Sequence[int]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(adjacency) != n:
            raise ValueError(f"expected {n} adjacency masks, got {len(adjacency)}")
        adj = tuple(adjacency)
        degree_total = 0
        for v, mask in enumerate(adj):
            if mask >> n:
                raise ValueError(f"vertex {v} has neighbours outside 0..{n - 1}")
            if mask & (1 << v):
                raise ValueError(f"loop at vertex {v}")
            degree_total += mask.bit_count()
        for v, mask in enumerate(adj):
            rest = mask
            while rest:
                u = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                if not adj[u] & (1 << v):
                    raise ValueError(f"edge {v}-{u} is not symmetric")
        self.n = n
        self.adjacency = adj
        self.m = degree_total // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def neighbors(self, v: int) -> Iterator[int]:
        mask = self.adjacency[v]
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] & (1 << v))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted ``(u, v)`` pairs with ``u < v``, lexicographic."""
        out = []
        for u in range(self.n):
            mask = self.adjacency[u] >> (u + 1)
            v = u + 1
            while mask:
                if mask & 1:
                    out.append((u, v))
                mask >>= 1
                v += 1
        return out

    def closed_mask(self, v: int) -> int:
        return self.adjacency[v] | (1 << v)

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = list(self.adjacency)
        for u, v in edges:
            if not adj[u] & (1 << v):
                raise ValueError(f"edge {u}-{v} not present")
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return Graph(self.n, adj)

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v or self.has_edge(u, v):
            raise ValueError(f"cannot add edge {u}-{v}")
        adj = list(self.adjacency)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, adj)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            grown = seen
            rest = frontier
            while rest:
                v = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                grown |= self.adjacency[v]
            frontier = grown & ~seen
            seen = grown
        return seen == (1 << self.n) - 1

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adjacency == other.adjacency
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DegreeStats:
    """Extremal and average degrees; the average is kept exact as 2m/n."""

    max_degree: int
    min_degree: int
    average_degree: Fraction


def degree_stats(g: Graph) -> DegreeStats:
    if g.n < 1:
        raise ValueError("degree stats need at least one vertex")
    degrees = [g.degree(v) for v in range(g.n)]
    return DegreeStats(
        max_degree=max(degrees),
        min_degree=min(degrees),
        average_degree=Fraction(2 * g.m, g.n),
    )


def common_neighbors(g: Graph, u: int, v: int) -> int:
    """Number of shared neighbours of the endpoints of edge ``uv``."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"vertex out of range: {u}, {v}")
    if not g.has_edge(u, v):
        raise ValueError(f"{u}-{v} is not an edge")
    return (g.adjacency[u] & g.adjacency[v]).bit_count()


def girth(g: Graph) -> float:
    """Length of a shortest cycle, or ``math.inf`` for forests.

    Runs one breadth-first search per root; the shortest cycle through the
    root is found when a non-tree edge joins two search branches, and the
    minimum over all roots is the girth.
    """
    best = math.inf
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = [root]
        while queue:
            nxt = []
            for u in queue:
                if 2 * dist[u] >= best - 1:
                    continue
                for v in g.neighbors(u):
                    if dist[v] == -1:
                        dist[v] = dist[u] + 1
                        parent[v] = u
                        nxt.append(v)
                    elif v != parent[u]:
                        cycle = dist[u] + dist[v] + 1
                        if cycle < best:
                            best = cycle
            queue = nxt
    return best


def components_with_vertices(g: Graph) -> list[tuple[Graph, tuple[int, ...]]]:
    """Connected components with their original vertex labels.

    Components are ordered by smallest original vertex and each is reindexed
    densely in the order of its original labels.
    """
    seen = 0
    out = []
    for start in range(g.n):
        if seen & (1 << start):
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            grown = comp
            rest = frontier
            while rest:
                v = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                grown |= g.adjacency[v]
            frontier = grown & ~comp
            comp = grown
        seen |= comp
        verts = []
        rest = comp
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            verts.append(v)
        index = {v: i for i, v in enumerate(verts)}
        sub = Graph.from_edges(
            len(verts),
            [
                (index[u], index[v])
                for u, v in g.edges()
                if comp & (1 << u) and comp & (1 << v)
            ],
        )
        out.append((sub, tuple(verts)))
    return out


def components(g: Graph) -> list[Graph]:
    return [sub for sub, _ in components_with_vertices(g)]


# ---------------------------------------------------------------------------
# graph6 codec (short form, n <= 62; ">>graph6<<" header tolerated on input)
# ---------------------------------------------------------------------------


def _pair_order(n: int) -> list[tuple[int, int]]:
    # Column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    return [(i, j) for j in range(1, n) for i in range(j)]


def parse_graph6(text: str) -> Graph:
    """Decode a one-line graph6 string into a :class:`Graph`."""
    if text.endswith("\n"):
        text = text[:-1]
    base = 0
    if text.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
        text = text[base:]
    if not text:
        raise GraphFormatError("empty graph6 string", offset=base)
    data = []
    for pos, ch in enumerate(text):
        code = ord(ch)
        if not (63 <= code <= 126):
            raise GraphFormatError(
                f"byte {code!r} outside graph6 alphabet", offset=base + pos
            )
        data.append(code - 63)
    if data[0] == 63:
        raise GraphFormatError(
            "long-form graph6 (n > 62) is not supported", offset=base
        )
    n = data[0]
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - 1 < nbytes:
        raise GraphFormatError(
            f"truncated graph6 body: need {nbytes} data bytes, got {len(data) - 1}",
            offset=base + len(text),
        )
    if len(data) - 1 > nbytes:
        raise GraphFormatError("trailing garbage after graph6 body", offset=base + 1 + nbytes)
    bits = []
    for value in data[1:]:
        for shift in range(5, -1, -1):
            bits.append((value >> shift) & 1)
    for pad, bit in enumerate(bits[nbits:]):
        if bit:
            raise GraphFormatError(
                "nonzero padding bits", offset=base + 1 + (nbits + pad) // 6
            )
    adj = [0] * n
    for (i, j), bit in zip(_pair_order(n), bits):
        if bit:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, adj)


def emit_graph6(g: Graph) -> str:
    """Encode a graph as canonical short-form graph6 (no header)."""
    if g.n > _G6_MAX_N:
        raise ValueError(f"graph6 short form supports at most {_G6_MAX_N} vertices")
    out = [chr(g.n + 63)]
    acc = 0
    nbits = 0
    for i, j in _pair_order(g.n):
        acc = (acc << 1) | (1 if g.adjacency[i] & (1 << j) else 0)
        nbits += 1
        if nbits == 6:
            out.append(chr(acc + 63))
            acc = 0
            nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------

FAMILY_NAMES = ("kn", "kmn", "cn", "pn", "petersen", "qd", "wn")


def make_family(name: str, *params: int) -> Graph:
    """Build a standard family member.

    ``kn n``        complete graph
    ``kmn m n``     complete bipartite graph
    ``cn n``        cycle (n >= 3)
    ``pn n``        path
    ``petersen``    the Petersen graph, Kneser(5, 2) vertex order
    ``qd d``        hypercube of dimension d
    ``wn n``        wheel: n rim vertices (n >= 3) plus a hub, hub last
    """
    key = name.lower()
    if key not in FAMILY_NAMES:
        raise ValueError(f"unknown family {name!r}; known: {', '.join(FAMILY_NAMES)}")
    expected = {"kn": 1, "kmn": 2, "cn": 1, "pn": 1, "petersen": 0, "qd": 1, "wn": 1}[key]
    if len(params) != expected:
        raise ValueError(f"family {name!r} takes {expected} parameter(s)")
    if any(p <= 0 for p in params):
        raise ValueError(f"family parameters must be positive, got {params}")
    if key == "kn":
        (n,) = params
        return Graph.from_edges(n, combinations(range(n), 2))
    if key == "kmn":
        a, b = params
        return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    if key == "cn":
        (n,) = params
        if n < 3:
            raise ValueError("cycles need at least 3 vertices")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if key == "pn":
        (n,) = params
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if key == "petersen":
        verts = list(combinations(range(5), 2))
        edges = [
            (i, j)
            for i, j in combinations(range(10), 2)
            if not set(verts[i]) & set(verts[j])
        ]
        return Graph.from_edges(10, edges)
    if key == "qd":
        (d,) = params
        return Graph.from_edges(
            1 << d,
            [(x, x ^ (1 << b)) for x in range(1 << d) for b in range(d) if x < x ^ (1 << b)],
        )
    (n,) = params
    if n < 3:
        raise ValueError("wheels need at least 3 rim vertices")
    rim = [(i, (i + 1) % n) for i in range(n)]
    spokes = [(i, n) for i in range(n)]
    return Graph.from_edges(n + 1, rim + spokes)


# ---------------------------------------------------------------------------
# Connected-graph enumeration up to isomorphism (n <= 6)
# ---------------------------------------------------------------------------


def _mask_connected(n: int, code: int, pairs: list[tuple[int, int]]) -> bool:
    adj = [0] * n
    for k, (i, j) in enumerate(pairs):
        if code >> k & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    seen = 1
    frontier = 1
    while frontier:
        grown = seen
        rest = frontier
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            grown |= adj[v]
        frontier = grown & ~seen
        seen = grown
    return seen == (1 << n) - 1


def canonical_code(n: int, code: int) -> int:
    """Minimum edge-bit code over all vertex permutations (exhaustive)."""
    pairs = _pair_order(n)
    index = {p: k for k, p in enumerate(pairs)}
    best = code
    for perm in permutations(range(n)):
        moved = 0
        rest = code
        while rest:
            k = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            i, j = pairs[k]
            a, b = perm[i], perm[j]
            moved |= 1 << index[(a, b) if a < b else (b, a)]
        if moved < best:
            best = moved
    return best


def _canonical_codes_bulk(n: int, codes: list[int]) -> list[int]:
    """Canonical codes for many masks at once via per-permutation bit tables."""
    import numpy as np

    pairs = _pair_order(n)
    nbits = len(pairs)
    index = {p: k for k, p in enumerate(pairs)}
    lo_bits = min(8, nbits)
    hi_bits = nbits - lo_bits
    arr = np.asarray(codes, dtype=np.uint32)
    best = arr.copy()
    for perm in permutations(range(n)):
        bitmap = [0] * nbits
        for k, (i, j) in enumerate(pairs):
            a, b = perm[i], perm[j]
            bitmap[k] = index[(a, b) if a < b else (b, a)]
        t_lo = np.zeros(1 << lo_bits, dtype=np.uint32)
        for value in range(1 << lo_bits):
            acc = 0
            rest = value
            while rest:
                k = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                acc |= 1 << bitmap[k]
            t_lo[value] = acc
        if hi_bits:
            t_hi = np.zeros(1 << hi_bits, dtype=np.uint32)
            for value in range(1 << hi_bits):
                acc = 0
                rest = value
                while rest:
                    k = (rest & -rest).bit_length() - 1
                    rest &= rest - 1
                    acc |= 1 << bitmap[k + lo_bits]
                t_hi[value] = acc
            mapped = t_lo[arr & ((1 << lo_bits) - 1)] | t_hi[arr >> lo_bits]
        else:
            mapped = t_lo[arr]
        np.minimum(best, mapped, out=best)
    return [int(x) for x in best]


def graph_from_code(n: int, code: int) -> Graph:
    adj = [0] * n
    for k, (i, j) in enumerate(_pair_order(n)):
        if code >> k & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, adj)


def enumerate_connected_graphs(max_n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs, 1..max_n vertices.

    Deduplication is by exhaustive permutation min-code, which is only viable
    at desk scale; ``max_n`` is capped at 6.  Output order is deterministic:
    ascending vertex count, then ascending canonical code.
    """
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    if max_n > ENUMERATION_MAX_N:
        raise ValueError(
            f"enumeration budget is n <= {ENUMERATION_MAX_N}, got {max_n}"
        )
    for n in range(1, max_n + 1):
        if n == 1:
            yield Graph(1, [0])
            continue
        pairs = _pair_order(n)
        connected = [
            code
            for code in range(1 << len(pairs))
            if _mask_connected(n, code, pairs)
        ]
        canon = _canonical_codes_bulk(n, connected)
        for code in sorted(set(canon)):
            yield graph_from_code(n, code)
