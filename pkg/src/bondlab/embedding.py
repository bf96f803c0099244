"""2-cell embeddings of connected graphs via rotation systems with edge signs.

A rotation system assigns each vertex a cyclic order of its neighbours; an
edge sign of -1 reverses local orientation when the edge is crossed, which
encodes non-orientable embeddings.  Faces are traced as orbits of the
next-dart map on (dart, direction) states; each face corresponds to a
mirror-image pair of orbits, so the face count is the number of orbit pairs.

The maximum-Euler-characteristic search enumerates a quotient of the scheme
space (reflection symmetry always, plus a fixed pivot rotation where a
vertex stabiliser provably acts fully symmetrically on the pivot's
neighbourhood).  Two exactness certificates are tracked: ``exhaustive``
means the full quotient was enumerated, and ``certified`` additionally
covers early exits that reach a proven upper bound on the characteristic
(combinatorial face-length counting), which is just as exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations
from .graphs import Graph, girth

__all__ = [
    "RotationSystem",
    "EmbeddingSummary",
    "CurvatureLedger",
    "SideResult",
    "ChiSearchResult",
    "BudgetExceededError",
    "DEFAULT_BUDGET",
    "trace_faces",
    "curvature",
    "max_euler_characteristic",
    "ringel_chi",
]

DEFAULT_BUDGET = 100_000_000
_VECTOR_THRESHOLD = 3_000_000  # scheme-states below this stay in pure Python
_VECTOR_BLOCK = 4096


class BudgetExceededError(RuntimeError):
    """Raised in strict mode when the face-tracing budget runs out."""


@dataclass(frozen=True)
class RotationSystem:
    """Per-vertex neighbour cycles plus the set of negative edges.

    ``rotations[v]`` lists the neighbours of ``v`` in cyclic order; an empty
    ``negative_edges`` set is the orientable case.
    """

    rotations: tuple[tuple[int, ...], ...]
    negative_edges: frozenset[tuple[int, int]] = frozenset()

    def validate(self, g: Graph) -> None:
        if len(self.rotations) != g.n:
            raise ValueError(f"expected {g.n} rotations, got {len(self.rotations)}")
        for v, rot in enumerate(self.rotations):
            if sorted(rot) != sorted(g.neighbors(v)):
                raise ValueError(f"rotation at vertex {v} is not a permutation of its neighbours")
        edges = set(g.edges())
        for e in self.negative_edges:
            if tuple(sorted(e)) not in edges:
                raise ValueError(f"negative sign on non-edge {e}")

    def sign(self, u: int, v: int) -> int:
        return -1 if (min(u, v), max(u, v)) in self.negative_edges else 1

    @classmethod
    def identity(cls, g: Graph) -> "RotationSystem":
        """Sorted-neighbour rotations with all edges positive."""
        return cls(tuple(tuple(g.neighbors(v)) for v in range(g.n)))

    def to_json_dict(self) -> dict:
        edges = sorted({tuple(sorted(e)) for e in self.negative_edges})
        return {
            "rotations": [list(rot) for rot in self.rotations],
            "negative_edges": [list(e) for e in edges],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "RotationSystem":
        return cls(
            rotations=tuple(tuple(rot) for rot in data["rotations"]),
            negative_edges=frozenset(
                (min(u, v), max(u, v)) for u, v in data.get("negative_edges", [])
            ),
        )


@dataclass(frozen=True)
class EmbeddingSummary:
    """Faces of one embedding: walks, lengths, per-edge face sizes, and chi."""

    face_walks: tuple[tuple[tuple[int, int], ...], ...]
    face_lengths: tuple[int, ...]
    edge_face_lengths: dict[tuple[int, int], tuple[int, int]]
    chi: int
    orientable: bool


@dataclass(frozen=True)
class CurvatureLedger:
    weights: dict[tuple[int, int], float]
    total: float


def _dart_tables(g: Graph):
    edges = g.edges()
    dart_of = {}
    tail = []
    head = []
    for e, (u, v) in enumerate(edges):
        dart_of[(u, v)] = 2 * e
        dart_of[(v, u)] = 2 * e + 1
        tail += [u, v]
        head += [v, u]
    return edges, dart_of, tail, head


def _is_balanced(g: Graph, rs: RotationSystem) -> bool:
    """True iff every cycle has positive sign product (orientable embedding)."""
    if not rs.negative_edges:
        return True
    potential = [0] * g.n
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    while stack:
        u = stack.pop()
        for v in g.neighbors(u):
            if not seen[v]:
                seen[v] = True
                potential[v] = potential[u] ^ (rs.sign(u, v) < 0)
                stack.append(v)
    for u, v in g.edges():
        if (potential[u] ^ potential[v]) != (rs.sign(u, v) < 0):
            return False
    return True


def trace_faces(g: Graph, rs: RotationSystem) -> EmbeddingSummary:
    """Trace all face walks of the embedding determined by ``rs``.

    For orientable systems every dart lies on exactly one walk; with negative
    signs a one-sided face traverses some darts twice, but every edge still
    contributes exactly two dart slots over all walks, so the lengths always
    sum to 2m.
    """
    if g.n < 1 or g.m < 1:
        raise ValueError("face tracing needs at least one edge")
    if not g.is_connected():
        raise ValueError("face tracing is defined for connected graphs")
    rs.validate(g)

    edges, dart_of, tail, head = _dart_tables(g)
    nd = 2 * g.m
    rot_next = [dict() for _ in range(g.n)]
    rot_prev = [dict() for _ in range(g.n)]
    for v, rot in enumerate(rs.rotations):
        k = len(rot)
        for i, x in enumerate(rot):
            rot_next[v][x] = rot[(i + 1) % k]
            rot_prev[v][x] = rot[(i - 1) % k]
    neg = [rs.sign(tail[d], head[d]) < 0 for d in range(nd)]

    def next_state(state: int) -> int:
        d, s = state >> 1, state & 1
        s2 = s ^ neg[d]
        v = head[d]
        w = rot_prev[v][tail[d]] if s2 else rot_next[v][tail[d]]
        return (dart_of[(v, w)] << 1) | s2

    def mirror(state: int) -> int:
        d, s = state >> 1, state & 1
        return ((d ^ 1) << 1) | (1 ^ s ^ neg[d])

    visited = [False] * (2 * nd)
    walks = []
    # Forward-direction states first: without negative signs every face then
    # gets traced from its forward orbit, so each dart appears exactly once
    # across the walks instead of a face showing up mirrored.
    starts = [2 * d for d in range(nd)] + [2 * d + 1 for d in range(nd)]
    for start in starts:
        if visited[start]:
            continue
        orbit = [start]
        visited[start] = True
        state = next_state(start)
        while state != start:
            orbit.append(state)
            visited[state] = True
            state = next_state(state)
        self_mirrored = mirror(start) in set(orbit)
        for s in orbit:
            visited[mirror(s)] = True
        if self_mirrored:
            darts = [s >> 1 for s in orbit[: len(orbit) // 2]]
        else:
            darts = [s >> 1 for s in orbit]
        walks.append(tuple((tail[d], head[d]) for d in darts))

    lengths = tuple(len(w) for w in walks)
    if sum(lengths) != nd:
        raise AssertionError("face walks do not cover each edge exactly twice")
    per_edge: dict[tuple[int, int], list[int]] = {e: [] for e in edges}
    for walk, length in zip(walks, lengths):
        for u, v in walk:
            per_edge[(u, v) if u < v else (v, u)].append(length)
    edge_face_lengths = {}
    for e, occ in per_edge.items():
        if len(occ) != 2:
            raise AssertionError(f"edge {e} appears {len(occ)} times across faces")
        edge_face_lengths[e] = (min(occ), max(occ))

    return EmbeddingSummary(
        face_walks=tuple(walks),
        face_lengths=lengths,
        edge_face_lengths=edge_face_lengths,
        chi=g.n - g.m + len(walks),
        orientable=_is_balanced(g, rs),
    )


def curvature(g: Graph, summary: EmbeddingSummary) -> CurvatureLedger:
    """Per-edge discharging weights of a traced embedding; they sum to zero.

    w(uv) = 1/d(u) + 1/d(v) - 1 + 1/f(uv) + 1/f'(uv) - chi/m, where f and f'
    are the boundary lengths of the faces on either side of the edge.
    """
    if g.m < 1:
        raise ValueError("curvature needs at least one edge")
    weights = {}
    for (u, v), (f1, f2) in summary.edge_face_lengths.items():
        weights[(u, v)] = (
            1 / g.degree(u)
            + 1 / g.degree(v)
            - 1
            + 1 / f1
            + 1 / f2
            - summary.chi / g.m
        )
    return CurvatureLedger(weights=weights, total=sum(weights.values()))


# ---------------------------------------------------------------------------
# Closed-form oracle for complete and complete bipartite graphs
# ---------------------------------------------------------------------------


def ringel_chi(family: str, *params: int, side: str = "overall") -> int:
    """Classical genus formulas for K_n and K_{m,n}, used as a test oracle.

    ``side`` selects "orientable", "nonorientable", or "overall" (the max).
    The non-orientable genus of K_7 is 3, one more than its formula value.
    Planar members sit on the projective plane as well, giving chi 1 on the
    non-orientable side.
    """
    key = family.lower()
    if key == "kn":
        (n,) = params
        if n < 3:
            raise ValueError("oracle covers K_n for n >= 3")
        quad = (n - 3) * (n - 4)
        h = -(-quad // 12) if quad > 0 else 0
        k = 3 if n == 7 else (-(-quad // 6) if quad > 0 else 0)
    elif key == "kmn":
        a, b = params
        if a < 2 or b < 2:
            raise ValueError("oracle covers K_{m,n} for m, n >= 2")
        quad = (a - 2) * (b - 2)
        h = -(-quad // 4) if quad > 0 else 0
        k = -(-quad // 2) if quad > 0 else 0
    else:
        raise ValueError(f"oracle knows 'kn' and 'kmn', not {family!r}")
    chi_or = 2 - 2 * h
    chi_nonor = 1 if k == 0 else 2 - k
    if side == "orientable":
        return chi_or
    if side == "nonorientable":
        return chi_nonor
    if side == "overall":
        return max(chi_or, chi_nonor)
    raise ValueError(f"side must be orientable/nonorientable/overall, not {side!r}")


# ---------------------------------------------------------------------------
# Maximum Euler characteristic search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SideResult:
    """Outcome for one orientability class.

    ``chi`` is the best value found (None if nothing was traced);
    ``exhaustive`` means the full quotiented space was enumerated;
    ``certified`` means the value is provably the maximum (exhaustive, a
    proven combinatorial upper bound was attained, or a planarity identity).
    """

    chi: int | None
    witness: RotationSystem | None
    exhaustive: bool
    certified: bool
    searched: int = 0


@dataclass(frozen=True)
class ChiSearchResult:
    chi: int | None
    witness: RotationSystem | None
    exhaustive: bool
    certified: bool
    steps_used: int
    budget: int
    orientable: SideResult
    nonorientable: SideResult | None


class _Budget:
    __slots__ = ("remaining", "strict", "exhausted")

    def __init__(self, limit: int, strict: bool):
        self.remaining = limit
        self.strict = strict
        self.exhausted = False

    def charge(self, amount: int) -> bool:
        """Consume; returns False (or raises in strict mode) once spent."""
        if self.remaining <= 0:
            self.exhausted = True
            if self.strict:
                raise BudgetExceededError("face-tracing budget exhausted in strict mode")
            return False
        self.remaining -= amount
        return True


# -- exact reductions preserving chi ----------------------------------------


def _reduce_graph(g: Graph) -> tuple[dict[int, set[int]], list[tuple]]:
    """Strip pendant vertices and suppress suppressible degree-2 vertices.

    Both moves preserve the set of surfaces the graph embeds in, hence chi
    on both orientability classes.  Returns the core adjacency (original
    labels) and the reduction ops, in order.
    """
    adj = {v: set(g.neighbors(v)) for v in range(g.n)}
    ops: list[tuple] = []
    changed = True
    while changed and len(adj) > 1:
        changed = False
        for v in sorted(adj):
            if len(adj) == 1:
                break
            deg = len(adj[v])
            if deg == 1:
                (x,) = adj[v]
                adj[x].discard(v)
                del adj[v]
                ops.append(("pendant", v, x))
                changed = True
            elif deg == 2:
                x, y = sorted(adj[v])
                if x not in adj[y]:
                    adj[x].discard(v)
                    adj[y].discard(v)
                    adj[x].add(y)
                    adj[y].add(x)
                    del adj[v]
                    ops.append(("suppress", v, x, y))
                    changed = True
    return adj, ops


def _lift_witness(core_rs: dict[int, list[int]], neg: set[tuple[int, int]],
                  ops: list[tuple], n: int) -> RotationSystem:
    """Undo the reductions, rebuilding a rotation system on all n vertices."""
    rot = {v: list(r) for v, r in core_rs.items()}
    neg = set(neg)
    for op in reversed(ops):
        if op[0] == "pendant":
            _, leaf, attach = op
            rot.setdefault(attach, []).append(leaf)
            rot[leaf] = [attach]
        else:
            _, v, x, y = op
            rot[x][rot[x].index(y)] = v
            rot[y][rot[y].index(x)] = v
            rot[v] = [x, y]
            e = (min(x, y), max(x, y))
            if e in neg:
                neg.discard(e)
                neg.add((min(x, v), max(x, v)))
    return RotationSystem(
        rotations=tuple(tuple(rot.get(v, ())) for v in range(n)),
        negative_edges=frozenset(neg),
    )


# -- scheme space ------------------------------------------------------------


def _is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def _is_complete_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    color[0] = 0
    stack = [0]
    while stack:
        u = stack.pop()
        for v in g.neighbors(u):
            if color[v] == -1:
                color[v] = color[u] ^ 1
                stack.append(v)
            elif color[v] == color[u]:
                return False
    a = color.count(0)
    return g.m == a * (g.n - a)


class _SchemeSpace:
    """Quotiented enumeration space of rotation schemes for a core graph.

    Vertex rotations are anchored at the smallest neighbour, listed in
    ``itertools.permutations`` order of the rest.  At the pivot (smallest
    max-degree vertex) the candidate list is either a single fixed rotation
    (complete or complete bipartite cores, where the vertex stabiliser
    realises every cyclic order) or one representative per reversal pair
    (reflection of the whole scheme preserves chi).
    """

    def __init__(self, core: Graph, signed: bool):
        self.g = core
        self.signed = signed
        self.edges, self.dart_of, self.tail, self.head = _dart_tables(core)
        degrees = [core.degree(v) for v in range(core.n)]
        self.pivot = max(range(core.n), key=lambda v: (degrees[v], -v))
        full_fix = _is_complete(core) or _is_complete_bipartite(core)
        self.candidates: list[list[tuple[int, ...]]] = []
        for v in range(core.n):
            nbrs = sorted(core.neighbors(v))
            if len(nbrs) <= 2:
                cands = [tuple(nbrs)]
            else:
                anchor, rest = nbrs[0], nbrs[1:]
                cands = [(anchor, *p) for p in permutations(rest)]
                if v == self.pivot:
                    if full_fix:
                        cands = cands[:1]
                    else:
                        cands = [c for c in cands if c[1:] <= tuple(reversed(c[1:]))]
            self.candidates.append(cands)
        self.rot_counts = [len(c) for c in self.candidates]

        # Non-tree edges carry the free signs; spanning-tree edges stay +1.
        tree: set[int] = set()
        seen = {0}
        frontier = [0]
        edge_index = {e: i for i, e in enumerate(self.edges)}
        while frontier:
            u = frontier.pop()
            for v in core.neighbors(u):
                if v not in seen:
                    seen.add(v)
                    tree.add(edge_index[(min(u, v), max(u, v))])
                    frontier.append(v)
        self.free_edges = [i for i in range(core.m) if i not in tree]
        self.sign_count = (1 << len(self.free_edges)) - 1 if signed else 1

        self.n_rot = 1
        for c in self.rot_counts:
            self.n_rot *= c
        self.total = self.n_rot * self.sign_count
        self.states = 4 * core.m if signed else 2 * core.m

    def decode(self, index: int) -> tuple[tuple[int, ...], int]:
        """Flat index -> (per-vertex candidate indices, sign mask)."""
        if self.signed:
            sign_mask = index % self.sign_count + 1
            index //= self.sign_count
        else:
            sign_mask = 0
        digits = [0] * self.g.n
        for v in range(self.g.n - 1, -1, -1):
            digits[v] = index % self.rot_counts[v]
            index //= self.rot_counts[v]
        return tuple(digits), sign_mask

    def scheme(self, index: int) -> RotationSystem:
        digits, sign_mask = self.decode(index)
        rotations = tuple(self.candidates[v][digits[v]] for v in range(self.g.n))
        neg = frozenset(
            self.edges[self.free_edges[b]]
            for b in range(len(self.free_edges))
            if sign_mask >> b & 1
        )
        return RotationSystem(rotations=rotations, negative_edges=neg)


def _face_length_upper_bound(core: Graph) -> int:
    """Proven cap on chi from face-length counting on the core.

    Cores have min degree >= 2 (or a single edge), so face walks never
    backtrack immediately and every face has length >= girth; with one edge
    the unique face has length 2.
    """
    if core.m == 1:
        return 2
    shortest = girth(core)
    min_face = 2 if shortest == math.inf else int(shortest)
    return min(2, core.n - core.m + (2 * core.m) // min_face)


# -- scalar sweep ------------------------------------------------------------


def _sweep_scalar(space: _SchemeSpace, start: int, stop: int, target: int,
                  best: int, budget: _Budget) -> tuple[int, int | None, int]:
    """Enumerate schemes [start, stop); returns (best, best_index, reached).

    ``reached`` is how far the sweep got before the budget ran out (== stop
    when complete).  ``best_index`` is the first scheme that strictly
    improved on ``best``; the sweep stops early once ``target`` is hit.
    """
    g = space.g
    nd = 2 * g.m
    best_index = None
    fwd = [0] * nd
    bwd = [0] * nd
    neg = [0] * nd
    stamp_unsigned = [-1] * nd
    stamp_signed = [-1] * (2 * nd)
    digits = None
    for index in range(start, stop):
        if not budget.charge(space.states):
            return best, best_index, index
        new_digits, sign_mask = space.decode(index)
        for v in range(g.n):
            if digits is not None and new_digits[v] == digits[v]:
                continue
            rot = space.candidates[v][new_digits[v]]
            k = len(rot)
            for i, x in enumerate(rot):
                d_in = space.dart_of[(x, v)]
                fwd[d_in] = space.dart_of[(v, rot[(i + 1) % k])]
                bwd[d_in] = space.dart_of[(v, rot[(i - 1) % k])]
        digits = new_digits

        if not space.signed:
            faces = 0
            for d0 in range(nd):
                if stamp_unsigned[d0] == index:
                    continue
                faces += 1
                d = d0
                while stamp_unsigned[d] != index:
                    stamp_unsigned[d] = index
                    d = fwd[d]
        else:
            for b, e in enumerate(space.free_edges):
                bit = sign_mask >> b & 1
                neg[2 * e] = neg[2 * e + 1] = bit
            faces = 0
            for s0 in range(2 * nd):
                if stamp_signed[s0] == index:
                    continue
                faces += 1
                s = s0
                orbit = []
                while stamp_signed[s] != index:
                    stamp_signed[s] = index
                    orbit.append(s)
                    d, sb = s >> 1, s & 1
                    s2 = sb ^ neg[d]
                    out = bwd[d] if s2 else fwd[d]
                    s = (out << 1) | s2
                for s in orbit:
                    d, sb = s >> 1, s & 1
                    stamp_signed[((d ^ 1) << 1) | (1 ^ sb ^ neg[d])] = index
        chi = g.n - g.m + faces
        if chi > best:
            best = chi
            best_index = index
            if best >= target:
                return best, best_index, index + 1
    return best, best_index, stop


# -- vectorised sweep --------------------------------------------------------


def _sweep_vector(space: _SchemeSpace, start: int, stop: int, target: int,
                  best: int, budget: _Budget) -> tuple[int, int | None, int]:
    """Same contract as the scalar sweep, trading memory for numpy batches."""
    import numpy as np

    g = space.g
    nd = 2 * g.m
    n_states = space.states
    best_index = None

    # Per-vertex tables: rows are candidate rotations, columns the incoming
    # darts at the vertex (fixed order), entries the successor dart ids.
    in_cols = []
    fwd_tables = []
    bwd_tables = []
    for v in range(g.n):
        cols = [space.dart_of[(x, v)] for x in sorted(g.neighbors(v))]
        in_cols.append(np.array(cols, dtype=np.int64))
        fw = np.zeros((space.rot_counts[v], len(cols)), dtype=np.int16)
        bw = np.zeros_like(fw)
        for ci, rot in enumerate(space.candidates[v]):
            k = len(rot)
            for i, x in enumerate(rot):
                slot = cols.index(space.dart_of[(x, v)])
                fw[ci, slot] = space.dart_of[(v, rot[(i + 1) % k])]
                bw[ci, slot] = space.dart_of[(v, rot[(i - 1) % k])]
        fwd_tables.append(fw)
        bwd_tables.append(bw)

    free_bits = np.zeros(nd, dtype=np.int64)
    free_mask_cols = np.zeros(nd, dtype=bool)
    for b, e in enumerate(space.free_edges):
        for d in (2 * e, 2 * e + 1):
            free_bits[d] = b
            free_mask_cols[d] = True

    doubling = max(1, math.ceil(math.log2(n_states)))
    arange_states = np.arange(n_states, dtype=np.int16)

    index = start
    while index < stop:
        block = min(_VECTOR_BLOCK, stop - index)
        if not budget.charge(block * n_states):
            return best, best_index, index
        flat = np.arange(index, index + block, dtype=np.int64)
        rem = flat.copy()
        if space.signed:
            sign_mask = rem % space.sign_count + 1
            rem //= space.sign_count
        digit_arrays = [None] * g.n
        for v in range(g.n - 1, -1, -1):
            digit_arrays[v] = rem % space.rot_counts[v]
            rem //= space.rot_counts[v]

        fwd = np.zeros((block, nd), dtype=np.int16)
        bwd = np.zeros((block, nd), dtype=np.int16) if space.signed else None
        for v in range(g.n):
            rows = digit_arrays[v]
            fwd[:, in_cols[v]] = fwd_tables[v][rows]
            if space.signed:
                bwd[:, in_cols[v]] = bwd_tables[v][rows]

        if not space.signed:
            nxt = fwd
        else:
            neg = ((sign_mask[:, None] >> free_bits[None, :]) & 1).astype(np.int16)
            neg &= free_mask_cols[None, :]
            out0 = np.where(neg == 0, fwd, bwd)  # arriving with direction 0
            nxt = np.empty((block, 2 * nd), dtype=np.int16)
            nxt[:, 0::2] = 2 * out0 + neg  # states (d, 0)
            out1 = np.where(neg == 1, fwd, bwd)  # direction flips to 0 iff neg
            nxt[:, 1::2] = 2 * out1 + (1 - neg)  # states (d, 1)

        lbl = np.broadcast_to(arange_states, (block, n_states)).copy()
        reach = nxt.copy()
        for _ in range(doubling):
            np.minimum(lbl, np.take_along_axis(lbl, reach, axis=1), out=lbl)
            reach = np.take_along_axis(reach, reach, axis=1)
        roots = lbl == arange_states
        if not space.signed:
            faces = roots.sum(axis=1)
        else:
            darts = (arange_states >> 1).astype(np.int64)
            sbits = arange_states & 1
            neg_at = neg[:, darts]
            mir = (((darts ^ 1) << 1) + (1 ^ sbits ^ neg_at)).astype(np.int16)
            mir_lbl = np.take_along_axis(lbl, mir, axis=1)
            faces = (roots & (mir_lbl >= arange_states)).sum(axis=1)
        chi = g.n - g.m + faces.astype(np.int64)

        pos = 0
        while True:
            better = np.flatnonzero(chi[pos:] > best)
            if better.size == 0:
                break
            pos += int(better[0])
            best = int(chi[pos])
            best_index = index + pos
            if best >= target:
                return best, best_index, index + pos + 1
            pos += 1
        index += block
    return best, best_index, stop


def _run_sweep(space: _SchemeSpace, target: int, budget: _Budget) -> tuple[int, int | None, int]:
    """Sweep one orientability class, picking the scalar or numpy path.

    Both paths enumerate the identical flat order and report the first
    strict improvement, so results do not depend on which one runs.
    """
    use_vector = space.total * space.states > _VECTOR_THRESHOLD
    sweep = _sweep_vector if use_vector else _sweep_scalar
    return sweep(space, 0, space.total, target, -(10**9), budget)


def max_euler_characteristic(
    g: Graph,
    budget: int = DEFAULT_BUDGET,
    strict: bool = False,
    orientable_only: bool = False,
    early_exit: bool = True,
) -> ChiSearchResult:
    """Largest Euler characteristic over all 2-cell embeddings.

    Searches rotation schemes of the reduced core (pendants stripped,
    suppressible degree-2 vertices contracted; both moves preserve chi).
    The orientable class is swept first, then signed schemes for the
    non-orientable class; a planar outcome settles the non-orientable value
    at 1 without a sweep.  ``early_exit=False`` forces full enumeration of
    the quotient so the ``exhaustive`` flag can be earned, not just
    ``certified``.

    Budget is counted in face-tracing steps (states traced).  In strict
    mode running out raises :class:`BudgetExceededError`; otherwise partial
    results are returned with flags cleared.
    """
    if g.n < 1:
        raise ValueError("empty graph")
    if not g.is_connected():
        raise ValueError("chi search is defined for connected graphs; split components first")

    bud = _Budget(budget, strict)
    core_adj, ops = _reduce_graph(g)
    core_labels = sorted(core_adj)
    relabel = {v: i for i, v in enumerate(core_labels)}
    core = Graph.from_edges(
        len(core_labels),
        [
            (relabel[u], relabel[v])
            for u in core_labels
            for v in core_adj[u]
            if u < v
        ],
    )

    def lift(core_rs: RotationSystem | None) -> RotationSystem | None:
        if core_rs is None:
            return None
        rot = {
            core_labels[i]: [core_labels[x] for x in core_rs.rotations[i]]
            for i in range(core.n)
        }
        neg = {
            (min(core_labels[u], core_labels[v]), max(core_labels[u], core_labels[v]))
            for u, v in core_rs.negative_edges
        }
        return _lift_witness(rot, neg, ops, g.n)

    if core.m == 0:
        # The core collapsed to a point: the graph is a tree (sphere).
        witness = lift(RotationSystem(rotations=((),), negative_edges=frozenset()))
        side = SideResult(chi=2, witness=witness, exhaustive=True, certified=True)
        nonor = None if orientable_only else SideResult(
            chi=1, witness=None, exhaustive=False, certified=True
        )
        return ChiSearchResult(
            chi=2, witness=witness, exhaustive=True, certified=True,
            steps_used=0, budget=budget, orientable=side, nonorientable=nonor,
        )

    chi_cap = _face_length_upper_bound(core)
    cap_or = chi_cap if chi_cap % 2 == 0 else chi_cap - 1
    cap_nonor = min(1, chi_cap)

    # Orientable sweep.
    space_or = _SchemeSpace(core, signed=False)
    target_or = cap_or if early_exit else 10**9
    best_or, idx_or, reached_or = _run_sweep(space_or, target_or, bud)
    or_exhaustive = reached_or == space_or.total
    or_certified = or_exhaustive or best_or >= cap_or
    or_witness_core = space_or.scheme(idx_or) if idx_or is not None else None
    or_side = SideResult(
        chi=best_or if idx_or is not None else None,
        witness=lift(or_witness_core),
        exhaustive=or_exhaustive,
        certified=or_certified and idx_or is not None,
        searched=reached_or,
    )

    nonor_side: SideResult | None = None
    if not orientable_only:
        if or_side.certified and or_side.chi == 2:
            # Planar: the plane drawing sits inside a disc of the projective
            # plane, so the non-orientable side is exactly 1 (no 2-cell
            # scheme realises it for trees and some planar cores).
            nonor_side = SideResult(chi=1, witness=None, exhaustive=False, certified=True)
        else:
            space_no = _SchemeSpace(core, signed=True)
            if space_no.sign_count == 0:
                nonor_side = SideResult(chi=None, witness=None, exhaustive=True, certified=False)
            else:
                target_no = cap_nonor if early_exit else 10**9
                best_no, idx_no, reached_no = _run_sweep(space_no, target_no, bud)
                no_exhaustive = reached_no == space_no.total
                nonor_side = SideResult(
                    chi=best_no if idx_no is not None else None,
                    witness=lift(space_no.scheme(idx_no)) if idx_no is not None else None,
                    exhaustive=no_exhaustive,
                    certified=(no_exhaustive or best_no >= cap_nonor) and idx_no is not None,
                    searched=reached_no,
                )

    # Combine.  The non-orientable side never exceeds 1, so a certified
    # planar outcome settles the overall maximum by itself.
    sides = [s for s in (or_side, nonor_side) if s is not None and s.chi is not None]
    overall_chi = max(s.chi for s in sides) if sides else None
    overall_witness = None
    for s in sides:
        if s.chi == overall_chi and s.witness is not None:
            overall_witness = s.witness
            break
    if orientable_only:
        overall_exhaustive = or_side.exhaustive
        overall_certified = or_side.certified
    else:
        or_settles = or_side.certified and or_side.chi == 2
        overall_exhaustive = or_side.exhaustive and (
            or_settles or (nonor_side is not None and nonor_side.exhaustive)
        )
        overall_certified = or_side.certified and (
            (nonor_side is not None and nonor_side.certified)
            or (or_side.chi is not None and or_side.chi >= cap_nonor)
        )
    return ChiSearchResult(
        chi=overall_chi,
        witness=overall_witness,
        exhaustive=overall_exhaustive,
        certified=overall_certified,
        steps_used=budget - bud.remaining,
        budget=budget,
        orientable=or_side,
        nonorientable=nonor_side,
    )
