"""Exact bondage numbers and the computable edge/average-degree proxy.

The bondage number is found by definition: enumerate edge subsets of growing
size in colexicographic order and stop at the first subset whose removal
raises the domination number.  The default cap (max degree plus min degree
minus one) is a proven upper bound, so the search always terminates with an
exact answer on nonempty graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .domination import domination_number
from .graphs import Graph, common_neighbors, components_with_vertices, degree_stats

__all__ = [
    "BondageResult",
    "BPrimeResult",
    "HartnellRallBound",
    "bondage_number",
    "compute_b_prime",
    "hartnell_rall_bound",
]


@dataclass(frozen=True)
class BondageResult:
    b: int | None
    witness_edges: tuple[tuple[int, int], ...] | None
    gamma_before: int
    gamma_after: int | None
    cap: int
    exceeded_cap: bool = False


@dataclass(frozen=True)
class BPrimeResult:
    """min(edge term, average-degree term); the edge witness attains the min."""

    b_prime: int
    edge_term: int
    edge_witness: tuple[int, int]
    ad_term: int
    ad_term_relaxed: int


@dataclass(frozen=True)
class HartnellRallBound:
    edge_bound: int
    witness_edge: tuple[int, int]
    degree_bound: int


def _colex_subsets(m: int, k: int) -> Iterator[tuple[int, ...]]:
    """k-subsets of range(m) in colexicographic order."""
    if k == 0:
        yield ()
        return
    for last in range(k - 1, m):
        for rest in _colex_subsets(last, k - 1):
            yield rest + (last,)


def hartnell_rall_bound(g: Graph) -> HartnellRallBound:
    """Minimum over edges of d(u)+d(v)-1-|N(u) and N(v)|, plus the degree form."""
    if g.m == 0:
        raise ValueError("bound needs at least one edge")
    best = None
    witness = None
    for u, v in g.edges():
        value = g.degree(u) + g.degree(v) - 1 - common_neighbors(g, u, v)
        if best is None or value < best:
            best = value
            witness = (u, v)
    stats = degree_stats(g)
    return HartnellRallBound(
        edge_bound=best,
        witness_edge=witness,
        degree_bound=stats.max_degree + stats.min_degree - 1,
    )


def compute_b_prime(g: Graph, relaxed_ad_term: bool = False) -> BPrimeResult:
    """Edge/average-degree proxy for the bondage number of a connected graph.

    The average-degree term is ``2*floor(ad) - 1`` with ``ad = 2m/n`` taken
    exactly; ``relaxed_ad_term`` substitutes ``floor(2*ad - 1)`` instead,
    which is never smaller, for side-by-side comparison.
    """
    if g.m == 0:
        raise ValueError("proxy needs at least one edge")
    if not g.is_connected():
        raise ValueError("proxy is defined for connected graphs; decompose first")
    hr = hartnell_rall_bound(g)
    ad_term = 2 * ((2 * g.m) // g.n) - 1
    ad_term_relaxed = (4 * g.m - g.n) // g.n
    chosen_ad = ad_term_relaxed if relaxed_ad_term else ad_term
    return BPrimeResult(
        b_prime=min(hr.edge_bound, chosen_ad),
        edge_term=hr.edge_bound,
        edge_witness=hr.witness_edge,
        ad_term=ad_term,
        ad_term_relaxed=ad_term_relaxed,
    )


def _bondage_connected(g: Graph, cap: int) -> tuple[int, tuple[tuple[int, int], ...]] | None:
    gamma0 = domination_number(g).gamma
    edges = g.edges()
    for k in range(1, min(cap, g.m) + 1):
        for subset in _colex_subsets(g.m, k):
            removed = [edges[i] for i in subset]
            if domination_number(g.remove_edges(removed)).gamma > gamma0:
                return k, tuple(removed)
    return None


def bondage_number(g: Graph, cap: int | None = None) -> BondageResult:
    """Exact bondage number, certified by exhausting all smaller edge subsets.

    Disconnected graphs are handled componentwise: the bondage number of a
    disjoint union is the minimum over its components with at least one edge.
    A result with ``exceeded_cap`` set (never with the default cap) means the
    search proved ``b > cap`` without finding a witness.
    """
    if g.m == 0:
        raise ValueError("bondage number is undefined for empty graphs")
    gamma_before = domination_number(g).gamma

    parts = components_with_vertices(g)
    if len(parts) == 1:
        stats = degree_stats(g)
        use_cap = cap if cap is not None else stats.max_degree + stats.min_degree - 1
        found = _bondage_connected(g, use_cap)
        if found is None:
            return BondageResult(
                b=None,
                witness_edges=None,
                gamma_before=gamma_before,
                gamma_after=None,
                cap=use_cap,
                exceeded_cap=True,
            )
        b, witness = found
        gamma_after = domination_number(g.remove_edges(witness)).gamma
        return BondageResult(b, witness, gamma_before, gamma_after, use_cap)

    best: tuple[int, tuple[tuple[int, int], ...]] | None = None
    caps = []
    for sub, verts in parts:
        if sub.m == 0:
            continue
        stats = degree_stats(sub)
        sub_cap = cap if cap is not None else stats.max_degree + stats.min_degree - 1
        caps.append(sub_cap)
        limit = sub_cap if best is None else min(sub_cap, best[0] - 1)
        found = _bondage_connected(sub, limit)
        if found is not None:
            b, witness = found
            lifted = tuple(
                (verts[u], verts[v]) if verts[u] < verts[v] else (verts[v], verts[u])
                for u, v in witness
            )
            if best is None or b < best[0]:
                best = (b, lifted)
    if best is None:
        return BondageResult(
            b=None,
            witness_edges=None,
            gamma_before=gamma_before,
            gamma_after=None,
            cap=max(caps),
            exceeded_cap=True,
        )
    b, witness = best
    gamma_after = domination_number(g.remove_edges(witness)).gamma
    return BondageResult(b, witness, gamma_before, gamma_after, max(caps))
