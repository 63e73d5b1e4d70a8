"""Exhaustive ground truth for small graphs.

Materializes a complete multipartite spec to an explicit edge set and decides
equitable tree-colorability by vertex-by-vertex backtracking.  Slow and
obviously correct: every class is re-checked as an induced subgraph, no shape
rule involved.  Used to validate the placement engine and the shape rule
itself.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .engine import size_distribution
from .model import Coloring, MultipartiteSpec, TreeParams, VertexRef

DEFAULT_VERTEX_LIMIT = 12
_LIMIT_ENV = "EQUITREE_ORACLE_LIMIT"


class GraphTooLargeError(ValueError):
    """The oracle refuses graphs above its vertex limit."""


def vertex_limit() -> int:
    return int(os.environ.get(_LIMIT_ENV, DEFAULT_VERTEX_LIMIT))


@dataclass(frozen=True)
class SmallGraph:
    n: int
    edges: frozenset[tuple[int, int]]  # (u, v) with u < v, no loops

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj


def small_graph(n: int, edges) -> SmallGraph:
    canon = frozenset((min(u, v), max(u, v)) for u, v in edges)
    if any(u == v or not (0 <= u < n and 0 <= v < n) for u, v in canon):
        raise ValueError("edges must join distinct vertices in range")
    return SmallGraph(n=n, edges=canon)


def materialize(spec: MultipartiteSpec, limit: int | None = None) -> SmallGraph:
    """Explicit edge set of the complete multipartite graph (all cross-part pairs)."""
    limit = vertex_limit() if limit is None else limit
    if spec.n_vertices > limit:
        raise GraphTooLargeError(f"{spec.n_vertices} vertices exceeds oracle limit {limit}")
    offsets = [0]
    for s in spec.part_sizes:
        offsets.append(offsets[-1] + s)
    edges = set()
    for p in range(spec.ell):
        for q in range(p + 1, spec.ell):
            for u in range(offsets[p], offsets[p + 1]):
                for v in range(offsets[q], offsets[q + 1]):
                    edges.add((u, v))
    return SmallGraph(n=spec.n_vertices, edges=frozenset(edges))


@dataclass(frozen=True)
class OracleResult:
    feasible: bool
    assignment: tuple[int, ...] | None = None  # flat, vertex index -> color id

    @property
    def verdict(self) -> str:
        return "feasible" if self.feasible else "infeasible"


def _class_ok(members: list[int], adj: list[list[int]], max_deg) -> bool:
    """Induced subgraph on ``members`` must be a forest with degrees <= max_deg."""
    member_set = set(members)
    deg = {u: 0 for u in members}
    edge_count = 0
    for u in members:
        for v in adj[u]:
            if v in member_set:
                deg[u] += 1
                if u < v:
                    edge_count += 1
    if deg and max(deg.values()) > max_deg:
        return False
    # Acyclic iff every connected piece has edges = vertices - 1.
    seen: set[int] = set()
    for root in members:
        if root in seen:
            continue
        stack, comp = [root], []
        seen.add(root)
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in adj[u]:
                if v in member_set and v not in seen:
                    seen.add(v)
                    stack.append(v)
        comp_edges = sum(1 for u in comp for v in adj[u] if v in member_set) // 2
        if comp_edges > len(comp) - 1:
            return False
    return True


def brute_force_decide(
    g: SmallGraph,
    t: int,
    params: TreeParams,
    use_symmetry: bool = True,
    limit: int | None = None,
) -> OracleResult:
    """Exact verdict by exhaustive color assignment with size-cap pruning.

    Pruning: no class may exceed the ceiling size ⌈n/t⌉, and at most
    c_hi classes may reach it -- both hold for every equitable coloring, so
    verdicts are unaffected.  Symmetry breaking (optional): vertex 0 takes
    color 1 and new color ids open in ascending order.
    """
    limit = vertex_limit() if limit is None else limit
    if g.n > limit:
        raise GraphTooLargeError(f"{g.n} vertices exceeds oracle limit {limit}")
    dist = size_distribution(g.n, t)
    s_hi = dist.s_hi if dist.c_hi else dist.s_lo
    adj = g.adjacency()
    colors = [0] * g.n
    class_members: list[list[int]] = [[] for _ in range(t + 1)]

    def count_at_hi() -> int:
        return sum(1 for c in range(1, t + 1) if len(class_members[c]) == dist.s_hi)

    def extend(v: int, max_used: int) -> tuple[int, ...] | None:
        if v == g.n:
            sizes = [len(class_members[c]) for c in range(1, t + 1)]
            if all(s in (dist.s_lo, dist.s_hi) for s in sizes):
                return tuple(colors)
            return None
        if use_symmetry:
            candidates = range(1, min(max_used + 1, t) + 1)
        else:
            candidates = range(1, t + 1)
        for c in candidates:
            members = class_members[c]
            if len(members) >= s_hi:
                continue
            if dist.c_hi and len(members) + 1 == dist.s_hi and count_at_hi() >= dist.c_hi:
                continue
            members.append(v)
            colors[v] = c
            if _class_ok(members, adj, params.max_deg):
                result = extend(v + 1, max(max_used, c))
                if result is not None:
                    return result
            members.pop()
            colors[v] = 0
        return None

    found = extend(0, 0)
    if found is None:
        return OracleResult(feasible=False)
    return OracleResult(feasible=True, assignment=found)


def assignment_to_coloring(spec: MultipartiteSpec, t: int, flat) -> Coloring:
    """Reshape a flat oracle assignment (materialize's vertex order) per part."""
    rows = []
    pos = 0
    for s in spec.part_sizes:
        rows.append(tuple(flat[pos : pos + s]))
        pos += s
    return Coloring(t=t, assignment=tuple(rows))


def brute_force_va_equiv(
    spec: MultipartiteSpec, params: TreeParams, limit: int | None = None
) -> int:
    """Same contract as the engine's strong value, computed purely by search."""
    g = materialize(spec, limit=limit)
    for t in range(spec.n_vertices, 0, -1):
        if not brute_force_decide(g, t, params, limit=limit).feasible:
            return t + 1
    return 1
