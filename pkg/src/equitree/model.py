"""Data model and verifiers for equitable tree-colorings of complete multipartite graphs.

A complete multipartite graph is described only by its part sizes; adjacency
is "different part". Colorings are checked by two independent verifiers:

* ``check_equitable``   -- any two color classes differ in size by at most 1.
* ``check_tree_coloring`` -- every color class induces a forest whose vertex
  degrees stay within a cap (explicit component traversal, no shortcuts).

``profile_admissible`` is the closed-form counterpart of the second verifier:
a class of a complete multipartite graph induces an admissible forest iff it
lives in a single part, or is a star with its single center in one part and
all leaves in another.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

#: Degree cap sentinel: no bound on tree degrees.
UNBOUNDED = math.inf

SIZE_IMBALANCE = "size-imbalance"
CYCLE = "cycle"
DEGREE_EXCESS = "degree-excess"
SPANS_THREE_PARTS = "spans-three-parts"


class InvalidSpecError(ValueError):
    """Raised for empty part lists or non-positive part sizes."""


class InvalidVertexError(ValueError):
    """Raised for vertex references outside the spec's ranges."""


class InvalidColoringError(ValueError):
    """Raised for malformed colorings (shape mismatch, color id out of range)."""


@dataclass(frozen=True)
class TreeParams:
    """Degree cap for the trees induced by each color class.

    ``max_deg`` is a nonnegative integer, or :data:`UNBOUNDED`.
    """

    max_deg: int | float = 3

    def __post_init__(self) -> None:
        if self.max_deg is not UNBOUNDED and self.max_deg != UNBOUNDED:
            if int(self.max_deg) != self.max_deg or self.max_deg < 0:
                raise ValueError(f"max_deg must be a nonnegative integer or UNBOUNDED, got {self.max_deg!r}")


class VertexRef(NamedTuple):
    part: int
    idx: int


@dataclass(frozen=True)
class MultipartiteSpec:
    """Part sizes of a complete multipartite graph; this is the whole graph."""

    part_sizes: tuple[int, ...]

    @property
    def ell(self) -> int:
        return len(self.part_sizes)

    @property
    def n_vertices(self) -> int:
        return sum(self.part_sizes)

    def vertices(self):
        for part, size in enumerate(self.part_sizes):
            for idx in range(size):
                yield VertexRef(part, idx)

    def validate_vertex(self, v: VertexRef) -> None:
        if not (0 <= v.part < self.ell) or not (0 <= v.idx < self.part_sizes[v.part]):
            raise InvalidVertexError(f"vertex {tuple(v)} out of range for parts {self.part_sizes}")


def make_spec(part_sizes: Sequence[int]) -> MultipartiteSpec:
    sizes = tuple(int(s) for s in part_sizes)
    if not sizes:
        raise InvalidSpecError("need at least one part")
    if any(s < 1 for s in sizes):
        raise InvalidSpecError(f"part sizes must be positive, got {sizes}")
    return MultipartiteSpec(sizes)


def adjacent(spec: MultipartiteSpec, u: VertexRef, v: VertexRef) -> bool:
    """Vertices of a complete multipartite graph are adjacent iff they sit in different parts."""
    spec.validate_vertex(u)
    spec.validate_vertex(v)
    return u.part != v.part


@dataclass(frozen=True)
class Coloring:
    """A t-coloring: one color id in 1..t per vertex, stored per part."""

    t: int
    assignment: tuple[tuple[int, ...], ...]

    @property
    def n_vertices(self) -> int:
        return sum(len(row) for row in self.assignment)

    def validate(self, spec: MultipartiteSpec | None = None) -> None:
        if self.t < 1:
            raise InvalidColoringError(f"t must be positive, got {self.t}")
        if spec is not None and tuple(len(row) for row in self.assignment) != spec.part_sizes:
            raise InvalidColoringError(
                f"assignment shape {tuple(len(r) for r in self.assignment)} does not match parts {spec.part_sizes}"
            )
        for part, row in enumerate(self.assignment):
            for idx, c in enumerate(row):
                if not (1 <= c <= self.t):
                    raise InvalidColoringError(f"vertex ({part},{idx}) has color {c} outside 1..{self.t}")

    def class_members(self, color: int) -> list[VertexRef]:
        if not (1 <= color <= self.t):
            raise InvalidColoringError(f"color {color} outside 1..{self.t}")
        return [
            VertexRef(part, idx)
            for part, row in enumerate(self.assignment)
            for idx, c in enumerate(row)
            if c == color
        ]

    def class_sizes(self) -> list[int]:
        sizes = [0] * self.t
        for row in self.assignment:
            for c in row:
                if not (1 <= c <= self.t):
                    raise InvalidColoringError(f"color {c} outside 1..{self.t}")
                sizes[c - 1] += 1
        return sizes


class Violation(NamedTuple):
    color: int
    kind: str
    detail: str


@dataclass(frozen=True)
class VerifyReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [
                {"color": v.color, "kind": v.kind, "detail": v.detail} for v in self.violations
            ],
        }


def check_equitable(coloring: Coloring) -> VerifyReport:
    """Every class size must be ⌊N/t⌋ or ⌈N/t⌉ (empty classes are fine when ⌊N/t⌋ = 0)."""
    coloring.validate()
    sizes = coloring.class_sizes()
    n, t = coloring.n_vertices, coloring.t
    lo, hi = n // t, -(-n // t)
    violations = [
        Violation(c + 1, SIZE_IMBALANCE, f"class size {s} outside {{{lo},{hi}}} for N={n}, t={t}")
        for c, s in enumerate(sizes)
        if s not in (lo, hi)
    ]
    return VerifyReport(tuple(violations))


def class_profile(coloring: Coloring, color: int) -> tuple[int, ...]:
    """Per-part vertex counts of one color class."""
    if not (1 <= color <= coloring.t):
        raise InvalidColoringError(f"color {color} outside 1..{coloring.t}")
    counts = [0] * len(coloring.assignment)
    for part, row in enumerate(coloring.assignment):
        counts[part] = sum(1 for c in row if c == color)
    return tuple(counts)


def check_tree_coloring(spec: MultipartiteSpec, coloring: Coloring, params: TreeParams) -> VerifyReport:
    """Each class must induce a forest with all degrees <= params.max_deg.

    Works by explicit traversal of the induced subgraph (edges are exactly
    the cross-part pairs inside the class); does not use the profile rule.
    """
    coloring.validate(spec)
    violations: list[Violation] = []
    by_color: dict[int, list[VertexRef]] = {c: [] for c in range(1, coloring.t + 1)}
    for part, row in enumerate(coloring.assignment):
        for idx, c in enumerate(row):
            by_color[c].append(VertexRef(part, idx))

    for color, members in by_color.items():
        k = len(members)
        nbrs: dict[int, list[int]] = {i: [] for i in range(k)}
        for i in range(k):
            for j in range(i + 1, k):
                if members[i].part != members[j].part:
                    nbrs[i].append(j)
                    nbrs[j].append(i)
        max_deg = max((len(v) for v in nbrs.values()), default=0)
        if max_deg > params.max_deg:
            violations.append(
                Violation(color, DEGREE_EXCESS, f"induced degree {max_deg} exceeds cap {params.max_deg}")
            )
        # Forest check: per component, edges == vertices - 1.
        seen = [False] * k
        for root in range(k):
            if seen[root]:
                continue
            stack, comp = [root], []
            seen[root] = True
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in nbrs[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            edge_count = sum(len(nbrs[u]) for u in comp) // 2
            if edge_count > len(comp) - 1:
                violations.append(
                    Violation(color, CYCLE, f"component with {len(comp)} vertices has {edge_count} edges")
                )
    return VerifyReport(tuple(violations))


def profile_admissible(profile: Sequence[int], params: TreeParams) -> bool:
    """Exact class-shape rule for complete multipartite graphs.

    A class is admissible iff it lies in a single part (edgeless), or it
    touches exactly two parts with one of them holding a single vertex and
    the other at most ``max_deg`` vertices (a star K_{1,b}).  Anything
    touching three or more parts contains a triangle; two parts with two or
    more vertices each contain a 4-cycle.
    """
    nonzero = [c for c in profile if c > 0]
    if len(nonzero) <= 1:
        return True
    if len(nonzero) == 2:
        a, b = sorted(nonzero)
        return a == 1 and b <= params.max_deg
    return False
