"""Deterministic coloring constructions for equal-part complete multipartite graphs.

Three families:

* ``construct_uniform`` -- split every part into ``h`` equitable chunks, one
  color each (works for any degree cap, any color count divisible by the
  number of parts).
* ``construct_three_split`` -- tripartite; each part gets its own disjoint
  color range, sized by the caller.  Global equitability is the caller's
  problem and is gated by the verifiers.
* ``construct_theorem22`` -- the general tripartite construction: a small
  hand-built block of seed classes (stars and one-part runs on the
  lowest-indexed vertices) followed by equitable one-part splits of what is
  left.  Covers every color count q with 3 ∤ q down to the known threshold.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import Coloring, MultipartiteSpec, make_spec


class ConstructionGapError(ValueError):
    """No construction case matches (out of the supported (n, q) range)."""


class UnsupportedShapeError(ValueError):
    """The construction requires equal part sizes (or three parts) and got something else."""


def equitable_split(n: int, classes: int) -> list[int]:
    """Split ``n`` into ``classes`` sizes of ⌊n/classes⌋ or ⌈n/classes⌉, nonincreasing."""
    if classes <= 0:
        raise ValueError(f"need a positive class count, got {classes}")
    base, extra = divmod(n, classes)
    return [base + 1] * extra + [base] * (classes - extra)


def construct_uniform(spec: MultipartiteSpec, h: int) -> Coloring:
    """One-part coloring with t = ell*h: part i uses colors i*h+1 .. (i+1)*h."""
    if h < 1:
        raise ValueError(f"h must be positive, got {h}")
    n = spec.part_sizes[0]
    if any(s != n for s in spec.part_sizes):
        raise UnsupportedShapeError(f"equal parts required, got {spec.part_sizes}")
    assignment = []
    for part in range(spec.ell):
        row: list[int] = []
        for offset, size in enumerate(equitable_split(n, h)):
            row.extend([part * h + offset + 1] * size)
        assignment.append(tuple(row))
    return Coloring(t=spec.ell * h, assignment=tuple(assignment))


def construct_three_split(spec: MultipartiteSpec, splits: tuple[int, int, int]) -> Coloring:
    """Tripartite coloring with disjoint per-part color ranges of sizes (a, b, c).

    Part 0 gets colors 1..a, part 1 gets a+1..a+b, part 2 the rest; each part
    is split equitably on its own.  Equitability of the whole coloring is not
    guaranteed here -- run ``check_equitable`` on the result.
    """
    if spec.ell != 3:
        raise UnsupportedShapeError(f"three parts required, got {spec.ell}")
    n = spec.part_sizes[0]
    if any(s != n for s in spec.part_sizes):
        raise UnsupportedShapeError(f"equal parts required, got {spec.part_sizes}")
    if any(s < 1 for s in splits):
        raise ValueError(f"splits must be positive, got {splits}")
    assignment = []
    first = 1
    for part, count in enumerate(splits):
        row: list[int] = []
        for offset, size in enumerate(equitable_split(n, count)):
            row.extend([first + offset] * size)
        assignment.append(tuple(row))
        first += count
    return Coloring(t=sum(splits), assignment=tuple(assignment))


# ---------------------------------------------------------------------------
# Case analysis for the general tripartite construction (3 ∤ q).
# ---------------------------------------------------------------------------

Q1_LOW = "Q1_LOW"
Q1_MID = "Q1_MID"
Q1_RANGE_A = "Q1_RANGE_A"
Q1_RANGE_B = "Q1_RANGE_B"
Q1_RANGE_C = "Q1_RANGE_C"
Q2_RANGE_A = "Q2_RANGE_A"
Q2_RANGE_B = "Q2_RANGE_B"
Q2_RANGE_C = "Q2_RANGE_C"
UNIFORM = "UNIFORM"
TRIVIAL_SINGLETON = "TRIVIAL_SINGLETON"

#: Seed classes per case: each class is a tuple of (part, vertex count) pairs.
#: Seeds always consume the lowest-indexed free vertices of each part.
_SEEDS: dict[str, tuple[tuple[tuple[int, int], ...], ...]] = {
    # 4q = 3n - 2: two K_{1,3} stars plus two 5-vertex one-part runs.
    Q1_LOW: (((0, 3), (1, 1)), ((1, 5),), ((0, 3), (2, 1)), ((2, 5),)),
    # 4q = 3n + 1: three K_{1,3} stars and one K_{1,2}.
    Q1_MID: (((0, 3), (1, 1)), ((0, 1), (1, 3)), ((0, 1), (2, 3)), ((1, 1), (2, 2))),
    # (3n+4)/4 <= q <= n: four K_{1,2} stars.
    Q1_RANGE_A: (((0, 2), (1, 1)), ((2, 2), (1, 1)), ((0, 2), (1, 1)), ((1, 1), (2, 2))),
    # A single cross edge; the rest is one-part.
    Q1_RANGE_B: (((0, 1), (1, 1)),),
    Q1_RANGE_C: (((0, 1), (1, 1)),),
    # Two K_{1,2} stars.
    Q2_RANGE_A: (((0, 2), (1, 1)), ((1, 1), (2, 2))),
    Q2_RANGE_B: (((0, 2), (1, 1)), ((1, 1), (2, 2))),
    # A cross edge plus a singleton.
    Q2_RANGE_C: (((0, 1), (1, 1)), ((2, 1),)),
}

#: Claimed two-element class-size set per case.
CASE_SIZES: dict[str, set[int]] = {
    Q1_LOW: {4, 5},
    Q1_MID: {3, 4},
    Q1_RANGE_A: {3, 4},
    Q1_RANGE_B: {2, 3},
    Q1_RANGE_C: {1, 2},
    Q2_RANGE_A: {3, 4},
    Q2_RANGE_B: {2, 3},
    Q2_RANGE_C: {1, 2},
}


@dataclass(frozen=True)
class ConstructionCase:
    case_id: str
    seeds: tuple[tuple[tuple[int, int], ...], ...]
    remainder_classes_per_part: int
    size_pair: frozenset[int]


def q_lower_bound(n: int) -> int:
    """Smallest supported color count for K_{n,n,n}: 3⌊(n+1)/4⌋."""
    return 3 * ((n + 1) // 4)


def _check_range(n: int, q: int) -> None:
    if n < 3:
        raise ConstructionGapError(f"need n >= 3, got {n}")
    if q % 3 == 0:
        raise ConstructionGapError(f"q={q} divisible by 3; use construct_uniform(h=q//3)")
    if not (q_lower_bound(n) + 1 <= q <= 3 * n):
        raise ConstructionGapError(f"q={q} outside [{q_lower_bound(n) + 1}, {3 * n}] for n={n}")


def case_dispatch(n: int, q: int) -> ConstructionCase:
    """Pick the first matching case in textual order; raise on a genuine gap.

    All comparisons are integer-exact (no division).  Boundary overlaps
    (q = n appears in two ranges of the q ≡ 2 branch) resolve to the earlier
    case.
    """
    _check_range(n, q)
    if q % 3 == 1:
        if 4 * q == 3 * n - 2:
            case = Q1_LOW
        elif 4 * q == 3 * n + 1:
            case = Q1_MID
        elif 4 * q >= 3 * n + 4 and q <= n:
            case = Q1_RANGE_A
        elif n + 1 <= q and 2 * q <= 3 * n - 1:
            case = Q1_RANGE_B
        elif 2 * q >= 3 * n + 2 and q <= 3 * (n - 1) + 1:
            case = Q1_RANGE_C
        else:
            raise ConstructionGapError(f"no q≡1 case for n={n}, q={q}")
    else:
        if 4 * q >= 3 * n + 2 and q <= n:
            case = Q2_RANGE_A
        elif n <= q and 2 * q <= 3 * n - 2:
            case = Q2_RANGE_B
        elif 2 * q >= 3 * n + 1 and q <= 3 * (n - 1) + 2:
            case = Q2_RANGE_C
        else:
            raise ConstructionGapError(f"no q≡2 case for n={n}, q={q}")
    seeds = _SEEDS[case]
    return ConstructionCase(
        case_id=case,
        seeds=seeds,
        remainder_classes_per_part=(q - len(seeds)) // 3,
        size_pair=frozenset(CASE_SIZES[case]),
    )


def construct_theorem22(n: int, q: int) -> Coloring:
    """Equitable tree-coloring of K_{n,n,n} with q colors (3 ∤ q), degree cap 3.

    Seed classes take the lowest-indexed vertices; each part's remaining
    vertices are split equitably into the case's per-part class count.
    """
    case = case_dispatch(n, q)
    spec = make_spec([n, n, n])
    rows: list[list[int]] = [[0] * n for _ in range(3)]
    next_free = [0, 0, 0]

    color = 0
    for seed in case.seeds:
        color += 1
        for part, count in seed:
            for _ in range(count):
                rows[part][next_free[part]] = color
                next_free[part] += 1

    rem = case.remainder_classes_per_part
    for part in range(3):
        leftover = n - next_free[part]
        if rem == 0:
            if leftover:
                raise ConstructionGapError(f"internal: {leftover} unseeded vertices with no remainder classes")
            continue
        for size in equitable_split(leftover, rem):
            color += 1
            for _ in range(size):
                rows[part][next_free[part]] = color
                next_free[part] += 1

    assert color == q, (n, q, case.case_id, color)
    coloring = Coloring(t=q, assignment=tuple(tuple(r) for r in rows))
    coloring.validate(spec)
    return coloring
