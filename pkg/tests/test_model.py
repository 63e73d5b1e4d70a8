import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equitree import (
    UNBOUNDED,
    Coloring,
    TreeParams,
    VertexRef,
    adjacent,
    check_equitable,
    check_tree_coloring,
    class_profile,
    make_spec,
    profile_admissible,
)
from equitree.model import InvalidColoringError, InvalidSpecError, InvalidVertexError


def coloring_for(spec, classes, t):
    """Build a coloring from explicit class member lists (1-based colors)."""
    rows = [[0] * s for s in spec.part_sizes]
    for color, members in enumerate(classes, start=1):
        for part, idx in members:
            rows[part][idx] = color
    return Coloring(t=t, assignment=tuple(tuple(r) for r in rows))


class TestSpec:
    def test_make_spec(self):
        s = make_spec([3, 3, 3])
        assert (s.ell, s.n_vertices) == (3, 9)
        s = make_spec([8, 8, 8])
        assert (s.ell, s.n_vertices) == (3, 24)
        s = make_spec([4])
        assert (s.ell, s.n_vertices) == (1, 4)

    def test_bad_specs(self):
        with pytest.raises(InvalidSpecError):
            make_spec([])
        with pytest.raises(InvalidSpecError):
            make_spec([3, 0, 3])
        with pytest.raises(InvalidSpecError):
            make_spec([-1])

    def test_adjacent(self):
        s = make_spec([4, 4, 4])
        assert adjacent(s, VertexRef(0, 0), VertexRef(1, 2))
        assert not adjacent(s, VertexRef(0, 0), VertexRef(0, 3))
        assert not adjacent(s, VertexRef(2, 1), VertexRef(2, 1))
        with pytest.raises(InvalidVertexError):
            adjacent(s, VertexRef(0, 4), VertexRef(1, 0))


class TestEquitable:
    def test_one_class_per_part(self):
        s = make_spec([4, 4, 4])
        c = Coloring(t=3, assignment=((1,) * 4, (2,) * 4, (3,) * 4))
        assert check_equitable(c).ok

    def test_floor_ceil_sizes(self):
        # N=12, t=5: sizes 3,3,2,2,2
        c = Coloring(t=5, assignment=((1, 1, 1, 2, 2, 2), (3, 3, 4, 4, 5, 5)))
        assert check_equitable(c).ok

    def test_imbalance(self):
        # N=12, t=3, sizes 5,4,3
        c = Coloring(t=3, assignment=((1, 1, 1, 1, 1, 2), (2, 2, 2, 3, 3, 3)))
        rep = check_equitable(c)
        assert not rep.ok
        assert {v.kind for v in rep.violations} == {"size-imbalance"}

    def test_empty_classes_legal_when_t_exceeds_n(self):
        c = Coloring(t=5, assignment=((1, 2), (3,)))
        assert check_equitable(c).ok

    def test_bad_color_id(self):
        c = Coloring(t=2, assignment=((1, 3), (2, 2)))
        with pytest.raises(InvalidColoringError):
            check_equitable(c)


class TestTreeColoring:
    def test_star_ok(self):
        s = make_spec([3, 1])
        c = coloring_for(s, [[(0, 0), (0, 1), (0, 2), (1, 0)]], t=1)
        assert check_tree_coloring(s, c, TreeParams(3)).ok

    def test_c4_rejected(self):
        s = make_spec([2, 2])
        c = coloring_for(s, [[(0, 0), (0, 1), (1, 0), (1, 1)]], t=1)
        rep = check_tree_coloring(s, c, TreeParams(3))
        assert any(v.kind == "cycle" for v in rep.violations)

    def test_triangle_rejected(self):
        s = make_spec([1, 1, 1])
        c = coloring_for(s, [[(0, 0), (1, 0), (2, 0)]], t=1)
        rep = check_tree_coloring(s, c, TreeParams(UNBOUNDED))
        assert any(v.kind == "cycle" for v in rep.violations)

    def test_degree_excess(self):
        s = make_spec([4, 1])
        c = coloring_for(s, [[(0, 0), (0, 1), (0, 2), (0, 3), (1, 0)]], t=1)
        assert check_tree_coloring(s, c, TreeParams(4)).ok
        rep = check_tree_coloring(s, c, TreeParams(3))
        assert any(v.kind == "degree-excess" for v in rep.violations)


class TestProfiles:
    def test_class_profile(self):
        s = make_spec([3, 5, 1])
        c = coloring_for(s, [[(0, 0), (0, 1), (0, 2), (1, 0)]], t=3)
        # Unassigned slots hold 0 in coloring_for; fill rest as color 2/3 instead.
        rows = [list(r) for r in c.assignment]
        for part, row in enumerate(rows):
            for i, v in enumerate(row):
                if v == 0:
                    rows[part][i] = 2 if part == 1 else 3
        c = Coloring(t=3, assignment=tuple(tuple(r) for r in rows))
        assert class_profile(c, 1) == (3, 1, 0)
        assert class_profile(c, 2) == (0, 4, 0)

    def test_one_part_always_admissible(self):
        assert profile_admissible((0, 5, 0), TreeParams(0))
        assert profile_admissible((0, 0, 0), TreeParams(0))

    def test_star_profile(self):
        assert profile_admissible((1, 3, 0), TreeParams(3))
        assert not profile_admissible((1, 3, 0), TreeParams(2))

    def test_cycles_inadmissible(self):
        assert not profile_admissible((1, 1, 1), TreeParams(UNBOUNDED))
        assert not profile_admissible((2, 2, 0), TreeParams(UNBOUNDED))

    def test_large_class_must_be_one_part(self):
        # size >= max_deg + 2 admissible only inside a single part
        for max_deg in range(0, 5):
            size = max_deg + 2
            assert profile_admissible((size, 0), TreeParams(max_deg))
            for a in range(1, size):
                assert not profile_admissible((a, size - a), TreeParams(max_deg))


@st.composite
def random_colorings(draw):
    ell = draw(st.integers(2, 3))
    sizes = draw(st.lists(st.integers(1, 4), min_size=ell, max_size=ell))
    if sum(sizes) > 12:
        sizes = [min(s, 2) for s in sizes]
    t = draw(st.integers(1, sum(sizes)))
    rows = tuple(
        tuple(draw(st.integers(1, t)) for _ in range(s)) for s in sizes
    )
    return make_spec(sizes), Coloring(t=t, assignment=rows)


class TestProperties:
    @given(random_colorings(), st.randoms())
    @settings(max_examples=150, deadline=None)
    def test_equitable_invariant_under_permutations(self, sc, rng):
        spec, c = sc
        before = check_equitable(c).ok
        perm = list(range(1, c.t + 1))
        rng.shuffle(perm)
        relabeled = Coloring(
            t=c.t, assignment=tuple(tuple(perm[v - 1] for v in row) for row in c.assignment)
        )
        assert check_equitable(relabeled).ok == before
        shuffled_rows = []
        for row in c.assignment:
            row = list(row)
            rng.shuffle(row)
            shuffled_rows.append(tuple(row))
        assert check_equitable(Coloring(t=c.t, assignment=tuple(shuffled_rows))).ok == before

    @given(random_colorings(), st.sampled_from([0, 1, 2, 3, UNBOUNDED]))
    @settings(max_examples=150, deadline=None)
    def test_traversal_agrees_with_shape_rule(self, sc, max_deg):
        spec, c = sc
        params = TreeParams(max_deg)
        by_rule = all(
            profile_admissible(class_profile(c, color), params) for color in range(1, c.t + 1)
        )
        assert check_tree_coloring(spec, c, params).ok == by_rule
