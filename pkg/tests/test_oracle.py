import itertools

import pytest

from equitree import (
    UNBOUNDED,
    TreeParams,
    brute_force_decide,
    brute_force_va_equiv,
    check_equitable,
    make_spec,
    materialize,
    small_graph,
)
from equitree.oracle import GraphTooLargeError, _class_ok, assignment_to_coloring

P3 = TreeParams(3)


class TestMaterialize:
    def test_triangle(self):
        g = materialize(make_spec([1, 1, 1]))
        assert g.n == 3 and len(g.edges) == 3

    def test_c4(self):
        g = materialize(make_spec([2, 2]))
        assert g.n == 4 and len(g.edges) == 4

    def test_octahedron(self):
        g = materialize(make_spec([2, 2, 2]))
        assert g.n == 6 and len(g.edges) == 12

    def test_limit(self):
        with pytest.raises(GraphTooLargeError):
            materialize(make_spec([5, 5, 5]))
        materialize(make_spec([5, 5, 5]), limit=15)


class TestBruteForce:
    def test_matchings(self):
        g = materialize(make_spec([2, 2, 2]))
        assert brute_force_decide(g, 3, TreeParams(1)).feasible

    def test_triangle_one_color(self):
        g = materialize(make_spec([1, 1, 1]))
        assert not brute_force_decide(g, 1, TreeParams(UNBOUNDED)).feasible

    def test_two_stars(self):
        g = materialize(make_spec([2, 2, 2]))
        assert brute_force_decide(g, 2, P3).feasible

    def test_witness_is_checkable(self):
        spec = make_spec([2, 2, 2])
        g = materialize(spec)
        adj = g.adjacency()
        for t in range(2, 7):
            result = brute_force_decide(g, t, P3)
            assert result.feasible
            coloring = assignment_to_coloring(spec, t, result.assignment)
            assert check_equitable(coloring).ok
            for color in range(1, t + 1):
                members = [v for v in range(g.n) if result.assignment[v] == color]
                assert _class_ok(members, adj, 3)

    def test_arbitrary_graph(self):
        # P_4 path: one color works only if the whole path is allowed (deg <= 2)
        g = small_graph(4, [(0, 1), (1, 2), (2, 3)])
        assert brute_force_decide(g, 1, TreeParams(2)).feasible
        assert not brute_force_decide(g, 1, TreeParams(1)).feasible

    def test_symmetry_pruning_sound(self):
        for ell, max_size in ((2, 3), (3, 2)):
            for sizes in itertools.product(range(1, max_size + 1), repeat=ell):
                spec = make_spec(sizes)
                if spec.n_vertices > 7:
                    continue
                g = materialize(spec)
                for t in range(1, spec.n_vertices + 1):
                    for md in (0, 1, 3, UNBOUNDED):
                        params = TreeParams(md)
                        with_sym = brute_force_decide(g, t, params, use_symmetry=True)
                        without = brute_force_decide(g, t, params, use_symmetry=False)
                        assert with_sym.feasible == without.feasible, (sizes, t, md)


class TestBruteVaEquiv:
    def test_values(self):
        assert brute_force_va_equiv(make_spec([3, 3, 3]), P3) == 3
        assert brute_force_va_equiv(make_spec([2, 2, 2]), P3) == 2

    def test_k444(self):
        assert brute_force_va_equiv(make_spec([4, 4, 4]), P3) == 3

    def test_agrees_with_engine(self):
        from equitree import compute_va_equiv

        for sizes in itertools.product((1, 2, 3), repeat=2):
            spec = make_spec(sizes)
            for md in (0, 2, 3, UNBOUNDED):
                params = TreeParams(md)
                assert brute_force_va_equiv(spec, params) == compute_va_equiv(spec, params)
