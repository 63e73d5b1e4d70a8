import pytest

from equitree import (
    TreeParams,
    case_dispatch,
    check_equitable,
    check_tree_coloring,
    class_profile,
    construct_theorem22,
    construct_three_split,
    construct_uniform,
    equitable_split,
    make_spec,
)
from equitree.constructions import (
    CASE_SIZES,
    ConstructionGapError,
    Q1_LOW,
    Q1_RANGE_B,
    Q2_RANGE_C,
    UnsupportedShapeError,
    q_lower_bound,
)

P3 = TreeParams(3)


def both_ok(spec, coloring):
    return check_equitable(coloring).ok and check_tree_coloring(spec, coloring, P3).ok


class TestEquitableSplit:
    def test_examples(self):
        assert equitable_split(14, 4) == [4, 4, 3, 3]
        assert equitable_split(12, 3) == [4, 4, 4]
        assert equitable_split(7, 3) == [3, 2, 2]

    def test_zero_classes(self):
        with pytest.raises(ValueError):
            equitable_split(5, 0)

    def test_sums_and_spread(self):
        for n in range(0, 30):
            for c in range(1, 10):
                sizes = equitable_split(n, c)
                assert sum(sizes) == n and len(sizes) == c
                assert max(sizes) - min(sizes) <= 1
                assert sizes == sorted(sizes, reverse=True)


class TestUniform:
    def test_h1(self):
        spec = make_spec([4, 4, 4])
        c = construct_uniform(spec, 1)
        assert c.t == 3 and both_ok(spec, c)

    def test_h2_sizes(self):
        spec = make_spec([5, 5, 5])
        c = construct_uniform(spec, 2)
        assert c.t == 6
        assert sorted(c.class_sizes(), reverse=True) == [3, 3, 3, 2, 2, 2]
        assert both_ok(spec, c)

    def test_bipartite(self):
        spec = make_spec([7, 7])
        c = construct_uniform(spec, 3)
        assert c.t == 6 and both_ok(spec, c)

    def test_one_part_profiles(self):
        spec = make_spec([6, 6, 6])
        c = construct_uniform(spec, 2)
        for color in range(1, c.t + 1):
            assert sum(1 for x in class_profile(c, color) if x) == 1

    def test_unequal_parts_rejected(self):
        with pytest.raises(UnsupportedShapeError):
            construct_uniform(make_spec([3, 4]), 1)


class TestThreeSplit:
    def test_paper_split(self):
        spec = make_spec([20, 20, 20])
        c = construct_three_split(spec, (5, 4, 4))
        assert c.t == 13 and set(c.class_sizes()) <= {4, 5}
        assert both_ok(spec, c)

    def test_matches_uniform(self):
        spec = make_spec([12, 12, 12])
        assert construct_three_split(spec, (4, 4, 4)) == construct_uniform(spec, 4)

    def test_size5(self):
        spec = make_spec([20, 20, 20])
        c = construct_three_split(spec, (4, 4, 4))
        assert set(c.class_sizes()) == {5} and both_ok(spec, c)

    def test_zero_split_rejected(self):
        with pytest.raises(ValueError):
            construct_three_split(make_spec([4, 4, 4]), (0, 2, 2))


class TestDispatch:
    def test_examples(self):
        assert case_dispatch(6, 4).case_id == Q1_LOW
        assert case_dispatch(7, 10).case_id == Q1_RANGE_B
        assert case_dispatch(7, 8).case_id == "Q2_RANGE_B"
        assert case_dispatch(5, 8).case_id == Q2_RANGE_C

    def test_boundary_overlap_prefers_earlier(self):
        # q = n sits in both q≡2 ranges when sizes allow; earlier case wins.
        n = 8
        q = 8
        assert case_dispatch(n, q).case_id == "Q2_RANGE_A"

    def test_totality(self):
        for n in range(3, 201):
            for q in range(q_lower_bound(n) + 1, 3 * n + 1):
                if q % 3:
                    case_dispatch(n, q)  # must not raise

    def test_out_of_range(self):
        with pytest.raises(ConstructionGapError):
            case_dispatch(10, 3 * 10 + 1)
        with pytest.raises(ConstructionGapError):
            case_dispatch(10, 6)  # divisible by 3
        with pytest.raises(ConstructionGapError):
            case_dispatch(2, 4)


class TestTheorem22:
    def test_n6_q4(self):
        c = construct_theorem22(6, 4)
        spec = make_spec([6, 6, 6])
        assert sorted(c.class_sizes()) == [4, 4, 5, 5]
        assert both_ok(spec, c)

    def test_n5_q4(self):
        c = construct_theorem22(5, 4)
        assert set(c.class_sizes()) == {3, 4}
        assert both_ok(make_spec([5, 5, 5]), c)

    def test_n7_q11(self):
        c = construct_theorem22(7, 11)
        assert set(c.class_sizes()) == {1, 2}
        assert both_ok(make_spec([7, 7, 7]), c)

    def test_sweep_small(self):
        for n in range(3, 25):
            spec = make_spec([n, n, n])
            for q in range(q_lower_bound(n) + 1, 3 * n + 1):
                if q % 3 == 0:
                    continue
                c = construct_theorem22(n, q)
                case = case_dispatch(n, q)
                assert set(c.class_sizes()) <= CASE_SIZES[case.case_id], (n, q)
                assert both_ok(spec, c), (n, q, case.case_id)

    def test_deterministic(self):
        assert construct_theorem22(13, 11) == construct_theorem22(13, 11)
