import pytest
from hypothesis import given, strategies as st

from charpoly.partitions import (
    Cell,
    EmptyPartition,
    NotACorner,
    NotWeaklyDecreasing,
    Partition,
    contains,
    hook_lengths,
    internal_corners,
    make_partition,
    partitions_of,
    remove_corner,
    skew_hooks,
    subpartitions,
    transpose,
    vertical_strip_inners,
)
from charpoly.verification import (
    Bounds,
    border_strips_bruteforce,
    check_hook_product_divides_factorial,
    check_partition_contains_transpose,
    check_partition_corner_count,
    check_skew_hook_bruteforce,
)

parts_st = st.lists(st.integers(1, 6), max_size=6).map(
    lambda xs: Partition(sorted(xs, reverse=True))
)


class TestMakePartition:
    def test_basic(self):
        lam = make_partition([3, 3])
        assert lam == Partition([3, 3])
        assert lam.size == 6
        assert lam.length == 2

    def test_empty(self):
        assert make_partition([]) == Partition()
        assert make_partition([]).size == 0
        assert make_partition([]).length == 0

    def test_trailing_zeros_stripped(self):
        assert make_partition([3, 1, 0, 0]) == Partition([3, 1])

    def test_increasing_rejected(self):
        with pytest.raises(NotWeaklyDecreasing):
            make_partition([2, 3])

    def test_negative_rejected(self):
        with pytest.raises(NotWeaklyDecreasing):
            make_partition([3, -1])


class TestTranspose:
    def test_rectangle(self):
        assert transpose(Partition([3, 3])) == Partition([2, 2, 2])

    def test_empty(self):
        assert transpose(Partition()) == Partition()

    def test_hook(self):
        # column heights of (3,1): columns 1..3 have heights 2,1,1
        assert transpose(Partition([3, 1])) == Partition([2, 1, 1])

    @given(parts_st)
    def test_involution(self, lam):
        assert transpose(transpose(lam)) == lam


class TestContains:
    def test_componentwise(self):
        assert contains(Partition([3, 3]), Partition([2, 1]))

    def test_length_violation(self):
        assert not contains(Partition([3, 3]), Partition([1, 1, 1]))

    def test_width_violation(self):
        assert not contains(Partition([3, 3]), Partition([4]))

    @given(parts_st, parts_st)
    def test_transpose_invariant(self, lam, nu):
        assert contains(lam, nu) == contains(transpose(lam), transpose(nu))


class TestCorners:
    def test_rectangle(self):
        assert internal_corners(Partition([3, 3])) == [Cell(2, 3)]

    def test_column(self):
        assert internal_corners(Partition([1, 1, 1])) == [Cell(3, 1)]

    def test_two_corners(self):
        assert internal_corners(Partition([3, 1])) == [Cell(1, 3), Cell(2, 1)]

    def test_empty_raises(self):
        with pytest.raises(EmptyPartition):
            internal_corners(Partition())

    def test_remove(self):
        assert remove_corner(Partition([3, 3]), Cell(2, 3)) == Partition([3, 2])
        assert remove_corner(Partition([1]), Cell(1, 1)) == Partition()
        assert remove_corner(Partition([3, 1]), Cell(1, 3)) == Partition([2, 1])

    def test_remove_non_corner(self):
        with pytest.raises(NotACorner):
            remove_corner(Partition([3, 3]), Cell(1, 3))

    @given(parts_st)
    def test_corner_count_is_distinct_parts(self, lam):
        if not lam:
            return
        assert len(internal_corners(lam)) == len(set(lam))


class TestHookLengths:
    def test_two_rows(self):
        # forced by the hook formula: product must be 6!/5 = 144
        hl = hook_lengths(Partition([3, 3]))
        assert [hl[Cell(1, j)] for j in (1, 2, 3)] == [4, 3, 2]
        assert [hl[Cell(2, j)] for j in (1, 2, 3)] == [3, 2, 1]

    def test_single_box(self):
        assert hook_lengths(Partition([1])) == {Cell(1, 1): 1}

    def test_single_row(self):
        hl = hook_lengths(Partition([5]))
        assert [hl[Cell(1, j)] for j in range(1, 6)] == [5, 4, 3, 2, 1]


class TestSkewHooks:
    def test_dominoes_of_rectangle(self):
        hooks = skew_hooks(Partition([3, 3]), 2)
        as_sets = {
            (frozenset(h.cells), h.leg_length, h.complement) for h in hooks
        }
        assert as_sets == {
            (frozenset({Cell(2, 2), Cell(2, 3)}), 0, Partition([3, 1])),
            (frozenset({Cell(1, 3), Cell(2, 3)}), 1, Partition([2, 2])),
        }

    def test_full_column(self):
        (hook,) = skew_hooks(Partition([1, 1, 1]), 3)
        assert hook.leg_length == 2
        assert hook.complement == Partition()

    def test_too_large(self):
        assert skew_hooks(Partition([3, 3]), 7) == []

    def test_size_one_is_corners(self):
        for lam in partitions_of(6):
            hooks = skew_hooks(lam, 1)
            assert [h.cells[0] for h in hooks] == internal_corners(lam)
            assert all(h.leg_length == 0 for h in hooks)

    @given(parts_st, st.integers(1, 6))
    def test_matches_bruteforce(self, lam, r):
        got = {
            (frozenset((c.row, c.col) for c in h.cells), h.leg_length, h.complement)
            for h in skew_hooks(lam, r)
        }
        assert got == border_strips_bruteforce(lam, r)


class TestVerticalStrips:
    def test_column(self):
        assert vertical_strip_inners(Partition([1, 1])) == [
            Partition([1, 1]),
            Partition([1]),
            Partition(),
        ]

    def test_row(self):
        assert vertical_strip_inners(Partition([2])) == [Partition([2]), Partition([1])]

    def test_hook(self):
        assert vertical_strip_inners(Partition([2, 1])) == [
            Partition([2, 1]),
            Partition([2]),
            Partition([1, 1]),
            Partition([1]),
        ]

    @given(parts_st)
    def test_at_most_one_box_per_row(self, lam):
        for kappa in vertical_strip_inners(lam):
            assert contains(lam, kappa)
            padded = list(kappa) + [0] * (len(lam) - len(kappa))
            assert all(p - q in (0, 1) for p, q in zip(lam, padded))


def test_partitions_of_order_and_count():
    got = list(partitions_of(4))
    assert got == [
        Partition([4]),
        Partition([3, 1]),
        Partition([2, 2]),
        Partition([2, 1, 1]),
        Partition([1, 1, 1, 1]),
    ]
    assert len(list(partitions_of(8))) == 22


def test_subpartitions_contained_and_complete():
    lam = Partition([3, 2])
    subs = list(subpartitions(lam))
    assert len(subs) == len(set(subs))
    assert set(subs) == {
        nu for k in range(lam.size + 1) for nu in partitions_of(k) if contains(lam, nu)
    }


def test_invariant_sweeps():
    bounds = Bounds(max_k=8, max_r=6, n_window=7)
    for suite in (
        check_partition_corner_count,
        check_partition_contains_transpose,
        check_skew_hook_bruteforce,
        check_hook_product_divides_factorial,
    ):
        result = suite(bounds)
        assert result.ok, result.failures
