import pytest
from hypothesis import given, strategies as st

from charpoly.characters import (
    CycleType,
    OutOfStableRange,
    SizeMismatch,
    TooSmall,
    _mn,
    centralizer_order,
    character_frobenius_transposition,
    character_mn,
    character_recpart,
)
from charpoly.partitions import Partition, partitions_of
from charpoly.tableaux import dim_syt
from charpoly.verification import (
    Bounds,
    check_column_orthogonality,
    check_frobenius_vs_mn,
    check_mn_identity_is_dimension,
    check_mn_peel_order,
    check_recpart_band,
    check_recpart_vs_mn,
)


class TestCycleType:
    def test_fields(self):
        ct = CycleType([3, 1, 1])
        assert ct.n == 5
        assert ct.multiplicities() == {3: 1, 1: 2}

    def test_canonical(self):
        assert CycleType([1, 1, 3]).cycles == Partition([3, 1, 1])

    def test_centralizer(self):
        # (2,1,1) in S_4: z = 2 * 1!^... = 2 * 1 * 2! = 4
        assert centralizer_order(CycleType([2, 1, 1])) == 4
        assert centralizer_order(CycleType([1] * 4)) == 24


class TestMurnaghanNakayama:
    def test_transposition_vanishing(self):
        # cross-checked by the Frobenius formula below
        assert character_mn(Partition([3, 3, 3]), CycleType([2] + [1] * 7)) == 0

    def test_trivial_representation(self):
        for ct in (CycleType([3, 3, 3]), CycleType([4, 3, 2]), CycleType([1] * 9)):
            assert character_mn(Partition([9]), ct) == 1

    def test_hooks_on_full_cycle(self):
        # hook (i, 1^{r-i}) at an r-cycle gives (-1)^{r-i}; others vanish
        r = 4
        for kappa in partitions_of(r):
            got = character_mn(kappa, CycleType([r]))
            if kappa[0] + len(kappa) - 1 == r:
                assert got == (-1) ** (r - kappa[0])
            else:
                assert got == 0
        assert character_mn(Partition([2, 1, 1]), CycleType([4])) == 1

    def test_identity_gives_dimension(self):
        for n in range(7):
            for mu in partitions_of(n):
                assert character_mn(mu, CycleType([1] * n)) == dim_syt(mu)

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            character_mn(Partition([2, 1]), CycleType([2, 1, 1]))

    def test_empty(self):
        assert character_mn(Partition(), CycleType()) == 1

    @given(
        st.lists(st.integers(1, 4), min_size=0, max_size=4).map(
            lambda xs: Partition(sorted(xs, reverse=True))
        )
    )
    def test_peel_order_free(self, mu):
        n = mu.size
        for ct in partitions_of(n):
            assert _mn(mu, tuple(ct)) == _mn(mu, tuple(reversed(ct)))


class TestFrobenius:
    def test_square_vanishes(self):
        # row/column binomials cancel for the self-transpose (3,3,3)
        assert character_frobenius_transposition(Partition([3, 3, 3])) == 0

    def test_trivial(self):
        for n in range(2, 8):
            assert character_frobenius_transposition(Partition([n])) == 1

    def test_sign_representation(self):
        for n in range(2, 8):
            lam = Partition([1] * n)
            assert character_frobenius_transposition(lam) == -1
            assert character_mn(lam, CycleType([2] + [1] * (n - 2))) == -1

    def test_too_small(self):
        with pytest.raises(TooSmall):
            character_frobenius_transposition(Partition([1]))


class TestRecpart:
    def test_empty_partition_constant(self):
        for ct in (CycleType([1]), CycleType([3, 2]), CycleType([2, 1, 1])):
            assert character_recpart(Partition(), ct) == 1

    def test_three_cycle_value(self):
        # 5C(9,6)-5C(9,5)+2C(9,4)-C(9,3)+C(9,2)-C(9,1) = -15
        ct = CycleType([3] + [1] * 9)
        assert character_recpart(Partition([3, 3]), ct) == -15
        assert character_mn(Partition([6, 3, 3]), ct) == -15

    def test_standard_representation_counts_fixed_points(self):
        lam = Partition([1])
        for ct in (CycleType([2, 1, 1, 1]), CycleType([3, 2, 1]), CycleType([1] * 5)):
            fixed = ct.multiplicities().get(1, 0)
            assert character_recpart(lam, ct) == fixed - 1
            n = ct.n
            assert character_mn(Partition([n - 1, 1]), ct) == fixed - 1

    def test_out_of_range(self):
        with pytest.raises(OutOfStableRange):
            character_recpart(Partition([3, 3]), CycleType([4, 2, 2]))


def test_invariant_sweeps():
    bounds = Bounds(max_k=8, max_r=6, n_window=7)
    for suite in (
        check_mn_identity_is_dimension,
        check_frobenius_vs_mn,
        check_recpart_vs_mn,
        check_mn_peel_order,
        check_column_orthogonality,
    ):
        result = suite(bounds)
        assert result.ok, result.failures


def test_recpart_band_reported_not_asserted(capsys):
    result = check_recpart_band(Bounds(max_k=8, max_r=6, n_window=7))
    assert result.report_only
    assert result.checks > 0
    print(
        f"recpart band: {result.checks} checks, {result.disagreements} disagreements (report only)"
    )
