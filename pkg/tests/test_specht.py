import pytest
from hypothesis import given
from hypothesis import strategies as st

from flamingo.invariants import jellyfish_invariant
from flamingo.partitions import enumerate_noncrossing, parse_partition
from flamingo.polynomials import MatrixPolynomial, minor
from flamingo.specht import (
    RankProfile,
    SpanChecker,
    SpechtShape,
    conjugate_partition,
    exact_rank,
    hook_family,
    membership_test,
    spanning_rank,
    spanning_set,
    syt_count,
    verify_hook_basis,
)

from oracles import rational_rank, syt_count_by_corners


class TestShapes:
    def test_conjugate(self):
        assert conjugate_partition((4, 2, 1)) == (3, 2, 1, 1)
        assert conjugate_partition((2, 2, 1, 1)) == (4, 2)

    def test_conjugate_involutes(self):
        for lam in [(3, 1), (4, 4, 2), (5, 3, 3, 1), (2, 2, 2)]:
            assert conjugate_partition(conjugate_partition(lam)) == lam

    def test_shape_lambda_mu(self):
        shape = SpechtShape(10, 3, 2)
        assert shape.lam == (3, 3, 1, 1, 1, 1)
        assert shape.mu == (6, 2, 2)
        assert shape.nu == 6

    def test_shape_requires_room(self):
        with pytest.raises(ValueError):
            SpechtShape(5, 2, 3)

    @given(
        st.integers(min_value=1, max_value=3),
        st.integers(min_value=1, max_value=3),
        st.integers(min_value=0, max_value=4),
    )
    def test_dimension_matches_corner_recursion(self, d, r, extra):
        n = d * r + extra
        shape = SpechtShape(n, d, r)
        assert shape.dimension() == syt_count_by_corners(shape.lam)

    def test_hook_lengths_hand_checked(self):
        # lambda = (2, 2): hooks 3, 2, 2, 1 so dim = 24 / 12 = 2
        assert syt_count((2, 2)) == 2
        assert syt_count((3, 1)) == 3
        assert syt_count((1,)) == 1

    def test_syt_count_validates_shape(self):
        with pytest.raises(ValueError):
            syt_count((1, 3))


class TestSpanChecker:
    def test_rank_counts_independent_rows(self):
        checker = SpanChecker()
        p = minor((1,), (1,), 2)
        q = minor((1,), (2,), 2)
        assert checker.insert(p)
        assert checker.insert(q)
        assert not checker.insert(p + q)
        assert checker.rank == 2

    def test_contains_after_insert(self):
        checker = SpanChecker()
        p = minor((1, 2), (1, 2), 3)
        checker.insert(p)
        assert checker.contains(p * 5)
        assert not checker.contains(minor((1, 2), (1, 3), 3))

    def test_zero_handling(self):
        checker = SpanChecker()
        assert checker.contains(MatrixPolynomial.zero(3))
        assert not checker.insert(MatrixPolynomial.zero(3))

    def test_rejects_mixed_widths(self):
        checker = SpanChecker()
        checker.insert(minor((1,), (1,), 2))
        with pytest.raises(ValueError):
            checker.insert(minor((1,), (1,), 3))


class TestExactRank:
    @pytest.mark.parametrize(
        "n,d,r",
        [(4, 2, 1), (5, 2, 2), (6, 2, 2), (6, 3, 1)],
    )
    def test_matches_rational_elimination(self, n, d, r):
        polys = [jellyfish_invariant(p, r) for p in enumerate_noncrossing(n, d, r)]
        profile = exact_rank(polys)
        assert profile.rank == rational_rank(polys)

    def test_profile_shape(self):
        polys = [minor((1,), (1,), 2), minor((1,), (2,), 2)]
        profile = exact_rank(polys)
        assert isinstance(profile, RankProfile)
        assert profile.rows == 2
        assert profile.rank == 2
        assert len(profile.pivot_monomials) == 2

    def test_duplicates_do_not_inflate_rank(self):
        p = minor((1, 2), (1, 2), 3)
        assert exact_rank([p, p, p * 2]).rank == 1


class TestSpanningSet:
    def test_column_tuples_sizes(self):
        shape = SpechtShape(4, 2, 1)
        for poly in spanning_set(shape):
            assert poly.n == 4

    def test_spanning_rank_equals_dimension_small(self):
        for n, d, r in [(4, 2, 1), (4, 2, 2), (5, 2, 2), (6, 3, 1), (6, 2, 3)]:
            shape = SpechtShape(n, d, r)
            assert spanning_rank(shape) == shape.dimension()


class TestMembership:
    @pytest.mark.parametrize(
        "text,r",
        [("1 2|3 4", 1), ("1 3|2 4", 1), ("1 2 5|3 4 6", 2), ("1 3 5|2 4 6", 2)],
    )
    def test_invariants_are_members(self, text, r):
        p = parse_partition(text)
        shape = SpechtShape(p.n, p.d, r)
        assert membership_test(jellyfish_invariant(p, r), shape)

    def test_non_member_rejected(self):
        shape = SpechtShape(4, 2, 1)
        stray = MatrixPolynomial.variable(1, 1, 4)
        assert not membership_test(stray, shape)

    def test_zero_is_member(self):
        shape = SpechtShape(4, 2, 1)
        assert membership_test(MatrixPolynomial.zero(4), shape)


class TestHookBasis:
    def test_family_size_binomial(self):
        from math import comb

        for n in range(2, 8):
            for d in range(1, n + 1):
                assert len(hook_family(n, d)) == comb(n - 1, d - 1)

    def test_members_are_intervals(self):
        for p in hook_family(6, 3):
            for block in p.blocks:
                assert block == tuple(range(block[0], block[-1] + 1))

    @pytest.mark.parametrize("n,d", [(4, 2), (5, 2), (5, 3), (6, 3), (7, 4)])
    def test_basis_verified(self, n, d):
        assert verify_hook_basis(n, d)
