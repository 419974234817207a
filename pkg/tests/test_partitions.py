import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from flamingo.partitions import (
    BlockTooSmall,
    FlamingoContext,
    OrderedSetPartition,
    act_elements,
    crossing_block_pairs,
    enumerate_noncrossing,
    enumerate_ordered_partitions,
    enumerate_unordered_partitions,
    is_noncrossing,
    long_cycle,
    longest_permutation,
    parse_partition,
    perm_compose,
    perm_inverse,
    perm_sign,
    permute_blocks,
    reflect,
    rotate,
    simple_transposition,
    transposition_distance_to_noncrossing,
)

from oracles import brute_ordered_partitions, has_crossing_by_quadruples


def partitions_strategy(max_n=7):
    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=2, max_value=max_n))
        d = draw(st.integers(min_value=1, max_value=n))
        assignment = draw(
            st.lists(st.integers(min_value=0, max_value=d - 1), min_size=n, max_size=n).filter(
                lambda a: len(set(a)) == d
            )
        )
        blocks = tuple(
            tuple(x for x in range(1, n + 1) if assignment[x - 1] == i) for i in range(d)
        )
        return OrderedSetPartition(n, blocks)

    return build()


class TestConstruction:
    def test_round_trip_text(self):
        p = parse_partition("2 3 6 10|5 7 8 9|1 4")
        assert p.n == 10
        assert p.d == 3
        assert p.blocks == ((2, 3, 6, 10), (5, 7, 8, 9), (1, 4))
        assert parse_partition(p.text()) == p

    def test_rejects_gap(self):
        with pytest.raises(ValueError):
            parse_partition("1 2|4")

    def test_rejects_duplicate(self):
        with pytest.raises(ValueError):
            parse_partition("1 2|2 3")

    def test_rejects_empty_block(self):
        with pytest.raises(ValueError):
            parse_partition("1 2||3")

    def test_block_of(self):
        p = parse_partition("2 3|1 4")
        assert p.block_of(1) == 2
        assert p.block_of(2) == 1

    def test_canonical_orders_by_minimum(self):
        p = parse_partition("2 3 6 10|5 7 8 9|1 4")
        assert p.canonical().blocks == ((1, 4), (2, 3, 6, 10), (5, 7, 8, 9))

    @given(partitions_strategy())
    def test_blocks_partition_ground_set(self, p):
        seen = sorted(x for block in p.blocks for x in block)
        assert seen == list(range(1, p.n + 1))


class TestEnumeration:
    @pytest.mark.parametrize(
        "n,d,r",
        [(4, 2, 1), (4, 2, 2), (5, 2, 2), (6, 3, 1), (6, 3, 2), (6, 2, 3), (7, 3, 2)],
    )
    def test_matches_brute_force(self, n, d, r):
        ours = {p.blocks for p in enumerate_ordered_partitions(n, d, r)}
        assert ours == set(brute_ordered_partitions(n, d, r))

    def test_counts_without_size_floor(self):
        # ordered set partitions of [n] into d nonempty blocks: d! S(n,d)
        assert len(enumerate_ordered_partitions(4, 2, 1)) == 14
        assert len(enumerate_ordered_partitions(5, 3, 1)) == 150

    def test_empty_when_too_small(self):
        assert enumerate_ordered_partitions(3, 2, 2) == []

    def test_unordered_are_canonical_and_complete(self):
        unordered = enumerate_unordered_partitions(6, 2, 2)
        assert all(p.canonical() == p for p in unordered)
        ordered = {p.canonical() for p in enumerate_ordered_partitions(6, 2, 2)}
        assert set(unordered) == ordered
        assert len(unordered) == len(ordered)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            enumerate_ordered_partitions(0, 1, 1)
        with pytest.raises(ValueError):
            enumerate_ordered_partitions(4, 0, 1)


class TestNoncrossing:
    @given(partitions_strategy())
    def test_matches_quadruple_scan(self, p):
        assert is_noncrossing(p) == (not has_crossing_by_quadruples(p.blocks))

    def test_crossing_pairs_localize(self):
        p = parse_partition("1 3|2 4|5")
        assert crossing_block_pairs(p) == [(1, 2)]

    def test_noncrossing_narayana_count(self):
        # noncrossing partitions of [n] into d blocks: Narayana N(n, d)
        assert len(enumerate_noncrossing(5, 2, 1)) == 10
        assert len(enumerate_noncrossing(5, 3, 1)) == 20
        assert sum(len(enumerate_noncrossing(5, d, 1)) for d in range(1, 6)) == 42
        assert len(enumerate_noncrossing(6, 2, 2)) == 9

    def test_distance_zero_is_noncrossing(self):
        p = parse_partition("1 3|2 4")
        assert not transposition_distance_to_noncrossing(p, 0)
        assert transposition_distance_to_noncrossing(p, 1)


class TestGroupActions:
    @given(partitions_strategy(), st.randoms(use_true_random=False))
    def test_element_action_is_a_group_action(self, p, rng):
        w = list(range(1, p.n + 1))
        rng.shuffle(w)
        w = tuple(w)
        u = list(range(1, p.n + 1))
        rng.shuffle(u)
        u = tuple(u)
        assert act_elements(perm_compose(u, w), p) == act_elements(u, act_elements(w, p))

    def test_rotate_matches_long_cycle(self):
        p = parse_partition("1 3|2 4")
        assert rotate(p) == act_elements(long_cycle(4), p)

    def test_reflect_matches_longest_element(self):
        p = parse_partition("1 3|2 4")
        assert reflect(p) == act_elements(longest_permutation(4), p)

    @given(st.integers(min_value=1, max_value=8))
    def test_sign_closed_forms(self, n):
        assert perm_sign(long_cycle(n)) == (-1) ** (n - 1)
        assert perm_sign(longest_permutation(n)) == (-1) ** (n * (n - 1) // 2)
        if n > 1:
            assert perm_sign(simple_transposition(n, 1)) == -1

    @given(partitions_strategy())
    def test_permute_blocks_relabels_positions(self, p):
        if p.d < 2:
            return
        sigma = tuple(range(2, p.d + 1)) + (1,)
        q = permute_blocks(sigma, p)
        # block that was at position i lands at position sigma(i)
        for i in range(1, p.d + 1):
            assert q.blocks[sigma[i - 1] - 1] == p.blocks[i - 1]

    def test_perm_inverse_compose(self):
        w = (3, 1, 4, 2)
        assert perm_compose(w, perm_inverse(w)) == (1, 2, 3, 4)


class TestContext:
    def test_running_example_rows(self):
        p = parse_partition("2 3 6 10|5 7 8 9|1 4")
        ctx = FlamingoContext.from_partition(p, 2)
        assert ctx.nu == 6
        assert ctx.tentacle_counts == (2, 2, 0)
        assert ctx.tentacle_rows == (3, 4, 5, 6)
        assert ctx.tail_rows == (7, 8, 9, 10)

    def test_inadmissible_when_blocks_small(self):
        p = parse_partition("1 2|3")
        ctx = FlamingoContext.from_partition(p, 2)
        assert not ctx.admissible

    @given(partitions_strategy())
    def test_nu_consistency(self, p):
        for r in (1, 2):
            ctx = FlamingoContext.from_partition(p, r)
            if ctx.admissible:
                assert ctx.nu == r + sum(ctx.tentacle_counts)
                assert len(ctx.tentacle_rows) == ctx.nu - r
                assert len(ctx.tail_rows) == p.n - ctx.nu
