import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from flamingo.invariants import (
    act_on_polynomial,
    invariant_cache_clear,
    jellyfish_invariant,
    verify_block_reorder,
    verify_equivariance,
    verify_reflection,
    verify_rotation,
)
from flamingo.partitions import (
    enumerate_ordered_partitions,
    long_cycle,
    parse_partition,
    simple_transposition,
)
from flamingo.polynomials import MatrixPolynomial
from flamingo.tableaux import enumerate_tableaux

from oracles import det_leibniz, random_int_matrix

EXAMPLE = parse_partition("2 3 6 10|5 7 8 9|1 4")

SMALL_PARTITIONS = [
    "1 2|3 4",
    "1 3|2 4",
    "1 4|2 3",
    "1 2 3|4 5",
    "1 3 5|2 4",
    "1 2 5|3 4 6",
    "1 4 5|2 3 6",
]


class TestConstruction:
    def test_zero_when_a_block_is_small(self):
        p = parse_partition("1 2|3")
        assert jellyfish_invariant(p, 2).is_zero

    def test_positive_depth_required(self):
        with pytest.raises(ValueError):
            jellyfish_invariant(EXAMPLE, 0)

    def test_signed_sum_over_tableaux(self):
        p = parse_partition("1 2 5|3 4 6")
        total = MatrixPolynomial.zero(6)
        for t in enumerate_tableaux(p, 2):
            total = total + t.minor_product() * t.sign()
        assert jellyfish_invariant(p, 2) == total

    def test_example_depth_three_vanishes(self):
        # one block has only two elements, so depth 3 kills the whole sum
        assert jellyfish_invariant(EXAMPLE, 3).is_zero

    def test_cached_instance_reused(self):
        invariant_cache_clear()
        a = jellyfish_invariant(EXAMPLE, 1)
        b = jellyfish_invariant(EXAMPLE, 1)
        assert a is b

    @pytest.mark.parametrize("text", SMALL_PARTITIONS)
    def test_numeric_cross_check(self, text):
        # evaluate the polynomial and the defining sum on random matrices
        p = parse_partition(text)
        rng = random.Random(hash(text) & 0xFFFF)
        for r in (1, 2):
            if min(p.block_sizes()) < r:
                continue
            poly = jellyfish_invariant(p, r)
            matrix = random_int_matrix(rng, poly.k, p.n)
            direct = 0
            for t in enumerate_tableaux(p, r):
                prod = t.sign()
                for i, block in enumerate(p.blocks, start=1):
                    rows = t.column_rows(i)
                    sub = [[matrix[a - 1][b - 1] for b in block] for a in rows]
                    prod *= det_leibniz(sub)
                direct += prod
            assert poly.evaluate(matrix) == direct


class TestEquivariance:
    @pytest.mark.parametrize("text", SMALL_PARTITIONS)
    def test_simple_transpositions(self, text):
        p = parse_partition(text)
        for r in (1, 2):
            if min(p.block_sizes()) < r:
                continue
            for i in range(1, p.n):
                assert verify_equivariance(simple_transposition(p.n, i), p, r)

    def test_rotation_and_reflection(self):
        p = parse_partition("1 2 5|3 4 6")
        for r in (1, 2):
            assert verify_rotation(p, r)
            assert verify_reflection(p, r)

    def test_action_composes(self):
        p = parse_partition("1 3|2 4")
        w = long_cycle(4)
        poly = jellyfish_invariant(p, 1)
        twice = act_on_polynomial(w, act_on_polynomial(w, poly))
        from flamingo.partitions import perm_compose

        assert twice == act_on_polynomial(perm_compose(w, w), poly)

    @pytest.mark.parametrize("r", [1, 2])
    def test_block_reorder_sign_power(self, r):
        p = parse_partition("1 2 5|3 4 6")
        swap = (2, 1)
        assert verify_block_reorder(swap, p, r)
        # depth parity decides whether the swap flips the invariant
        from flamingo.partitions import permute_blocks

        q = permute_blocks(swap, p)
        lhs = jellyfish_invariant(p, r)
        rhs = jellyfish_invariant(q, r)
        assert lhs == rhs * ((-1) ** r)

    def test_all_depth_one_partitions_reorder_freely(self):
        for p in enumerate_ordered_partitions(5, 2, 2):
            assert verify_block_reorder((2, 1), p, 2)
