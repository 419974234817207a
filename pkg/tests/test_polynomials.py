import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from flamingo.polynomials import (
    ColumnCollision,
    MatrixPolynomial,
    integer_determinant,
    minor,
    monomial_key,
    monomial_multiply,
    term_compare,
    variable_position,
)

from oracles import det_leibniz, evaluate_poly, random_int_matrix


class TestTermOrder:
    def test_row_one_beats_row_two(self):
        # x[1,n] still precedes every row-2 entry
        n = 4
        assert variable_position(1, 4, n) < variable_position(2, 1, n)
        assert variable_position(1, 4, n) < variable_position(2, 4, n)

    def test_row_two_runs_backwards(self):
        n = 4
        assert variable_position(2, 4, n) < variable_position(2, 3, n)
        assert variable_position(2, 1, n) > variable_position(2, 4, n)

    def test_row_three_runs_forwards(self):
        n = 4
        assert variable_position(3, 1, n) < variable_position(3, 2, n)

    def test_positions_are_distinct(self):
        n = 5
        seen = {variable_position(a, j, n) for a in range(1, 4) for j in range(1, n + 1)}
        assert len(seen) == 15

    def test_term_compare_prefix(self):
        # (1,1,0) uses a strict subset of (1,1,2)'s variables, so it is smaller
        assert term_compare((1, 1, 0), (1, 1, 2)) == -1
        assert term_compare((1, 1, 2), (1, 1, 0)) == 1
        assert term_compare((1, 1, 2), (1, 1, 2)) == 0

    def test_monomial_key_sorts_like_compare(self):
        monomials = [(1, 2, 0), (2, 1, 0), (0, 1, 2), (1, 1, 2), (1, 1, 0)]
        by_key = sorted(monomials, key=monomial_key)
        for small, large in zip(by_key, by_key[1:]):
            assert term_compare(small, large) == -1


class TestArithmetic:
    def test_monomial_multiply_disjoint(self):
        assert monomial_multiply((1, 0, 0), (0, 2, 0)) == (1, 2, 0)

    def test_monomial_multiply_collision(self):
        with pytest.raises(ColumnCollision):
            monomial_multiply((1, 0), (2, 0))

    def test_product_collision_propagates(self):
        p = MatrixPolynomial.variable(1, 1, 2)
        q = MatrixPolynomial.variable(2, 1, 2)
        with pytest.raises(ColumnCollision):
            p * q

    def test_addition_cancels(self):
        p = MatrixPolynomial.variable(1, 1, 3)
        assert (p - p).is_zero
        assert not (p + p).is_zero

    def test_scalar_multiplication(self):
        p = MatrixPolynomial.variable(2, 3, 3)
        assert (3 * p).terms == {(0, 0, 2): 3}
        assert (p * 0).is_zero

    def test_k_tracks_observed_rows(self):
        p = MatrixPolynomial(3, {(0, 4, 1): 1}, k=2)
        assert p.k == 4

    def test_equality_ignores_k(self):
        a = MatrixPolynomial(3, {(1, 0, 0): 2}, k=1)
        b = MatrixPolynomial(3, {(1, 0, 0): 2}, k=3)
        assert a == b

    @given(st.integers(min_value=2, max_value=4), st.randoms(use_true_random=False))
    def test_ring_laws_on_random_sums(self, n, rng):
        def rand_poly():
            terms = {}
            for _ in range(3):
                m = tuple(rng.randint(0, n) for _ in range(n))
                terms[m] = rng.randint(-3, 3)
            return MatrixPolynomial(n, terms)

        p, q, s = rand_poly(), rand_poly(), rand_poly()
        assert p + q == q + p
        assert (p + q) + s == p + (q + s)
        assert p - p == MatrixPolynomial.zero(n)


class TestMinor:
    @pytest.mark.parametrize("size", [1, 2, 3, 4])
    def test_evaluation_matches_leibniz(self, size):
        rng = random.Random(711 + size)
        n = size + 1
        rows = tuple(range(1, size + 1))
        cols = tuple(range(2, size + 2))
        p = minor(rows, cols, n)
        for _ in range(5):
            matrix = random_int_matrix(rng, size, n)
            sub = [[matrix[i][j - 1] for j in cols] for i in range(size)]
            assert p.evaluate(matrix) == det_leibniz(sub)

    def test_empty_minor_is_one(self):
        assert minor((), (), 3) == MatrixPolynomial.one(3)

    def test_term_count_is_factorial(self):
        assert len(minor((1, 2, 3), (1, 2, 4), 4).terms) == 6

    def test_rejects_mismatched_sizes(self):
        with pytest.raises(ValueError):
            minor((1, 2), (1,), 3)

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            minor((1,), (5,), 4)

    def test_evaluate_requires_enough_rows(self):
        p = minor((1, 2), (1, 2), 2)
        with pytest.raises(ValueError):
            p.evaluate([[1, 0]])

    @given(st.integers(min_value=1, max_value=4), st.randoms(use_true_random=False))
    def test_evaluate_agrees_with_direct_expansion(self, size, rng):
        n = size
        p = minor(tuple(range(1, size + 1)), tuple(range(1, size + 1)), n)
        matrix = random_int_matrix(rng, size, n)
        assert p.evaluate(matrix) == evaluate_poly(p, matrix)


class TestIntegerDeterminant:
    @given(st.integers(min_value=0, max_value=5), st.randoms(use_true_random=False))
    def test_matches_leibniz(self, size, rng):
        matrix = random_int_matrix(rng, size, size)
        assert integer_determinant(matrix) == det_leibniz(matrix)

    def test_singular(self):
        assert integer_determinant([[1, 2], [2, 4]]) == 0


class TestSerialization:
    def test_schema_fields(self):
        p = minor((1, 2), (1, 3), 3)
        doc = json.loads(p.to_json())
        assert set(doc) == {"n", "k", "terms"}
        assert doc["n"] == 3 and doc["k"] == 2
        assert all(set(t) == {"rows", "coeff"} for t in doc["terms"])
        assert all(isinstance(t["coeff"], str) for t in doc["terms"])

    def test_terms_sorted_descending(self):
        p = minor((1, 2), (1, 3), 3)
        doc = json.loads(p.to_json())
        keys = [monomial_key(tuple(t["rows"])) for t in doc["terms"]]
        assert keys == sorted(keys, reverse=True)

    def test_round_trip(self):
        p = minor((1, 2, 3), (1, 2, 4), 5) * 7 - minor((1, 2, 3), (2, 3, 5), 5)
        assert MatrixPolynomial.from_json(p.to_json()) == p

    def test_round_trip_preserves_k(self):
        p = MatrixPolynomial(2, {(3, 0): 1}, k=5)
        q = MatrixPolynomial.from_json(p.to_json())
        assert q.k == 5

    def test_big_coefficients_survive(self):
        big = 10**40
        p = MatrixPolynomial(2, {(1, 0): big})
        assert MatrixPolynomial.from_json(p.to_json()).terms[(1, 0)] == big


class TestLeadingTerm:
    def test_zero_has_no_leading_term(self):
        with pytest.raises(ValueError):
            MatrixPolynomial.zero(2).leading_term()

    def test_leading_term_is_maximal(self):
        p = minor((1, 2), (1, 2), 2)
        lead, _ = p.leading_term()
        for m in p.terms:
            assert term_compare(m, lead) <= 0
