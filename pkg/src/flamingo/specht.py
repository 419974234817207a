"""Specht modules for flamingo shapes: spanning sets, exact rank, membership.

The shapes handled here are lambda = (d^r, 1^(n-rd)), whose conjugate is
mu = (nu, r^(d-1)) with nu = n - (d-1)r.  The module is realized inside the
polynomial ring in matrix entries as the span of products of top-justified
minors, one minor per column set, with column-set sizes given by mu.

All linear algebra is exact: integer coefficient rows, fraction-free
cross-multiplication pivoting with gcd cleanup, monomial columns ordered
by the custom term order so pivot monomials are leading monomials.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .partitions import OrderedSetPartition
from .polynomials import MatrixPolynomial, Monomial, minor, monomial_key


# -- shapes -----------------------------------------------------------------


def conjugate_partition(lam: Sequence[int]) -> tuple[int, ...]:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part >= j) for j in range(1, lam[0] + 1))


def syt_count(lam: Sequence[int]) -> int:
    """Number of standard Young tableaux of the given shape, by the
    hook-length formula n! / prod(hooks)."""
    lam = tuple(lam)
    if list(lam) != sorted(lam, reverse=True) or any(p < 1 for p in lam):
        raise ValueError("shape must be a weakly decreasing positive sequence")
    n = sum(lam)
    conj = conjugate_partition(lam)
    hooks = 1
    for i, row_len in enumerate(lam, start=1):
        for j in range(1, row_len + 1):
            hooks *= row_len - j + conj[j - 1] - i + 1
    return math.factorial(n) // hooks


@dataclass(frozen=True)
class SpechtShape:
    """The shape (d^r, 1^(n-rd)) together with its conjugate."""

    n: int
    d: int
    r: int

    def __post_init__(self) -> None:
        if self.r < 1 or self.d < 1 or self.n < self.r * self.d:
            raise ValueError("need r, d >= 1 and n >= r*d")

    @property
    def lam(self) -> tuple[int, ...]:
        return (self.d,) * self.r + (1,) * (self.n - self.r * self.d)

    @property
    def mu(self) -> tuple[int, ...]:
        return (self.nu,) + (self.r,) * (self.d - 1)

    @property
    def nu(self) -> int:
        return self.n - (self.d - 1) * self.r

    def dimension(self) -> int:
        return syt_count(self.lam)


def _column_set_tuples(n: int, sizes: Sequence[int]) -> list[tuple[tuple[int, ...], ...]]:
    """Partitions of [n] into sets of the given sizes; tuples of equal-size
    sets are canonicalized by requiring increasing minima within a size run."""
    out: list[tuple[tuple[int, ...], ...]] = []

    def rec(chosen: list[tuple[int, ...]], remaining: tuple[int, ...]) -> None:
        if len(chosen) == len(sizes):
            out.append(tuple(chosen))
            return
        i = len(chosen)
        size = sizes[i]
        pool = remaining
        if i > 0 and sizes[i - 1] == size:
            # same size class: fix the smallest remaining element into this
            # set so equal-size sets appear once, in order of their minima
            first = pool[0]
            for rest in itertools.combinations(pool[1:], size - 1):
                block = (first,) + rest
                chosen.append(block)
                rec(chosen, tuple(x for x in pool if x not in block))
                chosen.pop()
        else:
            for block in itertools.combinations(pool, size):
                chosen.append(block)
                rec(chosen, tuple(x for x in pool if x not in block))
                chosen.pop()

    rec([], tuple(range(1, n + 1)))
    return out


def spanning_set(shape: SpechtShape) -> list[MatrixPolynomial]:
    """Products of top-justified minors over all column-set tuples of sizes
    mu, equal-size classes deduplicated."""
    sizes = shape.mu
    gens = []
    for sets in _column_set_tuples(shape.n, sizes):
        poly = MatrixPolynomial.one(shape.n)
        for size, cols in zip(sizes, sets):
            poly = poly * minor(range(1, size + 1), cols, shape.n)
        gens.append(poly)
    return gens


# -- exact linear algebra over the monomial basis ---------------------------


def _gcd_normalize(terms: dict[Monomial, int]) -> dict[Monomial, int]:
    g = 0
    for c in terms.values():
        g = math.gcd(g, c)
        if g == 1:
            return terms
    if g > 1:
        return {m: c // g for m, c in terms.items()}
    return terms


class SpanChecker:
    """Incremental integer row echelon keyed by leading monomial.

    Rows are reduced with exact cross-multiplication (no divisions beyond
    a gcd cleanup), so membership and rank are exact over the rationals.
    """

    def __init__(self, polys: Iterable[MatrixPolynomial] = ()):  # noqa: D401
        self.n: int | None = None
        self.pivots: dict[Monomial, dict[Monomial, int]] = {}
        for p in polys:
            self.insert(p)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _reduce(self, terms: dict[Monomial, int]) -> dict[Monomial, int]:
        while terms:
            lead = max(terms, key=monomial_key)
            row = self.pivots.get(lead)
            if row is None:
                return terms
            a = row[lead]
            b = terms[lead]
            new = {}
            for m, c in terms.items():
                value = a * c - b * row.get(m, 0)
                if value:
                    new[m] = value
            for m, c in row.items():
                if m not in terms:
                    value = -b * c
                    if value:
                        new[m] = value
            terms = _gcd_normalize(new)
        return terms

    def insert(self, p: MatrixPolynomial) -> bool:
        """Add a polynomial to the span; True when it increased the rank."""
        if self.n is None:
            self.n = p.n
        elif self.n != p.n:
            raise ValueError("mixed column counts")
        residue = self._reduce(_gcd_normalize(dict(p.terms)))
        if not residue:
            return False
        self.pivots[max(residue, key=monomial_key)] = residue
        return True

    def contains(self, p: MatrixPolynomial) -> bool:
        if self.n is not None and p.n != self.n:
            raise ValueError("mixed column counts")
        return not self._reduce(_gcd_normalize(dict(p.terms)))


@dataclass(frozen=True)
class RankProfile:
    rows: int
    cols: int
    rank: int
    pivot_monomials: tuple[Monomial, ...]


def exact_rank(polys: Sequence[MatrixPolynomial]) -> RankProfile:
    """Rank over the rationals of the coefficient matrix whose rows are the
    polynomials and whose columns are their monomials in term order."""
    universe: set[Monomial] = set()
    checker = SpanChecker()
    for p in polys:
        universe.update(p.terms)
        checker.insert(p)
    pivots = tuple(sorted(checker.pivots, key=monomial_key, reverse=True))
    return RankProfile(len(polys), len(universe), checker.rank, pivots)


@lru_cache(maxsize=64)
def _span_checker(shape: SpechtShape) -> SpanChecker:
    return SpanChecker(spanning_set(shape))


def membership_test(p: MatrixPolynomial, shape: SpechtShape) -> bool:
    """True when adding p to the spanning set leaves its rank unchanged."""
    return _span_checker(shape).contains(p)


def spanning_rank(shape: SpechtShape) -> int:
    return _span_checker(shape).rank


# -- hook shapes ------------------------------------------------------------


def hook_family(n: int, d: int) -> list[OrderedSetPartition]:
    """For each (d-1)-subset P of {2..n}, the interval partition whose block
    minima are {1} union P; all are noncrossing."""
    if not 1 <= d <= n:
        raise ValueError("need 1 <= d <= n")
    out = []
    for P in itertools.combinations(range(2, n + 1), d - 1):
        cuts = (1,) + P + (n + 1,)
        blocks = [tuple(range(cuts[i], cuts[i + 1])) for i in range(d)]
        out.append(OrderedSetPartition(n, tuple(blocks)))
    return out


def verify_hook_basis(n: int, d: int) -> bool:
    """Check that the interval-partition invariants at depth 1 form a basis:
    full rank C(n-1, d-1) equal to the module dimension, every member inside
    the module."""
    from .invariants import jellyfish_invariant

    shape = SpechtShape(n, d, 1)
    family = hook_family(n, d)
    expected = math.comb(n - 1, d - 1)
    if len(family) != expected or shape.dimension() != expected:
        return False
    invariants = [jellyfish_invariant(p, 1) for p in family]
    if exact_rank(invariants).rank != expected:
        return False
    return all(membership_test(q, shape) for q in invariants)
