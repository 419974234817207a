"""Linear relations among the invariants and the independence conjecture.

The central identity: split the ground set into a prefix of untouched
blocks plus three sets A, B, C with |C| = r; then the invariant of
(prefix | A union B | C) expands as the alternating sum over S subseteq C
of the invariants of (prefix | A union S | B union (C minus S)).  At r = 1
this rearranges to the three-term relation, which in turn resolves
crossings of depth-1 invariants two different ways.

The conjecture harness collects partitions that some short sequence of
adjacent transpositions makes noncrossing and reports the exact rank of
their invariants.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .invariants import jellyfish_invariant
from .partitions import (
    OrderedSetPartition,
    enumerate_unordered_partitions,
    is_noncrossing,
    transposition_distance_to_noncrossing,
)
from .polynomials import MatrixPolynomial
from .specht import exact_rank


def _ground_set(prefix: Sequence[Iterable[int]], *sets: Iterable[int]) -> int:
    seen: set[int] = set()
    for block in list(prefix) + list(sets):
        for x in block:
            if x in seen:
                raise ValueError(f"element {x} appears twice")
            seen.add(x)
    n = len(seen)
    if seen != set(range(1, n + 1)):
        raise ValueError("blocks must cover an initial segment [n]")
    return n


def recurrence_left(
    prefix: Sequence[Iterable[int]], A: Iterable[int], B: Iterable[int], C: Iterable[int]
) -> OrderedSetPartition:
    """(prefix | A union B | C)."""
    A, B, C = set(A), set(B), set(C)
    n = _ground_set(prefix, A, B, C)
    blocks = [tuple(sorted(b)) for b in prefix] + [tuple(sorted(A | B)), tuple(sorted(C))]
    return OrderedSetPartition(n, tuple(blocks))


def recurrence_terms(
    prefix: Sequence[Iterable[int]],
    A: Iterable[int],
    B: Iterable[int],
    C: Iterable[int],
    r: int,
) -> list[tuple[int, OrderedSetPartition]]:
    """The 2^r signed right-hand partitions ((-1)^|S|, (prefix | A+S | B+(C-S)))
    over subsets S of C; requires nonempty A, B, C with |C| = r.

    Undersized blocks are retained: their invariants vanish, which is how
    the identity absorbs degenerate terms.
    """
    A, B, C = set(A), set(B), set(C)
    if not A or not B or not C:
        raise ValueError("A, B, C must be nonempty")
    if len(C) != r:
        raise ValueError(f"need |C| = r, got |C| = {len(C)}, r = {r}")
    n = _ground_set(prefix, A, B, C)
    head = [tuple(sorted(b)) for b in prefix]
    out = []
    C_sorted = sorted(C)
    for size in range(r + 1):
        for S in itertools.combinations(C_sorted, size):
            Sset = set(S)
            blocks = head + [tuple(sorted(A | Sset)), tuple(sorted(B | (C - Sset)))]
            sign = -1 if size % 2 else 1
            out.append((sign, OrderedSetPartition(n, tuple(blocks))))
    return out


def verify_recurrence(
    prefix: Sequence[Iterable[int]],
    A: Iterable[int],
    B: Iterable[int],
    C: Iterable[int],
    r: int,
) -> bool:
    """Exact polynomial check of the 2^r + 1 term identity."""
    left = jellyfish_invariant(recurrence_left(prefix, A, B, C), r)
    n = left.n
    total = MatrixPolynomial.zero(n)
    for sign, partition in recurrence_terms(prefix, A, B, C, r):
        total = total + jellyfish_invariant(partition, r) * sign
    return left == total


def verify_three_term(A: Iterable[int], B: Iterable[int], C: Iterable[int]) -> bool:
    """[A+B | C] + [A+C | B] + [B+C | A] = 0 at depth 1, |C| = 1."""
    A, B, C = set(A), set(B), set(C)
    if len(C) != 1 or not A or not B:
        raise ValueError("need nonempty A, B and a singleton C")
    n = _ground_set([], A, B, C)

    def two_block(x: set, y: set) -> OrderedSetPartition:
        return OrderedSetPartition(n, (tuple(sorted(x)), tuple(sorted(y))))

    total = (
        jellyfish_invariant(two_block(A | B, C), 1)
        + jellyfish_invariant(two_block(A | C, B), 1)
        + jellyfish_invariant(two_block(B | C, A), 1)
    )
    return total.is_zero


# -- crossing resolution at depth 1 -----------------------------------------


def smallest_crossing_quadruple(
    partition: OrderedSetPartition,
) -> tuple[int, int, int, int] | None:
    """Lexicographically least a < b < c < d with a, c together and b, d
    together in two distinct blocks."""
    block_of = {x: i for i, block in enumerate(partition.blocks) for x in block}
    n = partition.n
    for quad in itertools.combinations(range(1, n + 1), 4):
        a, b, c, d = quad
        if block_of[a] == block_of[c] and block_of[b] == block_of[d] and block_of[a] != block_of[b]:
            return quad
    return None


def resolve_crossing_r1(
    partition: OrderedSetPartition, verify: bool = True
) -> tuple[list[tuple[int, OrderedSetPartition]], list[tuple[int, OrderedSetPartition]]]:
    """Two rewritings of the depth-1 invariant across its least crossing.

    With a < b < c < d the least crossing quadruple, P the block holding a
    and c (position i), Q the block holding b and d (position j):

    * moving b:            [pi] =  [pi{i: P+Q-b, j: {b}}] + [pi{i: P+b, j: Q-b}]
    * moving c the other way: [pi] = -[pi{i: Q+P-c, j: {c}}] - [pi{i: Q+c, j: P-c}]

    Both identities are re-verified as exact polynomials before returning
    unless ``verify`` is false.
    """
    quad = smallest_crossing_quadruple(partition)
    if quad is None:
        raise ValueError("partition has no crossing")
    a, b, c, d = quad
    i = partition.block_of(a)
    j = partition.block_of(b)
    P = set(partition.blocks[i - 1])
    Q = set(partition.blocks[j - 1])

    first = [
        (1, partition.replace_blocks({i: (P | Q) - {b}, j: {b}})),
        (1, partition.replace_blocks({i: P | {b}, j: Q - {b}})),
    ]
    second = [
        (-1, partition.replace_blocks({i: (Q | P) - {c}, j: {c}})),
        (-1, partition.replace_blocks({i: Q | {c}, j: P - {c}})),
    ]
    if verify:
        target = jellyfish_invariant(partition, 1)
        for resolution in (first, second):
            total = MatrixPolynomial.zero(partition.n)
            for sign, q in resolution:
                total = total + jellyfish_invariant(q, 1) * sign
            if total != target:
                raise AssertionError("crossing resolution failed to reproduce the invariant")
    return first, second


def expand_to_noncrossing(
    partition: OrderedSetPartition, max_steps: int = 100_000
) -> dict[OrderedSetPartition, int]:
    """Integer combination of noncrossing partitions with the same depth-1
    invariant, obtained by repeatedly applying the first resolution."""
    support: dict[OrderedSetPartition, int] = {partition: 1}
    for _ in range(max_steps):
        crossing = next((p for p in support if not is_noncrossing(p)), None)
        if crossing is None:
            return support
        coeff = support.pop(crossing)
        first, _ = resolve_crossing_r1(crossing, verify=False)
        for sign, q in first:
            new = support.get(q, 0) + sign * coeff
            if new:
                support[q] = new
            else:
                support.pop(q, None)
    raise RuntimeError("crossing expansion did not settle within the step budget")


# -- conjecture harness ------------------------------------------------------


def conjecture_family(n: int, d: int, r: int) -> list[OrderedSetPartition]:
    """Partitions with d blocks of size >= r that at most r - 3 adjacent
    transpositions make noncrossing, in canonical order."""
    if r < 3:
        raise ValueError("the family is defined for r >= 3")
    return [
        p
        for p in enumerate_unordered_partitions(n, d, r)
        if transposition_distance_to_noncrossing(p, r - 3)
    ]


def conjecture_report(n: int, d: int, r: int) -> tuple[int, int]:
    """(family size, exact rank of the family's invariants)."""
    family = conjecture_family(n, d, r)
    profile = exact_rank([jellyfish_invariant(p, r) for p in family])
    return len(family), profile.rank


def verify_conjecture(n: int, d: int, r: int) -> bool:
    size, rank = conjecture_report(n, d, r)
    return size == rank
