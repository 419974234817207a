"""Jellyfish tableaux: enumeration, reading words, signs, and minor products.

A tableau for an ordered set partition pi = (pi_1 | ... | pi_d) at depth r
has d columns and nu rows.  Rows 1..r are fully filled, every deeper row
holds exactly one entry, and column j contains exactly the elements of
pi_j, increasing downward.  Such a tableau is determined by which column
each row in [r + 1, nu] feeds, so that assignment is the whole stored
state; entries are always derived by sorting the blocks into their rows.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .partitions import (
    BlockTooSmall,
    FlamingoContext,
    OrderedSetPartition,
    perm_inverse,
    word_inversions,
)
from .polynomials import MatrixPolynomial, minor


@dataclass(frozen=True)
class JellyfishTableau:
    partition: OrderedSetPartition
    r: int
    assignment: tuple[int, ...]
    """assignment[t] is the 1-based column fed by row r + 1 + t."""

    def __post_init__(self) -> None:
        ctx = self.context
        if not ctx.admissible:
            raise BlockTooSmall(f"every block must have at least {self.r} elements")
        if len(self.assignment) != ctx.nu - self.r:
            raise ValueError("assignment must cover rows r+1 .. nu")
        for i in range(1, ctx.d + 1):
            if self.assignment.count(i) != ctx.tentacle_counts[i - 1]:
                raise ValueError(f"column {i} must receive exactly |pi_{i}| - r deep rows")

    @cached_property
    def context(self) -> FlamingoContext:
        return FlamingoContext.from_partition(self.partition, self.r)

    def column_rows(self, i: int) -> tuple[int, ...]:
        """Sorted row indices occupied by column i (1-based)."""
        deep = tuple(
            self.r + 1 + t for t, col in enumerate(self.assignment) if col == i
        )
        return tuple(range(1, self.r + 1)) + deep

    def grid(self) -> list[list[int | None]]:
        """nu rows by d columns; None marks an empty cell."""
        ctx = self.context
        cells: list[list[int | None]] = [[None] * ctx.d for _ in range(ctx.nu)]
        for i, block in enumerate(self.partition.blocks, start=1):
            for row, element in zip(self.column_rows(i), block):
                cells[row - 1][i - 1] = element
        return cells

    def reading_word(self) -> list[int]:
        """Nonempty entries row by row, left to right."""
        return [x for row in self.grid() for x in row if x is not None]

    def inversion_number(self) -> int:
        return word_inversions(self.reading_word())

    def sign(self) -> int:
        return -1 if self.inversion_number() % 2 else 1

    def minor_product(self) -> MatrixPolynomial:
        """The product over columns i of the minor on rows column_rows(i)
        and columns pi_i, fully expanded."""
        n = self.partition.n
        result = MatrixPolynomial.one(n, k=self.context.nu)
        for i, block in enumerate(self.partition.blocks, start=1):
            result = result * minor(self.column_rows(i), block, n)
        return result

    def permute_columns(self, sigma: Sequence[int]) -> "JellyfishTableau":
        """The tableau for the block-reordered partition in which each
        column keeps its rows; column i moves to position sigma(i)."""
        from .partitions import permute_blocks

        new_partition = permute_blocks(sigma, self.partition)
        new_assignment = tuple(sigma[c - 1] for c in self.assignment)
        return JellyfishTableau(new_partition, self.r, new_assignment)

    def render_text(self) -> str:
        """Rows top to bottom, columns separated by tabs, '.' for empty cells."""
        lines = []
        for row in self.grid():
            lines.append("\t".join("." if x is None else str(x) for x in row))
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.render_text()


def tableau_count(partition: OrderedSetPartition, r: int) -> int:
    """|J_r(pi)| = (nu - r)! / prod((|pi_i| - r)!)."""
    ctx = FlamingoContext.from_partition(partition, r)
    if not ctx.admissible:
        raise BlockTooSmall(f"every block must have at least {r} elements")
    total = math.factorial(ctx.nu - r)
    for c in ctx.tentacle_counts:
        total //= math.factorial(c)
    return total


def iter_tableaux(partition: OrderedSetPartition, r: int) -> Iterator[JellyfishTableau]:
    """All tableaux, choosing the deep rows of column 1 first, then column 2
    from what remains, and so on; each choice runs in ascending combination
    order."""
    ctx = FlamingoContext.from_partition(partition, r)
    if not ctx.admissible:
        raise BlockTooSmall(f"every block must have at least {r} elements")
    deep_rows = list(ctx.tentacle_rows)
    assignment: dict[int, int] = {}

    def rec(i: int, remaining: list[int]) -> Iterator[JellyfishTableau]:
        if i > ctx.d:
            yield JellyfishTableau(
                partition,
                r,
                tuple(assignment[row] for row in deep_rows),
            )
            return
        for chosen in itertools.combinations(remaining, ctx.tentacle_counts[i - 1]):
            for row in chosen:
                assignment[row] = i
            rest = [row for row in remaining if row not in chosen]
            yield from rec(i + 1, rest)
            for row in chosen:
                del assignment[row]

    return rec(1, deep_rows)


def enumerate_tableaux(partition: OrderedSetPartition, r: int) -> list[JellyfishTableau]:
    return list(iter_tableaux(partition, r))


def top_justified_tableau(partition: OrderedSetPartition, r: int) -> JellyfishTableau:
    """The tableau filling deep rows greedily: column 1 takes the first
    nu_1 rows below r, column 2 the next nu_2, and so on."""
    ctx = FlamingoContext.from_partition(partition, r)
    if not ctx.admissible:
        raise BlockTooSmall(f"every block must have at least {r} elements")
    assignment = []
    for i, count in enumerate(ctx.tentacle_counts, start=1):
        assignment.extend([i] * count)
    return JellyfishTableau(partition, r, tuple(assignment))


def column_arrangement_sign(
    tableau: JellyfishTableau, orders: Sequence[Sequence[int]] | None = None
) -> int:
    """Sign of a tableau whose columns were internally rearranged, counting
    only inversions between entries of distinct columns.

    ``orders[i - 1]`` lists the elements of block i in the top-to-bottom
    order they occupy column i's rows; None means the sorted arrangement,
    for which this agrees with ``tableau.sign()``.
    """
    if orders is None:
        orders = [list(block) for block in tableau.partition.blocks]
    ctx = tableau.context
    labeled: list[list[tuple[int, int] | None]] = [
        [None] * ctx.d for _ in range(ctx.nu)
    ]
    for i, order in enumerate(orders, start=1):
        block = tableau.partition.blocks[i - 1]
        if sorted(order) != list(block):
            raise ValueError(f"orders[{i - 1}] must rearrange block {i}")
        for row, element in zip(tableau.column_rows(i), order):
            labeled[row - 1][i - 1] = (element, i)
    word = [cell for row in labeled for cell in row if cell is not None]
    inv = 0
    for a in range(len(word)):
        xa, ca = word[a]
        for b in range(a + 1, len(word)):
            xb, cb = word[b]
            if ca != cb and xa > xb:
                inv += 1
    return -1 if inv % 2 else 1
