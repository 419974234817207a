"""Ordered set partitions of [n], crossing tests, and symmetric group actions.

Conventions used throughout the package:

* Ground sets are ``[n] = {1, 2, ..., n}``.
* Permutations are tuples in one-line notation, so ``w[i - 1]`` is the image
  of ``i``.
* An ordered set partition is a sequence of pairwise disjoint nonempty
  blocks whose union is ``[n]``; the block order matters.  The text form
  separates blocks with ``|`` and elements with spaces, for example
  ``"2 3 6 10|5 7 8 9|1 4"``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class BlockTooSmall(ValueError):
    """Raised when an operation requires every block to hold at least r elements."""


# ---------------------------------------------------------------------------
# Permutations in one-line notation.


def perm_identity(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def is_permutation(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def simple_transposition(n: int, i: int) -> tuple[int, ...]:
    """The adjacent transposition swapping i and i + 1.

    >>> simple_transposition(4, 2)
    (1, 3, 2, 4)
    """
    if not 1 <= i < n:
        raise ValueError(f"need 1 <= i < n, got i={i}, n={n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def long_cycle(n: int) -> tuple[int, ...]:
    """The n-cycle sending 1 to n and every other j to j - 1.

    >>> long_cycle(4)
    (4, 1, 2, 3)
    """
    return (n,) + tuple(range(1, n))


def longest_permutation(n: int) -> tuple[int, ...]:
    """The order-reversing permutation j -> n + 1 - j."""
    return tuple(range(n, 0, -1))


def perm_inverse(w: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(w)
    for i, image in enumerate(w, start=1):
        inv[image - 1] = i
    return tuple(inv)


def perm_compose(u: Sequence[int], w: Sequence[int]) -> tuple[int, ...]:
    """Composition u after w, so the result maps j to u(w(j))."""
    if len(u) != len(w):
        raise ValueError("size mismatch")
    return tuple(u[w[j] - 1] for j in range(len(w)))


def word_inversions(word: Sequence[int]) -> int:
    """Number of pairs appearing out of order in ``word``."""
    count = 0
    for a in range(len(word)):
        wa = word[a]
        for b in range(a + 1, len(word)):
            if wa > word[b]:
                count += 1
    return count


def perm_sign(w: Sequence[int]) -> int:
    return -1 if word_inversions(w) % 2 else 1


# ---------------------------------------------------------------------------
# Ordered set partitions.


@dataclass(frozen=True)
class OrderedSetPartition:
    """A sequence of disjoint nonempty blocks covering [n].

    Blocks are stored sorted internally; use :meth:`from_blocks` or
    :func:`parse_partition` rather than the raw constructor when the input
    may be unsorted.
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise ValueError("empty block")
            if list(block) != sorted(block):
                raise ValueError(f"block not sorted: {block}")
            for x in block:
                if not isinstance(x, int) or x < 1 or x > self.n:
                    raise ValueError(f"element {x} outside [1, {self.n}]")
                if x in seen:
                    raise ValueError(f"element {x} repeated")
                seen.add(x)
        if len(seen) != self.n:
            missing = sorted(set(range(1, self.n + 1)) - seen)
            raise ValueError(f"blocks do not cover [n]; missing {missing}")

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int | None = None) -> "OrderedSetPartition":
        tidy = tuple(tuple(sorted(block)) for block in blocks)
        size = sum(len(b) for b in tidy)
        return cls(n if n is not None else size, tidy)

    @property
    def d(self) -> int:
        return len(self.blocks)

    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def block_of(self, element: int) -> int:
        """1-based index of the block containing ``element``."""
        for i, block in enumerate(self.blocks, start=1):
            if element in block:
                return i
        raise ValueError(f"{element} not in [1, {self.n}]")

    def text(self) -> str:
        return "|".join(" ".join(str(x) for x in block) for block in self.blocks)

    def __str__(self) -> str:
        return f"({self.text()})"

    def canonical(self) -> "OrderedSetPartition":
        """Blocks reordered ascending by their minimum element."""
        return OrderedSetPartition(self.n, tuple(sorted(self.blocks, key=min)))

    def replace_blocks(self, replacements: dict[int, Iterable[int]]) -> "OrderedSetPartition":
        """A copy with the 1-based block positions in ``replacements`` swapped out."""
        new = list(self.blocks)
        for pos, content in replacements.items():
            new[pos - 1] = tuple(sorted(content))
        return OrderedSetPartition(self.n, tuple(new))


def parse_partition(text: str) -> OrderedSetPartition:
    """Parse the ``"a b|c d"`` text form; n is the total number of elements.

    >>> parse_partition("2 3|1 4").blocks
    ((2, 3), (1, 4))
    """
    if not text.strip():
        raise ValueError("empty partition text")
    blocks = []
    for chunk in text.split("|"):
        parts = chunk.split()
        if not parts:
            raise ValueError("empty block in partition text")
        try:
            blocks.append(tuple(sorted(int(p) for p in parts)))
        except ValueError as exc:
            raise ValueError(f"bad element in partition text: {chunk!r}") from exc
    return OrderedSetPartition.from_blocks(blocks)


def enumerate_ordered_partitions(n: int, d: int, r: int) -> list[OrderedSetPartition]:
    """All ordered set partitions of [n] into d blocks of size at least r.

    Returned in lexicographic order of the block-assignment word of
    1, 2, ..., n.  Empty when n < r * d.
    """
    if n < 1 or d < 1 or r < 1:
        raise ValueError("n, d, r must all be at least 1")
    if n < r * d:
        return []
    out: list[OrderedSetPartition] = []
    blocks: list[list[int]] = [[] for _ in range(d)]

    def rec(e: int, deficit: int) -> None:
        if e > n:
            out.append(OrderedSetPartition(n, tuple(tuple(b) for b in blocks)))
            return
        remaining = n - e
        for b in range(d):
            need = max(0, r - len(blocks[b]))
            new_deficit = deficit - (1 if need > 0 else 0)
            if new_deficit <= remaining:
                blocks[b].append(e)
                rec(e + 1, new_deficit)
                blocks[b].pop()

    rec(1, r * d)
    return out


def enumerate_unordered_partitions(n: int, d: int, r: int) -> list[OrderedSetPartition]:
    """Set partitions of [n] into d blocks of size at least r, one canonical
    representative each (blocks ascending by minimum)."""
    if n < 1 or d < 1 or r < 1:
        raise ValueError("n, d, r must all be at least 1")
    if n < r * d:
        return []
    out: list[OrderedSetPartition] = []
    blocks: list[list[int]] = []

    def demand() -> int:
        # elements still required to bring every block (existing and unopened)
        # up to size r
        return sum(max(0, r - len(b)) for b in blocks) + (d - len(blocks)) * r

    def rec(e: int) -> None:
        if e > n:
            if len(blocks) == d and demand() == 0:
                out.append(OrderedSetPartition(n, tuple(tuple(b) for b in blocks)))
            return
        remaining = n - e + 1
        # element e either joins an existing block ...
        for b in blocks:
            b.append(e)
            if demand() <= remaining - 1:
                rec(e + 1)
            b.pop()
        # ... or opens a new block with e as its minimum, which keeps the
        # blocks ordered by minima automatically
        if len(blocks) < d:
            blocks.append([e])
            if demand() <= remaining - 1:
                rec(e + 1)
            blocks.pop()

    rec(1)
    return out


def _blocks_cross(x: Sequence[int], y: Sequence[int]) -> bool:
    # Two blocks cross exactly when their merged sequence switches blocks
    # at least three times (the pattern x y x y or y x y x appears).
    i = j = 0
    last = 0
    switches = 0
    while i < len(x) or j < len(y):
        take_x = j >= len(y) or (i < len(x) and x[i] < y[j])
        cur = 1 if take_x else 2
        if take_x:
            i += 1
        else:
            j += 1
        if cur != last:
            if last:
                switches += 1
                if switches >= 3:
                    return True
            last = cur
    return False


def is_noncrossing(partition: OrderedSetPartition) -> bool:
    """True when no quadruple a < b < c < d has a, c in one block and b, d
    in a different block."""
    blocks = partition.blocks
    for s in range(len(blocks)):
        for t in range(s + 1, len(blocks)):
            if _blocks_cross(blocks[s], blocks[t]):
                return False
    return True


def crossing_block_pairs(partition: OrderedSetPartition) -> list[tuple[int, int]]:
    """1-based index pairs of blocks that cross."""
    pairs = []
    blocks = partition.blocks
    for s in range(len(blocks)):
        for t in range(s + 1, len(blocks)):
            if _blocks_cross(blocks[s], blocks[t]):
                pairs.append((s + 1, t + 1))
    return pairs


def enumerate_noncrossing(n: int, d: int, r: int) -> list[OrderedSetPartition]:
    """Canonical representatives of the noncrossing partitions in
    ``enumerate_unordered_partitions(n, d, r)``."""
    return [p for p in enumerate_unordered_partitions(n, d, r) if is_noncrossing(p)]


# ---------------------------------------------------------------------------
# Group actions.


def act_elements(w: Sequence[int], partition: OrderedSetPartition) -> OrderedSetPartition:
    """Apply a permutation of [n] to every element, keeping block order."""
    if len(w) != partition.n or not is_permutation(w):
        raise ValueError("w must be a permutation of [n]")
    return OrderedSetPartition(
        partition.n,
        tuple(tuple(sorted(w[x - 1] for x in block)) for block in partition.blocks),
    )


def rotate(partition: OrderedSetPartition) -> OrderedSetPartition:
    """Apply j -> c_n(j) where c_n sends 1 to n and j to j - 1 otherwise.

    >>> rotate(parse_partition("1 2|3 4")).text()
    '1 4|2 3'
    """
    return act_elements(long_cycle(partition.n), partition)


def reflect(partition: OrderedSetPartition) -> OrderedSetPartition:
    """Apply the order-reversing map j -> n + 1 - j."""
    return act_elements(longest_permutation(partition.n), partition)


def permute_blocks(sigma: Sequence[int], partition: OrderedSetPartition) -> OrderedSetPartition:
    """Reorder blocks so position i holds the old block sigma^{-1}(i)."""
    if len(sigma) != partition.d or not is_permutation(sigma):
        raise ValueError("sigma must be a permutation of the block positions")
    inv = perm_inverse(sigma)
    return OrderedSetPartition(partition.n, tuple(partition.blocks[inv[i] - 1] for i in range(partition.d)))


def transposition_distance_to_noncrossing(partition: OrderedSetPartition, k: int) -> bool:
    """True when some product of at most k adjacent transpositions, applied
    to the elements, turns the partition into a noncrossing one.

    Breadth-first search over canonical forms; block order is irrelevant
    to the crossing test.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = partition.n
    start = partition.canonical()
    if is_noncrossing(start):
        return True
    seen = {start}
    frontier = [start]
    gens = [simple_transposition(n, i) for i in range(1, n)]
    for _ in range(k):
        nxt = []
        for p in frontier:
            for w in gens:
                q = act_elements(w, p).canonical()
                if q in seen:
                    continue
                if is_noncrossing(q):
                    return True
                seen.add(q)
                nxt.append(q)
        frontier = nxt
        if not frontier:
            break
    return False


# ---------------------------------------------------------------------------
# The size bookkeeping shared by tableaux, invariants, and diagrams.


@dataclass(frozen=True)
class FlamingoContext:
    """Derived sizes for a partition considered at tentacle depth r.

    For blocks of sizes ``s_1, ..., s_d`` the tentacle counts are
    ``nu_i = s_i - r`` and the total height is ``nu = n - (d - 1) * r``,
    which equals ``r + sum(nu_i)``.  Rows r + 1 .. nu are the tentacle
    rows; nu + 1 .. n is the trailing range used by the Grassmann and
    diagram constructions.
    """

    n: int
    d: int
    r: int
    tentacle_counts: tuple[int, ...]

    @classmethod
    def from_partition(cls, partition: OrderedSetPartition, r: int) -> "FlamingoContext":
        if r < 1:
            raise ValueError("r must be at least 1")
        counts = tuple(len(b) - r for b in partition.blocks)
        return cls(partition.n, partition.d, r, counts)

    @property
    def nu(self) -> int:
        return self.n - (self.d - 1) * self.r

    @property
    def admissible(self) -> bool:
        return all(c >= 0 for c in self.tentacle_counts)

    @property
    def tentacle_rows(self) -> tuple[int, ...]:
        return tuple(range(self.r + 1, self.nu + 1))

    @property
    def tail_rows(self) -> tuple[int, ...]:
        return tuple(range(self.nu + 1, self.n + 1))
