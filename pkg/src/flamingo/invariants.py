"""The jellyfish invariant of an ordered set partition and its symmetry laws.

The invariant at depth r is the signed sum of minor products over all
jellyfish tableaux.  Partitions with a block smaller than r get the zero
polynomial rather than an error.  The symmetric group acts on columns;
the laws verified here are

* w . [pi]_r = sgn(w) [w . pi]_r for any permutation w of [n],
* [pi]_r = sgn(sigma)^r [sigma(pi)]_r for any reordering sigma of blocks,

together with the rotation and reflection specializations of the first.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .partitions import (
    FlamingoContext,
    OrderedSetPartition,
    act_elements,
    long_cycle,
    longest_permutation,
    perm_sign,
    permute_blocks,
)
from .polynomials import MatrixPolynomial
from .tableaux import iter_tableaux


@lru_cache(maxsize=16384)
def _invariant_cached(partition: OrderedSetPartition, r: int) -> MatrixPolynomial:
    ctx = FlamingoContext.from_partition(partition, r)
    if not ctx.admissible:
        return MatrixPolynomial.zero(partition.n, k=0)
    result = MatrixPolynomial.zero(partition.n, k=ctx.nu)
    for tableau in iter_tableaux(partition, r):
        term = tableau.minor_product()
        result = result + (term if tableau.sign() > 0 else -term)
    return result


def jellyfish_invariant(partition: OrderedSetPartition, r: int) -> MatrixPolynomial:
    """[pi]_r as an exact polynomial; zero when some block has size < r."""
    if r < 1:
        raise ValueError("r must be at least 1")
    return _invariant_cached(partition, r)


def act_on_polynomial(w: Sequence[int], p: MatrixPolynomial) -> MatrixPolynomial:
    """Column action of a permutation: substitutes x[a,j] -> x[a,w(j)]."""
    return p.substitute_columns(tuple(w))


def verify_equivariance(w: Sequence[int], partition: OrderedSetPartition, r: int) -> bool:
    """Check w . [pi]_r == sgn(w) [w . pi]_r exactly."""
    lhs = act_on_polynomial(w, jellyfish_invariant(partition, r))
    rhs = jellyfish_invariant(act_elements(w, partition), r) * perm_sign(w)
    return lhs == rhs


def verify_rotation(partition: OrderedSetPartition, r: int) -> bool:
    """The long cycle rotates the partition and scales by (-1)^(n-1)."""
    n = partition.n
    return verify_equivariance(long_cycle(n), partition, r)


def verify_reflection(partition: OrderedSetPartition, r: int) -> bool:
    """The longest element reflects the partition and scales by (-1)^C(n,2)."""
    n = partition.n
    return verify_equivariance(longest_permutation(n), partition, r)


def verify_block_reorder(sigma: Sequence[int], partition: OrderedSetPartition, r: int) -> bool:
    """Check [pi]_r == sgn(sigma)^r [sigma(pi)]_r exactly."""
    lhs = jellyfish_invariant(partition, r)
    sign = perm_sign(sigma) ** r
    rhs = jellyfish_invariant(permute_blocks(sigma, partition), r) * sign
    return lhs == rhs


def invariant_cache_clear() -> None:
    _invariant_cached.cache_clear()
