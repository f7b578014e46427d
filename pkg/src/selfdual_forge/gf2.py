"""GF(2) linear algebra on int bitsets.

Rows are python ints; bit index 0 is the first coordinate (1-based
coordinate c of a text format maps to bit c-1).  All routines are pure.
"""

from __future__ import annotations

from typing import Iterable, Sequence


def wt(x: int) -> int:
    return x.bit_count()


def rref(rows: Sequence[int], n: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form over GF(2).

    Returns (reduced nonzero rows, pivot column list).  Pivot search runs
    left to right; rows are fully reduced above and below.
    """
    work = [r for r in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(n):
        piv = None
        for r in range(rank, len(work)):
            if (work[r] >> col) & 1:
                piv = r
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        for r in range(len(work)):
            if r != rank and (work[r] >> col) & 1:
                work[r] ^= work[rank]
        pivots.append(col)
        rank += 1
        if rank == len(work):
            break
    return work[:rank], pivots


def rank(rows: Sequence[int], n: int) -> int:
    return len(rref(rows, n)[0])


def kernel_basis(rows: Sequence[int], n: int) -> list[int]:
    """Basis of {v : v . r = 0 for every row r}, i.e. the dual row space."""
    red, pivots = rref(rows, n)
    pivot_set = set(pivots)
    free_cols = [c for c in range(n) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        v = 1 << fc
        for row, pc in zip(red, pivots):
            if (row >> fc) & 1:
                v |= 1 << pc
        basis.append(v)
    return basis


def in_row_space(vec: int, rows: Sequence[int], n: int) -> bool:
    red, pivots = rref(rows, n)
    for row, pc in zip(red, pivots):
        if (vec >> pc) & 1:
            vec ^= row
    return vec == 0


def solve_combination(vec: int, rows: Sequence[int], n: int) -> int | None:
    """Row-combination mask m with XOR of selected rows == vec, or None."""
    aug_width = n + len(rows)
    aug = [row | (1 << (n + i)) for i, row in enumerate(rows)]
    red, pivots = rref(aug, aug_width)
    mask_part = 0
    residual = vec
    for row, pc in zip(red, pivots):
        if pc >= n:
            continue
        if (residual >> pc) & 1:
            residual ^= row & ((1 << n) - 1)
            mask_part ^= row >> n
    return mask_part if residual == 0 else None


def row_space_equal(a: Sequence[int], b: Sequence[int], n: int) -> bool:
    ra, pa = rref(a, n)
    rb, pb = rref(b, n)
    return ra == rb and pa == pb


def span(rows: Sequence[int]) -> Iterable[int]:
    """All codewords of the row span in Gray-code order (starts at 0)."""
    word = 0
    yield 0
    k = len(rows)
    for m in range(1, 1 << k):
        word ^= rows[(m & -m).bit_length() - 1]
        yield word


def independent_subset(rows: Sequence[int], n: int) -> list[int]:
    """Greedy maximal linearly independent subset, preserving order."""
    kept: list[int] = []
    pivot_of: dict[int, int] = {}
    for row in rows:
        v = row
        while v:
            top = v.bit_length() - 1
            if top not in pivot_of:
                pivot_of[top] = v
                kept.append(row)
                break
            v ^= pivot_of[top]
    return kept
