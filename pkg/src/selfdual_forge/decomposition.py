"""Lifting component codes into the length-76 block layout.

Coordinate layout (0-based bits): eight blocks of nine coordinates at
bits 9*i .. 9*i+8, then four fixed coordinates at bits 72..75.  The block
rotation sigma shifts every block cyclically by one position and fixes the
tail; assembled codes are invariant under it by construction.

The even part comes from a pair of Hermitian self-dual component codes
(small field and big field) through the block expansion; the fixed part
comes from a self-dual length-12 code whose columns are split into eight
block-constant columns and four tail columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import gf2
from .code import BinaryCode, CodeError, is_self_dual, is_self_orthogonal
from .hermitian import HermitianCode, binary_lift_rows
from .perms import Perm, apply_to_word

N_BLOCKS = 8
BLOCK_LEN = 9
N_FIXED = 4
EVEN_LEN = N_BLOCKS * BLOCK_LEN            # 72
EVEN_DIM = N_BLOCKS * (BLOCK_LEN - 1) // 2  # 32
FULL_LEN = EVEN_LEN + N_FIXED              # 76
FULL_DIM = FULL_LEN // 2                   # 38

BLOCK_MASK = (1 << BLOCK_LEN) - 1
ALL_ONES_BLOCK = BLOCK_MASK


class LiftError(CodeError):
    """Violated lift or assembly precondition."""


def sigma_perm() -> Perm:
    """Order-9 coordinate rotation: +1 within each block, tail fixed."""
    perm = []
    for b in range(N_BLOCKS):
        base = b * BLOCK_LEN
        perm.extend(base + (j + 1) % BLOCK_LEN for j in range(BLOCK_LEN))
    perm.extend(range(EVEN_LEN, FULL_LEN))
    return tuple(perm)


def sigma_perm_72() -> Perm:
    return sigma_perm()[:EVEN_LEN]


def block_of(word: int, b: int) -> int:
    return (word >> (b * BLOCK_LEN)) & BLOCK_MASK


def blocks_even(word: int) -> bool:
    return all(block_of(word, b).bit_count() % 2 == 0 for b in range(N_BLOCKS))


@dataclass(frozen=True)
class EStarCode:
    """Even-part binary code [72, 32] with its construction provenance."""

    code: BinaryCode
    m2_key: Optional[str] = None
    tau_index: Optional[int] = None
    diag_index: Optional[int] = None


@dataclass(frozen=True)
class FSigmaPart:
    """Fixed-part rows of length 76, block-constant on every block."""

    rows: tuple[int, ...]
    source: BinaryCode
    cyclic_cols: tuple[int, ...]
    fixed_cols: tuple[int, ...]


def lift_even(m1: HermitianCode, m2: HermitianCode) -> EStarCode:
    """Binary even-part code from the two Hermitian components.

    Rows are the big-field expansion (24 rows) stacked over the small-field
    expansion (8 rows).  The result must be [72, 32], self-orthogonal and
    rotation-invariant; anything else signals invalid components.
    """
    if m1.field != "I1" or m2.field != "I2":
        raise LiftError("components must live over the two split fields")
    rows = binary_lift_rows(m2) + binary_lift_rows(m1)
    try:
        code = BinaryCode(EVEN_LEN, tuple(rows))
    except CodeError as exc:
        raise LiftError("degenerate lift") from exc
    if code.k != EVEN_DIM:
        raise LiftError("degenerate lift")
    if not is_self_orthogonal(code):
        raise LiftError("lift is not self-orthogonal")
    shift = sigma_perm_72()
    for r in code.rows:
        if not code.contains(apply_to_word(r, shift)):
            raise LiftError("lift is not rotation-invariant")
    return EStarCode(code)


def lift_fixed(
    collapsed: BinaryCode,
    cyclic_cols: Sequence[int],
    fixed_cols: Sequence[int],
) -> FSigmaPart:
    """Expand a self-dual [12,6] code: block columns repeat 9 times.

    ``cyclic_cols[i]`` is the source column riding block i; ``fixed_cols[t]``
    rides tail coordinate 72+t.  The two lists must partition the 12 source
    columns.
    """
    if collapsed.n != 12 or collapsed.k != 6:
        raise LiftError("collapsed code must be [12, 6]")
    if not is_self_dual(collapsed):
        raise LiftError("collapsed code must be self-dual")
    cols = list(cyclic_cols) + list(fixed_cols)
    if sorted(cols) != list(range(12)) or len(cyclic_cols) != N_BLOCKS:
        raise LiftError("cyclic and fixed columns must partition the 12 columns")
    rows = []
    for src in collapsed.rows:
        word = 0
        for b, col in enumerate(cyclic_cols):
            if (src >> col) & 1:
                word |= ALL_ONES_BLOCK << (b * BLOCK_LEN)
        for t, col in enumerate(fixed_cols):
            if (src >> col) & 1:
                word |= 1 << (EVEN_LEN + t)
        rows.append(word)
    return FSigmaPart(tuple(rows), collapsed, tuple(cyclic_cols), tuple(fixed_cols))


def project_collapsed(part: FSigmaPart, word: int) -> int:
    """Collapse a block-constant word back to the 12 source columns."""
    out = 0
    for b, col in enumerate(part.cyclic_cols):
        blk = block_of(word, b)
        if blk == ALL_ONES_BLOCK:
            out |= 1 << col
        elif blk != 0:
            raise LiftError("word is not block-constant")
    for t, col in enumerate(part.fixed_cols):
        if (word >> (EVEN_LEN + t)) & 1:
            out |= 1 << col
    return out


def lifted_row_weight(cyclic_support: int, fixed_support: int) -> int:
    """Weight of an expanded row with the given support sizes."""
    return BLOCK_LEN * cyclic_support + fixed_support


def min_lifted_weight(collapsed: BinaryCode, cyclic_cols, fixed_cols) -> int:
    """Minimum expanded weight over all nonzero source words (exhaustive)."""
    cyc = set(cyclic_cols)
    best = FULL_LEN + 1
    for w in gf2.span(collapsed.rows):
        if not w:
            continue
        c = sum(1 for col in range(12) if (w >> col) & 1 and col in cyc)
        f = w.bit_count() - c
        best = min(best, lifted_row_weight(c, f))
    return best


def assemble76(even: EStarCode, fixed: FSigmaPart) -> BinaryCode:
    """Stack the even part (zero on the tail) over the fixed-part rows.

    The result must be self-dual [76, 38]; a duality failure means the
    component pair violates its construction preconditions.
    """
    rows = [r for r in even.code.rows] + list(fixed.rows)
    try:
        code = BinaryCode(FULL_LEN, tuple(rows))
    except CodeError as exc:
        raise LiftError("assembly violates duality") from exc
    if code.k != FULL_DIM or not is_self_dual(code):
        raise LiftError("assembly violates duality")
    return code


def decompose_word(code_word: int, fixed: FSigmaPart) -> tuple[int, int]:
    """Split an assembled word into (fixed-part word, even-part word).

    The fixed component is the unique block-constant lift matching the
    word's block parities and tail bits; the remainder must be even on
    every block.
    """
    collapsed = 0
    for b, col in enumerate(fixed.cyclic_cols):
        if block_of(code_word, b).bit_count() % 2 == 1:
            collapsed |= 1 << col
    for t, col in enumerate(fixed.fixed_cols):
        if (code_word >> (EVEN_LEN + t)) & 1:
            collapsed |= 1 << col
    f_word = 0
    for b, col in enumerate(fixed.cyclic_cols):
        if (collapsed >> col) & 1:
            f_word |= ALL_ONES_BLOCK << (b * BLOCK_LEN)
    for t, col in enumerate(fixed.fixed_cols):
        if (collapsed >> col) & 1:
            f_word |= 1 << (EVEN_LEN + t)
    e_word = code_word ^ f_word
    if not blocks_even(e_word) or e_word >> EVEN_LEN:
        raise LiftError("word does not decompose")
    return f_word, e_word
