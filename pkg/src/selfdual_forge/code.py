"""Bit-packed binary linear codes: duality, self-duality, shadows, file io.

Codewords are ints (bit i = coordinate i+1 of the text formats).  A
BinaryCode stores a basis; equality of codes means equality of row spaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import gf2
from .perms import Perm, apply_to_word


class CodeError(ValueError):
    """Invalid code construction or operation precondition."""


@dataclass(frozen=True)
class BinaryCode:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n:
            raise CodeError("length must be positive")
        if not self.rows:
            raise CodeError("rank zero")
        if len(self.rows) > self.n:
            raise CodeError("dimension exceeds length")
        mask = (1 << self.n) - 1
        if any(r & ~mask for r in self.rows):
            raise CodeError("row has bits beyond the code length")
        if gf2.rank(self.rows, self.n) != len(self.rows):
            raise CodeError("rows are linearly dependent")

    @property
    def k(self) -> int:
        return len(self.rows)

    @classmethod
    def from_spanning(cls, n: int, rows: Sequence[int]) -> "BinaryCode":
        """Build from a possibly redundant spanning set."""
        basis = gf2.independent_subset(rows, n)
        if not basis:
            raise CodeError("rank zero")
        return cls(n, tuple(basis))

    def rref(self) -> tuple["BinaryCode", list[int]]:
        red, pivots = gf2.rref(self.rows, self.n)
        return BinaryCode(self.n, tuple(red)), pivots

    def dual(self) -> "BinaryCode":
        if self.k == self.n:
            raise CodeError("dual of the full space is trivial")
        return BinaryCode(self.n, tuple(gf2.kernel_basis(self.rows, self.n)))

    def contains(self, word: int) -> bool:
        return gf2.in_row_space(word, self.rows, self.n)

    def same_code(self, other: "BinaryCode") -> bool:
        return self.n == other.n and gf2.row_space_equal(self.rows, other.rows, self.n)

    def codewords(self) -> Iterable[int]:
        if self.k > 24:
            raise CodeError("enumeration too large")
        return gf2.span(self.rows)

    def permuted(self, perm: Perm) -> "BinaryCode":
        if len(perm) != self.n:
            raise CodeError("permutation length mismatch")
        return BinaryCode(self.n, tuple(apply_to_word(r, perm) for r in self.rows))

    def canonical_rows(self) -> tuple[int, ...]:
        return tuple(gf2.rref(self.rows, self.n)[0])


def is_self_orthogonal(code: BinaryCode) -> bool:
    rows = code.rows
    return all(
        gf2.wt(rows[i] & rows[j]) % 2 == 0
        for i in range(len(rows))
        for j in range(i, len(rows))
    )


def is_self_dual(code: BinaryCode) -> bool:
    return 2 * code.k == code.n and is_self_orthogonal(code)


def is_doubly_even(code: BinaryCode) -> bool:
    return all(gf2.wt(r) % 4 == 0 for r in code.rows) and is_self_orthogonal(code)


@dataclass(frozen=True)
class ShadowParts:
    n: int
    doubly_even_rows: tuple[int, ...]
    coset_reps: tuple[int, int]


def shadow_cosets(code: BinaryCode) -> ShadowParts:
    """Doubly-even subcode and the two shadow coset representatives.

    Requires a singly-even self-dual code.  The shadow is the union of the
    two cosets of the doubly-even subcode inside its dual that avoid the
    code itself.
    """
    if not is_self_dual(code):
        raise CodeError("shadow requires a self-dual code")
    odd = [r for r in code.rows if gf2.wt(r) % 4 == 2]
    if not odd:
        raise CodeError("shadow undefined variant")
    anchor = odd[0]
    sub_rows = [r for r in code.rows if gf2.wt(r) % 4 == 0]
    sub_rows += [r ^ anchor for r in odd[1:]]
    # solve for s: s . g = 0 for g in subcode rows, s . anchor = 1
    eqs = sub_rows + [anchor]
    rhs_index = len(eqs) - 1
    n = code.n
    aug = [eqs[i] | ((1 if i == rhs_index else 0) << n) for i in range(len(eqs))]
    red, pivots = gf2.rref(aug, n + 1)
    s = 0
    for row, pc in zip(red, pivots):
        if pc < n and (row >> n) & 1:
            s |= 1 << pc
    if any(gf2.wt(s & g) % 2 for g in sub_rows) or gf2.wt(s & anchor) % 2 != 1:
        raise CodeError("shadow solve failed")
    return ShadowParts(code.n, tuple(sub_rows), (s, s ^ anchor))


def shadow_words(code: BinaryCode) -> list[int]:
    """All shadow words by coset enumeration (small dimensions only)."""
    parts = shadow_cosets(code)
    if len(parts.doubly_even_rows) > 24:
        raise CodeError("enumeration too large")
    words = []
    for base in parts.coset_reps:
        words.extend(base ^ w for w in gf2.span(parts.doubly_even_rows))
    return words


# --- generator-matrix text format ---------------------------------------------
def write_gm2(code: BinaryCode) -> str:
    lines = [f"{code.n} {code.k}"]
    for r in code.rows:
        lines.append("".join("1" if (r >> i) & 1 else "0" for i in range(code.n)))
    return "\n".join(lines) + "\n"


def parse_gm2(text: str) -> BinaryCode:
    if not text.endswith("\n"):
        raise CodeError("missing trailing newline")
    lines = text.split("\n")[:-1]
    if not lines:
        raise CodeError("empty file")
    head = lines[0].split()
    if len(head) != 2:
        raise CodeError("header must be 'n k'")
    try:
        n, k = int(head[0]), int(head[1])
    except ValueError as exc:
        raise CodeError("header must be 'n k'") from exc
    if len(lines) != 1 + k:
        raise CodeError(f"expected {k} rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        if len(ln) != n or set(ln) - {"0", "1"}:
            raise CodeError(f"row must be exactly {n} chars of 0/1: {ln!r}")
        rows.append(sum(1 << i for i, ch in enumerate(ln) if ch == "1"))
    return BinaryCode(n, tuple(rows))


def save_gm2(code: BinaryCode, path) -> None:
    from pathlib import Path

    Path(path).write_text(write_gm2(code), encoding="ascii")


def load_gm2(path) -> BinaryCode:
    from pathlib import Path

    return parse_gm2(Path(path).read_text(encoding="ascii"))
