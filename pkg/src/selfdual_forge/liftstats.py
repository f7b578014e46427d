"""Fast weight analysis for lifted codes via their block-symbol structure.

Every even-part codeword is a unique sum of a small-field component u (one
tag per block, restricted to the quaternary code in play) and a big-field
component s (a codeword of the big-field component code).  Its binary
weight decomposes per block as W[u_b][s_b], the popcount of the XOR of the
two embeddings, so weight questions reduce to table gathers over the
enumerated big-field code.

This yields exact threshold verdicts for the census search (a task
survives iff no nonzero u dips below the threshold against any s and the
pure big-field distance clears it) and exact low-weight counts for
invariant keys, orders of magnitude faster than generic enumeration.
All heavy per-component arrays live on a shared LiftContext.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import gf2, ring
from .hermitian import HermitianCode, MonomialTransform, apply_monomial, e8_code
from .perms import Perm

N_BLOCKS = 8
BLOCK_MASK = (1 << 9) - 1

# W[a][s] = popcount(small-field mask a XOR big-field mask s)
W_TABLE = np.array(
    [
        [(ring.F4_MASK[a] ^ ring.F64_MASK[s]).bit_count() for s in range(64)]
        for a in range(4)
    ],
    dtype=np.uint8,
)
WT64 = W_TABLE[0]                      # plain big-field block weights
MIN_W4 = W_TABLE.min(axis=0)           # min over all four tags
MIN_W4C = 9 - W_TABLE.max(axis=0)      # min over tags of (9 - W)

_F64_MUL_NP = np.array(
    [[ring.f64_mul(a, b) for b in range(64)] for a in range(64)], dtype=np.uint8
)
_F64_ADD_NP = np.array(ring.F64_ADD, dtype=np.uint8)
_F4_MUL_NP = np.array(ring.F4_MUL, dtype=np.uint8)

_TAG_WEIGHTS = np.array([1 << (2 * b) for b in range(N_BLOCKS)], dtype=np.int64)


def symbol_codewords(m2: HermitianCode) -> np.ndarray:
    """(64^4, 8) uint8 array of all big-field codewords, in scalar order.

    Row index encodes the information combination (c0 + 64*c1 + 64^2*c2 +
    64^3*c3); deterministic across runs.
    """
    if m2.field != "I2":
        raise ValueError("symbol enumeration needs a big-field code")
    words = np.zeros((1, N_BLOCKS), dtype=np.uint8)
    for row in m2.rows:
        row_arr = np.array(row, dtype=np.uint8)
        scaled = _F64_MUL_NP[:, row_arr]      # (64, 8): c * row per scalar c
        words = _F64_ADD_NP[words[None, :, :], scaled[:, None, :]].reshape(
            -1, N_BLOCKS
        )
    return words


@lru_cache(maxsize=64)
def e8_tau_codeword_tags(tau: Perm) -> tuple[tuple[int, ...], ...]:
    """All 256 codewords of the column-permuted quaternary anchor code."""
    m1 = apply_monomial(e8_code(), MonomialTransform(tau, (1,) * 8))
    return tuple(m1.codewords())


def small_field_tags(codewords: Iterable[tuple[int, ...]]) -> np.ndarray:
    return np.array([list(w) for w in codewords], dtype=np.uint8)


_DIAG_TAGS: np.ndarray | None = None


def all_diag_tags() -> np.ndarray:
    """(6561, 8) uint8: diagonal tags for every base-3 index, digit 0 first."""
    global _DIAG_TAGS
    if _DIAG_TAGS is None:
        idx = np.arange(3**8)
        digits = [(idx // (3**b)) % 3 + 1 for b in range(N_BLOCKS)]
        _DIAG_TAGS = np.stack(digits, axis=1).astype(np.uint8)
    return _DIAG_TAGS


class LiftContext:
    """Shared per-component arrays for screening and counting."""

    def __init__(self, m2: HermitianCode):
        self.m2 = m2
        self.sw = symbol_codewords(m2)
        self._bad: dict[int, np.ndarray] = {}
        self._base_bound: np.ndarray | None = None
        self._block_delta: list[np.ndarray] | None = None
        self._d_pure: int | None = None

    # -- pure big-field lift ----------------------------------------------------
    def lift_weights(self) -> np.ndarray:
        return WT64[self.sw].sum(axis=1, dtype=np.uint16)

    @property
    def d_pure(self) -> int:
        if self._d_pure is None:
            w = self.lift_weights()
            self._d_pure = int(w[w > 0].min())
        return self._d_pure

    # -- mixed-word screening -----------------------------------------------------
    def bad_table(self, threshold: int) -> np.ndarray:
        """Boolean over all 4^8 packed small-field vectors u != 0: True when
        some big-field codeword s makes the mixed word lighter than the
        threshold."""
        if threshold not in self._bad:
            lower = MIN_W4[self.sw].sum(axis=1, dtype=np.uint16)
            pool = np.nonzero(lower < threshold)[0]
            bad = np.zeros(1 << 16, dtype=bool)
            for idx in pool:
                syms = self.sw[idx]
                cols = [W_TABLE[:, syms[b]] for b in range(N_BLOCKS)]
                suffix = [0] * (N_BLOCKS + 1)
                for b in range(N_BLOCKS - 1, -1, -1):
                    suffix[b] = suffix[b + 1] + int(cols[b].min())
                stack = [(0, 0, 0)]
                while stack:
                    b, cost, packed = stack.pop()
                    if b == N_BLOCKS:
                        if packed:
                            bad[packed] = True
                        continue
                    col = cols[b]
                    rest = suffix[b + 1]
                    for a in range(4):
                        c2 = cost + int(col[a])
                        if c2 + rest < threshold:
                            stack.append((b + 1, c2, packed | (a << (2 * b))))
            self._bad[threshold] = bad
        return self._bad[threshold]

    def survivors_for_tau(
        self, tau: Perm, threshold: int, chunk: int = 1024
    ) -> np.ndarray:
        """Boolean mask over the 6561 diagonal indices for one permutation."""
        n_diag = 3**8
        if self.d_pure < threshold:
            return np.zeros(n_diag, dtype=bool)
        bad = self.bad_table(threshold)
        tags = small_field_tags([w for w in e8_tau_codeword_tags(tau) if any(w)])
        diag = all_diag_tags()
        out = np.empty(n_diag, dtype=bool)
        for start in range(0, n_diag, chunk):
            d = diag[start : start + chunk]
            prod = _F4_MUL_NP[d[:, None, :], tags[None, :, :]]      # (c, 255, 8)
            packed = (prod.astype(np.int64) * _TAG_WEIGHTS).sum(axis=2)
            out[start : start + chunk] = ~bad[packed].any(axis=1)
        return out

    def is_survivor(self, tau: Perm, diag_index: int, threshold: int) -> bool:
        if self.d_pure < threshold:
            return False
        bad = self.bad_table(threshold)
        tags = small_field_tags([w for w in e8_tau_codeword_tags(tau) if any(w)])
        d = all_diag_tags()[diag_index][None, :]
        prod = _F4_MUL_NP[d[:, None, :], tags[None, :, :]]
        packed = (prod.astype(np.int64) * _TAG_WEIGHTS).sum(axis=2)
        return not bad[packed].any()

    # -- even-part weight data ------------------------------------------------------
    def estar_weight_counts(self, m1_codewords: Sequence, cap: int) -> dict[int, int]:
        """Exact counts by weight for weights <= cap (zero word included)."""
        return AssembledCounter(self, m1_codewords, ()).weight_counts(cap)

    def estar_low_words(self, m1_codewords: Sequence, cap: int) -> list[int]:
        """All nonzero even-part binary words of weight <= cap."""
        return AssembledCounter(self, m1_codewords, ()).low_words(cap)

    # -- assembled [76, 38] cosets ---------------------------------------------------
    @property
    def base_bound(self) -> np.ndarray:
        if self._base_bound is None:
            self._base_bound = MIN_W4[self.sw].sum(axis=1, dtype=np.int16)
        return self._base_bound

    @property
    def block_delta(self) -> list[np.ndarray]:
        if self._block_delta is None:
            delta = MIN_W4C.astype(np.int16) - MIN_W4.astype(np.int16)
            self._block_delta = [delta[self.sw[:, b]] for b in range(N_BLOCKS)]
        return self._block_delta

    def pattern_pool(self, pattern: int, budget: int) -> np.ndarray:
        """Indices of big-field rows whose per-block lower bound fits the
        budget, for a given set of value-flipped blocks."""
        bound = self.base_bound.copy()
        for b in range(N_BLOCKS):
            if (pattern >> b) & 1:
                bound += self.block_delta[b]
        return np.nonzero(bound <= budget)[0]

    def assembled(self, m1_codewords: Sequence, f_rows: Sequence[int]) -> "AssembledCounter":
        return AssembledCounter(self, m1_codewords, f_rows)


def _fixed_part_patterns(f_rows: Sequence[int]) -> list[tuple[int, int, int]]:
    """All fixed-part span words as (word, block pattern bits, tail weight)."""
    out = []
    for w in gf2.span(list(f_rows)):
        pattern = 0
        for b in range(N_BLOCKS):
            blk = (w >> (9 * b)) & BLOCK_MASK
            if blk == BLOCK_MASK:
                pattern |= 1 << b
            elif blk:
                raise ValueError("fixed-part word is not block-constant")
        tail = (w >> 72) & 0xF
        out.append((w, pattern, tail.bit_count()))
    return out


class AssembledCounter:
    """Exact low-weight counting for an assembled [76, 38] pipeline code.

    Works coset by coset over the 64 fixed-part words: in the coset of f,
    block b costs W[u_b][s_b] when f is zero on the block and 9 minus that
    when f rides it, plus the tail weight of f.
    """

    def __init__(self, ctx: LiftContext, m1_codewords, f_rows: Sequence[int]):
        self.ctx = ctx
        self.m1_codewords = list(m1_codewords)
        self.f_items = _fixed_part_patterns(f_rows)

    def _pool_for_pattern(self, pattern: int, budget: int) -> np.ndarray:
        return self.ctx.pattern_pool(pattern, budget)

    CHUNK = 1 << 17

    def _u_tags(self) -> np.ndarray:
        return small_field_tags(self.m1_codewords)

    def _scan(self, cap: int, collect_words: bool):
        counts: dict[int, int] = {}
        words: list[int] = []
        sw = self.ctx.sw
        u_tags = self._u_tags()
        for f_word, pattern, tail_w in self.f_items:
            budget = cap - tail_w
            if budget < 0:
                continue
            idx = self._pool_for_pattern(pattern, budget)
            if len(idx) == 0:
                continue
            tables = [
                ((9 - W_TABLE) if (pattern >> b) & 1 else W_TABLE).astype(np.int16)
                for b in range(N_BLOCKS)
            ]
            for start in range(0, len(idx), self.CHUNK):
                pool = sw[idx[start : start + self.CHUNK]]
                cost = np.zeros((len(u_tags), len(pool)), dtype=np.int16)
                for b in range(N_BLOCKS):
                    col = tables[b][:, pool[:, b]]          # (4, P)
                    cost += col[u_tags[:, b]]
                keep = cost <= budget
                sel = cost[keep]
                vals, cnts = np.unique(sel, return_counts=True)
                for v, c in zip(vals.tolist(), cnts.tolist()):
                    w = int(v) + tail_w
                    counts[w] = counts.get(w, 0) + int(c)
                if collect_words:
                    u_idx, p_idx = np.nonzero(keep)
                    for ui, pi in zip(u_idx.tolist(), p_idx.tolist()):
                        u = self.m1_codewords[ui]
                        row = pool[pi]
                        even = 0
                        for b in range(N_BLOCKS):
                            even |= (
                                ring.F4_MASK[u[b]] ^ ring.F64_MASK[row[b]]
                            ) << (9 * b)
                        words.append(even ^ f_word)
        return counts, words

    def weight_counts(self, cap: int) -> dict[int, int]:
        return self._scan(cap, collect_words=False)[0]

    def low_words(self, cap: int) -> list[int]:
        return [w for w in self._scan(cap, collect_words=True)[1] if w]

    def min_distance(self, start_cap: int = 14) -> int:
        cap = start_cap
        while True:
            counts = self.weight_counts(cap)
            nonzero = [w for w, c in counts.items() if w > 0 and c > 0]
            if nonzero:
                return min(nonzero)
            cap += 4

    def meets_threshold(self, threshold: int) -> bool:
        """Exact verdict: no nonzero word lighter than the threshold."""
        counts = self.weight_counts(threshold - 1)
        return not any(w > 0 and c > 0 for w, c in counts.items())
