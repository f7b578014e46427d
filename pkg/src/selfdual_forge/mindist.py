"""Minimum distance and weight counting for binary codes.

Exact minimum distance uses information-set enumeration over disjoint
information sets (greedily extracted from echelon pivots), sweeping the
enumeration weight upward round-robin across sets until the survivor lower
bound meets the best word found.  An optional early-abort threshold turns
the routine into a cheap accept/reject filter.

Weight distributions come either from full Gray-code enumeration (capped
at dimension 40) or from capped low-weight counting via the same
information-set machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import gf2
from .code import BinaryCode, CodeError

FULL_ENUM_MAX_K = 40


@dataclass(frozen=True)
class InformationSet:
    columns: tuple[int, ...]
    basis: tuple[int, ...]
    rank: int


@dataclass(frozen=True)
class MinDistResult:
    kind: str  # "exact" | "below" | "at_least"
    value: int
    witness: Optional[int] = None

    def meets(self, threshold: int) -> bool:
        """True when the result certifies distance >= threshold."""
        if self.kind == "exact":
            return self.value >= threshold
        if self.kind == "at_least":
            return self.value >= threshold
        return False


def _rref_with_order(rows: Sequence[int], col_order: Sequence[int]) -> tuple[list[int], list[int]]:
    work = list(rows)
    pivots: list[int] = []
    rank = 0
    for col in col_order:
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
    return work, pivots


def information_sets(code: BinaryCode) -> list[InformationSet]:
    """Disjoint information sets, greedily taken from echelon pivots."""
    used: set[int] = set()
    sets: list[InformationSet] = []
    while True:
        avail = [c for c in range(code.n) if c not in used]
        if not avail:
            break
        order = avail + [c for c in range(code.n) if c in used]
        basis, pivots = _rref_with_order(code.rows, order)
        pivots = [p for p in pivots if p in set(avail)]
        if not pivots:
            break
        used.update(pivots)
        sets.append(InformationSet(tuple(pivots), tuple(basis), len(pivots)))
    return sets


def _sweep_exact_weight(
    basis: Sequence[int],
    w: int,
    best: int,
    abort_below: Optional[int],
) -> tuple[int, Optional[int], bool]:
    """Min weight over XOR-combinations of exactly w basis rows.

    Returns (best weight, witness if improved, aborted flag).  Abort fires
    as soon as any word lighter than ``abort_below`` is seen.
    """
    k = len(basis)
    witness = None
    aborted = False
    stack_rows = basis

    def rec(start: int, remaining: int, acc: int) -> None:
        nonlocal best, witness, aborted
        if aborted:
            return
        if remaining == 1:
            for i in range(start, k):
                v = acc ^ stack_rows[i]
                wv = v.bit_count()
                if wv and wv < best:
                    best = wv
                    witness = v
                    if abort_below is not None and wv < abort_below:
                        aborted = True
                        return
            return
        for i in range(start, k - remaining + 1):
            rec(i + 1, remaining - 1, acc ^ stack_rows[i])
            if aborted:
                return

    if w >= 1 and w <= k:
        rec(0, w, 0)
    return best, witness, aborted


def min_distance(
    code: BinaryCode,
    early_abort_below: Optional[int] = None,
) -> MinDistResult:
    """Exact minimum distance, or an early threshold verdict.

    With ``early_abort_below=t`` the search may stop as soon as either a
    nonzero word of weight < t is found (verdict "below", value t) or the
    enumeration lower bound reaches t (verdict "at_least", value t).
    """
    if code.k < 1:
        raise CodeError("rank zero")
    sets = information_sets(code)
    k = code.k
    best = min(r.bit_count() for r in code.rows)
    witness = next(r for r in code.rows if r.bit_count() == best)
    if early_abort_below is not None and best < early_abort_below:
        return MinDistResult("below", early_abort_below, witness)
    w = 1
    while True:
        for iset in sets:
            best_new, wit_new, aborted = _sweep_exact_weight(
                iset.basis, w, best, early_abort_below
            )
            if wit_new is not None:
                best, witness = best_new, wit_new
            if aborted:
                return MinDistResult("below", early_abort_below or 0, witness)
        lb = sum(max(0, w + 1 - (k - s.rank)) for s in sets)
        if lb >= best:
            return MinDistResult("exact", best, witness)
        if early_abort_below is not None and lb >= early_abort_below:
            return MinDistResult("at_least", early_abort_below, None)
        w += 1
        if w > k:
            return MinDistResult("exact", best, witness)


def exact_min_distance(code: BinaryCode) -> int:
    return min_distance(code).value


@dataclass(frozen=True)
class WeightDistribution:
    counts: tuple[int, ...]
    complete: bool
    max_tracked_weight: int

    def __getitem__(self, i: int) -> int:
        return self.counts[i]


def _gray_counts(rows: Sequence[int], start_mask: int, count: int) -> list[int]:
    """Weight counts over ``count`` consecutive Gray-enumerated codewords."""
    n_rows = len(rows)
    counts = [0] * 129
    word = 0
    gray_prev = start_mask ^ (start_mask >> 1)
    for i in range(n_rows):
        if (gray_prev >> i) & 1:
            word ^= rows[i]
    counts[word.bit_count()] += 1
    for m in range(start_mask + 1, start_mask + count):
        gray = m ^ (m >> 1)
        diff = gray ^ gray_prev
        word ^= rows[(diff & -diff).bit_length() - 1]
        gray_prev = gray
        counts[word.bit_count()] += 1
    return counts


def weight_distribution(
    code: BinaryCode,
    up_to: Optional[int] = None,
    workers: int = 1,
) -> WeightDistribution:
    """Exact weight distribution, full or capped at ``up_to``.

    Full enumeration (Gray code) covers dimensions up to 40; the capped
    variant counts every weight <= up_to exactly by information-set
    enumeration taken to its completeness bound.
    """
    if up_to is None or up_to >= code.n:
        if code.k > FULL_ENUM_MAX_K:
            raise CodeError("enumeration too large")
        total = 1 << code.k
        if workers <= 1 or code.k < 16:
            raw = _gray_counts(code.rows, 0, total)
        else:
            from concurrent.futures import ProcessPoolExecutor

            nchunks = min(workers * 4, 64)
            chunk = total // nchunks
            bounds = [(i * chunk, chunk) for i in range(nchunks)]
            bounds[-1] = (bounds[-1][0], total - bounds[-1][0])
            raw = [0] * 129
            with ProcessPoolExecutor(max_workers=workers) as ex:
                futures = [
                    ex.submit(_gray_counts, code.rows, s, c) for s, c in bounds
                ]
                for fut in futures:
                    for i, v in enumerate(fut.result()):
                        raw[i] += v
        counts = tuple(raw[i] if i < len(raw) else 0 for i in range(code.n + 1))
        return WeightDistribution(counts, True, code.n)
    words = collect_words_up_to(code, up_to)
    counts_list = [0] * (code.n + 1)
    counts_list[0] = 1
    for w in words:
        counts_list[w.bit_count()] += 1
    return WeightDistribution(tuple(counts_list), False, up_to)


def collect_words_up_to(code: BinaryCode, max_weight: int) -> set[int]:
    """All nonzero codewords of weight <= max_weight (exact, deduplicated)."""
    sets = information_sets(code)
    k = code.k
    found: set[int] = set()
    w = 0
    while True:
        lb = sum(max(0, w + 1 - (k - s.rank)) for s in sets)
        if lb > max_weight:
            return found
        w += 1
        if w > k:
            return found
        for iset in sets:
            basis = iset.basis

            def rec(start: int, remaining: int, acc: int) -> None:
                if remaining == 0:
                    if acc and acc.bit_count() <= max_weight:
                        found.add(acc)
                    return
                for i in range(start, k - remaining + 1):
                    rec(i + 1, remaining - 1, acc ^ basis[i])

            rec(0, w, 0)
