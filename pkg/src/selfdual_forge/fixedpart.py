"""The length-12 fixed-part candidates and their split analysis.

A fixed-part source is a self-dual [12,6] code with 8 columns riding the
nine-blocks and 4 columns riding the tail.  Up to equivalence there are
three self-dual [12,6] codes: the six-duad code, two duads plus the
extended Hamming [8,4,4], and the indecomposable duad-cluster code.  Only
the last admits splits whose expansion keeps every nonzero word at weight
14 or more, and only when the four tail columns sit in four different
duads of its cluster.

The split matrix below is the cluster code arranged with its tail columns
last; its column stabilizer inside S_8 (acting on the block columns, with
a compensating tail permutation allowed) is generated by the three printed
permutations.  The candidate space for the census enumerates one
representative per left coset of that stabilizer: 40320 / 96 = 420
candidates.  A recorded data-integrity expectation of 420 for the
stabilizer order itself does not hold (the closure has order 96; 420 is
the coset count) and is surfaced by check_split_stabilizer_order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Sequence

from . import gf2
from .code import BinaryCode, is_self_dual
from .decomposition import FSigmaPart, lift_fixed, min_lifted_weight
from .perms import Perm, closure, compose, coset_transversal, identity, parse_cycles


class IntegrityError(RuntimeError):
    """Hard-coded group data failed its recorded expectation."""


def _rows_from_supports(supports: Iterable[Iterable[int]]) -> tuple[int, ...]:
    return tuple(sum(1 << (c - 1) for c in sup) for sup in supports)


# split layout: columns 1..8 ride the blocks, columns 9..12 ride the tail
SPLIT_MATRIX_SUPPORTS = (
    (1, 2, 9, 10),
    (2, 3, 10, 11),
    (3, 4, 11, 12),
    (4, 5, 6, 12),
    (5, 6, 7, 8),
    (1, 2, 3, 4, 6, 8),
)
SPLIT_CYCLIC_COLS = tuple(range(8))
SPLIT_FIXED_COLS = (8, 9, 10, 11)

SPLIT_STABILIZER_CYCLES = ("(1,2)", "(2,4,3)(5,7)(6,8)", "(5,6)(7,8)")
SPLIT_STABILIZER_EXPECTED_ORDER = 420  # recorded expectation; see module docstring
SPLIT_CANDIDATE_COUNT = 420


def d12_split_matrix() -> BinaryCode:
    """The cluster-code generator with block columns first, tail columns last."""
    return BinaryCode(12, _rows_from_supports(SPLIT_MATRIX_SUPPORTS))


@dataclass(frozen=True)
class PiCandidate:
    name: str
    code: BinaryCode
    duads: tuple[tuple[int, int], ...]  # empty when the code has no cluster


def six_duads() -> PiCandidate:
    rows = tuple(0b11 << (2 * i) for i in range(6))
    duads = tuple((2 * i, 2 * i + 1) for i in range(6))
    return PiCandidate("6i2", BinaryCode(12, rows), duads)


def two_duads_plus_hamming() -> PiCandidate:
    ham = (0b10000111, 0b01001011, 0b00101101, 0b00011110)
    rows = (0b11, 0b1100) + tuple(h << 4 for h in ham)
    return PiCandidate("2i2+h8", BinaryCode(12, rows), ((0, 1), (2, 3)))


def duad_cluster_code() -> PiCandidate:
    """Indecomposable self-dual [12,6] with cluster {1,2},{3,4},..,{11,12}."""
    rows = [0b1111 << (2 * i) for i in range(5)]
    rows.append(sum(1 << i for i in range(0, 12, 2)))
    duads = tuple((2 * i, 2 * i + 1) for i in range(6))
    return PiCandidate("d12", BinaryCode(12, tuple(rows)), duads)


def pi_candidates() -> tuple[PiCandidate, PiCandidate, PiCandidate]:
    return six_duads(), two_duads_plus_hamming(), duad_cluster_code()


def find_cluster(code: BinaryCode) -> tuple[tuple[int, int], ...]:
    """Recover the duad partition from weight-4 codeword co-occurrence.

    In the cluster code, two coordinates share a duad exactly when they
    co-occur in five weight-4 words (one per other duad).
    """
    if code.n != 12 or code.k != 6:
        raise ValueError("cluster detection expects a [12,6] code")
    counts: dict[tuple[int, int], int] = {}
    n_w4 = 0
    for w in gf2.span(code.rows):
        if gf2.wt(w) != 4:
            continue
        n_w4 += 1
        sup = [i for i in range(12) if (w >> i) & 1]
        for a, b in combinations(sup, 2):
            counts[(a, b)] = counts.get((a, b), 0) + 1
    duads = sorted(pair for pair, c in counts.items() if c == 5)
    flat = [x for p in duads for x in p]
    if n_w4 != 15 or len(duads) != 6 or sorted(flat) != list(range(12)):
        raise ValueError("code has no duad cluster")
    return tuple(duads)


def cluster_rule_ok(code: BinaryCode, fixed_cols: Sequence[int]) -> bool:
    """Every weight-4 word keeps at least two support coordinates off the tail."""
    fixed = set(fixed_cols)
    for w in gf2.span(code.rows):
        if gf2.wt(w) == 4:
            sup = {i for i in range(12) if (w >> i) & 1}
            if len(sup - fixed) < 2:
                return False
    return True


# --- column stabilizer of the split matrix ------------------------------------
def gpp_generators() -> list[Perm]:
    return [parse_cycles(s, 8) for s in SPLIT_STABILIZER_CYCLES]


_GPP_CACHE: frozenset[Perm] | None = None
_MU_CACHE: list[Perm] | None = None


def gpp_group() -> frozenset[Perm]:
    """Closure of the printed stabilizer generators (order 96)."""
    global _GPP_CACHE
    if _GPP_CACHE is None:
        _GPP_CACHE = closure(gpp_generators())
    return _GPP_CACHE


def check_split_stabilizer_order() -> None:
    """Compare the closure order against the recorded 420 expectation.

    Raises IntegrityError on mismatch.  The mismatch is real: the closure
    has order 96 and 420 counts its cosets in S_8, so this check documents
    a recorded-data conflict rather than a transcription error here.
    """
    got = len(gpp_group())
    if got != SPLIT_STABILIZER_EXPECTED_ORDER:
        raise IntegrityError(
            f"stabilizer closure has order {got}, recorded expectation is "
            f"{SPLIT_STABILIZER_EXPECTED_ORDER}; 40320/{got} = {40320 // got} "
            "is the matching candidate count"
        )


def preserves_split_code(mu: Perm) -> bool:
    """True when mu on the block columns maps the split code to itself up to
    some permutation of the four tail columns."""
    base = d12_split_matrix()
    target = base.canonical_rows()
    for nu in permutations(range(4)):
        perm12 = tuple(list(mu) + [8 + nu[i] for i in range(4)])
        if base.permuted(perm12).canonical_rows() == target:
            return True
    return False


def mu_transversal() -> list[Perm]:
    """Deterministic block-column candidates: one lexicographically least
    representative per left coset of the stabilizer closure; 420 entries,
    identity first."""
    global _MU_CACHE
    if _MU_CACHE is None:
        _MU_CACHE = coset_transversal(gpp_group(), 8)
    return _MU_CACHE


def mu_candidate_index(mu: Perm) -> int:
    """Index of mu's coset representative in the transversal."""
    group = gpp_group()
    reps = mu_transversal()
    pos = {rep: i for i, rep in enumerate(reps)}
    for g in group:
        rep = compose(mu, g)
        if rep in pos:
            return pos[rep]
    raise ValueError("mu does not reduce to any transversal representative")


def f_candidates(mu: Perm) -> FSigmaPart:
    """Fixed-part candidate: split matrix with block columns permuted by mu.

    Any permutation of the eight block columns is accepted; candidates in
    the same stabilizer coset expand to assembled codes that differ only by
    a tail relabeling.
    """
    if len(mu) != 8 or sorted(mu) != list(range(8)):
        raise ValueError("mu must be a permutation of the 8 block columns")
    perm12 = tuple(list(mu) + list(range(8, 12)))
    permuted = d12_split_matrix().permuted(perm12)
    return lift_fixed(permuted, SPLIT_CYCLIC_COLS, SPLIT_FIXED_COLS)


# --- exclusion analysis ----------------------------------------------------------
@dataclass(frozen=True)
class SplitCase:
    candidate: str
    assignments_checked: int
    failing: int
    passing: int
    worst_min_weight: int
    best_min_weight: int
    passing_assignments: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ExclusionReport:
    six_duads: SplitCase
    duads_plus_hamming: SplitCase
    duads_plus_hamming_wlog: SplitCase
    cluster: SplitCase

    @property
    def verdicts(self) -> dict[str, bool]:
        return {
            "6i2 admits no split": self.six_duads.passing == 0,
            "2i2+h8 admits no split": self.duads_plus_hamming.passing == 0,
            "2i2+h8 five canonical splits all fail": (
                self.duads_plus_hamming_wlog.passing == 0
                and self.duads_plus_hamming_wlog.assignments_checked == 5
            ),
            "cluster splits pass exactly": self.cluster.passing > 0,
        }


def _scan_assignments(
    candidate: PiCandidate,
    assignments: Iterable[tuple[int, ...]],
    threshold: int = 14,
) -> SplitCase:
    failing = 0
    passing = 0
    worst = 0
    best = 10**9
    passing_list = []
    count = 0
    for fixed in assignments:
        count += 1
        cyclic = tuple(c for c in range(12) if c not in fixed)
        w = min_lifted_weight(candidate.code, cyclic, fixed)
        worst = max(worst, w)
        best = min(best, w)
        if w >= threshold:
            passing += 1
            passing_list.append(tuple(fixed))
        else:
            failing += 1
    return SplitCase(
        candidate.name, count, failing, passing, worst, best, tuple(passing_list)
    )


def exclusion_report() -> ExclusionReport:
    """Recompute which [12,6] candidates admit a valid 8+4 column split.

    Exhausts all 495 four-column tail choices for each candidate, plus the
    five canonical choices for the Hamming-sum candidate (three tail points
    anchored in the Hamming block by 3-transitivity, the fourth ranging
    over the remaining five block columns).
    """
    six = six_duads()
    ham = two_duads_plus_hamming()
    cluster = duad_cluster_code()
    all_fours = list(combinations(range(12), 4))

    six_case = _scan_assignments(six, all_fours)
    ham_case = _scan_assignments(ham, all_fours)
    wlog = [(4, 5, 6, x) for x in range(7, 12)]
    ham_wlog_case = _scan_assignments(ham, wlog)
    cluster_case = _scan_assignments(cluster, all_fours)
    return ExclusionReport(six_case, ham_case, ham_wlog_case, cluster_case)


def cluster_split_predicate(fixed: tuple[int, ...]) -> bool:
    """Expected pass rule for the cluster code: four different duads."""
    duads = [c // 2 for c in fixed]
    return len(set(duads)) == 4


def render_report(report: ExclusionReport) -> str:
    lines = []
    for case in (
        report.six_duads,
        report.duads_plus_hamming,
        report.duads_plus_hamming_wlog,
        report.cluster,
    ):
        lines.append(
            f"candidate={case.candidate} checked={case.assignments_checked} "
            f"failing={case.failing} passing={case.passing} "
            f"min_weight_range=[{case.best_min_weight},{case.worst_min_weight}]"
        )
    for name, ok in report.verdicts.items():
        lines.append(f"verdict: {name}: {'yes' if ok else 'NO'}")
    return "\n".join(lines) + "\n"
