import random

import pytest

from selfdual_forge import gf2
from selfdual_forge.code import BinaryCode, CodeError
from selfdual_forge.mindist import (
    collect_words_up_to,
    exact_min_distance,
    information_sets,
    min_distance,
    weight_distribution,
)


def full_enum_min_distance(code):
    """Oracle: scan all 2^k codewords."""
    best = code.n + 1
    for w in gf2.span(code.rows):
        if w:
            best = min(best, gf2.wt(w))
    return best


def full_enum_counts(code):
    counts = [0] * (code.n + 1)
    for w in gf2.span(code.rows):
        counts[gf2.wt(w)] += 1
    return counts


def random_code(rng, n_max=24, k_max=16):
    n = rng.randrange(3, n_max + 1)
    k = rng.randrange(1, min(k_max, n) + 1)
    while True:
        rows = [rng.getrandbits(n) for _ in range(k)]
        basis = gf2.independent_subset(rows, n)
        if len(basis) == k:
            return BinaryCode(n, tuple(basis))


EXT_HAMMING = BinaryCode(8, (0b11100001, 0b11010010, 0b10110100, 0b01111000))


def test_extended_hamming_distance_is_4():
    assert exact_min_distance(EXT_HAMMING) == 4


def test_information_sets_are_disjoint():
    rng = random.Random(2)
    for _ in range(20):
        c = random_code(rng)
        sets = information_sets(c)
        seen = set()
        for s in sets:
            assert not (seen & set(s.columns))
            seen |= set(s.columns)
        assert sets[0].rank == c.k


def test_min_distance_matches_full_enumeration_100_random_codes():
    rng = random.Random(1234)
    for _ in range(100):
        c = random_code(rng)
        assert exact_min_distance(c) == full_enum_min_distance(c)


def test_early_abort_below_verdicts():
    rng = random.Random(77)
    for _ in range(40):
        c = random_code(rng)
        d = full_enum_min_distance(c)
        t = d + 1
        res = min_distance(c, early_abort_below=t)
        assert res.kind == "below"
        assert res.witness is not None and 0 < gf2.wt(res.witness) < t
        res2 = min_distance(c, early_abort_below=d)
        assert res2.kind in ("exact", "at_least")
        assert res2.meets(d)


def test_weight_distribution_small_exact():
    i2 = BinaryCode(2, (0b11,))
    wd = weight_distribution(i2)
    assert wd.counts[0] == 1 and wd.counts[2] == 1 and wd.complete


def test_weight_distribution_matches_independent_oracle_k20():
    rng = random.Random(5)
    c = random_code(rng, n_max=24, k_max=20)
    while c.k != 20:
        c = random_code(rng, n_max=24, k_max=20)
    wd = weight_distribution(c)
    oracle = [0] * (c.n + 1)
    # independent oracle: rebuild every word from its combination mask
    for mask in range(1 << c.k):
        w = 0
        m = mask
        while m:
            w ^= c.rows[(m & -m).bit_length() - 1]
            m &= m - 1
        oracle[w.bit_count()] += 1
    assert list(wd.counts) == oracle


def test_weight_distribution_workers_deterministic():
    rng = random.Random(6)
    c = random_code(rng, n_max=20, k_max=17)
    while c.k < 16:
        c = random_code(rng, n_max=20, k_max=17)
    assert weight_distribution(c).counts == weight_distribution(c, workers=2).counts


def test_capped_counts_match_full():
    rng = random.Random(8)
    for _ in range(10):
        c = random_code(rng, n_max=18, k_max=12)
        cap = c.n // 2
        wd = weight_distribution(c, up_to=cap)
        full = full_enum_counts(c)
        assert not wd.complete
        for i in range(cap + 1):
            assert wd.counts[i] == full[i], (i, c.rows)


def test_collect_words_complete():
    rng = random.Random(9)
    for _ in range(10):
        c = random_code(rng, n_max=16, k_max=10)
        cap = c.n // 2
        words = collect_words_up_to(c, cap)
        oracle = {w for w in gf2.span(c.rows) if w and gf2.wt(w) <= cap}
        assert words == oracle


def test_full_enum_cap_guard():
    rows = tuple(1 << i for i in range(41))
    big = BinaryCode(64, rows)
    with pytest.raises(CodeError, match="too large"):
        weight_distribution(big)


def test_selfdual_distribution_symmetry():
    # self-complementary: A_i == A_{n-i} when the all-ones word is in C
    c = BinaryCode(8, (0b11110000, 0b00111100, 0b00001111, 0b01010101))
    ones = (1 << c.n) - 1
    if c.contains(ones):
        wd = weight_distribution(c)
        for i in range(c.n + 1):
            assert wd.counts[i] == wd.counts[c.n - i]
