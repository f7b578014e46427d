import random

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from selfdual_forge import gf2


def numpy_rank_oracle(rows, n):
    """Independent Gaussian elimination on a numpy uint8 matrix."""
    M = np.zeros((len(rows), n), dtype=np.uint8)
    for i, r in enumerate(rows):
        for j in range(n):
            M[i, j] = (r >> j) & 1
    rank = 0
    for col in range(n):
        piv = None
        for r in range(rank, len(rows)):
            if M[r, col]:
                piv = r
                break
        if piv is None:
            continue
        M[[rank, piv]] = M[[piv, rank]]
        for r in range(len(rows)):
            if r != rank and M[r, col]:
                M[r] ^= M[rank]
        rank += 1
    return rank


def test_rref_trivial_2x2():
    red, pivots = gf2.rref([0b11, 0b10], 2)
    assert pivots == [0, 1]
    assert sorted(red) == [0b01, 0b10]


def test_rref_rank_matches_oracle_on_random_matrices():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randrange(4, 21)
        m = rng.randrange(1, 11)
        rows = [rng.getrandbits(n) for _ in range(m)]
        red, pivots = gf2.rref(rows, n)
        assert len(red) == len(pivots) == numpy_rank_oracle(rows, n)


def test_kernel_is_orthogonal_complement():
    rng = random.Random(3)
    for _ in range(25):
        n = rng.randrange(3, 16)
        rows = [rng.getrandbits(n) for _ in range(rng.randrange(1, n))]
        rows = [r for r in rows if r] or [1]
        ker = gf2.kernel_basis(rows, n)
        assert len(ker) == n - gf2.rank(rows, n)
        for v in ker:
            for r in rows:
                assert gf2.wt(v & r) % 2 == 0


def test_solve_combination_roundtrip():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randrange(3, 18)
        rows = [rng.getrandbits(n) or 1 for _ in range(rng.randrange(1, 8))]
        mask = rng.getrandbits(len(rows))
        target = 0
        for i in range(len(rows)):
            if (mask >> i) & 1:
                target ^= rows[i]
        sol = gf2.solve_combination(target, rows, n)
        assert sol is not None
        rebuilt = 0
        for i in range(len(rows)):
            if (sol >> i) & 1:
                rebuilt ^= rows[i]
        assert rebuilt == target


def test_solve_combination_rejects_outside_span():
    rows = [0b0011, 0b0110]
    assert gf2.solve_combination(0b1000, rows, 4) is None


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=2**12 - 1), min_size=1, max_size=8))
def test_span_size_matches_rank(rows):
    n = 12
    words = set(gf2.span(gf2.independent_subset(rows, n)))
    if not any(rows):
        assert words == {0}
    else:
        assert len(words) == 1 << gf2.rank(rows, n)


def test_independent_subset_preserves_span():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randrange(3, 15)
        rows = [rng.getrandbits(n) for _ in range(rng.randrange(1, 10))]
        sub = gf2.independent_subset(rows, n)
        assert gf2.rank(sub, n) == len(sub) == gf2.rank(rows, n)
        for r in rows:
            assert gf2.in_row_space(r, sub, n) or not sub and r == 0
