import pytest

from selfdual_forge import ring


def schoolbook_mul(a, b):
    """Independent 9-step polynomial multiplication oracle."""
    r = 0
    for i in range(9):
        if (a >> i) & 1:
            for j in range(9):
                if (b >> j) & 1:
                    r ^= 1 << ((i + j) % 9)
    return r


def test_idempotents_against_schoolbook_oracle():
    assert ring.ring_mul(ring.E1, ring.E1) == schoolbook_mul(ring.E1, ring.E1) == ring.E1
    assert ring.ring_mul(ring.E2, ring.E2) == schoolbook_mul(ring.E2, ring.E2) == ring.E2
    assert ring.ring_mul(ring.E1, ring.E2) == schoolbook_mul(ring.E1, ring.E2) == 0


def test_identity_on_all_255_nonzero_elements():
    for v in ring.ring_elements():
        if v:
            assert ring.ring_mul(ring.T_IDENTITY, v) == v


def test_ring_mul_matches_oracle_exhaustively():
    elems = ring.ring_elements()
    for a in elems:
        for b in elems:
            assert ring.ring_mul(a, b) == schoolbook_mul(a, b)


def test_odd_weight_inputs_rejected():
    with pytest.raises(ValueError):
        ring.ring_mul(0b1, ring.E1)
    with pytest.raises(ValueError):
        ring.ring_add(ring.E1, 0b111)


def test_field_sizes():
    i1 = {0, ring.E1, ring.OMEGA, ring.OMEGA_BAR}
    assert len(i1) == 4
    assert len(set(ring.F64_MASK)) == 64


def test_alpha_has_order_63():
    x = ring.ALPHA
    seen = set()
    while x not in seen:
        seen.add(x)
        x = ring.ring_mul(x, ring.ALPHA)
    assert len(seen) == 63
    assert ring.ring_mul(ring.F64_MASK[32], ring.F64_MASK[33]) == ring.E2  # a^31 * a^32


def test_conj_is_exponent_reflection():
    def reflect(v):
        r = v & 1
        for i in range(1, 9):
            if (v >> i) & 1:
                r |= 1 << (9 - i)
        return r

    for v in ring.ring_elements():
        assert ring.conj(v) == reflect(v)
        assert ring.conj(ring.conj(v)) == v


def test_conj_small_field_swap():
    assert ring.conj(ring.OMEGA) == ring.OMEGA_BAR
    assert ring.conj(ring.E2) == ring.E2


def test_conj_big_field_is_eighth_power():
    for k in range(63):
        s = ring.f64_from_exp(k)
        assert ring.conj(ring.F64_MASK[s]) == ring.F64_MASK[ring.f64_from_exp(8 * k)]


def test_big_field_tables_match_ring_arithmetic():
    for a in range(64):
        for b in range(64):
            assert ring.F64_MASK[ring.f64_mul(a, b)] == schoolbook_mul(
                ring.F64_MASK[a], ring.F64_MASK[b]
            )
            assert ring.F64_MASK[ring.F64_ADD[a][b]] == ring.F64_MASK[a] ^ ring.F64_MASK[b]


def test_small_field_against_polynomial_oracle():
    assert ring.f4_mul(ring.F4_OMEGA, ring.F4_OMEGA_BAR) == ring.F4_ONE
    for a in range(4):
        for b in range(4):
            assert ring.F4_MASK[ring.f4_mul(a, b)] == schoolbook_mul(
                ring.F4_MASK[a], ring.F4_MASK[b]
            )
            assert ring.F4_MASK[a ^ b] == ring.F4_MASK[a] ^ ring.F4_MASK[b]


def test_split_join_roundtrip_all_256():
    for v in ring.ring_elements():
        tag, sym = ring.split(v)
        assert ring.join(tag, sym) == v
    for tag in range(4):
        for sym in range(64):
            assert ring.split(ring.join(tag, sym)) == (tag, sym)


def test_split_respects_both_operations():
    elems = ring.ring_elements()
    sample = elems[::5]
    for u in sample:
        for v in sample:
            tu, su = ring.split(u)
            tv, sv = ring.split(v)
            assert ring.split(ring.ring_mul(u, v)) == (ring.f4_mul(tu, tv), ring.f64_mul(su, sv))
            assert ring.split(u ^ v) == (tu ^ tv, ring.F64_ADD[su][sv])


def test_phi_inv_block_values():
    assert ring.phi_inv_block_f4(ring.F4_ONE) == sum(1 << i for i in (1, 2, 4, 5, 7, 8))
    assert ring.phi_inv_block_f4(0) == 0
    assert ring.phi_inv_block_f64(0) == 0


def test_phi_roundtrip_random_rows():
    import random

    rng = random.Random(99)
    for _ in range(1000):
        syms = [rng.randrange(64) for _ in range(8)]
        word = ring.phi_inv_row(syms, "I2")
        masks = ring.phi_row(word)
        assert [ring.F64_INDEX[m] for m in masks] == syms


def test_selftest_clean():
    assert ring.selftest() == []
