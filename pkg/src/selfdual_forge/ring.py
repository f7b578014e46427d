"""Arithmetic in the ring of even-weight polynomials mod x^9 - 1.

Elements are 9-bit int masks: bit i is the coefficient of x^i.  The ring T
(all even-weight masks, 256 elements) splits as a direct sum of two fields
cut out by orthogonal idempotents:

  * a 4-element field with identity E1, elements {0, E1, OMEGA, OMEGA_BAR};
  * a 64-element field with identity E2, generated by ALPHA = (x+1)*E2,
    which has multiplicative order 63.

Small-field elements travel as tags 0..3 (0, identity, omega, omega-bar);
big-field elements travel as symbol indices 0..63 (0 means zero, s means
ALPHA^(s-1)).  Lookup tables for both are built once at import and
validated exhaustively by the test suite and the `ring selftest` CLI.

Conjugation is induced by x -> x^(-1) = x^8.  On the 4-element field this
swaps omega and omega-bar (squaring); on the 64-element field it is the
order-2 Galois map z -> z^8.
"""

from __future__ import annotations

CYCLE = 9

E1 = sum(1 << i for i in (1, 2, 4, 5, 7, 8))  # x^8+x^7+x^5+x^4+x^2+x
E2 = (1 << 3) | (1 << 6)                      # x^6+x^3
T_IDENTITY = E1 ^ E2                          # acts as 1 on all of T


def in_ring(v: int) -> bool:
    return 0 <= v < (1 << CYCLE) and v.bit_count() % 2 == 0


def _check(v: int) -> int:
    if not in_ring(v):
        raise ValueError(f"not an even-weight 9-bit mask: {v}")
    return v


def ring_add(a: int, b: int) -> int:
    _check(a)
    _check(b)
    return a ^ b


def ring_mul(a: int, b: int) -> int:
    """Schoolbook polynomial product with exponents mod 9."""
    _check(a)
    _check(b)
    r = 0
    x = a
    for j in range(CYCLE):
        if (b >> j) & 1:
            r ^= x
        x = ((x << 1) | (x >> (CYCLE - 1))) & 0x1FF
    return r


def _raw_mul(a: int, b: int) -> int:
    r = 0
    for i in range(CYCLE):
        if (a >> i) & 1:
            for j in range(CYCLE):
                if (b >> j) & 1:
                    r ^= 1 << ((i + j) % CYCLE)
    return r


def conj(v: int) -> int:
    """Coefficient of x^i moves to x^((9 - i) mod 9)."""
    _check(v)
    r = v & 1
    for i in range(1, CYCLE):
        if (v >> i) & 1:
            r |= 1 << (CYCLE - i)
    return r


OMEGA = _raw_mul(1 << 1, E1)       # x * E1
OMEGA_BAR = _raw_mul(1 << 2, E1)   # x^2 * E1
ALPHA = _raw_mul((1 << 0) | (1 << 1), E2)  # (x + 1) * E2

# --- 4-element field: tags 0..3 -> masks ------------------------------------
F4_ZERO, F4_ONE, F4_OMEGA, F4_OMEGA_BAR = 0, 1, 2, 3
F4_MASK = (0, E1, OMEGA, OMEGA_BAR)
F4_TAG = {m: t for t, m in enumerate(F4_MASK)}
# GF(4) as F2[w]/(w^2+w+1): tag bits are coordinates, addition is XOR.
F4_MUL = tuple(
    tuple(F4_TAG[_raw_mul(F4_MASK[a], F4_MASK[b])] if a and b else 0 for b in range(4))
    for a in range(4)
)
F4_CONJ = (0, 1, 3, 2)


def f4_add(a: int, b: int) -> int:
    return a ^ b


def f4_mul(a: int, b: int) -> int:
    return F4_MUL[a][b]


# --- 64-element field: symbol indices 0..63 -> masks -------------------------
def _build_f64() -> tuple[tuple[int, ...], dict[int, int]]:
    masks = [0] * 64
    masks[1] = E2
    x = E2
    for k in range(1, 63):
        x = _raw_mul(x, ALPHA)
        masks[k + 1] = x
    index = {m: s for s, m in enumerate(masks)}
    if len(index) != 64:
        raise AssertionError("discrete log table degenerate")
    return tuple(masks), index


F64_MASK, F64_INDEX = _build_f64()


def f64_from_exp(k: int) -> int:
    """Symbol index of ALPHA^k."""
    return (k % 63) + 1


def f64_exp(s: int) -> int:
    """Discrete log of a nonzero symbol index."""
    if s == 0:
        raise ValueError("zero has no discrete log")
    return s - 1


def f64_add(a: int, b: int) -> int:
    return F64_INDEX[F64_MASK[a] ^ F64_MASK[b]]


def f64_mul(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return ((a - 1 + b - 1) % 63) + 1


def f64_conj(s: int) -> int:
    if s == 0:
        return 0
    return (8 * (s - 1)) % 63 + 1


F64_ADD = tuple(tuple(f64_add(a, b) for b in range(64)) for a in range(64))
F64_CONJ = tuple(f64_conj(s) for s in range(64))


# --- splitting T into the two field components --------------------------------
def split(v: int) -> tuple[int, int]:
    """Project v in T onto (small-field tag, big-field symbol index)."""
    _check(v)
    a = ring_mul(v, E1)
    b = ring_mul(v, E2)
    return F4_TAG[a], F64_INDEX[b]


def join(tag: int, sym: int) -> int:
    """Inverse of split: sum of the two component embeddings."""
    return F4_MASK[tag] ^ F64_MASK[sym]


# --- block maps between field symbols and 9-bit cycle blocks ------------------
def phi_inv_block_f4(tag: int) -> int:
    """9-bit coefficient mask of a small-field symbol."""
    return F4_MASK[tag]


def phi_inv_block_f64(sym: int) -> int:
    """9-bit coefficient mask of a big-field symbol."""
    return F64_MASK[sym]


def phi_inv_row(symbols, field: str) -> int:
    """Expand 8 field symbols into a 72-bit word, one 9-bit block per cycle.

    Cycle i (0-based) occupies bits 9*i .. 9*i+8; bit j of a block is the
    coefficient of x^j.
    """
    table = F4_MASK if field == "I1" else F64_MASK
    word = 0
    for i, s in enumerate(symbols):
        word |= table[s] << (CYCLE * i)
    return word


def phi_row(word: int, n_blocks: int = 8) -> tuple[int, ...]:
    """Read a word back as a vector of 9-bit ring masks, one per block."""
    out = []
    for i in range(n_blocks):
        blk = (word >> (CYCLE * i)) & 0x1FF
        _check(blk)
        out.append(blk)
    return tuple(out)


def ring_elements() -> list[int]:
    """All 256 elements of T."""
    return [v for v in range(1 << CYCLE) if v.bit_count() % 2 == 0]


def selftest() -> list[str]:
    """Exhaustive consistency checks; returns a list of failure strings."""
    failures = []

    def expect(cond: bool, what: str) -> None:
        if not cond:
            failures.append(what)

    elems = ring_elements()
    expect(len(elems) == 256, "|T| != 256")
    expect(ring_mul(E1, E1) == E1, "E1 not idempotent")
    expect(ring_mul(E2, E2) == E2, "E2 not idempotent")
    expect(ring_mul(E1, E2) == 0, "E1*E2 != 0")
    expect(all(ring_mul(T_IDENTITY, v) == v for v in elems), "E1+E2 not identity")
    expect(all(in_ring(ring_mul(a, b)) for a in elems[:32] for b in elems), "T not closed")
    expect(all(conj(conj(v)) == v for v in elems), "conj not involutive")
    expect(conj(OMEGA) == OMEGA_BAR, "conj omega")
    expect(conj(E2) == E2, "conj fixes E2")

    order = 1
    x = ALPHA
    while x != E2 and order < 100:
        x = ring_mul(x, ALPHA)
        order += 1
    expect(order == 63, "alpha order != 63")
    expect(
        all(conj(F64_MASK[s]) == F64_MASK[F64_CONJ[s]] for s in range(64)),
        "conj on big field is not z -> z^8",
    )
    expect(
        all(
            F64_MASK[f64_mul(a, b)] == ring_mul(F64_MASK[a], F64_MASK[b])
            for a in range(64)
            for b in range(64)
        ),
        "big-field multiplication table mismatch",
    )
    expect(
        all(
            F64_ADD[a][b] == F64_INDEX[F64_MASK[a] ^ F64_MASK[b]]
            for a in range(64)
            for b in range(64)
        ),
        "big-field addition table mismatch",
    )
    expect(
        all(
            F4_MASK[f4_mul(a, b)] == ring_mul(F4_MASK[a], F4_MASK[b])
            for a in range(4)
            for b in range(4)
        ),
        "small-field multiplication mismatch",
    )
    expect(all(join(*split(v)) == v for v in elems), "split/join not inverse")
    expect(
        all(
            split(ring_mul(u, v))
            == (
                f4_mul(split(u)[0], split(v)[0]),
                f64_mul(split(u)[1], split(v)[1]),
            )
            for u in elems[:32]
            for v in elems
        ),
        "split not multiplicative",
    )
    return failures
