"""Length-8 Hermitian self-dual codes over the two component fields.

Rows are tuples of 8 symbols: tags 0..3 for the 4-element field ("I1"),
symbol indices 0..63 for the 64-element field ("I2").  The Hermitian inner
product pairs each coordinate with the conjugate of its partner; a code is
Hermitian self-dual when its Gram matrix vanishes and k = n/2.

The unique quaternary Hermitian self-dual [8,4,4] code ships with its
permutation stabilizer generators and a 30-element set of column
permutation class representatives: composing a representative after any
stabilizer element reaches every permutation of the 8 columns exactly
once.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Sequence

from . import ring
from .perms import Perm, identity, inverse, parse_cycles


class HermitianError(ValueError):
    """Invalid Hermitian code data."""


_FIELDS = ("I1", "I2")


def _ops(field: str) -> tuple[Callable, Callable, Callable, int]:
    """(add, mul, conj, one) for the given field tagset."""
    if field == "I1":
        return ring.f4_add, ring.f4_mul, lambda a: ring.F4_CONJ[a], ring.F4_ONE
    if field == "I2":
        return (
            lambda a, b: ring.F64_ADD[a][b],
            ring.f64_mul,
            lambda a: ring.F64_CONJ[a],
            ring.f64_from_exp(0),
        )
    raise HermitianError(f"unknown field {field!r}")


def _field_rank(rows: Sequence[Sequence[int]], field: str) -> int:
    add, mul, _, one = _ops(field)
    inv = _field_inverse(field)
    work = [list(r) for r in rows]
    ncols = len(work[0]) if work else 0
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(work)):
            if work[r][col]:
                piv = r
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        scale = inv(work[rank][col])
        work[rank] = [mul(scale, x) for x in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col]:
                factor = work[r][col]
                work[r] = [add(x, mul(factor, y)) for x, y in zip(work[r], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank


def _field_inverse(field: str) -> Callable[[int], int]:
    if field == "I1":
        table = (0, 1, 3, 2)
        return lambda a: table[a]

    def inv64(a: int) -> int:
        if a == 0:
            raise ZeroDivisionError
        return (63 - (a - 1)) % 63 + 1

    return inv64


@dataclass(frozen=True)
class HermitianCode:
    field: str
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.field not in _FIELDS:
            raise HermitianError(f"unknown field {self.field!r}")
        if len(self.rows) != 4 or any(len(r) != 8 for r in self.rows):
            raise HermitianError("wrong dimensions: need 4 rows of 8 symbols")
        limit = 4 if self.field == "I1" else 64
        if any(not 0 <= s < limit for r in self.rows for s in r):
            raise HermitianError("malformed entry: symbol out of range")
        if _field_rank(self.rows, self.field) != 4:
            raise HermitianError("rows are linearly dependent")

    @property
    def n(self) -> int:
        return 8

    @property
    def k(self) -> int:
        return 4

    def codewords(self):
        """All 256 codewords as symbol tuples (small field only)."""
        if self.field != "I1":
            raise HermitianError("enumeration too large")
        add, mul, _, _ = _ops(self.field)
        words = [tuple([0] * 8)]
        for row in self.rows:
            options = [tuple([0] * 8)] + [
                tuple(mul(c, s) for s in row) for c in range(1, 4)
            ]
            words = [
                tuple(add(a, b) for a, b in zip(w, opt))
                for w in words
                for opt in options
            ]
        return words


def hermitian_inner(field: str, g: Sequence[int], h: Sequence[int]) -> int:
    add, mul, conj_, _ = _ops(field)
    acc = 0
    for a, b in zip(g, h):
        acc = add(acc, mul(a, conj_(b)))
    return acc


def is_hermitian_self_dual(code: HermitianCode) -> bool:
    rows = code.rows
    return all(
        hermitian_inner(code.field, rows[i], rows[j]) == 0
        for i in range(4)
        for j in range(i, 4)
    )


def hermitian_min_weight(code: HermitianCode) -> int:
    """Minimum symbol weight, found by complement-column kernel ranks."""
    from itertools import combinations

    for w in range(1, 9):
        for support in combinations(range(8), w):
            comp = [c for c in range(8) if c not in support]
            sub = [[row[c] for c in comp] for row in code.rows]
            if _field_rank(sub, code.field) < 4:
                return w
    raise HermitianError("degenerate code")


# --- the quaternary [8,4,4] anchor code ---------------------------------------
_OCTET_ROWS = ("10000111", "01001011", "00101101", "00011110")

_PAUT_CYCLES = ("(47)(56)", "(45)(67)", "(12)(3586)", "(24)(68)", "(34)(78)")

_TRANSVERSAL_CYCLES = (
    "()", "(78)", "(67)", "(678)", "(687)", "(68)", "(56)", "(56)(78)", "(567)",
    "(5678)", "(5687)", "(568)", "(576)", "(5786)", "(57)", "(578)", "(57)(68)",
    "(5768)", "(5876)", "(586)", "(587)", "(58)", "(5867)", "(58)(67)", "(45678)",
    "(4568)", "(4578)", "(45768)", "(458)", "(458)(67)",
)


def e8_code() -> HermitianCode:
    """The quaternary Hermitian self-dual [8,4,4] code."""
    rows = tuple(
        tuple(ring.F4_ONE if ch == "1" else 0 for ch in line) for line in _OCTET_ROWS
    )
    return HermitianCode("I1", rows)


def paut_generators() -> list[Perm]:
    """Generators of the column-permutation stabilizer of e8 (order 1344)."""
    return [parse_cycles(s, 8) for s in _PAUT_CYCLES]


def transversal_T() -> list[Perm]:
    """30 column-permutation class representatives relative to the stabilizer.

    With stabilizer P, the sets {t o p : p in P} for the 30 entries are
    pairwise disjoint and cover all of S_8.
    """
    return [parse_cycles(s, 8) for s in _TRANSVERSAL_CYCLES]


@dataclass(frozen=True)
class MonomialTransform:
    tau: Perm
    diag: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.tau) != 8 or sorted(self.tau) != list(range(8)):
            raise HermitianError("tau must be a permutation of 8 columns")
        if len(self.diag) != 8:
            raise HermitianError("diag must have 8 entries")
        if any(d not in (1, 2, 3) for d in self.diag):
            raise HermitianError("diag entries must be nonzero small-field tags")


def apply_monomial(code: HermitianCode, m: MonomialTransform) -> HermitianCode:
    """Permute columns by tau, then scale column j by diag[j].

    Column c of the input lands at position tau(c); the result stays
    Hermitian self-dual because scaling multiplies each Gram entry by a
    norm-1 factor.
    """
    if code.field != "I1":
        raise HermitianError("monomial transforms act on the quaternary code")
    tinv = inverse(m.tau)
    rows = tuple(
        tuple(ring.f4_mul(m.diag[j], row[tinv[j]]) for j in range(8))
        for row in code.rows
    )
    return HermitianCode("I1", rows)


def diag_from_index(idx: int) -> tuple[int, ...]:
    """Decode a base-3 integer 0..6560 into 8 nonzero diagonal tags.

    Digit i (least significant first) scales column i; digit values 0,1,2
    map to the identity, omega, omega-bar tags.
    """
    if not 0 <= idx < 3**8:
        raise HermitianError("diag index out of range")
    digits = []
    for _ in range(8):
        digits.append(idx % 3 + 1)
        idx //= 3
    return tuple(digits)


def diag_to_index(diag: Sequence[int]) -> int:
    idx = 0
    for d in reversed(diag):
        if d not in (1, 2, 3):
            raise HermitianError("diag entries must be nonzero small-field tags")
        idx = idx * 3 + (d - 1)
    return idx


# --- binary lifts --------------------------------------------------------------
def binary_lift_rows(code: HermitianCode) -> list[int]:
    """72-bit generator rows of the binary image under the block expansion.

    Over I2 each code row expands through the multipliers alpha^0..alpha^5
    (6 binary rows); over I1 through the identity and omega (2 rows).
    """
    out = []
    if code.field == "I2":
        multipliers = [ring.f64_from_exp(k) for k in range(6)]
        for row in code.rows:
            for mult in multipliers:
                out.append(
                    ring.phi_inv_row([ring.f64_mul(mult, s) for s in row], "I2")
                )
    else:
        for row in code.rows:
            for mult in (ring.F4_ONE, ring.F4_OMEGA):
                out.append(ring.phi_inv_row([ring.f4_mul(mult, s) for s in row], "I1"))
    return out


def binary_lift_min_distance(code: HermitianCode, early_abort_below: int | None = None):
    from .code import BinaryCode
    from .mindist import min_distance

    rows = binary_lift_rows(code)
    return min_distance(BinaryCode(72, tuple(rows)), early_abort_below=early_abort_below)


# --- acquisition of big-field candidates ---------------------------------------
def _mat_mul(a, b, field="I2"):
    add, mul, _, _ = _ops(field)
    size = len(a)
    out = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            acc = 0
            for t in range(size):
                acc = add(acc, mul(a[i][t], b[t][j]))
            out[i][j] = acc
    return out


def _is_unitary(b, field="I2") -> bool:
    add, mul, conj_, one = _ops(field)
    size = len(b)
    for i in range(size):
        for j in range(i, size):
            acc = 0
            for t in range(size):
                acc = add(acc, mul(b[i][t], conj_(b[j][t])))
            if acc != (one if i == j else 0):
                return False
    return True


_NORM_ONE = tuple(ring.f64_from_exp(7 * t) for t in range(9))


def _random_unitary(rng: random.Random, size: int = 4) -> list[list[int]]:
    """Product of random elementary unitary factors over the big field."""
    add, mul, conj_, one = _ops("I2")
    b = [[one if i == j else 0 for j in range(size)] for i in range(size)]
    n_factors = rng.randrange(6, 12)
    for _ in range(n_factors):
        kind = rng.randrange(3)
        if kind == 0:
            diag = [rng.choice(_NORM_ONE) for _ in range(size)]
            factor = [
                [diag[i] if i == j else 0 for j in range(size)] for i in range(size)
            ]
        elif kind == 1:
            perm = list(range(size))
            rng.shuffle(perm)
            factor = [
                [one if j == perm[i] else 0 for j in range(size)] for i in range(size)
            ]
        else:
            while True:
                x = rng.randrange(64)
                y = rng.randrange(64)
                if ring.F64_ADD[ring.f64_mul(x, conj_(x))][ring.f64_mul(y, conj_(y))] == one:
                    break
            t = rng.choice(_NORM_ONE)
            i, j = rng.sample(range(size), 2)
            factor = [[one if a == c else 0 for c in range(size)] for a in range(size)]
            factor[i][i] = x
            factor[i][j] = y
            factor[j][i] = mul(t, conj_(y))
            factor[j][j] = mul(t, conj_(x))
        b = _mat_mul(b, factor)
    return b


def code_from_unitary(b) -> HermitianCode:
    """[I | B] rows; Hermitian self-dual exactly when B is unitary."""
    one = ring.f64_from_exp(0)
    rows = []
    for i in range(4):
        row = [one if j == i else 0 for j in range(4)] + list(b[i])
        rows.append(tuple(row))
    return HermitianCode("I2", tuple(rows))


def generate_m2_random(
    seed: int,
    count: int,
    min_binary_distance: int = 16,
    max_attempts: int = 200000,
) -> list[HermitianCode]:
    """Randomized search for big-field components with a heavy binary lift.

    Deterministic for a fixed seed.  Each candidate is [I | B] for a random
    unitary B, kept when its symbol distance is 4 or 5 and its binary lift
    certifies minimum distance >= min_binary_distance.
    """
    rng = random.Random(seed)
    found: list[HermitianCode] = []
    seen: set[tuple] = set()
    for _ in range(max_attempts):
        if len(found) >= count:
            break
        b = _random_unitary(rng)
        if not _is_unitary(b):
            continue
        code = code_from_unitary(b)
        if code.rows in seen:
            continue
        seen.add(code.rows)
        if hermitian_min_weight(code) < 4:
            continue
        if min_binary_distance > 0:
            verdict = binary_lift_min_distance(code, early_abort_below=min_binary_distance)
            if not verdict.meets(min_binary_distance):
                continue
        found.append(code)
    if len(found) < count:
        raise HermitianError(
            f"found only {len(found)}/{count} candidates in {max_attempts} attempts"
        )
    return found


# --- .gm64 text format ----------------------------------------------------------
def write_gm64(codes: Sequence[HermitianCode]) -> str:
    blocks = []
    for code in codes:
        if code.field != "I2":
            raise HermitianError("gm64 stores big-field codes only")
        lines = []
        for row in code.rows:
            lines.append(" ".join("*" if s == 0 else str(s - 1) for s in row))
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def parse_gm64(text: str) -> list[HermitianCode]:
    """Parse and validate; raises HermitianError with a specific reason."""
    blocks = [b for b in text.strip().split("\n\n") if b.strip()]
    if not blocks:
        raise HermitianError("empty file")
    codes = []
    for block in blocks:
        lines = [ln for ln in block.split("\n") if ln.strip()]
        if len(lines) != 4:
            raise HermitianError(f"wrong dimensions: need 4 rows, got {len(lines)}")
        rows = []
        for ln in lines:
            toks = ln.split()
            if len(toks) != 8:
                raise HermitianError(f"wrong dimensions: need 8 columns, got {len(toks)}")
            row = []
            for tok in toks:
                if tok == "*":
                    row.append(0)
                    continue
                try:
                    k = int(tok)
                except ValueError as exc:
                    raise HermitianError(f"malformed entry {tok!r}") from exc
                if not 0 <= k <= 62:
                    raise HermitianError(f"malformed entry: exponent {k} out of range")
                row.append(k + 1)
            rows.append(tuple(row))
        code = HermitianCode("I2", tuple(rows))
        if not is_hermitian_self_dual(code):
            raise HermitianError("matrix is not Hermitian self-dual")
        d = hermitian_min_weight(code)
        if not 4 <= d <= 5:
            raise HermitianError(f"distance below Singleton window: d={d}")
        codes.append(code)
    return codes


def ingest_m2(path) -> list[HermitianCode]:
    from pathlib import Path

    return parse_gm64(Path(path).read_text(encoding="ascii"))


def save_gm64(codes: Sequence[HermitianCode], path) -> None:
    from pathlib import Path

    Path(path).write_text(write_gm64(codes), encoding="ascii")


def content_key(code: HermitianCode) -> str:
    """Stable content hash of the symbol matrix (dedup/manifest key)."""
    import hashlib

    payload = code.field + ";" + ";".join(
        ",".join(str(s) for s in row) for row in code.rows
    )
    return hashlib.sha256(payload.encode()).hexdigest()[:16]
