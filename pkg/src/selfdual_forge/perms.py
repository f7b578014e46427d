"""Permutations on small point sets, stored as tuples mapping index -> image.

All permutations here are 0-based internally.  Cycle notation in text (files,
CLI output, hard-coded constants) uses 1-based points.  Composition follows
the "apply right factor first" convention: ``compose(p, q)`` maps ``i`` to
``p[q[i]]``.
"""

from __future__ import annotations

from itertools import permutations as _all_permutations
from typing import Iterable, Sequence

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """p after q: (compose(p, q))(i) = p(q(i))."""
    return tuple(p[q[i]] for i in range(len(q)))


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def parse_cycles(text: str, n: int) -> Perm:
    """Parse cycle notation like "(12)(3586)" or "(2,4,3)(5,7)(6,8)".

    Points are 1-based in the text.  A cycle without commas is read one
    digit per point, so all points must be <= 9 in that form.  "()" is the
    identity.
    """
    perm = list(range(n))
    seen: set[int] = set()
    body = text.replace(" ", "")
    if body in ("", "()"):
        return tuple(perm)
    if not body.startswith("(") or not body.endswith(")"):
        raise ValueError(f"bad cycle notation: {text!r}")
    for grp in body[1:-1].split(")("):
        if not grp:
            continue
        if "," in grp:
            pts = [int(tok) - 1 for tok in grp.split(",")]
        else:
            pts = [int(ch) - 1 for ch in grp]
        if any(not 0 <= p < n for p in pts):
            raise ValueError(f"point out of range in {text!r}")
        if len(set(pts)) != len(pts) or seen & set(pts):
            raise ValueError(f"repeated point in {text!r}")
        seen |= set(pts)
        for idx, p in enumerate(pts):
            perm[p] = pts[(idx + 1) % len(pts)]
    return tuple(perm)


def format_cycles(p: Perm) -> str:
    """Render in 1-based cycle notation; identity renders as "()"."""
    n = len(p)
    seen = [False] * n
    parts = []
    for start in range(n):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = p[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = p[nxt]
        parts.append("(" + ",".join(str(x + 1) for x in cyc) + ")")
    return "".join(parts) if parts else "()"


def closure(generators: Sequence[Perm]) -> frozenset[Perm]:
    """Group generated by the given permutations (breadth-first products)."""
    if not generators:
        raise ValueError("need at least one generator")
    n = len(generators[0])
    seen: set[Perm] = {identity(n)} | set(generators)
    frontier = list(seen)
    while frontier:
        new = []
        for g in frontier:
            for h in generators:
                prod = compose(g, h)
                if prod not in seen:
                    seen.add(prod)
                    new.append(prod)
        frontier = new
    return frozenset(seen)


def coset(group: Iterable[Perm], rep: Perm) -> frozenset[Perm]:
    """The coset {rep o g : g in group} (rep applied after each element)."""
    return frozenset(compose(rep, g) for g in group)


def coset_transversal(group: frozenset[Perm], n: int) -> list[Perm]:
    """Lexicographically least representatives of all cosets {p o g}.

    Deterministic: enumerates S_n in tuple-lex order and keeps the first
    member of each previously unseen coset.  The identity comes first.
    """
    covered: set[Perm] = set()
    reps: list[Perm] = []
    for cand in _all_permutations(range(n)):
        if cand in covered:
            continue
        reps.append(cand)
        covered |= coset(group, cand)
    return reps


def apply_to_word(word: int, p: Perm) -> int:
    """Permute bit positions of an int-packed word: bit i moves to p[i]."""
    out = 0
    i = 0
    while word:
        if word & 1:
            out |= 1 << p[i]
        word >>= 1
        i += 1
    return out


def permutation_order(p: Perm) -> int:
    from math import lcm

    n = len(p)
    seen = [False] * n
    order = 1
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        cur = start
        while not seen[cur]:
            seen[cur] = True
            cur = p[cur]
            length += 1
        order = lcm(order, max(length, 1))
    return order
