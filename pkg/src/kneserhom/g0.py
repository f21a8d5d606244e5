"""Finite-depth model of the single-bit-flip graph on binary sequences.

Binary strings of length ``L`` are ints with bit ``j`` holding position ``j``.
A family fixes a label ``e(n) < d`` and a string ``s_n`` of length ``n`` for
every ``n < L``; ``x`` has an edge flipping bit ``n`` whenever ``s_n`` is a
prefix of ``x``, and that edge carries label ``e(n)``.

Density can only hold up to some depth ``D``: for each label ``i`` every
string of length ``<= D`` must be extended by some ``s_n`` with ``e(n) = i``,
which needs ``L - D >= d * 2**D``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .errors import BadParams, Infeasible


def max_density_depth(L: int, d: int) -> int | None:
    depth = None
    D = 0
    while L - D >= d * 2**D:
        depth = D
        D += 1
    return depth


@dataclass(frozen=True)
class DenseFamily:
    L: int
    d: int
    depth: int
    labels: tuple[int, ...]  # e(n)
    strings: tuple[int, ...]  # s_n, n bits
    seed: int

    def is_prefix(self, n: int, x: int) -> bool:
        return x & ((1 << n) - 1) == self.strings[n]


@dataclass(frozen=True)
class FlipEdge:
    x: int
    y: int
    position: int
    label: int


def build_dense_family(L: int, d: int, seed: int = 0, depth: int | None = None) -> DenseFamily:
    """Seeded family that is dense to ``depth`` (the deepest feasible by default).

    Labels go round-robin from index ``depth`` on, and each label's strings
    cycle through every length-``depth`` prefix in a shuffled order before
    being padded with random bits.
    """
    if L < 1 or d < 1:
        raise BadParams(f"need L >= 1 and d >= 1, got L={L}, d={d}")
    best = max_density_depth(L, d)
    if depth is None:
        depth = best
    if best is None or depth > best or depth < 0:
        raise Infeasible(f"L={L} is too short for density depth {depth} with {d} labels")
    rng = random.Random(seed)
    order = rng.sample(range(d), d)
    prefixes = list(range(2**depth))
    cycles = {i: rng.sample(prefixes, len(prefixes)) for i in range(d)}
    used = {i: 0 for i in range(d)}
    labels, strings = [], []
    for n in range(L):
        i = order[(n - depth) % d]
        labels.append(i)
        if n < depth:
            strings.append(rng.getrandbits(n) if n else 0)
            continue
        t = cycles[i][used[i] % len(prefixes)]
        used[i] += 1
        tail = rng.getrandbits(n - depth) if n > depth else 0
        strings.append(t | (tail << depth))
    return DenseFamily(L, d, depth, tuple(labels), tuple(strings), seed)


def check_density(fam: DenseFamily, depth: int | None = None) -> bool:
    """Brute-force check: every string of length <= depth is extended by some
    ``s_n`` of each label."""
    depth = fam.depth if depth is None else depth
    for i in range(fam.d):
        mine = [n for n in range(fam.L) if fam.labels[n] == i]
        for length in range(depth + 1):
            for bits in product((0, 1), repeat=length):
                t = sum(b << j for j, b in enumerate(bits))
                if not any(n >= length and fam.strings[n] & ((1 << length) - 1) == t for n in mine):
                    return False
    return True


def witnesses(fam: DenseFamily, i: int, x: int) -> list[int]:
    """Increasing list of n < L with e(n) = i and s_n a prefix of x."""
    return [n for n in range(fam.L) if fam.labels[n] == i and fam.is_prefix(n, x)]


def flipped_position(fam: DenseFamily, i: int, m: int, x: int) -> int | None:
    found = -1
    for n in range(fam.L):
        if fam.labels[n] == i and fam.is_prefix(n, x):
            found += 1
            if found == m:
                return n
    return None


def flip_map(fam: DenseFamily, i: int, m: int, x: int) -> int | None:
    """Neighbour of ``x`` across its ``m``-th edge of label ``i``; None if that
    edge lies beyond the truncation depth."""
    n = flipped_position(fam, i, m, x)
    return None if n is None else x ^ (1 << n)


def alpha(fam: DenseFamily, x: int, y: int) -> int:
    diff = x ^ y
    if not diff or diff & (diff - 1):
        raise BadParams("strings must differ in exactly one bit")
    n = diff.bit_length() - 1
    if not fam.is_prefix(n, x):
        raise BadParams(f"bit {n} is not an edge position for x")
    return fam.labels[n]


def g0_edges_at_depth(fam: DenseFamily, x: int) -> list[FlipEdge]:
    if x >> fam.L:
        raise BadParams(f"x has more than {fam.L} bits")
    return [
        FlipEdge(x, x ^ (1 << n), n, fam.labels[n])
        for n in range(fam.L)
        if fam.is_prefix(n, x)
    ]


def bits_to_int(text: str) -> int:
    return sum(1 << j for j, ch in enumerate(text) if ch == "1")


def int_to_bits(x: int, L: int) -> str:
    return "".join("1" if x >> j & 1 else "0" for j in range(L))


def check_involution(fam: DenseFamily, m_max: int = 3) -> int:
    """Count (x, i, m) with f_{i,m}(f_{i,m}(x)) != x where defined; exhaustive."""
    failures = 0
    for x in range(1 << fam.L):
        for i in range(fam.d):
            wit = witnesses(fam, i, x)
            for m in range(min(m_max + 1, len(wit))):
                if flip_map(fam, i, m, x ^ (1 << wit[m])) != x:
                    failures += 1
    return failures


def check_prefix_determination(fam: DenseFamily, m_max: int = 3) -> int:
    """Count (x, i, m) where rewriting bits at and above the flipped position
    n changes which bit f_{i,m} flips. The position should depend only on
    the first n bits."""
    full = (1 << fam.L) - 1
    failures = 0
    for x in range(1 << fam.L):
        for i in range(fam.d):
            wit = witnesses(fam, i, x)
            for m in range(min(m_max + 1, len(wit))):
                n = wit[m]
                for z in (x ^ (1 << n), x ^ (full & ~((1 << n) - 1))):
                    if flipped_position(fam, i, m, z) != n:
                        failures += 1
    return failures


def check_labels(fam: DenseFamily) -> dict:
    """Edge symmetry and label coverage over all of 2^L.

    Returns counts of asymmetric edges, edges whose alpha disagrees with the
    stored label, and labels that never occur.
    """
    asymmetric = mislabelled = 0
    seen = set()
    for x in range(1 << fam.L):
        for e in g0_edges_at_depth(fam, x):
            seen.add(e.label)
            if not any(r.y == x and r.position == e.position for r in g0_edges_at_depth(fam, e.y)):
                asymmetric += 1
            if alpha(fam, x, e.y) != e.label:
                mislabelled += 1
    return {"asymmetric": asymmetric, "mislabelled": mislabelled, "missing_labels": sorted(set(range(fam.d)) - seen)}
