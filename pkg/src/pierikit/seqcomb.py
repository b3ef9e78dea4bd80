"""Strictly decreasing index sequences and their Pieri-type combinatorics.

A DecSeq indexes a Schubert variety of m-planes relative to a complete flag
in k^n (entries are flag levels, largest first).  This module knows nothing
about linear algebra: it provides the codimension, the Bruhat order, the
Pieri sets alpha*r, duality, the partition dictionary, and the branching
tree whose root-to-leaf chains drive everything downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class DecSeq:
    """Strictly decreasing sequence n >= a_1 > ... > a_m >= 1."""

    n: int
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if self.n < 1:
            raise ValueError("ambient parameter n must be positive")
        prev = self.n + 1
        for x in self.entries:
            if not 1 <= x < prev:
                raise ValueError(
                    f"entries must satisfy n >= a_1 > ... > a_m >= 1, got {self.entries}"
                )
            prev = x

    @property
    def m(self) -> int:
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self):
        if self.n <= 9:
            return "".join(str(x) for x in self.entries)
        return ",".join(str(x) for x in self.entries)

    def bump(self, i: int, amount: int = 1) -> "DecSeq":
        """New sequence with entry i (1-indexed) increased; validates."""
        e = list(self.entries)
        e[i - 1] += amount
        return DecSeq(self.n, tuple(e))

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m, "entries": list(self.entries)}


def codim(a: DecSeq) -> int:
    """Codimension of the indexed variety: sum of a_i - i."""
    return sum(x - i for i, x in enumerate(a.entries, start=1))


def bruhat_leq(a: DecSeq, b: DecSeq) -> bool:
    """Componentwise order; a <= b means the b-variety sits inside the a-one."""
    if a.n != b.n or a.m != b.m:
        raise ValueError("sequences must share n and m")
    return all(x <= y for x, y in zip(a.entries, b.entries))


def pieri_increment(a: DecSeq, b: DecSeq):
    """r >= 0 with b in a*r, or None.

    Membership means the interlacing b_1 >= a_1 > b_2 >= a_2 > ... > b_m >= a_m
    (entries beyond n never arise because DecSeq caps at n).
    """
    if a.n != b.n or a.m != b.m:
        return None
    for i in range(a.m):
        if b.entries[i] < a.entries[i]:
            return None
        if i > 0 and b.entries[i] >= a.entries[i - 1]:
            return None
    return codim(b) - codim(a)


def in_pieri_set(a: DecSeq, b: DecSeq, r: int) -> bool:
    return pieri_increment(a, b) == r


@lru_cache(maxsize=None)
def pieri_set(a: DecSeq, r: int) -> tuple[DecSeq, ...]:
    """All b with b in a*r, lexicographically decreasing.

    a*0 is {a}; sequences whose first entry would exceed n are silently
    dropped (their varieties are empty).
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    caps = [a.n - a.entries[0]]
    for i in range(1, a.m):
        caps.append(a.entries[i - 1] - 1 - a.entries[i])
    out = []

    def rec(i, left, acc):
        if i == a.m:
            if left == 0:
                out.append(DecSeq(a.n, tuple(acc)))
            return
        for d in range(min(left, caps[i]), -1, -1):
            acc.append(a.entries[i] + d)
            rec(i + 1, left - d, acc)
            acc.pop()

    rec(0, r, [])
    out.sort(key=lambda s: s.entries, reverse=True)
    return tuple(out)


def first_diff_index(a: DecSeq, b: DecSeq) -> int:
    """Least i (1-indexed) with b_i > a_i, for b in a*r, r >= 1."""
    r = pieri_increment(a, b)
    if r is None or r == 0:
        raise ValueError(f"{b} does not lie in any a*r with r >= 1 for a = {a}")
    for i, (x, y) in enumerate(zip(a.entries, b.entries), start=1):
        if y > x:
            return i
    raise AssertionError("unreachable")


def dual(a: DecSeq) -> DecSeq:
    """The sequence (n+1-a_m, ..., n+1-a_1)."""
    return DecSeq(a.n, tuple(a.n + 1 - x for x in reversed(a.entries)))


def lambda_of(a: DecSeq) -> tuple[int, ...]:
    """Partition (a_1-m, a_2-m+1, ..., a_m-1), trailing zeros stripped."""
    m = a.m
    parts = [x - m + i for i, x in enumerate(a.entries)]
    return trim_partition(parts)


def alpha_of(lam, n: int, m: int) -> DecSeq:
    """Inverse of lambda_of: a_i = lam_i + m - i + 1, padding lam with zeros."""
    lam = trim_partition(lam)
    if len(lam) > m:
        raise ValueError(f"partition {lam} has more than {m} parts")
    if lam and lam[0] > n - m:
        raise ValueError(f"partition {lam} does not fit: first part exceeds {n - m}")
    padded = list(lam) + [0] * (m - len(lam))
    return DecSeq(n, tuple(p + m - i for i, p in enumerate(padded)))


def trim_partition(parts) -> tuple[int, ...]:
    parts = [int(p) for p in parts]
    if any(p < 0 for p in parts):
        raise ValueError("partition parts must be nonnegative")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError("partition parts must weakly decrease")
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def covers_under(a: DecSeq, b: DecSeq, g: DecSeq) -> bool:
    """Whether g covers b in the branching order rooted at a.

    Requires b in a*r and g in a*(r+1) for the same r; the cover holds when
    g in b*1 and the first-difference index of g is the same against a and b.
    """
    rb = pieri_increment(a, b)
    rg = pieri_increment(a, g)
    if rb is None or rg is None or rg != rb + 1:
        raise ValueError("expected b in a*r and g in a*(r+1)")
    if pieri_increment(b, g) != 1:
        return False
    return first_diff_index(a, g) == first_diff_index(b, g)


@dataclass(frozen=True)
class PieriTree:
    """Levels a*0, a*1, ..., a*b with the unique-parent covering edges."""

    root: DecSeq
    depth: int
    levels: tuple[tuple[DecSeq, ...], ...]
    edges: tuple[tuple[DecSeq, DecSeq], ...]

    def parent_of(self, g: DecSeq) -> DecSeq:
        for p, c in self.edges:
            if c == g:
                return p
        raise KeyError(g)

    def children_of(self, b: DecSeq) -> tuple[DecSeq, ...]:
        return tuple(c for p, c in self.edges if p == b)

    def chains(self) -> tuple[tuple[DecSeq, ...], ...]:
        """All root-to-leaf chains, ordered by leaf (lex decreasing)."""
        parents = {c: p for p, c in self.edges}
        out = []
        for leaf in self.levels[-1]:
            chain = [leaf]
            while chain[-1] != self.root:
                chain.append(parents[chain[-1]])
            out.append(tuple(reversed(chain)))
        return tuple(out)


def tree_chains(a: DecSeq, b: int):
    """Build the depth-b branching tree and return (tree, chains).

    Construction checks the partition property: every node at level i+1 has
    exactly one parent at level i.
    """
    if b < 0:
        raise ValueError("depth must be nonnegative")
    levels = [pieri_set(a, i) for i in range(b + 1)]
    edges = []
    for i in range(b):
        for g in levels[i + 1]:
            parents = [p for p in levels[i] if covers_under(a, p, g)]
            if len(parents) != 1:
                raise AssertionError(
                    f"node {g} at level {i + 1} has {len(parents)} parents"
                )
            edges.append((parents[0], g))
    tree = PieriTree(a, b, tuple(levels), tuple(edges))
    return tree, tree.chains()
