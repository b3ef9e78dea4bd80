"""Schubert conditions on m-planes, their incidence cells, and first-order data.

Everything is exact: membership predicates reduce to ranks of rational
matrices, witness subspaces are built vector by vector and post-verified,
and tangent codimensions come from literal rank computations on the space
of maps H -> V/H.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .exactla import (
    Chart,
    Flag,
    Subspace,
    annihilator_basis,
    flag_from_basis,
    frac,
    intersect,
    is_zero_vec,
    quotient_subspace,
    rank,
    span,
    sum_span,
    unit_vector,
    vec_add,
    vec_scale,
)
from .seqcomb import DecSeq, first_diff_index, pieri_set

IMPROPER = "Improper"
TRANSVERSE_IRREDUCIBLE = "TransverseIrreducible"
TRANSVERSE_REDUCIBLE = "TransverseReducible"
TRANSVERSE_OTHER = "TransverseOther"


# ---------------------------------------------------------------------------
# flags


def standard_flag(n: int) -> Flag:
    """The descending coordinate flag: space j is spanned by e_j, ..., e_n."""
    return flag_from_basis([unit_vector(n, i) for i in range(1, n + 1)])


def random_flag(n: int, seed: int = 0) -> Flag:
    """Flag on a seeded random rational basis; resampled until invertible."""
    rng = random.Random(seed)
    while True:
        rows = [tuple(frac(rng.randint(-9, 9)) for _ in range(n)) for _ in range(n)]
        if rank(rows) == n:
            return flag_from_basis(rows)


def adapted_basis(flag: Flag) -> tuple:
    """Vectors u_1, ..., u_n with space j spanned by u_j, ..., u_n.

    u_j is the first canonical basis row of space j outside space j+1, so
    the choice is deterministic given the flag.
    """
    n = flag.ambient
    out = []
    for j in range(1, n + 1):
        deeper = flag.subspace(j + 1)
        for row in flag.subspace(j).basis:
            if not deeper.contains_vector(row):
                out.append(row)
                break
        else:
            raise ValueError("flag spaces do not drop by one")
    return tuple(out)


def meets_properly(L: Subspace, flag: Flag) -> bool:
    """Generic intersection dimensions with every flag space."""
    n = flag.ambient
    for j in range(1, n + 1):
        fj = flag.subspace(j)
        want = max(0, fj.dim + L.dim - n)
        if intersect(fj, L).dim != want:
            return False
    return True


# ---------------------------------------------------------------------------
# membership predicates


def schubert_member(H: Subspace, a: DecSeq, flag: Flag) -> bool:
    """Does the m-plane H satisfy dim H meet F_{a_j} >= j for all j?

    Computed twice: once through intersections, once through quotients
    (dim of the image of H in V/F_{a_j} at most m-j).  The two answers are
    asserted equal; they use disjoint code paths in the linear algebra.
    """
    m = a.m
    if H.dim != m:
        raise ValueError(f"expected a {m}-plane, got dim {H.dim}")
    primary = True
    dual = True
    for j in range(1, m + 1):
        fj = flag.subspace(a.entries[j - 1])
        if intersect(H, fj).dim < j:
            primary = False
        if quotient_subspace(H, fj).dim > m - j:
            dual = False
    assert primary == dual, "intersection and quotient tests disagree"
    return primary


def x_member(H: Subspace, b: DecSeq, j: int, flag: Flag, L: Subspace) -> bool:
    """Membership in the incidence subvariety: in the Schubert set of b and
    meeting L inside flag space b_j."""
    if not 1 <= j <= b.m:
        raise ValueError(f"position {j} out of range")
    if not schubert_member(H, b, flag):
        return False
    fj = flag.subspace(b.entries[j - 1])
    return intersect(intersect(H, fj), L).dim >= 1


# ---------------------------------------------------------------------------
# the trichotomy classifier


@dataclass(frozen=True)
class DimEntry:
    j: int
    flag_index: int
    meet_dim: int
    critical: int


@dataclass(frozen=True)
class Classification:
    verdict: str
    entries: tuple[DimEntry, ...]
    equality_set: tuple[int, ...]
    s: int

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "s": self.s,
            "table": [
                {
                    "j": e.j,
                    "flag_index": e.flag_index,
                    "dim": e.meet_dim,
                    "critical": e.critical,
                }
                for e in self.entries
            ],
            "equality_set": list(self.equality_set),
        }


def classify_pieri(a: DecSeq, flag: Flag, L: Subspace, s: int) -> Classification:
    """Sort the pair (flag, L) into the trichotomy governing the intersection
    of the Schubert set of a with the special condition on L.

    Verdicts, tested in this order:
      Improper: some nonzero meet exceeds its critical dimension.
      TransverseIrreducible: strictly sub-critical or zero meets below the
        last row, and the last flag space meets L properly.
      TransverseReducible: nonzero critical equality at every row; the
        intersection then breaks into one piece per equality row.
      TransverseOther: transverse but neither of the two named shapes.
    """
    n, m = a.n, a.m
    if L.dim != n + 1 - m - s:
        raise ValueError(
            f"special subspace must have dim {n + 1 - m - s}, got {L.dim}"
        )
    entries = []
    for j in range(1, m + 1):
        aj = a.entries[j - 1]
        d = intersect(flag.subspace(aj), L).dim
        entries.append(DimEntry(j, aj, d, n + 2 - aj - j - s))
    entries = tuple(entries)
    equality = tuple(e.j for e in entries if e.meet_dim and e.meet_dim == e.critical)

    if any(e.meet_dim and e.meet_dim > e.critical for e in entries):
        verdict = IMPROPER
    elif all(
        e.meet_dim == 0 or e.meet_dim < e.critical for e in entries[:-1]
    ) and entries[-1].meet_dim == max(0, entries[-1].critical):
        verdict = TRANSVERSE_IRREDUCIBLE
    elif len(equality) == m:
        verdict = TRANSVERSE_REDUCIBLE
    else:
        verdict = TRANSVERSE_OTHER
    return Classification(verdict, entries, equality, s)


# ---------------------------------------------------------------------------
# incidence cells


def cell_index(a: DecSeq, s: int) -> DecSeq:
    """Index of the Schubert cell whose dense part the incidence cell fills.

    Take [n] minus the entries of a minus the strip of s-1 integers above
    a_1; when a_1 sits too close to n for the strip to fit, fall back to the
    smallest n+1-m-s integers not in a.
    """
    n, m = a.n, a.m
    if s < 1:
        raise ValueError("cell parameter must be at least 1")
    avail = [i for i in range(1, n + 1) if i not in a.entries]
    if a.entries[0] <= n + 1 - s:
        strip = set(range(a.entries[0] + 1, a.entries[0] + s))
        chosen = [i for i in avail if i not in strip]
    else:
        chosen = avail[: n + 1 - m - s]
    return DecSeq(n, tuple(sorted(chosen, reverse=True)))


def cell_member(L: Subspace, a: DecSeq, s: int, flag: Flag) -> bool:
    """Membership in the incidence cell: the meet with the top flag space is
    the flag space s deeper, and below each further row the meet stabilizes
    one step down at its critical dimension."""
    n, m = a.n, a.m
    if L.dim != n + 1 - m - s:
        return False
    f1 = flag.subspace(a.entries[0])
    if intersect(f1, L) != flag.subspace(a.entries[0] + s):
        return False
    for j in range(2, m + 1):
        aj = a.entries[j - 1]
        meet = intersect(flag.subspace(aj), L)
        if meet != intersect(flag.subspace(aj + 1), L):
            return False
        if meet.dim != n + 2 - aj - j - s:
            return False
    return True


@dataclass(frozen=True)
class ProfileEntry:
    i: int
    expected: int
    actual: int


@dataclass(frozen=True)
class ProfileReport:
    entries: tuple[ProfileEntry, ...]

    @property
    def passed(self) -> bool:
        return all(e.expected == e.actual for e in self.entries)

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "profile": [
                {"i": e.i, "expected": e.expected, "actual": e.actual}
                for e in self.entries
            ],
        }


def cell_profile_check(L: Subspace, a: DecSeq, s: int, flag: Flag) -> ProfileReport:
    """Full dimension profile of a cell member against every flag space.

    Strictly between consecutive rows the displayed interior formula applies;
    above the first row and below the last the profile is pinned by the cell
    conditions directly.  The interior formula is NOT valid above the first
    row once s exceeds 1, which is why that range gets its own expression.
    """
    if not cell_member(L, a, s, flag):
        raise ValueError("subspace is not in the incidence cell")
    n, m = a.n, a.m
    expected = {}
    for j in range(2, m + 1):
        lo, hi = a.entries[j - 1], a.entries[j - 2]
        for i in range(lo + 1, hi):
            expected[i] = (n + 1 - i) + 1 - j - (s - 1)
        expected[lo] = n + 2 - lo - j - s
    a1 = a.entries[0]
    expected[a1] = max(0, n + 1 - a1 - s)
    for i in range(a1 + 1, n + 1):
        expected[i] = max(0, n + 1 - max(i, a1 + s))
    for i in range(1, a.entries[m - 1]):
        expected[i] = n + 2 - i - m - s
    entries = tuple(
        ProfileEntry(i, expected[i], intersect(flag.subspace(i), L).dim)
        for i in sorted(expected)
    )
    return ProfileReport(entries)


def _pivot_span(pivots, flag: Flag, rng) -> Subspace:
    """Span with one generator per pivot row of the adapted basis, plus
    random entries in the free rows below each pivot.  For any values of the
    free entries the result lies in the open cell of its pivot set."""
    u = adapted_basis(flag)
    n = flag.ambient
    pivset = set(pivots)
    rows = []
    for p in pivots:
        v = u[p - 1]
        for i in range(p + 1, n + 1):
            if i not in pivset:
                c = rng.randint(-9, 9)
                if c:
                    v = vec_add(v, vec_scale(frac(c), u[i - 1]))
        rows.append(v)
    return span(n, *rows)


def cell_point(a: DecSeq, s: int, flag: Flag, seed: int = 0) -> Subspace:
    """A sample member of the incidence cell, seeded and post-verified."""
    rng = random.Random(seed)
    beta = cell_index(a, s)
    for _ in range(8):
        L = _pivot_span(beta.entries, flag, rng)
        if cell_member(L, a, s, flag):
            return L
    raise RuntimeError("failed to sample the incidence cell")


def schubert_cell_point(b: DecSeq, flag: Flag, seed: int = 0) -> Subspace:
    """A sample m-plane in the open Schubert cell of b: meets with the flag
    spaces at the rows of b are exact, not just bounded below."""
    rng = random.Random(seed)
    for _ in range(8):
        H = _pivot_span(b.entries, flag, rng)
        ok = schubert_member(H, b, flag) and all(
            intersect(H, flag.subspace(b.entries[j - 1])).dim == j
            for j in range(1, b.m + 1)
        )
        if ok:
            return H
    raise RuntimeError("failed to sample the open Schubert cell")


# ---------------------------------------------------------------------------
# witnesses


def vector_avoiding(inside: Subspace, avoid, rng=None) -> tuple:
    """A vector of `inside` outside every subspace in `avoid`.

    Tries the canonical basis first, then pairwise sums, then seeded random
    combinations.  Raises ValueError when no such vector exists at all.
    """
    avoid = [A for A in avoid if not A.is_zero]
    for A in avoid:
        if A.contains(inside):
            raise ValueError("every vector of the source lies in an excluded space")
    cand = list(inside.basis)
    if not cand:
        raise ValueError("source space is zero")

    def ok(v):
        return not is_zero_vec(v) and all(not A.contains_vector(v) for A in avoid)

    for v in cand:
        if ok(v):
            return v
    for i in range(len(cand)):
        for k in range(i + 1, len(cand)):
            v = vec_add(cand[i], cand[k])
            if ok(v):
                return v
    rng = rng or random.Random(0)
    for trial in range(64):
        bound = 3 + trial
        v = None
        for row in cand:
            c = rng.randint(-bound, bound)
            if c:
                w = vec_scale(frac(c), row)
                v = w if v is None else vec_add(v, w)
        if v is not None and ok(v):
            return v
    raise RuntimeError("random search for an avoiding vector failed")


def witness_point(a: DecSeq, flag: Flag, L: Subspace, mode: int, seed: int = 0) -> Subspace:
    """An m-plane H meeting every flag space of a in exact dimension, meeting
    L in a line, with the line sitting in flag row `mode` and no higher.

    Built inductively: the mode-th vector comes from the meet of its flag
    space with L; every other vector avoids both L-with-prior-choices and
    the previous flag space.  The result is post-verified against all of its
    defining conditions.
    """
    n, m = a.n, a.m
    if not 1 <= mode <= m:
        raise ValueError(f"mode {mode} out of range 1..{m}")
    s = n + 1 - m - L.dim
    if s < 1:
        raise ValueError("special subspace is too large")
    for i in range(1, m + 1):
        ai = a.entries[i - 1]
        d = intersect(flag.subspace(ai), L).dim
        if d > n + 2 - ai - i - s:
            raise ValueError(f"meet at row {i} exceeds the critical dimension")

    def upper(i):
        # flag space of the previous row; above the first row it is zero
        return flag.subspace(a.entries[i - 2]) if i > 1 else flag.subspace(n + 1)

    carrier = intersect(flag.subspace(a.entries[mode - 1]), L)
    if upper(mode).contains(carrier):
        raise ValueError("the carrier meet sits inside the previous flag space")

    rng = random.Random(seed)
    for _ in range(8):
        fs = []
        picked = list(L.basis)
        for i in range(1, m + 1):
            if i == mode:
                v = vector_avoiding(carrier, [upper(i)], rng)
            else:
                taken = span(n, *picked)
                v = vector_avoiding(flag.subspace(a.entries[i - 1]), [taken, upper(i)], rng)
            fs.append(v)
            picked.append(v)
        H = span(n, *fs)
        if H.dim != m:
            continue
        if not all(
            intersect(H, flag.subspace(a.entries[i - 1])).dim == i
            for i in range(1, m + 1)
        ):
            continue
        line = intersect(H, L)
        if line.dim != 1:
            continue
        if not flag.subspace(a.entries[mode - 1]).contains(line):
            continue
        if upper(mode).contains(line):
            continue
        return H
    raise RuntimeError("witness construction failed after retries")


# ---------------------------------------------------------------------------
# tangent computation


def tangent_codim(H: Subspace, a: DecSeq, flag: Flag, L: Subspace) -> int:
    """Codimension of the joint tangent space inside the Schubert tangent
    space at H, as maps H -> V/H subject to linear image conditions.

    V/H is realized once as the non-pivot coordinates of H; each condition
    "phi(u) lands in (W+H)/H" contributes one equation per annihilating
    covector of the image of W.  The answer is a difference of two ranks.
    """
    n, m = H.ambient, H.dim
    if a.m != m or a.n != n:
        raise ValueError("sequence does not match the plane")
    for j in range(1, m + 1):
        if intersect(H, flag.subspace(a.entries[j - 1])).dim != j:
            raise ValueError("plane is not a smooth point of the Schubert set")
    line = intersect(H, L)
    if line.dim != 1:
        raise ValueError("plane must meet the special subspace in a line")

    ncols = n - m  # dim of V/H in the chart

    def equations(u_basis, W):
        img = quotient_subspace(sum_span(W, H), H)
        rows = []
        for nu in annihilator_basis(img):
            for u in u_basis:
                coords = H.coords(u)
                row = [frac(0)] * (m * ncols)
                for k in range(m):
                    if coords[k]:
                        for r in range(ncols):
                            row[k * ncols + r] = coords[k] * nu[r]
                rows.append(tuple(row))
        return rows

    schubert_rows = []
    for j in range(1, m + 1):
        fj = flag.subspace(a.entries[j - 1])
        schubert_rows.extend(equations(intersect(H, fj).basis, fj))
    special_rows = equations(line.basis, L)
    return rank(schubert_rows + special_rows) - rank(schubert_rows)


# ---------------------------------------------------------------------------
# restriction to a flag member


def restrict_sequence(b: DecSeq, j: int) -> DecSeq:
    """First j rows of b renormalized to live inside flag space b_j."""
    if not 1 <= j <= b.m:
        raise ValueError(f"position {j} out of range")
    bj = b.entries[j - 1]
    entries = tuple(b.entries[i] - bj + 1 for i in range(j))
    return DecSeq(b.n + 1 - bj, entries)


def restrict_flag(flag: Flag, q: int) -> tuple[Flag, Chart]:
    """The flag induced on its own member q, with the chart used to say it.

    Space i of the result is space q+i-1 of the input written in the chart
    coordinates of space q.
    """
    fq = flag.subspace(q)
    chart = Chart(fq)
    nn = fq.dim
    spaces = tuple(chart.restrict(flag.subspace(q + i - 1)) for i in range(1, nn + 2))
    return Flag(nn, spaces), chart


# ---------------------------------------------------------------------------
# cycle descriptors


@dataclass(frozen=True)
class SchubertComponent:
    index: DecSeq

    def to_json(self):
        return {"kind": "schubert", "index": self.index.to_json()}


@dataclass(frozen=True)
class XComponent:
    index: DecSeq
    j: int
    flag: Flag = field(compare=False)
    L: Subspace = field(compare=False)

    def to_json(self):
        return {"kind": "incidence", "index": self.index.to_json(), "j": self.j}


@dataclass(frozen=True)
class CycleDescriptor:
    components: tuple

    def __post_init__(self):
        seen = set()
        for c in self.components:
            key = c.index
            if key in seen:
                raise ValueError("duplicate component index")
            seen.add(key)

    @property
    def signature(self) -> frozenset:
        out = set()
        for c in self.components:
            if isinstance(c, SchubertComponent):
                out.add(("schubert", c.index.entries))
            else:
                out.add(("incidence", c.index.entries, c.j))
        return frozenset(out)

    def to_json(self):
        return {"components": [c.to_json() for c in self.components]}


def y_cycle(a: DecSeq, r: int, s: int, flag: Flag, L: Subspace) -> CycleDescriptor:
    """Descriptor of the degeneration cycle after r branchings, for a special
    subspace sitting in the incidence cell with parameter s.

    One component per member of the r-step branch set: members that first
    grow in row 1 give plain Schubert components (index pushed s-1 further,
    dropped when pushed past n); later rows give incidence components.
    With r = 0 the descriptor is the single pushed Schubert component.
    """
    if not cell_member(L, a, s, flag):
        raise ValueError("special subspace is not in the stated incidence cell")
    comps = []

    def push_first(b: DecSeq):
        top = b.entries[0] + s - 1
        if top > b.n:
            return None
        return SchubertComponent(DecSeq(b.n, (top,) + b.entries[1:]))

    if r == 0:
        c = push_first(a)
        return CycleDescriptor((c,) if c else ())
    for b in pieri_set(a, r):
        j = first_diff_index(a, b)
        if j == 1:
            c = push_first(b)
            if c:
                comps.append(c)
        else:
            comps.append(XComponent(b, j, flag, L))
    return CycleDescriptor(tuple(comps))
