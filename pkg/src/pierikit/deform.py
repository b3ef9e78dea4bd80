"""Explicit rational-equivalence machinery.

The degeneration engine moves a special subspace one step deeper into its
incidence cell along a pencil of hyperplanes, and verifies with exact
arithmetic that the intersection cycle breaks up exactly as the branching
combinatorics predicts.  A full chain of such steps connects a general
position to the fully special one where every component is a plain
Schubert variety.
"""

from dataclasses import dataclass
import random

from .exactla import (
    SAMPLE_POINTS,
    Chart,
    Flag,
    PolyFamily,
    Subspace,
    annihilator_basis,
    canonicalize,
    family_from_vectors,
    frac,
    intersect,
    kernel_basis,
    limit_at_zero,
    span,
    sum_span,
    unit_vector,
    vec,
    zero_subspace,
)
from .seqcomb import DecSeq, covers_under, first_diff_index, pieri_set
from .schubgeom import (
    IMPROPER,
    TRANSVERSE_IRREDUCIBLE,
    TRANSVERSE_REDUCIBLE,
    cell_member,
    cell_point,
    classify_pieri,
    meets_properly,
    restrict_flag,
    restrict_sequence,
    schubert_cell_point,
    schubert_member,
    standard_flag,
    x_member,
    y_cycle,
)


# ----------------------------------------------------------------------
# The flag induced on a distinguished subspace.

def flag_within(M: Subspace, flag: Flag) -> tuple:
    """Complete flag (M_1, ..., M_N) on M cut out by the ambient flag.

    M_1 = M and dim M_i = N+1-i.  Each ambient flag step cuts the
    intersection by at most one dimension, so every dimension occurs.
    """
    spaces = []
    prev = None
    for q in range(1, flag.ambient + 2):
        cur = intersect(flag.subspace(q), M)
        if prev is None or cur.dim == prev.dim - 1:
            spaces.append(cur)
        elif cur.dim != prev.dim:
            raise AssertionError("flag step cut more than one dimension")
        prev = cur
    assert spaces[0] == M and spaces[-1].dim == 0
    return tuple(spaces[:-1])


# ----------------------------------------------------------------------
# Pencils of hyperplanes.

def _pencil_columns(ambient: int, dual_basis: tuple, l: int, lo: int):
    """Columns spanning <M_l, t e_j + e_{j+1} | lo <= j <= l-2>."""
    n_total = len(dual_basis)
    cols = []
    for j in range(lo, l - 1):
        e_j, e_next = dual_basis[j - 1], dual_basis[j]
        cols.append(tuple((e_next[i], e_j[i]) for i in range(ambient)))
    for q in range(l, n_total + 1):
        cols.append(tuple((dual_basis[q - 1][i],) for i in range(ambient)))
    return family_from_vectors(ambient, cols)


@dataclass(frozen=True)
class Pencil:
    """A one-parameter family L_t of hyperplanes of M adapted to a flag in M.

    dual_basis[q-1] is e_q (an ambient vector); M_i = <e_i, ..., e_N>.  The
    family is spanned by M_l together with the moving vectors t e_j + e_{j+1}
    for 1 <= j <= l-2, so it interpolates between the marked hyperplane (the
    fibre at infinity) and M_2 (the fibre at zero).
    """

    M: Subspace
    mflag: tuple
    l: int
    dual_basis: tuple
    family: PolyFamily
    marked: Subspace

    def space(self, i: int) -> Subspace:
        return self.mflag[i - 1]

    def at(self, t) -> Subspace:
        return self.family.at(t)

    def limit(self) -> Subspace:
        return limit_at_zero(self.family)

    def restricted_family(self, i: int) -> PolyFamily:
        """The family M_i cap L_t, for 1 <= i <= l-1, as explicit columns."""
        if not 1 <= i <= self.l - 1:
            raise ValueError("restricted family needs 1 <= i <= l-1")
        return _pencil_columns(self.M.ambient, self.dual_basis, self.l, i)


def build_pencil(mflag, l: int, L_inf: Subspace) -> Pencil:
    """Pencil of hyperplanes of M_1 closing up at L_inf.

    mflag is the complete flag (M_1, ..., M_N) inside M = M_1; L_inf must be
    a hyperplane of M containing M_l but not M_{l-1}.  Coordinates x_1..x_N
    on M are chosen so that M_i is cut out by x_1, ..., x_{i-1} and L_inf by
    x_{l-1}; the family is then spanned by M_l and t e_j + e_{j+1} over the
    dual basis e.  With l = 2 there are no moving vectors and the family is
    the constant M_2 = L_inf.
    """
    mflag = tuple(mflag)
    M = mflag[0]
    N = M.dim
    if len(mflag) != N:
        raise ValueError("flag in M must have one space per dimension")
    if not 2 <= l <= N + 1:
        raise ValueError("marked position l must satisfy 2 <= l <= dim M + 1")
    # position N+1 marks the zero space
    spaces = mflag + (zero_subspace(M.ambient),)
    if not (M.contains(L_inf) and L_inf.dim == N - 1):
        raise ValueError("marked subspace must be a hyperplane of M")
    if not L_inf.contains(spaces[l - 1]):
        raise ValueError("marked hyperplane must contain M_l")
    if L_inf.contains(spaces[l - 2]):
        raise ValueError("marked hyperplane must not contain M_(l-1)")

    chart = Chart(M)
    inner = [chart.restrict(s) for s in mflag]
    covectors = []
    for i in range(1, N + 1):
        if i == l - 1:
            x = annihilator_basis(chart.restrict(L_inf))[0]
        else:
            below = inner[i] if i < N else zero_subspace(N)
            cands = annihilator_basis(below)
            x = next(
                c for c in cands
                if any(sum(ci * vi for ci, vi in zip(c, row)) != 0
                       for row in inner[i - 1].basis)
            )
        covectors.append(list(x))
    inverse = _matrix_inverse(covectors)
    dual = []
    for q in range(N):
        coords = tuple(inverse[i][q] for i in range(N))
        dual.append(vec(chart.from_coords(coords)))
    dual = tuple(dual)

    # construction sanity: the dual basis tails trace out the given flag
    for i in range(1, N + 1):
        assert span(M.ambient, *dual[i - 1:]) == mflag[i - 1]
    assert span(M.ambient, *(dual[q] for q in range(N) if q != l - 2)) == L_inf

    family = _pencil_columns(M.ambient, dual, l, 1)
    for t in SAMPLE_POINTS:
        fibre = family.at(t)
        assert fibre.dim == N - 1
        assert fibre.contains(spaces[l - 1])
        assert not fibre.contains(spaces[l - 2])
    return Pencil(M, mflag, l, dual, family, L_inf)


def _matrix_inverse(rows):
    n = len(rows)
    aug = [[frac(x) for x in row] + [frac(int(i == j)) for j in range(n)]
           for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("covectors are not independent")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


# ----------------------------------------------------------------------
# Stage reports.

@dataclass(frozen=True)
class StageCheck:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self):
        out = {"name": self.name, "passed": self.passed}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass(frozen=True)
class ComponentRecord:
    """One cycle component at a stage: its index, branching row, kind, and
    the indices it breaks into at the next stage."""

    index: DecSeq
    j: int
    kind: str
    children: tuple
    limit_dim: int | None = None

    def to_json(self):
        out = {
            "index": self.index.to_json(),
            "j": self.j,
            "kind": self.kind,
            "children": [c.to_json() for c in self.children],
        }
        if self.limit_dim is not None:
            out["limit_dim"] = self.limit_dim
        return out


@dataclass(frozen=True)
class StepReport:
    stage: str
    alpha: DecSeq
    s: int
    r: int
    checks: tuple
    records: tuple = ()

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> tuple:
        return tuple(c.name for c in self.checks if not c.passed)

    def to_json(self):
        return {
            "stage": self.stage,
            "alpha": self.alpha.to_json(),
            "s": self.s,
            "r": self.r,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
            "components": [rec.to_json() for rec in self.records],
        }


# ----------------------------------------------------------------------
# One degeneration step.

def step_verify(a: DecSeq, s: int, r: int, flag: Flag, M: Subspace,
                L_inf: Subspace) -> StepReport:
    """Verify one pencil step of the degeneration chain.

    M sits in the level-(s-1) cell and the pencil of hyperplanes of M marked
    at L_inf carries the level-r cycle to the level-(r+1) cycle of M.  The
    report records, per component: the moving-plane family, its limit, cell
    membership of the limit after restriction, and the branching bookkeeping.
    Precondition violations raise; failed verifications are recorded with
    the failing item named.
    """
    if s < 2:
        raise ValueError("step parameter s must be at least 2")
    if r < 1:
        raise ValueError("branch level r must be at least 1")
    if a.n != flag.ambient or M.ambient != flag.ambient:
        raise ValueError("ambient dimensions disagree")
    if not cell_member(M, a, s - 1, flag):
        raise ValueError("M does not lie in the level s-1 cell")
    a1 = a.entries[0]
    top = flag.subspace(a1 + s)
    upper = flag.subspace(a1 + s - 1)
    if not (M.contains(L_inf) and L_inf.dim == M.dim - 1):
        raise ValueError("L_inf must be a hyperplane of M")
    if not L_inf.contains(top):
        raise ValueError(f"L_inf must contain F_{a1 + s}")
    if L_inf.contains(upper):
        raise ValueError(f"L_inf must not contain F_{a1 + s - 1}")

    mflag = flag_within(M, flag)
    N = M.dim
    l = N - top.dim + 1
    assert (mflag + (zero_subspace(a.n),))[l - 1] == top
    pencil = build_pencil(mflag, l, L_inf)

    checks = []
    records = []
    for t in SAMPLE_POINTS:
        ok = cell_member(pencil.at(t), a, s, flag)
        checks.append(StageCheck(f"sample t={t} lies in the level-{s} cell", ok))

    level = pieri_set(a, r)
    nxt = pieri_set(a, r + 1)
    claimed = []
    for b in level:
        j = first_diff_index(a, b)
        kids = tuple(g for g in nxt if covers_under(a, b, g))
        claimed.extend(kids)
        if j == 1:
            # the carried Schubert variety is relabeled, not deformed: the
            # level-r label pushed by s-1 equals the child pushed by s-2
            want = (b.bump(1),) if b.entries[0] < a.n else ()
            ok = kids == want
            checks.append(StageCheck(
                f"component {b}: branches in row 1 only", ok,
                detail=" ".join(str(g) for g in kids)))
            records.append(ComponentRecord(b, j, "schubert", kids))
            continue
        Fb = flag.subspace(b.entries[j - 1])
        q = N - intersect(Fb, M).dim + 1
        moving = pencil.restricted_family(q)
        fam_ok = all(
            moving.at(t) == intersect(Fb, pencil.at(t)) for t in SAMPLE_POINTS
        )
        checks.append(StageCheck(
            f"component {b}: moving plane is F_{b.entries[j - 1]} cap L_t",
            fam_ok))
        lim = limit_at_zero(moving)
        expected = intersect(flag.subspace(b.entries[j - 1] + 1), M)
        checks.append(StageCheck(
            f"component {b}: limit is F_{b.entries[j - 1] + 1} cap M",
            lim == expected))
        checks.append(StageCheck(
            f"component {b}: limit has the generic fibre dimension",
            lim.dim == N - q))
        sub_flag, chart = restrict_flag(flag, b.entries[j - 1])
        b_r = restrict_sequence(b, j)
        try:
            cell_ok = cell_member(chart.restrict(lim), b_r, s - 1, sub_flag)
        except ValueError:
            cell_ok = False
        checks.append(StageCheck(
            f"component {b}: limit lies in the restricted level-{s - 1} cell",
            cell_ok))
        lifted = tuple(
            b.bump(first_diff_index(b_r, g_r)) for g_r in pieri_set(b_r, 1)
        )
        checks.append(StageCheck(
            f"component {b}: children match the restricted branch set",
            frozenset(lifted) == frozenset(kids) and len(set(lifted)) == len(lifted),
            detail=" ".join(str(g) for g in kids)))
        records.append(ComponentRecord(b, j, "incidence", kids, limit_dim=lim.dim))

    part_ok = (
        len(claimed) == len(set(claimed)) and frozenset(claimed) == frozenset(nxt)
    )
    checks.append(StageCheck("children partition the next branch level", part_ok))

    expected_after = set()
    for g in nxt:
        jg = first_diff_index(a, g)
        if jg == 1:
            top_entry = g.entries[0] + s - 2
            if top_entry <= a.n:
                expected_after.add(("schubert", (top_entry,) + g.entries[1:]))
        else:
            expected_after.add(("incidence", g.entries, jg))
    after = y_cycle(a, r + 1, s - 1, flag, M).signature
    checks.append(StageCheck(
        "assembled components match the level-(r+1) cycle",
        frozenset(expected_after) == after))

    return StepReport("step", a, s, r, tuple(checks), tuple(records))


# ----------------------------------------------------------------------
# The full chain.

def _descend_hyperplane(a: DecSeq, s: int, flag: Flag, M: Subspace, rng) -> Subspace:
    """A hyperplane of M through F_{a_1+s}, otherwise generic, landing in
    the level-s cell.  The wanted conditions are open, so a few random
    covectors suffice."""
    chart = Chart(M)
    N = M.dim
    top = chart.restrict(flag.subspace(a.entries[0] + s))
    upper = flag.subspace(a.entries[0] + s - 1)
    ann = annihilator_basis(top)
    for _ in range(64):
        coeffs = [frac(rng.randint(-9, 9)) for _ in ann]
        covector = [sum(c * row[i] for c, row in zip(coeffs, ann))
                    for i in range(N)]
        if all(x == 0 for x in covector):
            continue
        inside = kernel_basis([covector], N)
        L = canonicalize([chart.from_coords(v) for v in inside], M.ambient)
        if L.dim != N - 1 or L.contains(upper):
            continue
        if cell_member(L, a, s, flag):
            return L
    raise RuntimeError("no generic descent hyperplane found")


def chain_deformation(a: DecSeq, b: int, flag: Flag, K: Subspace,
                      seeds: int = 0) -> list:
    """Run the full degeneration chain and verify every stage.

    Starting from a general position K, a special position M_b deep in the
    level-1 cell is chosen, hyperplanes are descended to M_1, and each
    pencil step is verified; b+1 stage reports come back.  The first report
    classifies the general-position intersection, the last one checks that
    the fully special cycle is a sum of plain Schubert varieties.
    """
    if b < 1:
        raise ValueError("chain length must be at least 1")
    n = flag.ambient
    if K.ambient != n or a.n != n:
        raise ValueError("ambient dimensions disagree")
    if K.dim != n + 1 - a.m - b:
        raise ValueError("general position has the wrong dimension")
    if not meets_properly(K, flag):
        raise ValueError("general position must meet the flag properly")

    rng = random.Random(seeds)
    positions = {b: cell_point(a, 1, flag, seed=seeds)}
    for i in range(b, 1, -1):
        positions[i - 1] = _descend_hyperplane(a, b + 2 - i, flag,
                                               positions[i], rng)

    level1 = pieri_set(a, 1)
    first = y_cycle(a, 1, b, flag, positions[1])
    expected_first = set()
    start_records = []
    for g in level1:
        j = first_diff_index(a, g)
        if j == 1:
            top_entry = g.entries[0] + b - 1
            if top_entry <= a.n:
                expected_first.add(("schubert", (top_entry,) + g.entries[1:]))
            start_records.append(ComponentRecord(g, j, "schubert", ()))
        else:
            expected_first.add(("incidence", g.entries, j))
            start_records.append(ComponentRecord(g, j, "incidence", ()))
    start_checks = (
        StageCheck(
            "general position meets transversally and irreducibly",
            classify_pieri(a, flag, K, b).verdict == TRANSVERSE_IRREDUCIBLE),
        StageCheck(
            "first special position lies in the level-" + str(b) + " cell",
            cell_member(positions[1], a, b, flag)),
        StageCheck(
            "level-1 components match the branch set",
            first.signature == frozenset(expected_first)),
    )
    reports = [StepReport("start", a, b, 0, start_checks, tuple(start_records))]

    for i in range(2, b + 1):
        reports.append(step_verify(a, b + 2 - i, i - 1, flag,
                                   positions[i], positions[i - 1]))

    final = y_cycle(a, b, 1, flag, positions[b])
    last = pieri_set(a, b)
    collapse_checks = [StageCheck(
        "final components indexed by the full branch set",
        {c.index for c in final.components} == set(last))]
    collapse_records = []
    for g in last:
        j = first_diff_index(a, g)
        collapse_records.append(ComponentRecord(
            g, j, "schubert" if j == 1 else "incidence", ()))
        if j == 1:
            continue
        Fg = flag.subspace(g.entries[j - 1])
        collapse_checks.append(StageCheck(
            f"component {g}: special position meets F_{g.entries[j - 1]} in excess",
            intersect(Fg, positions[b]).dim == Fg.dim - j + 1))
        sampled = all(
            x_member(schubert_cell_point(g, flag, seed), g, j, flag, positions[b])
            for seed in (0, 1)
        )
        collapse_checks.append(StageCheck(
            f"component {g}: incidence condition holds on sampled points",
            sampled))
    reports.append(StepReport("collapse", a, 1, b, tuple(collapse_checks),
                              tuple(collapse_records)))
    return reports


def chain_histories(reports) -> tuple:
    """Root-to-leaf index chains reconstructed from a chain of stage reports."""
    start = reports[0]
    a = start.alpha
    edges = {}
    for rep in reports[1:-1]:
        for rec in rep.records:
            edges[rec.index] = rec.children
    chains = [(a, rec.index) for rec in start.records]
    for _ in range(len(reports) - 2):
        chains = [ch + (g,) for ch in chains for g in edges[ch[-1]]]
    return tuple(chains)


# ----------------------------------------------------------------------
# The worked two-step degeneration in ambient dimension 9.
#
# A hand-checkable instance of the whole machine: a two-parameter family of
# 5-planes degenerates the intersection with the 741 Schubert variety first
# into three components and then into the full six-term sum.  Every claim is
# verified by the general-purpose predicates above.

def _covector(*pairs):
    w = [frac(0)] * 9
    for i, c in pairs:
        w[i - 1] += frac(c)
    return tuple(w)


def worked_forms(s, t):
    """The four cutting forms of the two-parameter family of 5-planes."""
    s, t = frac(s), frac(t)
    return (
        _covector((1, 1), (8, s)),
        _covector((2, 1), (3, t), (4, s * t ** 2), (5, t ** 2 + s * t ** 3),
                  (6, t ** 3 + s * t ** 4), (8, t ** 4)),
        _covector((4, 1), (9, s)),
        _covector((7, 1)),
    )


def worked_recombination(sigma, tau):
    """An equivalent set of cutting forms, regular at infinite parameters."""
    sigma, tau = frac(sigma), frac(tau)
    return (
        _covector((1, -sigma ** 2), (2, sigma * tau ** 4),
                  (3, sigma * tau ** 3), (4, tau ** 2),
                  (5, sigma * tau ** 2 + tau), (6, sigma * tau + 1)),
        _covector((7, 1)),
        _covector((1, sigma), (8, 1)),
        _covector((4, sigma), (9, 1)),
    )


def _kernel_of(forms) -> Subspace:
    return canonicalize(kernel_basis([list(f) for f in forms], 9), 9)


def worked_kernel(s, t) -> Subspace:
    return _kernel_of(worked_forms(s, t))


def worked_family() -> PolyFamily:
    """The family of 5-planes after the first parameter is sent to zero:
    spanned by t e2 - e3, t e3 - e5, t e5 - e6, t e6 - e8, and e9."""
    e = [unit_vector(9, i) for i in range(1, 10)]

    def moving(lead, trail):
        return tuple((-trail[i], lead[i]) for i in range(9))

    cols = [
        moving(e[1], e[2]),
        moving(e[2], e[4]),
        moving(e[4], e[5]),
        moving(e[5], e[7]),
        tuple((e[8][i],) for i in range(9)),
    ]
    return family_from_vectors(9, cols)


@dataclass(frozen=True)
class GoldenReport:
    """Outcome of the worked run: named sections of checks plus the final
    component index set."""

    sections: tuple
    final_indices: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for _, checks in self.sections for c in checks)

    def failures(self) -> tuple:
        return tuple(
            f"{name}: {c.name}"
            for name, checks in self.sections
            for c in checks
            if not c.passed
        )

    def to_json(self):
        return {
            "sections": [
                {"name": name, "checks": [c.to_json() for c in checks]}
                for name, checks in self.sections
            ],
            "final_indices": [g.to_json() for g in self.final_indices],
            "passed": self.passed,
        }

    def table(self) -> str:
        lines = ["worked two-step degeneration (ambient dimension 9, base index 741)"]
        lines.append("=" * len(lines[0]))
        for name, checks in self.sections:
            lines.append("")
            lines.append(name)
            for c in checks:
                mark = "ok" if c.passed else "XX"
                detail = f"  ({c.detail})" if c.detail else ""
                lines.append(f"  [{mark}] {c.name}{detail}")
        lines.append("")
        lines.append("final components: "
                      + " ".join(str(g) for g in self.final_indices))
        lines.append("overall: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines) + "\n"


def golden_run_741() -> GoldenReport:
    """Run the worked example end to end and verify every narrative claim."""
    flag = standard_flag(9)
    e = [unit_vector(9, i) for i in range(1, 10)]

    def ev(i):
        return e[i - 1]

    def plus(*vs):
        w = [frac(0)] * 9
        for v in vs:
            w = [a + b for a, b in zip(w, v)]
        return tuple(w)

    a741 = DecSeq(9, (7, 4, 1))
    base = span(9, *[ev(i) for i in range(1, 6)])
    F = flag.subspace

    sec_a = []
    for sv, tv in ((1, 1), (2, 3)):
        L = worked_kernel(sv, tv)
        rec = _kernel_of(worked_recombination(frac(1) / sv, frac(1) / tv))
        sec_a.append(StageCheck(
            f"(s,t)=({sv},{tv}): four independent forms cut a 5-plane",
            L.dim == 5))
        sec_a.append(StageCheck(
            f"(s,t)=({sv},{tv}): recombined forms cut the same 5-plane",
            L == rec))
        sec_a.append(StageCheck(
            f"(s,t)=({sv},{tv}): proper meeting with F_1, F_4, F_7",
            all(intersect(L, F(q)).dim == max(0, 5 + F(q).dim - 9)
                for q in (1, 4, 7))))
        sec_a.append(StageCheck(
            f"(s,t)=({sv},{tv}): transverse irreducible intersection",
            classify_pieri(a741, flag, L, 2).verdict == TRANSVERSE_IRREDUCIBLE))
    sec_a.append(StageCheck(
        "closing position recovers the base 5-plane",
        _kernel_of(worked_recombination(0, 0)) == base))

    fam = worked_family()
    inner = family_from_vectors(9, [
        tuple((-ev(6)[i], ev(5)[i]) for i in range(9)),
        tuple((-ev(8)[i], ev(6)[i]) for i in range(9)),
        tuple((ev(9)[i],) for i in range(9)),
    ])
    sec_b = [
        StageCheck(
            "stated basis spans the kernel of the specialized forms",
            all(fam.at(t) == _kernel_of(worked_forms(0, t))
                for t in SAMPLE_POINTS)),
        StageCheck(
            "moving 5-plane lies in the level-2 cell",
            all(cell_member(fam.at(t), a741, 2, flag) for t in SAMPLE_POINTS)),
        StageCheck(
            "moving 5-plane lies inside F_2",
            all(F(2).contains(fam.at(t)) for t in SAMPLE_POINTS)),
        StageCheck(
            "meets F_4 and F_5 in the same moving 3-plane",
            all(intersect(fam.at(t), F(4)) == inner.at(t)
                and intersect(fam.at(t), F(5)) == inner.at(t)
                and inner.at(t).dim == 3
                for t in SAMPLE_POINTS)),
        StageCheck(
            "meets F_7 in the line F_9",
            all(intersect(fam.at(t), F(7)) == F(9) for t in SAMPLE_POINTS)),
        StageCheck(
            "spans F_2 together with F_4",
            all(sum_span(fam.at(t), F(4)) == F(2) for t in SAMPLE_POINTS)),
        StageCheck(
            "its F_4 slice spans F_5 together with F_7",
            all(sum_span(intersect(fam.at(t), F(4)), F(7)) == F(5)
                for t in SAMPLE_POINTS)),
        StageCheck(
            "its F_7 slice sits inside F_8",
            all(F(8).contains(intersect(fam.at(t), F(7)))
                for t in SAMPLE_POINTS)),
        StageCheck(
            "transverse reducible with every row critical",
            all(classify_pieri(a741, flag, fam.at(t), 2).verdict
                == TRANSVERSE_REDUCIBLE
                and classify_pieri(a741, flag, fam.at(t), 2).equality_set
                == (1, 2, 3)
                for t in SAMPLE_POINTS)),
        StageCheck(
            "cycle components: one pushed Schubert plus two incidence pieces",
            all(y_cycle(a741, 1, 2, flag, fam.at(t)).signature
                == frozenset({("schubert", (9, 4, 1)),
                              ("incidence", (7, 5, 1), 2),
                              ("incidence", (7, 4, 2), 3)})
                for t in SAMPLE_POINTS)),
    ]

    limit = limit_at_zero(fam)
    l00 = span(9, ev(3), ev(5), ev(6), ev(8), ev(9))
    sec_c = [
        StageCheck("flat limit equals the evaluation at zero",
                   limit == fam.at(0)),
        StageCheck("limit position is the span of e3, e5, e6, e8, e9",
                   limit == l00),
        StageCheck("F_8 sits inside the limit position",
                   l00.contains(F(8))),
        StageCheck("limit intersection is improper",
                   classify_pieri(a741, flag, l00, 2).verdict == IMPROPER),
    ]

    d941 = DecSeq(9, (9, 4, 1))
    d841 = DecSeq(9, (8, 4, 1))
    d751 = DecSeq(9, (7, 5, 1))
    d742 = DecSeq(9, (7, 4, 2))
    sec_c.append(StageCheck(
        "row-1 branch: moving plane meets F_8 in the line F_9",
        all(intersect(fam.at(t), F(8)) == F(9) for t in SAMPLE_POINTS)))
    h941 = span(9, ev(9), plus(ev(4), ev(5)), plus(ev(1), ev(2)))
    h841 = span(9, ev(8), plus(ev(4), ev(5)), plus(ev(1), ev(2)))
    sec_c.append(StageCheck(
        "row-1 branch: collapses onto the 941 Schubert variety on witnesses",
        schubert_member(h941, d941, flag)
        and all(x_member(h941, d841, 1, flag, fam.at(t)) for t in SAMPLE_POINTS)
        and schubert_member(h841, d841, flag)
        and not x_member(h841, d841, 1, flag, fam.at(1))
        and not schubert_member(h841, d941, flag)))

    m6 = span(9, ev(2), ev(3), ev(5), ev(6), ev(8), ev(9))
    lim2 = limit_at_zero(inner)
    sub5, chart5 = restrict_flag(flag, 5)
    b31 = restrict_sequence(d751, 2)
    sec_c.append(StageCheck(
        "row-2 branch: companion 6-plane lies in the level-1 cell",
        cell_member(m6, a741, 1, flag)))
    sec_c.append(StageCheck(
        "row-2 branch: moving 3-plane is the F_5 slice",
        all(inner.at(t) == intersect(F(5), fam.at(t)) for t in SAMPLE_POINTS)))
    sec_c.append(StageCheck(
        "row-2 branch: limit is the F_6 slice of the companion",
        lim2 == intersect(F(6), m6)))
    sec_c.append(StageCheck(
        "row-2 branch: limit lies in the restricted level-1 cell",
        cell_member(chart5.restrict(lim2), b31, 1, sub5)))
    cls2 = classify_pieri(b31, sub5, chart5.restrict(lim2), 1)
    sec_c.append(StageCheck(
        "row-2 branch: restricted intersection transverse reducible",
        cls2.verdict == TRANSVERSE_REDUCIBLE and cls2.equality_set == (1, 2)))
    sec_c.append(StageCheck(
        "row-2 branch: limit meets F_7 in F_8",
        intersect(lim2, F(7)) == F(8)))
    sec_c.append(StageCheck(
        "row-2 branch: limit spans F_6 together with F_7",
        sum_span(F(7), lim2) == F(6)))
    d851 = DecSeq(9, (8, 5, 1))
    d761 = DecSeq(9, (7, 6, 1))
    lifted2 = {d751.bump(first_diff_index(b31, g)) for g in pieri_set(b31, 1)}
    sec_c.append(StageCheck(
        "row-2 branch: splits into 851 and 761",
        lifted2 == {d851, d761}))
    k851 = span(9, ev(8), plus(ev(5), ev(6)))
    h851 = span(9, ev(8), plus(ev(5), ev(6)), ev(1))
    w851 = intersect(k851, lim2)
    sec_c.append(StageCheck(
        "row-2 branch: witness in the 851 stratum",
        schubert_member(chart5.restrict(k851), DecSeq(5, (4, 1)), sub5)
        and w851.dim >= 1 and F(7).contains(w851)
        and schubert_member(h851, d851, flag)
        and x_member(h851, d751, 2, flag, l00)))
    k761 = span(9, ev(6), ev(7))
    h761 = span(9, ev(6), ev(7), ev(1))
    w761 = intersect(k761, lim2)
    sec_c.append(StageCheck(
        "row-2 branch: witness in the 761 stratum",
        schubert_member(chart5.restrict(k761), DecSeq(5, (3, 2)), sub5)
        and w761.dim >= 1 and not F(7).contains(w761)
        and F(6).contains(k761)
        and schubert_member(h761, d761, flag)
        and x_member(h761, d751, 2, flag, l00)))

    sub2, chart2 = restrict_flag(flag, 2)
    b631 = restrict_sequence(d742, 3)
    sec_c.append(StageCheck(
        "row-3 branch: restricted intersection transverse irreducible at samples",
        all(classify_pieri(b631, sub2, chart2.restrict(fam.at(t)), 1).verdict
            == TRANSVERSE_IRREDUCIBLE for t in SAMPLE_POINTS)))
    sec_c.append(StageCheck(
        "row-3 branch: restricted intersection transverse reducible at the limit",
        classify_pieri(b631, sub2, chart2.restrict(l00), 1).verdict
        == TRANSVERSE_REDUCIBLE))
    sec_c.append(StageCheck(
        "row-3 branch: limit meets F_7 in F_8",
        intersect(F(7), l00) == F(8)))
    sec_c.append(StageCheck(
        "row-3 branch: its F_4 slice spans F_5 together with F_7",
        sum_span(F(7), intersect(F(4), l00)) == F(5)))
    sec_c.append(StageCheck(
        "row-3 branch: its F_2 slice spans F_3 together with F_4",
        sum_span(F(4), intersect(F(2), l00)) == F(3)))
    d842 = DecSeq(9, (8, 4, 2))
    d752 = DecSeq(9, (7, 5, 2))
    d743 = DecSeq(9, (7, 4, 3))
    lifted3 = {d742.bump(first_diff_index(b631, g)) for g in pieri_set(b631, 1)}
    sec_c.append(StageCheck(
        "row-3 branch: splits into 842, 752, and 743",
        lifted3 == {d842, d752, d743}))
    h842 = span(9, ev(8), plus(ev(4), ev(5)), plus(ev(2), ev(3)))
    w842 = intersect(h842, l00)
    sec_c.append(StageCheck(
        "row-3 branch: witness in the 842 stratum",
        schubert_member(h842, d842, flag)
        and w842.dim >= 1 and F(7).contains(w842)
        and x_member(h842, d742, 3, flag, l00)))
    h752 = span(9, ev(7), plus(ev(5), ev(6)), ev(2))
    w752 = intersect(h752, l00)
    sec_c.append(StageCheck(
        "row-3 branch: witness in the 752 stratum",
        schubert_member(h752, d752, flag)
        and w752.dim >= 1 and not F(7).contains(w752)
        and intersect(intersect(h752, F(4)), l00).dim >= 1
        and x_member(h752, d742, 3, flag, l00)))
    h743 = span(9, ev(3), ev(4), ev(7))
    w743 = intersect(h743, l00)
    sec_c.append(StageCheck(
        "row-3 branch: witness in the 743 stratum",
        schubert_member(h743, d743, flag)
        and not F(4).contains(w743)
        and F(3).contains(h743)
        and x_member(h743, d742, 3, flag, l00)))

    final = (d941, d851, d761, d842, d752, d743)
    sec_final = [StageCheck(
        "final components match the full branch set",
        frozenset(final) == frozenset(pieri_set(a741, 2)))]

    return GoldenReport(
        sections=(
            ("(A) both parameters generic", tuple(sec_a)),
            ("(B) first parameter sent to zero", tuple(sec_b)),
            ("(C) both parameters sent to zero", tuple(sec_c)),
            ("final assembly", tuple(sec_final)),
        ),
        final_indices=final,
    )
