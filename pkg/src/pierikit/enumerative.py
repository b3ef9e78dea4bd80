"""Quintuple intersection problems: the pair count d, two independent
oracles for it, and explicit rational witnesses.

A problem fixes two flag conditions (indexed by decreasing sequences) and
three special conditions (codimensions a, b, c) whose degrees fill the
Grassmannian exactly.  The count d enumerates branch pairs directly; the
oracles recompute it through symmetric polynomials and through iterated
branching plus duality.  The witness constructor then exhibits each of the
d solution planes with exact rational coordinates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .exactla import (
    Flag,
    Subspace,
    flag_from_basis,
    frac,
    intersect,
    solve_columns,
    span,
    sum_span,
    unit_vector,
    vec_add,
    vec_scale,
)
from .schubgeom import schubert_member, standard_flag
from .seqcomb import DecSeq, codim, dual, lambda_of, pieri_set
from .tableaux import (
    chow_project,
    complete_homogeneous,
    schur_decompose,
    schur_expand,
)

# largest m*(n-m) the polynomial oracle will expand
_EXPANSION_CAP = 16


@dataclass(frozen=True)
class QuintupleProblem:
    """Data for a five-condition intersection of m-planes in k^n.

    alpha and beta index the two flag conditions; a, b, c are the
    codimensions of the three special conditions.  The degrees must fill
    the ambient dimension: a + b + c + codim(alpha) + codim(beta) equals
    m(n-m).  Zero values of a, b, c are allowed (an empty condition).
    """

    n: int
    m: int
    alpha: DecSeq
    beta: DecSeq
    a: int
    b: int
    c: int

    def __post_init__(self):
        if not 1 <= self.m < self.n:
            raise ValueError("need 1 <= m < n")
        for s in (self.alpha, self.beta):
            if s.n != self.n or s.m != self.m:
                raise ValueError(f"{s} does not index m-planes in k^{self.n}")
        if min(self.a, self.b, self.c) < 0:
            raise ValueError("special codimensions must be nonnegative")
        need = self.m * (self.n - self.m)
        got = self.a + self.b + self.c + codim(self.alpha) + codim(self.beta)
        if got != need:
            raise ValueError(f"degrees sum to {got}, the ambient dimension is {need}")

    def swapped(self) -> "QuintupleProblem":
        """The same problem with the two flag conditions exchanged."""
        return QuintupleProblem(
            self.n, self.m, self.beta, self.alpha, self.b, self.a, self.c
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "alpha": self.alpha.to_json(),
            "beta": self.beta.to_json(),
            "a": self.a,
            "b": self.b,
            "c": self.c,
        }


def count_pairs_d(p: QuintupleProblem) -> int:
    """Number of pairs (g, d) in (alpha*a) x (beta*b) with dual(d) in g*c."""
    total = 0
    for g in pieri_set(p.alpha, p.a):
        reachable = set(pieri_set(g, p.c))
        for dlt in pieri_set(p.beta, p.b):
            if dual(dlt) in reachable:
                total += 1
    return total


@lru_cache(maxsize=None)
def _schur_product(lam1, lam2, m: int):
    return schur_expand(lam1, m) * schur_expand(lam2, m)


@lru_cache(maxsize=None)
def _h_product(degrees, m: int):
    poly = complete_homogeneous(degrees[0], m)
    for deg in degrees[1:]:
        poly = poly * complete_homogeneous(deg, m)
    return poly


def cohomology_oracle(p: QuintupleProblem) -> int:
    """The count as a rectangle coefficient in a symmetric-function product.

    Expands the product of the two Schur polynomials of the flag conditions
    with h_a, h_b, h_c in m variables, decomposes it in the Schur basis,
    discards parts wider than n-m, and reads off the coefficient of the
    full rectangle ((n-m)^m).
    """
    if p.n > 8 or p.m * (p.n - p.m) > _EXPANSION_CAP:
        raise ValueError("instance too large for polynomial expansion")
    m = p.m
    poly = _schur_product(lambda_of(p.alpha), lambda_of(p.beta), m)
    poly = poly * _h_product(tuple(sorted((p.a, p.b, p.c))), m)
    expansion = chow_project(schur_decompose(poly, m), p.n, m)
    return expansion.get((p.n - m,) * m, 0)


def pieri_pairing_oracle(p: QuintupleProblem) -> int:
    """The count by iterated branching and duality.

    Multiplies the alpha class by h_a, h_b, h_c at the sequence level (the
    first-entry cap inside pieri_set discards classes that die in this
    Grassmannian) and returns the multiplicity of dual(beta).
    """
    counts = {p.alpha: 1}
    for deg in (p.a, p.b, p.c):
        step: dict[DecSeq, int] = {}
        for g, mult in counts.items():
            for h in pieri_set(g, deg):
                step[h] = step.get(h, 0) + mult
        counts = step
    return counts.get(dual(p.beta), 0)


def valid_instances(n_max: int) -> Iterator[QuintupleProblem]:
    """Every problem with 2 <= n <= n_max and positive a, b, c.

    Sequences run in lexicographic decreasing order, then a, then b, so the
    stream is deterministic.
    """
    for n in range(2, n_max + 1):
        for m in range(1, n):
            seqs = [DecSeq(n, e) for e in combinations(range(n, 0, -1), m)]
            space = m * (n - m)
            for alpha in seqs:
                ca = codim(alpha)
                for beta in seqs:
                    left = space - ca - codim(beta)
                    if left < 3:
                        continue
                    for a in range(1, left - 1):
                        for b in range(1, left - a):
                            yield QuintupleProblem(n, m, alpha, beta, a, b, left - a - b)


# ---------------------------------------------------------------------------
# explicit witnesses


def reversed_flag(n: int) -> Flag:
    """The ascending coordinate flag: space j is spanned by e_1, ..., e_{n+1-j}.

    Opposite to the standard flag, so their slices are coordinate blocks.
    """
    return flag_from_basis([unit_vector(n, i) for i in range(n, 0, -1)])


def triple_witnesses(
    alpha: DecSeq, beta: DecSeq, C: Subspace, flag: Flag, flag2: Flag
) -> list[Subspace]:
    """The unique m-plane satisfying both flag conditions and meeting C.

    Builds it from the slices K_j = F_{alpha_j} cap F'_{beta_{m+1-j}}: the
    line C cap (K_1 + ... + K_m) is spanned by a vector w, the summands of
    w across the slices give a basis, and their span is the witness.

    Returns [H] with membership in all three varieties verified, or []
    when dual(beta) falls outside alpha*c, c read off from dim C (the
    intersection is empty then).  Raises ValueError when the inputs are
    not in general position: a slice vanishes, the slice sum is not
    direct, C meets it off a line, or a basis vector falls too deep in
    either flag.
    """
    n, m = alpha.n, alpha.m
    if beta.n != n or beta.m != m:
        raise ValueError("sequences must share n and m")
    if C.ambient != n or flag.ambient != n or flag2.ambient != n:
        raise ValueError("ambient dimensions disagree")
    c = n + 1 - m - C.dim
    if codim(alpha) + codim(beta) + c != m * (n - m):
        raise ValueError("codimensions do not fill the ambient dimension")
    if dual(beta) not in pieri_set(alpha, c):
        return []

    slices = []
    for j in range(1, m + 1):
        K = intersect(flag.subspace(alpha.entries[j - 1]),
                      flag2.subspace(beta.entries[m - j]))
        if K.dim == 0:
            raise ValueError(f"slice {j} is zero")
        slices.append(K)
    total = slices[0]
    for K in slices[1:]:
        total = sum_span(total, K)
    if total.dim != sum(K.dim for K in slices):
        raise ValueError("slice sum is not direct")
    line = intersect(C, total)
    if line.dim != 1:
        raise ValueError(f"C meets the slice sum in dimension {line.dim}, not a line")

    w = line.basis[0]
    coeffs = solve_columns([v for K in slices for v in K.basis], w)
    basis = []
    at = 0
    for K in slices:
        f = (frac(0),) * n
        for q in range(K.dim):
            f = vec_add(f, vec_scale(coeffs[at + q], K.basis[q]))
        at += K.dim
        basis.append(f)
    for j, f in enumerate(basis, start=1):
        if flag.subspace(alpha.entries[j - 1] + 1).contains_vector(f):
            raise ValueError(f"vector {j} falls too deep in the first flag")
        if flag2.subspace(beta.entries[m - j] + 1).contains_vector(f):
            raise ValueError(f"vector {j} falls too deep in the second flag")

    H = span(n, *basis)
    assert H.dim == m
    assert schubert_member(H, alpha, flag)
    assert schubert_member(H, beta, flag2)
    assert intersect(H, C).dim >= 1
    return [H]


def witness_table(p: QuintupleProblem, seed: int = 0, retries: int = 32):
    """(C, rows) with one (gamma, delta, H) row per counted branch pair.

    Iterates triple_witnesses over every branch pair of the problem with
    the standard and the reversed coordinate flags; C is resampled until
    the general-position checks pass for all pairs at once.  The rows
    carry exactly count_pairs_d(p) pairwise distinct planes, every
    coordinate an exact rational.
    """
    flag = standard_flag(p.n)
    flag2 = reversed_flag(p.n)
    dim_c = p.n + 1 - p.m - p.c
    if dim_c < 1:
        # c exceeds every branch capacity, so no pair can match
        return None, ()
    rng = random.Random(seed)
    last = None
    for _ in range(retries):
        rows = [tuple(frac(rng.randint(-99, 99)) for _ in range(p.n))
                for _ in range(dim_c)]
        C = span(p.n, *rows)
        if C.dim != dim_c:
            continue
        try:
            out = []
            for g in pieri_set(p.alpha, p.a):
                for dlt in pieri_set(p.beta, p.b):
                    for H in triple_witnesses(g, dlt, C, flag, flag2):
                        out.append((g, dlt, H))
        except ValueError as exc:
            last = exc
            continue
        if len({H for _, _, H in out}) != len(out):
            continue  # a collision counts as a genericity failure
        return C, tuple(out)
    raise RuntimeError(f"no suitable C after {retries} draws: {last}")


def real_witness_set(p: QuintupleProblem, seed: int = 0, retries: int = 32) -> list[Subspace]:
    """Just the witness planes of witness_table, in its order."""
    _, rows = witness_table(p, seed, retries)
    return [H for _, _, H in rows]
