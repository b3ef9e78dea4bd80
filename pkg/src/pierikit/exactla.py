"""Exact rational linear algebra for subspaces of k^n.

Everything is over the rationals and nothing is ever rounded: vectors are
tuples of Fraction, a subspace is stored in its unique reduced echelon
canonical form, and one-parameter families carry polynomial entries so that
flat limits at t=0 come out of exact column operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Vec = tuple[Fraction, ...]
Poly = tuple[Fraction, ...]  # coefficients, lowest degree first, trimmed

# Fixed sample points used whenever "generic" behaviour of a family in t has
# to be certified; agreement at all five is the acceptance bar.
SAMPLE_POINTS = (
    Fraction(1),
    Fraction(1, 2),
    Fraction(2),
    Fraction(3),
    Fraction(-1),
)

_ZERO = Fraction(0)
_ONE = Fraction(1)


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def vec(entries, n=None) -> Vec:
    v = tuple(frac(x) for x in entries)
    if n is not None and len(v) != n:
        raise ValueError(f"expected vector of length {n}, got {len(v)}")
    return v


def unit_vector(n: int, i: int) -> Vec:
    """Standard basis vector e_i, 1-indexed."""
    if not 1 <= i <= n:
        raise ValueError(f"unit vector index {i} out of range 1..{n}")
    return tuple(_ONE if k == i - 1 else _ZERO for k in range(n))


def vec_add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vec_scale(c, v: Vec) -> Vec:
    c = frac(c)
    return tuple(c * a for a in v)


def is_zero_vec(v) -> bool:
    return all(a == 0 for a in v)


# ----------------------------------------------------------------------
# Matrix routines.  Matrices are lists of row tuples/lists of Fractions.

def rref(rows):
    """Reduced row echelon form.

    Returns (reduced nonzero rows, pivot column indices).  The output is the
    unique canonical basis of the row space: pivot entries are 1, pivot
    columns are clear elsewhere, pivots strictly increase.
    """
    work = [list(r) for r in rows if not is_zero_vec(r)]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots = []
    prow = 0
    for c in range(ncols):
        pr = None
        for r in range(prow, len(work)):
            if work[r][c] != 0:
                pr = r
                break
        if pr is None:
            continue
        work[prow], work[pr] = work[pr], work[prow]
        inv = _ONE / work[prow][c]
        work[prow] = [x * inv for x in work[prow]]
        for r in range(len(work)):
            if r != prow and work[r][c] != 0:
                f = work[r][c]
                row = work[r]
                piv = work[prow]
                work[r] = [a - f * b for a, b in zip(row, piv)]
        pivots.append(c)
        prow += 1
        if prow == len(work):
            break
    reduced = [tuple(r) for r in work[:prow] if not is_zero_vec(r)]
    return reduced, pivots


def rank(rows) -> int:
    return len(rref(rows)[0])


def kernel_basis(rows, ncols: int):
    """Basis of the null space {x : rows . x = 0}, deterministic order."""
    reduced, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [_ZERO] * ncols
        v[fc] = _ONE
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[fc]
        basis.append(tuple(v))
    return basis


def solve_columns(cols, target):
    """Coefficients x with sum x_q * cols[q] = target, or None.

    Free variables are set to zero, so the answer is deterministic even when
    the columns are dependent.
    """
    if not cols:
        return None if not is_zero_vec(target) else ()
    n = len(cols[0])
    aug = [[frac(col[i]) for col in cols] + [frac(target[i])] for i in range(n)]
    reduced, pivots = rref(aug)
    ncols = len(cols)
    if ncols in pivots:
        return None
    x = [_ZERO] * ncols
    for row, pc in zip(reduced, pivots):
        x[pc] = row[-1]
    return tuple(x)


def invert_matrix(rows):
    n = len(rows)
    aug = [list(map(frac, r)) + [(_ONE if j == i else _ZERO) for j in range(n)]
           for i, r in enumerate(rows)]
    reduced, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(reduced) != n:
        raise ValueError("matrix is singular")
    return [tuple(r[n:]) for r in reduced]


def mat_vec(rows, v: Vec) -> Vec:
    return tuple(sum((a * b for a, b in zip(row, v)), _ZERO) for row in rows)


# ----------------------------------------------------------------------
# Subspaces.

@dataclass(frozen=True)
class Subspace:
    """A subspace of k^ambient in reduced echelon canonical form.

    basis rows have pivot entry 1, pivots strictly increasing top-down, and
    pivot columns are zero in every other row.  Two Subspace values are equal
    iff they are the same subspace.  The zero space has an empty basis.
    """

    ambient: int
    basis: tuple[Vec, ...]

    def __post_init__(self):
        seen = -1
        for row in self.basis:
            if len(row) != self.ambient:
                raise ValueError("basis vector length does not match ambient")
            p = _pivot_index(row)
            if p is None or p <= seen or row[p] != 1:
                raise ValueError("basis is not in reduced echelon form")
            for other in self.basis:
                if other is not row and other[p] != 0:
                    raise ValueError("basis is not fully reduced")
            seen = p

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(_pivot_index(r) for r in self.basis)

    def reduce_vector(self, v) -> Vec:
        """Remainder of v after subtracting its projection to the span."""
        w = list(vec(v, self.ambient))
        for row in self.basis:
            p = _pivot_index(row)
            c = w[p]
            if c != 0:
                for i in range(p, self.ambient):
                    w[i] -= c * row[i]
        return tuple(w)

    def contains_vector(self, v) -> bool:
        return is_zero_vec(self.reduce_vector(v))

    def contains(self, other: "Subspace") -> bool:
        if other.ambient != self.ambient:
            raise ValueError("ambient mismatch")
        return all(self.contains_vector(row) for row in other.basis)

    def coords(self, v) -> Vec:
        """Coordinates of v in the canonical basis; v must lie in the span."""
        v = vec(v, self.ambient)
        if not self.contains_vector(v):
            raise ValueError("vector not in subspace")
        return tuple(v[p] for p in self.pivots)

    def __str__(self):
        if self.is_zero:
            return f"0 in k^{self.ambient}"
        rows = "; ".join(
            "(" + ", ".join(str(x) for x in row) + ")" for row in self.basis
        )
        return f"span{{{rows}}}"


def _pivot_index(row):
    for i, x in enumerate(row):
        if x != 0:
            return i
    return None


def canonicalize(vectors, ambient: int) -> Subspace:
    """Span of the vectors, in canonical form."""
    vs = [vec(v, ambient) for v in vectors]
    reduced, _ = rref(vs)
    return Subspace(ambient, tuple(reduced))


def span(ambient: int, *vectors) -> Subspace:
    return canonicalize(vectors, ambient)


def zero_subspace(ambient: int) -> Subspace:
    return Subspace(ambient, ())


def full_space(ambient: int) -> Subspace:
    return canonicalize([unit_vector(ambient, i + 1) for i in range(ambient)], ambient)


def coordinate_subspace(ambient: int, indices) -> Subspace:
    """Span of the standard basis vectors e_i for i in indices (1-indexed)."""
    return canonicalize([unit_vector(ambient, i) for i in indices], ambient)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient != b.ambient:
        raise ValueError("ambient mismatch")
    if a.is_zero or b.is_zero:
        return zero_subspace(a.ambient)
    cols = list(a.basis) + list(b.basis)
    # null vectors (u, v) of the matrix with those columns give points
    # sum u_q a_q = -sum v_q b_q in the intersection
    mat = [[col[i] for col in cols] for i in range(a.ambient)]
    gens = []
    for kv in kernel_basis(mat, len(cols)):
        w = [_ZERO] * a.ambient
        for coeff, basv in zip(kv[: a.dim], a.basis):
            if coeff != 0:
                for i in range(a.ambient):
                    w[i] += coeff * basv[i]
        gens.append(tuple(w))
    return canonicalize(gens, a.ambient)


def sum_span(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient != b.ambient:
        raise ValueError("ambient mismatch")
    return canonicalize(list(a.basis) + list(b.basis), a.ambient)


def quotient_subspace(a: Subspace, k: Subspace) -> Subspace:
    """Image of a in V/k, written in the coordinate chart on the non-pivot
    positions of k.  For k = 0 this is a itself."""
    if a.ambient != k.ambient:
        raise ValueError("ambient mismatch")
    if k.is_zero:
        return a
    kp = set(k.pivots)
    keep = [i for i in range(a.ambient) if i not in kp]
    gens = []
    for row in a.basis:
        r = k.reduce_vector(row)
        gens.append(tuple(r[i] for i in keep))
    return canonicalize(gens, len(keep))


def annihilator_basis(s: Subspace):
    """Covectors (as plain tuples) vanishing on s, deterministic order."""
    if s.is_zero:
        return [unit_vector(s.ambient, i + 1) for i in range(s.ambient)]
    return kernel_basis(list(s.basis), s.ambient)


class Chart:
    """Coordinates on a subspace S via its canonical basis.

    Because the basis is in reduced echelon form, the coordinates of v in S
    are just the entries of v at the pivot positions.
    """

    def __init__(self, space: Subspace):
        self.space = space
        self._pivots = space.pivots

    @property
    def dim(self) -> int:
        return self.space.dim

    def to_coords(self, v) -> Vec:
        return self.space.coords(v)

    def from_coords(self, x) -> Vec:
        x = vec(x, self.space.dim)
        w = [_ZERO] * self.space.ambient
        for c, row in zip(x, self.space.basis):
            if c != 0:
                for i in range(self.space.ambient):
                    w[i] += c * row[i]
        return tuple(w)

    def restrict(self, a: Subspace) -> Subspace:
        """Rewrite a subspace a contained in S in S-coordinates."""
        if not self.space.contains(a):
            raise ValueError("subspace is not contained in the chart space")
        return canonicalize([self.to_coords(r) for r in a.basis], self.space.dim)

    def extend(self, a: Subspace) -> Subspace:
        """Inverse of restrict: map a subspace of k^{dim S} back into V."""
        if a.ambient != self.space.dim:
            raise ValueError("ambient mismatch")
        return canonicalize([self.from_coords(r) for r in a.basis], self.space.ambient)


# ----------------------------------------------------------------------
# Complete flags.

@dataclass(frozen=True)
class Flag:
    """A complete flag F_1 > F_2 > ... > F_{n+1} = 0 with dim F_j = n+1-j.

    spaces[j-1] is F_j.  Indices beyond n+1 are clamped to the zero space by
    subspace(), which keeps index arithmetic like F_{a+s} total.
    """

    ambient: int
    spaces: tuple[Subspace, ...]

    def __post_init__(self):
        n = self.ambient
        if len(self.spaces) != n + 1:
            raise ValueError(f"flag needs {n + 1} subspaces F_1..F_{n + 1}")
        for j, s in enumerate(self.spaces, start=1):
            if s.ambient != n:
                raise ValueError("flag subspace has wrong ambient")
            if s.dim != n + 1 - j:
                raise ValueError(f"dim F_{j} must be {n + 1 - j}")
            if j > 1 and not self.spaces[j - 2].contains(s):
                raise ValueError(f"F_{j} is not contained in F_{j - 1}")

    def subspace(self, j: int) -> Subspace:
        if j < 1:
            raise ValueError("flag indices start at 1")
        if j > self.ambient + 1:
            return zero_subspace(self.ambient)
        return self.spaces[j - 1]


def flag_from_basis(vectors) -> Flag:
    """Flag with F_j spanned by vectors[j-1:]; vectors must be a basis."""
    n = len(vectors)
    vs = [vec(v, n) for v in vectors]
    if rank(vs) != n:
        raise ValueError("vectors do not form a basis")
    spaces = [canonicalize(vs[j - 1:], n) for j in range(1, n + 1)]
    spaces.append(zero_subspace(n))
    return Flag(n, tuple(spaces))


# ----------------------------------------------------------------------
# Polynomials in one parameter t, as coefficient tuples (lowest degree
# first).  Only the few operations the limit algorithm needs.

def ptrim(c) -> Poly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def pconst(x) -> Poly:
    return ptrim((frac(x),))


def padd(p: Poly, q: Poly) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, x in enumerate(q):
        out[i] += x
    return ptrim(out)


def pscale(c, p: Poly) -> Poly:
    c = frac(c)
    if c == 0:
        return ()
    return tuple(c * x for x in p)


def peval(p: Poly, t) -> Fraction:
    t = frac(t)
    out = _ZERO
    for c in reversed(p):
        out = out * t + c
    return out


def pvaluation(p: Poly):
    """Order of vanishing at t=0; None for the zero polynomial."""
    for i, c in enumerate(p):
        if c != 0:
            return i
    return None


def pshift_down(p: Poly, v: int) -> Poly:
    """Divide by t^v; requires divisibility."""
    if any(c != 0 for c in p[:v]):
        raise ValueError("polynomial not divisible by t^v")
    return ptrim(p[v:])


def pdegree(p: Poly) -> int:
    return len(p) - 1 if p else 0


@dataclass(frozen=True)
class PolyFamily:
    """A family of subspaces spanned by columns with polynomial entries.

    cols[q][i] is the entry of column q in coordinate i, a Poly in t.  The
    declared dimension is the number of columns; it must be attained at the
    fixed sample points for the family to count as generically that large.
    """

    ambient: int
    cols: tuple[tuple[Poly, ...], ...]

    def __post_init__(self):
        for col in self.cols:
            if len(col) != self.ambient:
                raise ValueError("column length does not match ambient")

    @property
    def ncols(self) -> int:
        return len(self.cols)

    def eval_columns(self, t) -> list[Vec]:
        t = frac(t)
        return [tuple(peval(p, t) for p in col) for col in self.cols]

    def at(self, t) -> Subspace:
        return canonicalize(self.eval_columns(t), self.ambient)

    def transform(self, rows) -> "PolyFamily":
        """Apply a constant linear map (given by rows) to every column."""
        n_out = len(rows)
        mat = [[frac(x) for x in r] for r in rows]
        new_cols = []
        for col in self.cols:
            entries = []
            for i in range(n_out):
                acc: Poly = ()
                for k, p in enumerate(col):
                    if mat[i][k] != 0 and p:
                        acc = padd(acc, pscale(mat[i][k], p))
                entries.append(acc)
            new_cols.append(tuple(entries))
        return PolyFamily(n_out, tuple(new_cols))

    def max_degree(self) -> int:
        return max((pdegree(p) for col in self.cols for p in col), default=0)


def family_from_vectors(ambient: int, columns) -> PolyFamily:
    """Build a PolyFamily from columns whose entries are Poly-like iterables."""
    cols = tuple(
        tuple(ptrim(tuple(frac(c) for c in entry)) for entry in col)
        for col in columns
    )
    return PolyFamily(ambient, cols)


def constant_family(s: Subspace) -> PolyFamily:
    return PolyFamily(s.ambient, tuple(tuple(pconst(x) for x in row) for row in s.basis))


def limit_at_zero(fam: PolyFamily) -> Subspace:
    """Flat limit at t=0 of the span of the family's columns.

    Column operations over the polynomial ring: whenever the columns become
    dependent at t=0, a rational combination of them vanishes there, so the
    combination is divisible by t; divide it out and continue.  The loop must
    stop because each division strictly drops the t-order of a nonzero
    maximal minor.
    """
    d = fam.ncols
    if d == 0:
        return zero_subspace(fam.ambient)
    bad = [t for t in SAMPLE_POINTS if rank(fam.eval_columns(t)) != d]
    if bad:
        raise ValueError(
            f"family does not have generic rank {d} at sample points {bad}"
        )
    cols = [list(col) for col in fam.cols]
    budget = d * (fam.max_degree() + 2) + 8
    while True:
        ev = [tuple(peval(p, 0) for p in col) for col in cols]
        mat = [[col[i] for col in ev] for i in range(fam.ambient)]
        null = kernel_basis(mat, d)
        if not null:
            return canonicalize(ev, fam.ambient)
        c = null[0]
        q0 = max(q for q in range(d) if c[q] != 0)
        combo = [()] * fam.ambient
        for q in range(d):
            if c[q] != 0:
                for i in range(fam.ambient):
                    combo[i] = padd(combo[i], pscale(c[q], cols[q][i]))
        vals = [pvaluation(p) for p in combo if pvaluation(p) is not None]
        if not vals:
            raise ValueError("columns are dependent as polynomials")
        v = min(vals)
        if v < 1:
            raise AssertionError("combination vanishing at 0 must be divisible by t")
        cols[q0] = [pshift_down(p, v) for p in combo]
        budget -= 1
        if budget < 0:
            raise RuntimeError("limit computation failed to terminate")


# ----------------------------------------------------------------------
# Serialization helpers shared by the CLI.

def frac_to_str(x: Fraction) -> str:
    return str(x)


def frac_from_str(s: str) -> Fraction:
    return Fraction(s)


def subspace_to_json(s: Subspace) -> dict:
    return {
        "ambient": s.ambient,
        "basis": [[frac_to_str(x) for x in row] for row in s.basis],
    }


def subspace_from_json(d) -> Subspace:
    return canonicalize(
        [[frac_from_str(x) for x in row] for row in d["basis"]],
        int(d["ambient"]),
    )


def family_to_json(fam: PolyFamily) -> dict:
    return {
        "ambient": fam.ambient,
        "cols": [
            [[frac_to_str(c) for c in p] for p in col] for col in fam.cols
        ],
    }


def family_from_json(d) -> PolyFamily:
    return family_from_vectors(
        int(d["ambient"]),
        [[[frac_from_str(c) for c in p] for p in col] for col in d["cols"]],
    )
