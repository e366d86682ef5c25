"""Exact linear algebra over Q(i): RREF, kernels, canonical subspaces.

Matrices are dense lists of GaussRational rows.  Every subspace is stored by
its reduced row echelon basis under the ambient coordinate order, so two equal
subspaces always carry identical bases and representatives picked from them
are deterministic.
"""
from __future__ import annotations

from .scalars import GR_ONE, GR_ZERO, GaussRational


class LinalgError(ValueError):
    pass


def zero_row(n: int) -> list[GaussRational]:
    return [GR_ZERO] * n


def identity_rows(n: int) -> list[list[GaussRational]]:
    rows = []
    for i in range(n):
        row = zero_row(n)
        row[i] = GR_ONE
        rows.append(row)
    return rows


def rref(rows: list[list[GaussRational]], ncols: int | None = None):
    """Reduced row echelon form.

    Returns (reduced nonzero rows, pivot column list).  Pivots are monic with
    zeros above and below, so the output is the canonical basis of the row
    space.
    """
    work = [list(r) for r in rows]
    nrows = len(work)
    if ncols is None:
        ncols = len(work[0]) if work else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_at = -1
        for i in range(r, nrows):
            if work[i][c]:
                pivot_at = i
                break
        if pivot_at < 0:
            continue
        work[r], work[pivot_at] = work[pivot_at], work[r]
        prow = work[r]
        lead = prow[c]
        if lead != GR_ONE:
            for j in range(c, ncols):
                if prow[j]:
                    prow[j] = prow[j] / lead
        for i in range(nrows):
            if i == r:
                continue
            row = work[i]
            f = row[c]
            if not f:
                continue
            for j in range(c, ncols):
                pj = prow[j]
                if pj:
                    row[j] = row[j] - f * pj
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return work[:r], pivots


def rank(rows: list[list[GaussRational]], ncols: int | None = None) -> int:
    return len(rref(rows, ncols)[0])


def kernel_basis(rows: list[list[GaussRational]], ncols: int) -> list[list[GaussRational]]:
    """Canonical (RREF) basis of {x : M x = 0} for M given by rows."""
    red, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    vecs = []
    for fc in free_cols:
        v = zero_row(ncols)
        v[fc] = GR_ONE
        for k, pc in enumerate(pivots):
            entry = red[k][fc]
            if entry:
                v[pc] = -entry
        vecs.append(v)
    canon, _ = rref(vecs, ncols)
    return canon


def mat_vec(rows: list[list[GaussRational]], vec: list[GaussRational]) -> list[GaussRational]:
    out = []
    for row in rows:
        acc = GR_ZERO
        for a, b in zip(row, vec):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return out


def mat_mul(a: list[list[GaussRational]], b: list[list[GaussRational]]) -> list[list[GaussRational]]:
    if not a:
        return []
    nb = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = zero_row(nb)
        for k, f in enumerate(row):
            if not f:
                continue
            brow = b[k]
            for j in range(nb):
                e = brow[j]
                if e:
                    acc[j] = acc[j] + f * e
        out.append(acc)
    return out


def invert(rows: list[list[GaussRational]]) -> list[list[GaussRational]]:
    n = len(rows)
    aug = [list(r) + identity_rows(n)[i] for i, r in enumerate(rows)]
    red, pivots = rref(aug, 2 * n)
    if pivots != list(range(n)):
        raise LinalgError("matrix is singular")
    return [r[n:] for r in red]


class ExactMatrix:
    """Thin wrapper naming a dense exact matrix (rows act on column vectors)."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: list[list[GaussRational]], ncols: int | None = None):
        self.rows = rows
        self.nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        self.ncols = ncols

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "ExactMatrix":
        return cls([zero_row(ncols) for _ in range(nrows)], ncols)

    def rref(self):
        return rref(self.rows, self.ncols)

    def rank(self) -> int:
        return rank(self.rows, self.ncols)

    def kernel(self) -> list[list[GaussRational]]:
        return kernel_basis(self.rows, self.ncols)

    def apply(self, vec: list[GaussRational]) -> list[GaussRational]:
        return mat_vec(self.rows, vec)

    def mul(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix(mat_mul(self.rows, other.rows), other.ncols)

    def is_zero(self) -> bool:
        return all(not e for row in self.rows for e in row)

    def column_space_rows(self) -> list[list[GaussRational]]:
        return [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)]

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactMatrix) and self.rows == other.rows


class Subspace:
    """Subspace of Q(i)^ambient held by its canonical RREF basis."""

    __slots__ = ("ambient", "basis", "pivots")

    def __init__(self, ambient: int, basis: list[list[GaussRational]], pivots: list[int]):
        self.ambient = ambient
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def from_rows(cls, ambient: int, rows: list[list[GaussRational]]) -> "Subspace":
        basis, pivots = rref(rows, ambient)
        return cls(ambient, basis, pivots)

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient, [], [])

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls(ambient, identity_rows(ambient), list(range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.basis == other.basis
        )

    def reduce(self, vec: list[GaussRational]) -> list[GaussRational]:
        """Residual of vec after eliminating this subspace's pivots."""
        v = list(vec)
        for row, pc in zip(self.basis, self.pivots):
            f = v[pc]
            if not f:
                continue
            for j in range(pc, self.ambient):
                e = row[j]
                if e:
                    v[j] = v[j] - f * e
        return v

    def contains(self, vec: list[GaussRational]) -> bool:
        return not any(self.reduce(vec))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(row) for row in other.basis)

    def coords(self, vec: list[GaussRational]) -> list[GaussRational]:
        """Coordinates of vec in this basis; raises if vec is outside."""
        c = [vec[pc] for pc in self.pivots]
        if any(self.reduce(vec)):
            raise LinalgError("vector outside subspace")
        return c

    def sum(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise LinalgError("ambient mismatch")
        return Subspace.from_rows(self.ambient, self.basis + other.basis)

    def annihilator_rows(self) -> list[list[GaussRational]]:
        return kernel_basis(self.basis, self.ambient)

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise LinalgError("ambient mismatch")
        stacked = self.annihilator_rows() + other.annihilator_rows()
        basis = kernel_basis(stacked, self.ambient)
        return Subspace.from_rows(self.ambient, basis)


def quotient_map(sub: Subspace, total: Subspace, check: bool = True):
    """Canonical data for total/sub where sub is contained in total.

    Returns (dim, reps, proj) with reps the rows of total's basis whose pivot
    is not a pivot of sub (canonical coset representatives) and proj a
    dim x ambient matrix sending any x in total to the coordinates of its
    class in the reps basis (and sub exactly to zero).

    check=False skips the full membership verification; callers may do that
    only when containment is already guaranteed (for instance by a verified
    square-zero identity).  The cheap pivot-compatibility test always runs.
    """
    if check and not total.contains_subspace(sub):
        raise LinalgError("quotient_map: sub is not contained in total")
    sub_pivots = set(sub.pivots)
    if not sub_pivots.issubset(set(total.pivots)):
        raise LinalgError("quotient_map: sub pivots escape total")
    reps = []
    rep_cols = []
    for row, pc in zip(total.basis, total.pivots):
        if pc not in sub_pivots:
            reps.append(row)
            rep_cols.append(pc)
    proj = []
    for rc in rep_cols:
        prow = zero_row(total.ambient)
        prow[rc] = GR_ONE
        for srow, spc in zip(sub.basis, sub.pivots):
            e = srow[rc]
            if e:
                prow[spc] = prow[spc] - e
        proj.append(prow)
    return len(reps), reps, proj
