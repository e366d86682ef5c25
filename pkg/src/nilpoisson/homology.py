"""Cohomology of the bigraded complex and the filtration spectral sequence.

The double complex A^{p,q} (p vector factors, q form factors) carries the
vertical differential dbar and, once a holomorphic Poisson bivector lam is
fixed, the horizontal ad_lam.  Pages of the column filtration are realized by
the subspace lattice: Z_r = F^p intersect D^{-1} F^{p+r} computed as exact
kernels, E_r as canonical quotients, d_r by projecting D of the chosen
representatives.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .calculus import (CalculusContext, ad_images, apply_odd_derivation,
                       dbar, schouten)
from .errors import (InternalInvariantError, NotAbelianError, ValidationError)
from .exact_linalg import (ExactMatrix, Subspace, kernel_basis, quotient_map,
                           zero_row)
from .exterior import (FORM_BASE, MixedElement, cell_monomials,
                       element_coords, element_from_coords, graded_monomials,
                       mono_bidegree)
from .lie_structure import AlgebraPresentation
from .scalars import GR_ONE, GR_ZERO


def _matrix_of(images_fn, source_basis, target_basis, target_index, where):
    cols = []
    dim_t = len(target_basis)
    for mono in source_basis:
        val = images_fn(MixedElement.term(mono, GR_ONE))
        cols.append(element_coords(val, target_index, dim_t, where))
    rows = [[cols[j][i] for j in range(len(source_basis))] for i in range(dim_t)]
    return ExactMatrix(rows, len(source_basis))


class BigradedComplex:
    """Cell bases plus exact dbar and ad_lam matrices, identities verified."""

    def __init__(self, ctx: CalculusContext, lam: MixedElement | None = None,
                 check: bool = True):
        self.ctx = ctx
        self.lam = lam if lam is not None else MixedElement()
        n = ctx.n
        self.n = n
        if self.lam:
            pq = self.lam.homogeneous_bidegree()
            if pq != (2, 0):
                raise ValidationError("lam must be a homogeneous (2,0) bivector")
            bad = dbar(ctx, self.lam)
            if bad:
                raise ValidationError(
                    f"lam is not holomorphic: dbar(lam) = {bad} != 0")
            sq = schouten(ctx, self.lam, self.lam)
            if sq:
                raise ValidationError(
                    f"lam is not Poisson: [lam, lam] = {sq} != 0")
        self._ad_images = ad_images(ctx, self.lam) if self.lam else {}
        self._dbar_images = {}
        for i in range(1, n + 1):
            self._dbar_images[i] = ctx.dbar_v[i]
            f = ctx.dbar_form[i]
            if f:
                self._dbar_images[FORM_BASE + i] = f

        self.basis: dict[tuple[int, int], list] = {}
        self.index: dict[tuple[int, int], dict] = {}
        for p in range(n + 1):
            for q in range(n + 1):
                b = cell_monomials(n, p, q)
                self.basis[(p, q)] = b
                self.index[(p, q)] = {m: i for i, m in enumerate(b)}

        self.dbar_mat: dict[tuple[int, int], ExactMatrix] = {}
        self.ad_mat: dict[tuple[int, int], ExactMatrix] = {}
        for p in range(n + 1):
            for q in range(n + 1):
                src = self.basis[(p, q)]
                if q + 1 <= n:
                    self.dbar_mat[(p, q)] = _matrix_of(
                        lambda e: apply_odd_derivation(self._dbar_images, e),
                        src, self.basis[(p, q + 1)], self.index[(p, q + 1)],
                        "dbar")
                if self.lam and p + 1 <= n:
                    self.ad_mat[(p, q)] = _matrix_of(
                        lambda e: apply_odd_derivation(self._ad_images, e),
                        src, self.basis[(p + 1, q)], self.index[(p + 1, q)],
                        "ad_lam")
        if check:
            self._check_identities()

    def _check_identities(self):
        n = self.n
        for p in range(n + 1):
            for q in range(n + 1):
                d1 = self.dbar_mat.get((p, q))
                if d1 is not None:
                    d2 = self.dbar_mat.get((p, q + 1))
                    if d2 is not None and not d2.mul(d1).is_zero():
                        raise InternalInvariantError("dbar^2 != 0")
                if not self.lam:
                    continue
                a1 = self.ad_mat.get((p, q))
                if a1 is not None:
                    a2 = self.ad_mat.get((p + 1, q))
                    if a2 is not None and not a2.mul(a1).is_zero():
                        raise InternalInvariantError("ad_lam^2 != 0")
                    dv = self.dbar_mat.get((p + 1, q))
                    av = self.ad_mat.get((p, q + 1))
                    if d1 is not None and dv is not None and av is not None:
                        anti = dv.mul(a1).rows
                        other = av.mul(d1).rows
                        for r1, r2 in zip(anti, other):
                            for x, y in zip(r1, r2):
                                if x + y:
                                    raise InternalInvariantError(
                                        "dbar ad_lam + ad_lam dbar != 0")

    def cell_dim(self, p: int, q: int) -> int:
        return len(self.basis.get((p, q), []))


@dataclass
class CohomologyCell:
    """One cohomology space with canonical representatives."""

    label: tuple
    basis: list
    cocycles: Subspace
    boundaries: Subspace
    dim: int
    reps: list
    proj: list

    def representatives(self) -> list[MixedElement]:
        return [element_from_coords(r, self.basis) for r in self.reps]

    def class_coords(self, coords) -> list:
        if not self.cocycles.contains(coords):
            raise InternalInvariantError("vector is not a cocycle")
        return [sum_entries(prow, coords) for prow in self.proj]


def sum_entries(prow, coords):
    acc = GR_ZERO
    for a, b in zip(prow, coords):
        if a and b:
            acc = acc + a * b
    return acc


def _image_subspace(mat: ExactMatrix, ambient: int) -> Subspace:
    if mat is None or mat.ncols == 0:
        return Subspace.zero(ambient)
    return Subspace.from_rows(ambient, mat.column_space_rows())


def dolbeault_cohomology(bc: BigradedComplex, p: int, q: int) -> CohomologyCell:
    """H^q of the column p with canonical representatives."""
    n = bc.n
    basis = bc.basis.get((p, q), [])
    dim_cell = len(basis)
    if dim_cell == 0:
        z = Subspace.zero(0)
        return CohomologyCell((p, q), [], z, z, 0, [], [])
    out_mat = bc.dbar_mat.get((p, q))
    if out_mat is None:
        cocycles = Subspace.full(dim_cell)
    else:
        cocycles = Subspace.from_rows(dim_cell, out_mat.kernel())
    in_mat = bc.dbar_mat.get((p, q - 1)) if q >= 1 else None
    boundaries = _image_subspace(in_mat, dim_cell)
    # containment is the verified square-zero identity
    dim, reps, proj = quotient_map(boundaries, cocycles, check=False)
    return CohomologyCell((p, q), basis, cocycles, boundaries, dim, reps, proj)


def dolbeault_table(bc: BigradedComplex) -> dict[tuple[int, int], CohomologyCell]:
    return {(p, q): dolbeault_cohomology(bc, p, q)
            for p in range(bc.n + 1) for q in range(bc.n + 1)}


class TotalComplex:
    """K^k with the total differential D = dbar + ad_lam, basis ordered by
    vector degree descending so every F^p is a leading coordinate block."""

    def __init__(self, bc: BigradedComplex):
        self.bc = bc
        n = bc.n
        self.n = n
        self.nmax = 2 * n
        self.bases: dict[int, list] = {}
        self.index: dict[int, dict] = {}
        self.pdeg: dict[int, list[int]] = {}
        for k in range(self.nmax + 1):
            b = graded_monomials(n, k)
            self.bases[k] = b
            self.index[k] = {m: i for i, m in enumerate(b)}
            self.pdeg[k] = [mono_bidegree(m)[0] for m in b]
        self.dmat: dict[int, ExactMatrix] = {}
        for k in range(self.nmax + 1):
            self.dmat[k] = self._build_d(k)
        # column-sparse view; D has a handful of entries per column
        self.dcols: dict[int, list] = {}
        for k in range(self.nmax + 1):
            rows = self.dmat[k].rows
            cols = [[] for _ in self.bases[k]]
            for i, row in enumerate(rows):
                for j, c in enumerate(row):
                    if c:
                        cols[j].append((i, c))
            self.dcols[k] = cols

    def _build_d(self, k: int) -> ExactMatrix:
        src = self.bases[k]
        if k + 1 > self.nmax:
            return ExactMatrix([[] for _ in range(0)], len(src))
        tgt_index = self.index[k + 1]
        dim_t = len(self.bases[k + 1])
        rows = [zero_row(len(src)) for _ in range(dim_t)]
        for j, mono in enumerate(src):
            p, q = mono_bidegree(mono)
            col = MixedElement()
            dm = self.bc.dbar_mat.get((p, q))
            if dm is not None:
                cell_idx = self.bc.index[(p, q)][mono]
                tgt_basis = self.bc.basis[(p, q + 1)]
                for i2 in range(dm.nrows):
                    c = dm.rows[i2][cell_idx]
                    if c:
                        col.terms[tgt_basis[i2]] = c
            am = self.bc.ad_mat.get((p, q))
            if am is not None:
                cell_idx = self.bc.index[(p, q)][mono]
                tgt_basis = self.bc.basis[(p + 1, q)]
                for i2 in range(am.nrows):
                    c = am.rows[i2][cell_idx]
                    if c:
                        prev = col.terms.get(tgt_basis[i2])
                        col.terms[tgt_basis[i2]] = c if prev is None else prev + c
            for m2, c in col.terms.items():
                if c:
                    rows[tgt_index[m2]][j] = c
        return ExactMatrix(rows, len(src))

    def apply_d(self, k: int, coords):
        out = zero_row(self.dmat[k].nrows)
        cols = self.dcols[k]
        for j, c in enumerate(coords):
            if c:
                for i, a in cols[j]:
                    out[i] = out[i] + c * a
        return out


def poisson_cohomology(bc: BigradedComplex, tc: TotalComplex, k: int) -> CohomologyCell:
    """H^k of (K, dbar + ad_lam); zero beyond the top degree."""
    if k < 0 or k > tc.nmax:
        z = Subspace.zero(0)
        return CohomologyCell((k,), [], z, z, 0, [], [])
    basis = tc.bases[k]
    dim_cell = len(basis)
    dk = tc.dmat.get(k)
    if dk is None or dk.nrows == 0:
        cocycles = Subspace.full(dim_cell)
    else:
        cocycles = Subspace.from_rows(dim_cell, dk.kernel())
    dprev = tc.dmat.get(k - 1) if k >= 1 else None
    boundaries = _image_subspace(dprev, dim_cell)
    # containment is the verified square-zero identity of the total differential
    dim, reps, proj = quotient_map(boundaries, cocycles, check=False)
    return CohomologyCell((k,), basis, cocycles, boundaries, dim, reps, proj)


def poisson_betti(tc: TotalComplex) -> dict[int, int]:
    """dim H^k for every k from two ranks per degree."""
    ranks = {k: tc.dmat[k].rank() for k in range(tc.nmax + 1)}
    out = {}
    for k in range(tc.nmax + 1):
        out[k] = len(tc.bases[k]) - ranks[k] - (ranks[k - 1] if k else 0)
    return out


@dataclass
class SpectralPage:
    r: int
    dims: dict = field(default_factory=dict)
    reps: dict = field(default_factory=dict)
    projs: dict = field(default_factory=dict)
    nums: dict = field(default_factory=dict)
    d: dict = field(default_factory=dict)

    def dim(self, p: int, q: int) -> int:
        return self.dims.get((p, q), 0)

    def nonzero_cells(self):
        return sorted(k for k, v in self.dims.items() if v)


class SpectralEngine:
    """Pages of the vector-degree filtration of a total complex."""

    def __init__(self, tc: TotalComplex):
        self.tc = tc
        self.n = tc.n
        self._z: dict = {}
        self._img: dict = {}
        self._f: dict = {}

    def filtration(self, p: int, k: int) -> Subspace:
        if k < 0 or k > self.tc.nmax:
            return Subspace.zero(0)
        key = (p, k)
        hit = self._f.get(key)
        if hit is not None:
            return hit
        pdeg = self.tc.pdeg[k]
        amb = len(pdeg)
        rows = []
        pivots = []
        for i, d in enumerate(pdeg):
            if d >= p:
                row = zero_row(amb)
                row[i] = GR_ONE
                rows.append(row)
                pivots.append(i)
        sub = Subspace(amb, rows, pivots)
        self._f[key] = sub
        return sub

    def z_space(self, r: int, p: int, k: int) -> Subspace:
        """Z_r^{p,*} in K^k: x in F^p with D x in F^{p+r}."""
        if k < 0 or k > self.tc.nmax:
            return Subspace.zero(0)
        if r <= 0:
            return self.filtration(p, k)
        key = (r, p, k)
        hit = self._z.get(key)
        if hit is not None:
            return hit
        prev = self.z_space(r - 1, p, k)
        if prev.dim == 0:
            self._z[key] = prev
            return prev
        if k + 1 > self.tc.nmax:
            self._z[key] = prev
            return prev
        # only the block of target degree exactly p + r - 1 is newly constrained
        tgt_rows = [i for i, d in enumerate(self.tc.pdeg[k + 1]) if d == p + r - 1]
        if not tgt_rows:
            self._z[key] = prev
            return prev
        prev_images = self.image_rows_of_z(r - 1, p, k)
        small = [[y[i] for y in prev_images] for i in tgt_rows]
        coeffs = kernel_basis(small, prev.dim)
        rows = []
        for cvec in coeffs:
            acc = zero_row(prev.ambient)
            for c, b in zip(cvec, prev.basis):
                if c:
                    for a in range(prev.ambient):
                        if b[a]:
                            acc[a] = acc[a] + c * b[a]
            rows.append(acc)
        sub = Subspace.from_rows(prev.ambient, rows)
        self._z[key] = sub
        return sub

    def image_rows_of_z(self, r: int, p: int, k: int) -> list:
        """D applied to the Z_r^{p} basis in K^k, as raw rows in K^{k+1}."""
        if k < 0 or k + 1 > self.tc.nmax:
            return []
        key = (r, p, k)
        hit = self._img.get(key)
        if hit is not None:
            return hit
        z = self.z_space(r, p, k)
        rows = [self.tc.apply_d(k, b) for b in z.basis]
        self._img[key] = rows
        return rows

    def page(self, r: int) -> SpectralPage:
        page = SpectralPage(r=r)
        n = self.n
        for p in range(n + 1):
            for q in range(n + 1):
                k = p + q
                num = self.z_space(r, p, k)
                if num.dim == 0:
                    page.dims[(p, q)] = 0
                    page.reps[(p, q)] = []
                    page.projs[(p, q)] = []
                    page.nums[(p, q)] = num
                    continue
                den = Subspace.from_rows(
                    num.ambient,
                    self.z_space(r - 1, p + 1, k).basis
                    + self.image_rows_of_z(r - 1, p - r + 1, k - 1))
                # containment follows from D F^a <= F^a and D^2 = 0
                dim, reps, proj = quotient_map(den, num, check=False)
                page.dims[(p, q)] = dim
                page.reps[(p, q)] = reps
                page.projs[(p, q)] = proj
                page.nums[(p, q)] = num
        for (p, q), dim in page.dims.items():
            if dim == 0:
                continue
            tp, tq = p + r, q - r + 1
            tdim = page.dims.get((tp, tq), 0)
            if tdim == 0:
                continue
            k = p + q
            cols = []
            tnum = page.nums[(tp, tq)]
            tproj = page.projs[(tp, tq)]
            for rep in page.reps[(p, q)]:
                y = self.tc.apply_d(k, rep)
                if not tnum.contains(y):
                    raise InternalInvariantError(
                        "d_r image leaves Z_r; filtration bookkeeping broken")
                cols.append([sum_entries(prow, y) for prow in tproj])
            rows = [[cols[j][i] for j in range(dim)] for i in range(tdim)]
            page.d[(p, q)] = ExactMatrix(rows, dim)
        return page


@dataclass
class PageResult:
    pages: list
    tc: TotalComplex
    engine: SpectralEngine

    def page(self, r: int) -> SpectralPage:
        return self.pages[r - 1]


def e2_dims_via_induced_map(bc: BigradedComplex,
                            cells: dict | None = None) -> dict[tuple[int, int], int]:
    """Second page dimensions from ad_lam acting on column cohomology."""
    n = bc.n
    if cells is None:
        cells = dolbeault_table(bc)
    induced: dict[tuple[int, int], ExactMatrix] = {}
    for p in range(n + 1):
        for q in range(n + 1):
            src = cells[(p, q)]
            if src.dim == 0 or p + 1 > n:
                continue
            tgt = cells[(p + 1, q)]
            am = bc.ad_mat.get((p, q))
            cols = []
            for rep in src.reps:
                y = am.apply(rep) if am is not None else zero_row(bc.cell_dim(p + 1, q))
                if tgt.dim:
                    cols.append(tgt.class_coords(y))
                else:
                    if am is not None and not tgt.cocycles.contains(y):
                        raise InternalInvariantError("induced map image not closed")
                    cols.append([])
            if tgt.dim:
                rows = [[cols[j][i] for j in range(src.dim)] for i in range(tgt.dim)]
                induced[(p, q)] = ExactMatrix(rows, src.dim)
    dims = {}
    for p in range(n + 1):
        for q in range(n + 1):
            h = cells[(p, q)].dim
            out = induced.get((p, q))
            rank_out = out.rank() if out is not None else 0
            inc = induced.get((p - 1, q))
            rank_in = inc.rank() if inc is not None else 0
            dims[(p, q)] = h - rank_out - rank_in
    return dims


def spectral_pages(bc: BigradedComplex, r_max: int | None = None,
                   verify: bool = True) -> PageResult:
    n = bc.n
    if r_max is None:
        r_max = n + 1
    if r_max < 1:
        raise ValidationError("r_max must be at least 1")
    tc = TotalComplex(bc)
    engine = SpectralEngine(tc)
    pages = [engine.page(r) for r in range(1, r_max + 1)]
    if verify:
        table = dolbeault_table(bc)
        for (p, q), cell_dims in pages[0].dims.items():
            want = table[(p, q)].dim
            if cell_dims != want:
                raise InternalInvariantError(
                    f"E_1 dim at {(p, q)} is {cell_dims}, column cohomology gives {want}")
        if len(pages) >= 2:
            want2 = e2_dims_via_induced_map(bc, table)
            for key, val in pages[1].dims.items():
                if want2.get(key, 0) != val:
                    raise InternalInvariantError(
                        f"E_2 dim at {key} is {val}, induced-map formula gives {want2.get(key, 0)}")
    return PageResult(pages=pages, tc=tc, engine=engine)


@dataclass
class DegenerationVerdict:
    degenerates: bool
    failure: tuple | None
    witness_source: MixedElement | None
    witness_image: MixedElement | None
    pages: PageResult
    hk_dims: dict
    einf_sums: dict

    @property
    def verdict(self) -> str:
        if self.degenerates:
            return "degenerates-at-E2"
        r, p, q = self.failure
        return f"fails-at-({r},{p},{q})"


def degeneration_verdict(bc: BigradedComplex,
                         r_max: int | None = None) -> DegenerationVerdict:
    n = bc.n
    # pages stabilize at n + 1 (any later differential leaves the p range),
    # so the verdict always computes at least that far
    r_max = n + 1 if r_max is None else max(r_max, n + 1)
    result = spectral_pages(bc, r_max=r_max)
    tc = result.tc
    failure = None
    witness_src = witness_img = None
    for page in result.pages:
        if page.r < 2:
            continue
        for (p, q) in sorted(page.d):
            mat = page.d[(p, q)]
            if mat.is_zero():
                continue
            if failure is None:
                failure = (page.r, p, q)
                for j in range(mat.ncols):
                    col = [mat.rows[i][j] for i in range(mat.nrows)]
                    if any(col):
                        k = p + q
                        src = element_from_coords(page.reps[(p, q)][j], tc.bases[k])
                        img_coords = zero_row(len(tc.bases[k + 1]))
                        treps = page.reps[(p + page.r, q - page.r + 1)]
                        for c, rep in zip(col, treps):
                            if c:
                                for a in range(len(img_coords)):
                                    if rep[a]:
                                        img_coords[a] = img_coords[a] + c * rep[a]
                        witness_src = src
                        witness_img = element_from_coords(img_coords, tc.bases[k + 1])
                        break
        if failure is not None:
            break
    hk = poisson_betti(tc)
    einf = {}
    last = result.pages[-1]
    for k in range(2 * n + 1):
        einf[k] = sum(last.dim(p, k - p) for p in range(0, min(k, n) + 1))
        if hk[k] != einf[k]:
            raise InternalInvariantError(
                f"E_infinity total {einf[k]} differs from H^{k} = {hk[k]}")
    return DegenerationVerdict(
        degenerates=failure is None,
        failure=failure,
        witness_source=witness_src,
        witness_image=witness_img,
        pages=result,
        hk_dims=hk,
        einf_sums=einf,
    )


@dataclass
class DBicomplexReport:
    ell: int
    c_dim: int
    cell_dims: dict
    total_dims: dict
    direct_dims: dict
    identities_ok: bool

    @property
    def match(self) -> bool:
        return all(self.total_dims[m] == self.direct_dims[m] for m in self.total_dims)


def d_bicomplex_crosscheck(ctx: CalculusContext, ell: int) -> DBicomplexReport:
    """H^m of the center/complement bicomplex against plain column cohomology.

    The bicomplex lives in a frame adapted to the center: generators 1..a span
    c^(1,0) and the rest a chosen complement; dbar splits into a part raising
    the center-degree (with the complement-degree dropping) and a part fixing
    it, and the total cohomology must reproduce H^m with ell vector factors.
    """
    if not ctx.abelian:
        raise NotAbelianError("the bicomplex split needs an abelian structure")
    n = ctx.n
    if not (0 <= ell <= n):
        raise ValidationError(f"coefficient degree must be within 0..{n}")
    c10 = ctx.grading.c10
    a = c10.dim
    full = Subspace.full(n)
    _, t_reps, _ = quotient_map(c10, full)
    frame_rows = [ctx.frame.vector_from_coords(row) for row in c10.basis]
    frame_rows += [ctx.frame.vector_from_coords(row) for row in t_reps]
    adapted = AlgebraPresentation(
        ctx.presentation.dim, ctx.presentation.brackets, ctx.presentation.jmat,
        frame_rows=frame_rows, name=ctx.presentation.name + "#center-adapted")
    actx = CalculusContext(adapted)
    abc = BigradedComplex(actx)

    def cdeg(mono):
        return sum(1 for g in mono if g < FORM_BASE and g <= a)

    cell_dims: dict = {}
    c_mats: dict[int, list] = {}
    t_mats: dict[int, list] = {}
    bases = {m: abc.basis[(ell, m)] for m in range(n + 1)}
    for m in range(n + 1):
        for mono in bases[m]:
            p = cdeg(mono)
            key = (p, m - p)
            cell_dims[key] = cell_dims.get(key, 0) + 1
    identities_ok = True
    dsplit: dict[int, tuple] = {}
    for m in range(n):
        mat = abc.dbar_mat[(ell, m)]
        src, tgt = bases[m], bases[m + 1]
        cm = [zero_row(len(src)) for _ in range(len(tgt))]
        tm = [zero_row(len(src)) for _ in range(len(tgt))]
        for j, mono in enumerate(src):
            pj = cdeg(mono)
            for i in range(len(tgt)):
                c = mat.rows[i][j]
                if not c:
                    continue
                pi = cdeg(tgt[i])
                if pi == pj + 1:
                    cm[i][j] = c
                elif pi == pj:
                    tm[i][j] = c
                else:
                    raise InternalInvariantError(
                        "bicomplex differential moves center-degree by "
                        f"{pi - pj}")
        dsplit[m] = (ExactMatrix(cm, len(src)), ExactMatrix(tm, len(src)))
    for m in range(n - 1):
        c1, t1 = dsplit[m]
        c2, t2 = dsplit[m + 1]
        if not c2.mul(c1).is_zero() or not t2.mul(t1).is_zero():
            identities_ok = False
        mix = c2.mul(t1).rows
        mix2 = t2.mul(c1).rows
        for r1, r2 in zip(mix, mix2):
            for x, y in zip(r1, r2):
                if x + y:
                    identities_ok = False
    if not identities_ok:
        raise InternalInvariantError("bicomplex square or anticommutation identity failed")

    total_dims = {}
    for m in range(n + 1):
        dim_cell = len(bases[m])
        out = abc.dbar_mat.get((ell, m))
        null = dim_cell - (out.rank() if out is not None else 0)
        prev = abc.dbar_mat.get((ell, m - 1)) if m >= 1 else None
        rk = prev.rank() if prev is not None else 0
        total_dims[m] = null - rk
    base = BigradedComplex(ctx)
    direct_dims = {m: dolbeault_cohomology(base, ell, m).dim for m in range(n + 1)}
    return DBicomplexReport(ell=ell, c_dim=a, cell_dims=cell_dims,
                            total_dims=total_dims, direct_dims=direct_dims,
                            identities_ok=identities_ok)
