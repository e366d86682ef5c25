"""Nilpotent Lie algebras with complex structure: validation, frames, grading.

A presentation is a real 2n-dimensional algebra given by rational structure
constants for basis pairs i < j together with a rational matrix J, J^2 = -1.
The (1,0) frame v_1..v_n diagonalizes J; catalog presets carry a preferred
frame so printed formulas match the usual normalization v_j = (x_j - i y_j)/2.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InternalInvariantError, ValidationError
from .exact_linalg import Subspace, invert, kernel_basis, quotient_map
from .scalars import (GR_I, GR_ONE, GR_ZERO, GaussRational, RAT_ZERO,
                      Rational, rational_from_string, rational_to_string)

Vector = list  # of GaussRational, ambient coordinates


class AlgebraPresentation:
    """Real nilpotent Lie algebra with complex structure, exact data."""

    __slots__ = ("dim", "brackets", "jmat", "frame_rows", "name")

    def __init__(self, dim, brackets, jmat, frame_rows=None, name="algebra"):
        self.dim = dim
        self.brackets = brackets  # {(i, j): {k: Rational}} with i < j, 1-based
        self.jmat = jmat  # rows: (J e_j)_i = jmat[i][j]
        self.frame_rows = frame_rows  # optional preferred (1,0) basis rows
        self.name = name

    def bracket_basis(self, i: int, j: int) -> dict[int, Rational]:
        if i == j:
            return {}
        if i < j:
            return self.brackets.get((i, j), {})
        out = self.brackets.get((j, i), {})
        return {k: -c for k, c in out.items()}

    def bracket_vectors(self, u: Vector, w: Vector) -> Vector:
        """Bilinear extension of the structure constants over Q(i)."""
        acc = [GR_ZERO] * self.dim
        for (i, j), out in self.brackets.items():
            ui, uj = u[i - 1], u[j - 1]
            wi, wj = w[i - 1], w[j - 1]
            f = GR_ZERO
            if ui and wj:
                f = ui * wj
            if uj and wi:
                f = f - uj * wi
            if not f:
                continue
            for k, c in out.items():
                acc[k - 1] = acc[k - 1] + f.scale(c)
        return acc

    def j_apply(self, u: Vector) -> Vector:
        out = []
        for i in range(self.dim):
            acc = GR_ZERO
            row = self.jmat[i]
            for j in range(self.dim):
                c = row[j]
                if c and u[j]:
                    acc = acc + u[j].scale(c)
            out.append(acc)
        return out

    def basis_vector(self, i: int) -> Vector:
        v = [GR_ZERO] * self.dim
        v[i - 1] = GR_ONE
        return v


@dataclass
class ValidationReport:
    dim_even: bool = True
    indices_ok: bool = True
    antisymmetry_ok: bool = True
    jacobi_ok: bool = True
    jacobi_failure: tuple | None = None
    j_square_ok: bool = True
    nilpotent: bool = True
    step: int | None = None
    integrable: bool = False
    abelian: bool = False
    errors: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors

    def summary(self) -> str:
        lines = [
            f"dim even:            {self.dim_even}",
            f"bracket indices:     {self.indices_ok}",
            f"jacobi:              {self.jacobi_ok}"
            + (f"  (fails at {self.jacobi_failure})" if self.jacobi_failure else ""),
            f"J^2 = -1:            {self.j_square_ok}",
            f"nilpotent:           {self.nilpotent}"
            + (f"  (step {self.step})" if self.step else ""),
            f"J integrable:        {self.integrable}",
            f"J abelian:           {self.abelian}",
            f"valid:               {self.ok}",
        ]
        if self.errors:
            lines.extend("error: " + e for e in self.errors)
        return "\n".join(lines)


def validate(p: AlgebraPresentation) -> ValidationReport:
    rep = ValidationReport()
    n2 = p.dim
    if n2 % 2 or n2 <= 0:
        rep.dim_even = False
        rep.errors.append(f"dimension {n2} is not a positive even number")
    for (i, j), out in p.brackets.items():
        if not (1 <= i < j <= n2) or any(not (1 <= k <= n2) for k in out):
            rep.indices_ok = False
            rep.errors.append(f"bracket ({i},{j}) has out-of-range indices")
            break
    if not rep.ok:
        return rep

    basis = [p.basis_vector(i) for i in range(1, n2 + 1)]
    table = {}
    for i in range(1, n2 + 1):
        for j in range(i + 1, n2 + 1):
            table[(i, j)] = p.bracket_vectors(basis[i - 1], basis[j - 1])

    def tbl(i, j):
        if i == j:
            return [GR_ZERO] * n2
        if i < j:
            return table[(i, j)]
        return [-c for c in table[(j, i)]]

    for i in range(1, n2 + 1):
        for j in range(i + 1, n2 + 1):
            for k in range(j + 1, n2 + 1):
                acc = [GR_ZERO] * n2
                for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                    inner = tbl(a, b)
                    term = p.bracket_vectors(inner, basis[c - 1])
                    acc = [x + y for x, y in zip(acc, term)]
                if any(acc):
                    rep.jacobi_ok = False
                    rep.jacobi_failure = (i, j, k)
                    rep.errors.append(f"jacobi identity fails on ({i},{j},{k})")
                    break
            if not rep.jacobi_ok:
                break
        if not rep.jacobi_ok:
            break

    for j in range(1, n2 + 1):
        jj = p.j_apply(p.j_apply(basis[j - 1]))
        want = [-c for c in basis[j - 1]]
        if jj != want:
            rep.j_square_ok = False
            rep.errors.append(f"J^2 != -1 on basis vector {j}")
            break

    series = central_series(p)
    if series[-1].dim != 0:
        rep.nilpotent = False
        rep.errors.append("descending central series does not reach zero")
    else:
        rep.step = len(series) - 1  # series = [g^0, ..., g^{s+1} = 0]

    if rep.j_square_ok:
        jb = [p.j_apply(b) for b in basis]
        integrable = True
        abelian = True
        for i in range(1, n2 + 1):
            for j in range(i + 1, n2 + 1):
                lhs = p.bracket_vectors(jb[i - 1], jb[j - 1])
                base = tbl(i, j)
                if lhs != base:
                    abelian = False
                nij = [a - b for a, b in zip(lhs, base)]
                mixed = [
                    x + y
                    for x, y in zip(
                        p.bracket_vectors(jb[i - 1], basis[j - 1]),
                        p.bracket_vectors(basis[i - 1], jb[j - 1]),
                    )
                ]
                nij = [a - b for a, b in zip(nij, p.j_apply(mixed))]
                if any(nij):
                    integrable = False
        rep.integrable = integrable
        rep.abelian = abelian
        if abelian and not integrable:
            raise InternalInvariantError("abelian complex structure failed integrability")
        if not integrable:
            rep.errors.append("complex structure is not integrable (Nijenhuis tensor != 0)")
    return rep


def central_series(p: AlgebraPresentation, cap: int = 64) -> list[Subspace]:
    """Descending central series g^0 = g, g^{k+1} = [g^k, g], until it stalls."""
    n2 = p.dim
    series = [Subspace.full(n2)]
    while len(series) < cap:
        prev = series[-1]
        rows = []
        for b in prev.basis:
            for j in range(1, n2 + 1):
                w = p.bracket_vectors(b, p.basis_vector(j))
                if any(w):
                    rows.append(w)
        nxt = Subspace.from_rows(n2, rows)
        series.append(nxt)
        if nxt.dim == 0 or nxt.dim == prev.dim:
            break
    return series


def center_subspace(p: AlgebraPresentation) -> Subspace:
    n2 = p.dim
    stacked = []
    for j in range(1, n2 + 1):
        # rows of the map x -> [x, e_j]
        cols = [p.bracket_vectors(p.basis_vector(i), p.basis_vector(j)) for i in range(1, n2 + 1)]
        for k in range(n2):
            stacked.append([cols[i][k] for i in range(n2)])
    return Subspace.from_rows(n2, kernel_basis(stacked, n2))


class ComplexFrame:
    """Diagonalizing frame for J with exact dual coframe and brackets."""

    __slots__ = (
        "presentation", "n", "v_rows", "vbar_rows", "omega_rows",
        "omegabar_rows", "bracket_vv", "bracket_vvbar", "abelian",
    )

    def __init__(self, presentation, n, v_rows, vbar_rows, omega_rows,
                 omegabar_rows, bracket_vv, bracket_vvbar, abelian):
        self.presentation = presentation
        self.n = n
        self.v_rows = v_rows
        self.vbar_rows = vbar_rows
        self.omega_rows = omega_rows
        self.omegabar_rows = omegabar_rows
        self.bracket_vv = bracket_vv      # {(i,j) i<j: (v_coords, vbar_coords)}
        self.bracket_vvbar = bracket_vvbar  # {(i,j) all: (v_coords, vbar_coords)}
        self.abelian = abelian

    def coords_10(self, u: Vector) -> list[GaussRational]:
        return [_dot(w, u) for w in self.omega_rows]

    def coords_01(self, u: Vector) -> list[GaussRational]:
        return [_dot(w, u) for w in self.omegabar_rows]

    def vector_from_coords(self, coords) -> Vector:
        out = [GR_ZERO] * (2 * self.n)
        for c, row in zip(coords, self.v_rows):
            if c:
                for a in range(2 * self.n):
                    if row[a]:
                        out[a] = out[a] + c * row[a]
        return out


def _dot(a, b) -> GaussRational:
    acc = GR_ZERO
    for x, y in zip(a, b):
        if x and y:
            acc = acc + x * y
    return acc


def _conj_row(row):
    return [c.conjugate() for c in row]


def complex_frame(p: AlgebraPresentation) -> ComplexFrame:
    """Build the (1,0) frame; raises ValidationError when J is not integrable."""
    rep = validate(p)
    if not rep.ok:
        raise ValidationError("; ".join(rep.errors))
    n2 = p.dim
    n = n2 // 2
    jg = [[GaussRational(p.jmat[i][j], RAT_ZERO) for j in range(n2)] for i in range(n2)]
    if p.frame_rows is not None:
        v_rows = [list(r) for r in p.frame_rows]
        if len(v_rows) != n:
            raise ValidationError("preferred frame must have dim/2 rows")
        for r in v_rows:
            ju = p.j_apply(r)
            iu = [GR_I * c for c in r]
            if ju != iu:
                raise ValidationError("preferred frame row is not a (1,0) vector")
    else:
        shifted = [list(row) for row in jg]
        for k in range(n2):
            shifted[k][k] = shifted[k][k] - GR_I
        v_rows = kernel_basis(shifted, n2)
        if len(v_rows) != n:
            raise ValidationError("the +i eigenspace of J has wrong dimension")

    vbar_rows = [_conj_row(r) for r in v_rows]
    stacked = v_rows + vbar_rows
    try:
        binv = invert(stacked)
    except Exception as exc:
        raise ValidationError("frame rows do not span the complexification") from exc
    # dual coframe rows: omega_i(v_j) = delta, omega_i(vbar_j) = 0 and conversely
    w_all = [[binv[a][k] for a in range(n2)] for k in range(n2)]
    omega_rows = w_all[:n]
    omegabar_rows = w_all[n:]

    bracket_vv = {}
    abelian = True
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            u = p.bracket_vectors(v_rows[i - 1], v_rows[j - 1])
            c10 = [_dot(w, u) for w in omega_rows]
            c01 = [_dot(w, u) for w in omegabar_rows]
            if any(c01):
                raise InternalInvariantError(
                    "integrable structure produced a (0,1) part in [v_i, v_j]"
                )
            if any(c10):
                abelian = False
            bracket_vv[(i, j)] = (c10, c01)
    bracket_vvbar = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            u = p.bracket_vectors(v_rows[i - 1], vbar_rows[j - 1])
            bracket_vvbar[(i, j)] = (
                [_dot(w, u) for w in omega_rows],
                [_dot(w, u) for w in omegabar_rows],
            )
    if abelian != rep.abelian:
        raise InternalInvariantError("frame abelian flag disagrees with validation")
    return ComplexFrame(p, n, v_rows, vbar_rows, omega_rows, omegabar_rows,
                        bracket_vv, bracket_vvbar, abelian)


@dataclass
class Grading:
    """Central-series data refined by J, in both real and frame coordinates."""

    n: int
    step: int                      # s + 1
    series: list                   # Subspace, real ambient; index 0..s+1
    center: "Subspace"
    gj: list                       # g_J^k = g^k + J g^k, real ambient
    gj10: list                     # (1,0) parts, frame coordinates (ambient n)
    t10: dict                      # k -> complement Subspace, k = 1..s+1
    c10: "Subspace"                # (1,0) part of the center, frame coordinates

    @property
    def s(self) -> int:
        return self.step - 1


def _part10(p: AlgebraPresentation, frame: ComplexFrame, sub: Subspace) -> Subspace:
    """(1,0) part of a J-invariant real subspace, in frame coordinates."""
    rows = []
    for u in sub.basis:
        ju = p.j_apply(u)
        proj = [(c - GR_I * d).scale(Rational(1, 2)) for c, d in zip(u, ju)]
        rows.append(frame.coords_10(proj))
    out = Subspace.from_rows(frame.n, rows)
    if 2 * out.dim != sub.dim:
        raise InternalInvariantError("J-invariant subspace has odd splitting")
    return out


def grading(p: AlgebraPresentation, frame: ComplexFrame | None = None) -> Grading:
    if frame is None:
        frame = complex_frame(p)
    n2, n = p.dim, frame.n
    series = central_series(p)
    if series[-1].dim != 0:
        raise ValidationError("algebra is not nilpotent")
    # drop a stalled tail; keep g^0 .. g^{s+1} with g^{s+1} = 0
    while len(series) >= 2 and series[-2].dim == 0:
        series.pop()
    step = len(series) - 1
    center = center_subspace(p)

    gj = []
    for sub in series:
        jrows = [p.j_apply(u) for u in sub.basis]
        gj.append(Subspace.from_rows(n2, sub.basis + jrows))
    gj10 = [_part10(p, frame, sub) for sub in gj]

    t10 = {}
    for k in range(1, step + 1):
        upper, lower = gj10[k - 1], gj10[k]
        _, reps, _ = quotient_map(lower, upper)
        pivots = [next(a for a, c in enumerate(r) if c) for r in reps]
        t10[k] = Subspace(n, reps, pivots)
    c10 = _part10(p, frame, center)

    s = step - 1
    if s >= 1 and not center.contains_subspace(gj[s]):
        # holds for abelian structures; flag loudly if data claims otherwise
        rep = validate(p)
        if rep.abelian:
            raise InternalInvariantError("g_J^s is not contained in the center")
    total = sum(t10[k].dim for k in t10)
    if total != n:
        raise InternalInvariantError("t-splitting does not fill g^(1,0)")
    return Grading(n=n, step=step, series=series, center=center, gj=gj,
                   gj10=gj10, t10=t10, c10=c10)


def presentation_to_dict(p: AlgebraPresentation) -> dict:
    brackets = []
    for (i, j) in sorted(p.brackets):
        out = p.brackets[(i, j)]
        brackets.append({
            "i": i,
            "j": j,
            "out": {str(k): rational_to_string(c) for k, c in sorted(out.items())},
        })
    jmat = [[rational_to_string(p.jmat[i][j]) for j in range(p.dim)] for i in range(p.dim)]
    return {"dim": p.dim, "brackets": brackets, "J": jmat}


def presentation_from_dict(data: dict, name: str = "file") -> AlgebraPresentation:
    try:
        dim = int(data["dim"])
        brackets = {}
        for ent in data.get("brackets", []):
            i, j = int(ent["i"]), int(ent["j"])
            if i == j:
                raise ValueError(f"bracket ({i},{i}) of a vector with itself")
            if i > j:
                i, j = j, i
                out = {int(k): -rational_from_string(v) for k, v in ent["out"].items()}
            else:
                out = {int(k): rational_from_string(v) for k, v in ent["out"].items()}
            key = (i, j)
            if key in brackets:
                raise ValueError(f"bracket ({i},{j}) given twice")
            out = {k: c for k, c in out.items() if c}
            if out:
                brackets[key] = out
        jraw = data["J"]
        if len(jraw) != dim or any(len(r) != dim for r in jraw):
            raise ValueError("J must be a dim x dim matrix")
        jmat = [[rational_from_string(jraw[i][j]) for j in range(dim)] for i in range(dim)]
    except (KeyError, TypeError, ValueError) as exc:
        from .errors import UsageError

        raise UsageError(f"bad algebra data: {exc}") from exc
    return AlgebraPresentation(dim, brackets, jmat, name=name)
