"""Detection and construction of invariant holomorphic Poisson bivectors.

A bivector lam in the (2,0) cell is holomorphic Poisson when dbar(lam) = 0
and [lam, lam] = 0.  With an abelian structure the bracket condition is
automatic, so the candidates form the kernel of one exact linear map; the
central-wedge constructor below produces a canonical lam whose spectral
sequence degenerates at the second page.
"""
from __future__ import annotations

from dataclasses import dataclass

from .calculus import CalculusContext, ad_images, dbar, schouten
from .errors import (InternalInvariantError, NotAbelianError, ValidationError)
from .exact_linalg import Subspace, kernel_basis
from .exterior import (MixedElement, cell_monomials, element_coords,
                       element_from_coords)
from .scalars import GR_ONE


@dataclass
class PoissonCandidate:
    """A (2,0) bivector with its verified flags."""

    bivector: MixedElement
    dbar_closed: bool
    schouten_square_zero: bool
    ad_identically_zero: bool

    @property
    def holomorphic_poisson(self) -> bool:
        return self.dbar_closed and self.schouten_square_zero


def is_holomorphic_poisson(ctx: CalculusContext, lam: MixedElement) -> PoissonCandidate:
    """Evaluate the closedness, square-zero, and trivial-action flags exactly."""
    if lam and lam.homogeneous_bidegree() != (2, 0):
        raise ValidationError("expected a homogeneous (2,0) bivector")
    closed = not dbar(ctx, lam)
    square = not schouten(ctx, lam, lam)
    images = ad_images(ctx, lam)
    ad_zero = not any(images.values())
    return PoissonCandidate(lam, closed, square, ad_zero)


@dataclass
class BivectorSpace:
    """dbar-closed (2,0) bivectors plus the verified Poisson candidates."""

    basis_monomials: list
    closed: Subspace
    candidates: list

    @property
    def dim(self) -> int:
        return self.closed.dim

    def contains(self, lam: MixedElement) -> bool:
        coords = element_coords(
            lam, {m: i for i, m in enumerate(self.basis_monomials)},
            len(self.basis_monomials), "bivector space")
        return self.closed.contains(coords)


def holomorphic_bivector_space(ctx: CalculusContext) -> BivectorSpace:
    """Solve dbar(lam) = 0 on the (2,0) cell.

    Abelian structure: every solution is Poisson and all echelon basis
    elements come back as candidates.  Otherwise each basis solution is
    tested against [lam, lam] = 0 individually and only the survivors are
    returned; the quadric itself is not parametrized.
    """
    n = ctx.n
    basis = cell_monomials(n, 2, 0)
    tgt = cell_monomials(n, 2, 1)
    tgt_index = {m: i for i, m in enumerate(tgt)}
    cols = []
    for mono in basis:
        img = dbar(ctx, MixedElement.term(mono, GR_ONE))
        cols.append(element_coords(img, tgt_index, len(tgt), "dbar"))
    rows = [[cols[j][i] for j in range(len(basis))] for i in range(len(tgt))]
    closed = Subspace.from_rows(len(basis), kernel_basis(rows, len(basis)))
    candidates = []
    for coords in closed.basis:
        lam = element_from_coords(coords, basis)
        cand = is_holomorphic_poisson(ctx, lam)
        if not cand.dbar_closed:
            raise InternalInvariantError("kernel element is not dbar-closed")
        if ctx.abelian and not cand.schouten_square_zero:
            raise InternalInvariantError(
                "abelian structure produced a non-Poisson closed bivector")
        if cand.schouten_square_zero:
            candidates.append(cand)
    return BivectorSpace(basis, closed, candidates)


def theorem2_lambda(ctx: CalculusContext) -> PoissonCandidate:
    """Canonical central-wedge bivector with a degenerate spectral sequence.

    Two or more central (1,0) directions: wedge the first two echelon
    generators of c^(1,0); the adjoint action is then identically zero.
    Exactly one: wedge the deepest graded complement generator with the
    first generator one level up.
    """
    if not ctx.abelian:
        raise NotAbelianError("the construction needs an abelian structure")
    if ctx.n < 2:
        raise ValidationError(
            "needs at least two complex dimensions to form a bivector")
    g = ctx.grading
    c10 = g.c10
    if c10.dim >= 2:
        a = ctx.vector_element(c10.basis[0])
        b = ctx.vector_element(c10.basis[1])
        lam = a.wedge(b)
    else:
        if c10.dim == 0:
            raise InternalInvariantError(
                "nilpotent algebra with trivial central (1,0) part")
        top = g.t10[g.step]
        below = g.t10.get(g.s)
        if below is None or below.dim == 0:
            raise InternalInvariantError(
                "graded complement below the top level is zero; "
                "the filtration should be strictly decreasing")
        c = ctx.vector_element(top.basis[0])
        v = ctx.vector_element(below.basis[0])
        lam = c.wedge(v)
    cand = is_holomorphic_poisson(ctx, lam)
    if not cand.holomorphic_poisson:
        raise InternalInvariantError(
            "constructed central wedge failed the Poisson checks")
    return cand
