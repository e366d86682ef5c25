"""The Lie-algebroid differential, its center/complement split, and the
Schouten bracket on the mixed exterior algebra.

All operators are odd derivations pinned by their generator values:
  dbar v    = sum_j [v, vbar_j]^(1,0) ^ ow_j
  dbar ow_m = (0,2) part of d ow_m,      d alpha(a, b) = -alpha([a, b])
  [v, ow_m] = contraction of v into d ow_m
  [v, w]    = Lie bracket (zero exactly when the structure is abelian)
"""
from __future__ import annotations

from .errors import InternalInvariantError, NotAbelianError
from .exact_linalg import Subspace, quotient_map
from .exterior import (FORM_BASE, MixedElement, Scratch2Form, interior,
                       form_gen, vec_gen)
from .lie_structure import (AlgebraPresentation, ComplexFrame, Grading,
                            complex_frame, grading)
from .scalars import GR_ONE, GR_ZERO


class CalculusContext:
    """Frame, grading, and cached generator differentials for one algebra."""

    __slots__ = (
        "presentation", "frame", "grading", "n", "abelian",
        "dw", "dbar_v", "dbar_form", "bk_v_form",
        "dbar_v_c", "dbar_v_t", "_c_proj", "_c_reps", "_sch_cache",
    )

    def __init__(self, presentation: AlgebraPresentation,
                 frame: ComplexFrame | None = None,
                 grad: Grading | None = None):
        self.presentation = presentation
        self.frame = frame if frame is not None else complex_frame(presentation)
        self.grading = grad if grad is not None else grading(presentation, self.frame)
        self.n = self.frame.n
        self.abelian = self.frame.abelian
        self._build_form_differentials()
        self._build_vector_differentials()
        self._build_split_images()
        self._sch_cache = {}

    # -- construction ------------------------------------------------------

    def _build_form_differentials(self):
        n = self.n
        fr = self.frame
        self.dw = {}
        self.dbar_form = {}
        self.bk_v_form = {}
        for m in range(1, n + 1):
            mixed = {}
            antiholo = {}
            holo = {}
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    c01 = fr.bracket_vvbar[(i, j)][1][m - 1]
                    if c01:
                        mixed[(i, j)] = -c01
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    c10, c01 = fr.bracket_vv[(i, j)]
                    if c01[m - 1]:
                        holo[(i, j)] = -c01[m - 1]
                    cc = c10[m - 1].conjugate()
                    if cc:
                        antiholo[(i, j)] = -cc
            form = Scratch2Form(mixed, antiholo, holo)
            self.dw[m] = form
            self.dbar_form[m] = form.antiholo_element()
            if self.abelian and self.dbar_form[m]:
                raise InternalInvariantError(
                    "abelian structure produced a (0,2) part in d ow"
                )
            for k in range(1, n + 1):
                val = interior(k, form)
                if val:
                    self.bk_v_form[(k, m)] = val

    def _build_vector_differentials(self):
        n = self.n
        fr = self.frame
        self.dbar_v = {}
        for i in range(1, n + 1):
            terms = {}
            for j in range(1, n + 1):
                c10 = fr.bracket_vvbar[(i, j)][0]
                for a in range(1, n + 1):
                    c = c10[a - 1]
                    if c:
                        # the monomial (v_a, ow_j) is already canonical
                        terms[(a, FORM_BASE + j)] = c
            self.dbar_v[i] = MixedElement(terms)

    def _build_split_images(self):
        """Center/complement split of the vector images (abelian use only)."""
        n = self.n
        full = Subspace.full(n)
        c10 = self.grading.c10
        _, reps, proj = quotient_map(c10, full)
        self._c_reps = reps
        self._c_proj = proj
        self.dbar_v_c = {}
        self.dbar_v_t = {}
        for i in range(1, n + 1):
            c_el = MixedElement()
            t_el = MixedElement()
            for j in range(1, n + 1):
                u = self.frame.bracket_vvbar[(i, j)][0]
                if not any(u):
                    continue
                ut = self._t_component(u)
                uc = [a - b for a, b in zip(u, ut)]
                omega_j = MixedElement.term((FORM_BASE + j,), GR_ONE)
                if any(uc):
                    c_el = c_el + MixedElement.vector(uc).wedge(omega_j)
                if any(ut):
                    t_el = t_el + MixedElement.vector(ut).wedge(omega_j)
            self.dbar_v_c[i] = c_el
            self.dbar_v_t[i] = t_el

    def _t_component(self, coords):
        out = [GR_ZERO] * self.n
        for prow, rep in zip(self._c_proj, self._c_reps):
            f = GR_ZERO
            for a, b in zip(prow, coords):
                if a and b:
                    f = f + a * b
            if f:
                for k in range(self.n):
                    if rep[k]:
                        out[k] = out[k] + f * rep[k]
        return out

    # -- generator tables ---------------------------------------------------

    def generators(self):
        for i in range(1, self.n + 1):
            yield vec_gen(i)
        for j in range(1, self.n + 1):
            yield form_gen(j)

    def generator_element(self, code: int) -> MixedElement:
        return MixedElement.term((code,), GR_ONE)

    def vector_element(self, coords) -> MixedElement:
        return MixedElement.vector(coords)


def apply_odd_derivation(images: dict[int, MixedElement], e: MixedElement) -> MixedElement:
    """Extend generator images to the unique odd derivation and apply it."""
    out = MixedElement()
    one = GR_ONE
    for mono, coeff in e.terms.items():
        for t, g in enumerate(mono):
            img = images.get(g)
            if img is None or img.is_zero():
                continue
            c = coeff if t % 2 == 0 else -coeff
            pre = MixedElement.term(mono[:t], c)
            post = MixedElement.term(mono[t + 1:], one)
            out = out + pre.wedge(img).wedge(post)
    return out


def dbar(ctx: CalculusContext, e: MixedElement) -> MixedElement:
    images = {}
    for i in range(1, ctx.n + 1):
        images[i] = ctx.dbar_v[i]
        f = ctx.dbar_form[i]
        if f:
            images[FORM_BASE + i] = f
    return apply_odd_derivation(images, e)


def dbar_split(ctx: CalculusContext, e: MixedElement):
    """(center part, complement part) of dbar e; abelian structures only."""
    if not ctx.abelian:
        raise NotAbelianError("the center/complement split needs an abelian structure")
    c_images = {i: ctx.dbar_v_c[i] for i in range(1, ctx.n + 1)}
    t_images = {i: ctx.dbar_v_t[i] for i in range(1, ctx.n + 1)}
    return (apply_odd_derivation(c_images, e),
            apply_odd_derivation(t_images, e))


def _schouten_generators(ctx: CalculusContext, ga: int, gb: int) -> MixedElement:
    a_vec = ga < FORM_BASE
    b_vec = gb < FORM_BASE
    if a_vec and b_vec:
        if ga == gb:
            return MixedElement()
        if ga < gb:
            coords = ctx.frame.bracket_vv[(ga, gb)][0]
            return MixedElement.vector(coords)
        coords = ctx.frame.bracket_vv[(gb, ga)][0]
        return -MixedElement.vector(coords)
    if a_vec and not b_vec:
        return ctx.bk_v_form.get((ga, gb - FORM_BASE), MixedElement())
    if b_vec and not a_vec:
        return -ctx.bk_v_form.get((gb, ga - FORM_BASE), MixedElement())
    return MixedElement()


def _schouten_monomials(ctx: CalculusContext, ma: tuple, mb: tuple) -> MixedElement:
    if not ma or not mb:
        return MixedElement()
    key = (ma, mb)
    hit = ctx._sch_cache.get(key)
    if hit is not None:
        return hit
    if len(ma) == 1 and len(mb) == 1:
        out = _schouten_generators(ctx, ma[0], mb[0])
    elif len(mb) > 1:
        # [a, h ^ rest] = [a, h] ^ rest + (-1)^(|a| - 1) h ^ [a, rest]
        h, rest = mb[:1], mb[1:]
        rest_el = MixedElement.term(rest, GR_ONE)
        h_el = MixedElement.term(h, GR_ONE)
        out = _schouten_monomials(ctx, ma, h).wedge(rest_el)
        tail = h_el.wedge(_schouten_monomials(ctx, ma, rest))
        out = out + tail if (len(ma) - 1) % 2 == 0 else out - tail
    else:
        # [g ^ rest, b] = (-1)^((|b| - 1) |rest|) [g, b] ^ rest + g ^ [rest, b]
        g, rest = ma[:1], ma[1:]
        rest_el = MixedElement.term(rest, GR_ONE)
        g_el = MixedElement.term(g, GR_ONE)
        head = _schouten_monomials(ctx, g, mb).wedge(rest_el)
        if ((len(mb) - 1) * len(rest)) % 2 == 1:
            head = -head
        out = head + g_el.wedge(_schouten_monomials(ctx, rest, mb))
    ctx._sch_cache[key] = out
    return out


def schouten(ctx: CalculusContext, a: MixedElement, b: MixedElement) -> MixedElement:
    out = MixedElement()
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            piece = _schouten_monomials(ctx, ma, mb)
            if piece:
                out = out + piece.scale(ca * cb)
    return out


def ad_images(ctx: CalculusContext, lam: MixedElement) -> dict[int, MixedElement]:
    """Generator images of ad_lam; valid because ad of a bivector is an odd
    derivation."""
    images = {}
    for g in ctx.generators():
        val = schouten(ctx, lam, ctx.generator_element(g))
        if val:
            images[g] = val
    return images


def ad(ctx: CalculusContext, lam: MixedElement, e: MixedElement) -> MixedElement:
    return apply_odd_derivation(ad_images(ctx, lam), e)


def dbar_lambda(ctx: CalculusContext, lam: MixedElement, e: MixedElement) -> MixedElement:
    return dbar(ctx, e) + ad(ctx, lam, e)
