"""Abelian fixed-point-free endomorphisms and their stable subgroups.

An endomorphism psi of G is abelian when psi(s*t) == psi(t*s) for all s, t
and fixed-point free when psi(s) == s only for the identity.  Each such
psi embeds G into Perm(G) by s -> lambda(s) rho(psi(s)); the image is a
regular G-stable subgroup G-isomorphic to the left translations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .braces import brace_from_subgroup, braces_isomorphic
from .errors import NotAbelianFpfError
from .groups import (
    FiniteGroup,
    GroupHom,
    automorphism_group,
    compose,
    endomorphisms,
    invert,
    lambda_of,
    rho_of,
)
from .partitions import LawVerdict, g_isomorphic
from .subgroups import (
    PermSubgroup,
    conjugate_by_perm,
    enumerate_regular_gstable,
    lambda_subgroup,
    subgroup_from_elements,
)


@dataclass(frozen=True)
class FpfEndo:
    hom: GroupHom
    abelian: bool
    fixed_point_free: bool
    trivial: bool

    @property
    def images(self) -> tuple[int, ...]:
        return self.hom.images


def _is_abelian_endo(G: FiniteGroup, images) -> bool:
    n = G.order
    return all(
        images[G.mul[s][t]] == images[G.mul[t][s]] for s in range(n) for t in range(n)
    )


def _is_fpf_endo(images) -> bool:
    return all(images[s] != s for s in range(1, len(images)))


def classify_endomorphism(psi: GroupHom) -> FpfEndo:
    G = psi.source
    abelian = _is_abelian_endo(G, psi.images)
    fpf = _is_fpf_endo(psi.images)
    trivial = all(v == 0 for v in psi.images)
    return FpfEndo(psi, abelian, fpf, trivial)


@lru_cache(maxsize=None)
def enumerate_abelian_fpf(G: FiniteGroup) -> tuple[FpfEndo, ...]:
    """All abelian fixed-point-free endomorphisms, trivial one included
    (and flagged, since counting conventions differ on it)."""
    out = []
    for psi in endomorphisms(G):
        e = classify_endomorphism(psi)
        if e.abelian and e.fixed_point_free:
            out.append(e)
    return tuple(out)


def alpha_subgroup(psi: FpfEndo | GroupHom) -> PermSubgroup:
    """Image of s -> lambda(s) rho(psi(s)); regular and G-stable."""
    if isinstance(psi, GroupHom):
        psi = classify_endomorphism(psi)
    if not (psi.abelian and psi.fixed_point_free):
        raise NotAbelianFpfError("endomorphism must be abelian and fixed-point free")
    G = psi.hom.source
    elements = {
        compose(lambda_of(G, s), rho_of(G, psi.images[s])) for s in range(G.order)
    }
    if len(elements) != G.order:
        raise NotAbelianFpfError("embedding is not injective")
    return subgroup_from_elements(G, elements)


def _explicit_lambda_iso_is_equivariant(G: FiniteGroup, psi: FpfEndo) -> bool:
    """Check directly that lambda(s) -> lambda(s) rho(psi(s)) commutes with
    conjugation by left translations."""
    n = G.order
    for g in range(n):
        lam_g = lambda_of(G, g)
        lam_g_inv = invert(lam_g)
        for s in range(n):
            conj_s = G.conj(g, s)
            lhs = compose(lambda_of(G, conj_s), rho_of(G, psi.images[conj_s]))
            src = compose(lambda_of(G, s), rho_of(G, psi.images[s]))
            rhs = compose(lam_g, compose(src, lam_g_inv))
            if lhs != rhs:
                return False
    return True


def verify_fpf_laws(G: FiniteGroup, jobs: int = 1) -> list[LawVerdict]:
    """Exhaustive checks of the conjugation laws for abelian fixed-point-free
    endomorphisms over all psi and all automorphisms of G."""
    endos = enumerate_abelian_fpf(G)
    endo_images = {e.images for e in endos}
    auts = automorphism_group(G)
    laws: list[LawVerdict] = []

    ok, detail = True, ""
    for e in endos:
        for phi in auts:
            phi_inv = invert(phi.images)
            conj = tuple(phi_inv[e.images[phi.images[x]]] for x in range(G.order))
            if conj not in endo_images:
                ok, detail = False, f"conjugate of {e.images} by {phi.images} escapes"
                break
        if not ok:
            break
    laws.append(LawVerdict("fpf-endos-closed-under-conjugation", ok, detail))

    ok, detail = True, ""
    for e in endos:
        N = alpha_subgroup(e)
        for phi in auts:
            phi_inv = invert(phi.images)
            conj_images = tuple(phi_inv[e.images[phi.images[x]]] for x in range(G.order))
            lhs = alpha_subgroup(GroupHom(G, G, conj_images)).element_set
            rhs = conjugate_by_perm(N, phi.images).element_set
            if lhs != rhs:
                ok, detail = False, f"psi={e.images}, phi={phi.images}"
                break
        if not ok:
            break
    laws.append(LawVerdict("alpha-image-conjugation-equivariance", ok, detail))

    ok, detail = True, ""
    for e in endos:
        B = brace_from_subgroup(alpha_subgroup(e))
        for phi in auts:
            phi_inv = invert(phi.images)
            conj_images = tuple(phi_inv[e.images[phi.images[x]]] for x in range(G.order))
            B2 = brace_from_subgroup(alpha_subgroup(GroupHom(G, G, conj_images)))
            if braces_isomorphic(B, B2) is None:
                ok, detail = False, f"psi={e.images}, phi={phi.images}"
                break
        if not ok:
            break
    laws.append(LawVerdict("conjugate-endo-braces-isomorphic", ok, detail))

    # regularity, stability, and the explicit G-isomorphism onto the
    # left-translation subgroup
    ok, detail = True, ""
    lam = lambda_subgroup(G)
    for e in endos:
        N = alpha_subgroup(e)
        if not (N.is_regular and N.is_g_stable):
            ok, detail = False, f"alpha image of {e.images} not regular stable"
            break
        if not _explicit_lambda_iso_is_equivariant(G, e):
            ok, detail = False, f"explicit map for {e.images} not equivariant"
            break
        if g_isomorphic(N, lam) is None:
            ok, detail = False, f"alpha image of {e.images} not G-isomorphic to translations"
            break
    laws.append(LawVerdict("alpha-images-g-isomorphic-to-left-translations", ok, detail))

    # the brace class of an alpha image consists of alpha images only
    ok, detail = True, ""
    try:
        subs = enumerate_regular_gstable(G, jobs=jobs)
    except Exception:
        subs = None
        laws.append(
            LawVerdict("brace-class-of-alpha-image-is-alpha-images", True, "skipped: no enumeration")
        )
    if subs is not None:
        alpha_sets = {alpha_subgroup(e).element_set for e in endos}
        index = {N.element_set: i for i, N in enumerate(subs)}
        from .partitions import brace_equivalent

        for e in endos:
            N = alpha_subgroup(e)
            for M in subs:
                if M.element_set in alpha_sets:
                    continue
                if brace_equivalent(N, M) is not None:
                    ok, detail = False, f"{index[M.element_set]} equivalent to alpha image"
                    break
            if not ok:
                break
        laws.append(LawVerdict("brace-class-of-alpha-image-is-alpha-images", ok, detail))

    # distinct endomorphisms give distinct subgroups when the center is trivial
    if len(G.center) == 1:
        ok, detail = True, ""
        seen: dict[frozenset, tuple[int, ...]] = {}
        for e in endos:
            key = alpha_subgroup(e).element_set
            if key in seen and seen[key] != e.images:
                ok, detail = False, f"{seen[key]} and {e.images} share one image"
                break
            seen[key] = e.images
        laws.append(LawVerdict("centerless-alpha-images-distinct", ok, detail))

    return laws
