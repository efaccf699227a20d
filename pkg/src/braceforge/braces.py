"""Skew braces as a pair of Cayley tables over a shared carrier.

A skew brace here is a carrier 0..n-1 with two group tables, dot and
circle, sharing identity 0 and satisfying the compatibility relation

    x o (y . z) == (x o y) . x^-1 . (x o z)

for all x, y, z (inverse taken in the dot group).  Regular G-stable
subgroups of Perm(G) correspond to braces whose circle group is G itself:
indexing the elements of such a subgroup by where they send the identity,
the row matrix becomes the dot table and the circle table is exactly the
multiplication table of G.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .errors import (
    BraceRelationError,
    CircleNotGroupError,
    DotNotGroupError,
    GroupTableError,
    IdentityMismatchError,
    IdentNotIsomorphismError,
    NotGStableError,
    NotRegularError,
    PhiNotCircleAutomorphismError,
)
from .groups import (
    FiniteGroup,
    GroupHom,
    Perm,
    Table,
    automorphism_group,
    invert,
    is_homomorphism,
    isomorphisms_between,
    relabel_identity_to_zero,
    validate_group_table,
)
from .subgroups import PermSubgroup, _transport_left_translations


@dataclass(frozen=True)
class SkewBrace:
    """Two compatible group tables on one carrier with identity 0."""

    dot: Table
    circle: Table
    label: str = field(default="", compare=False)

    @property
    def order(self) -> int:
        return len(self.dot)

    @cached_property
    def dot_group(self) -> FiniteGroup:
        return _table_group(self.dot, f"dot({self.label})")

    @cached_property
    def circle_group(self) -> FiniteGroup:
        return _table_group(self.circle, f"circle({self.label})")

    def relabeled(self, label: str) -> "SkewBrace":
        return SkewBrace(self.dot, self.circle, label)

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "dot": [list(row) for row in self.dot],
            "circle": [list(row) for row in self.circle],
            "label": self.label,
        }


@dataclass(frozen=True)
class BraceIso:
    """Carrier bijection preserving both tables of source and target."""

    source: SkewBrace
    target: SkewBrace
    images: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.images[x]


def _table_group(table: Table, label: str) -> FiniteGroup:
    n = len(table)
    inv = tuple(next(y for y in range(n) if table[x][y] == 0) for x in range(n))
    return FiniteGroup(table, inv, label)


def _brace_relation_violation(dot: Table, circle: Table) -> tuple[int, int, int] | None:
    n = len(dot)
    dot_inv = [next(y for y in range(n) if dot[x][y] == 0) for x in range(n)]
    for x in range(n):
        cx = circle[x]
        xinv = dot_inv[x]
        for y in range(n):
            dy = dot[y]
            cxy_row = dot[dot[cx[y]][xinv]]
            for z in range(n):
                if cx[dy[z]] != cxy_row[cx[z]]:
                    return (x, y, z)
    return None


def check_brace_axioms(dot_table, circle_table, label: str = "") -> SkewBrace:
    """Validate both tables and the compatibility relation on all triples."""
    n = len(dot_table)
    try:
        e_dot = validate_group_table(n, dot_table)
    except GroupTableError as exc:
        raise DotNotGroupError(str(exc)) from exc
    if len(circle_table) != n:
        raise CircleNotGroupError(f"circle table must be {n}x{n}")
    try:
        e_circle = validate_group_table(n, circle_table)
    except GroupTableError as exc:
        raise CircleNotGroupError(str(exc)) from exc
    if e_dot != e_circle:
        raise IdentityMismatchError(
            f"dot identity is {e_dot} but circle identity is {e_circle}"
        )
    dot = tuple(tuple(int(v) for v in row) for row in relabel_identity_to_zero(dot_table, e_dot))
    circle = tuple(
        tuple(int(v) for v in row) for row in relabel_identity_to_zero(circle_table, e_circle)
    )
    witness = _brace_relation_violation(dot, circle)
    if witness is not None:
        raise BraceRelationError(witness)
    return SkewBrace(dot, circle, label)


def trivial_brace(G: FiniteGroup) -> SkewBrace:
    """circle == dot == the group's own table."""
    return SkewBrace(G.mul, G.mul, f"trivial({G.label})")


def almost_trivial_brace(G: FiniteGroup) -> SkewBrace:
    """circle is the reversed dot: x o y == y . x."""
    reversed_mul = tuple(tuple(G.mul[y][x] for y in range(G.order)) for x in range(G.order))
    return SkewBrace(reversed_mul, G.mul, f"almost-trivial({G.label})")


def brace_from_subgroup(N: PermSubgroup) -> SkewBrace:
    """Brace of a regular G-stable subgroup.

    Carrier index x stands for the unique element sending 0 to x; the dot
    table collects those image rows and the circle table is the base
    group's own multiplication.
    """
    if not N.is_regular:
        raise NotRegularError("subgroup must be regular")
    if not N.is_g_stable:
        raise NotGStableError("subgroup must be stable under base-group conjugation")
    n = N.base.order
    rows: list[Perm | None] = [None] * n
    for p in N.elements:
        rows[p[0]] = p
    return SkewBrace(tuple(rows), N.base.mul, f"brace[{N.base.label}]")


def subgroup_from_brace(B: SkewBrace, ident: GroupHom) -> PermSubgroup:
    """Left-translation subgroup of the dot table, transported to Perm(G)
    along an isomorphism `ident` from the circle group onto G."""
    if (
        ident.source.mul != B.circle
        or not ident.is_bijective
        or not is_homomorphism(ident.source, ident.target, ident.images)
    ):
        raise IdentNotIsomorphismError(
            "ident must be an isomorphism from the circle group onto the target group"
        )
    elements = _transport_left_translations(B.dot, ident.images)
    return PermSubgroup(ident.target, elements)


def opposite_brace(B: SkewBrace) -> SkewBrace:
    """Same circle over the reversed dot (x .' y == y . x)."""
    n = B.order
    dot = tuple(tuple(B.dot[y][x] for y in range(n)) for x in range(n))
    return SkewBrace(dot, B.circle, f"opp({B.label})")


def opposite_brace_circle_form(B: SkewBrace) -> tuple[SkewBrace, Perm]:
    """The opposite presented as (dot, circle') with
    x o' y == (x^-1 o y^-1)^-1 (inverses in the dot group), together with
    the dot-inversion map mu connecting it to `opposite_brace(B)`."""
    n = B.order
    dot_inv = tuple(next(y for y in range(n) if B.dot[x][y] == 0) for x in range(n))
    circle = tuple(
        tuple(dot_inv[B.circle[dot_inv[x]][dot_inv[y]]] for y in range(n)) for x in range(n)
    )
    return SkewBrace(B.dot, circle, f"opp'({B.label})"), dot_inv


def braces_isomorphic(B1: SkewBrace, B2: SkewBrace) -> BraceIso | None:
    """First carrier bijection preserving both tables, if any.

    Any such bijection is in particular an isomorphism of circle groups,
    so the search runs over those and filters by dot preservation.
    """
    if B1.order != B2.order:
        return None
    d1, d2 = B1.dot, B2.dot
    for iso in isomorphisms_between(B1.circle_group, B2.circle_group):
        phi = iso.images
        if all(
            phi[d1[x][y]] == d2[phi[x]][phi[y]]
            for x in range(B1.order)
            for y in range(B1.order)
        ):
            return BraceIso(B1, B2, phi)
    return None


def brace_automorphisms(B: SkewBrace) -> list[BraceIso]:
    """Automorphisms of the circle group that also preserve the dot table."""
    n = B.order
    d = B.dot
    out = []
    for aut in automorphism_group(B.circle_group):
        phi = aut.images
        if all(phi[d[x][y]] == d[phi[x]][phi[y]] for x in range(n) for y in range(n)):
            out.append(BraceIso(B, B, phi))
    return out


def conjugated_brace(B: SkewBrace, phi: GroupHom) -> SkewBrace:
    """Twist the dot table by a circle automorphism:
    x ._phi y == phi^-1(phi(x) . phi(y)); the result is isomorphic to B via phi."""
    if (
        phi.source.mul != B.circle
        or phi.target.mul != B.circle
        or not phi.is_bijective
        or not is_homomorphism(phi.source, phi.target, phi.images)
    ):
        raise PhiNotCircleAutomorphismError("phi must be an automorphism of the circle group")
    n = B.order
    p = phi.images
    p_inv = invert(p)
    dot = tuple(tuple(p_inv[B.dot[p[x]][p[y]]] for y in range(n)) for x in range(n))
    return SkewBrace(dot, B.circle, f"twist({B.label})")
