"""Partitions of the regular G-stable subgroups and their consistency laws.

Three equivalence relations are computed side by side:

* brace classes: orbits under conjugation by automorphisms of G (two
  subgroups in one class yield isomorphic braces);
* G-isomorphism classes: subgroups linked by a group isomorphism that
  commutes with conjugation by left translations;
* rho classes: orbits under conjugation by right translations.

The report also records per-subgroup invariants (isomorphism type, sizes
and types of the intersections with the left/right translation groups)
and checks every cross-partition law, returning violations as data.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from functools import cached_property

from .braces import SkewBrace, brace_automorphisms, brace_from_subgroup
from .catalog import structure_name
from .errors import BaseGroupMismatchError
from .groups import (
    FiniteGroup,
    GroupHom,
    Perm,
    automorphism_generators,
    automorphism_group,
    compose,
    conj_by_group,
    generating_sequence,
    invert,
    is_isomorphic,
    isomorphisms_between,
    lambda_of,
    rho_of,
)
from .subgroups import (
    PermSubgroup,
    conjugate_perm_set,
    enumerate_regular_gstable,
    lambda_subgroup,
    opposite_subgroup,
    rho_subgroup,
    subgroup_from_elements,
)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def same(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)

    def classes(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for i in range(len(self.parent)):
            groups.setdefault(self.find(i), []).append(i)
        return sorted((sorted(v) for v in groups.values()), key=lambda c: c[0])


# ---------------------------------------------------------------------------
# pairwise relations


def _require_same_base(N1: PermSubgroup, N2: PermSubgroup) -> None:
    if N1.base != N2.base:
        raise BaseGroupMismatchError("subgroups live over different base groups")


def lambda_points(N: PermSubgroup) -> PermSubgroup:
    """N intersected with the left translations of the base group."""
    G = N.base
    lam = {lambda_of(G, g) for g in range(G.order)}
    return subgroup_from_elements(G, N.element_set & lam)


def rho_points(N: PermSubgroup) -> PermSubgroup:
    """N intersected with the right translations of the base group."""
    G = N.base
    rho = {rho_of(G, g) for g in range(G.order)}
    return subgroup_from_elements(G, N.element_set & rho)


def brace_equivalent(N1: PermSubgroup, N2: PermSubgroup) -> GroupHom | None:
    """An automorphism phi of G with N2 == phi^-1 N1 phi, if one exists."""
    _require_same_base(N1, N2)
    if N1.order != N2.order:
        return None
    if lambda_points(N1).order != lambda_points(N2).order:
        return None
    if rho_points(N1).order != rho_points(N2).order:
        return None
    target = N2.element_set
    for phi in automorphism_group(N1.base):
        p = phi.images
        p_inv = invert(p)
        if all(compose(p_inv, compose(x, p)) in target for x in N1.elements):
            return phi
    return None


def rho_conjugate(N1: PermSubgroup, N2: PermSubgroup) -> int | None:
    """A group element s with N2 == rho(s) N1 rho(s)^-1, if one exists."""
    _require_same_base(N1, N2)
    if N1.order != N2.order:
        return None
    G = N1.base
    target = N2.element_set
    for s in range(G.order):
        r = rho_of(G, s)
        r_inv = invert(r)
        if all(compose(r, compose(x, r_inv)) in target for x in N1.elements):
            return s
    return None


@dataclass(frozen=True)
class SubgroupIso:
    """Isomorphism between subgroups given on canonical element indices."""

    source: PermSubgroup
    target: PermSubgroup
    element_map: tuple[int, ...]

    def image_of(self, p: Perm) -> Perm:
        i = self.source.elements.index(p)
        return self.target.elements[self.element_map[i]]


def _conjugation_index_maps(N: PermSubgroup, gens) -> list[tuple[int, ...]] | None:
    """For each generator g of G, the permutation of N's element indices
    induced by conjugation with the left translation of g."""
    index = {p: i for i, p in enumerate(N.elements)}
    out = []
    for g in gens:
        row = []
        for p in N.elements:
            q = conj_by_group(N.base, g, p)
            j = index.get(q)
            if j is None:
                return None
            row.append(j)
        out.append(tuple(row))
    return out


def g_isomorphic(N1: PermSubgroup, N2: PermSubgroup) -> SubgroupIso | None:
    """An isomorphism commuting with conjugation by left translations.

    Necessary conditions (matching orders, matching numbers of right
    translations contained) prune before the search; candidates are the
    abstract group isomorphisms, filtered by equivariance on generators.
    """
    _require_same_base(N1, N2)
    if N1.order != N2.order:
        return None
    if rho_points(N1).order != rho_points(N2).order:
        return None
    isos = isomorphisms_between(N1.abstract_group, N2.abstract_group)
    if not isos:
        return None
    gens = generating_sequence(N1.base)
    conj1 = _conjugation_index_maps(N1, gens)
    conj2 = _conjugation_index_maps(N2, gens)
    if conj1 is None or conj2 is None:
        return None
    gen_indices = generating_sequence(N1.abstract_group) or (0,)
    for iso in isos:
        im = iso.images
        if all(
            im[c1[i]] == c2[im[i]]
            for c1, c2 in zip(conj1, conj2)
            for i in gen_indices
        ):
            return SubgroupIso(N1, N2, im)
    return None


def _verified_rho_iso(N1: PermSubgroup, N2: PermSubgroup, s: int) -> SubgroupIso | None:
    """Conjugation by rho(s) as an explicit candidate isomorphism N1 -> N2,
    accepted only after checking equivariance directly."""
    G = N1.base
    r = rho_of(G, s)
    r_inv = invert(r)
    index2 = {p: i for i, p in enumerate(N2.elements)}
    element_map = []
    for p in N1.elements:
        q = compose(r, compose(p, r_inv))
        j = index2.get(q)
        if j is None:
            return None
        element_map.append(j)
    iso = SubgroupIso(N1, N2, tuple(element_map))
    gens = generating_sequence(G)
    conj1 = _conjugation_index_maps(N1, gens)
    conj2 = _conjugation_index_maps(N2, gens)
    if conj1 is None or conj2 is None:
        return None
    im = iso.element_map
    for c1, c2 in zip(conj1, conj2):
        for i in range(N1.order):
            if im[c1[i]] != c2[im[i]]:
                return None
    return iso


# ---------------------------------------------------------------------------
# report


@dataclass(frozen=True)
class LawVerdict:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"pass": self.passed, "witness": self.detail}


@dataclass(frozen=True)
class SubgroupInfo:
    index: int
    type_label: str
    family: str
    lambda_count: int
    rho_count: int
    lambda_type: str
    rho_type: str
    is_left_translations: bool
    is_right_translations: bool

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "type": self.type_label,
            "family": self.family,
            "lambda_points": self.lambda_count,
            "rho_points": self.rho_count,
            "lambda_points_type": self.lambda_type,
            "rho_points_type": self.rho_type,
            "is_left_translations": self.is_left_translations,
            "is_right_translations": self.is_right_translations,
        }


@dataclass(frozen=True)
class BraceClassInfo:
    members: tuple[int, ...]
    representative: int
    aut_br_order: int
    predicted_size: int
    opposite_class: int

    def to_json(self) -> dict:
        return {
            "members": list(self.members),
            "representative": self.representative,
            "brace_automorphisms": self.aut_br_order,
            "predicted_size": self.predicted_size,
            "opposite_class": self.opposite_class,
        }


@dataclass
class ClassificationReport:
    group: FiniteGroup
    subgroups: tuple[PermSubgroup, ...]
    brace_classes: tuple[tuple[int, ...], ...]
    giso_classes: tuple[tuple[int, ...], ...]
    rho_classes: tuple[tuple[int, ...], ...]
    info: tuple[SubgroupInfo, ...]
    brace_class_info: tuple[BraceClassInfo, ...]
    laws: tuple[LawVerdict, ...] = ()
    giso_witnesses: dict = field(default_factory=dict, repr=False)
    brace_witnesses: dict = field(default_factory=dict, repr=False)
    rho_witnesses: dict = field(default_factory=dict, repr=False)

    @property
    def all_laws_pass(self) -> bool:
        return all(law.passed for law in self.laws)

    def class_index(self, partition, i: int) -> int:
        for k, cls in enumerate(partition):
            if i in cls:
                return k
        raise ValueError(f"subgroup {i} missing from partition")

    def to_json(self) -> dict:
        return {
            "group": self.group.label,
            "order": self.group.order,
            "subgroups": [N.to_json() for N in self.subgroups],
            "brace_classes": [list(c) for c in self.brace_classes],
            "giso_classes": [list(c) for c in self.giso_classes],
            "rho_classes": [list(c) for c in self.rho_classes],
            "invariants": {
                "subgroups": [inf.to_json() for inf in self.info],
                "brace_class_info": [inf.to_json() for inf in self.brace_class_info],
                "automorphism_count": len(automorphism_group(self.group)),
            },
            "laws": {law.name: law.to_json() for law in self.laws},
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(
            [
                "index",
                "type",
                "family",
                "lambda_points",
                "rho_points",
                "brace_class",
                "giso_class",
                "rho_class",
            ]
        )
        for inf in self.info:
            writer.writerow(
                [
                    inf.index,
                    inf.type_label,
                    inf.family,
                    inf.lambda_count,
                    inf.rho_count,
                    self.class_index(self.brace_classes, inf.index),
                    self.class_index(self.giso_classes, inf.index),
                    self.class_index(self.rho_classes, inf.index),
                ]
            )
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [
            f"group {self.group.label} (order {self.group.order}): "
            f"{len(self.subgroups)} regular stable subgroups",
            f"  brace classes: {[list(c) for c in self.brace_classes]}",
            f"  G-isomorphism classes: {[list(c) for c in self.giso_classes]}",
            f"  rho classes: {[list(c) for c in self.rho_classes]}",
            "  subgroups:",
        ]
        for inf in self.info:
            tags = []
            if inf.is_left_translations:
                tags.append("left-translations")
            if inf.is_right_translations:
                tags.append("right-translations")
            suffix = f" [{', '.join(tags)}]" if tags else ""
            fam = f" {inf.family}" if inf.family else ""
            lines.append(
                f"    #{inf.index}{fam} type={inf.type_label} "
                f"|lambda-points|={inf.lambda_count} |rho-points|={inf.rho_count}{suffix}"
            )
        for k, info in enumerate(self.brace_class_info):
            lines.append(
                f"  brace class {k}: members={list(info.members)} "
                f"|Aut_Br|={info.aut_br_order} predicted={info.predicted_size} "
                f"opposite-class={info.opposite_class}"
            )
        lines.append("  laws:")
        for law in self.laws:
            status = "pass" if law.passed else f"FAIL ({law.detail})"
            lines.append(f"    {law.name}: {status}")
        return "\n".join(lines) + "\n"


def build_report(
    G: FiniteGroup,
    subgroups: list[PermSubgroup] | None = None,
    families: dict[frozenset, str] | None = None,
    jobs: int = 1,
) -> ClassificationReport:
    """Enumerate (unless given) and classify all regular G-stable subgroups."""
    subs = list(subgroups) if subgroups is not None else enumerate_regular_gstable(G, jobs=jobs)
    m = len(subs)
    n = G.order
    index = {N.element_set: i for i, N in enumerate(subs)}
    auts = automorphism_group(G)

    # index permutations induced by conjugating with automorphism generators;
    # orbits under the whole of Aut(G) are closures under these
    aut_gen_maps: list[tuple[GroupHom, list[int]]] = []
    for phi in automorphism_generators(G):
        phi_inv = invert(phi.images)
        row = []
        for N in subs:
            conj = conjugate_perm_set(N.elements, phi.images, phi_inv)
            j = index.get(conj)
            if j is None:
                raise AssertionError(
                    "subgroup list is not closed under automorphism conjugation"
                )
            row.append(j)
        aut_gen_maps.append((phi, row))

    uf_b = _UnionFind(m)
    brace_witnesses: dict[tuple[int, int], tuple[int, ...]] = {}
    for phi, row in aut_gen_maps:
        for i, j in enumerate(row):
            if i != j and not uf_b.same(i, j):
                uf_b.union(i, j)
                brace_witnesses[(i, j)] = phi.images

    # rho partition: same pattern with right translations of G's generators
    rho_gen_maps: list[tuple[int, list[int]]] = []
    for s in generating_sequence(G) or (0,):
        r = rho_of(G, s)
        r_inv = invert(r)
        row = []
        for N in subs:
            conj = conjugate_perm_set(N.elements, r_inv, r)
            j = index.get(conj)
            if j is None:
                raise AssertionError(
                    "subgroup list is not closed under right-translation conjugation"
                )
            row.append(j)
        rho_gen_maps.append((s, row))

    uf_r = _UnionFind(m)
    rho_witnesses: dict[tuple[int, int], int] = {}
    giso_witnesses: dict[tuple[int, int], tuple[int, ...]] = {}
    uf_g = _UnionFind(m)
    for s, row in rho_gen_maps:
        for i, j in enumerate(row):
            if i != j and not uf_r.same(i, j):
                uf_r.union(i, j)
                rho_witnesses[(i, j)] = s
                iso = _verified_rho_iso(subs[i], subs[j], s)
                if iso is not None:
                    uf_g.union(i, j)
                    giso_witnesses[(i, j)] = iso.element_map

    # G-isomorphism partition: remaining representatives pairwise
    reps = sorted({uf_g.find(i) for i in range(m)})
    for a_pos, a in enumerate(reps):
        for b in reps[a_pos + 1 :]:
            if uf_g.same(a, b):
                continue
            iso = g_isomorphic(subs[a], subs[b])
            if iso is not None:
                uf_g.union(a, b)
                giso_witnesses[(a, b)] = iso.element_map

    brace_classes = tuple(tuple(c) for c in uf_b.classes())
    giso_classes = tuple(tuple(c) for c in uf_g.classes())
    rho_classes = tuple(tuple(c) for c in uf_r.classes())

    lam_set = lambda_subgroup(G).element_set
    rho_set = rho_subgroup(G).element_set
    infos = []
    for i, N in enumerate(subs):
        lam_pts = lambda_points(N)
        rho_pts = rho_points(N)
        family = (families or {}).get(N.element_set, "")
        infos.append(
            SubgroupInfo(
                index=i,
                type_label=structure_name(N.abstract_group),
                family=family,
                lambda_count=lam_pts.order,
                rho_count=rho_pts.order,
                lambda_type=structure_name(lam_pts.abstract_group),
                rho_type=structure_name(rho_pts.abstract_group),
                is_left_translations=N.element_set == lam_set,
                is_right_translations=N.element_set == rho_set,
            )
        )

    class_info = []
    for members in brace_classes:
        rep = members[0]
        brace = brace_from_subgroup(subs[rep])
        aut_br = len(brace_automorphisms(brace))
        opp = opposite_subgroup(subs[rep])
        opp_idx = index[opp.element_set]
        opp_class = next(k for k, c in enumerate(brace_classes) if opp_idx in c)
        class_info.append(
            BraceClassInfo(
                members=members,
                representative=rep,
                aut_br_order=aut_br,
                predicted_size=len(auts) // aut_br if len(auts) % aut_br == 0 else -1,
                opposite_class=opp_class,
            )
        )

    report = ClassificationReport(
        group=G,
        subgroups=tuple(subs),
        brace_classes=brace_classes,
        giso_classes=giso_classes,
        rho_classes=rho_classes,
        info=tuple(infos),
        brace_class_info=tuple(class_info),
        giso_witnesses=giso_witnesses,
        brace_witnesses=brace_witnesses,
        rho_witnesses=rho_witnesses,
    )
    report.laws = tuple(verify_partition_laws(report))
    return report


# ---------------------------------------------------------------------------
# laws


def _refines(finer, coarser) -> tuple[bool, str]:
    lookup = {}
    for k, cls in enumerate(coarser):
        for i in cls:
            lookup[i] = k
    for cls in finer:
        targets = {lookup[i] for i in cls}
        if len(targets) > 1:
            return False, f"class {list(cls)} crosses classes {sorted(targets)}"
    return True, ""


def verify_partition_laws(report: ClassificationReport) -> list[LawVerdict]:
    """Checks of every cross-partition law; violations carry a witness.

    Laws quantified over all automorphisms (or all group elements) are
    checked on generating sets: each law is stable under composition, so
    holding on generators forces it on the whole group.
    """
    G = report.group
    subs = report.subgroups
    m = len(subs)
    n = G.order
    index = {N.element_set: i for i, N in enumerate(subs)}
    laws: list[LawVerdict] = []

    aut_gen_maps: list[list[int]] = []
    for phi in automorphism_generators(G):
        phi_inv = invert(phi.images)
        aut_gen_maps.append(
            [
                index[conjugate_perm_set(N.elements, phi.images, phi_inv)]
                for N in subs
            ]
        )
    opp_index = [index[opposite_subgroup(N).element_set] for N in subs]

    # conjugating a G-isomorphic pair by any automorphism keeps it G-isomorphic
    ok, detail = True, ""
    giso_lookup = {i: k for k, cls in enumerate(report.giso_classes) for i in cls}
    for cls in report.giso_classes:
        for row in aut_gen_maps:
            images = {giso_lookup[row[i]] for i in cls}
            if len(images) > 1:
                ok, detail = False, f"class {list(cls)} torn apart by conjugation"
                break
        if not ok:
            break
    laws.append(LawVerdict("giso-stable-under-automorphism-conjugation", ok, detail))

    ok, detail = _refines(report.rho_classes, report.giso_classes)
    laws.append(LawVerdict("rho-conjugate-implies-g-isomorphic", ok, detail))

    ok, detail = _refines(report.rho_classes, report.brace_classes)
    laws.append(LawVerdict("rho-conjugate-implies-brace-equivalent", ok, detail))

    # conjugation by rho(s) equals conjugation by the inner automorphism of s
    ok, detail = True, ""
    for i in range(m):
        for s in generating_sequence(G) or (0,):
            r = rho_of(G, s)
            r_inv = invert(r)
            via_rho = conjugate_perm_set(subs[i].elements, r_inv, r)
            gamma = tuple(G.conj(s, x) for x in range(n))
            via_inner = conjugate_perm_set(subs[i].elements, invert(gamma), gamma)
            if via_rho != via_inner:
                ok, detail = False, f"subgroup {i}, element {s}"
                break
        if not ok:
            break
    laws.append(LawVerdict("rho-conjugation-is-inner-conjugation", ok, detail))

    # when every automorphism is inner, brace classes sit inside G-iso classes
    inner_only = len(automorphism_group(G)) == n // len(G.center)
    if inner_only:
        ok, detail = _refines(report.brace_classes, report.giso_classes)
    else:
        ok, detail = True, "not applicable (outer automorphisms exist)"
    laws.append(LawVerdict("inner-only-brace-equivalence-implies-g-isomorphic", ok, detail))

    # brace-equivalent subgroups have isomorphic lambda-points and rho-points
    ok, detail = True, ""
    for cls in report.brace_classes:
        rep = cls[0]
        lam_rep = lambda_points(subs[rep]).abstract_group
        rho_rep = rho_points(subs[rep]).abstract_group
        for i in cls[1:]:
            if not is_isomorphic(lambda_points(subs[i]).abstract_group, lam_rep):
                ok, detail = False, f"lambda-points differ inside class {list(cls)}"
                break
            if not is_isomorphic(rho_points(subs[i]).abstract_group, rho_rep):
                ok, detail = False, f"rho-points differ inside class {list(cls)}"
                break
        if not ok:
            break
    laws.append(LawVerdict("brace-equivalent-implies-point-groups-isomorphic", ok, detail))

    # every emitted G-isomorphism maps rho-points onto rho-points
    ok, detail = True, ""
    for (i, j), element_map in report.giso_witnesses.items():
        src = rho_points(subs[i]).element_set
        dst = rho_points(subs[j]).element_set
        mapped = {
            subs[j].elements[element_map[k]]
            for k, p in enumerate(subs[i].elements)
            if p in src
        }
        if mapped != dst:
            ok, detail = False, f"witness {i}->{j} does not map rho-points onto rho-points"
            break
    laws.append(LawVerdict("giso-witness-maps-rho-points", ok, detail))

    # the opposite of a conjugate is the conjugate of the opposite
    ok, detail = True, ""
    for row in aut_gen_maps:
        for i in range(m):
            if row[opp_index[i]] != opp_index[row[i]]:
                ok, detail = False, f"subgroup {i}"
                break
        if not ok:
            break
    laws.append(LawVerdict("opposite-commutes-with-conjugation", ok, detail))

    # opposites pair whole brace classes of equal size
    ok, detail = True, ""
    brace_lookup = {i: k for k, cls in enumerate(report.brace_classes) for i in cls}
    for k, cls in enumerate(report.brace_classes):
        opp_indices = {opp_index[i] for i in cls}
        opp_classes = {brace_lookup[j] for j in opp_indices}
        if len(opp_classes) != 1:
            ok, detail = False, f"opposites of class {k} spread over {sorted(opp_classes)}"
            break
        target = opp_classes.pop()
        if set(report.brace_classes[target]) != opp_indices or len(
            report.brace_classes[target]
        ) != len(cls):
            ok, detail = False, f"class {k} and its opposite class differ in content"
            break
    laws.append(LawVerdict("opposite-pairs-brace-classes", ok, detail))

    # opposites of rho-conjugate subgroups stay rho-conjugate
    ok, detail = True, ""
    rho_lookup = {i: k for k, cls in enumerate(report.rho_classes) for i in cls}
    for cls in report.rho_classes:
        targets = {rho_lookup[opp_index[i]] for i in cls}
        if len(targets) > 1:
            ok, detail = False, f"opposites of rho-class {list(cls)} split"
            break
    laws.append(LawVerdict("opposite-preserves-rho-conjugacy", ok, detail))

    # observed brace class size equals |Aut(G)| / |Aut_Br|
    ok, detail = True, ""
    for k, info in enumerate(report.brace_class_info):
        if info.predicted_size != len(info.members):
            ok, detail = (
                False,
                f"class {k}: predicted {info.predicted_size}, observed {len(info.members)}",
            )
            break
    laws.append(LawVerdict("brace-class-size-formula", ok, detail))

    if G.is_abelian:
        ok, detail = True, ""
        for i in range(m):
            if lambda_points(subs[i]).element_set != rho_points(subs[i]).element_set:
                ok, detail = False, f"subgroup {i}"
                break
        laws.append(LawVerdict("abelian-lambda-points-equal-rho-points", ok, detail))

    return laws
