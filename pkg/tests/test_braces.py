import pytest

from braceforge.braces import (
    almost_trivial_brace,
    brace_automorphisms,
    brace_from_subgroup,
    braces_isomorphic,
    check_brace_axioms,
    conjugated_brace,
    opposite_brace,
    opposite_brace_circle_form,
    subgroup_from_brace,
    trivial_brace,
)
from braceforge.errors import (
    BraceRelationError,
    CircleNotGroupError,
    DotNotGroupError,
    IdentityMismatchError,
    IdentNotIsomorphismError,
    NotRegularError,
    PhiNotCircleAutomorphismError,
)
from braceforge.groups import (
    GroupHom,
    automorphism_group,
    identity_perm,
    lambda_of,
    preset_group,
    rho_of,
)
from braceforge.partitions import build_report
from braceforge.subgroups import (
    closure,
    enumerate_regular_gstable,
    lambda_subgroup,
    opposite_subgroup,
    rho_subgroup,
)

D3 = preset_group("dihedral:3")
C6 = preset_group("cyclic:6")


def identity_hom(G):
    return GroupHom(G, G, tuple(range(G.order)))


def test_trivial_brace_passes_axioms():
    B = trivial_brace(C6)
    assert check_brace_axioms(B.dot, B.circle).dot == B.dot


def test_almost_trivial_brace_passes_axioms():
    B = almost_trivial_brace(D3)
    checked = check_brace_axioms(B.dot, B.circle)
    assert checked.dot == B.dot and checked.circle == B.circle


def test_abelian_trivial_equals_almost_trivial():
    assert trivial_brace(C6) == almost_trivial_brace(C6)
    assert trivial_brace(D3) != almost_trivial_brace(D3)


def test_natural_cyclic4_klein_pair_is_a_brace():
    # cyclic addition as dot with bitwise-xor circle satisfies every axiom
    C4 = preset_group("cyclic:4")
    V4 = preset_group("cyclic:2*cyclic:2")
    B = check_brace_axioms(C4.mul, V4.mul)
    assert B.circle_group.is_abelian and not all(
        B.dot[x][x] == 0 for x in range(4)
    )


def test_brace_relation_failure_carries_witness():
    C8 = preset_group("cyclic:8")
    E8 = preset_group("cyclic:2*cyclic:2*cyclic:2")
    with pytest.raises(BraceRelationError) as err:
        check_brace_axioms(C8.mul, E8.mul)
    assert err.value.triple == (1, 1, 1)


def test_check_rejects_non_groups_and_mismatched_identity():
    good = trivial_brace(preset_group("cyclic:3")).dot
    bad = [[0, 1, 2], [1, 2, 0], [2, 1, 0]]  # column 1 repeats, not a latin square
    with pytest.raises(DotNotGroupError):
        check_brace_axioms(bad, good)
    with pytest.raises(CircleNotGroupError):
        check_brace_axioms(good, bad)
    # both genuine groups but with different identity positions
    shifted = [[(x + y - 1) % 3 for y in range(3)] for x in range(3)]  # identity at 1
    with pytest.raises(IdentityMismatchError):
        check_brace_axioms(good, shifted)


def test_translation_subgroups_give_the_two_basic_braces():
    assert brace_from_subgroup(lambda_subgroup(D3)) == trivial_brace(D3)
    assert brace_from_subgroup(rho_subgroup(D3)) == almost_trivial_brace(D3)


def test_brace_from_subgroup_requires_regular():
    with pytest.raises(NotRegularError):
        brace_from_subgroup(closure(D3, [lambda_of(D3, 2)]))


def test_d3_cyclic_subgroup_brace_has_the_twisted_circle_rule():
    # N_0 = <lambda(sigma), rho(tau)>: carrier (i, j) <-> sigma^i tau^j; the
    # dot is the cyclic product and the circle acquires the sign twist
    sigma, tau = 2, 1
    N0 = closure(D3, [lambda_of(D3, sigma), rho_of(D3, tau)])
    B = brace_from_subgroup(N0)

    def enc(i, j):
        return (i % 3) * 2 + (j % 2)

    for i in range(3):
        for j in range(2):
            for k in range(3):
                for l in range(2):
                    assert B.dot[enc(i, j)][enc(k, l)] == enc(i + k, j + l)
                    sign = 1 if j % 2 == 0 else -1
                    assert B.circle[enc(i, j)][enc(k, l)] == enc(i + sign * k, j + l)


def test_subgroup_from_brace_basic_and_round_trip():
    assert (
        subgroup_from_brace(trivial_brace(D3), identity_hom(D3)).elements
        == lambda_subgroup(D3).elements
    )
    assert (
        subgroup_from_brace(almost_trivial_brace(D3), identity_hom(D3)).elements
        == rho_subgroup(D3).elements
    )
    for N in enumerate_regular_gstable(D3):
        B = brace_from_subgroup(N)
        back = subgroup_from_brace(B, GroupHom(B.circle_group, D3, identity_perm(6)))
        assert back.elements == N.elements


def test_subgroup_from_brace_validates_ident():
    B = trivial_brace(D3)
    not_iso = GroupHom(B.circle_group, D3, (0,) * 6)
    with pytest.raises(IdentNotIsomorphismError):
        subgroup_from_brace(B, not_iso)
    with pytest.raises(IdentNotIsomorphismError):
        # bijective but not a homomorphism
        subgroup_from_brace(B, GroupHom(B.circle_group, D3, (0, 1, 2, 4, 3, 5)))


def test_opposite_brace_is_involution():
    for G in (C6, D3):
        for N in enumerate_regular_gstable(G):
            B = brace_from_subgroup(N)
            assert opposite_brace(opposite_brace(B)) == B


def test_opposite_of_trivial_is_almost_trivial():
    B = opposite_brace(trivial_brace(D3))
    assert braces_isomorphic(B, almost_trivial_brace(D3)) is not None


def test_opposite_circle_form_connected_by_inversion():
    for N in enumerate_regular_gstable(D3):
        B = brace_from_subgroup(N)
        op = opposite_brace(B)
        alt, mu = opposite_brace_circle_form(B)
        n = B.order
        for x in range(n):
            for y in range(n):
                assert mu[op.dot[x][y]] == alt.dot[mu[x]][mu[y]]
                assert mu[op.circle[x][y]] == alt.circle[mu[x]][mu[y]]


def test_opposite_brace_matches_opposite_subgroup():
    for G in (C6, D3, preset_group("quaternion:8")):
        for N in enumerate_regular_gstable(G):
            B = brace_from_subgroup(N)
            assert brace_from_subgroup(opposite_subgroup(N)) == opposite_brace(B)


def test_braces_isomorphic_reflexive_and_negative():
    B = trivial_brace(D3)
    iso = braces_isomorphic(B, B)
    assert iso is not None and iso.images == identity_perm(6)
    assert braces_isomorphic(trivial_brace(D3), almost_trivial_brace(D3)) is None


def test_meta_family_braces_isomorphic_at_7_3():
    from braceforge.pq import case_group, catalog_subgroups, pq_case

    case = pq_case(7, 3, "M-on-C")
    subs = dict(catalog_subgroups(case))
    B1 = brace_from_subgroup(subs["N_1"])
    B2 = brace_from_subgroup(subs["N_2"])
    assert braces_isomorphic(B1, B2) is not None


def test_brace_automorphisms_of_trivial_is_full_automorphism_group():
    for G in (C6, D3):
        assert len(brace_automorphisms(trivial_brace(G))) == len(automorphism_group(G))


def test_brace_automorphism_orders_drive_class_sizes():
    # quaternion dihedral-type class of size 3 out of 24 automorphisms
    Q8 = preset_group("quaternion:8")
    report = build_report(Q8)
    d4 = [i for i, inf in enumerate(report.info) if inf.type_label == "D4"]
    for info in report.brace_class_info:
        if set(info.members) <= set(d4):
            assert info.aut_br_order == 8 and info.predicted_size == 3
    # order-21 metacyclic-over-cyclic brace: 12 / 6 = 2
    from braceforge.pq import catalog_braces, pq_case

    braces = dict(catalog_braces(pq_case(7, 3, "M-on-C")))
    assert len(brace_automorphisms(braces["meta-dot-cyclic-circle"])) == 6


def test_conjugated_brace_identity_and_stabilizer():
    B = brace_from_subgroup(rho_subgroup(D3))
    ident = identity_hom(B.circle_group)
    assert conjugated_brace(B, ident) == B
    for aut in brace_automorphisms(B):
        phi = GroupHom(B.circle_group, B.circle_group, aut.images)
        assert conjugated_brace(B, phi) == B


def test_conjugated_brace_matches_subgroup_conjugation():
    from braceforge.subgroups import conjugate_by_perm

    for N in enumerate_regular_gstable(D3):
        B = brace_from_subgroup(N)
        ident = GroupHom(B.circle_group, D3, identity_perm(6))
        for phi in automorphism_group(D3):
            circle_phi = GroupHom(B.circle_group, B.circle_group, phi.images)
            twisted = conjugated_brace(B, circle_phi)
            lhs = subgroup_from_brace(
                twisted, GroupHom(twisted.circle_group, D3, identity_perm(6))
            )
            rhs = conjugate_by_perm(subgroup_from_brace(B, ident), phi.images)
            assert lhs.elements == rhs.elements


def test_conjugated_brace_validates_phi():
    B = trivial_brace(D3)
    with pytest.raises(PhiNotCircleAutomorphismError):
        conjugated_brace(B, GroupHom(B.circle_group, B.circle_group, (0, 1, 2, 4, 3, 5)))


def test_brace_axioms_hold_for_all_enumerated_subgroups():
    for spec in ("cyclic:6", "dihedral:3", "quaternion:8", "dihedral:4"):
        G = preset_group(spec)
        for N in enumerate_regular_gstable(G):
            B = brace_from_subgroup(N)
            check_brace_axioms(B.dot, B.circle)
            assert B.circle == G.mul


def test_brace_serialization():
    B = trivial_brace(C6)
    payload = B.to_json()
    assert payload["order"] == 6 and payload["dot"] == payload["circle"]
