import pytest

from braceforge.catalog import builtin_order_types
from braceforge.errors import (
    NotRegularError,
    OrderTooLargeForOracleError,
    SizeLimitExceededError,
    UnsupportedOrderError,
)
from braceforge.groups import (
    identity_perm,
    invert,
    lambda_of,
    preset_group,
    rho_of,
)
from braceforge.subgroups import (
    PermSubgroup,
    closure,
    direct_enumerate_oracle,
    enumerate_regular_gstable,
    holomorph,
    lambda_subgroup,
    opposite_subgroup,
    rho_subgroup,
    subgroup_from_elements,
)

D3 = preset_group("dihedral:3")
SIGMA, TAU = 2, 1  # indices of the rotation and reflection generators


def test_closure_of_nothing_is_identity():
    N = closure(D3, [])
    assert N.elements == (identity_perm(6),)


def test_closure_examples_from_d3():
    # the cyclic regular subgroup generated by both translations
    N0 = closure(D3, [lambda_of(D3, SIGMA), rho_of(D3, TAU)])
    assert N0.order == 6
    assert closure(D3, [lambda_of(D3, SIGMA)]).order == 3


def test_closure_size_guard():
    # a transposition and a long cycle generate the full symmetric group
    with pytest.raises(SizeLimitExceededError):
        closure(D3, [(1, 0, 2, 3, 4, 5), (1, 2, 3, 4, 5, 0)], max_size=100)


def test_regularity():
    assert rho_subgroup(D3).is_regular
    assert lambda_subgroup(D3).is_regular
    for c in range(3):
        N = closure(D3, [lambda_of(D3, SIGMA), rho_of(D3, 2 * c + 1)])
        assert N.is_regular and N.is_g_stable
    # the stabilizer of the identity point fixes a point: not regular
    stab = closure(D3, [(0, 2, 1, 3, 5, 4)])
    assert not stab.is_regular


def test_g_stability_counterexample():
    swap = closure(D3, [(1, 0, 2, 3, 4, 5)])
    assert not swap.is_g_stable


def test_opposite_of_translations():
    lam, rho = lambda_subgroup(D3), rho_subgroup(D3)
    assert opposite_subgroup(lam).elements == rho.elements
    assert opposite_subgroup(rho).elements == lam.elements


def test_opposite_is_an_involution_and_preserves_stability():
    for N in enumerate_regular_gstable(D3):
        opp = opposite_subgroup(N)
        assert opp.order == N.order
        assert opp.is_regular and opp.is_g_stable
        assert opposite_subgroup(opp).elements == N.elements


def test_abelian_iff_contained_in_opposite():
    for G in (preset_group("cyclic:6"), D3, preset_group("quaternion:8")):
        for N in enumerate_regular_gstable(G):
            contained = N.element_set <= opposite_subgroup(N).element_set
            assert contained == N.abstract_group.is_abelian


def test_opposite_requires_regular():
    with pytest.raises(NotRegularError):
        opposite_subgroup(closure(D3, [lambda_of(D3, SIGMA)]))


def test_holomorph_orders():
    assert holomorph(preset_group("cyclic:6")).order == 12
    assert holomorph(preset_group("metacyclic:7,3,2")).order == 882
    C2 = preset_group("cyclic:2")
    assert holomorph(C2).order == 2  # the full permutation group on 2 points


@pytest.mark.parametrize(
    "spec,count",
    [
        ("cyclic:6", 3),
        ("dihedral:3", 5),
        ("cyclic:15", 1),
        ("cyclic:21", 5),
        ("metacyclic:7,3,2", 23),
    ],
)
def test_enumeration_counts(spec, count):
    G = preset_group(spec)
    subs = enumerate_regular_gstable(G)
    assert len(subs) == count
    for N in subs:
        assert N.is_regular and N.is_g_stable
    # canonical order, no duplicates
    assert sorted({N.elements for N in subs}) == [N.elements for N in subs]


def test_enumeration_cyclic6_types():
    subs = enumerate_regular_gstable(preset_group("cyclic:6"))
    abelian = [N for N in subs if N.abstract_group.is_abelian]
    assert len(abelian) == 1 and len(subs) == 3


def test_enumeration_unsupported_order():
    with pytest.raises(UnsupportedOrderError):
        enumerate_regular_gstable(preset_group("cyclic:16"))


def test_enumeration_with_supplied_types():
    C16 = preset_group("cyclic:16")
    # supplying only the cyclic type restricts the search to that dot group
    subs = enumerate_regular_gstable(C16, extra_types=[C16])
    assert len(subs) >= 1
    assert any(N.elements == rho_subgroup(C16).elements for N in subs)


def test_oracle_matches_route_a_small():
    for spec in ("cyclic:4", "cyclic:2*cyclic:2", "cyclic:6", "dihedral:3"):
        G = preset_group(spec)
        a = enumerate_regular_gstable(G)
        b = direct_enumerate_oracle(G)
        assert [N.elements for N in a] == [N.elements for N in b]


def test_oracle_c2_single_subgroup():
    C2 = preset_group("cyclic:2")
    subs = direct_enumerate_oracle(C2)
    assert len(subs) == 1 and subs[0].elements == lambda_subgroup(C2).elements


def test_oracle_rejects_large_order():
    with pytest.raises(OrderTooLargeForOracleError):
        direct_enumerate_oracle(preset_group("cyclic:21"))


def test_oracle_q8_contains_dihedral_family():
    Q8 = preset_group("quaternion:8")
    found = {N.element_set for N in direct_enumerate_oracle(Q8)}
    sigma, tau = 2, 1
    sigma_tau = Q8.mul[sigma][tau]
    units = [sigma, tau, sigma_tau]
    for s in units:
        for t in units:
            if t == s:
                continue
            import braceforge.groups as g

            d_lam = closure(Q8, [lambda_of(Q8, s), g.compose(lambda_of(Q8, t), rho_of(Q8, s))])
            d_rho = closure(Q8, [rho_of(Q8, s), g.compose(lambda_of(Q8, s), rho_of(Q8, t))])
            assert d_lam.element_set in found
            assert d_rho.element_set in found


def test_enumeration_deterministic_and_jobs_independent():
    G = preset_group("cyclic:6")
    first = enumerate_regular_gstable(G)
    second = enumerate_regular_gstable(G)
    parallel = enumerate_regular_gstable(G, jobs=2)
    assert [N.elements for N in first] == [N.elements for N in second]
    assert [N.elements for N in first] == [N.elements for N in parallel]


def test_subgroup_serialization():
    N = lambda_subgroup(D3)
    payload = N.to_json()
    assert payload["base"] == "D3"
    assert payload["elements"] == [list(p) for p in N.elements]


def test_builtin_catalog_complete_for_small_orders():
    sizes = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2,
             11: 1, 12: 5, 13: 1, 14: 2, 15: 1}
    for n, k in sizes.items():
        types = builtin_order_types(n)
        assert len(types) == k
        assert all(T.order == n for T in types)
