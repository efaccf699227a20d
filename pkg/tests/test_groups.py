import pytest

from braceforge.errors import (
    BadMetacyclicParamsError,
    BadSpecError,
    NoIdentityError,
    NotAssociativeError,
    NotLatinSquareError,
)
from braceforge.groups import (
    automorphism_group,
    compose,
    conj_by_group,
    group_from_table,
    identity_perm,
    inner_automorphism,
    invert,
    is_isomorphic,
    isomorphisms_between,
    lambda_of,
    preset_group,
    rho_of,
)

C2_TABLE = [[0, 1], [1, 0]]

# S3 written by hand: 0=e, 1=(12), 2=(13), 3=(23), 4=(123), 5=(132),
# composed left-to-right as functions
S3_TABLE = [
    [0, 1, 2, 3, 4, 5],
    [1, 0, 4, 5, 2, 3],
    [2, 5, 0, 4, 3, 1],
    [3, 4, 5, 0, 1, 2],
    [4, 3, 1, 2, 5, 0],
    [5, 2, 3, 1, 0, 4],
]


def test_group_from_table_smallest():
    G = group_from_table(2, C2_TABLE)
    assert G.order == 2 and G.inv == (0, 1)


def test_group_from_table_identity_relabeled():
    # identity sits at index 1 here; ingestion must move it to 0
    table = [[1, 0], [0, 1]]
    G = group_from_table(2, table)
    assert G.mul[0] == (0, 1)


def test_group_from_table_rejects_non_latin():
    with pytest.raises(NotLatinSquareError):
        group_from_table(2, [[0, 0], [1, 1]])


def test_group_from_table_rejects_no_identity():
    # latin square whose only identity row has no matching identity column
    table = [[0, 1, 2], [2, 0, 1], [1, 2, 0]]
    with pytest.raises(NoIdentityError):
        group_from_table(3, table)


def test_group_from_table_rejects_non_associative():
    # loop of order 5 (latin square with identity, not associative)
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(NotAssociativeError):
        group_from_table(5, table)


def test_hand_entered_s3_is_dihedral_3():
    G = group_from_table(6, S3_TABLE)
    assert is_isomorphic(G, preset_group("dihedral:3"))


def test_preset_cyclic_6_element_orders():
    G = preset_group("cyclic:6")
    assert G.is_abelian
    assert all(6 % G.order_of(a) == 0 for a in range(6))


def test_preset_metacyclic_3_2_2_is_d3():
    assert is_isomorphic(preset_group("metacyclic:3,2,2"), preset_group("dihedral:3"))


def test_preset_metacyclic_validates_order_of_g():
    # 4^3 = 64 = 1 mod 7, 4 != 1, so the order of 4 mod 7 is 3: accepted
    G = preset_group("metacyclic:7,3,4")
    assert G.order == 21 and not G.is_abelian
    with pytest.raises(BadMetacyclicParamsError):
        preset_group("metacyclic:7,3,6")  # 6 has order 2 mod 7
    with pytest.raises(BadMetacyclicParamsError):
        preset_group("metacyclic:7,3,1")


def test_preset_products_and_bad_specs():
    V4 = preset_group("cyclic:2*cyclic:2")
    assert V4.order == 4 and all(V4.order_of(a) in (1, 2) for a in range(4))
    for bad in ("", "foo:3", "cyclic:x", "quaternion:16", "cyclic:-1"):
        with pytest.raises(BadSpecError):
            preset_group(bad)


def test_lambda_rho_are_homomorphisms_and_commute():
    G = preset_group("dihedral:4")
    n = G.order
    for g in range(n):
        for h in range(n):
            assert compose(lambda_of(G, g), lambda_of(G, h)) == lambda_of(G, G.mul[g][h])
            assert compose(rho_of(G, g), rho_of(G, h)) == rho_of(G, G.mul[g][h])
            assert compose(lambda_of(G, g), rho_of(G, h)) == compose(
                rho_of(G, h), lambda_of(G, g)
            )


def test_lambda_of_identity():
    G = preset_group("cyclic:5")
    assert lambda_of(G, 0) == identity_perm(5)


def test_conjugation_fixes_rho_and_twists_lambda():
    G = preset_group("dihedral:3")
    for g in range(6):
        for h in range(6):
            assert conj_by_group(G, g, rho_of(G, h)) == rho_of(G, h)
            assert conj_by_group(G, g, lambda_of(G, h)) == lambda_of(G, G.conj(g, h))


def test_conjugation_in_d3_on_generators():
    G = preset_group("dihedral:3")
    sigma, tau = 2, 1
    assert conj_by_group(G, tau, lambda_of(G, sigma)) == lambda_of(G, G.inv[sigma])
    for c in range(3):
        refl = G.mul[2 * c][tau] if False else (c % 3) * 2 + 1
        assert conj_by_group(G, tau, rho_of(G, refl)) == rho_of(G, refl)


def test_conjugation_is_an_action():
    G = preset_group("quaternion:8")
    pi = rho_of(G, 3)
    some = lambda_of(G, 5)
    target = compose(some, pi)
    for g in range(8):
        for h in range(8):
            assert conj_by_group(G, g, conj_by_group(G, h, target)) == conj_by_group(
                G, G.mul[g][h], target
            )
    assert conj_by_group(G, 0, target) == target


@pytest.mark.parametrize(
    "spec,count",
    [("cyclic:6", 2), ("quaternion:8", 24), ("metacyclic:7,3,2", 42)],
)
def test_automorphism_group_sizes(spec, count):
    G = preset_group(spec)
    auts = automorphism_group(G)
    assert len(auts) == count
    images = {a.images for a in auts}
    # closed under composition and inverse
    for a in auts:
        assert invert(a.images) in images
        for b in auts:
            assert compose(a.images, b.images) in images
    # contains every inner automorphism
    for s in range(G.order):
        assert inner_automorphism(G, s).images in images


def test_inner_automorphism_forms():
    G = preset_group("cyclic:6")
    for s in range(6):
        assert inner_automorphism(G, s).images == identity_perm(6)
    D3 = preset_group("dihedral:3")
    sigma, tau = 2, 1
    gamma = inner_automorphism(D3, tau)
    assert gamma(sigma) == D3.inv[sigma]
    # gamma_s as a permutation equals the two translations composed
    for s in range(6):
        assert inner_automorphism(D3, s).images == compose(rho_of(D3, s), lambda_of(D3, s))


def test_isomorphisms_between():
    C6 = preset_group("cyclic:6")
    D3 = preset_group("dihedral:3")
    assert isomorphisms_between(C6, D3) == ()
    own = isomorphisms_between(D3, D3)
    assert identity_perm(6) in {h.images for h in own}
    assert len(own) == 6


def test_preset_round_trip_through_table():
    for spec in ("cyclic:6", "dihedral:4", "quaternion:8", "metacyclic:7,3,2"):
        G = preset_group(spec)
        H = group_from_table(G.order, [list(r) for r in G.mul])
        assert is_isomorphic(G, H)
