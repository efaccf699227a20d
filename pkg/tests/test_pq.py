import pytest

from braceforge.braces import braces_isomorphic, opposite_brace_circle_form
from braceforge.errors import BadCaseParamsError
from braceforge.groups import invert, lambda_of, preset_group, rho_of
from braceforge.pq import (
    case_group,
    cases_for,
    catalog_braces,
    catalog_subgroups,
    expected_brace_class_count,
    expected_subgroup_count,
    pq_brace_class_count,
    pq_case,
    verify_case,
    verify_pq,
)
from braceforge.subgroups import closure, enumerate_regular_gstable


def test_case_validation():
    with pytest.raises(BadCaseParamsError):
        pq_case(6, 2, "M-on-C")  # p not prime
    with pytest.raises(BadCaseParamsError):
        pq_case(3, 5, "M-on-C")  # p < q
    with pytest.raises(BadCaseParamsError):
        pq_case(5, 3, "M-on-C")  # 5 is not 1 mod 3
    with pytest.raises(BadCaseParamsError):
        pq_case(7, 3, "inert")  # 7 is 1 mod 3
    with pytest.raises(BadCaseParamsError):
        pq_case(7, 3, "M-on-M", g=6)  # order of 6 mod 7 is 2, not 3
    with pytest.raises(BadCaseParamsError):
        pq_case(7, 3, "nonsense")


def test_cases_for_tags():
    assert [c.tag for c in cases_for(5, 3)] == ["inert"]
    assert [c.tag for c in cases_for(7, 3)] == ["C-on-C", "M-on-C", "C-on-M", "M-on-M"]


@pytest.mark.parametrize("p,q", [(3, 2), (7, 3), (11, 5)])
def test_catalog_counts(p, q):
    for case in cases_for(p, q):
        subs = catalog_subgroups(case)
        assert len(subs) == expected_subgroup_count(case)
        assert len({N.element_set for _, N in subs}) == len(subs)


def test_d3_catalog_matches_hand_generators():
    # the three cyclic regular stable subgroups of the order-6 dihedral group
    case = pq_case(3, 2, "C-on-M")
    G = case_group(case)
    sigma = 2  # index of s^1 t^0
    catalog_sets = {N.element_set for _, N in catalog_subgroups(case)}
    for c in range(3):
        hand = closure(G, [lambda_of(G, sigma), rho_of(G, (c % 3) * 2 + 1)])
        assert hand.element_set in catalog_sets


@pytest.mark.parametrize(
    "p,q,expected",
    [(3, 2, 6), (5, 2, 6), (7, 3, 8), (5, 3, 1), (11, 5, 12)],
)
def test_brace_class_counts(p, q, expected):
    assert expected_brace_class_count(p, q) == expected
    assert pq_brace_class_count(p, q) == expected


def test_opposite_brace_tables_by_inversion_directly():
    braces = dict(catalog_braces(pq_case(7, 3, "M-on-C")))
    alt, _ = opposite_brace_circle_form(braces["meta-dot-cyclic-circle"])
    opp = braces["meta-dot-cyclic-circle-opposite"]
    assert (alt.dot, alt.circle) == (opp.dot, opp.circle)
    braces = dict(catalog_braces(pq_case(7, 3, "M-on-M")))
    alt, _ = opposite_brace_circle_form(braces["meta-twist[t=2]"])
    opp = braces["meta-twist-opposite[t=2]"]
    assert (alt.dot, alt.circle) == (opp.dot, opp.circle)


@pytest.mark.parametrize("p,q", [(3, 2), (5, 2), (5, 3), (7, 3)])
def test_verify_pq_fast_cases(p, q):
    verification = verify_pq(p, q)
    failing = [
        (cv.case.tag, c.name, c.detail)
        for cv in verification.cases
        for c in cv.checks
        if not c.passed
    ]
    assert verification.all_passed, failing
    assert verification.brace_class_count == verification.expected_brace_classes


@pytest.mark.parametrize("p,q", [(7, 2), (11, 2), (13, 3), (11, 5)])
def test_verify_pq_larger_cases(p, q):
    verification = verify_pq(p, q)
    failing = [
        (cv.case.tag, c.name, c.detail)
        for cv in verification.cases
        for c in cv.checks
        if not c.passed
    ]
    assert verification.all_passed, failing


def test_catalog_independent_of_primitive_choice():
    # both elements of order 3 mod 7 must give matching classifications
    va = verify_pq(7, 3, g=2)
    vb = verify_pq(7, 3, g=4)
    assert va.all_passed and vb.all_passed
    assert va.brace_class_count == vb.brace_class_count
    for case_a, case_b in zip(va.cases, vb.cases):
        assert case_a.subgroup_count == case_b.subgroup_count
    braces_a = [B for case in cases_for(7, 3, 2) for _, B in catalog_braces(case)]
    braces_b = [B for case in cases_for(7, 3, 4) for _, B in catalog_braces(case)]
    for B in braces_a:
        assert any(braces_isomorphic(B, C) is not None for C in braces_b)
    for C in braces_b:
        assert any(braces_isomorphic(B, C) is not None for B in braces_a)


def test_enumeration_sees_both_types_at_order_21():
    # raw enumeration over the metacyclic group returns the cyclic family too
    case = pq_case(7, 3, "M-on-M")
    G = case_group(case)
    subs = enumerate_regular_gstable(G)
    cyclic = [N for N in subs if N.abstract_group.is_abelian]
    meta = [N for N in subs if not N.abstract_group.is_abelian]
    assert len(cyclic) == 7 and len(meta) == 16


def test_verify_case_without_enumeration():
    result = verify_case(pq_case(13, 3, "M-on-C"), with_enumeration=False)
    assert result.all_passed
    names = {c.name for c in result.checks}
    assert "catalog-matches-enumeration" not in names
