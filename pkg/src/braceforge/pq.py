"""Explicit catalog of regular stable subgroups and braces at order p*q.

For primes p > q the groups of order pq are the cyclic group C and, when
p == 1 (mod q), the metacyclic group M with t s t^-1 = s^g for a g of
multiplicative order q mod p.  Both are presented here on two generators
s (order p) and t (order q), with element s^u t^v at index u*q + v.
Every family of regular stable subgroups, and every brace of order pq, is
realized from closed-form generator and table formulas and cross-checked
against raw enumeration.

Case tags name the pair (structure of G, structure of the subgroup):
"C-on-C", "M-on-C", "C-on-M", "M-on-M", plus "inert" when p != 1 (mod q)
and only the cyclic group exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .braces import (
    SkewBrace,
    almost_trivial_brace,
    brace_from_subgroup,
    braces_isomorphic,
    check_brace_axioms,
    trivial_brace,
)
from .catalog import smallest_metacyclic_g
from .errors import BadCaseParamsError
from .fpf import enumerate_abelian_fpf
from .groups import (
    FiniteGroup,
    Perm,
    _is_prime,
    compose,
    invert,
    lambda_of,
    rho_of,
    two_generator_pq_group,
)
from .partitions import (
    LawVerdict,
    build_report,
    g_isomorphic,
    rho_points,
)
from .subgroups import (
    PermSubgroup,
    closure,
    enumerate_regular_gstable,
    lambda_subgroup,
    opposite_subgroup,
    rho_subgroup,
    subgroup_from_elements,
)

CASE_TAGS = ("inert", "C-on-C", "M-on-C", "C-on-M", "M-on-M")


@dataclass(frozen=True)
class PqCase:
    p: int
    q: int
    g: int | None
    tag: str


def default_g(p: int, q: int) -> int | None:
    return smallest_metacyclic_g(p, q) if p % q == 1 else None


def pq_case(p: int, q: int, tag: str, g: int | None = None) -> PqCase:
    if not (_is_prime(p) and _is_prime(q) and p > q):
        raise BadCaseParamsError(f"need primes p > q, got p={p}, q={q}")
    if tag not in CASE_TAGS:
        raise BadCaseParamsError(f"unknown case tag {tag!r}")
    split = p % q == 1
    if tag == "inert":
        if split:
            raise BadCaseParamsError(f"p={p} is 1 mod q={q}; the case is not inert")
        return PqCase(p, q, None, tag)
    if not split:
        raise BadCaseParamsError(f"p={p} is not 1 mod q={q}; only the inert case exists")
    g = default_g(p, q) if g is None else g % p
    if g in (0, 1) or pow(g, q, p) != 1:
        raise BadCaseParamsError(f"g={g} must have order {q} modulo {p}")
    return PqCase(p, q, g, tag)


def cases_for(p: int, q: int, g: int | None = None) -> list[PqCase]:
    """All applicable case tags for the pair (p, q)."""
    if not (_is_prime(p) and _is_prime(q) and p > q):
        raise BadCaseParamsError(f"need primes p > q, got p={p}, q={q}")
    if p % q != 1:
        return [pq_case(p, q, "inert")]
    return [pq_case(p, q, tag, g) for tag in ("C-on-C", "M-on-C", "C-on-M", "M-on-M")]


@lru_cache(maxsize=None)
def cyclic_pq(p: int, q: int) -> FiniteGroup:
    return two_generator_pq_group(p, q, 1, f"C{p * q}")


@lru_cache(maxsize=None)
def metacyclic_pq(p: int, q: int, g: int) -> FiniteGroup:
    return two_generator_pq_group(p, q, g, f"M{p * q}")


def case_group(case: PqCase) -> FiniteGroup:
    if case.tag in ("inert", "C-on-C", "M-on-C"):
        return cyclic_pq(case.p, case.q)
    return metacyclic_pq(case.p, case.q, case.g)


def _enc(p: int, q: int, u: int, v: int) -> int:
    return (u % p) * q + (v % q)


def _gpow(g: int, exp: int, p: int, q: int) -> int:
    """g^exp mod p, exponent reduced mod q (g has order q)."""
    return pow(g, exp % q, p)


# ---------------------------------------------------------------------------
# subgroup families


def catalog_subgroups(case: PqCase) -> list[tuple[str, PermSubgroup]]:
    """The labeled closed-form subgroup families of the case."""
    p, q, g = case.p, case.q, case.g
    G = case_group(case)
    sigma = _enc(p, q, 1, 0)
    tau = _enc(p, q, 0, 1)
    if case.tag in ("inert", "C-on-C"):
        return [("rho", rho_subgroup(G))]
    if case.tag == "M-on-C":
        out = []
        for t in range(1, q):
            pi_t = tuple(
                _enc(p, q, (idx // q) * _gpow(g, t, p, q), idx % q - 1)
                for idx in range(p * q)
            )
            out.append((f"N_{t}", closure(G, [lambda_of(G, sigma), pi_t])))
        for t in range(1, q):
            eta_t = tuple(
                _enc(p, q, idx // q + _gpow(g, -t * (idx % q), p, q), idx % q)
                for idx in range(p * q)
            )
            out.append((f"N_{t}'", closure(G, [eta_t, lambda_of(G, tau)])))
        return out
    if case.tag == "C-on-M":
        out = []
        for s in range(p):
            gen = invert(rho_of(G, _enc(p, q, -s, 1)))
            out.append((f"N_{s}", closure(G, [lambda_of(G, sigma), gen])))
        return out
    # M-on-M
    out = [("lambda", lambda_subgroup(G)), ("rho", rho_subgroup(G))]
    for t in range(2, q):
        for s in range(p):
            pi_st = compose(lambda_of(G, tau), rho_of(G, _enc(p, q, s, t)))
            out.append((f"N_{s},{t}", closure(G, [lambda_of(G, sigma), pi_st])))
    for t in range(2, q):
        d = pow(1 - t, -1, q)
        beta_t = tuple(
            _enc(p, q, idx // q + _gpow(g, d * (idx % q), p, q), idx % q)
            for idx in range(p * q)
        )
        base = closure(G, [beta_t, rho_of(G, tau)])
        # conjugating by rho(s^i) moves N_{0,t} to N_{i(1-g^t),t}, so label
        # each conjugate of the opposite family by that same parameter
        shift = (1 - _gpow(g, t, p, q)) % p
        family = {}
        for i in range(p):
            r = rho_of(G, _enc(p, q, i, 0))
            r_inv = invert(r)
            conj = subgroup_from_elements(
                G, (compose(r, compose(x, r_inv)) for x in base.elements)
            )
            family[(i * shift) % p] = conj
        for s in range(p):
            out.append((f"N_{s},{t}'", family[s]))
    return out


def expected_subgroup_count(case: PqCase) -> int:
    p, q = case.p, case.q
    return {
        "inert": 1,
        "C-on-C": 1,
        "M-on-C": 2 * (q - 1),
        "C-on-M": p,
        "M-on-M": 2 + 2 * p * (q - 2),
    }[case.tag]


# ---------------------------------------------------------------------------
# brace families


def _pq_table(p: int, q: int, rule) -> tuple[tuple[int, ...], ...]:
    n = p * q
    table = [[0] * n for _ in range(n)]
    for i in range(p):
        for j in range(q):
            row = table[i * q + j]
            for k in range(p):
                for l in range(q):
                    u, v = rule(i, j, k, l)
                    row[k * q + l] = _enc(p, q, u, v)
    return tuple(tuple(r) for r in table)


def catalog_braces(case: PqCase) -> list[tuple[str, SkewBrace]]:
    """The labeled brace tables of the case, built from the closed forms."""
    p, q, g = case.p, case.q, case.g
    if case.tag in ("inert", "C-on-C"):
        return [("trivial-cyclic", trivial_brace(cyclic_pq(p, q)))]
    meta_dot = _pq_table(p, q, lambda i, j, k, l: (i + k * _gpow(g, j, p, q), j + l))
    cyclic_dot = _pq_table(p, q, lambda i, j, k, l: (i + k, j + l))
    if case.tag == "M-on-C":
        circle1 = cyclic_dot
        circle2 = _pq_table(
            p, q, lambda i, j, k, l: (i * _gpow(g, l, p, q) + k * _gpow(g, j, p, q), j + l)
        )
        return [
            ("meta-dot-cyclic-circle", SkewBrace(meta_dot, circle1, "meta-dot-cyclic-circle")),
            (
                "meta-dot-cyclic-circle-opposite",
                SkewBrace(meta_dot, circle2, "meta-dot-cyclic-circle-opposite"),
            ),
        ]
    if case.tag == "C-on-M":
        circle = meta_dot
        return [
            ("cyclic-dot-meta-circle", SkewBrace(cyclic_dot, circle, "cyclic-dot-meta-circle"))
        ]
    # M-on-M
    M = metacyclic_pq(p, q, g)
    out = [
        ("trivial-meta", trivial_brace(M)),
        ("almost-trivial-meta", almost_trivial_brace(M)),
    ]
    for t in range(2, q):
        circle_t = _pq_table(
            p, q, lambda i, j, k, l, t=t: (i + k * _gpow(g, j * (1 - t), p, q), j + l)
        )
        out.append((f"meta-twist[t={t}]", SkewBrace(meta_dot, circle_t, f"meta-twist[t={t}]")))
    for t in range(2, q):
        circle_t = _pq_table(
            p,
            q,
            lambda i, j, k, l, t=t: (
                i * _gpow(g, l, p, q) + k * _gpow(g, j * t, p, q),
                j + l,
            ),
        )
        out.append(
            (
                f"meta-twist-opposite[t={t}]",
                SkewBrace(meta_dot, circle_t, f"meta-twist-opposite[t={t}]"),
            )
        )
    return out


def pq_brace_class_count(p: int, q: int, g: int | None = None) -> int:
    """Number of isomorphism classes among all catalog braces of order pq."""
    braces: list[SkewBrace] = []
    for case in cases_for(p, q, g):
        braces.extend(B for _, B in catalog_braces(case))
    classes: list[SkewBrace] = []
    for B in braces:
        if not any(braces_isomorphic(B, C) for C in classes):
            classes.append(B)
    return len(classes)


def expected_brace_class_count(p: int, q: int) -> int:
    return 2 * q + 2 if p % q == 1 else 1


# ---------------------------------------------------------------------------
# verification


@dataclass
class CaseVerification:
    case: PqCase
    subgroup_count: int
    checks: list[LawVerdict]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "p": self.case.p,
            "q": self.case.q,
            "g": self.case.g,
            "tag": self.case.tag,
            "subgroup_count": self.subgroup_count,
            "checks": {c.name: c.to_json() for c in self.checks},
        }


@dataclass
class PqVerification:
    p: int
    q: int
    g: int | None
    cases: list[CaseVerification]
    brace_class_count: int
    expected_brace_classes: int
    checks: list[LawVerdict]

    @property
    def all_passed(self) -> bool:
        return all(v.all_passed for v in self.cases) and all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "g": self.g,
            "cases": [v.to_json() for v in self.cases],
            "brace_class_count": self.brace_class_count,
            "expected_brace_classes": self.expected_brace_classes,
            "checks": {c.name: c.to_json() for c in self.checks},
            "all_passed": self.all_passed,
        }

    def to_text(self) -> str:
        lines = [
            f"order {self.p * self.q} = {self.p} * {self.q}"
            + (f", g = {self.g}" if self.g is not None else " (inert)"),
            f"brace isomorphism classes: {self.brace_class_count} "
            f"(expected {self.expected_brace_classes})",
        ]
        for v in self.cases:
            lines.append(f"  case {v.case.tag}: {v.subgroup_count} subgroups")
            for c in v.checks:
                status = "pass" if c.passed else f"FAIL ({c.detail})"
                lines.append(f"    {c.name}: {status}")
        for c in self.checks:
            status = "pass" if c.passed else f"FAIL ({c.detail})"
            lines.append(f"  {c.name}: {status}")
        lines.append("all passed" if self.all_passed else "VIOLATIONS FOUND")
        return "\n".join(lines) + "\n"


def _check(checks: list[LawVerdict], name: str, passed: bool, detail: str = "") -> None:
    checks.append(LawVerdict(name, passed, "" if passed else detail))


def _subgroup_type_matches(case: PqCase, N: PermSubgroup) -> bool:
    """Whether N has the isomorphism type the case's families describe."""
    cyclic_family = case.tag in ("inert", "C-on-C", "C-on-M")
    return N.abstract_group.is_abelian == cyclic_family


def _explicit_m_on_c_witness(case: PqCase, subs: dict[str, PermSubgroup]) -> LawVerdict:
    """Verify the explicit equivariant isomorphism N_1 -> N_t sending the
    order-p generator to itself and pi_1 to pi_t^(1/t mod q)."""
    p, q, g = case.p, case.q, case.g
    G = case_group(case)
    eta = lambda_of(G, _enc(p, q, 1, 0))
    gens = {}
    for t in range(1, q):
        pi_t = tuple(
            _enc(p, q, (idx // q) * _gpow(g, t, p, q), idx % q - 1) for idx in range(p * q)
        )
        gens[t] = pi_t
    for t in range(2, q):
        e = pow(t, -1, q)
        n1, nt = subs["N_1"], subs[f"N_{t}"]
        index_t = {x: i for i, x in enumerate(nt.elements)}
        element_map = []
        ok = True
        for x in n1.elements:
            # express x = eta^a pi_1^b by scanning
            image = None
            acc_a = identity = tuple(range(p * q))
            for a in range(p):
                acc_b = acc_a
                for b in range(q):
                    if acc_b == x:
                        tgt = acc_a
                        for _ in range((e * b) % q):
                            tgt = compose(tgt, gens[t])
                        image = index_t.get(tgt)
                        break
                    acc_b = compose(acc_b, gens[1])
                if image is not None:
                    break
                acc_a = compose(eta, acc_a)
            if image is None:
                ok = False
                break
            element_map.append(image)
        if not ok or len(set(element_map)) != p * q:
            return LawVerdict(
                "explicit-meta-family-isomorphism", False, f"map N_1 -> N_{t} not bijective"
            )
        iso = g_isomorphic(n1, nt)
        if iso is None:
            return LawVerdict(
                "explicit-meta-family-isomorphism", False, f"N_1 and N_{t} not equivariantly isomorphic"
            )
        # the explicit map must itself be an equivariant isomorphism
        abs1 = n1.abstract_group
        emap = element_map
        hom_ok = all(
            emap[abs1.mul[i][j]]
            == index_t[compose(nt.elements[emap[i]], nt.elements[emap[j]])]
            for i in range(p * q)
            for j in range(p * q)
        )
        if not hom_ok:
            return LawVerdict(
                "explicit-meta-family-isomorphism", False, f"explicit map N_1 -> N_{t} not a homomorphism"
            )
        from .groups import conj_by_group

        for gg in (_enc(p, q, 1, 0), _enc(p, q, 0, 1)):
            for i, x in enumerate(n1.elements):
                lhs = index_t[conj_by_group(G, gg, nt.elements[emap[i]])]
                rhs = emap[n1.elements.index(conj_by_group(G, gg, x))]
                if lhs != rhs:
                    return LawVerdict(
                        "explicit-meta-family-isomorphism",
                        False,
                        f"explicit map N_1 -> N_{t} not equivariant at {gg}",
                    )
    return LawVerdict("explicit-meta-family-isomorphism", True, "")


def verify_case(case: PqCase, with_enumeration: bool = True, jobs: int = 1) -> CaseVerification:
    """Check every closed-form claim of the case, with witnesses on failure."""
    p, q, g = case.p, case.q, case.g
    G = case_group(case)
    labeled = catalog_subgroups(case)
    subs = dict(labeled)
    checks: list[LawVerdict] = []

    bad = [lbl for lbl, N in labeled if not (N.is_regular and N.is_g_stable)]
    _check(checks, "catalog-members-regular-stable", not bad, f"failing: {bad}")
    distinct = len({N.element_set for _, N in labeled}) == len(labeled)
    _check(checks, "catalog-members-distinct", distinct, "duplicate subgroups in catalog")
    _check(
        checks,
        "catalog-count-formula",
        len(labeled) == expected_subgroup_count(case),
        f"got {len(labeled)}, expected {expected_subgroup_count(case)}",
    )

    braces = catalog_braces(case)
    bad_braces = []
    for lbl, B in braces:
        try:
            check_brace_axioms(B.dot, B.circle)
        except Exception as exc:  # noqa: BLE001 - report the axiom violation
            bad_braces.append(f"{lbl}: {exc}")
    _check(checks, "catalog-braces-pass-axioms", not bad_braces, "; ".join(bad_braces))

    # brace of each catalog subgroup is isomorphic to its family's table
    expected_brace = _family_brace_map(case, dict(braces))
    mismatch = ""
    for lbl, N in labeled:
        got = brace_from_subgroup(N)
        want = expected_brace(lbl)
        if braces_isomorphic(got, want) is None:
            mismatch = f"{lbl} does not realize its family brace"
            break
    _check(checks, "subgroup-braces-match-catalog-braces", not mismatch, mismatch)

    # opposite pairing within the catalog
    mismatch = ""
    for lbl, N in labeled:
        opp = opposite_subgroup(N)
        want_lbl = _opposite_label(case, lbl)
        if opp.element_set != subs[want_lbl].element_set:
            mismatch = f"opposite of {lbl} is not {want_lbl}"
            break
    _check(checks, "opposite-pairing-by-label", not mismatch, mismatch)

    # explicit opposite brace tables agree with the inversion construction
    _check_opposite_brace_tables(case, dict(braces), checks)

    if case.tag == "M-on-C":
        checks.append(_explicit_m_on_c_witness(case, subs))

    if case.tag == "C-on-M":
        sigma = _enc(p, q, 1, 0)
        mismatch = ""
        for i in range(p):
            r = rho_of(G, _enc(p, q, i, 0))
            r_inv = invert(r)
            conj = frozenset(compose(r, compose(x, r_inv)) for x in subs["N_0"].elements)
            target = f"N_{(i * (g - 1)) % p}"
            if conj != subs[target].element_set:
                mismatch = f"rho-conjugate by exponent {i} is not {target}"
                break
        _check(checks, "rho-conjugation-indexing", not mismatch, mismatch)

    if case.tag == "M-on-M" and q > 2:
        endos = [e for e in enumerate_abelian_fpf(G) if not e.trivial]
        expected = set()
        for t in range(2, q):
            for s in range(p):
                target = _enc(p, q, s, t)
                images = [0] * (p * q)
                acc = 0
                for v in range(q):
                    for u in range(p):
                        images[_enc(p, q, u, v)] = acc
                    acc = G.mul[acc][target]
                expected.add(tuple(images))
        got = {e.images for e in endos}
        _check(
            checks,
            "fpf-endos-match-two-parameter-family",
            got == expected and len(endos) == p * (q - 2),
            f"got {len(got)} endomorphisms, expected {p * (q - 2)}",
        )

    if with_enumeration:
        enum = enumerate_regular_gstable(G, jobs=jobs)
        matching = {N.element_set for N in enum if _subgroup_type_matches(case, N)}
        cat_sets = {N.element_set for _, N in labeled}
        _check(
            checks,
            "catalog-matches-enumeration",
            cat_sets == matching,
            f"catalog {len(cat_sets)} vs enumerated-of-type {len(matching)}",
        )
        families = {N.element_set: lbl for lbl, N in labeled}
        report = build_report(G, enum, families=families, jobs=jobs)
        _check(
            checks,
            "partition-laws-hold",
            report.all_laws_pass,
            "; ".join(l.name for l in report.laws if not l.passed),
        )
        _check_case_partitions(case, report, checks)

    return CaseVerification(case, len(labeled), checks)


def _family_brace_map(case: PqCase, braces: dict):
    def expected(label: str) -> SkewBrace:
        if case.tag in ("inert", "C-on-C"):
            return braces["trivial-cyclic"]
        if case.tag == "M-on-C":
            return (
                braces["meta-dot-cyclic-circle-opposite"]
                if label.endswith("'")
                else braces["meta-dot-cyclic-circle"]
            )
        if case.tag == "C-on-M":
            return braces["cyclic-dot-meta-circle"]
        if label == "lambda":
            return braces["trivial-meta"]
        if label == "rho":
            return braces["almost-trivial-meta"]
        t = label.rstrip("'").split(",")[1]
        return braces[
            f"meta-twist-opposite[t={t}]" if label.endswith("'") else f"meta-twist[t={t}]"
        ]

    return expected


def _opposite_label(case: PqCase, label: str) -> str:
    if case.tag in ("inert", "C-on-C", "C-on-M"):
        return label  # abelian subgroups are their own centralizers
    if label in ("lambda", "rho"):
        return "rho" if label == "lambda" else "lambda"
    return label[:-1] if label.endswith("'") else label + "'"


def _check_opposite_brace_tables(case: PqCase, braces: dict, checks: list[LawVerdict]) -> None:
    from .braces import opposite_brace_circle_form

    pairs = []
    if case.tag == "M-on-C":
        pairs = [("meta-dot-cyclic-circle", "meta-dot-cyclic-circle-opposite")]
    elif case.tag == "M-on-M":
        pairs = [
            (f"meta-twist[t={t}]", f"meta-twist-opposite[t={t}]") for t in range(2, case.q)
        ]
    mismatch = ""
    for base_lbl, opp_lbl in pairs:
        alt, _ = opposite_brace_circle_form(braces[base_lbl])
        if (alt.dot, alt.circle) != (braces[opp_lbl].dot, braces[opp_lbl].circle):
            mismatch = f"{opp_lbl} is not the inversion form of {base_lbl}"
            break
    if pairs:
        _check(checks, "opposite-brace-tables-by-inversion", not mismatch, mismatch)


def _check_case_partitions(case: PqCase, report, checks: list[LawVerdict]) -> None:
    """Class-structure claims of each case, read off the full report."""
    p, q = case.p, case.q
    fam = {inf.family: inf.index for inf in report.info if inf.family}
    by_index = {inf.index: inf for inf in report.info}

    def class_of(partition, member):
        return next(set(c) for c in partition if member in c)

    if case.tag in ("inert", "C-on-C"):
        _check(
            checks,
            "unique-cyclic-subgroup",
            class_of(report.brace_classes, fam["rho"]) == {fam["rho"]},
            "cyclic subgroup not alone in its class",
        )
        return
    if case.tag == "M-on-C":
        n_t = [fam[f"N_{t}"] for t in range(1, q)]
        n_t_opp = [fam[f"N_{t}'"] for t in range(1, q)]
        ok = class_of(report.brace_classes, n_t[0]) == set(n_t) and class_of(
            report.brace_classes, n_t_opp[0]
        ) == set(n_t_opp)
        _check(checks, "two-meta-brace-classes-of-size-q-minus-1", ok, "family classes differ")
        ok = class_of(report.giso_classes, n_t[0]) == set(n_t)
        _check(checks, "meta-family-single-giso-class", ok, "N_t not mutually equivariant")
        ok = all(class_of(report.giso_classes, i) == {i} for i in n_t_opp)
        _check(checks, "opposite-family-giso-singletons", ok, "some N_t' pair is equivariant")
        ok = all(by_index[i].rho_count == p for i in n_t) and all(
            by_index[i].rho_count == q for i in n_t_opp
        )
        _check(checks, "rho-point-counts-p-vs-q", ok, "translation point counts differ")
        return
    if case.tag == "C-on-M":
        n_s = [fam[f"N_{s}"] for s in range(p)]
        ok = class_of(report.brace_classes, n_s[0]) == set(n_s)
        _check(checks, "cyclic-family-single-brace-class", ok, "N_s split into classes")
        ok = class_of(report.giso_classes, n_s[0]) == set(n_s)
        _check(checks, "cyclic-family-single-giso-class", ok, "N_s split into classes")
        ok = class_of(report.rho_classes, n_s[0]) == set(n_s)
        _check(checks, "cyclic-family-single-rho-class", ok, "N_s not all rho-conjugate")
        return
    # M-on-M
    lam, rho = fam["lambda"], fam["rho"]
    ok = class_of(report.brace_classes, lam) == {lam} and class_of(
        report.brace_classes, rho
    ) == {rho}
    _check(checks, "translation-subgroups-singleton-brace-classes", ok, "")
    if q == 2:
        return
    st = {(s, t): fam[f"N_{s},{t}"] for t in range(2, q) for s in range(p)}
    st_opp = {(s, t): fam[f"N_{s},{t}'"] for t in range(2, q) for s in range(p)}
    ok = all(
        class_of(report.rho_classes, st[(0, t)]) == {st[(s, t)] for s in range(p)}
        for t in range(2, q)
    )
    _check(checks, "endo-family-rho-classes-by-parameter", ok, "")
    giso_lam = class_of(report.giso_classes, lam)
    ok = giso_lam == {lam} | set(st.values())
    _check(
        checks,
        "endo-images-g-isomorphic-to-left-translations",
        ok,
        f"class of left translations is {sorted(giso_lam)}",
    )
    ok = all(
        class_of(report.giso_classes, st_opp[(0, t)])
        == {st_opp[(s, t)] for s in range(p)}
        for t in range(2, q)
    )
    _check(checks, "opposite-family-giso-classes-determined-by-parameter", ok, "")
    ok = all(by_index[i].rho_count == q for i in st_opp.values()) and all(
        by_index[i].rho_count == 1 for i in st.values()
    )
    _check(checks, "rho-point-counts-q-vs-none", ok, "")


def verify_pq(
    p: int,
    q: int,
    g: int | None = None,
    with_enumeration: bool = True,
    jobs: int = 1,
) -> PqVerification:
    """Run every case of the pair (p, q) plus the global brace-class count."""
    case_list = cases_for(p, q, g)
    results = [verify_case(c, with_enumeration=with_enumeration, jobs=jobs) for c in case_list]
    count = pq_brace_class_count(p, q, g)
    expected = expected_brace_class_count(p, q)
    checks: list[LawVerdict] = []
    _check(
        checks,
        "brace-isomorphism-class-total",
        count == expected,
        f"got {count}, expected {expected}",
    )
    used_g = case_list[0].g if case_list[0].tag != "inert" else None
    return PqVerification(p, q, used_g, results, count, expected, checks)
