"""Regular and translation-stable subgroups of the permutation group of G.

The enumeration of all regular G-stable subgroups of Perm(G) runs through
holomorphs: for each isomorphism type M of order |G|, every regular
subgroup R of Hol(M) <= Perm(M) determines a two-operation structure with
first operation M and second operation isomorphic to R; whenever that
second group is isomorphic to G the structure transports to a regular
G-stable subgroup of Perm(G), and conjugating by automorphisms of G fills
out its whole equivalence class.  A direct backtracking search inside
Perm(G) (`direct_enumerate_oracle`) provides an independent ground truth
for small orders.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property

from .catalog import builtin_order_types, _pq_split
from .errors import (
    NotRegularError,
    OrderTooLargeForOracleError,
    SizeLimitExceededError,
    UnsupportedOrderError,
)
from .groups import (
    FiniteGroup,
    Perm,
    automorphism_generators,
    automorphism_group,
    compose,
    cycle_lengths,
    generating_sequence,
    identity_perm,
    invert,
    is_semiregular,
    isomorphisms_between,
    lambda_of,
    rho_of,
)


@dataclass(frozen=True)
class PermSubgroup:
    """Subgroup of Perm(base) as a canonically sorted tuple of image arrays."""

    base: FiniteGroup
    elements: tuple[Perm, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def degree(self) -> int:
        return self.base.order

    @cached_property
    def element_set(self) -> frozenset[Perm]:
        return frozenset(self.elements)

    def __contains__(self, p: Perm) -> bool:
        return p in self.element_set

    @cached_property
    def is_regular(self) -> bool:
        n = self.base.order
        if len(self.elements) != n:
            return False
        ident = identity_perm(n)
        for p in self.elements:
            if p != ident and any(p[i] == i for i in range(n)):
                return False
        # cross-check: order + freeness force transitivity
        assert len({p[0] for p in self.elements}) == n, "regular subgroup not transitive"
        return True

    @cached_property
    def is_g_stable(self) -> bool:
        G = self.base
        members = self.element_set
        for g in generating_sequence(G):
            lam = lambda_of(G, g)
            lam_inv = invert(lam)
            for p in self.elements:
                if compose(lam, compose(p, lam_inv)) not in members:
                    return False
        return True

    @cached_property
    def abstract_group(self) -> FiniteGroup:
        """Cayley table of this subgroup over its canonical element order."""
        index = {p: i for i, p in enumerate(self.elements)}
        mul = tuple(
            tuple(index[compose(a, b)] for b in self.elements) for a in self.elements
        )
        inv = tuple(index[invert(a)] for a in self.elements)
        return FiniteGroup(mul, inv, f"sub({self.base.label})")

    def to_json(self) -> dict:
        return {"base": self.base.label, "elements": [list(p) for p in self.elements]}


def subgroup_from_elements(G: FiniteGroup, elements) -> PermSubgroup:
    """Package an already-closed element set in canonical order."""
    return PermSubgroup(G, tuple(sorted(elements)))


def is_regular(N: PermSubgroup) -> bool:
    return N.is_regular


def is_g_stable(N: PermSubgroup) -> bool:
    return N.is_g_stable


def conjugate_perm_set(elements, phi: Perm, phi_inv: Perm) -> frozenset[Perm]:
    """{phi^-1 p phi} as a set, in one pass per element."""
    return frozenset(tuple(phi_inv[p[v]] for v in phi) for p in elements)


def conjugate_by_perm(N: PermSubgroup, phi: Perm) -> PermSubgroup:
    """phi^-1 * N * phi for a permutation phi of the base group's indices."""
    phi_inv = invert(phi)
    return subgroup_from_elements(N.base, conjugate_perm_set(N.elements, phi, phi_inv))


def closure(G: FiniteGroup, generators, max_size: int | None = None) -> PermSubgroup:
    """Smallest subgroup of Perm(G) containing the generators.

    Guarded by max_size (default n^2 * |Aut(G)|) against runaway input.
    """
    n = G.order
    gens = [tuple(p) for p in generators]
    for p in gens:
        if sorted(p) != list(range(n)):
            raise ValueError(f"generator {p} is not a permutation of 0..{n - 1}")
    if max_size is None:
        max_size = n * n * max(1, len(automorphism_group(G)))
    ident = identity_perm(n)
    els = {ident}
    els.update(gens)
    boundary = [p for p in els if p != ident]
    while boundary:
        fresh = []
        for g in gens:
            for b in boundary:
                c = compose(g, b)
                if c not in els:
                    els.add(c)
                    fresh.append(c)
                    if len(els) > max_size:
                        raise SizeLimitExceededError(
                            f"closure exceeded {max_size} elements"
                        )
        boundary = fresh
    return subgroup_from_elements(G, els)


def opposite_subgroup(N: PermSubgroup) -> PermSubgroup:
    """Centralizer of a regular subgroup in the full permutation group.

    For regular N the centralizer is again regular: writing eta_x for the
    unique element with eta_x[0] == x, the map y -> (x -> eta_x[y]) lists
    its |N| elements directly.
    """
    if not N.is_regular:
        raise NotRegularError("opposite is defined for regular subgroups only")
    n = N.base.order
    rows = [None] * n
    for p in N.elements:
        rows[p[0]] = p
    return subgroup_from_elements(
        N.base, (tuple(rows[x][y] for x in range(n)) for y in range(n))
    )


def holomorph(M: FiniteGroup) -> PermSubgroup:
    """Subgroup of Perm(M) generated by left translations and Aut(M)."""
    elements = {
        compose(lambda_of(M, m), a.images)
        for m in range(M.order)
        for a in automorphism_group(M)
    }
    return subgroup_from_elements(M, elements)


def lambda_subgroup(G: FiniteGroup) -> PermSubgroup:
    return subgroup_from_elements(G, (lambda_of(G, g) for g in range(G.order)))


def rho_subgroup(G: FiniteGroup) -> PermSubgroup:
    return subgroup_from_elements(G, (rho_of(G, g) for g in range(G.order)))


# ---------------------------------------------------------------------------
# search for regular subgroups of a concrete permutation group


def _fpf_closure(seed_sets, extra: Perm | None, n: int, ident: Perm):
    """Product closure of the given elements, aborted as soon as it exceeds
    n elements or contains a non-identity permutation with a fixed point.
    Returns a frozenset or None."""
    gens = set()
    for s in seed_sets:
        gens.update(s)
    if extra is not None:
        gens.add(extra)
    gens.discard(ident)
    els = {ident} | gens
    if len(els) > n:
        return None
    boundary = list(gens)
    gen_list = list(gens)
    while boundary:
        fresh = []
        for g in gen_list:
            for b in boundary:
                c = compose(g, b)
                if c in els:
                    continue
                if any(c[i] == i for i in range(n)):
                    return None
                els.add(c)
                fresh.append(c)
                if len(els) > n:
                    return None
        boundary = fresh
    return frozenset(els)


def _regular_subgroups_in(elements, n: int) -> list[frozenset[Perm]]:
    """All order-n subgroups of the given permutation set (assumed to be a
    group) in which every non-identity element is fixed-point free."""
    ident = identity_perm(n)
    if n == 1:
        return [frozenset({ident})]
    split = _pq_split(n)
    if split is not None:
        return _regular_subgroups_pq(elements, n, ident, *split)
    return _regular_subgroups_generic(elements, n, ident)


def _semiregular_atoms(elements, n: int, ident: Perm) -> list[Perm]:
    atoms = []
    for p in elements:
        if p == ident:
            continue
        lengths = set(cycle_lengths(p))
        if len(lengths) == 1 and n % lengths.pop() == 0:
            atoms.append(p)
    atoms.sort()
    return atoms


def _regular_subgroups_pq(elements, n, ident, p, q) -> list[frozenset[Perm]]:
    # order pq with p > q prime: the order-p subgroup of any candidate is
    # unique, so pair each fixed-point-free order-p cyclic subgroup with the
    # order-q elements normalizing it.
    atoms = _semiregular_atoms(elements, n, ident)
    p_atoms = [a for a in atoms if cycle_lengths(a)[0] == p]
    q_atoms = [a for a in atoms if cycle_lengths(a)[0] == q]
    p_subs: dict[frozenset[Perm], Perm] = {}
    for a in p_atoms:
        powers = [ident]
        x = a
        while x != ident:
            powers.append(x)
            x = compose(x, a)
        key = frozenset(powers)
        p_subs.setdefault(key, a)
    results = set()
    for pset, gen in p_subs.items():
        for b in q_atoms:
            if compose(b, compose(gen, invert(b))) not in pset:
                continue
            rows = []
            bj = ident
            ok = True
            for _ in range(q):
                for x in pset:
                    e = compose(x, bj)
                    if e != ident and any(e[i] == i for i in range(n)):
                        ok = False
                        break
                    rows.append(e)
                if not ok:
                    break
                bj = compose(b, bj)
            if ok and len(set(rows)) == n:
                results.add(frozenset(rows))
    return sorted(results, key=sorted)


def _regular_subgroups_generic(elements, n, ident) -> list[frozenset[Perm]]:
    atoms = _semiregular_atoms(elements, n, ident)
    results: set[frozenset[Perm]] = set()
    seen: dict[frozenset[Perm], int] = {}
    frontier: list[tuple[frozenset[Perm], int]] = []
    for idx, a in enumerate(atoms):
        T = _fpf_closure([], a, n, ident)
        if T is None or n % len(T):
            continue
        if len(T) == n:
            results.add(T)
        elif T not in seen or seen[T] > idx:
            seen[T] = idx
            frontier.append((T, idx))
    while frontier:
        fresh = []
        for S, idx in frontier:
            for jdx in range(idx + 1, len(atoms)):
                a = atoms[jdx]
                if a in S:
                    continue
                T = _fpf_closure([S], a, n, ident)
                if T is None or n % len(T):
                    continue
                if len(T) == n:
                    results.add(T)
                elif T not in seen or seen[T] > jdx:
                    seen[T] = jdx
                    fresh.append((T, jdx))
        frontier = fresh
    return sorted(results, key=sorted)


_HOLOMORPH_REGULARS_CACHE: dict[FiniteGroup, list[tuple[Perm, ...]]] = {}


def _holomorph_regulars(M: FiniteGroup) -> list[tuple[Perm, ...]]:
    """Regular subgroups of Hol(M), canonically sorted, cached per type."""
    cached = _HOLOMORPH_REGULARS_CACHE.get(M)
    if cached is None:
        hol = holomorph(M)
        cached = [tuple(sorted(S)) for S in _regular_subgroups_in(hol.elements, M.order)]
        _HOLOMORPH_REGULARS_CACHE[M] = cached
    return cached


def _holomorph_regulars_worker(mul_table):
    """Module-level worker so the search can run in process pools."""
    from .groups import _from_raw

    M = _from_raw([list(r) for r in mul_table], "worker")
    return _holomorph_regulars(M)


def _transport_left_translations(dot_table, ident_images: Perm) -> tuple[Perm, ...]:
    """Left-translation permutations of a dot table, relabeled along a
    bijection of the carrier (the second-operation isomorphism onto G)."""
    n = len(dot_table)
    c = ident_images
    c_inv = invert(c)
    return tuple(
        sorted(
            tuple(c[dot_table[x][c_inv[g]]] for g in range(n)) for x in range(n)
        )
    )


def enumerate_regular_gstable(
    G: FiniteGroup,
    extra_types=None,
    jobs: int = 1,
) -> list[PermSubgroup]:
    """Complete, duplicate-free list of regular G-stable subgroups of Perm(G).

    `extra_types` supplies the full list of isomorphism types of order |G|
    when the order is outside the built-in catalog.
    """
    n = G.order
    if extra_types is not None:
        types = list(extra_types)
        if not types or any(t.order != n for t in types):
            raise UnsupportedOrderError(n, "supplied type list is empty or has wrong order")
    else:
        types = list(builtin_order_types(n))

    if jobs > 1 and len(types) > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, len(types))) as pool:
            for M, regs in zip(
                types, pool.map(_holomorph_regulars_worker, [M.mul for M in types])
            ):
                _HOLOMORPH_REGULARS_CACHE.setdefault(M, regs)

    gen_pairs = [
        (a.images, invert(a.images)) for a in automorphism_generators(G)
    ]
    found: set[frozenset[Perm]] = set()
    for M in types:
        for rows in _holomorph_regulars(M):
            # second operation of the structure: row x is the unique element
            # sending 0 to x, so the row matrix is its Cayley table
            by_value = [None] * n
            for r in rows:
                by_value[r[0]] = r
            circle_mul = tuple(by_value)
            index = {r: i for i, r in enumerate(by_value)}
            circle_inv = tuple(index[invert(r)] for r in by_value)
            circle_group = FiniteGroup(circle_mul, circle_inv, "circle")
            isos = isomorphisms_between(circle_group, G)
            if not isos:
                continue
            transported = frozenset(
                _transport_left_translations(M.mul, isos[0].images)
            )
            if transported in found:
                continue
            # fill in the whole class: orbit under Aut(G)-conjugation,
            # reached by closing under a generating set of automorphisms
            orbit = [transported]
            found.add(transported)
            while orbit:
                current = orbit.pop()
                for phi, phi_inv in gen_pairs:
                    conj = conjugate_perm_set(current, phi, phi_inv)
                    if conj not in found:
                        found.add(conj)
                        orbit.append(conj)
    subgroups = sorted(tuple(sorted(S)) for S in found)
    out = []
    for elems in subgroups:
        N = PermSubgroup(G, elems)
        assert N.is_regular and N.is_g_stable, "enumeration produced an invalid subgroup"
        out.append(N)
    return out


def direct_enumerate_oracle(G: FiniteGroup, max_order: int = 8) -> list[PermSubgroup]:
    """Ground-truth enumeration by exhaustive search inside Perm(G) itself.

    Grows sets closed under composition and under conjugation by left
    translations, pruning on fixed points and on sizes not dividing |G|.
    Exponential in |G|; capped by max_order.
    """
    n = G.order
    if n > max_order:
        raise OrderTooLargeForOracleError(
            f"direct search supports order <= {max_order}, got {n}"
        )
    ident = identity_perm(n)
    if n == 1:
        return [PermSubgroup(G, (ident,))]
    conjugators = []
    for g in generating_sequence(G):
        lam = lambda_of(G, g)
        conjugators.append((lam, invert(lam)))

    def grow(base: frozenset[Perm], seed: Perm):
        """Closure of base + seed under products and conjugation; None when
        it leaves the fixed-point-free regime or exceeds n elements."""
        els = set(base)
        queue = [seed]
        els.add(seed)
        if len(els) > n:
            return None
        while queue:
            x = queue.pop()
            candidates = []
            for lam, lam_inv in conjugators:
                candidates.append(compose(lam, compose(x, lam_inv)))
            for e in list(els):
                candidates.append(compose(x, e))
                candidates.append(compose(e, x))
            for c in candidates:
                if c in els:
                    continue
                if any(c[i] == i for i in range(n)):
                    return None
                els.add(c)
                queue.append(c)
                if len(els) > n:
                    return None
        return frozenset(els)

    atoms = []
    base = frozenset({ident})
    for p in itertools.permutations(range(n)):
        if p == ident or not is_semiregular(p):
            continue
        if n % cycle_lengths(p)[0]:
            continue
        atoms.append(p)
    atoms.sort()

    results: set[frozenset[Perm]] = set()
    seen: dict[frozenset[Perm], int] = {}
    frontier = []
    viable = []
    for a in atoms:
        T = grow(base, a)
        if T is None or n % len(T):
            continue
        idx = len(viable)
        viable.append(a)
        if len(T) == n:
            results.add(T)
        elif T not in seen or seen[T] > idx:
            seen[T] = idx
            frontier.append((T, idx))
    while frontier:
        fresh = []
        for S, idx in frontier:
            for jdx in range(idx + 1, len(viable)):
                a = viable[jdx]
                if a in S:
                    continue
                T = grow(S, a)
                if T is None or n % len(T):
                    continue
                if len(T) == n:
                    results.add(T)
                elif T not in seen or seen[T] > jdx:
                    seen[T] = jdx
                    fresh.append((T, jdx))
        frontier = fresh
    out = []
    for S in sorted(results, key=sorted):
        N = PermSubgroup(G, tuple(sorted(S)))
        assert N.is_regular and N.is_g_stable
        out.append(N)
    return out
