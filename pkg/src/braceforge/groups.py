"""Index-based finite group arithmetic and regular representations.

A group of order n is stored as an explicit multiplication table over the
element indices 0..n-1, with the identity always at index 0.  Permutations
of the element set are plain tuples of images composed as functions, so
``compose(p, q)[x] == p[q[x]]``.

Conventions used throughout the package:

* ``lambda_of(G, g)`` is left translation x -> g*x.
* ``rho_of(G, g)`` is x -> x*g^-1, so that ``rho_of`` is a homomorphism.
* ``conj_by_group(G, g, pi)`` conjugates a permutation by the left
  translation of g; a set of permutations closed under this action for all
  g is called G-stable.
"""

from __future__ import annotations

import itertools
import json
import math
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .errors import (
    BadMetacyclicParamsError,
    BadSpecError,
    NoIdentityError,
    NoInverseError,
    NotAssociativeError,
    NotLatinSquareError,
)

Perm = tuple[int, ...]

Table = tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# permutations


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """Function composition: apply q first, then p."""
    return tuple(p[x] for x in q)


def invert(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def cycle_lengths(p: Perm) -> list[int]:
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        out.append(length)
    return out


def perm_order(p: Perm) -> int:
    return math.lcm(*cycle_lengths(p))


def is_semiregular(p: Perm) -> bool:
    """True when all cycles of p share one length (no mixed fixed points)."""
    lengths = cycle_lengths(p)
    return len(set(lengths)) == 1


# ---------------------------------------------------------------------------
# groups


@dataclass(frozen=True)
class FiniteGroup:
    """Finite group as a validated multiplication table; identity is 0."""

    mul: Table
    inv: tuple[int, ...]
    label: str = field(default="", compare=False)

    @property
    def order(self) -> int:
        return len(self.mul)

    def op(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def inverse(self, a: int) -> int:
        return self.inv[a]

    def conj(self, g: int, x: int) -> int:
        """g * x * g^-1."""
        return self.mul[self.mul[g][x]][self.inv[g]]

    def order_of(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.mul[x][a]
            k += 1
        return k

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        return tuple(self.order_of(a) for a in range(self.order))

    @cached_property
    def is_abelian(self) -> bool:
        n = self.order
        return all(self.mul[a][b] == self.mul[b][a] for a in range(n) for b in range(n))

    @cached_property
    def center(self) -> tuple[int, ...]:
        n = self.order
        return tuple(
            a for a in range(n) if all(self.mul[a][b] == self.mul[b][a] for b in range(n))
        )

    def relabeled(self, label: str) -> "FiniteGroup":
        return FiniteGroup(self.mul, self.inv, label)

    def to_json(self) -> dict:
        return {"order": self.order, "table": [list(row) for row in self.mul], "label": self.label}


def validate_group_table(order: int, mul_table) -> int:
    """Check the group axioms on a raw table and return the identity index.

    Raises the specific axiom error naming the first violation found; the
    table is left untouched (no relabeling).
    """
    n = int(order)
    if n <= 0 or len(mul_table) != n or any(len(row) != n for row in mul_table):
        raise NotLatinSquareError(f"table must be {order}x{order}")
    table = [[int(v) for v in row] for row in mul_table]
    full = set(range(n))
    for i, row in enumerate(table):
        if set(row) != full:
            raise NotLatinSquareError(f"row {i} is not a permutation of 0..{n - 1}")
    for j in range(n):
        if {table[i][j] for i in range(n)} != full:
            raise NotLatinSquareError(f"column {j} is not a permutation of 0..{n - 1}")
    identity = next(
        (
            e
            for e in range(n)
            if all(table[e][x] == x and table[x][e] == x for x in range(n))
        ),
        None,
    )
    if identity is None:
        raise NoIdentityError("no two-sided identity element")
    for x in range(n):
        if not any(table[x][y] == identity and table[y][x] == identity for y in range(n)):
            raise NoInverseError(f"element {x} has no two-sided inverse")
    for x in range(n):
        for y in range(n):
            xy = table[x][y]
            for z in range(n):
                if table[xy][z] != table[x][table[y][z]]:
                    raise NotAssociativeError(f"associativity fails at ({x}, {y}, {z})")
    return identity


def relabel_identity_to_zero(table, identity: int):
    """Swap labels 0 <-> identity in a Cayley table."""
    n = len(table)
    if identity == 0:
        return [list(row) for row in table]
    swap = list(range(n))
    swap[0], swap[identity] = identity, 0
    return [[swap[table[swap[x]][swap[y]]] for y in range(n)] for x in range(n)]


def group_from_table(order: int, mul_table, label: str = "") -> FiniteGroup:
    """Validate a Cayley table and return the group with identity relabeled to 0."""
    identity = validate_group_table(order, mul_table)
    table = relabel_identity_to_zero([[int(v) for v in row] for row in mul_table], identity)
    n = int(order)
    inv = [0] * n
    for x in range(n):
        inv[x] = next(y for y in range(n) if table[x][y] == 0 and table[y][x] == 0)
    mul = tuple(tuple(row) for row in table)
    return FiniteGroup(mul, tuple(inv), label)


def group_from_json(payload: dict) -> FiniteGroup:
    return group_from_table(payload["order"], payload["table"], str(payload.get("label", "")))


def group_from_json_text(text: str) -> FiniteGroup:
    return group_from_json(json.loads(text))


# ---------------------------------------------------------------------------
# preset constructions


def _cyclic(n: int) -> FiniteGroup:
    mul = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    inv = tuple((-a) % n for a in range(n))
    return FiniteGroup(mul, inv, f"C{n}")


def _dihedral(m: int) -> FiniteGroup:
    # elements (i, j), index i*2 + j; (i1,j1)(i2,j2) = (i1 + (-1)^j1 i2, j1+j2)
    n = 2 * m

    def enc(i, j):
        return (i % m) * 2 + (j % 2)

    mul = [[0] * n for _ in range(n)]
    for i1 in range(m):
        for j1 in range(2):
            for i2 in range(m):
                for j2 in range(2):
                    i = i1 + (i2 if j1 == 0 else -i2)
                    mul[enc(i1, j1)][enc(i2, j2)] = enc(i, j1 + j2)
    return _from_raw(mul, f"D{m}")


def _dicyclic(m: int) -> FiniteGroup:
    # order 4m: a^(2m)=1, b^2=a^m, b a b^-1 = a^-1; elements a^u b^v, index u*2+v
    n = 4 * m
    two_m = 2 * m

    def enc(u, v):
        return (u % two_m) * 2 + (v % 2)

    mul = [[0] * n for _ in range(n)]
    for u1 in range(two_m):
        for v1 in range(2):
            for u2 in range(two_m):
                for v2 in range(2):
                    u = u1 + (u2 if v1 == 0 else -u2) + (m if v1 == 1 and v2 == 1 else 0)
                    mul[enc(u1, v1)][enc(u2, v2)] = enc(u, v1 + v2)
    label = "Q8" if m == 2 else f"Dic{m}"
    return _from_raw(mul, label)


def two_generator_pq_group(p: int, q: int, g: int, label: str = "") -> FiniteGroup:
    """Group of order p*q on generators s (order p) and t (order q) with
    t s t^-1 = s^g; element s^u t^v has index u*q + v.  g=1 gives the
    abelian group C_pq in the same coordinates."""
    n = p * q

    def enc(u, v):
        return (u % p) * q + (v % q)

    powers = [pow(g, v, p) for v in range(q)]
    mul = [[0] * n for _ in range(n)]
    for u1 in range(p):
        for v1 in range(q):
            for u2 in range(p):
                for v2 in range(q):
                    # t^v1 s^u2 = s^(u2 g^v1) t^v1
                    mul[enc(u1, v1)][enc(u2, v2)] = enc(u1 + u2 * powers[v1], v1 + v2)
    return _from_raw(mul, label or f"M{n}")


def pq_element_index(p: int, q: int, u: int, v: int) -> int:
    """Index of s^u t^v inside a two_generator_pq_group."""
    return (u % p) * q + (v % q)


def _metacyclic(p: int, q: int, g: int) -> FiniteGroup:
    if not (_is_prime(p) and _is_prime(q)):
        raise BadMetacyclicParamsError(f"p={p} and q={q} must both be prime")
    g = g % p
    if g in (0, 1) or pow(g, q, p) != 1:
        raise BadMetacyclicParamsError(f"g={g} must have order {q} modulo {p}")
    # pow(g, q, p) == 1 with g != 1 and q prime forces the order to be exactly q
    return two_generator_pq_group(p, q, g, f"M{p * q}")


def _direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    na, nb = a.order, b.order
    n = na * nb

    def enc(x, y):
        return x * nb + y

    mul = [[0] * n for _ in range(n)]
    for x1 in range(na):
        for y1 in range(nb):
            for x2 in range(na):
                for y2 in range(nb):
                    mul[enc(x1, y1)][enc(x2, y2)] = enc(a.mul[x1][x2], b.mul[y1][y2])
    return _from_raw(mul, f"{a.label}x{b.label}")


def _from_raw(mul, label: str) -> FiniteGroup:
    n = len(mul)
    inv = [0] * n
    for x in range(n):
        inv[x] = next(y for y in range(n) if mul[x][y] == 0)
    return FiniteGroup(tuple(tuple(row) for row in mul), tuple(inv), label)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def preset_group(spec: str) -> FiniteGroup:
    """Build a group from a spec string.

    Supported atoms: ``cyclic:n``, ``dihedral:m`` (order 2m), ``quaternion:8``,
    ``metacyclic:p,q,g``; atoms joined with ``*`` form direct products.
    """
    spec = spec.strip()
    if not spec:
        raise BadSpecError("empty group spec")
    parts = [s.strip() for s in spec.split("*")]
    groups = [_preset_atom(part) for part in parts]
    out = groups[0]
    for other in groups[1:]:
        out = _direct_product(out, other)
    return out


def _preset_atom(spec: str) -> FiniteGroup:
    name, _, arg = spec.partition(":")
    name = name.strip().lower()
    try:
        if name == "cyclic":
            n = int(arg)
            if n < 1:
                raise BadSpecError(f"cyclic order must be positive, got {arg}")
            return _cyclic(n)
        if name == "dihedral":
            m = int(arg)
            if m < 1:
                raise BadSpecError(f"dihedral parameter must be positive, got {arg}")
            return _dihedral(m)
        if name == "quaternion":
            if int(arg) != 8:
                raise BadSpecError("only quaternion:8 is supported")
            return _dicyclic(2)
        if name == "metacyclic":
            p, q, g = (int(v) for v in arg.split(","))
            return _metacyclic(p, q, g)
    except (ValueError, TypeError) as exc:
        if isinstance(exc, BadSpecError):
            raise
        raise BadSpecError(f"cannot parse group spec {spec!r}") from exc
    raise BadSpecError(f"unknown group spec {spec!r}")


# ---------------------------------------------------------------------------
# regular representations


def lambda_of(G: FiniteGroup, g: int) -> Perm:
    """Left translation x -> g*x."""
    return G.mul[g]


def rho_of(G: FiniteGroup, g: int) -> Perm:
    """Right translation x -> x*g^-1 (a homomorphism in g)."""
    ginv = G.inv[g]
    return tuple(row[ginv] for row in G.mul)


def lambda_image(G: FiniteGroup) -> list[Perm]:
    return [lambda_of(G, g) for g in range(G.order)]


def rho_image(G: FiniteGroup) -> list[Perm]:
    return [rho_of(G, g) for g in range(G.order)]


def conj_by_group(G: FiniteGroup, g: int, pi: Perm) -> Perm:
    """Conjugate pi by the left translation of g."""
    lam = G.mul[g]
    lam_inv = G.mul[G.inv[g]]
    return compose(lam, compose(pi, lam_inv))


# ---------------------------------------------------------------------------
# homomorphisms


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism given by the images of every source element."""

    source: FiniteGroup
    target: FiniteGroup
    images: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.images[x]

    @property
    def is_bijective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    def as_perm(self) -> Perm:
        """The images tuple viewed as a permutation (bijective endomaps only)."""
        if not self.is_bijective or self.source.order != self.target.order:
            raise ValueError("not a bijection")
        return self.images

    def inverse_images(self) -> tuple[int, ...]:
        return invert(self.images)


def is_homomorphism(G: FiniteGroup, H: FiniteGroup, images) -> bool:
    if images[0] != 0 or len(images) != G.order:
        return False
    return all(
        images[G.mul[a][b]] == H.mul[images[a]][images[b]]
        for a in range(G.order)
        for b in range(G.order)
    )


def generating_sequence(G: FiniteGroup) -> tuple[int, ...]:
    """Greedy minimal generating sequence: each new generator is the first
    element outside the closure of the previous ones."""
    gens: list[int] = []
    closed = {0}
    for x in range(1, G.order):
        if x not in closed:
            gens.append(x)
            closed = _index_closure(G, gens)
            if len(closed) == G.order:
                break
    return tuple(gens)


def _index_closure(G: FiniteGroup, gens) -> set[int]:
    closed = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul[g][x]
                if y not in closed:
                    closed.add(y)
                    nxt.append(y)
        frontier = nxt
    return closed


def _generator_words(G: FiniteGroup, gens):
    """BFS expressions of every element of <gens> as gen*previous products.

    Returns (order, how) where elements appear in `order` in discovery order
    and how[x] = (generator index, previous element) with how[0] = None.
    """
    how: dict[int, tuple[int, int] | None] = {0: None}
    order = [0]
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for gi, g in enumerate(gens):
                y = G.mul[g][x]
                if y not in how:
                    how[y] = (gi, x)
                    order.append(y)
                    nxt.append(y)
        frontier = nxt
    return order, how


def _extend_from_generators(G, H, gens, gen_images, order, how):
    """Build the full image array forced by generator images; None unless it
    is a genuine homomorphism."""
    im = [-1] * G.order
    im[0] = 0
    for x in order[1:]:
        gi, prev = how[x]
        im[x] = H.mul[gen_images[gi]][im[prev]]
    for a in range(G.order):
        row_a = G.mul[a]
        h_row = H.mul[im[a]]
        for b in range(G.order):
            if im[row_a[b]] != h_row[im[b]]:
                return None
    return tuple(im)


def _hom_search(G: FiniteGroup, H: FiniteGroup, exact_order: bool):
    gens = generating_sequence(G)
    if not gens:
        return [GroupHom(G, H, (0,))]
    order, how = _generator_words(G, gens)
    src_orders = G.element_orders
    tgt_orders = H.element_orders
    cands = []
    for g in gens:
        k = src_orders[g]
        if exact_order:
            cands.append([h for h in range(H.order) if tgt_orders[h] == k])
        else:
            cands.append([h for h in range(H.order) if k % tgt_orders[h] == 0])
    out = []
    for gen_images in itertools.product(*cands):
        im = _extend_from_generators(G, H, gens, gen_images, order, how)
        if im is not None:
            out.append(im)
    out.sort()
    return [GroupHom(G, H, im) for im in out]


@lru_cache(maxsize=None)
def automorphism_group(G: FiniteGroup) -> tuple[GroupHom, ...]:
    """All automorphisms of G, in deterministic (lexicographic) order."""
    autos = [h for h in _hom_search(G, G, exact_order=True) if h.is_bijective]
    return tuple(autos)


@lru_cache(maxsize=None)
def isomorphisms_between(G: FiniteGroup, H: FiniteGroup) -> tuple[GroupHom, ...]:
    """All isomorphisms G -> H (empty when none exists)."""
    if G.order != H.order or G.is_abelian != H.is_abelian:
        return ()
    if Counter(G.element_orders) != Counter(H.element_orders):
        return ()
    isos = [h for h in _hom_search(G, H, exact_order=True) if h.is_bijective]
    return tuple(isos)


def is_isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    return bool(isomorphisms_between(G, H))


def _perm_mulclose(gens: list[Perm], ident: Perm) -> set[Perm]:
    closed = {ident} | set(gens)
    boundary = list(gens)
    while boundary:
        fresh = []
        for g in gens:
            for b in boundary:
                c = compose(g, b)
                if c not in closed:
                    closed.add(c)
                    fresh.append(c)
        boundary = fresh
    return closed


@lru_cache(maxsize=None)
def automorphism_generators(G: FiniteGroup) -> tuple[GroupHom, ...]:
    """Small generating set of Aut(G) under composition (greedy)."""
    auts = automorphism_group(G)
    ident = identity_perm(G.order)
    chosen: list[GroupHom] = []
    closed = {ident}
    for a in auts:
        if a.images in closed:
            continue
        chosen.append(a)
        closed = _perm_mulclose([c.images for c in chosen], ident)
        if len(closed) == len(auts):
            break
    return tuple(chosen) if chosen else (auts[0],)


@lru_cache(maxsize=None)
def endomorphisms(G: FiniteGroup) -> tuple[GroupHom, ...]:
    """All endomorphisms of G (the image order of a generator must divide
    the generator's order, which prunes the search)."""
    return tuple(_hom_search(G, G, exact_order=False))


def inner_automorphism(G: FiniteGroup, s: int) -> GroupHom:
    """x -> s*x*s^-1."""
    return GroupHom(G, G, tuple(G.conj(s, x) for x in range(G.order)))
