"""Built-in catalog of all isomorphism types for supported orders.

Enumeration needs the complete list of groups of a given order.  Built-in
coverage: every order 1..15, plus every product of two distinct primes
(cyclic group, and the nonabelian metacyclic group when it exists).  Any
other order must be supplied by the caller as explicit Cayley tables.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import UnsupportedOrderError
from .groups import (
    FiniteGroup,
    _cyclic,
    _dicyclic,
    _dihedral,
    _direct_product,
    _from_raw,
    _is_prime,
    is_isomorphic,
    two_generator_pq_group,
)


def _alternating4() -> FiniteGroup:
    perms = sorted(
        p for p in itertools.permutations(range(4)) if _parity(p) == 0
    )
    index = {p: i for i, p in enumerate(perms)}
    mul = [
        [index[tuple(a[b[x]] for x in range(4))] for b in perms]
        for a in perms
    ]
    return _from_raw(mul, "A4")


def _parity(p) -> int:
    inversions = sum(
        1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j]
    )
    return inversions % 2


def smallest_metacyclic_g(p: int, q: int) -> int | None:
    """Smallest integer of multiplicative order q modulo p, if any."""
    for g in range(2, p):
        if pow(g, q, p) == 1:
            return g
    return None


def _pq_split(n: int) -> tuple[int, int] | None:
    """(p, q) with p > q, both prime and p*q == n, else None."""
    for q in range(2, int(n**0.5) + 1):
        if n % q == 0:
            p = n // q
            if p != q and _is_prime(p) and _is_prime(q):
                return (p, q) if p > q else (q, p)
            return None
    return None


@lru_cache(maxsize=None)
def builtin_order_types(n: int) -> tuple[FiniteGroup, ...]:
    """All isomorphism types of groups of order n, or UnsupportedOrderError."""
    small = {
        1: lambda: [_cyclic(1)],
        2: lambda: [_cyclic(2)],
        3: lambda: [_cyclic(3)],
        4: lambda: [_cyclic(4), _direct_product(_cyclic(2), _cyclic(2))],
        5: lambda: [_cyclic(5)],
        6: lambda: [_cyclic(6), _dihedral(3)],
        7: lambda: [_cyclic(7)],
        8: lambda: [
            _cyclic(8),
            _direct_product(_cyclic(4), _cyclic(2)),
            _direct_product(_direct_product(_cyclic(2), _cyclic(2)), _cyclic(2)),
            _dihedral(4),
            _dicyclic(2),
        ],
        9: lambda: [_cyclic(9), _direct_product(_cyclic(3), _cyclic(3))],
        10: lambda: [_cyclic(10), _dihedral(5)],
        11: lambda: [_cyclic(11)],
        12: lambda: [
            _cyclic(12),
            _direct_product(_cyclic(6), _cyclic(2)),
            _dihedral(6),
            _alternating4(),
            _dicyclic(3),
        ],
        13: lambda: [_cyclic(13)],
        14: lambda: [_cyclic(14), _dihedral(7)],
        15: lambda: [_cyclic(15)],
    }
    if n in small:
        return tuple(small[n]())
    split = _pq_split(n)
    if split is not None:
        p, q = split
        types = [_cyclic(n)]
        if p % q == 1:
            types.append(two_generator_pq_group(p, q, smallest_metacyclic_g(p, q)))
        return tuple(types)
    raise UnsupportedOrderError(n)


def supported_order(n: int) -> bool:
    try:
        builtin_order_types(n)
        return True
    except UnsupportedOrderError:
        return False


def structure_name(G: FiniteGroup) -> str:
    """Isomorphism-type label, matched against the built-in catalog."""
    n = G.order
    if n == 1:
        return "C1"
    try:
        for T in builtin_order_types(n):
            if is_isomorphic(G, T):
                return T.label
    except UnsupportedOrderError:
        pass
    return f"order{n}-unrecognized"
