"""Lattice filters and implication filters of a finite MV-algebra.

All filters are plain bitmasks over a fixed algebra; the empty mask is the
bottom sentinel (it is not a filter, but several calculus operations are
allowed to produce it).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .core import MvAlgebra, congruence_cosets, is_linear, iter_mask, mask_of
from .errors import InvalidArgument, ResourceLimit

DEFAULT_CARRIER_CAP = 64


def carrier_cap() -> int:
    return int(os.environ.get("MVFILTERS_MAX_CARRIER", DEFAULT_CARRIER_CAP))


def up_closure(a: MvAlgebra, mask: int) -> int:
    """Smallest up-closed superset of ``mask``."""
    m = 0
    for x in iter_mask(mask):
        m |= a.up_mask[x]
    return m


def down_closure_joins(a: MvAlgebra, mask: int) -> int:
    """Everything below some finite join of members of ``mask``.

    Closes under binary joins to a fixpoint, then takes down-sets; the empty
    set stays empty (there are no joins to take).
    """
    cur = mask
    while True:
        nxt = cur
        for x in iter_mask(cur):
            for y in iter_mask(cur):
                nxt |= 1 << a.join[x][y]
        if nxt == cur:
            break
        cur = nxt
    m = 0
    for x in iter_mask(cur):
        m |= a.down_mask[x]
    return m


def is_up_closed(a: MvAlgebra, mask: int) -> bool:
    return all(a.up_mask[x] & ~mask == 0 for x in iter_mask(mask))


def is_lattice_filter(a: MvAlgebra, mask: int) -> bool:
    """Nonempty, up-closed and closed under meets."""
    if mask == 0:
        return False
    if not is_up_closed(a, mask):
        return False
    for x in iter_mask(mask):
        for y in iter_mask(mask):
            if not (mask >> a.meet[x][y]) & 1:
                return False
    return True


def is_implication_filter(a: MvAlgebra, mask: int) -> bool:
    """Contains 1 and is closed under modus ponens."""
    if not (mask >> a.one) & 1:
        return False
    for x in iter_mask(mask):
        for y in range(a.size):
            if (mask >> a.imp[x][y]) & 1 and not (mask >> y) & 1:
                return False
    return True


def is_prime_lattice_filter(a: MvAlgebra, mask: int) -> bool:
    """Proper lattice filter F with x∨y ∈ F forcing x ∈ F or y ∈ F."""
    if mask == a.full_mask or not is_lattice_filter(a, mask):
        return False
    for x in range(a.size):
        if (mask >> x) & 1:
            continue
        for y in range(a.size):
            if (mask >> y) & 1:
                continue
            if (mask >> a.join[x][y]) & 1:
                return False
    return True


def is_prime_implication_filter(a: MvAlgebra, mask: int) -> bool:
    """Proper implication filter whose quotient is linearly ordered.

    Characterised by x→y ∈ P or y→x ∈ P for all x, y; equivalence with
    linearity of the quotient is cross-checked in the test suite.
    """
    if mask == a.full_mask or not is_implication_filter(a, mask):
        return False
    for x in range(a.size):
        for y in range(a.size):
            if not ((mask >> a.imp[x][y]) & 1 or (mask >> a.imp[y][x]) & 1):
                return False
    return True


def _check_cap(a: MvAlgebra):
    cap = carrier_cap()
    if a.size > cap:
        raise ResourceLimit(
            f"carrier size {a.size} exceeds enumeration cap {cap} "
            "(set MVFILTERS_MAX_CARRIER to raise it)"
        )


def enumerate_up_sets(a: MvAlgebra) -> list[int]:
    """All up-closed subsets (including empty and full), ascending by mask.

    Output-sensitive DFS: elements are visited from top to bottom; an element
    may be included only when everything above it is already in.
    """
    _check_cap(a)
    order = sorted(range(a.size), key=lambda x: bin(a.up_mask[x]).count("1"))
    results: list[int] = []

    def rec(i: int, cur: int):
        if i == len(order):
            results.append(cur)
            return
        x = order[i]
        rec(i + 1, cur)
        if a.up_mask[x] & ~(cur | (1 << x)) == 0:
            rec(i + 1, cur | (1 << x))

    rec(0, 0)
    return sorted(results)


def enumerate_lattice_filters(a: MvAlgebra, prime_only: bool = False) -> list[int]:
    """Every lattice filter (the improper one included), ascending by mask."""
    out = [m for m in enumerate_up_sets(a) if is_lattice_filter(a, m)]
    if prime_only:
        out = [m for m in out if is_prime_lattice_filter(a, m)]
    return out


def enumerate_implication_filters(a: MvAlgebra, prime_only: bool = False) -> list[int]:
    out = [m for m in enumerate_up_sets(a) if is_implication_filter(a, m)]
    if prime_only:
        out = [m for m in out if is_prime_implication_filter(a, m)]
    return out


def successor_structure(a: MvAlgebra):
    """(c, succ, pred) for a linearly ordered algebra whose 0 has a successor.

    succ maps every x < 1 to x⊕c and pred every x > 0 to x⊖c; immediacy of
    both is verified before returning.  Finite chains always qualify.
    """
    if not is_linear(a):
        raise InvalidArgument("successor structure needs a linearly ordered algebra")
    above_zero = [x for x in range(a.size) if x != a.zero]
    if not above_zero:
        raise InvalidArgument("trivial algebra has no successor structure")
    # successor of 0 = the least nonzero element
    c = above_zero[0]
    for x in above_zero:
        if a.leq(x, c):
            c = x
    succ = {}
    pred = {}
    for x in range(a.size):
        if x != a.one:
            succ[x] = a.oplus[x][c]
        if x != a.zero:
            pred[x] = a.otimes[x][a.neg[c]]
    for x, s in succ.items():
        if x == s or not a.leq(x, s):
            return None
        for z in range(a.size):
            if z != x and z != s and a.leq(x, z) and a.leq(z, s):
                return None
    for x, p in pred.items():
        if x == p or not a.leq(p, x):
            return None
    return c, succ, pred


@dataclass
class FilterClassification:
    is_lattice_filter: bool
    is_prime: bool
    is_implication_filter: bool
    is_principal: bool
    is_coprincipal: bool
    generator: int | None = None


def principality(a: MvAlgebra, mask: int) -> FilterClassification:
    """Classify a subset; in a finite algebra every lattice filter is principal."""
    latt = is_lattice_filter(a, mask)
    prime = latt and is_prime_lattice_filter(a, mask)
    impl = is_implication_filter(a, mask)
    generator = None
    principal = False
    if latt:
        for g in iter_mask(mask):
            if a.up_mask[g] == mask:
                generator = g
                principal = True
                break
    comp = a.full_mask & ~mask
    coprincipal = False
    if latt and comp:
        # complement has a maximum: some non-member above all non-members
        for m in iter_mask(comp):
            if all(a.leq(x, m) for x in iter_mask(comp)):
                coprincipal = True
                break
    return FilterClassification(latt, prime, impl, principal, coprincipal, generator)


def implication_filter_generated(a: MvAlgebra, mask: int) -> int:
    """Close ``mask`` plus 1 under ⊗ and up-closure to a fixpoint."""
    cur = up_closure(a, mask | a.one_mask)
    while True:
        nxt = cur
        for x in iter_mask(cur):
            for y in iter_mask(cur):
                nxt |= 1 << a.otimes[x][y]
        nxt = up_closure(a, nxt)
        if nxt == cur:
            return cur
        cur = nxt


def prime_congruence_classes(a: MvAlgebra, p_mask: int):
    return congruence_cosets(a, p_mask)


__all__ = [
    "up_closure",
    "down_closure_joins",
    "is_up_closed",
    "is_lattice_filter",
    "is_implication_filter",
    "is_prime_lattice_filter",
    "is_prime_implication_filter",
    "enumerate_up_sets",
    "enumerate_lattice_filters",
    "enumerate_implication_filters",
    "successor_structure",
    "principality",
    "FilterClassification",
    "implication_filter_generated",
    "carrier_cap",
    "DEFAULT_CARRIER_CAP",
]
