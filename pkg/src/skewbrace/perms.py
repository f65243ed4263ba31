"""Permutations of {0..n-1} stored as tuples, and explicit permutation groups.

A permutation ``p`` maps ``x`` to ``p[x]``.  Composition follows function
notation: ``compose(p, q)`` applies ``q`` first, then ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import NotAPermutation, NotClosed

Perm = tuple  # tuple[int, ...]


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def as_perm(seq: Sequence[int], deg: int | None = None) -> Perm:
    p = tuple(int(v) for v in seq)
    n = len(p) if deg is None else deg
    if len(p) != n or sorted(p) != list(range(n)):
        raise NotAPermutation(f"{list(seq)} is not a permutation of 0..{n - 1}")
    return p


def compose(p: Perm, q: Perm) -> Perm:
    return tuple(p[x] for x in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


def conjugate(t: Perm, p: Perm) -> Perm:
    """Return t p t^-1."""
    return compose(compose(t, p), inverse(t))


def perm_power(p: Perm, k: int) -> Perm:
    if k < 0:
        p, k = inverse(p), -k
    result = identity_perm(len(p))
    base = p
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def perm_order(p: Perm) -> int:
    ident = identity_perm(len(p))
    q, k = p, 1
    while q != ident:
        q = compose(q, p)
        k += 1
    return k


def fixed_points(p: Perm) -> list[int]:
    return [x for x, y in enumerate(p) if x == y]


@dataclass(frozen=True)
class PermGroup:
    """An explicit permutation group: the complete sorted element list."""

    deg: int
    elements: tuple

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p) -> bool:
        return tuple(p) in self._lookup

    @cached_property
    def _lookup(self) -> frozenset:
        return frozenset(self.elements)

    @property
    def identity(self) -> Perm:
        return identity_perm(self.deg)

    def mul(self, p: Perm, q: Perm) -> Perm:
        return compose(p, q)

    def index(self, p: Perm) -> int:
        return self.elements.index(tuple(p))


def perm_group(perms: Iterable[Sequence[int]], deg: int | None = None) -> PermGroup:
    """Build a PermGroup from a complete element list, checking closure."""
    elems = sorted({tuple(p) for p in perms})
    if deg is None:
        if not elems:
            raise NotClosed("empty permutation set has no degree")
        deg = len(elems[0])
    for p in elems:
        as_perm(p, deg)
    group = PermGroup(deg, tuple(elems))
    if identity_perm(deg) not in group:
        raise NotClosed("permutation set does not contain the identity")
    for p in elems:
        if inverse(p) not in group:
            raise NotClosed(f"inverse of {p} missing")
        for q in elems:
            if compose(p, q) not in group:
                raise NotClosed(f"product of {p} and {q} missing")
    return group


def generate(gens: Iterable[Sequence[int]], deg: int) -> PermGroup:
    """Closure of ``gens`` under composition."""
    gens = [as_perm(g, deg) for g in gens]
    ident = identity_perm(deg)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                r = compose(p, g)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return PermGroup(deg, tuple(sorted(seen)))
