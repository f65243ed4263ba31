"""Skew braces (G, ., o) on {0..n-1}: validation, gamma-function, ideals, quotients."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import (
    BraceAxiomFails,
    CircNotGroup,
    DotNotGroup,
    GroupTableError,
    NotAnIdeal,
)
from .groups import FiniteGroup, is_automorphism, is_normal, is_subgroup, iter_isomorphisms, make_group
from .perms import Perm, compose, identity_perm


@dataclass(frozen=True)
class SkewBrace:
    dot: FiniteGroup
    circ: FiniteGroup

    def __repr__(self) -> str:
        return f"SkewBrace(n={self.n})"

    @property
    def n(self) -> int:
        return self.circ.n

    @cached_property
    def gamma(self) -> tuple:
        """gamma[x][y] = x^-1 . (x o y)."""
        d, c, dinv = self.dot.table, self.circ.table, self.dot.inverses
        return tuple(tuple(d[dinv[x]][c[x][y]] for y in range(self.n)) for x in range(self.n))

    def is_trivial(self) -> bool:
        return self.dot.table == self.circ.table


def _as_group(g, err) -> FiniteGroup:
    if isinstance(g, FiniteGroup):
        return g
    try:
        return make_group(g)
    except GroupTableError as exc:
        raise err(str(exc)) from None


def first_axiom_failure(dot: FiniteGroup, circ: FiniteGroup):
    """First (x, y, z) in lexicographic order with x o (y.z) != (x o y).x^-1.(x o z)."""
    d, c, dinv = dot.table, circ.table, dot.inverses
    n = dot.n
    for x in range(n):
        cx = c[x]
        xi = dinv[x]
        for y in range(n):
            left = [cx[v] for v in d[y]]
            row = d[d[cx[y]][xi]]
            right = [row[v] for v in cx]
            if left != right:
                z = next(z for z in range(n) if left[z] != right[z])
                return (x, y, z)
    return None


def make_brace(dot, circ) -> SkewBrace:
    """Validate two group tables on the same set as a skew brace."""
    D = _as_group(dot, DotNotGroup)
    C = _as_group(circ, CircNotGroup)
    if D.n != C.n:
        raise DotNotGroup(f"dot has order {D.n} but circ has order {C.n}")
    bad = first_axiom_failure(D, C)
    if bad is not None:
        raise BraceAxiomFails(*bad)
    return SkewBrace(D, C)


def gamma(b: SkewBrace) -> tuple:
    """The gamma-function of b, with its defining properties re-checked."""
    g = b.gamma
    n = b.n
    assert g[0] == identity_perm(n)
    for x in range(n):
        assert is_automorphism(b.dot, g[x]), f"gamma_{x} is not a dot automorphism"
    c = b.circ.table
    for x in range(n):
        for y in range(n):
            assert g[c[x][y]] == compose(g[x], g[y]), f"gamma not a homomorphism at {x}, {y}"
    return g


def trivial_brace(G: FiniteGroup) -> SkewBrace:
    return SkewBrace(G, G)


def op_group(G: FiniteGroup) -> FiniteGroup:
    t = G.table
    return FiniteGroup(G.n, tuple(tuple(t[y][x] for y in range(G.n)) for x in range(G.n)))


def almost_trivial_brace(G: FiniteGroup) -> SkewBrace:
    return make_brace(op_group(G), G)


def opposite(b: SkewBrace) -> SkewBrace:
    return make_brace(op_group(b.dot), b.circ)


@dataclass(frozen=True)
class IdealClass:
    subset: tuple
    is_subgroup_circ: bool
    is_subgroup_dot: bool
    is_left_ideal: bool
    is_strong_left_ideal: bool
    is_ideal: bool

    def flags(self) -> dict:
        return {
            "subgroup_circ": self.is_subgroup_circ,
            "subgroup_dot": self.is_subgroup_dot,
            "left_ideal": self.is_left_ideal,
            "strong_left_ideal": self.is_strong_left_ideal,
            "ideal": self.is_ideal,
        }


def gamma_stable(b: SkewBrace, H) -> bool:
    Hs = set(H)
    return all({g[h] for h in Hs} == Hs for g in b.gamma)


def classify_subset(b: SkewBrace, H) -> IdealClass:
    H = tuple(sorted(set(H)))
    sc = is_subgroup(b.circ, H)
    sd = is_subgroup(b.dot, H)
    left = (sc or sd) and gamma_stable(b, H)
    # a gamma-stable subgroup for one operation is a subgroup for the other
    assert not left or (sc and sd), f"left ideal {H} is not a subgroup for both operations"
    strong = left and is_normal(b.dot, H)
    ideal = strong and is_normal(b.circ, H)
    return IdealClass(H, sc, sd, left, strong, ideal)


def subgroup_report(b: SkewBrace) -> list:
    """classify_subset for every subgroup of (G, o)."""
    return [classify_subset(b, H) for H in b.circ.subgroups]


def left_ideals(b: SkewBrace) -> list:
    return [c for c in subgroup_report(b) if c.is_left_ideal]


def ideals(b: SkewBrace) -> list:
    return [c for c in subgroup_report(b) if c.is_ideal]


def cosets(G: FiniteGroup, H) -> list:
    """Left cosets xH sorted by minimal element; the identity coset comes first."""
    t = G.table
    seen = set()
    out = []
    for x in range(G.n):
        if x not in seen:
            C = tuple(sorted({t[x][h] for h in H}))
            seen.update(C)
            out.append(C)
    return out


def quotient_brace(b: SkewBrace, A) -> SkewBrace:
    cls = classify_subset(b, A)
    if not cls.is_ideal:
        raise NotAnIdeal(f"{list(cls.subset)} is not an ideal")
    cs = cosets(b.circ, cls.subset)
    index = [0] * b.n
    for i, C in enumerate(cs):
        for x in C:
            index[x] = i
    reps = [C[0] for C in cs]
    d, c = b.dot.table, b.circ.table
    k = len(cs)
    dot = [[index[d[reps[i]][reps[j]]] for j in range(k)] for i in range(k)]
    circ = [[index[c[reps[i]][reps[j]]] for j in range(k)] for i in range(k)]
    for x in range(b.n):
        for y in range(b.n):
            assert dot[index[x]][index[y]] == index[d[x][y]], "dot not well defined on cosets"
            assert circ[index[x]][index[y]] == index[c[x][y]], "circ not well defined on cosets"
    return make_brace(dot, circ)


def restrict_brace(b: SkewBrace, subset) -> SkewBrace:
    """The sub-brace on ``subset`` re-indexed by sorted position."""
    elems = sorted(set(subset))
    pos = {x: i for i, x in enumerate(elems)}
    d, c = b.dot.table, b.circ.table
    try:
        dot = [[pos[d[x][y]] for y in elems] for x in elems]
    except KeyError:
        raise DotNotGroup(f"{elems} is not closed under dot") from None
    try:
        circ = [[pos[c[x][y]] for y in elems] for x in elems]
    except KeyError:
        raise CircNotGroup(f"{elems} is not closed under circ") from None
    return make_brace(dot, circ)


def brace_isomorphic(b1: SkewBrace, b2: SkewBrace) -> Perm | None:
    """A bijection respecting both operations, or None."""
    if b1.n != b2.n or b1.dot.order_profile != b2.dot.order_profile:
        return None
    d1, d2 = b1.dot.table, b2.dot.table
    n = b1.n
    for f in iter_isomorphisms(b1.circ, b2.circ):
        if all(f[d1[x][y]] == d2[f[x]][f[y]] for x in range(n) for y in range(n)):
            return f
    return None



def transport_brace(b: SkewBrace, f) -> SkewBrace:
    """The brace on the same index set making the bijection f an isomorphism."""
    n = b.n
    finv = [0] * n
    for x, y in enumerate(f):
        finv[y] = x
    d, c = b.dot.table, b.circ.table
    dot = [[f[d[finv[x]][finv[y]]] for y in range(n)] for x in range(n)]
    circ = [[f[c[finv[x]][finv[y]]] for y in range(n)] for x in range(n)]
    return make_brace(dot, circ)
