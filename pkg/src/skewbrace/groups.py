"""Finite groups as Cayley tables on {0..n-1} with identity 0.

Homomorphisms, automorphisms and isomorphisms are found by assigning images
to a fixed generating set and extending along a BFS spanning tree of the
Cayley graph; a candidate extension is a homomorphism exactly when it
commutes with right multiplication by every generator.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterator, Sequence

from .errors import (
    NoIdentityAtZero,
    NoInverse,
    NotAHomomorphism,
    NotAnAction,
    NotASubgroup,
    NotAssociative,
    NotClosed,
    NotSquare,
)
from .perms import Perm, PermGroup, compose, identity_perm, inverse

Table = tuple  # tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FiniteGroup:
    n: int
    table: Table

    def __repr__(self) -> str:
        return f"FiniteGroup(n={self.n})"

    @property
    def elements(self) -> range:
        return range(self.n)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    @cached_property
    def inverses(self) -> tuple:
        inv = [0] * self.n
        for x in range(self.n):
            inv[x] = self.table[x].index(0)
        return tuple(inv)

    def inv(self, x: int) -> int:
        return self.inverses[x]

    @cached_property
    def orders(self) -> tuple:
        out = []
        for x in range(self.n):
            y, k = x, 1
            while y != 0:
                y = self.table[y][x]
                k += 1
            out.append(k)
        return tuple(out)

    @cached_property
    def order_profile(self) -> tuple:
        return tuple(sorted(Counter(self.orders).items()))

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[x][y] == t[y][x] for x in range(self.n) for y in range(x))

    @cached_property
    def generators(self) -> tuple:
        """A small generating set, chosen greedily by decreasing element order."""
        gens: list[int] = []
        span = {0}
        for x in sorted(range(1, self.n), key=lambda x: (-self.orders[x], x)):
            if x not in span:
                gens.append(x)
                span = set(closure(self, gens))
                if len(span) == self.n:
                    break
        return tuple(gens)

    @cached_property
    def _prefix_trees(self) -> tuple:
        # For each j: BFS edges (child, parent, gen index) over <gens[:j+1]>
        # and the member list of that subgroup.
        trees = []
        t = self.table
        gens = self.generators
        for j in range(len(gens)):
            seen = {0}
            members = [0]
            edges = []
            head = 0
            while head < len(members):
                x = members[head]
                head += 1
                for gi in range(j + 1):
                    y = t[x][gens[gi]]
                    if y not in seen:
                        seen.add(y)
                        members.append(y)
                        edges.append((y, x, gi))
            trees.append((tuple(edges), tuple(members)))
        return tuple(trees)

    @cached_property
    def subgroups(self) -> tuple:
        return all_subgroups(self)


@dataclass(frozen=True)
class GroupHom:
    """A homomorphism stored as the image of each source element.

    ``dst`` is a FiniteGroup (images are element indices) or a PermGroup
    (images are permutations).
    """

    src: FiniteGroup
    dst: object
    image: tuple

    def __call__(self, x: int):
        return self.image[x]

    def __len__(self) -> int:
        return len(self.image)

    def is_trivial(self) -> bool:
        ident = _identity_of(self.dst)
        return all(v == ident for v in self.image)


def _identity_of(dst):
    return dst.identity if isinstance(dst, PermGroup) else 0


def _mul_of(dst) -> Callable:
    if isinstance(dst, PermGroup):
        return compose
    t = dst.table
    return lambda a, b: t[a][b]


def _order_in(dst, v) -> int:
    if isinstance(dst, FiniteGroup):
        return dst.orders[v]
    ident = dst.identity
    w, k = v, 1
    while w != ident:
        w = compose(w, v)
        k += 1
    return k


# construction and validation


def make_group(table: Sequence[Sequence[int]]) -> FiniteGroup:
    rows = [list(r) for r in table]
    n = len(rows)
    if n == 0:
        raise NotSquare("empty table")
    for x, row in enumerate(rows):
        if len(row) != n:
            raise NotSquare(f"row {x} has length {len(row)}, expected {n}")
    for x in range(n):
        for y in range(n):
            v = rows[x][y]
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise NotClosed(f"table[{x}][{y}] = {v!r} is outside 0..{n - 1}")
    for y in range(n):
        if rows[0][y] != y or rows[y][0] != y:
            raise NoIdentityAtZero(f"element 0 is not an identity: fails at {y}")
    for x in range(n):
        if not any(rows[x][y] == 0 and rows[y][x] == 0 for y in range(n)):
            raise NoInverse(f"element {x} has no two-sided inverse")
    for x in range(n):
        rx = rows[x]
        for y in range(n):
            rxy = rows[rx[y]]
            ry = rows[y]
            for z in range(n):
                if rxy[z] != rx[ry[z]]:
                    raise NotAssociative(f"(x.y).z != x.(y.z) at ({x}, {y}, {z})")
    return FiniteGroup(n, tuple(tuple(r) for r in rows))


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("order must be positive")
    return make_group([[(x + y) % n for y in range(n)] for x in range(n)])


def is_automorphism(G: FiniteGroup, f: Sequence[int]) -> bool:
    if sorted(f) != list(range(G.n)):
        return False
    t = G.table
    return all(f[t[x][y]] == t[f[x]][f[y]] for x in range(G.n) for y in range(G.n))


def check_hom(src: FiniteGroup, dst, image: Sequence) -> GroupHom:
    """Validate ``image`` as a homomorphism src -> dst and wrap it."""
    image = tuple(tuple(v) if isinstance(dst, PermGroup) else v for v in image)
    if len(image) != src.n:
        raise NotAHomomorphism(f"image has length {len(image)}, expected {src.n}")
    mul = _mul_of(dst)
    if image[0] != _identity_of(dst):
        raise NotAHomomorphism("identity is not mapped to identity")
    t = src.table
    for x in range(src.n):
        for y in range(src.n):
            if image[t[x][y]] != mul(image[x], image[y]):
                raise NotAHomomorphism(f"f(x y) != f(x) f(y) at ({x}, {y})")
    return GroupHom(src, dst, image)


def perm_hom(src: FiniteGroup, images: Sequence[Sequence[int]], deg: int | None = None) -> GroupHom:
    """Homomorphism into a symmetric group; dst is the generated permutation group."""
    from .perms import generate

    images = [tuple(p) for p in images]
    if deg is None:
        deg = len(images[0]) if images else 1
    return check_hom(src, generate(images, deg), images)


def action_hom(A: FiniteGroup, B: FiniteGroup, images: Sequence[Sequence[int]]) -> GroupHom:
    """A homomorphism B -> Aut(A) given by one permutation of A per element of B."""
    images = [tuple(p) for p in images]
    if len(images) != B.n:
        raise NotAnAction(f"need {B.n} images, got {len(images)}")
    for b, p in enumerate(images):
        if len(p) != A.n or not is_automorphism(A, p):
            raise NotAnAction(f"image of {b} is not an automorphism")
    try:
        return perm_hom(B, images, A.n)
    except NotAHomomorphism as exc:
        raise NotAnAction(str(exc)) from None


def trivial_hom(B: FiniteGroup, deg: int) -> GroupHom:
    ident = identity_perm(deg)
    return GroupHom(B, PermGroup(deg, (ident,)), tuple(ident for _ in range(B.n)))


# products


def semidirect_product_group(A: FiniteGroup, B: FiniteGroup, act) -> FiniteGroup:
    """(a, b)(a', b') = (a act_b(a'), b b'), element (a, b) encoded as a*|B| + b."""
    images = act.image if isinstance(act, GroupHom) else act
    act = action_hom(A, B, images)
    nb = B.n
    ta, tb = A.table, B.table
    n = A.n * nb
    table = []
    for x in range(n):
        a, b = divmod(x, nb)
        phib = act.image[b]
        row = []
        for y in range(n):
            a2, b2 = divmod(y, nb)
            row.append(ta[a][phib[a2]] * nb + tb[b][b2])
        table.append(row)
    return make_group(table)


def direct_product(A: FiniteGroup, B: FiniteGroup) -> FiniteGroup:
    return semidirect_product_group(A, B, trivial_hom(B, A.n))


def pair_code(a: int, b: int, nb: int) -> int:
    return a * nb + b


def relabel(G: FiniteGroup, f: Sequence[int]) -> FiniteGroup:
    """Transport G along the bijection f (f[0] must be 0)."""
    finv = inverse(tuple(f))
    t = G.table
    return make_group([[f[t[finv[x]][finv[y]]] for y in range(G.n)] for x in range(G.n)])


# subgroups


def closure(G: FiniteGroup, elems) -> tuple:
    t = G.table
    gens = sorted(set(elems) - {0})
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = t[x][g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(seen))


def is_subgroup(G: FiniteGroup, H) -> bool:
    Hs = set(H)
    if 0 not in Hs or not Hs <= set(range(G.n)):
        return False
    t = G.table
    return all(t[x][y] in Hs for x in Hs for y in Hs)


def all_subgroups(G: FiniteGroup) -> tuple:
    """Every subgroup, as sorted tuples, ordered by (size, elements)."""
    cyclics = {closure(G, [x]) for x in range(G.n)}
    found = set(cyclics)
    frontier = set(cyclics)
    while frontier:
        nxt = set()
        for H in frontier:
            Hs = set(H)
            for C in cyclics:
                if not set(C) <= Hs:
                    J = closure(G, H + C)
                    if J not in found:
                        found.add(J)
                        nxt.add(J)
        frontier = nxt
    return tuple(sorted(found, key=lambda H: (len(H), H)))


def subgroups_of_order(G: FiniteGroup, k: int) -> list:
    if k < 1 or G.n % k:
        return []
    return [H for H in G.subgroups if len(H) == k]


def is_normal(G: FiniteGroup, H) -> bool:
    if not is_subgroup(G, H):
        raise NotASubgroup(f"{sorted(set(H))} is not a subgroup")
    Hs = set(H)
    t, inv = G.table, G.inverses
    return all(t[t[g][h]][inv[g]] in Hs for g in range(G.n) for h in Hs)


def restrict(G: FiniteGroup, subset) -> FiniteGroup:
    """The subgroup on ``subset`` re-indexed by sorted position."""
    elems = sorted(set(subset))
    if not is_subgroup(G, elems):
        raise NotASubgroup(f"{elems} is not a subgroup")
    pos = {x: i for i, x in enumerate(elems)}
    t = G.table
    return make_group([[pos[t[x][y]] for y in elems] for x in elems])


# regular representations


def lambda_perms(G: FiniteGroup) -> tuple:
    """lambda(g)[x] = g x, indexed by g."""
    return tuple(tuple(G.table[g]) for g in range(G.n))


def rho_perms(G: FiniteGroup) -> tuple:
    """rho(g)[x] = x g^-1, indexed by g."""
    t, inv = G.table, G.inverses
    return tuple(tuple(t[x][inv[g]] for x in range(G.n)) for g in range(G.n))


def left_regular(G: FiniteGroup) -> PermGroup:
    return PermGroup(G.n, tuple(sorted(lambda_perms(G))))


def right_regular(G: FiniteGroup) -> PermGroup:
    return PermGroup(G.n, tuple(sorted(rho_perms(G))))


# homomorphism search


def _iter_extensions(
    G: FiniteGroup, candidates: Sequence[Sequence], mul, ident
) -> Iterator[list]:
    """Yield every homomorphism extending some choice of generator images.

    candidates[i] lists the allowed images of G.generators[i].  Each prefix of
    generator images is checked on the subgroup those generators span before
    the next generator is assigned.
    """
    gens = G.generators
    t = G.table
    trees = G._prefix_trees
    if not gens:
        yield [ident]
        return
    k = len(gens)
    images = [None] * k

    def consistent(j: int):
        edges, members = trees[j]
        f = {0: ident}
        for y, x, gi in edges:
            f[y] = mul(f[x], images[gi])
        for x in members:
            fx = f[x]
            for gi in range(j + 1):
                if f[t[x][gens[gi]]] != mul(fx, images[gi]):
                    return None
        return f

    def rec(j: int):
        for c in candidates[j]:
            images[j] = c
            f = consistent(j)
            if f is None:
                continue
            if j == k - 1:
                yield [f[x] for x in range(G.n)]
            else:
                yield from rec(j + 1)

    yield from rec(0)


def homomorphisms(B: FiniteGroup, T) -> list:
    """All homomorphisms B -> T (T a PermGroup or FiniteGroup), sorted by image."""
    elems = list(T.elements) if isinstance(T, PermGroup) else list(range(T.n))
    orders = {e: _order_in(T, e) for e in elems}
    candidates = [
        [e for e in elems if B.orders[g] % orders[e] == 0] for g in B.generators
    ]
    out = [
        GroupHom(B, T, tuple(f))
        for f in _iter_extensions(B, candidates, _mul_of(T), _identity_of(T))
    ]
    out.sort(key=lambda h: h.image)
    return out


def iter_isomorphisms(G1: FiniteGroup, G2: FiniteGroup) -> Iterator[Perm]:
    if G1.n != G2.n or G1.order_profile != G2.order_profile:
        return
    candidates = [
        [y for y in range(G2.n) if G2.orders[y] == G1.orders[g]] for g in G1.generators
    ]
    t2 = G2.table
    for f in _iter_extensions(G1, candidates, lambda a, b: t2[a][b], 0):
        if len(set(f)) == G1.n:
            yield tuple(f)


def are_isomorphic(G1: FiniteGroup, G2: FiniteGroup) -> Perm | None:
    """A witness isomorphism w (w(x y) = w(x) w(y)) or None."""
    return next(iter_isomorphisms(G1, G2), None)


def automorphisms(G: FiniteGroup) -> PermGroup:
    return PermGroup(G.n, tuple(sorted(iter_isomorphisms(G, G))))
