"""Exhaustive and constructive catalogs of skew braces on a fixed circle group.

Two independent exhaustive searches are provided:

* ``enumerate_braces`` searches over gamma.  It assigns values gamma_x(y) one
  cell at a time.  Each assignment is propagated through gamma_{x o y} =
  gamma_x gamma_y and through the automorphism property.  The dot is read off
  as x . gamma_x(y) = x o y.
* ``enumerate_by_holomorph`` runs over every candidate dot type H.  It lists
  the homomorphisms (G, o) -> Hol(H) with regular image and pulls back the
  group law of H along the orbit map.

``pq_catalog`` builds the braces of order pq from semidirect products of
trivial braces, then closes the result under opposites.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

from .brace import (
    SkewBrace,
    classify_subset,
    left_ideals,
    ideals,
    make_brace,
    op_group,
    opposite,
    restrict_brace,
    transport_brace,
    trivial_brace,
)
from .errors import BadPrimes, CircMismatch, OrderGuardExceeded, SkewBraceError
from .groups import (
    FiniteGroup,
    _iter_extensions,
    automorphisms,
    subgroups_of_order,
)
from .perms import compose, identity_perm, perm_order
from .sdp import admissible_thetas, conjugation_phi, make_sdp_brace, make_spec
from .stock import _prime_factors, cyclic_pq, is_cyclic, metacyclic_pq, stock_groups, type_label

DEFAULT_LIMIT = 12


@dataclass(frozen=True)
class CatalogEntry:
    brace: SkewBrace
    type: str
    provenance: str

    @property
    def dot(self) -> tuple:
        return self.brace.dot.table

    @cached_property
    def summary(self) -> dict:
        return {
            "left_ideals": len(left_ideals(self.brace)),
            "ideals": len(ideals(self.brace)),
        }


@dataclass(frozen=True)
class BraceCatalog:
    circ: FiniteGroup
    entries: tuple = field(default=())

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def dots(self) -> set:
        return {e.dot for e in self.entries}

    def find(self, dot) -> int | None:
        dot = tuple(map(tuple, dot))
        return next((i for i, e in enumerate(self.entries) if e.dot == dot), None)

    def is_closed_under_opposite(self) -> bool:
        dots = self.dots()
        return all(op_group(e.brace.dot).table in dots for e in self.entries)


def make_catalog(circ: FiniteGroup, items) -> BraceCatalog:
    """Catalog from (brace, provenance) pairs; the first provenance of a dot wins."""
    seen: dict = {}
    for b, prov in items:
        if b.circ.table != circ.table:
            raise CircMismatch("entry does not share the catalog's circ table")
        seen.setdefault(b.dot.table, (b, prov))
    entries = [
        CatalogEntry(b, type_label(b.dot), prov)
        for _, (b, prov) in sorted(seen.items())
    ]
    return BraceCatalog(circ, tuple(entries))


# gamma search


class _GammaSearch:
    def __init__(self, circ: FiniteGroup, invariant=()):
        n = circ.n
        self.n = n
        # gamma must preserve each subset in ``invariant``
        subsets = [set(H) for H in invariant]
        self.block = [frozenset(i for i, H in enumerate(subsets) if y in H) for y in range(n)]
        self.c = circ.table
        self.cinv = circ.inverses
        self.rows = circ.generators
        self.gam = [[-1] * n for _ in range(n)]
        self.ginv = [[-1] * n for _ in range(n)]
        # used[z][v] = x when dot(x, z) = v
        self.used = [[-1] * n for _ in range(n)]
        self.trail: list = []

    def dot(self, a: int, b: int) -> int:
        y = self.ginv[a][b]
        return -1 if y < 0 else self.c[a][y]

    def ldiv(self, a: int, m: int) -> int:
        """The b with dot(a, b) = m, or -1 while unknown."""
        return self.gam[a][self.c[self.cinv[a]][m]]

    def assign(self, x: int, y: int, z: int) -> bool:
        gam, ginv, used, c, cinv, n = self.gam, self.ginv, self.used, self.c, self.cinv, self.n
        dot, ldiv = self.dot, self.ldiv
        queue = [(x, y, z)]
        while queue:
            x, y, z = queue.pop()
            cur = gam[x][y]
            if cur == z:
                continue
            if cur >= 0 or ginv[x][z] >= 0 or self.block[y] != self.block[z]:
                return False
            v = c[x][y]
            if used[z][v] >= 0:
                return False
            gam[x][y] = z
            ginv[x][z] = y
            used[z][v] = x
            self.trail.append((x, y, z))
            # gamma_{u o x}(y) = gamma_u(z) and gamma_{x o w}(y') = z when gamma_w(y') = y
            for u in range(n):
                w = gam[u][z]
                if w >= 0:
                    queue.append((c[u][x], y, w))
                yp = ginv[u][y]
                if yp >= 0:
                    queue.append((c[x][u], yp, z))
            # dot(x, z) = v is new: every gamma_r must map it to dot(gamma_r x, gamma_r z)
            for r in range(n):
                gx, gz = gam[r][x], gam[r][z]
                if gx >= 0 and gz >= 0:
                    m = self.dot(gx, gz)
                    if m >= 0:
                        queue.append((r, v, m))
            # gamma_x(y) = z is new: gamma_x(y . a) = z . gamma_x(a), same on the left
            row = gam[x]
            for a in range(n):
                ga = row[a]
                if ga < 0:
                    continue
                m, w = self.dot(y, a), self.dot(z, ga)
                if m >= 0 and w >= 0:
                    queue.append((x, m, w))
                m, w = self.dot(a, y), self.dot(ga, z)
                if m >= 0 and w >= 0:
                    queue.append((x, m, w))
            # associativity (a.b).w = a.(b.w) with dot(x, z) = v in each of its four roles;
            # dot(p, q) = r is recorded as gamma_p(p-bar o r) = q
            for t in range(n):
                k = dot(z, t)
                r = dot(x, k) if k >= 0 else -1
                if r >= 0:
                    queue.append((v, c[cinv[v]][r], t))
                m = dot(t, x)
                r = dot(t, v) if m >= 0 else -1
                if r >= 0:
                    queue.append((m, c[cinv[m]][r], z))
                w = ldiv(t, z)
                m = dot(x, t) if w >= 0 else -1
                if m >= 0:
                    queue.append((m, c[cinv[m]][v], w))
                b = ldiv(t, x)
                k = dot(b, z) if b >= 0 else -1
                if k >= 0:
                    queue.append((t, c[cinv[t]][v], k))
        return True

    def undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            x, y, z = self.trail.pop()
            self.gam[x][y] = -1
            self.ginv[x][z] = -1
            self.used[z][self.c[x][y]] = -1

    def candidates(self, x: int, y: int) -> list:
        v = self.c[x][y]
        gi, blk = self.ginv[x], self.block[y]
        return [z for z in range(self.n) if gi[z] < 0 and self.used[z][v] < 0 and self.block[z] == blk]

    def choose(self):
        best = None
        for x in self.rows:
            row = self.gam[x]
            for y in range(self.n):
                if row[y] < 0:
                    cands = self.candidates(x, y)
                    if best is None or len(cands) < len(best[2]):
                        best = (x, y, cands)
                        if len(cands) <= 1:
                            return best
        return best

    def run(self):
        n = self.n
        for y in range(n):
            if not self.assign(0, y, y):
                return
        for x in range(n):
            if not self.assign(x, 0, 0):
                return
        yield from self._search()

    def _search(self):
        pick = self.choose()
        if pick is None:
            # gamma is a homomorphism, so the generator rows fix every row
            assert all(v >= 0 for row in self.gam for v in row)
            yield tuple(tuple(self.c[x][self.ginv[x][z]] for z in range(self.n)) for x in range(self.n))
            return
        x, y, cands = pick
        for z in cands:
            mark = len(self.trail)
            if self.assign(x, y, z):
                yield from self._search()
            self.undo(mark)


def _guard(circ: FiniteGroup, limit: int) -> None:
    if circ.n > limit:
        raise OrderGuardExceeded(f"order {circ.n} exceeds the search limit {limit}")


def _valid_braces(circ: FiniteGroup, dots) -> list:
    out = []
    for dot in dots:
        try:
            out.append(make_brace(dot, circ))
        except SkewBraceError:
            continue
    return out


def enumerate_braces(circ: FiniteGroup, limit: int = DEFAULT_LIMIT, invariant=()) -> BraceCatalog:
    """Every skew brace (G, ., o) with the given circ table.

    Subsets in ``invariant`` are required to be left ideals, which prunes the
    search when that is known in advance.
    """
    _guard(circ, limit)
    dots = set(_GammaSearch(circ, invariant).run())
    return make_catalog(circ, ((b, "oracle") for b in _valid_braces(circ, dots)))


# holomorph search


def holomorph(H: FiniteGroup) -> list:
    """Hol(H) as permutations of H: x -> h . alpha(x)."""
    t = H.table
    return [
        tuple(t[h][a[x]] for x in range(H.n))
        for h in range(H.n)
        for a in automorphisms(H).elements
    ]


def _regular_homs(G: FiniteGroup, H: FiniteGroup):
    ident = identity_perm(H.n)
    hol = [p for p in holomorph(H) if p == ident or all(p[x] != x for x in range(H.n))]
    orders = {p: perm_order(p) for p in hol}
    candidates = [[p for p in hol if orders[p] == G.orders[g]] for g in G.generators]
    for f in _iter_extensions(G, candidates, compose, ident):
        if len({p[0] for p in f}) == G.n:
            yield f


def enumerate_by_holomorph(circ: FiniteGroup, limit: int = DEFAULT_LIMIT) -> BraceCatalog:
    """Same catalog as ``enumerate_braces``, found through regular embeddings into holomorphs."""
    _guard(circ, limit)
    n = circ.n
    dots = set()
    for _, H in stock_groups(n):
        t = H.table
        for f in _regular_homs(circ, H):
            beta = [p[0] for p in f]
            binv = [0] * n
            for g, h in enumerate(beta):
                binv[h] = g
            dots.add(tuple(tuple(binv[t[beta[x]][beta[y]]] for y in range(n)) for x in range(n)))
    return make_catalog(circ, ((b, "oracle") for b in _valid_braces(circ, dots)))


# constructive catalog of order pq


def _is_prime(n: int) -> bool:
    return n > 1 and _prime_factors(n) == {n: 1}


def pq_group(p: int, q: int, which: str) -> FiniteGroup:
    if which == "cyclic":
        return cyclic_pq(p, q)
    if which == "metacyclic":
        return metacyclic_pq(p, q)
    raise BadPrimes(f"unknown group kind {which!r}")


def _check_primes(p: int, q: int, which: str) -> None:
    if which not in ("cyclic", "metacyclic"):
        raise BadPrimes(f"unknown group kind {which!r}")
    if not (_is_prime(p) and _is_prime(q)) or p <= q:
        raise BadPrimes(f"need primes p > q, got p={p}, q={q}")
    if (p - 1) % q and which == "metacyclic":
        raise BadPrimes(f"{q} does not divide {p} - 1, so there is no metacyclic group")


def expected_pq_counts(p: int, q: int, which: str) -> dict:
    """Counts of braces by kind ('cyclic' or 'metacyclic' dot group)."""
    if (p - 1) % q:
        return {"cyclic": 1, "metacyclic": 0}
    if which == "cyclic":
        return {"cyclic": 1, "metacyclic": 2 * (q - 1)}
    return {"cyclic": p, "metacyclic": 2 + 2 * p * (q - 2)}


def kind_counts(cat: BraceCatalog) -> dict:
    """Entries split by whether the dot group is cyclic."""
    k = Counter("cyclic" if is_cyclic(e.brace.dot) else "metacyclic" for e in cat.entries)
    return {"cyclic": k["cyclic"], "metacyclic": k["metacyclic"]}


def _theta_label(theta) -> str:
    return "[" + ",".join("".join(map(str, p)) if len(p) < 10 else str(list(p)) for p in theta.image) + "]"


def pq_catalog(p: int, q: int, which: str = "cyclic") -> BraceCatalog:
    """Braces on the group of order pq, built as A x| B over the Sylow subgroups."""
    _check_primes(p, q, which)
    G = pq_group(p, q, which)
    if (p - 1) % q:
        return make_catalog(G, [(trivial_brace(G), "trivial")])
    (A,) = subgroups_of_order(G, p)
    A_tr = trivial_brace(restrict_brace(trivial_brace(G), A).circ)
    items = []
    for B in subgroups_of_order(G, q):
        B_tr = trivial_brace(restrict_brace(trivial_brace(G), B).circ)
        phi = conjugation_phi(G, A, B)
        # delta^-1: external code i*q + j -> A[i] o B[j]
        f = [G.table[a][b] for a in A for b in B]
        for theta in admissible_thetas(A_tr, B_tr, phi):
            spec = make_spec(A_tr, B_tr, phi, theta)
            ext = make_sdp_brace(spec)
            b = transport_brace(ext, f)
            assert b.circ.table == G.table, "sdp circle group is not G"
            assert classify_subset(b, A).is_ideal and classify_subset(b, B).is_left_ideal
            items.append((b, f"sdp(B={list(B)},theta={_theta_label(theta)})"))
    cat = make_catalog(G, items)
    first = {e.dot: i for i, e in enumerate(cat.entries)}
    extra = []
    for e in cat.entries:
        o = opposite(e.brace)
        if o.dot.table not in first:
            extra.append((o, f"opposite-of({e.provenance})"))
    cat = make_catalog(G, [(e.brace, e.provenance) for e in cat.entries] + extra)
    assert cat.is_closed_under_opposite()
    got = kind_counts(cat)
    assert got == expected_pq_counts(p, q, which), f"pq counts {got}"
    for e in cat.entries:
        assert classify_subset(e.brace, A).is_ideal
    return cat


def enumerate_pq_braces(p: int, q: int, which: str = "cyclic", limit: int = 64) -> BraceCatalog:
    """Search-based catalog on the group of order pq, independent of ``pq_catalog``.

    For p > q the order-p subgroup of any group of order pq is characteristic,
    so in every brace it is the dot group's Sylow p-subgroup and hence a left
    ideal. The search only keeps gamma functions that preserve it.
    """
    _check_primes(p, q, which)
    G = pq_group(p, q, which)
    (A,) = subgroups_of_order(G, p)
    return enumerate_braces(G, limit, invariant=[A])


def count_by_type(cat: BraceCatalog) -> dict:
    return dict(sorted(Counter(e.type for e in cat.entries).items()))


@dataclass(frozen=True)
class CrossCheck:
    equal: bool
    only_in_first: tuple
    only_in_second: tuple

    def __bool__(self) -> bool:
        return self.equal


def cross_check(a: BraceCatalog, b: BraceCatalog) -> CrossCheck:
    if a.circ.table != b.circ.table:
        raise CircMismatch("catalogs have different circ tables")
    da, db = a.dots(), b.dots()
    return CrossCheck(da == db, tuple(sorted(da - db)), tuple(sorted(db - da)))


@dataclass(frozen=True)
class Realization:
    index: int
    A_ideal: bool
    A_strong_left_ideal: bool
    B_left_ideal: bool
    complements: bool

    @property
    def realized(self) -> bool:
        """Whether A and B give an ideal / left-ideal semidirect decomposition."""
        return self.A_ideal and self.B_left_ideal and self.complements


def realization_report(cat: BraceCatalog, A, B) -> list:
    A, B = sorted(set(A)), sorted(set(B))
    out = []
    for i, e in enumerate(cat.entries):
        b = e.brace
        ca, cb = classify_subset(b, A), classify_subset(b, B)
        comp = (
            set(A) & set(B) == {0}
            and {b.circ.table[x][y] for x in A for y in B} == set(range(b.n))
            and {b.dot.table[x][y] for x in A for y in B} == set(range(b.n))
        )
        out.append(Realization(i, ca.is_ideal, ca.is_strong_left_ideal, cb.is_left_ideal, comp))
    return out
