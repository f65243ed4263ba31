"""Named small groups, isomorphism-type labels, and fixed example braces."""

from __future__ import annotations

import hashlib
import json
from collections import Counter
from functools import lru_cache
from math import gcd

from .brace import SkewBrace, make_brace, trivial_brace
from .groups import (
    FiniteGroup,
    are_isomorphic,
    cyclic_group,
    direct_product,
    make_group,
    semidirect_product_group,
)
from .sdp import SdpSpec, make_spec

MAX_STOCK_ORDER = 32


def _prime_factors(n: int) -> dict:
    out: dict = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _partitions(e: int, largest: int | None = None):
    if e == 0:
        yield ()
        return
    largest = e if largest is None else largest
    for k in range(min(e, largest), 0, -1):
        for rest in _partitions(e - k, k):
            yield (k,) + rest


def abelian_invariants(n: int) -> list:
    """Invariant factor lists (largest first) of every abelian group of order n."""
    choices = [[]]
    for p, e in sorted(_prime_factors(n).items()):
        choices = [c + [[p**k for k in part]] for c in choices for part in _partitions(e)]
    out = []
    for c in choices:
        width = max((len(x) for x in c), default=0)
        factors = []
        for i in range(width):
            f = 1
            for powers in c:
                if i < len(powers):
                    f *= powers[i]
            factors.append(f)
        out.append(factors or [1])
    return sorted(out, key=lambda fs: (len(fs), [-f for f in fs]))


def abelian_group(factors) -> FiniteGroup:
    G = cyclic_group(factors[0])
    for f in factors[1:]:
        G = direct_product(G, cyclic_group(f))
    return G


def _power_action(m: int, k: int, r: int) -> list:
    # b^j acts on C_m as multiplication by r^j
    return [tuple((pow(r, j, m) * a) % m for a in range(m)) for j in range(k)]


def cyclic_sdp(m: int, k: int, r: int) -> FiniteGroup:
    """C_m x| C_k with the generator of C_k acting as a -> r a."""
    return semidirect_product_group(cyclic_group(m), cyclic_group(k), _power_action(m, k, r))


def dihedral_group(m: int) -> FiniteGroup:
    """Dihedral group of order 2m."""
    return cyclic_sdp(m, 2, m - 1)


def dicyclic_group(m: int) -> FiniteGroup:
    """<a, x | a^2m = 1, x^2 = a^m, x a x^-1 = a^-1>, order 4m; m = 2 gives Q8."""
    N = 2 * m

    def mul(u, v):
        (k1, e1), (k2, e2) = u, v
        if e1 == 0:
            return ((k1 + k2) % N, e2)
        if e2 == 0:
            return ((k1 - k2) % N, 1)
        return ((k1 - k2 + m) % N, 0)

    elems = [(k, e) for e in (0, 1) for k in range(N)]
    pos = {u: i for i, u in enumerate(elems)}
    return make_group([[pos[mul(u, v)] for v in elems] for u in elems])


def alternating_a4() -> FiniteGroup:
    """(C2 x C2) x| C3 with the generator cycling the three involutions."""
    V = abelian_group([2, 2])
    # V elements: 0=(0,0), 1=(0,1), 2=(1,0), 3=(1,1); cycle 1 -> 2 -> 3 -> 1
    rot = (0, 2, 3, 1)
    rot2 = tuple(rot[rot[x]] for x in range(4))
    return semidirect_product_group(V, cyclic_group(3), [(0, 1, 2, 3), rot, rot2])


def _units_of_order_dividing(m: int, k: int) -> list:
    return [r for r in range(2, m) if gcd(r, m) == 1 and pow(r, k, m) == 1]


@lru_cache(maxsize=None)
def stock_groups(n: int) -> tuple:
    """(label, group) pairs of pairwise non-isomorphic named groups of order n."""
    out: list = []

    def add(label, G):
        if not any(H.order_profile == G.order_profile and are_isomorphic(H, G) for _, H in out):
            out.append((label, G))

    for fs in abelian_invariants(n):
        add("x".join(f"C{f}" for f in fs), abelian_group(fs))
    if n % 2 == 0 and n >= 6:
        add(f"D{n // 2}", dihedral_group(n // 2))
    if n % 4 == 0 and n >= 8:
        add("Q8" if n == 8 else f"Dic{n // 4}", dicyclic_group(n // 4))
    if n == 12:
        add("A4", alternating_a4())
    for k in range(2, n):
        if n % k:
            continue
        m = n // k
        for r in _units_of_order_dividing(m, k):
            add(f"C{m}:C{k}" if not any(l.startswith(f"C{m}:C{k}") for l, _ in out)
                else f"C{m}:C{k}[{r}]", cyclic_sdp(m, k, r))
    return tuple(out)


def invariant_hash(G: FiniteGroup) -> str:
    """An isomorphism-invariant fingerprint (equal for isomorphic groups)."""
    t, o = G.table, G.orders
    triples = Counter((o[x], o[y], o[t[x][y]]) for x in range(G.n) for y in range(G.n))
    centre = sum(1 for x in range(G.n) if all(t[x][y] == t[y][x] for y in range(G.n)))
    blob = json.dumps([G.n, centre, sorted(triples.items())])
    return hashlib.sha256(blob.encode()).hexdigest()[:10]


def type_label(G: FiniteGroup) -> str:
    if G.n <= MAX_STOCK_ORDER:
        for label, H in stock_groups(G.n):
            if H.order_profile == G.order_profile and are_isomorphic(G, H) is not None:
                return label
    return f"G{G.n}-{invariant_hash(G)}"


def is_cyclic(G: FiniteGroup) -> bool:
    return G.n in G.orders


# The worked example on C8 and C4.  Element index i stands for the i-th
# circ power of the generator.


def example_A_brace() -> SkewBrace:
    """Circ C8, dot a[i] . a[j] = a[i + (-1)^i j]; the dot group is dihedral of order 8."""
    dot = [[(i + (-1) ** i * j) % 8 for j in range(8)] for i in range(8)]
    return make_brace(dot, cyclic_group(8))


def example_B_brace() -> SkewBrace:
    """Circ C4, dot b[i] . b[j] = b[i + j + 2ij]; the dot group is C2 x C2."""
    dot = [[(i + j + 2 * i * j) % 4 for j in range(4)] for i in range(4)]
    return make_brace(dot, cyclic_group(4))


def example_phi() -> list:
    """b acts on C8 by inversion."""
    inv = tuple((-a) % 8 for a in range(8))
    ident = tuple(range(8))
    return [ident if k % 2 == 0 else inv for k in range(4)]


def example_theta(A: SkewBrace | None = None) -> list:
    """Identity on {e, b[2]}, conjugation by a[2] in (A, .) on {b, b[3]}."""
    A = A or example_A_brace()
    d, inv = A.dot.table, A.dot.inverses
    r = 2
    iota = tuple(d[d[r][x]][inv[r]] for x in range(8))
    ident = tuple(range(8))
    return [ident, iota, ident, iota]


def example_spec() -> SdpSpec:
    A, B = example_A_brace(), example_B_brace()
    return make_spec(A, B, example_phi(), example_theta(A))


def metacyclic_pq(p: int, q: int) -> FiniteGroup:
    """C_p x| C_q with the smallest unit of multiplicative order q."""
    r = min(r for r in _units_of_order_dividing(p, q) if r != 1)
    return cyclic_sdp(p, q, r)


def cyclic_pq(p: int, q: int) -> FiniteGroup:
    """C_p x C_q in pair encoding (cyclic of order pq)."""
    return direct_product(cyclic_group(p), cyclic_group(q))


def stock_braces_small() -> list:
    """Trivial braces on every stock group of order at most 8."""
    return [trivial_brace(G) for n in range(1, 9) for _, G in stock_groups(n)]

