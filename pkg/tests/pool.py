"""Shared stock instances for property and acceptance tests."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from skewbrace.brace import SkewBrace
from skewbrace.enumeration import enumerate_braces
from skewbrace.groups import (
    FiniteGroup,
    automorphisms,
    cyclic_group,
    homomorphisms,
    is_automorphism,
    lambda_perms,
    rho_perms,
    semidirect_product_group,
)
from skewbrace.hgs import coset_space, psi
from skewbrace.perms import conjugate
from skewbrace.sdp import SdpSpec, is_admissible, make_sdp_brace
from skewbrace.stock import (
    abelian_group,
    dihedral_group,
    example_A_brace,
    example_B_brace,
    stock_groups,
)


def small_groups() -> list:
    return [G for n in range(1, 9) for _, G in stock_groups(n)]


@lru_cache(maxsize=None)
def braces_on(G: FiniteGroup) -> tuple:
    return tuple(e.brace for e in enumerate_braces(G))


@lru_cache(maxsize=None)
def all_small_braces() -> tuple:
    """Every skew brace on every stock group of order at most 8."""
    return tuple(b for G in small_groups() for b in braces_on(G))


@lru_cache(maxsize=None)
def a_side() -> tuple:
    groups = [cyclic_group(2), cyclic_group(3), cyclic_group(4), abelian_group([2, 2]), dihedral_group(3)]
    return tuple(b for G in groups for b in braces_on(G)) + (example_A_brace(),)


@lru_cache(maxsize=None)
def b_side() -> tuple:
    groups = [cyclic_group(2), cyclic_group(3), cyclic_group(4), abelian_group([2, 2])]
    return tuple(b for G in groups for b in braces_on(G)) + (example_B_brace(),)


@dataclass(frozen=True)
class Triple:
    A: SkewBrace
    B: SkewBrace
    phi: object  # GroupHom (B, o) -> Aut(A, o)


@lru_cache(maxsize=None)
def triples() -> tuple:
    """Every (A, B, phi) with |A| |B| <= 32 and phi : (B, o) -> Aut(A, o)."""
    out = []
    for A in a_side():
        aut = automorphisms(A.circ)
        for B in b_side():
            if A.n * B.n > 32:
                continue
            for phi in homomorphisms(B.circ, aut):
                out.append(Triple(A, B, phi))
    return tuple(out)


@lru_cache(maxsize=None)
def all_specs() -> tuple:
    """Every (A, B, phi, theta) over the triples, with theta any homomorphism (B, .) -> Aut(A, .)."""
    out = []
    for t in triples():
        for theta in homomorphisms(t.B.dot, automorphisms(t.A.dot)):
            out.append(SdpSpec(t.A, t.B, t.phi, theta))
    return tuple(out)


@lru_cache(maxsize=None)
def admissible_instances() -> tuple:
    """(spec, brace) for every admissible spec in the pool."""
    return tuple((s, make_sdp_brace(s)) for s in all_specs() if is_admissible(s))


def ext_subsets(spec: SdpSpec) -> tuple:
    nb = spec.B.n
    return tuple(a * nb for a in range(spec.A.n)), tuple(range(nb))


def acting_triples() -> list:
    """Triples whose phi lands in Aut(A, .), so the theta-trivial product is defined."""
    return [t for t in triples() if all(is_automorphism(t.A.dot, p) for p in t.phi.image)]


def prop_induced_instances(seed=0, step=3):
    """(M, X, A, phi) over the acting triples: the natural M's plus a random conjugate of each."""
    rng = random.Random(seed)
    for t in acting_triples()[::step]:
        G = semidirect_product_group(t.A.circ, t.B.circ, t.phi)
        nb, na = t.B.n, t.A.n
        A, B = tuple(a * nb for a in range(na)), tuple(range(nb))
        X = coset_space(G, B)
        ps = psi(X, A)
        base = [ps.preimage(rho_perms(t.A.dot)), ps.preimage(lambda_perms(t.A.circ))]
        for M in list(base):
            s = list(range(na))
            rng.shuffle(s)
            base.append([conjugate(tuple(s), m) for m in M])
        for M in base:
            yield M, X, A, t.phi
