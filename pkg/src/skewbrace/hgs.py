"""Regular permutation subgroups and the induced-structure construction.

Braces (G, ., o) with a fixed circle group correspond to regular subgroups of
Perm(G) normalised by lambda_o(G); the brace gives rho_.(G), and a subgroup N
gives back a dot by transporting N along eta -> eta^-1[e].

For G = A o B with A normal, X = G/B is indexed by A, and psi identifies
Perm(X) with Perm(A).  Permutations of A and B use local indices (sorted
position within the subset).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .brace import SkewBrace, classify_subset, cosets, make_brace, restrict_brace
from .errors import (
    BadComplementPair,
    NotAnIdeal,
    NotASubgroup,
    NotATransversal,
    NotNormalized,
    NotRegular,
)
from .groups import (
    FiniteGroup,
    GroupHom,
    action_hom,
    is_automorphism,
    is_normal,
    is_subgroup,
    lambda_perms,
    perm_hom,
    restrict,
    rho_perms,
    semidirect_product_group,
    trivial_hom,
)
from .perms import Perm, PermGroup, compose, conjugate, identity_perm, inverse, perm_group
from .sdp import conjugation_phi, is_internal_sdp, make_sdp_brace, make_spec

PermSet = PermGroup


@dataclass(frozen=True)
class CosetSpace:
    G: FiniteGroup
    B: tuple
    reps: tuple  # minimal element of each coset
    index: tuple  # element -> coset number

    def __len__(self) -> int:
        return len(self.reps)

    @property
    def lambda_perms(self) -> tuple:
        """lambda_X(g)[x B] = (g o x) B, indexed by g."""
        t = self.G.table
        return tuple(
            tuple(self.index[t[g][r]] for r in self.reps) for g in range(self.G.n)
        )

    def lambda_X(self) -> GroupHom:
        return perm_hom(self.G, self.lambda_perms, len(self.reps))


def coset_space(G: FiniteGroup, B) -> CosetSpace:
    B = tuple(sorted(set(B)))
    if not is_subgroup(G, B):
        raise NotASubgroup(f"{list(B)} is not a subgroup")
    cs = cosets(G, B)
    index = [0] * G.n
    for i, C in enumerate(cs):
        for x in C:
            index[x] = i
    X = CosetSpace(G, B, tuple(C[0] for C in cs), tuple(index))
    lam = X.lambda_perms
    assert {lam[g][0] for g in range(G.n)} == set(range(len(cs))), "lambda_X not transitive"
    return X


def is_regular(S) -> bool:
    elems = list(S)
    if not elems:
        return False
    deg = len(elems[0])
    if len(set(map(tuple, elems))) != deg:
        return False
    ident = identity_perm(deg)
    return all(
        all(p[x] != x for x in range(deg)) for p in map(tuple, elems) if p != ident
    )


def normalized_by(S, T: Sequence[Perm]) -> bool:
    Ss = {tuple(p) for p in S}
    return all({conjugate(tuple(t), p) for p in Ss} == Ss for t in T)


def brace_to_regular(b: SkewBrace) -> PermGroup:
    S = PermGroup(b.n, tuple(sorted(rho_perms(b.dot))))
    assert is_regular(S), "rho_.(G) is not regular"
    assert normalized_by(S, lambda_perms(b.circ)), "rho_.(G) not normalised by lambda_o(G)"
    return S


def regular_to_brace(S, circ: FiniteGroup) -> SkewBrace:
    """Transport a regular, lambda_o-normalised subgroup to a dot on G."""
    elems = [tuple(p) for p in S]
    if not is_regular(elems) or len(elems[0]) != circ.n:
        raise NotRegular("subgroup is not regular on the elements of G")
    if not normalized_by(elems, lambda_perms(circ)):
        raise NotNormalized("subgroup is not normalised by lambda_o(G)")
    by_key = {}
    for eta in elems:
        by_key[inverse(eta)[0]] = eta
    n = circ.n
    dot = [[inverse(compose(by_key[g], by_key[h]))[0] for h in range(n)] for g in range(n)]
    b = make_brace(dot, circ)
    assert set(rho_perms(b.dot)) == set(elems), "transported dot does not recover the subgroup"
    return b


@dataclass(frozen=True)
class Psi:
    """psi : Perm(X) -> Perm(A) with psi(mu)[a] o B = mu[a o B]."""

    X: CosetSpace
    A: tuple
    a_of_coset: tuple  # coset number -> element of A in it

    def local(self, a: int) -> int:
        return self.A.index(a)

    def forward(self, mu: Perm) -> Perm:
        out = tuple(self.local(self.a_of_coset[mu[self.X.index[a]]]) for a in self.A)
        assert self._backward(out) == tuple(mu)
        return out

    def _backward(self, pi: Perm) -> Perm:
        return tuple(
            self.X.index[self.A[pi[self.local(self.a_of_coset[i])]]] for i in range(len(self.X))
        )

    def backward(self, pi: Perm) -> Perm:
        out = self._backward(pi)
        assert self.forward(out) == tuple(pi)
        return out

    def image(self, M) -> PermGroup:
        return PermGroup(len(self.A), tuple(sorted(self.forward(tuple(m)) for m in M)))

    def preimage(self, S) -> PermGroup:
        return PermGroup(len(self.X), tuple(sorted(self.backward(tuple(p)) for p in S)))


def psi(X: CosetSpace, A) -> Psi:
    A = tuple(sorted(set(A)))
    hit = [None] * len(X)
    for a in A:
        i = X.index[a]
        if hit[i] is not None:
            raise NotATransversal(f"{hit[i]} and {a} lie in the same coset")
        hit[i] = a
    if None in hit:
        raise NotATransversal("some coset contains no element of A")
    return Psi(X, A, tuple(hit))


def _b_component(b: SkewBrace, A, B) -> tuple:
    """b_g for each g, where g = a_g o b_g with a_g in A and b_g in B."""
    c = b.circ.table
    out = [0] * b.n
    for a in A:
        for x in B:
            out[c[a][x]] = x
    return tuple(out)


def rho_bar(b: SkewBrace, A, X: CosetSpace) -> tuple:
    """(images indexed by local a, the group A-bar) for rho-bar(a)[a' B] = (a' a^-1) B.

    Checks regularity and lambda_X-normalisation.  When B is also a left
    ideal (so b is the semidirect product of A and B) it checks the
    conjugation rule
    lambda_X(g) rho-bar(a) lambda_X(g)^-1 = rho-bar(b_g gamma_g(a) b_g^-1)
    with g = a_g o b_g.  When b_g centralises gamma_g(a) in (G, .) this is
    rho-bar(gamma_g(a)); see ``conjugation_identity_failures``.
    """
    A = tuple(sorted(set(A)))
    if not classify_subset(b, A).is_ideal:
        raise NotAnIdeal(f"{list(A)} is not an ideal")
    ps = psi(X, A)
    d, dinv = b.dot.table, b.dot.inverses
    images = []
    for a in A:
        images.append(tuple(X.index[d[ps.a_of_coset[i]][dinv[a]]] for i in range(len(X))))
    images = tuple(images)
    Abar = PermGroup(len(X), tuple(sorted(set(images))))
    # rho-bar is psi^-1 composed with the right regular representation of (A, .)
    rho_A = rho_perms(restrict_brace(b, A).dot)
    assert all(ps.backward(rho_A[i]) == images[i] for i in range(len(A)))
    assert is_regular(Abar), "A-bar is not regular"
    lam = X.lambda_perms
    assert normalized_by(Abar, lam), "A-bar is not normalised by lambda_X(G)"
    if not is_internal_sdp(b, A, X.B):
        return images, Abar
    gam = b.gamma
    bg = _b_component(b, A, X.B)
    for g in range(b.n):
        for i, a in enumerate(A):
            t = d[d[bg[g]][gam[g][a]]][dinv[bg[g]]]
            assert conjugate(lam[g], images[i]) == images[A.index(t)], "conjugation rule fails"
    return images, Abar


def conjugation_identity_failures(b: SkewBrace, A, X: CosetSpace) -> list:
    """Pairs (g, a) with lambda_X(g) rho-bar(a) lambda_X(g)^-1 != rho-bar(gamma_g(a))."""
    A = tuple(sorted(set(A)))
    images, _ = rho_bar(b, A, X)
    lam, gam = X.lambda_perms, b.gamma
    return [
        (g, a)
        for g in range(b.n)
        for i, a in enumerate(A)
        if conjugate(lam[g], images[i]) != images[A.index(gam[g][a])]
    ]


def _complement_pair(G: FiniteGroup, A, B) -> tuple:
    A, B = tuple(sorted(set(A))), tuple(sorted(set(B)))
    if not is_subgroup(G, A) or not is_normal(G, A):
        raise BadComplementPair(f"{list(A)} is not a normal subgroup")
    if set(A) & set(B) != {0} or len(A) * len(B) != G.n:
        raise BadComplementPair("A and B are not complements")
    return A, B


def induce(M, N, X: CosetSpace, A) -> PermGroup:
    """nu(M x N) where nu(mu, eta)[a o b] = psi(mu)[a] o eta[b]."""
    G = X.G
    A, B = _complement_pair(G, A, X.B)
    M = [tuple(m) for m in M]
    N = [tuple(e) for e in N]
    if not is_regular(M) or len(M[0]) != len(X):
        raise NotRegular("M is not a regular subgroup of Perm(X)")
    if not normalized_by(M, X.lambda_perms):
        raise NotNormalized("M is not normalised by lambda_X(G)")
    if not is_regular(N) or len(N[0]) != len(B):
        raise NotRegular("N is not a regular subgroup of Perm(B)")
    if not normalized_by(N, lambda_perms(restrict(G, B))):
        raise NotNormalized("N is not normalised by lambda_o(B)")
    ps = psi(X, A)
    t = G.table
    decomp = {}
    for i, a in enumerate(A):
        for j, x in enumerate(B):
            decomp[t[a][x]] = (i, j)
    nu = []
    for mu in M:
        pm = ps.forward(mu)
        for eta in N:
            nu.append(tuple(
                t[A[pm[decomp[g][0]]]][B[eta[decomp[g][1]]]] for g in range(G.n)
            ))
    S = perm_group(nu, G.n)
    assert len(S) == len(M) * len(N), "nu is not injective"
    assert is_regular(S), "induced subgroup is not regular"
    assert normalized_by(S, lambda_perms(G)), "induced subgroup not normalised by lambda_o(G)"
    return S


def _phi_images(phi) -> tuple:
    return tuple(tuple(p) for p in (phi.image if isinstance(phi, GroupHom) else phi))


def check_prop_induced_X_to_A(M, X: CosetSpace, A, phi=None) -> bool:
    """Whether 'M normalised by lambda_X(G)' agrees with
    'psi(M) normalised by lambda_o(A) and stable under conjugation by every phi_b'."""
    G = X.G
    A, B = _complement_pair(G, A, X.B)
    phi = _phi_images(phi if phi is not None else conjugation_phi(G, A, B))
    lhs = normalized_by(M, X.lambda_perms)
    psiM = psi(X, A).image(M)
    rhs = normalized_by(psiM, lambda_perms(restrict(G, A))) and normalized_by(psiM, phi)
    return lhs == rhs


def check_prop_B_acts(A_brace: SkewBrace, phi) -> bool:
    """Whether 'phi_b rho_.(A) phi_b^-1 = rho_.(A)' agrees with 'phi_b in Aut(A, .)'."""
    phi = _phi_images(phi)
    lhs = normalized_by(rho_perms(A_brace.dot), phi)
    rhs = all(is_automorphism(A_brace.dot, p) for p in phi)
    return lhs == rhs


def induced_equals_sdp(A_brace: SkewBrace, B_brace: SkewBrace, phi, X: CosetSpace | None = None) -> bool:
    """Compare the brace of nu(M x N) with A x|^phi_id B, M = psi^-1(rho_.(A)), N = rho_.(B)."""
    phi = action_hom(A_brace.circ, B_brace.circ, _phi_images(phi))
    G = semidirect_product_group(A_brace.circ, B_brace.circ, phi)
    nb = B_brace.n
    A = tuple(a * nb for a in range(A_brace.n))
    B = tuple(range(nb))
    if X is None:
        X = coset_space(G, B)
    ps = psi(X, A)
    M = ps.preimage(rho_perms(A_brace.dot))
    N = rho_perms(B_brace.dot)
    induced = regular_to_brace(induce(M, N, X, A), G)
    sdp = make_sdp_brace(make_spec(A_brace, B_brace, phi, trivial_hom(B_brace.dot, A_brace.n)))
    return induced.dot.table == sdp.dot.table and induced.circ.table == sdp.circ.table
