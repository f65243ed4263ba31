"""Semidirect products of an ideal A and a left ideal B.

On the Cartesian product A x B (element (a, b) stored as a*|B| + b):

    (a, b) o (a', b') = (a o phi_b(a'), b o b')
    (a, b) . (a', b') = (a . theta_b(a'), b . b')

with phi : (B, o) -> Aut(A, o) and theta : (B, .) -> Aut(A, .).  The product
is a skew brace exactly when every phi_b also respects the dot of A and

    gamma_a theta_b = theta_b gamma_a                     (a in A, b in B)
    phi_b theta_b' = theta_{b gamma_b(b') b^-1} phi_b     (b, b' in B)

``external_sdp`` never checks the brace axiom itself, so the equivalence of
the two sides can be tested independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .brace import SkewBrace, classify_subset, make_brace, restrict_brace
from .errors import (
    BadComplementPair,
    GroupTableError,
    NotAdmissible,
    NotAHomomorphism,
    NotAnAction,
    NotASubgroup,
    NotInternalSdp,
    PhiNotAnAction,
    SpecInvalid,
)
from .groups import (
    FiniteGroup,
    GroupHom,
    action_hom,
    automorphisms,
    homomorphisms,
    is_automorphism,
    is_normal,
    is_subgroup,
    make_group,
    restrict,
)
from .perms import compose, perm_power


@dataclass(frozen=True)
class SdpSpec:
    A: SkewBrace
    B: SkewBrace
    phi: GroupHom  # (B, o) -> Aut(A, o)
    theta: GroupHom  # (B, .) -> Aut(A, .)

    @property
    def order(self) -> int:
        return self.A.n * self.B.n


def make_spec(A: SkewBrace, B: SkewBrace, phi, theta) -> SdpSpec:
    """Validate phi and theta (GroupHoms or per-element image lists)."""
    phi_images = phi.image if isinstance(phi, GroupHom) else phi
    theta_images = theta.image if isinstance(theta, GroupHom) else theta
    try:
        phi = action_hom(A.circ, B.circ, phi_images)
    except NotAnAction as exc:
        raise SpecInvalid(f"phi: {exc}") from None
    try:
        theta = action_hom(A.dot, B.dot, theta_images)
    except NotAnAction as exc:
        raise SpecInvalid(f"theta: {exc}") from None
    return SdpSpec(A, B, phi, theta)


def external_sdp(spec: SdpSpec) -> tuple:
    """(dot, circ) tables of A x B; both are validated as groups, not as a brace."""
    A, B = spec.A, spec.B
    nb = B.n
    n = A.n * nb
    phi, theta = spec.phi.image, spec.theta.image
    ad, ac, bd, bc = A.dot.table, A.circ.table, B.dot.table, B.circ.table
    dot, circ = [], []
    for x in range(n):
        a, b = divmod(x, nb)
        ph, th = phi[b], theta[b]
        drow, crow = [], []
        for y in range(n):
            a2, b2 = divmod(y, nb)
            drow.append(ad[a][th[a2]] * nb + bd[b][b2])
            crow.append(ac[a][ph[a2]] * nb + bc[b][b2])
        dot.append(tuple(drow))
        circ.append(tuple(crow))
    try:
        make_group(dot)
        make_group(circ)
    except GroupTableError as exc:
        raise SpecInvalid(str(exc)) from None
    return tuple(dot), tuple(circ)


@dataclass(frozen=True)
class AdmissibilityReport:
    ok: bool
    condition: str | None = None
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "admissible"
        return f"not admissible: {self.condition} fails at {self.witness}"


ACTS = "phi_b respects the dot of A"
COMMUTES = "gamma_a theta_b = theta_b gamma_a"
TWISTED = "phi_b theta_b' = theta_(b gamma_b(b') b^-1) phi_b"


def is_admissible(spec: SdpSpec) -> AdmissibilityReport:
    """Check the three admissibility conditions; report the first failing witness."""
    A, B = spec.A, spec.B
    phi, theta = spec.phi.image, spec.theta.image
    ad = A.dot.table
    for b in range(B.n):
        p = phi[b]
        for a in range(A.n):
            for a2 in range(A.n):
                if p[ad[a][a2]] != ad[p[a]][p[a2]]:
                    return AdmissibilityReport(False, ACTS, (b, a, a2))
    ga = A.gamma
    for a in range(A.n):
        for b in range(B.n):
            if compose(ga[a], theta[b]) != compose(theta[b], ga[a]):
                return AdmissibilityReport(False, COMMUTES, (a, b))
    bd, bgam, binv = B.dot.table, B.gamma, B.dot.inverses
    for b in range(B.n):
        for b2 in range(B.n):
            k = bd[bd[b][bgam[b][b2]]][binv[b]]
            if compose(phi[b], theta[b2]) != compose(theta[k], phi[b]):
                return AdmissibilityReport(False, TWISTED, (b, b2))
    return AdmissibilityReport(True)


def make_sdp_brace(spec: SdpSpec) -> SkewBrace:
    report = is_admissible(spec)
    if not report:
        raise NotAdmissible(report)
    dot, circ = external_sdp(spec)
    return make_brace(dot, circ)


def _acts_on_brace(A: SkewBrace, B: SkewBrace, phi) -> GroupHom:
    images = phi.image if isinstance(phi, GroupHom) else phi
    try:
        hom = action_hom(A.circ, B.circ, images)
    except NotAnAction as exc:
        raise PhiNotAnAction(str(exc)) from None
    for b, p in enumerate(hom.image):
        if not is_automorphism(A.dot, p):
            raise PhiNotAnAction(f"phi_{b} is not an automorphism of (A, .)")
    return hom


def admissible_thetas(A: SkewBrace, B: SkewBrace, phi) -> list:
    phi = _acts_on_brace(A, B, phi)
    out = []
    for theta in homomorphisms(B.dot, automorphisms(A.dot)):
        if is_admissible(SdpSpec(A, B, phi, theta)):
            out.append(theta)
    return out


def theta_power(theta: GroupHom, i: int) -> GroupHom:
    """theta^(i)_b = (theta_b)^i.  Only a homomorphism when the image commutes."""
    if i < 1:
        raise ValueError("power must be positive")
    image = tuple(perm_power(p, i) for p in theta.image)
    src = theta.src
    for x in range(src.n):
        for y in range(src.n):
            if image[src.table[x][y]] != compose(image[x], image[y]):
                raise NotAHomomorphism(f"pointwise power {i} is not a homomorphism")
    return GroupHom(src, theta.dst, image)


def _conjugation(G: FiniteGroup, A: Sequence[int], B: Sequence[int]) -> tuple:
    t, inv = G.table, G.inverses
    pos = {a: i for i, a in enumerate(A)}
    return tuple(tuple(pos[t[t[b][a]][inv[b]]] for a in A) for b in B)


def _check_complement(G: FiniteGroup, A, B) -> tuple:
    A, B = sorted(set(A)), sorted(set(B))
    try:
        if not is_normal(G, A):
            raise BadComplementPair(f"{A} is not normal")
    except NotASubgroup as exc:
        raise BadComplementPair(str(exc)) from None
    if not is_subgroup(G, B):
        raise BadComplementPair(f"{B} is not a subgroup")
    if set(A) & set(B) != {0} or len(A) * len(B) != G.n:
        raise BadComplementPair("subsets are not complements")
    return A, B


def conjugation_phi(G, A, B) -> GroupHom:
    """phi_b(a) = b o a o b^-1 on local indices of A, as a hom from (B, o)."""
    circ = G.circ if isinstance(G, SkewBrace) else G
    A, B = _check_complement(circ, A, B)
    return action_hom(restrict(circ, A), restrict(circ, B), _conjugation(circ, A, B))


def _product_set(t, A, B) -> set:
    return {t[a][b] for a in A for b in B}


def is_internal_sdp(b: SkewBrace, A, B) -> bool:
    A, B = set(A), set(B)
    if not classify_subset(b, A).is_ideal or not classify_subset(b, B).is_left_ideal:
        return False
    everything = set(range(b.n))
    return (
        A & B == {0}
        and _product_set(b.circ.table, A, B) == everything
        and _product_set(b.dot.table, A, B) == everything
    )


@dataclass(frozen=True)
class SdpDecomposition:
    A_subset: tuple
    B_subset: tuple
    A_brace: SkewBrace
    B_brace: SkewBrace
    phi: GroupHom
    theta: GroupHom
    delta: tuple  # delta[a o b] = code(a, b) in local indices

    @property
    def spec(self) -> SdpSpec:
        return SdpSpec(self.A_brace, self.B_brace, self.phi, self.theta)


def internal_to_external(b: SkewBrace, A, B) -> SdpDecomposition:
    if not is_internal_sdp(b, A, B):
        raise NotInternalSdp("subsets do not form an ideal / left ideal semidirect decomposition")
    A, B = sorted(set(A)), sorted(set(B))
    gam = b.gamma
    for a in A:
        for x in B:
            assert gam[a][x] == x, f"gamma_{a} moves {x}"
    A_brace = restrict_brace(b, A)
    B_brace = restrict_brace(b, B)
    phi = action_hom(A_brace.circ, B_brace.circ, _conjugation(b.circ, A, B))
    theta = action_hom(A_brace.dot, B_brace.dot, _conjugation(b.dot, A, B))
    nb = len(B)
    c = b.circ.table
    delta = [0] * b.n
    for i, a in enumerate(A):
        for j, x in enumerate(B):
            delta[c[a][x]] = i * nb + j
    delta = tuple(delta)
    dec = SdpDecomposition(tuple(A), tuple(B), A_brace, B_brace, phi, theta, delta)
    dot, circ = external_sdp(dec.spec)
    d = b.dot.table
    for x in range(b.n):
        for y in range(b.n):
            assert circ[delta[x]][delta[y]] == delta[c[x][y]], "delta does not respect o"
            assert dot[delta[x]][delta[y]] == delta[d[x][y]], "delta does not respect ."
    return dec
