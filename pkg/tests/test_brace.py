from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pool import all_small_braces
from skewbrace.brace import (
    almost_trivial_brace,
    brace_isomorphic,
    classify_subset,
    gamma,
    ideals,
    left_ideals,
    make_brace,
    op_group,
    opposite,
    quotient_brace,
    restrict_brace,
    transport_brace,
    trivial_brace,
)
from skewbrace.enumeration import pq_catalog
from skewbrace.errors import BraceAxiomFails, CircNotGroup, DotNotGroup, NotAnIdeal
from skewbrace.groups import cyclic_group, is_normal, relabel, subgroups_of_order
from skewbrace.perms import compose
from skewbrace.stock import abelian_group, dihedral_group, example_B_brace

S3 = dihedral_group(3)


def first_failure_by_scan(dot, circ):
    n = len(dot)
    dinv = [next(y for y in range(n) if dot[x][y] == 0) for x in range(n)]
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if circ[x][dot[y][z]] != dot[dot[circ[x][y]][dinv[x]]][circ[x][z]]:
                    return (x, y, z)
    return None


def test_trivial_and_almost_trivial():
    for G in [cyclic_group(5), S3, dihedral_group(4)]:
        assert make_brace(G.table, G.table).is_trivial()
        assert all(row == tuple(range(G.n)) for row in gamma(trivial_brace(G)))
    assert trivial_brace(cyclic_group(2)).dot.table == almost_trivial_brace(cyclic_group(2)).dot.table
    make_brace(op_group(S3).table, S3.table)


def test_c4_dots_over_klein_circle_are_all_braces():
    # every C4 table on the Klein four-group's elements gives a brace
    V = abelian_group([2, 2])
    for f in [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 2, 1)]:
        dot = relabel(cyclic_group(4), f).table
        assert first_failure_by_scan(dot, V.table) is None
        make_brace(dot, V.table)


def test_axiom_failure_names_first_triple():
    dot, circ = relabel(cyclic_group(4), (0, 2, 1, 3)).table, cyclic_group(4).table
    with pytest.raises(BraceAxiomFails) as exc:
        make_brace(dot, circ)
    assert exc.value.triple == first_failure_by_scan(dot, circ)


def test_invalid_tables():
    with pytest.raises(DotNotGroup):
        make_brace([[0, 1], [1, 1]], cyclic_group(2).table)
    with pytest.raises(CircNotGroup):
        make_brace(cyclic_group(2).table, [[0, 1], [0, 1]])
    with pytest.raises(DotNotGroup):
        make_brace(cyclic_group(2).table, cyclic_group(3).table)


def test_gamma_of_worked_b_brace():
    g = gamma(example_B_brace())
    assert all(g[i][j] == ((2 * i + 1) * j) % 4 for i in range(4) for j in range(4))


def test_gamma_of_almost_trivial_s3_is_conjugation():
    b = almost_trivial_brace(S3)
    t, inv = S3.table, S3.inverses
    assert all(gamma(b)[g][h] == t[t[g][h]][inv[g]] for g in range(6) for h in range(6))


def test_gamma_properties_on_all_small_braces():
    for b in all_small_braces():
        gamma(b)  # asserts the three invariants


def test_opposite_basics():
    assert opposite(trivial_brace(S3)).dot.table == almost_trivial_brace(S3).dot.table
    for b in all_small_braces():
        o = opposite(b)
        assert opposite(o).dot.table == b.dot.table
        assert (o.dot.table == b.dot.table) == b.dot.is_abelian
        d, dinv = b.dot.table, b.dot.inverses
        for g in range(b.n):
            conj = tuple(d[d[g][h]][dinv[g]] for h in range(b.n))
            assert o.gamma[g] == compose(conj, b.gamma[g])


def test_opposite_of_metacyclic_pq_brace_differs():
    for e in pq_catalog(7, 3, "metacyclic"):
        if not e.brace.dot.is_abelian:
            assert opposite(e.brace).dot.table != e.dot


def test_classify_subset_examples():
    b = almost_trivial_brace(S3)
    for H in [(0,), tuple(range(6))]:
        assert classify_subset(b, H).is_ideal
    for H in subgroups_of_order(S3, 2):
        assert not classify_subset(b, H).is_left_ideal
    assert [c.subset for c in left_ideals(b)] == [(0,), (0, 2, 4), tuple(range(6))]
    junk = classify_subset(b, (0, 1, 2))
    assert junk.flags() == dict.fromkeys(junk.flags(), False)


def test_trivial_brace_ideals_are_normal_subgroups():
    for G in [S3, dihedral_group(4), abelian_group([2, 2])]:
        b = trivial_brace(G)
        assert len(left_ideals(b)) == len(G.subgroups)
        assert [c.subset for c in ideals(b)] == [H for H in G.subgroups if is_normal(G, H)]


def test_flags_are_nested():
    for b in all_small_braces():
        for c in left_ideals(b):
            assert c.is_subgroup_circ and c.is_subgroup_dot
            assert not c.is_ideal or c.is_strong_left_ideal


def test_opposite_left_ideal_criterion_both_directions():
    for b in all_small_braces():
        o = opposite(b)
        d, dinv = b.dot.table, b.dot.inverses
        for H in b.circ.subgroups:
            Hs = set(H)
            crit = all(
                {b.gamma[g][h] for h in H} == {d[d[dinv[g]][h]][g] for h in Hs} for g in range(b.n)
            )
            assert classify_subset(o, H).is_left_ideal == crit


def test_quotients():
    b = almost_trivial_brace(S3)
    q = quotient_brace(b, range(6))
    assert q.n == 1
    q = quotient_brace(b, [0])
    assert brace_isomorphic(q, b) is not None
    with pytest.raises(NotAnIdeal):
        quotient_brace(b, subgroups_of_order(S3, 2)[0])
    for which in ("cyclic", "metacyclic"):
        for e in pq_catalog(7, 3, which):
            (A,) = subgroups_of_order(e.brace.circ, 7)
            q = quotient_brace(e.brace, A)
            assert q.n == 3 and q.is_trivial()


def test_brace_isomorphic_examples():
    b = almost_trivial_brace(S3)
    assert brace_isomorphic(b, b) == tuple(range(6))
    assert brace_isomorphic(trivial_brace(cyclic_group(4)), trivial_brace(abelian_group([2, 2]))) is None
    assert brace_isomorphic(trivial_brace(S3), b) is None


def test_restrict_brace_local_indices():
    b = almost_trivial_brace(S3)
    r = restrict_brace(b, [4, 0, 2])
    assert r.n == 3 and r.circ.table == cyclic_group(3).table


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_transport_gives_isomorphic_brace(data):
    braces = all_small_braces()
    b = braces[data.draw(st.integers(0, len(braces) - 1))]
    rest = data.draw(st.permutations(list(range(1, b.n))))
    f = [0] + list(rest)
    c = transport_brace(b, f)
    w = brace_isomorphic(b, c)
    assert w is not None
    assert brace_isomorphic(c, b) is not None
