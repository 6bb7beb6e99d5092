from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from poincare_cascade.cascade import Xi, xi_entries
from poincare_cascade.errors import InvalidArgs
from poincare_cascade.qpoly import IntPoly, exact_div
from poincare_cascade.rootsys import SimpleType, all_types, build, build_type, classify_subdiagram, extended_diagram, support
from poincare_cascade.stab import (
    affine_stab_poincare,
    ell,
    ell_of_set,
    half,
    in_alcove,
    j_of_weight,
    ji_split,
    make_face,
    on_affine_wall,
    stab_poincare,
    stabilising_roots,
)
from poincare_cascade.weyl import n_positive_roots, poincare

import structure


def entry_with_xi(rs, text):
    return next(e for e in Xi(rs) if str(e.xi) == text)


def test_make_face_examples():
    a2 = build_type("A", 2)
    assert make_face(a2, {2}).lam.coords == (1, 0)
    f4 = build_type("F", 4)
    assert make_face(f4, {2, 3, 4}).lam.coords == (Fraction(1, 2), 0, 0, 0)
    for t in all_types(8):
        rs = build(t)
        lam = make_face(rs, set()).lam
        assert all(c > 0 for c in lam.coords) and on_affine_wall(rs, lam)


def test_make_face_rejects():
    rs = build_type("A", 2)
    with pytest.raises(InvalidArgs):
        make_face(rs, {1, 2})
    with pytest.raises(InvalidArgs):
        make_face(rs, {3})


def test_face_invariants(rs8):
    for face in structure.faces(rs8):
        assert in_alcove(rs8, face.lam) and on_affine_wall(rs8, face.lam)
        assert stabilising_roots(rs8, face.lam) == face.S


def test_ji_split_invariants(rs8):
    ed = extended_diagram(rs8)
    for face in structure.faces(rs8):
        split = ji_split(rs8, face)
        assert split.J | split.I == face.S and not split.J & split.I
        assert ed.is_connected(split.J | {0})
        assert not any(ed.linked(a, b) for a in split.I for b in split.J | {0})


def test_ji_split_examples():
    for t in all_types(8):
        rs = build(t)
        for a in rs.minuscule():
            split = ji_split(rs, make_face(rs, set(rs.simple) - {a}))
            assert split.J == frozenset(rs.simple) - {a} and not split.I
        top = stabilising_roots(rs, rs.to_weight(rs.highest_short))
        split = ji_split(rs, make_face(rs, top))
        assert not split.J and split.I == top
    f4 = build_type("F", 4)
    split = ji_split(f4, make_face(f4, {2, 3, 4}))
    assert split.J == {2, 3, 4} and not split.I


def test_ell_examples():
    for t in all_types(8):
        rs = build(t)
        assert ell(rs, Xi(rs)[0]) == 1
    for n in range(3, 9):
        rs = build_type("B", n)
        for i in range(2, n):
            assert ell(rs, entry_with_xi(rs, f"ϖ{i}")) == i * (i + 1) // 2
    assert ell(build_type("F", 4), entry_with_xi(build_type("F", 4), "ϖ1")) == 7
    assert ell(build_type("E", 7), entry_with_xi(build_type("E", 7), "2ϖ7")) == 27


def test_ell_rejects_non_dominant():
    rs = build_type("F", 4)
    bad = next(e for e in xi_entries(rs) if not e.dominant)
    with pytest.raises(InvalidArgs):
        ell(rs, bad)


def test_ell_is_quotient_degree(rs8):
    ed = extended_diagram(rs8)
    for e in Xi(rs8):
        J = j_of_weight(rs8, e.xi)
        q = exact_div(poincare(classify_subdiagram(ed, J | {0})), stab_poincare(rs8, J))
        assert q.degree == ell(rs8, e) == ell_of_set(rs8, J)


def test_affine_stab_examples():
    a2 = build_type("A", 2)
    assert affine_stab_poincare(a2, make_face(a2, {2})) == poincare([SimpleType("A", 2)])
    f4 = build_type("F", 4)
    assert affine_stab_poincare(f4, make_face(f4, {2, 3, 4})) == poincare([SimpleType("C", 4)])
    for t in all_types(8):
        rs = build(t)
        assert affine_stab_poincare(rs, make_face(rs, set())) == IntPoly((1, 1))


def test_minuscule_faces_are_isomorphic_to_w(rs8):
    for a in rs8.minuscule():
        face = make_face(rs8, set(rs8.simple) - {a})
        assert affine_stab_poincare(rs8, face) == poincare([rs8.stype])


def test_half_is_interior(rs8):
    for face in structure.faces(rs8):
        mu = half(face)
        assert in_alcove(rs8, mu) and not on_affine_wall(rs8, mu)


def test_j_reduction(rs8):
    assert structure.j_reduction(rs8) == []


def test_alpha0_coefficient(rs8):
    assert structure.alpha0_minuscule(rs8) == []


def test_termwise_coefficients(rs8):
    assert structure.termwise_coefficients(rs8) == []


@given(st.sampled_from(all_types(8)), st.data())
def test_positive_root_counts_split(t, data):
    rs = build(t)
    S = data.draw(st.sets(st.sampled_from(rs.simple), max_size=rs.rank - 1))
    face = make_face(rs, S)
    ed = extended_diagram(rs)
    lhs_deg = n_positive_roots(classify_subdiagram(ed, face.S | {0})) - n_positive_roots(classify_subdiagram(ed, face.S))
    J = ji_split(rs, face).J
    assert lhs_deg == ell_of_set(rs, J)
    assert support(rs.highest_short) == frozenset(rs.simple)
