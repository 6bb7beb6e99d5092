import pytest
from hypothesis import given
from hypothesis import strategies as st

from poincare_cascade.cascade import Xi, build_cascade, chain, check_interval, precedes, xi_entries
from poincare_cascade.errors import InvalidArgs
from poincare_cascade.rootsys import all_types, build, build_type
from poincare_cascade.stab import j_of_weight

import structure


def betas(family, rank):
    return [n.beta for n in build_cascade(build_type(family, rank))]


def xis(family, rank, only_dominant=True):
    rs = build_type(family, rank)
    return {str(e.xi): sorted(e.supp_star) for e in (Xi(rs) if only_dominant else xi_entries(rs))}


def test_a3():
    casc = build_cascade(build_type("A", 3))
    assert [n.beta for n in casc] == [(1, 1, 1), (0, 1, 0)]
    assert casc[1].predecessor == 0
    assert xis("A", 3) == {"ϖ1 + ϖ3": [], "2ϖ2": [1, 3]}


def test_b3_totally_ordered():
    rs = build_type("B", 3)
    casc = build_cascade(rs)
    # eps_1, eps_2, eps_3
    assert [n.beta for n in casc] == [(1, 1, 1), (0, 1, 1), (0, 0, 1)]
    assert all(precedes(casc, i, j) for i in range(3) for j in range(i, 3))
    assert xis("B", 3) == {"ϖ1": [], "ϖ2": [1], "2ϖ3": [1, 2]}


def test_g2_single_member():
    assert betas("G", 2) == [(2, 1)]
    assert xis("G", 2) == {"ϖ1": []}


def test_c4():
    # eps1+eps2, eps3+eps4, eps1-eps2, eps3-eps4
    assert set(betas("C", 4)) == {(1, 2, 2, 1), (0, 0, 1, 1), (1, 0, 0, 0), (0, 0, 1, 0)}


def test_d4_xi():
    assert set(xis("D", 4)) == {"ϖ2", "2ϖ4", "2ϖ1", "2ϖ3"}


def test_e7_entries():
    all_xi = xis("E", 7, only_dominant=False)
    assert all_xi["ϖ6"] == [1, 2, 3, 4, 5]
    assert all_xi["2ϖ7"] == [1, 2, 3, 4, 5, 6]


def test_f4_entries():
    assert xis("F", 4) == {"ϖ4": [], "ϖ1": [2, 3, 4]}


def test_chain_runs_from_the_top():
    casc = build_cascade(build_type("E", 7))
    for n in casc:
        c = chain(casc, n.index)
        assert c[0].index == 0 and c[-1] is n and len(c) == n.depth


@pytest.mark.parametrize(
    "family,rank,I,expected",
    [("A", 3, set(), [(1, 1, 1)]), ("A", 3, {1, 3}, [(1, 1, 1), (0, 1, 0)]), ("D", 4, {1, 2, 3}, [(1, 2, 1, 1), (0, 0, 0, 1)])],
)
def test_interval_examples(family, rank, I, expected):
    rs = build_type(family, rank)
    casc = build_cascade(rs)
    assert check_interval(rs, casc, I)
    b1 = rs.highest_short
    inside = [n.beta for n in casc if all(i in I for i, (x, y) in enumerate(zip(b1, n.beta), 1) if x != y)]
    assert inside == expected


def test_interval_needs_proper_subset():
    rs = build_type("A", 3)
    with pytest.raises(InvalidArgs):
        check_interval(rs, build_cascade(rs), {1, 2, 3})


def test_xi_of_top_member_is_highest_short(rs8):
    top = xi_entries(rs8)[0]
    assert top.xi_root == rs8.highest_short and top.dominant and not top.supp_star
    assert Xi(rs8)[0] is top


@pytest.mark.parametrize(
    "check",
    [
        structure.cascade_orthogonal,
        structure.cascade_members_maximal,
        structure.order_equivalences,
        structure.norm_and_support,
        structure.dominance_criterion,
        structure.connectivity_all_short_roots,
        structure.predecessor_orthogonality,
        structure.first_children_avoid_support,
        structure.dominant_weight_shape,
        structure.minuscule_support_duality,
    ],
    ids=lambda f: f.__name__,
)
def test_cascade_structure(rs8, check):
    assert check(rs8) == []


def test_intervals_all_subsets(rs6):
    assert structure.intervals(rs6) == []


@given(st.sampled_from(all_types(8)), st.data())
def test_dominant_j_equals_supp_star(t, data):
    rs = build(t)
    e = data.draw(st.sampled_from(Xi(rs)))
    assert j_of_weight(rs, e.xi) == e.supp_star
    assert rs.norm(e.xi_root) == 2 * e.node.depth
