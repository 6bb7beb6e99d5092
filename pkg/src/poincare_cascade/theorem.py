"""Verification of the affine-stabiliser factorisation over faces of the alcove.

For a face ``S`` of the affine wall the identity checked is

    P(W_{S ∪ {alpha_0}}) / P(W_S)
        = 1 + sum_{xi in Xi(lam)} t**ell_xi * P(W_S) / P(W_{S ∩ Delta_xi})

with ``Xi(lam)`` the dominant cascade weights whose ``supp*`` lies in ``S``.
Failures are recorded in the report rather than raised, so sweeps always finish.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import networkx as nx

from .cascade import XiEntry, Xi, build_cascade
from .errors import CharacterizationMismatch, InvalidArgs
from .qpoly import IntPoly, exact_div
from .rootsys import RootSystem, build, classify_subdiagram, extended_diagram, support
from .stab import (
    FaceSpec,
    affine_stab_poincare,
    ell,
    half,
    ji_split,
    j_of_weight,
    make_face,
    stab_poincare,
    stabilising_roots,
)
from .weyl import brute_force_poincare, brute_force_poincare_gram


@dataclass(frozen=True)
class Term:
    entry: XiEntry
    ell: int
    quotient: IntPoly


@dataclass(frozen=True)
class VerificationReport:
    rs: RootSystem
    face: FaceSpec
    lhs: IntPoly
    rhs: IntPoly
    terms: tuple[Term, ...]
    passed: bool
    interior_trivial: bool | None = None

    @property
    def xi_lambda(self) -> list[XiEntry]:
        return [t.entry for t in self.terms]

    @property
    def ok(self) -> bool:
        return self.passed and self.interior_trivial is not False


def _norm_filter(rs: RootSystem, lam) -> list[XiEntry]:
    return [e for e in Xi(rs) if rs.norm(e.xi_root) == 2 * rs.inner(e.xi_root, lam)]


def xi_lambda(rs: RootSystem, face: FaceSpec) -> list[XiEntry]:
    """Dominant cascade weights with ``supp* ⊆ S``, cross-checked against ``(xi, xi) = 2 (xi, lam)``."""
    by_support = [e for e in Xi(rs) if e.supp_star <= face.S]
    by_norm = _norm_filter(rs, face.lam)
    if [e.node.index for e in by_support] != [e.node.index for e in by_norm]:
        raise CharacterizationMismatch(
            f"{rs.stype} face {sorted(face.S)}: support filter {[str(e.xi) for e in by_support]} "
            f"!= norm filter {[str(e.xi) for e in by_norm]}"
        )
    return by_support


def interior_trivial(rs: RootSystem, face: FaceSpec) -> bool:
    """Off the affine wall no cascade weight passes the norm filter."""
    return not _norm_filter(rs, half(face))


def verify_identity(rs: RootSystem, face: FaceSpec) -> VerificationReport:
    p_lam = stab_poincare(rs, face.S)
    lhs = exact_div(affine_stab_poincare(rs, face), p_lam)
    rhs = IntPoly((1,))
    terms = []
    for e in xi_lambda(rs, face):
        fixed = face.S & stabilising_roots(rs, e.xi)
        q = exact_div(p_lam, stab_poincare(rs, fixed))
        k = ell(rs, e)
        terms.append(Term(e, k, q))
        rhs = rhs + q.shift(k)
    return VerificationReport(rs, face, lhs, rhs, tuple(terms), lhs == rhs)


def proper_subsets(rs: RootSystem) -> list[frozenset[int]]:
    """All ``S ⊊ Delta`` ordered by their bitmask (bit ``i-1`` for ``alpha_i``)."""
    n = rs.rank
    return [frozenset(i + 1 for i in range(n) if mask >> i & 1) for mask in range(2**n - 1)]


def verify_all(rs: RootSystem) -> list[VerificationReport]:
    out = []
    for S in proper_subsets(rs):
        face = make_face(rs, S)
        rep = verify_identity(rs, face)
        out.append(VerificationReport(rep.rs, face, rep.lhs, rep.rhs, rep.terms, rep.passed, interior_trivial(rs, face)))
    return out


def brute_force_lhs(rs: RootSystem, face: FaceSpec) -> IntPoly:
    """Left side from group enumeration only.

    The affine stabiliser is realised as the reflection group on the simple
    system ``S ∪ {alpha_0}`` read off the extended Gram matrix.
    """
    ed = extended_diagram(rs)
    verts = sorted(face.S) + [0]
    num = brute_force_poincare_gram(ed.sub_gram(verts))
    den = brute_force_poincare(rs, face.S)
    return exact_div(num, den)


def inclusions_check(rs: RootSystem, face: FaceSpec) -> bool:
    """Every ``xi in Xi(lam)`` has ``J(xi) ⊆ J(lam)`` and ``I(lam) ⊆ Delta_xi``."""
    split = ji_split(rs, face)
    for e in xi_lambda(rs, face):
        if not j_of_weight(rs, e.xi) <= split.J:
            return False
        if not split.I <= stabilising_roots(rs, e.xi):
            return False
    return True


# ---------------------------------------------------------------------------
# transfer of cascade data between root systems sharing a piece of diagram


def _diagram_graph(rs: RootSystem, verts: Iterable[int]) -> nx.DiGraph:
    ed = extended_diagram(rs)
    g = nx.DiGraph()
    for v in verts:
        g.add_node(v, norm=ed.gram[v][v], zero=(v == 0))
    for a in g.nodes:
        for b in g.nodes:
            if ed.linked(a, b):
                g.add_edge(a, b, cartan=ed.cartan(a, b))
    return g


def find_isomorphism(rs1: RootSystem, verts1: Iterable[int], rs2: RootSystem, verts2: Iterable[int]) -> dict[int, int] | None:
    """Diagram isomorphism ``verts1 -> verts2`` fixing ``alpha_0``, or ``None``."""
    g1, g2 = _diagram_graph(rs1, verts1), _diagram_graph(rs2, verts2)
    gm = nx.algorithms.isomorphism.DiGraphMatcher(
        g1, g2,
        node_match=lambda x, y: x == y,
        edge_match=lambda x, y: x["cartan"] == y["cartan"],
    )
    return next(gm.isomorphisms_iter(), None)


@dataclass(frozen=True)
class MinusculeModel:
    rs: RootSystem
    alpha: int  # the vertex alpha' of the model, a minuscule node
    f: dict[int, int]  # J ∪ {0} in the original diagram -> (Delta' \ {alpha'}) ∪ {0}


def minuscule_model(rs: RootSystem, J: Iterable[int]) -> MinusculeModel:
    """Root system ``Phi'`` with ``(Delta', Delta' \\ {alpha'}) ≅ (J ∪ {alpha_0}, J)``."""
    J = frozenset(J)
    types = classify_subdiagram(extended_diagram(rs), J | {0})
    if len(types) != 1:
        raise InvalidArgs(f"J ∪ {{alpha_0}} is not connected: {sorted(J)}")
    model = build(types[0])
    for a in model.simple:
        f = find_isomorphism(rs, J | {0}, model, (frozenset(model.simple) - {a}) | {0})
        if f is not None:
            return MinusculeModel(model, a, f)
    raise AssertionError(f"no minuscule model found for {rs.stype}, J={sorted(J)}")


def _check_bijection(rs1: RootSystem, rs2: RootSystem, f: Mapping[int, int]) -> tuple[frozenset[int], frozenset[int]]:
    if f.get(0) != 0:
        raise InvalidArgs("f must send alpha_0 to alpha_0'")
    if len(set(f.values())) != len(f):
        raise InvalidArgs("f is not injective")
    I1 = frozenset(f) - {0}
    I2 = frozenset(f.values()) - {0}
    if not I1 < frozenset(rs1.simple) or not I2 < frozenset(rs2.simple):
        raise InvalidArgs("I must be a proper subset of the simple roots on both sides")
    ed1, ed2 = extended_diagram(rs1), extended_diagram(rs2)
    for a in f:
        for b in f:
            if ed1.gram[a][b] != ed2.gram[f[a]][f[b]]:
                raise InvalidArgs(f"f does not preserve the diagram at ({a}, {b})")
    if not ed1.is_connected(I1 | {0}):
        raise InvalidArgs("I ∪ {alpha_0} must be connected")
    return I1, I2


def tau_transfer_check(rs1: RootSystem, rs2: RootSystem, f: Mapping[int, int]) -> bool:
    """Check the map ``tau(beta) = beta_1' - f(beta_1 - beta)`` on short roots near ``beta_1``.

    ``f`` maps ``I1 ∪ {0}`` onto ``I2 ∪ {0}`` as an isomorphism of extended
    diagrams. Verified: ``tau`` is a bijection of the short roots ``beta``
    with ``supp(beta_1 - beta) ⊆ I`` on both sides, it preserves inner
    products, and it carries the cascade members among them onto those of
    the other side while respecting predecessors.
    """
    I1, I2 = _check_bijection(rs1, rs2, f)
    b1, b2 = rs1.highest_short, rs2.highest_short

    def psi(rs: RootSystem, top: tuple, I: frozenset) -> set:
        return {
            r for r in rs.roots
            if rs.is_short(r) and support(tuple(x - y for x, y in zip(top, r))) <= I
        }

    def tau(beta: tuple) -> tuple:
        img = list(b2)
        for i, c in enumerate(beta, start=1):
            diff = b1[i - 1] - c
            if diff:
                img[f[i] - 1] -= diff
        return tuple(img)

    psi1, psi2 = psi(rs1, b1, I1), psi(rs2, b2, I2)
    image = {b: tau(b) for b in psi1}
    if len(set(image.values())) != len(psi1) or set(image.values()) != psi2:
        return False
    for b, g in image.items():
        if not rs2.is_root(g) or not rs2.is_short(g):
            return False
    # pairings with the shared simple system I ∪ {alpha_0}
    def simple_vec(rs: RootSystem, v: int) -> tuple:
        if v == 0:
            return tuple(-x for x in rs.highest_short)
        return tuple(int(k == v) for k in rs.simple)

    for b, g in image.items():
        for v in f:
            if rs1.inner(b, simple_vec(rs1, v)) != rs2.inner(g, simple_vec(rs2, f[v])):
                return False
    items = list(image.items())
    for b, g in items:
        for b_, g_ in items:
            if rs1.inner(b, b_) != rs2.inner(g, g_):
                return False
    casc1, casc2 = build_cascade(rs1), build_cascade(rs2)
    k1 = {n.beta: n for n in casc1 if n.beta in psi1}
    k2 = {n.beta: n for n in casc2 if n.beta in psi2}
    if {image[b] for b in k1} != set(k2):
        return False
    for b, node in k1.items():
        pred1 = node.predecessor
        pred2 = k2[image[b]].predecessor
        if (pred1 is None) != (pred2 is None):
            return False
        if pred1 is not None and image[casc1[pred1].beta] != casc2[pred2].beta:
            return False
    return True


def tau_transfer_for_face(rs: RootSystem, face: FaceSpec) -> bool:
    split = ji_split(rs, face)
    model = minuscule_model(rs, split.J)
    return tau_transfer_check(rs, model.rs, model.f)
