"""Stabilisers of points in the fundamental alcove and the exponents ``ell_xi``."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .cascade import XiEntry
from .errors import InvalidArgs
from .qpoly import IntPoly
from .rootsys import RootSystem, Weight, classify_simple, classify_subdiagram, extended_diagram, pairing
from .weyl import n_positive_roots, poincare


@dataclass(frozen=True)
class FaceSpec:
    """A face of the affine wall, given by the simple roots ``S`` that fix its points."""

    S: frozenset[int]
    lam: Weight


@dataclass(frozen=True)
class JISplit:
    J: frozenset[int]
    I: frozenset[int]


def make_face(rs: RootSystem, S: Iterable[int]) -> FaceSpec:
    """Witness ``lam`` on the affine wall whose stabilising simple roots are exactly ``S``."""
    S = frozenset(S)
    if not S <= frozenset(rs.simple):
        raise InvalidArgs(f"{sorted(S)} is not a subset of the simple roots of {rs.stype}")
    if S == frozenset(rs.simple):
        raise InvalidArgs("S = Delta forces lambda = 0, which is off the affine wall")
    raw = Weight(tuple(0 if i in S else 1 for i in rs.simple))
    denom = pairing(rs, raw, rs.highest_short)
    return FaceSpec(S, raw.scaled(1 / denom))


def stabilising_roots(rs: RootSystem, lam: Weight) -> frozenset[int]:
    """``Delta_lam``: simple roots with ``(lam, alpha^vee) = 0``."""
    return frozenset(i for i, c in zip(rs.simple, lam.coords) if c == 0)


def in_alcove(rs: RootSystem, lam: Weight) -> bool:
    return lam.is_dominant() and pairing(rs, lam, rs.highest_short) <= 1


def on_affine_wall(rs: RootSystem, lam: Weight) -> bool:
    return pairing(rs, lam, rs.highest_short) == 1


def j_part(rs: RootSystem, delta: Iterable[int]) -> frozenset[int]:
    """Simple roots of the component of ``delta ∪ {alpha_0}`` that contains ``alpha_0``."""
    comp = extended_diagram(rs).component_of(delta, 0)
    return frozenset(comp - {0})


def ji_split(rs: RootSystem, face: FaceSpec) -> JISplit:
    J = j_part(rs, face.S)
    return JISplit(J, face.S - J)


def j_of_weight(rs: RootSystem, xi: Weight) -> frozenset[int]:
    """``J(xi)`` computed straight from the stabiliser of ``xi``."""
    return j_part(rs, stabilising_roots(rs, xi))


def ell_of_set(rs: RootSystem, J: Iterable[int]) -> int:
    J = frozenset(J)
    ed = extended_diagram(rs)
    return n_positive_roots(classify_subdiagram(ed, J | {0})) - n_positive_roots(classify_subdiagram(ed, J))


def ell(rs: RootSystem, entry: XiEntry) -> int:
    """Degree of ``P(W_{J ∪ {alpha_0}}) / P(W_J)`` with ``J = supp* xi``."""
    if not entry.dominant or not any(entry.xi.coords):
        raise InvalidArgs("ell needs a nonzero dominant weight")
    return ell_of_set(rs, entry.supp_star)


def affine_stab_poincare(rs: RootSystem, face: FaceSpec) -> IntPoly:
    return poincare(classify_subdiagram(extended_diagram(rs), face.S | {0}))


def stab_poincare(rs: RootSystem, subset: Iterable[int]) -> IntPoly:
    return poincare(classify_simple(rs, subset))


def half(face: FaceSpec) -> Weight:
    """The face witness pulled halfway towards 0, strictly inside the alcove."""
    return face.lam.scaled(Fraction(1, 2))
