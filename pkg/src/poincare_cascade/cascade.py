"""Short-root Kostant cascade, the weights ``xi_beta`` and their supports.

The cascade starts at the highest short root ``beta_1``. From the support of
each member we delete the simple roots it pairs positively with, split what
is left into connected pieces, and take the highest short root of each piece.
Pieces made only of long simple roots contain no short root and are dropped.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import InvalidArgs
from .rootsys import Root, RootSystem, Weight, extended_diagram, support


@dataclass(frozen=True)
class CascadeNode:
    index: int
    beta: Root
    delta: frozenset[int]  # supp beta
    predecessor: int | None
    depth: int  # number of cascade members below or equal to this one


@dataclass(frozen=True)
class XiEntry:
    node: CascadeNode
    xi_root: Root
    xi: Weight
    supp_star: frozenset[int]
    dominant: bool


def highest_short_in(rs: RootSystem, delta: Iterable[int]) -> Root | None:
    """The highest short root of ``Phi ∩ Z delta`` for a connected set ``delta``."""
    delta = frozenset(delta)
    found = [
        r for r in rs.positive_roots
        if support(r) == delta and rs.is_short(r) and all(rs.coroot_pairing(r, a) >= 0 for a in delta)
    ]
    if not found:
        return None
    if len(found) > 1:
        raise AssertionError(f"several dominant short roots on {sorted(delta)}: {found}")
    return found[0]


@lru_cache(maxsize=None)
def build_cascade(rs: RootSystem) -> tuple[CascadeNode, ...]:
    """Cascade members, parents before children, siblings by smallest simple root."""
    ed = extended_diagram(rs)
    nodes: list[CascadeNode] = []
    queue: deque = deque([(frozenset(rs.simple), None)])
    while queue:
        delta, parent = queue.popleft()
        beta = highest_short_in(rs, delta)
        if beta is None:
            continue
        depth = 1 if parent is None else nodes[parent].depth + 1
        node = CascadeNode(len(nodes), beta, delta, parent, depth)
        nodes.append(node)
        rest = [a for a in sorted(delta) if rs.inner(beta, _unit(rs, a)) <= 0]
        for comp in ed.components(rest):
            queue.append((frozenset(comp), node.index))
    return tuple(nodes)


def _unit(rs: RootSystem, i: int) -> Root:
    return tuple(int(k == i) for k in rs.simple)


def chain(casc: tuple[CascadeNode, ...], index: int) -> list[CascadeNode]:
    """All members ``beta' ⪯ beta``, from ``beta_1`` up to ``beta`` itself."""
    out = []
    cur: int | None = index
    while cur is not None:
        out.append(casc[cur])
        cur = casc[cur].predecessor
    return out[::-1]


def precedes(casc: tuple[CascadeNode, ...], i: int, j: int) -> bool:
    """``casc[i] ⪯ casc[j]``: ``i`` lies on the predecessor chain of ``j``."""
    return any(n.index == i for n in chain(casc, j))


def _xi_entry(rs: RootSystem, casc: tuple[CascadeNode, ...], node: CascadeNode) -> XiEntry:
    members = chain(casc, node.index)
    xi_root = tuple(sum(m.beta[k] for m in members) for k in range(rs.rank))
    xi = rs.to_weight(xi_root)
    b1 = rs.highest_short
    supp_star = support(tuple(x - y for x, y in zip(b1, node.beta)))
    return XiEntry(node, xi_root, xi, supp_star, xi.is_dominant())


@lru_cache(maxsize=None)
def _entries(rs: RootSystem) -> tuple[XiEntry, ...]:
    casc = build_cascade(rs)
    return tuple(_xi_entry(rs, casc, n) for n in casc)


def xi_entries(rs: RootSystem, casc: tuple[CascadeNode, ...] | None = None) -> tuple[XiEntry, ...]:
    if casc is None or casc == build_cascade(rs):
        return _entries(rs)
    return tuple(_xi_entry(rs, casc, n) for n in casc)


def Xi(rs: RootSystem) -> tuple[XiEntry, ...]:
    """The dominant ``xi_beta``."""
    return tuple(e for e in _entries(rs) if e.dominant)


def check_interval(rs: RootSystem, casc: tuple[CascadeNode, ...], subset: Iterable[int]) -> bool:
    """Members with ``supp(beta_1 - beta) ⊆ subset`` form a chain closed under ``⪯``-predecessors."""
    subset = frozenset(subset)
    if not subset < frozenset(rs.simple):
        raise InvalidArgs("the subset must be a proper subset of the simple roots")
    b1 = rs.highest_short
    chosen = {
        n.index for n in casc
        if support(tuple(x - y for x, y in zip(b1, n.beta))) <= subset
    }
    for i in chosen:
        if any(m.index not in chosen for m in chain(casc, i)):
            return False
        for j in chosen:
            if not (precedes(casc, i, j) or precedes(casc, j, i)):
                return False
    return True
