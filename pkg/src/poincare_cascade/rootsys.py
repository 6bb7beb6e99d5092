"""Finite indecomposable root systems in Bourbaki numbering.

Roots are integer tuples over the simple-root basis, weights are rational
tuples over the fundamental-weight basis. The invariant form is normalised so
that short roots have squared length 2. Simple roots are addressed by their
1-based Bourbaki index; index 0 is the extra vertex ``alpha_0 = -beta_1`` of
the extended diagram.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import networkx as nx

from .errors import InvalidArgs, NotFinite

Root = tuple[int, ...]

# smallest legal rank per family; E/F/G have fixed ranks
_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        if not is_legal(self.family, self.rank):
            raise InvalidArgs(f"illegal type {self.family}{self.rank}")

    @property
    def n_positive_roots(self) -> int:
        from .weyl import exponents
        return sum(exponents(self))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def is_legal(family: str, rank: int) -> bool:
    if not isinstance(rank, int) or isinstance(rank, bool):
        return False
    if family in _MIN_RANK:
        return rank >= _MIN_RANK[family]
    if family in _FIXED_RANKS:
        return rank in _FIXED_RANKS[family]
    return False


def all_types(max_rank: int = 8) -> list[SimpleType]:
    """Every legal type of rank at most ``max_rank``, family by family."""
    out = []
    for fam in "ABCD":
        out += [SimpleType(fam, n) for n in range(_MIN_RANK[fam], max_rank + 1)]
    for fam in "EFG":
        out += [SimpleType(fam, n) for n in _FIXED_RANKS[fam] if n <= max_rank]
    return out


def format_types(types: Sequence[SimpleType]) -> str:
    return "×".join(str(t) for t in types) if types else "∅"


@dataclass(frozen=True)
class Weight:
    """Rational vector over the fundamental weights."""

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def scaled(self, k: Fraction | int) -> Weight:
        return Weight(tuple(c * k for c in self.coords))

    def __str__(self) -> str:
        return format_weight(self.coords)


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_combo(coords: Sequence[Fraction | int], symbol: str) -> str:
    parts = []
    for i, c in enumerate(coords, start=1):
        c = Fraction(c)
        if c == 0:
            continue
        mag = abs(c)
        parts.append(("-" if c < 0 else "+", ("" if mag == 1 else _fmt_coeff(mag)) + f"{symbol}{i}"))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def format_weight(coords: Sequence[Fraction | int]) -> str:
    """Render ``sum c_i varpi_i`` the way weights are written by hand, e.g. ``ϖ1 + 2ϖ6``."""
    return _format_combo(coords, "ϖ")


def format_root(coords: Sequence[int]) -> str:
    return _format_combo(coords, "α")


def format_subset(s: Iterable[int]) -> str:
    s = sorted(s)
    return ",".join(str(i) for i in s) if s else "∅"


def support(v: Sequence[int | Fraction]) -> frozenset[int]:
    return frozenset(i for i, c in enumerate(v, start=1) if c != 0)


def gram_matrix(stype: SimpleType) -> list[list[int]]:
    """Bourbaki-numbered Gram matrix ``(alpha_i, alpha_j)`` with short roots of norm 2."""
    fam, n = stype.family, stype.rank
    g = [[0] * n for _ in range(n)]

    def link(i: int, j: int, val: int) -> None:
        g[i - 1][j - 1] = g[j - 1][i - 1] = val

    if fam in "ADE":
        for i in range(n):
            g[i][i] = 2
        if fam == "A":
            for i in range(1, n):
                link(i, i + 1, -1)
        elif fam == "D":
            for i in range(1, n - 1):
                link(i, i + 1, -1)
            link(n - 2, n, -1)
        else:
            for a, b in [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]:
                if a <= n and b <= n:
                    link(a, b, -1)
    elif fam == "B":
        for i in range(n - 1):
            g[i][i] = 4
        g[n - 1][n - 1] = 2
        for i in range(1, n):
            link(i, i + 1, -2)
    elif fam == "C":
        for i in range(n - 1):
            g[i][i] = 2
        g[n - 1][n - 1] = 4
        for i in range(1, n - 1):
            link(i, i + 1, -1)
        link(n - 1, n, -2)
    elif fam == "F":
        g[0][0] = g[1][1] = 4
        g[2][2] = g[3][3] = 2
        link(1, 2, -2)
        link(2, 3, -2)
        link(3, 4, -1)
    elif fam == "G":
        g[0][0], g[1][1] = 2, 6
        link(1, 2, -3)
    return g


def _coroot_pairing(gram: Sequence[Sequence[int]], v: Sequence[int], i: int) -> int:
    # <v, alpha_i^vee> for 0-based column i
    num = 2 * sum(g * x for g, x in zip(gram[i], v))
    q, r = divmod(num, gram[i][i])
    if r:
        raise NotFinite("non-integral Cartan pairing")
    return q


def root_closure(gram: Sequence[Sequence[int]], limit: int = 100_000) -> list[Root]:
    """All roots generated by reflecting the basis vectors of ``gram`` in each other.

    Coordinates are over the basis underlying ``gram``. Raises ``NotFinite`` when
    the orbit grows past ``limit``, which happens exactly for affine diagrams.
    """
    n = len(gram)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        v = queue.popleft()
        for i in range(n):
            c = _coroot_pairing(gram, v, i)
            if c:
                w = tuple(x - (c if k == i else 0) for k, x in enumerate(v))
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
                    if len(seen) > limit:
                        raise NotFinite("root orbit does not terminate")
    return sorted(seen, key=lambda r: (-sum(r), tuple(-x for x in r)))


@dataclass(eq=False)
class RootSystem:
    """An indecomposable finite root system; build with ``build``."""

    stype: SimpleType
    gram: tuple[tuple[int, ...], ...]
    cartan: tuple[tuple[int, ...], ...]
    roots: tuple[Root, ...]
    positive_roots: tuple[Root, ...]
    highest_short: Root
    _root_set: frozenset[Root] = field(repr=False, default=frozenset())

    @property
    def rank(self) -> int:
        return self.stype.rank

    @property
    def simple(self) -> list[int]:
        return list(range(1, self.rank + 1))

    def norm_simple(self, i: int) -> int:
        return self.gram[i - 1][i - 1]

    def inner(self, u: Sequence, v: Sequence) -> Fraction:
        """``(u, v)`` for vectors over the simple-root basis (or ``Weight`` objects)."""
        u = self.to_root_coords(u) if isinstance(u, Weight) else u
        v = self.to_root_coords(v) if isinstance(v, Weight) else v
        total = Fraction(0)
        for i, x in enumerate(u):
            if x:
                row = self.gram[i]
                total += x * sum(g * y for g, y in zip(row, v))
        return total

    def norm(self, v: Sequence) -> Fraction:
        return self.inner(v, v)

    def is_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self._root_set

    def is_short(self, v: Sequence[int]) -> bool:
        return self.norm(v) == 2

    def coroot_pairing(self, v: Sequence, i: int) -> Fraction:
        """``(v, alpha_i^vee)`` for simple root ``alpha_i``."""
        e = tuple(int(k == i) for k in range(1, self.rank + 1))
        return 2 * self.inner(v, e) / self.norm_simple(i)

    def to_weight(self, v: Sequence) -> Weight:
        return Weight(tuple(self.coroot_pairing(v, i) for i in self.simple))

    def to_root_coords(self, w: Weight) -> tuple[Fraction, ...]:
        n = self.rank
        return tuple(sum((w.coords[i] * self.fund_weights[i][k] for i in range(n)), Fraction(0)) for k in range(n))

    @cached_property
    def fund_weights(self) -> tuple[tuple[Fraction, ...], ...]:
        """Row ``i`` is ``varpi_{i+1}`` over the simple roots: the inverse Cartan matrix."""
        import sympy

        inv = sympy.Matrix(self.cartan).inv()
        return tuple(
            tuple(Fraction(int(inv[i, k].p), int(inv[i, k].q)) for k in range(self.rank)) for i in range(self.rank)
        )

    def is_minuscule(self, i: int) -> bool:
        """``varpi_i`` is minuscule iff ``(varpi_i, beta_1^vee) = 1``."""
        return self.inner(self.fund_weights[i - 1], self.highest_short) == 1

    def minuscule(self) -> list[int]:
        return [i for i in self.simple if self.is_minuscule(i)]

    def __repr__(self) -> str:
        return f"RootSystem({self.stype})"


@lru_cache(maxsize=None)
def build(stype: SimpleType) -> RootSystem:
    gram = gram_matrix(stype)
    n = stype.rank
    cartan = tuple(tuple(2 * gram[i][j] // gram[j][j] for j in range(n)) for i in range(n))
    roots = root_closure(gram)
    positive = tuple(r for r in roots if all(x >= 0 for x in r))
    rs = RootSystem(
        stype=stype,
        gram=tuple(tuple(r) for r in gram),
        cartan=cartan,
        roots=tuple(roots),
        positive_roots=positive,
        highest_short=(),
        _root_set=frozenset(roots),
    )
    dominant_short = [
        r for r in positive if rs.is_short(r) and all(rs.coroot_pairing(r, i) >= 0 for i in rs.simple)
    ]
    if len(dominant_short) != 1:
        raise AssertionError(f"{stype}: expected one dominant short root, got {dominant_short}")
    rs.highest_short = dominant_short[0]
    return rs


def build_type(family: str, rank: int) -> RootSystem:
    return build(SimpleType(family, rank))


def pairing(rs: RootSystem, lam: Weight | Sequence, alpha: Sequence[int]) -> Fraction:
    """``(lam, alpha^vee) = 2 (lam, alpha) / (alpha, alpha)`` for a root ``alpha``."""
    alpha = tuple(alpha)
    if not rs.is_root(alpha):
        raise InvalidArgs(f"{alpha} is not a root of {rs.stype}")
    return 2 * rs.inner(lam, alpha) / rs.norm(alpha)


@dataclass(eq=False)
class ExtendedDiagram:
    """Vertices ``0..n`` where 0 is ``alpha_0 = -beta_1``; full Gram data kept."""

    rs: RootSystem
    gram: tuple[tuple[int, ...], ...]

    @property
    def vertices(self) -> list[int]:
        return list(range(self.rs.rank + 1))

    def cartan(self, a: int, b: int) -> int:
        """``<alpha_a, alpha_b^vee>``."""
        return 2 * self.gram[a][b] // self.gram[b][b]

    def linked(self, a: int, b: int) -> bool:
        return a != b and self.gram[a][b] != 0

    def neighbours(self, a: int) -> list[int]:
        return [b for b in self.vertices if self.linked(a, b)]

    def sub_gram(self, verts: Sequence[int]) -> list[list[int]]:
        return [[self.gram[a][b] for b in verts] for a in verts]

    def graph(self, verts: Iterable[int]) -> nx.Graph:
        verts = list(verts)
        g = nx.Graph()
        g.add_nodes_from(verts)
        g.add_edges_from((a, b) for i, a in enumerate(verts) for b in verts[i + 1:] if self.linked(a, b))
        return g

    def components(self, verts: Iterable[int]) -> list[list[int]]:
        """Connected components, ordered by minimal vertex with ``alpha_0`` last."""
        comps = [sorted(c, key=_vertex_key) for c in nx.connected_components(self.graph(verts))]
        return sorted(comps, key=lambda c: _vertex_key(c[0]))

    def component_of(self, verts: Iterable[int], v: int) -> frozenset[int]:
        verts = set(verts) | {v}
        return frozenset(nx.node_connected_component(self.graph(verts), v))

    def is_connected(self, verts: Iterable[int]) -> bool:
        verts = list(verts)
        return not verts or nx.is_connected(self.graph(verts))


def _vertex_key(v: int) -> float:
    return float("inf") if v == 0 else v


@lru_cache(maxsize=None)
def extended_diagram(rs: RootSystem) -> ExtendedDiagram:
    n = rs.rank
    b1 = rs.highest_short
    g = [[0] * (n + 1) for _ in range(n + 1)]
    g[0][0] = 2
    for i in range(1, n + 1):
        e = tuple(int(k == i) for k in range(1, n + 1))
        val = -int(rs.inner(b1, e))
        g[0][i] = g[i][0] = val
        for j in range(1, n + 1):
            g[i][j] = rs.gram[i - 1][j - 1]
    return ExtendedDiagram(rs=rs, gram=tuple(tuple(r) for r in g))


def _classify_component(ed: ExtendedDiagram, comp: list[int]) -> SimpleType:
    n = len(comp)
    if n == 1:
        return SimpleType("A", 1)
    edges = {}
    for i, a in enumerate(comp):
        for b in comp[i + 1:]:
            if ed.linked(a, b):
                edges[(a, b)] = ed.cartan(a, b) * ed.cartan(b, a)
    if len(edges) >= n or any(m >= 4 for m in edges.values()):
        raise NotFinite(f"vertices {comp} form an affine diagram")
    degree = {v: 0 for v in comp}
    for a, b in edges:
        degree[a] += 1
        degree[b] += 1
    mults = sorted(edges.values())
    if 3 in mults:
        if n != 2:
            raise NotFinite(f"vertices {comp} form an affine diagram")
        return SimpleType("G", 2)
    if 2 in mults:
        if mults.count(2) > 1 or max(degree.values()) > 2:
            raise NotFinite(f"vertices {comp} form an affine diagram")
        if n == 2:
            return SimpleType("B", 2)
        (a, b), = [e for e, m in edges.items() if m == 2]
        ends = [v for v in (a, b) if degree[v] == 1]
        if not ends:
            if n == 4:
                return SimpleType("F", 4)
            raise NotFinite(f"vertices {comp} form an affine diagram")
        leaf = ends[0]
        other = b if leaf == a else a
        short_leaf = ed.gram[leaf][leaf] < ed.gram[other][other]
        return SimpleType("B" if short_leaf else "C", n)
    branch = [v for v in comp if degree[v] >= 3]
    if not branch:
        return SimpleType("A", n)
    if len(branch) > 1 or degree[branch[0]] > 3:
        raise NotFinite(f"vertices {comp} form an affine diagram")
    centre = branch[0]
    g = ed.graph(comp)
    g.remove_node(centre)
    arms = sorted(len(c) for c in nx.connected_components(g))
    if arms[0] == 1 and arms[1] == 1:
        return SimpleType("D", n)
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return SimpleType("E", n)
    raise NotFinite(f"vertices {comp} form an affine diagram")


def classify_subdiagram(ed: ExtendedDiagram, verts: Iterable[int]) -> list[SimpleType]:
    """Types of the connected components of a proper subset of ``Delta ∪ {alpha_0}``."""
    verts = sorted(set(verts), key=_vertex_key)
    if any(v not in range(ed.rs.rank + 1) for v in verts):
        raise InvalidArgs(f"vertices {verts} out of range")
    if len(verts) == ed.rs.rank + 1:
        raise NotFinite("the full extended diagram is affine")
    return [_classify_component(ed, c) for c in ed.components(verts)]


def classify_simple(rs: RootSystem, subset: Iterable[int]) -> list[SimpleType]:
    """Types of the parabolic subsystem on a subset of simple roots."""
    return classify_subdiagram(extended_diagram(rs), subset)
