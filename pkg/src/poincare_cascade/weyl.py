"""Poincare polynomials of Weyl groups: exponent formula and brute-force enumeration."""
from __future__ import annotations

from collections import Counter, deque
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidArgs, TooLarge
from .qpoly import IntPoly, exact_div, mul, t_minus_one_ratio
from .rootsys import RootSystem, SimpleType, classify_simple, root_closure

MAX_ELEMENTS = 10**7


def exponents(stype: SimpleType) -> list[int]:
    fam, n = stype.family, stype.rank
    if fam == "A":
        return list(range(1, n + 1))
    if fam in "BC":
        return [2 * i - 1 for i in range(1, n + 1)]
    if fam == "D":
        return sorted([2 * i - 1 for i in range(1, n)] + [n - 1])
    return {
        ("E", 6): [1, 4, 5, 7, 8, 11],
        ("E", 7): [1, 5, 7, 9, 11, 13, 17],
        ("E", 8): [1, 7, 11, 13, 17, 19, 23, 29],
        ("F", 4): [1, 5, 7, 11],
        ("G", 2): [1, 5],
    }[(fam, n)]


def n_positive_roots(types: Iterable[SimpleType]) -> int:
    return sum(sum(exponents(t)) for t in types)


def poincare(types: Iterable[SimpleType]) -> IntPoly:
    """Product over components of ``prod (t**(m_i+1) - 1)/(t - 1)``; 1 for no components."""
    acc = IntPoly((1,))
    for t in types:
        for m in exponents(t):
            acc = mul(acc, t_minus_one_ratio(m + 1))
    return acc


def poincare_quotient(whole: Sequence[SimpleType], sub: Sequence[SimpleType]) -> IntPoly:
    q = exact_div(poincare(whole), poincare(sub))
    expected = n_positive_roots(whole) - n_positive_roots(sub)
    if q.degree != expected:
        raise AssertionError(f"quotient degree {q.degree} != {expected}")
    return q


def _reflection_perms(roots: Sequence[tuple[int, ...]], gram: Sequence[Sequence[int]], gens: Sequence[int]) -> list[np.ndarray]:
    index = {r: k for k, r in enumerate(roots)}
    perms = []
    for i in gens:
        row, nii = gram[i], gram[i][i]
        images = []
        for r in roots:
            c = 2 * sum(g * x for g, x in zip(row, r)) // nii
            images.append(index[tuple(x - (c if k == i else 0) for k, x in enumerate(r))])
        perms.append(np.array(images, dtype=np.int32))
    return perms


def enumerate_lengths(
    roots: Sequence[tuple[int, ...]],
    gram: Sequence[Sequence[int]],
    gens: Sequence[int],
    max_elements: int = MAX_ELEMENTS,
) -> Counter:
    """Breadth-first closure of the group generated by simple reflections ``gens``.

    Elements are stored as their permutation of ``roots``; the length of ``w``
    is the number of positive roots it sends to negative ones. Returns a
    histogram ``{length: count}``.
    """
    roots = list(roots)
    positive = np.array([all(x >= 0 for x in r) for r in roots])
    pos_idx = np.flatnonzero(positive)
    gen_perms = _reflection_perms(roots, gram, gens)
    ident = np.arange(len(roots), dtype=np.int32)
    seen = {ident.tobytes()}
    hist: Counter = Counter({0: 1})
    queue = deque([ident])
    while queue:
        w = queue.popleft()
        for p in gen_perms:
            sw = p[w]
            key = sw.tobytes()
            if key in seen:
                continue
            seen.add(key)
            if len(seen) > max_elements:
                raise TooLarge(f"group exceeds {max_elements} elements")
            hist[int(np.count_nonzero(~positive[sw[pos_idx]]))] += 1
            queue.append(sw)
    return hist


def _hist_poly(hist: Counter) -> IntPoly:
    top = max(hist)
    return IntPoly(tuple(hist.get(k, 0) for k in range(top + 1)))


def brute_force_poincare(rs: RootSystem, gens: Iterable[int], max_elements: int = MAX_ELEMENTS) -> IntPoly:
    """Enumerate ``W_gens`` acting on all roots of ``rs`` and sum ``t**length``."""
    gens = sorted(set(gens))
    if any(g not in rs.simple for g in gens):
        raise InvalidArgs(f"generators {gens} are not simple roots of {rs.stype}")
    order = poincare(classify_simple(rs, gens))(1)
    if order > max_elements:
        raise TooLarge(f"W_{gens} of {rs.stype} has {order} elements (guard {max_elements})")
    hist = enumerate_lengths(rs.roots, rs.gram, [g - 1 for g in gens], max_elements)
    return _hist_poly(hist)


def brute_force_poincare_gram(gram: Sequence[Sequence[int]], max_elements: int = MAX_ELEMENTS) -> IntPoly:
    """Poincare polynomial of the reflection group whose simple roots have Gram matrix ``gram``.

    The roots are generated from scratch, so nothing here consults type tables.
    """
    if not gram:
        return IntPoly((1,))
    roots = root_closure(gram)
    hist = enumerate_lengths(roots, gram, range(len(gram)), max_elements)
    return _hist_poly(hist)
