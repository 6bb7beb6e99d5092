"""Dense integer polynomials in one variable ``t`` and Gaussian binomials.

Coefficients are Python ints, so nothing overflows. Every ``IntPoly`` is kept
in canonical form (no trailing zero coefficients), which makes equality a
plain tuple comparison.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import InvalidArgs, NotDivisible


@dataclass(frozen=True)
class IntPoly:
    """Polynomial ``sum(coeffs[k] * t**k)`` with integer coefficients."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        c = tuple(int(x) for x in self.coeffs)
        end = len(c)
        while end and c[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", c[:end])

    @classmethod
    def const(cls, value: int) -> IntPoly:
        return cls((value,))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> IntPoly:
        if power < 0:
            raise InvalidArgs(f"negative power {power}")
        return cls((0,) * power + (coeff,))

    @property
    def degree(self) -> int | float:
        """Degree, or ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __add__(self, other: IntPoly | int) -> IntPoly:
        return add(self, _lift(other))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        return add(self, -_lift(other))

    def __rsub__(self, other: int) -> IntPoly:
        return add(_lift(other), -self)

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        return mul(self, _lift(other))

    __rmul__ = __mul__

    def __floordiv__(self, other: IntPoly) -> IntPoly:
        return exact_div(self, other)

    def shift(self, k: int) -> IntPoly:
        """Multiply by ``t**k``."""
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}{var}"
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _lift(x: IntPoly | int) -> IntPoly:
    return x if isinstance(x, IntPoly) else IntPoly.const(x)


ZERO = IntPoly()
ONE = IntPoly((1,))
T = IntPoly((0, 1))


def add(a: IntPoly, b: IntPoly) -> IntPoly:
    n = max(len(a.coeffs), len(b.coeffs))
    ac = a.coeffs + (0,) * (n - len(a.coeffs))
    bc = b.coeffs + (0,) * (n - len(b.coeffs))
    return IntPoly(tuple(x + y for x, y in zip(ac, bc)))


def mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a.coeffs or not b.coeffs:
        return ZERO
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] += x * y
    return IntPoly(tuple(out))


def exact_div(a: IntPoly, b: IntPoly) -> IntPoly:
    """Return ``q`` with ``a == b * q``; raise ``NotDivisible`` otherwise."""
    if b.is_zero():
        raise InvalidArgs("division by the zero polynomial")
    if a.is_zero():
        return ZERO
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    lead = b.coeffs[-1]
    if len(rem) - 1 < db:
        raise NotDivisible(f"{a} is not divisible by {b}")
    quot = [0] * (len(rem) - db)
    for k in range(len(quot) - 1, -1, -1):
        c, r = divmod(rem[k + db], lead)
        if r:
            raise NotDivisible(f"{a} is not divisible by {b}")
        quot[k] = c
        if c:
            for j, y in enumerate(b.coeffs):
                rem[k + j] -= c * y
    if any(rem):
        raise NotDivisible(f"{a} is not divisible by {b}")
    return IntPoly(tuple(quot))


def product(polys: Iterable[IntPoly]) -> IntPoly:
    acc = ONE
    for p in polys:
        acc = mul(acc, p)
    return acc


def t_minus_one_ratio(k: int) -> IntPoly:
    """``(t**k - 1) / (t - 1) = 1 + t + ... + t**(k-1)``."""
    return IntPoly((1,) * k)


@lru_cache(maxsize=None)
def gaussian(n: int, r: int) -> IntPoly:
    """Gaussian binomial ``[n r]`` as the exact quotient of its defining products."""
    if r < 0 or n < 0 or r > n:
        raise InvalidArgs(f"gaussian({n}, {r}) needs n >= r >= 0")
    num = product(IntPoly.monomial(n - i) - 1 for i in range(r))
    den = product(IntPoly.monomial(i) - 1 for i in range(1, r + 1))
    return exact_div(num, den)


def gaussian_recurrence(n: int, r: int) -> IntPoly:
    """``[n r]`` from the Pascal-type recurrence, with zero boundary terms."""
    if r < 0 or r > n:
        raise InvalidArgs(f"gaussian({n}, {r}) needs n >= r >= 0")
    rows = [ONE]
    for m in range(1, n + 1):
        new = []
        for k in range(m + 1):
            first = rows[k] if k < m else ZERO
            second = rows[k - 1].shift(m - k) if k > 0 else ZERO
            new.append(first + second)
        rows = new
    return rows[r]


def check_vandermonde(m: int, n: int) -> bool:
    """``[m+n m] == sum_s t**(s*s) [m s][n s]`` for ``0 <= m <= n``."""
    if not 0 <= m <= n:
        raise InvalidArgs("need 0 <= m <= n")
    rhs = ZERO
    for s in range(m + 1):
        rhs = rhs + (gaussian(m, s) * gaussian(n, s)).shift(s * s)
    return gaussian(m + n, m) == rhs


def check_parity_sums(n: int) -> bool:
    """Even- and odd-index sums of ``t**(r(r-1)/2) [n r]`` both equal ``prod (1 + t**l)``."""
    if n < 1:
        raise InvalidArgs("need n >= 1")
    even, odd = ZERO, ZERO
    for r in range(n + 1):
        term = gaussian(n, r).shift(r * (r - 1) // 2)
        if r % 2:
            odd = odd + term
        else:
            even = even + term
    target = product(IntPoly.monomial(l) + 1 for l in range(1, n))
    return even == target and odd == target


def _u_expansion(powers: Iterable[int]) -> list[IntPoly]:
    # coefficients of u**r in prod (1 + t**p u)
    coeffs = [ONE]
    for p in powers:
        nxt = coeffs + [ZERO]
        for r in range(1, len(nxt)):
            nxt[r] = nxt[r] + coeffs[r - 1].shift(p)
        coeffs = nxt
    return coeffs


def check_product_identity(n: int) -> bool:
    """Compare ``prod_{l<n} (1 + t**l u)`` and its shifted variant with Gaussian sums, one ``u**r`` at a time."""
    if n < 1:
        raise InvalidArgs("need n >= 1")
    plain = _u_expansion(range(n))
    shifted = _u_expansion(range(1, n + 1))
    if len(plain) != n + 1 or len(shifted) != n + 1:
        return False
    for r in range(n + 1):
        if plain[r] != gaussian(n, r).shift(r * (r - 1) // 2):
            return False
        if shifted[r] != gaussian(n, r).shift(r * (r + 1) // 2):
            return False
    return True
