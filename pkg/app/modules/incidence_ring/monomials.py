"""Monomials of k[X0..Xn; Y0..Yn] and the monomial bases of the incidence ring.

A monomial is in normal form when it is not divisible by X0*Y0. The normal
monomials of bidegree (a, b) form a basis of the (a, b) component of
k[X; Y]/(X0*Y0 + ... + Xn*Yn), listed in the canonical order: descending
lexicographic on the concatenated exponent vector, X block first.
"""
import re
from functools import lru_cache
from typing import NamedTuple

from app.core.errors import InvalidInput
from app.utils.combinatorics import binomial, compositions

_EXPONENT_LIMIT = 1 << 32
_FACTOR = re.compile(r"([XY])(\d+)(?:\^(\d+))?")


class Bidegree(NamedTuple):
    a: int
    b: int

    def shift(self, da: int, db: int) -> "Bidegree":
        return Bidegree(self.a + da, self.b + db)

    def label(self) -> str:
        """The O(a,0,b) twist label; the middle slot is always 0 on Y."""
        return f"O({self.a},0,{self.b})"


class Monomial(NamedTuple):
    xexp: tuple[int, ...]
    yexp: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.xexp) - 1

    @property
    def bidegree(self) -> Bidegree:
        return Bidegree(sum(self.xexp), sum(self.yexp))

    def is_normal(self) -> bool:
        return self.xexp[0] == 0 or self.yexp[0] == 0

    def times(self, other: "Monomial") -> "Monomial":
        return Monomial(
            tuple(u + v for u, v in zip(self.xexp, other.xexp)),
            tuple(u + v for u, v in zip(self.yexp, other.yexp)),
        )

    def torus_weight(self) -> tuple[int, ...]:
        """xexp - yexp; the relation sum(Xi*Yi) has weight zero."""
        return tuple(u - v for u, v in zip(self.xexp, self.yexp))

    def __str__(self) -> str:
        return format_monomial(self)


def make_monomial(xexp, yexp) -> Monomial:
    xexp, yexp = tuple(int(e) for e in xexp), tuple(int(e) for e in yexp)
    if len(xexp) != len(yexp) or not xexp:
        raise InvalidInput("X and Y exponent vectors must have the same positive length")
    if any(e < 0 or e >= _EXPONENT_LIMIT for e in xexp + yexp):
        raise InvalidInput("exponents must be non-negative and fit in 32 bits")
    return Monomial(xexp, yexp)


def y_power(n: int, i: int, e: int) -> Monomial:
    """Y_i^e in n+1 variables per block."""
    yexp = [0] * (n + 1)
    yexp[i] = e
    return Monomial((0,) * (n + 1), tuple(yexp))


def format_monomial(m: Monomial) -> str:
    """Render as ``X0^2*X3*Y1^4``; exponent 1 is omitted and the unit prints as ``1``."""
    factors = []
    for name, exps in (("X", m.xexp), ("Y", m.yexp)):
        for i, e in enumerate(exps):
            if e == 1:
                factors.append(f"{name}{i}")
            elif e > 1:
                factors.append(f"{name}{i}^{e}")
    return "*".join(factors) if factors else "1"


def parse_monomial(text: str, n: int) -> Monomial:
    """Inverse of :func:`format_monomial` for monomials in X0..Xn, Y0..Yn."""
    text = text.strip()
    xexp, yexp = [0] * (n + 1), [0] * (n + 1)
    if text == "1":
        return Monomial(tuple(xexp), tuple(yexp))
    if not text:
        raise InvalidInput("empty monomial")
    for factor in text.split("*"):
        match = _FACTOR.fullmatch(factor.strip())
        if match is None:
            raise InvalidInput(f"cannot parse factor {factor!r} of {text!r}")
        name, index, exponent = match.group(1), int(match.group(2)), match.group(3)
        if index > n:
            raise InvalidInput(f"variable {name}{index} out of range for n={n}")
        e = 1 if exponent is None else int(exponent)
        if e == 0:
            raise InvalidInput(f"zero exponent in {factor!r}")
        target = xexp if name == "X" else yexp
        target[index] += e
    return make_monomial(xexp, yexp)


def component_dimension(n: int, d: Bidegree) -> int:
    """dim of the (a, b) component: C(a+n,n)C(b+n,n) - C(a-1+n,n)C(b-1+n,n).

    All binomials are 0 below their lower index, so any negative degree gives 0.
    """
    a, b = d
    total = binomial(a + n, n) * binomial(b + n, n)
    divisible = binomial(a - 1 + n, n) * binomial(b - 1 + n, n)
    return total - divisible


@lru_cache(maxsize=8)
def monomial_basis(n: int, d: Bidegree) -> tuple[Monomial, ...]:
    """Normal monomials of bidegree ``d`` in the canonical order."""
    a, b = d
    if a < 0 or b < 0:
        raise InvalidInput(f"monomial_basis needs a non-negative bidegree, got {tuple(d)}")
    if n < 1:
        raise InvalidInput(f"n must be positive, got {n}")
    ys = list(compositions(b, n + 1))
    ys_without_y0 = [y for y in ys if y[0] == 0]
    basis = []
    for x in compositions(a, n + 1):
        for y in (ys_without_y0 if x[0] else ys):
            basis.append(Monomial(x, y))
    return tuple(basis)


def basis_index(basis: tuple[Monomial, ...]) -> dict[Monomial, int]:
    return {m: i for i, m in enumerate(basis)}
