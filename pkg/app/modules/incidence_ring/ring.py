"""Elements of the incidence ring R = k[X0..Xn; Y0..Yn]/(X0*Y0 + ... + Xn*Yn) over F_p.

Reduction uses the one-element Groebner basis {sum Xi*Yi} for the
lexicographic order with X0 heaviest, whose leading monomial is X0*Y0:

    X0*Y0 -> -(X1*Y1 + ... + Xn*Yn)

A monomial X0^k*Y0^k*r, with r free of X0 or of Y0, rewrites in one step to
(-1)^k (X1*Y1 + ... + Xn*Yn)^k * r, which is already normal because the
expansion involves neither X0 nor Y0.
"""
from functools import lru_cache
from typing import Mapping, Optional

from app.core.errors import InvalidInput, MixedDegrees
from app.modules.fp_linalg.field import check_modulus
from app.modules.incidence_ring.monomials import Bidegree, Monomial
from app.utils.combinatorics import compositions, multinomial


@lru_cache(maxsize=1024)
def _relation_power(n: int, k: int, p: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Terms of (-1)^k (X1Y1 + ... + XnYn)^k mod p as (exponents of X1Y1..XnYn, coefficient)."""
    sign = -1 if k % 2 else 1
    terms = []
    for c in compositions(k, n):
        coefficient = sign * multinomial(c) % p
        if coefficient:
            terms.append((c, coefficient))
    return tuple(terms)


def reduce_monomial(m: Monomial, p: int) -> dict[Monomial, int]:
    """Normal form of a single monomial as a {monomial: residue} map."""
    k = min(m.xexp[0], m.yexp[0])
    if k == 0:
        return {m: 1}
    n = m.n
    x_rest, y_rest = list(m.xexp), list(m.yexp)
    x_rest[0] -= k
    y_rest[0] -= k
    out: dict[Monomial, int] = {}
    for c, coefficient in _relation_power(n, k, p):
        xexp = (x_rest[0],) + tuple(x_rest[i + 1] + c[i] for i in range(n))
        yexp = (y_rest[0],) + tuple(y_rest[i + 1] + c[i] for i in range(n))
        out[Monomial(xexp, yexp)] = coefficient
    return out


class RingElement:
    """A bihomogeneous element of R in normal form with coefficients in F_p."""

    __slots__ = ("modulus", "terms")

    def __init__(self, modulus: int, terms: Optional[Mapping[Monomial, int]] = None):
        self.modulus = modulus
        self.terms: dict[Monomial, int] = dict(terms or {})

    @classmethod
    def monomial(cls, m: Monomial, p: int) -> "RingElement":
        return normal_form({m: 1}, p)

    @property
    def bidegree(self) -> Optional[Bidegree]:
        for m in self.terms:
            return m.bidegree
        return None

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, m: Monomial) -> int:
        return self.terms.get(m, 0)

    def __add__(self, other: "RingElement") -> "RingElement":
        if other.modulus != self.modulus:
            raise InvalidInput("cannot add elements over different fields")
        if self.terms and other.terms and self.bidegree != other.bidegree:
            raise MixedDegrees(f"cannot add bidegrees {self.bidegree} and {other.bidegree}")
        out = dict(self.terms)
        _accumulate(out, other.terms, 1, self.modulus)
        return RingElement(self.modulus, out)

    def scale(self, alpha: int) -> "RingElement":
        p = self.modulus
        alpha %= p
        if not alpha:
            return RingElement(p)
        return RingElement(p, {m: c * alpha % p for m, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.modulus == other.modulus and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return f"RingElement(0, p={self.modulus})"
        body = " + ".join(f"{c}*{m}" for m, c in sorted(self.terms.items(), reverse=True))
        return f"RingElement({body}, p={self.modulus})"


def _accumulate(out: dict[Monomial, int], terms: Mapping[Monomial, int], alpha: int, p: int) -> None:
    for m, c in terms.items():
        value = (out.get(m, 0) + alpha * c) % p
        if value:
            out[m] = value
        else:
            out.pop(m, None)


def normal_form(raw: Mapping[Monomial, int], p: int) -> RingElement:
    """Reduce a bihomogeneous coefficient map modulo the relation."""
    check_modulus(p)
    degrees = {m.bidegree for m in raw}
    if len(degrees) > 1:
        raise MixedDegrees(f"input mixes bidegrees {sorted(degrees)}")
    sizes = {len(m.xexp) for m in raw} | {len(m.yexp) for m in raw}
    if len(sizes) > 1:
        raise InvalidInput("input mixes numbers of variables")
    out: dict[Monomial, int] = {}
    for m, c in raw.items():
        c = int(c) % p
        if c:
            _accumulate(out, reduce_monomial(m, p), c, p)
    return RingElement(p, out)


def multiply(e: RingElement, m: Monomial) -> RingElement:
    """Normal form of e*m."""
    p = e.modulus
    out: dict[Monomial, int] = {}
    for term, c in e.terms.items():
        _accumulate(out, reduce_monomial(term.times(m), p), c, p)
    return RingElement(p, out)
