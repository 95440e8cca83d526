"""Line bundle cohomology on P^n, on P^n x P^n, and on the incidence divisor Y.

Y is cut out of P^n x P^n by a section of O(1,1), so for every twist

    0 -> O(a-1, b-1) -> O(a, b) -> O_Y(a, b) -> 0

and H^j(Y, O(a,0,b)) is read off the long exact sequence. Writing A_j, B_j
for the two product terms and f_j : A_j -> B_j for multiplication by the
section, dim H^j(Y) = (B_j - rank f_j) + (A_{j+1} - rank f_{j+1}). The
rank of f_j is known when either side vanishes, in degree 0 (the section is
a non-zero-divisor, so f_0 is injective) and in degree 2n (Serre dual of
f_0, so surjective). Any other case is reported as indeterminate.
"""
import logging
from typing import Optional

from app.core.errors import CrossCheckFailed, InvalidInput
from app.modules.incidence_ring.monomials import Bidegree, component_dimension
from app.schemas.cohomology import INDETERMINATE, CohomologyTable
from app.utils.combinatorics import binomial

logger = logging.getLogger(__name__)


def bott_h(n: int, d: int, j: int) -> int:
    """dim H^j(P^n, O(d))."""
    if not 0 <= j <= n:
        raise InvalidInput(f"degree {j} outside 0..{n}")
    if j == 0 and d >= 0:
        return binomial(d + n, n)
    if j == n and d <= -n - 1:
        return binomial(-d - 1, n)
    return 0


def product_h(n: int, d: Bidegree, j: int) -> int:
    """dim H^j(P^n x P^n, O(a, b)) by the Kuenneth formula."""
    if not 0 <= j <= 2 * n:
        raise InvalidInput(f"degree {j} outside 0..{2 * n}")
    a, b = d
    return sum(bott_h(n, a, r) * bott_h(n, b, j - r) for r in range(max(0, j - n), min(j, n) + 1))


def pn_table(n: int, d: int) -> CohomologyTable:
    return CohomologyTable(
        space=f"P^{n}", bundle=f"O({d})", dimension=n,
        dims={j: bott_h(n, d, j) for j in range(n + 1)},
    )


def product_table(n: int, d: Bidegree) -> CohomologyTable:
    d = Bidegree(*d)
    return CohomologyTable(
        space=f"P^{n} x P^{n}", bundle=f"O({d.a},{d.b})", dimension=2 * n,
        dims={j: product_h(n, d, j) for j in range(2 * n + 1)},
    )


def _section_map_rank(n: int, j: int, source: int, target: int) -> Optional[int]:
    """Rank of f_j : H^j(O(a-1,b-1)) -> H^j(O(a,b)), or None when it is not forced."""
    if source == 0 or target == 0:
        return 0
    if j == 0:
        return source
    if j == 2 * n:
        return target
    return None


def y_cohomology(n: int, d: Bidegree) -> CohomologyTable:
    """Cohomology table of O(a,0,b) on the incidence divisor Y (dimension 2n-1)."""
    d = Bidegree(*d)
    twisted = d.shift(-1, -1)
    top = 2 * n
    source = [product_h(n, twisted, j) for j in range(top + 1)] + [0]
    target = [product_h(n, d, j) for j in range(top + 1)] + [0]
    ranks = [_section_map_rank(n, j, source[j], target[j]) for j in range(top + 1)] + [0]

    dims: dict = {}
    for j in range(top):
        if ranks[j] is None or ranks[j + 1] is None:
            dims[j] = INDETERMINATE
            logger.debug("H^%s(Y, %s) left indeterminate for n=%s", j, d.label(), n)
            continue
        dims[j] = (target[j] - ranks[j]) + (source[j + 1] - ranks[j + 1])

    table = CohomologyTable(space=f"Y in P^{n} x P^{n}", bundle=d.label(), dimension=top - 1, dims=dims)
    if d.a >= 0 and d.b >= 0 and dims[0] != component_dimension(n, d):
        # both sides are closed formulas; a mismatch means one of them is wrong
        raise CrossCheckFailed(
            f"H^0(Y, {d.label()}) = {dims[0]} disagrees with the ring component "
            f"dimension {component_dimension(n, d)}"
        )
    return table


def scale_table(table: CohomologyTable, factor: int, bundle: str) -> CohomologyTable:
    """Table of a direct sum of ``factor`` copies, e.g. V^dual (x) M with factor n+1."""
    dims = {
        j: (value if value == INDETERMINATE else factor * value)
        for j, value in table.dims.items()
    }
    return CohomologyTable(space=table.space, bundle=bundle, dimension=table.dimension, dims=dims)


def euler_characteristic(table: CohomologyTable) -> Optional[int]:
    return table.euler_characteristic()
