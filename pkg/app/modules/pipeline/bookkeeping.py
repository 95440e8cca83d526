"""Degree bookkeeping for the line bundles of the construction.

Triples are degrees on P(V) x P(wedge^2 V^dual) x P(V^dual); the middle slot
is a formal label and never enters a computation on Y. Bundles on X carry an
extra O_pi twist.
"""
from app.modules.incidence_ring.monomials import Bidegree
from app.schemas.reports import BundleLabels, LineBundle


def _add(*triples: tuple[int, int, int]) -> tuple[int, int, int]:
    return tuple(sum(parts) for parts in zip(*triples))


def twist_chain(n: int, p: int) -> dict[str, LineBundle]:
    """Every bundle along the Serre duality reduction, built by adding degrees."""
    omega_Y = LineBundle(triple=(-n, 0, -n))
    # wedge^{n-1} F*G' = O(p, 0, p(n-2)); omega_{X/Y} adds O_pi(-(n-1))
    top_wedge = (p, 0, p * (n - 2))
    omega_X = LineBundle(triple=_add(top_wedge, omega_Y.triple), relative_twist=-n + 1)
    # L = O(1,0,1) (x) O_pi(n) on X; its middle slot becomes n through O_pi(1) = O(0,1,0)
    L = LineBundle(triple=(1, n, 1))
    L_omega = LineBundle(triple=_add((1, 0, 1), omega_X.triple), relative_twist=n + omega_X.relative_twist)
    # pushing O_pi(1) down gives F*G' = F*G (x) O(0,0,p)
    M = LineBundle(triple=_add(L_omega.triple, (0, 0, p)))
    return {
        "omega_Y": omega_Y,
        "omega_X": omega_X,
        "L": L,
        "L_tensor_omega_X": L_omega,
        "M": M,
        "M_twisted": LineBundle(triple=_add(M.triple, (0, 0, p))),
        "vanishing_bundle": LineBundle(triple=_add(M.triple, (-p, 0, 0))),
    }


def line_bundle_bookkeeping(n: int, p: int) -> BundleLabels:
    chain = twist_chain(n, p)

    def bidegree(name: str) -> Bidegree:
        a, _, b = chain[name].triple
        return Bidegree(a, b)

    return BundleLabels(
        n=n,
        p=p,
        dim_Y=2 * n - 1,
        dim_X=3 * n - 3,
        L=chain["L"].label,
        omega_Y=chain["omega_Y"].label,
        omega_X=chain["omega_X"].label,
        L_tensor_omega_X=chain["L_tensor_omega_X"].label,
        M=chain["M"].label,
        M_twisted=chain["M_twisted"].label,
        vanishing_bundle=chain["vanishing_bundle"].label,
        source_degree=bidegree("M"),
        target_degree=bidegree("M_twisted"),
        vanishing_degree=bidegree("vanishing_bundle"),
    )


def closed_form_degrees(n: int, p: int) -> dict[str, Bidegree]:
    """The same degrees written out directly, for the bookkeeping cross-check."""
    return {
        "M": Bidegree(p - n + 1, (p - 1) * (n - 1)),
        "M_twisted": Bidegree(p - n + 1, (p - 1) * (n - 1) + p),
        "vanishing_bundle": Bidegree(1 - n, (p - 1) * (n - 1)),
    }
