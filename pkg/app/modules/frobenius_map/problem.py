import logging
from typing import Optional

from pydantic import BaseModel, ConfigDict, model_validator

from app.core.config import get_settings
from app.core.errors import InvalidInput
from app.modules.fp_linalg.field import check_modulus
from app.modules.incidence_ring.monomials import Bidegree, Monomial

logger = logging.getLogger(__name__)


class FrobeniusProblem(BaseModel):
    """The map A : V^dual (x) H^0(Y, M) -> H^0(Y, M (x) O(0,0,p)) for one (n, p).

    M = O(p-n+1, 0, (p-1)(n-1)); A multiplies the i-th summand by Y_i^p.
    ``exploratory`` admits p < n-1, where the geometric statement is not claimed.
    """

    model_config = ConfigDict(frozen=True)

    n: int
    p: int
    exploratory: bool = False

    @model_validator(mode="after")
    def check_family(self):
        if self.n < 3:
            raise InvalidInput(f"n must be ≥ 3, got {self.n}")
        check_modulus(self.p)
        if self.p < self.n - 1 and not self.exploratory:
            raise InvalidInput(f"p must be ≥ n−1 (= {self.n - 1})")
        return self

    @classmethod
    def create(cls, n: int, p: int, allow_small_p: Optional[bool] = None) -> "FrobeniusProblem":
        exploratory = get_settings().ALLOW_SMALL_P if allow_small_p is None else allow_small_p
        return cls(n=n, p=p, exploratory=exploratory)

    @property
    def a(self) -> int:
        return self.p + 1 - self.n

    @property
    def source_degree(self) -> Bidegree:
        return Bidegree(self.a, (self.p - 1) * (self.n - 1))

    @property
    def target_degree(self) -> Bidegree:
        return self.source_degree.shift(0, self.p)

    @property
    def below_bound(self) -> bool:
        """True for the exploratory range p < n-1, where M has no sections."""
        return self.a < 0

    @property
    def pure_y(self) -> bool:
        """p = n-1: both components are pure Y-degree and A never needs reduction."""
        return self.a == 0


def witness_monomial(prob: FrobeniusProblem) -> Optional[Monomial]:
    """t = Xn^(p+1-n) * Y0 * Y1^(p-1) * ... * Yn^(p-1); undefined below the bound."""
    if prob.below_bound:
        return None
    n, p = prob.n, prob.p
    xexp = (0,) * n + (prob.a,)
    yexp = (1,) + (p - 1,) * n
    return Monomial(xexp, yexp)
