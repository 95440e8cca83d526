from datetime import datetime
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel

CheckStatus = Literal["pass", "fail", "skipped"]


class LineBundle(BaseModel):
    # degrees on P(V) x P(wedge^2 V^dual) x P(V^dual), plus an optional O_pi twist on X
    triple: tuple[int, int, int]
    relative_twist: Optional[int] = None

    @property
    def label(self) -> str:
        a, m, b = self.triple
        text = f"O({a},{m},{b})"
        if self.relative_twist is not None:
            text += f"⊗O_π({self.relative_twist})"
        return text


class BundleLabels(BaseModel):
    n: int
    p: int
    dim_Y: int
    dim_X: int
    L: str
    omega_Y: str
    omega_X: str
    L_tensor_omega_X: str
    M: str
    M_twisted: str
    vanishing_bundle: str
    source_degree: tuple[int, int]
    target_degree: tuple[int, int]
    vanishing_degree: tuple[int, int]


class CheckResult(BaseModel):
    name: str
    status: CheckStatus
    detail: str = ""


class MatrixShape(BaseModel):
    rows: int
    cols: int


class VerificationReport(BaseModel):
    n: int
    p: int
    dim_X: int
    exploratory: bool = False
    bundles: Optional[BundleLabels] = None
    matrix: Optional[MatrixShape] = None
    rank: Optional[int] = None
    corank: Optional[int] = None
    kernel: Optional[int] = None
    h_table: Dict[int, int] = {}
    witness: Optional[str] = None
    witness_in_image: Optional[bool] = None
    cokernel_representatives: List[str] = []
    checks: List[CheckResult] = []
    warnings: List[str] = []
    error: Optional[str] = None
    generated_at: datetime

    def check(self, name: str) -> Optional[CheckResult]:
        for result in self.checks:
            if result.name == name:
                return result
        return None

    @property
    def failed_checks(self) -> List[CheckResult]:
        return [c for c in self.checks if c.status == "fail"]

    @property
    def checks_passed(self) -> bool:
        return self.error is None and not self.failed_checks


class SweepRow(BaseModel):
    n: int
    p: int
    rows: Optional[int] = None
    cols: Optional[int] = None
    rank: Optional[int] = None
    corank: Optional[int] = None
    kernel: Optional[int] = None
    witness_in_image: Optional[bool] = None
    checks_passed: bool

    @classmethod
    def from_report(cls, report: VerificationReport) -> "SweepRow":
        return cls(
            n=report.n,
            p=report.p,
            rows=report.matrix.rows if report.matrix else None,
            cols=report.matrix.cols if report.matrix else None,
            rank=report.rank,
            corank=report.corank,
            kernel=report.kernel,
            witness_in_image=report.witness_in_image,
            checks_passed=report.checks_passed,
        )


SWEEP_COLUMNS = list(SweepRow.model_fields)
