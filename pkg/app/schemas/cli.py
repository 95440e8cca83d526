from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, field_validator, model_validator

Command = Literal["verify", "sweep", "cohomology", "dump"]
OutputFormat = Literal["json", "csv", "text"]


class CliConfig(BaseModel):
    command: Command
    n: Optional[int] = None
    p: Optional[int] = None
    n_min: Optional[int] = None
    n_max: Optional[int] = None
    p_max: Optional[int] = None
    a: Optional[int] = None
    b: Optional[int] = None
    space: Literal["y", "product", "pn"] = "y"
    format: OutputFormat = "text"
    budget: Optional[int] = None
    # None defers to KODAIRA_ALLOW_SMALL_P
    allow_small_p: Optional[bool] = None
    out: Optional[Path] = None
    dump_matrix: Optional[Path] = None
    verbose: bool = False

    @field_validator("budget")
    def budget_positive(cls, v):
        if v is not None and v <= 0:
            raise ValueError("budget must be a positive number of entries")
        return v

    @model_validator(mode="after")
    def check_required(self):
        # an inverted --n-min/--n-max range is allowed and sweeps nothing
        if self.command == "dump" and self.out is None:
            raise ValueError("dump needs --out PATH")
        return self
