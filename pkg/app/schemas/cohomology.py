from typing import Dict, Literal, Optional, Union

from pydantic import BaseModel, field_validator

INDETERMINATE = "indeterminate"

Entry = Union[int, Literal["indeterminate"]]


class CohomologyTable(BaseModel):
    space: str
    bundle: str
    dimension: int
    dims: Dict[int, Entry]

    @field_validator("dims")
    def check_entries(cls, v):
        for j, value in v.items():
            if j < 0:
                raise ValueError(f"negative cohomological degree {j}")
            if value != INDETERMINATE and value < 0:
                raise ValueError(f"negative dimension at degree {j}")
        return v

    def get(self, j: int) -> Entry:
        """Dimension in degree j; absent degrees are 0."""
        return self.dims.get(j, 0)

    def is_determinate(self) -> bool:
        return all(value != INDETERMINATE for value in self.dims.values())

    def nonzero_degrees(self) -> list[int]:
        return sorted(j for j, value in self.dims.items() if value != 0)

    def is_zero(self) -> bool:
        return self.is_determinate() and not self.nonzero_degrees()

    def euler_characteristic(self) -> Optional[int]:
        if not self.is_determinate():
            return None
        return sum((-1) ** j * value for j, value in self.dims.items())

    def to_json_dict(self) -> dict:
        return {
            "space": self.space,
            "bundle": self.bundle,
            "dims": {str(j): self.dims[j] for j in sorted(self.dims)},
        }
