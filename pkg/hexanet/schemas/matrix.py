from pydantic import BaseModel, Field
from typing import List

from ..services.minors import ExactMatrix
from ..services.scalars import Ring, format_scalar, parse_scalar


class MatrixSchema(BaseModel):
    n: int = Field(ge=1)
    ring: Ring = Ring.RAT
    entries: List[List[str]] = Field(..., min_length=1)

    class Config:
        from_attributes = True

    @classmethod
    def from_matrix(cls, m: ExactMatrix) -> "MatrixSchema":
        return cls(n=m.n, ring=m.ring, entries=[[format_scalar(x) for x in row] for row in m.entries])

    def to_matrix(self) -> ExactMatrix:
        if len(self.entries) != self.n or any(len(row) != self.n for row in self.entries):
            raise ValueError(f"entries do not form a {self.n}x{self.n} matrix")
        return ExactMatrix.from_rows([[parse_scalar(x, self.ring) for x in row] for row in self.entries], self.ring)
