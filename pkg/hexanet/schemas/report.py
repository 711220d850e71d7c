from pydantic import BaseModel, Field
from typing import List, Optional

from ..services.minors import FaceConvention
from ..services.scalars import Ring


class CheckResult(BaseModel):
    name: str = Field(..., min_length=1)
    passed: bool
    detail: Optional[str] = None


class IdentityReport(BaseModel):
    n: int = Field(ge=1)
    ring: Ring
    checks: List[CheckResult] = []

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]


class LaurentEntrySchema(BaseModel):
    n: int = Field(ge=1)
    i: int = Field(ge=1)
    j: int = Field(ge=1)
    convention: FaceConvention = FaceConvention.LOWER
    polynomial: str
    terms: int = Field(ge=0)
    tilings: Optional[int] = Field(None, ge=0)

    class Config:
        from_attributes = True
