"""Schemas for the built-in invariant checks"""
from enum import Enum
from typing import Any, Dict, List

from pydantic import BaseModel, Field


class CheckKind(str, Enum):
    """One registered check per module"""
    AFFINE_BASE = "affine_base"
    INTEGRAL_SYSTEM = "integral_system"
    COXETER_W = "coxeter_w"
    KL_POLY = "kl_poly"
    CHAR_ENGINE = "char_engine"
    SHAPOVALOV_ORACLE = "shapovalov_oracle"


class CheckSettings(BaseModel):
    """Defaults for check parameters the caller leaves out"""
    depth: int = 4
    max_length: int = 5
    oracle_height: int = 2
    types: List[str] = Field(default_factory=lambda: ['A1~'])


class CheckResult(BaseModel):
    """Outcome of one invariant check"""
    kind: CheckKind
    passed: bool
    cases: int = 0
    failures: List[str] = Field(default_factory=list)
    details: Dict[str, Any] = Field(default_factory=dict)
    seconds: float = 0.0

    model_config = {
        "from_attributes": True
    }


class SelftestReport(BaseModel):
    passed: bool
    results: List[CheckResult] = Field(default_factory=list)

    @property
    def failed_kinds(self) -> List[str]:
        return [r.kind.value for r in self.results if not r.passed]
