"""The command-line request and its validation"""
from enum import Enum
from typing import Optional

import click
from pydantic import BaseModel, Field, ValidationError, model_validator

from app.main.config import Config
from app.main.model.cartan import AffineCartanData
from app.main.model.weight import Weight
from app.main.service.cartan_service import get_cartan
from app.main.util.exceptions import DepthExceeded, KLCharacterError, WeightSyntaxError


class Subcommand(str, Enum):
    INTEGRAL = "integral"
    CHAR = "char"
    KL = "kl"
    DECOMP = "decomp"
    ORACLE = "oracle"
    SELFTEST = "selftest"


class Request(BaseModel):
    """One CLI invocation; the weight string is checked against the grammar of its type"""
    subcommand: Subcommand
    cartan_type: str = Field(default="A1~")
    weight: Optional[str] = None
    depth: int = Field(default=Config.DEFAULT_DEPTH, ge=0)
    max_depth: int = Field(default=Config.MAX_DEPTH, ge=0)
    json_output: bool = False
    cache_dir: Optional[str] = None

    @model_validator(mode="after")
    def check_weight(self) -> "Request":
        if self.weight is not None:
            self.parsed_weight()
        return self

    def cartan(self) -> AffineCartanData:
        return get_cartan(self.cartan_type)

    def parsed_weight(self) -> Weight:
        if self.weight is None:
            raise WeightSyntaxError("A weight is required")
        return Weight.parse(self.weight, self.cartan().rank)

    def checked_depth(self) -> int:
        if self.depth > self.max_depth:
            raise DepthExceeded(f"Depth {self.depth} exceeds the maximum {self.max_depth}")
        return self.depth


def build_request(**values) -> Request:
    """Request from click options.

    A malformed weight is a usage error; other domain errors raised while
    validating (an unknown Cartan type) keep their type.
    """
    ctx = click.get_current_context(silent=True)
    try:
        return Request(**values)
    except ValidationError as e:
        for error in e.errors():
            cause = (error.get("ctx") or {}).get("error")
            if isinstance(cause, WeightSyntaxError):
                raise click.BadParameter(cause.message, ctx=ctx, param_hint="'--weight'")
            if isinstance(cause, KLCharacterError):
                raise cause
        raise click.UsageError(str(e), ctx=ctx)
