"""
Forbidden-pattern schemas
A ForbiddenSpec is a set of paths of order l, cycles of order l and
"some cycle of order at least l" patterns, with the textual CLI syntax
"P5,C6,C>=6"
"""

import re
from typing import Annotated, Literal, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

_TOKEN = re.compile(r"^(P|C>=|C)(\d+)$")


class PathOrder(BaseModel):
    """P_l as a subgraph"""
    model_config = ConfigDict(frozen=True)

    kind: Literal["path"] = "path"
    l: int = Field(ge=2, description="Number of vertices on the path")

    def token(self) -> str:
        return f"P{self.l}"


class CycleOrder(BaseModel):
    """C_l as a subgraph, exactly l vertices"""
    model_config = ConfigDict(frozen=True)

    kind: Literal["cycle"] = "cycle"
    l: int = Field(ge=3, description="Number of vertices on the cycle")

    def token(self) -> str:
        return f"C{self.l}"


class CycleAtLeast(BaseModel):
    """Some C_p with p >= l as a subgraph"""
    model_config = ConfigDict(frozen=True)

    kind: Literal["cycle-at-least"] = "cycle-at-least"
    l: int = Field(ge=3, description="Smallest forbidden cycle order")

    def token(self) -> str:
        return f"C>={self.l}"


Pattern = Annotated[Union[PathOrder, CycleOrder, CycleAtLeast], Field(discriminator="kind")]

_RANK = {"path": 0, "cycle": 1, "cycle-at-least": 2}


def parse_pattern(token: str) -> Union[PathOrder, CycleOrder, CycleAtLeast]:
    """
    Parse one token: "P5", "C6" or "C>=6" (case-insensitive)
    """
    match = _TOKEN.match(token.strip().upper().replace(" ", ""))
    if not match:
        raise ValueError(f"invalid pattern token {token!r}; expected P<l>, C<l> or C>=<l>")
    prefix, value = match.group(1), int(match.group(2))
    if prefix == "P":
        return PathOrder(l=value)
    if prefix == "C":
        return CycleOrder(l=value)
    return CycleAtLeast(l=value)


class ForbiddenSpec(BaseModel):
    """
    Set of forbidden patterns; stored deduplicated in a fixed order so equal
    sets compare, hash and serialize identically
    """
    model_config = ConfigDict(frozen=True)

    patterns: Tuple[Pattern, ...] = Field(
        default=(),
        description="Forbidden paths and cycles",
        examples=[[{"kind": "path", "l": 4}]]
    )

    @field_validator('patterns')
    @classmethod
    def normalize(cls, v):
        unique = {(_RANK[p.kind], p.l): p for p in v}
        return tuple(unique[key] for key in sorted(unique))

    @classmethod
    def parse(cls, text: str) -> "ForbiddenSpec":
        """
        Parse comma-separated tokens, e.g. "P5,C6,C>=6"
        """
        tokens = [t for t in text.split(",") if t.strip()]
        return cls(patterns=tuple(parse_pattern(t) for t in tokens))

    @classmethod
    def of(cls, *patterns) -> "ForbiddenSpec":
        return cls(patterns=tuple(patterns))

    def token(self) -> str:
        return ",".join(p.token() for p in self.patterns)

    def __str__(self) -> str:
        return self.token() or "(none)"
