"""Pydantic request/response models for the service API.

The JSON shapes of elements and partitions follow the package's wire formats
(see wreathmarks.serialize); "class" is a reserved word in Python so the
models alias it.
"""

from __future__ import annotations

from typing import List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

Rational = Union[int, str]


class PartModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)
    class_name: str = Field(alias="class")
    size: int
    mult: int


class PartitionModel(BaseModel):
    parts: List[PartModel] = Field(default_factory=list)


class BurnsideCoordModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)
    class_name: str = Field(alias="class")
    coeff: int


class BurnsideElementModel(BaseModel):
    group: Optional[str] = None
    coords: List[BurnsideCoordModel] = Field(default_factory=list)


class AACoordModel(BaseModel):
    partition: PartitionModel
    coeff: int


class AAElementModel(BaseModel):
    group: Optional[str] = None
    n: int
    coords: List[AACoordModel] = Field(default_factory=list)


class ParksValueModel(BaseModel):
    partition: PartitionModel
    value: Rational


class ParksVectorModel(BaseModel):
    group: str
    n: int
    values: List[ParksValueModel] = Field(default_factory=list)


class CapsMixin(BaseModel):
    cap_elements: int = Field(default=10_000, gt=0)
    cap_subgroups: int = Field(default=400, gt=0)


class MarksRequest(CapsMixin):
    group: str


class MarksResponse(BaseModel):
    group: str
    classes: List[str]
    orders: List[int]
    matrix: List[List[int]]


class PartsRequest(CapsMixin):
    group: str
    n: int = Field(ge=0)


class PartsResponse(BaseModel):
    group: str
    n: int
    count: int
    partitions: List[PartitionModel]


class PowerRequest(CapsMixin):
    group: Optional[str] = None
    element: BurnsideElementModel
    n: int = Field(ge=0)


class ParksCharRequest(CapsMixin):
    element: AAElementModel
    group: Optional[str] = None


class StarRequest(CapsMixin):
    x: AAElementModel
    y: AAElementModel
    group: Optional[str] = None


class InducedMapRequest(CapsMixin):
    model_config = ConfigDict(populate_by_name=True)
    kind: Literal["restriction", "transfer", "fw", "norm"]
    from_spec: Optional[str] = Field(default=None, alias="from")
    to_spec: str = Field(alias="to")
    n: int = Field(default=1, ge=0)


class MatrixEntryModel(BaseModel):
    target: PartitionModel
    source: PartitionModel
    value: Rational


class InducedMapResponse(BaseModel):
    kind: str
    from_group: str
    to_group: str
    n: int
    entries: List[MatrixEntryModel]


class NormEntryModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)
    class_name: str = Field(alias="class")
    partition: PartitionModel


class NormMapResponse(BaseModel):
    kind: Literal["norm"] = "norm"
    from_group: str
    to_group: str
    n: int
    entries: List[NormEntryModel]


class VerifyRequest(CapsMixin):
    suite: str
    group: str = "C2"
    n: int = Field(default=2, ge=0)
    oracle: bool = True


class VerifyCaseModel(BaseModel):
    name: str
    status: Literal["pass", "fail", "skip", "info"]
    detail: str = ""


class VerifyResponse(BaseModel):
    suite: str
    group: str
    n: int
    ok: bool
    counts: dict
    cases: List[VerifyCaseModel]


class HealthResponse(BaseModel):
    status: str
    name: str
    version: str
