"""Pydantic request/response models for the HTTP API.

Every response carries the report schema version and the library version so
archived reports stay interpretable.
"""
from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from .. import SCHEMA_VERSION, __version__


class IdealRequest(BaseModel):
    ideal: str
    vars: Optional[list[str]] = None


class LocalizeRequest(IdealRequest):
    at: list[str]


class VerifyRequest(IdealRequest):
    bound: Optional[list[int]] = None
    cap: int = 10**6


class GraphRequest(BaseModel):
    graph: str
    dot: bool = False


class SweepRequest(BaseModel):
    family: Literal["xy", "patterns"] = "xy"
    max_exp: int = 5
    max_param: int = 3
    seed: int = 0
    rows: bool = True


class ReportModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(
        default=SCHEMA_VERSION, validation_alias="schema", serialization_alias="schema"
    )
    version: str = __version__


class ComponentOut(BaseModel):
    radical: list[str]
    primary: list[str]


class DecomposeResponse(ReportModel):
    ideal: str
    components: list[ComponentOut]
    irreducible: list[list[str]]


class HeightResponse(ReportModel):
    ideal: str
    height: int


class PolarizeResponse(ReportModel):
    ideal: str
    polarized: str
    polarized_vars: list[str]
    var_map: dict[str, str]


class DualResponse(ReportModel):
    ideal: str
    dual: str


class LocalizeResponse(ReportModel):
    ideal: str
    at: list[str]
    localization: str


class GraphResponse(ReportModel):
    ideal: str
    graph_vertices: list[str]
    graph_edges: list[list[str]]
    intersection_graph_vertices: list[str]
    intersection_graph_edges: list[list[str]]
    cochordal: bool
    certificate: list[str]
    predicted_cohen_macaulay: bool
    dot: Optional[str] = None


class IsCmResponse(ReportModel):
    ideal: str
    height: int
    projective_dimension: int
    cohen_macaulay: bool


class BettiEntryOut(BaseModel):
    i: int
    multidegree: list[int]
    value: int


class BettiResponse(ReportModel):
    ideal: str
    module_entries: list[BettiEntryOut]
    ideal_totals: list[int]
    quotient_totals: list[int]
    projective_dimension: int


class MatrixEntryOut(BaseModel):
    row: int
    col: int
    coeff: int
    monomial: str


class HbMatrixResponse(ReportModel):
    ideal: str
    rows: int
    cols: int
    entries: list[MatrixEntryOut]
    row_degrees: list[str]
    col_degrees: list[str]
    pretty: str


class TraceResponse(ReportModel):
    ideal: str
    mu: int
    hb_matrix: list[MatrixEntryOut]
    trace_generators: list[str]
    basis: str
    proven: bool
    is_cohen_macaulay: bool
    is_gorenstein: bool
    is_nearly_gorenstein: bool
    is_generically_gorenstein: bool


class ClassificationOut(BaseModel):
    case: str
    witness: Optional[dict] = None
    ambient_excess_vars: list[str]
    nearly_gorenstein: bool


class ClassifyResponse(ReportModel):
    ideal: str
    classification: ClassificationOut
    trace_nearly_gorenstein: Optional[bool] = None
    trace_basis: Optional[str] = None
    consistent: Optional[bool] = None
    note: Optional[str] = None


class VerifyResponse(ReportModel):
    statement: str
    bound: list[int]
    verdict: str
    witness: Optional[dict] = None
    details: dict = Field(default_factory=dict)


class SweepResponse(ReportModel):
    family: str
    count: int
    mismatch_count: int
    mismatches: list[dict]
    rows: list[dict] = Field(default_factory=list)


class ErrorBody(BaseModel):
    kind: Literal["parse", "domain", "resource", "invariant", "internal"]
    message: str


class ErrorResponse(BaseModel):
    error: ErrorBody
