"""Request/response models: the wire schema for the service and the CLI output format.

Exact values travel as reduced `p/q` strings; a display-only decimal (6
places) accompanies them. Schema version 1.
"""

from __future__ import annotations

from decimal import Decimal, getcontext
from fractions import Fraction
from typing import Literal, Optional

from pydantic import BaseModel, Field

getcontext().prec = 50

SCHEMA_VERSION = 1


def frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def frac_decimal(x: Fraction) -> str:
    return str((Decimal(x.numerator) / Decimal(x.denominator)).quantize(Decimal("0.000001")))


class MetricsModel(BaseModel):
    transmission: list[int]
    eccentricity: list[int]
    proximity: str
    proximity_decimal: str
    remoteness: str
    remoteness_decimal: str
    radius: int
    diameter: int
    medians: list[int]
    centers: list[int]


class ClassicalBoundsModel(BaseModel):
    pi_upper: str
    pi_upper_holds: bool
    pi_upper_equal: bool
    pi_lower_equal: bool
    has_universal_vertex: bool
    is_path: bool
    is_cycle: bool
    rho_upper: str
    rho_upper_holds: bool
    rho_upper_equal: bool
    rad_upper_holds: bool


class EmbeddingModel(BaseModel):
    outer: list[int]
    chords: list[list[int]]


class BoundCheckModel(BaseModel):
    name: str
    value: str
    value_decimal: str
    observed: str
    holds: bool
    gap: str
    equal: bool
    # False when the theorem's precondition does not cover this graph (the
    # comparison is still reported as data)
    applicable: bool = True


class AnalyzeRequest(BaseModel):
    edges_text: str
    embedding_text: Optional[str] = None
    input_name: str = "inline"


class AnalysisOutput(BaseModel):
    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    input: str
    status: Literal["ok", "not_outerplanar", "not_biconnected"]
    status_detail: Optional[str] = None
    n: int
    m: int
    metrics: MetricsModel
    classical: ClassicalBoundsModel
    embedding: Optional[EmbeddingModel] = None
    q: Optional[int] = None
    outerplanar_bounds: Optional[list[BoundCheckModel]] = None

    model_config = {"populate_by_name": True}


class GenerateRequest(BaseModel):
    family: Literal["path", "cycle", "hnq", "hn3", "fan", "ladder"]
    n: int
    q: Optional[int] = None
    nearest: bool = False


class GenerateResponse(BaseModel):
    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    family: str
    n: int
    params: dict
    labels: list[str]
    edges_text: str
    embedding_text: Optional[str] = None
    note: Optional[str] = None

    model_config = {"populate_by_name": True}


class WitnessRequest(BaseModel):
    edges_text: str
    kind: Literal["proximity", "radius"]


class WitnessCertificateModel(BaseModel):
    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    kind: Literal["proximity", "radius"]
    vertex: int
    exact_value: int
    guaranteed_bound_times8: int
    holds: bool
    case_tag: str
    n: int
    k: int
    q: int
    p: list[int]
    ell: Optional[int] = None
    j: Optional[int] = None

    model_config = {"populate_by_name": True}


class BoundRequest(BaseModel):
    which: Literal["prox2c", "proxmop", "rho", "rad", "chordal"]
    n: int
    q: Optional[int] = None


class BoundResponse(BaseModel):
    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    which: str
    source: str
    n: int
    q: Optional[int] = None
    value: Optional[str] = None
    value_decimal: Optional[str] = None
    interval: Optional[list[int]] = None

    model_config = {"populate_by_name": True}


class EnumerateRequest(BaseModel):
    n: int
    max_face: Optional[int] = None
    mops: bool = False
    canonical: bool = False
    out: Literal["counts", "graphs"] = "counts"
    graph_limit: int = 100_000


class EnumerateResponse(BaseModel):
    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    n: int
    max_face: Optional[int] = None
    mops: bool
    canonical: bool
    enumerated_count: int
    recursion_count: Optional[int] = None
    catalan_count: Optional[int] = None
    counts_match: Optional[bool] = None
    graphs: Optional[list[list[list[int]]]] = None

    model_config = {"populate_by_name": True}


class CheckResultModel(BaseModel):
    checked: int
    violations: list[list[list[int]]]


class VerifyRequest(BaseModel):
    n: int
    max_face: Optional[int] = None
    mode: Literal["full", "radius"] = "full"
    radius_cap: int = 14
    workers: int = 1


class VerificationSummaryModel(BaseModel):
    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    n: int
    mode: str
    max_face: Optional[int] = None
    radius_cap: int
    workers: int
    labeled_count: int
    canonical_count: Optional[int] = None
    checks: dict[str, CheckResultModel]
    extremal_pi: Optional[dict] = None
    extremal_rad: Optional[dict] = None
    qn: Optional[int] = None
    qn_failing_witness: Optional[dict] = None
    all_ok: bool

    model_config = {"populate_by_name": True}


class QnRequest(BaseModel):
    n: int
    workers: int = 1


class QnReportModel(BaseModel):
    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    n: int
    qn: int
    rad_bound: int
    graphs_scanned: int
    pass_count_at_qn: int
    failing_witness: Optional[dict] = None
    lower_bracket: int
    upper_bracket: str
    lower_bracket_ok: bool
    upper_bracket_ok: bool

    model_config = {"populate_by_name": True}
