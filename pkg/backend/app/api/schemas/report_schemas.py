from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field

VerdictStatus = Literal["pass", "fail", "resource_limit", "not_applicable", "info", "review"]


class VerdictModel(BaseModel):
    name: str
    status: VerdictStatus
    detail: Optional[str] = None


class InputEcho(BaseModel):
    source: str
    n: int = Field(ge=0)
    generators: List[str]
    names: Optional[List[str]] = None
    spec: Optional[Dict] = None
    power: Optional[int] = None


class InvariantsModel(BaseModel):
    generator_count: int
    degree: Optional[int] = None
    support: List[int]
    gcd: str
    squarefree: bool
    equigenerated: bool
    polymatroidal: bool
    matroidal: bool
    certifiable: bool
    exchange_witness: Optional[List[str]] = None
    cover_profile: Optional[List[int]] = None


class FactorModel(BaseModel):
    variables: List[int]
    generators: List[str]
    degree: Optional[int] = None


class GammaModel(BaseModel):
    vertices: List[int]
    edges: List[List[int]]
    components: List[List[int]]
    s: int
    complete: bool
    factorization_verified: Optional[bool] = None
    factorization_witness: Optional[str] = None
    factors: Optional[List[FactorModel]] = None


class AssPowerModel(BaseModel):
    k: int
    primes: List[List[int]]
    witnesses: Optional[Dict[str, str]] = None


class DepthPointModel(BaseModel):
    k: int
    depth: int
    method: Literal["socle", "betti", "monotone"]
    pd: Optional[int] = None


class ComponentDstabModel(BaseModel):
    variables: List[int]
    degree: int
    analytic_spread: int
    dstab: int


class DepthModel(BaseModel):
    depth: int
    pd: int
    field_prime: int
    lattice_size: int
    betti_totals: Dict[str, int]
    second_prime: Optional[int] = None
    discrepancy: Optional[bool] = None


class ExpectationModel(BaseModel):
    name: str
    expected: str
    observed: str
    status: VerdictStatus


class LedgerEntryModel(BaseModel):
    trial: int
    kind: Literal["violation", "conjecture_witness", "skipped", "degree4_review"]
    spec: Dict
    generators: List[str]
    detail: str


class LedgerModel(BaseModel):
    family: str
    trials: int
    seed: int
    examined: int
    skipped: int
    violations: int
    conjecture_witnesses: int
    completeness_checks: int = 0
    entries: List[LedgerEntryModel] = []


class Report(BaseModel):
    """Canonical report document; optional sections are omitted when absent."""

    schema_version: int
    engine_version: str
    command: str
    input: Optional[InputEcho] = None
    seed: Optional[int] = None
    mode: Optional[Literal["certified", "uncertified"]] = None
    invariants: Optional[InvariantsModel] = None
    gamma: Optional[GammaModel] = None
    analytic_spread: Optional[int] = None
    bound: Optional[int] = None
    ass_chain: Optional[List[AssPowerModel]] = None
    astab: Optional[int] = None
    dstab: Optional[int] = None
    dstab_method: Optional[Literal["components", "exact_depth"]] = None
    dstab_components: Optional[List[ComponentDstabModel]] = None
    depth: Optional[DepthModel] = None
    depth_sequence: Optional[List[DepthPointModel]] = None
    verdicts: List[VerdictModel] = []
    conjecture_counterexample: Optional[bool] = None
    expectations: Optional[List[ExpectationModel]] = None
    ledger: Optional[LedgerModel] = None
    timing: Optional[Dict[str, float]] = None

    @property
    def failed(self) -> bool:
        if any(v.status == "fail" for v in self.verdicts):
            return True
        if self.ledger is not None and self.ledger.violations:
            return True
        return any(e.status == "fail" for e in self.expectations or [])
