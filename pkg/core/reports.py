"""
Report Models

Pydantic models for every machine-readable output of the command line:
orbit tables, weak-order edge lists, basis expansions, localization reports
and verification suite reports. All of them serialize with
model_dump_json(indent=2).
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class OrbitRow(BaseModel):
    """One orbit closure and its representatives"""
    involution: str
    one_line: str
    length: int
    orbit_rank: int
    upsilon: str
    upsilon_k: Optional[str] = None
    schubert_expansion: Dict[str, str] = Field(default_factory=dict)
    grothendieck_expansion: Optional[Dict[str, str]] = None


class OrbitTable(BaseModel):
    pair: str
    size: int
    theory: str
    rows: List[OrbitRow]


class EdgeRecord(BaseModel):
    src: str
    dst: str
    label: int
    style: str


class GraphExport(BaseModel):
    """Weak-order edge list"""
    pair: str
    n: int
    nodes: List[str]
    edges: List[EdgeRecord]


class ExpansionReport(BaseModel):
    polynomial: str
    basis: str
    n: int
    terms: Dict[str, str]
    lines: List[str]
    specialization: Optional[Dict[str, str]] = None


class LocalizationReport(BaseModel):
    """Outcome of the closed-orbit restriction checks at every torus fixed point"""
    pair: str
    size: int
    checked: int = 0
    mirrored_pass: int = 0
    vanishing_pass: int = 0
    failures: List[Dict[str, str]] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


class SuiteReport(BaseModel):
    target: str
    passed: bool
    checks: int
    failures: List[str] = Field(default_factory=list)
    warnings: List[str] = Field(default_factory=list)
    duration_seconds: float = 0.0
    details: Dict[str, Any] = Field(default_factory=dict)
