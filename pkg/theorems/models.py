"""
Result models for theorem predicates and witness certificates
"""
from typing import Dict, List, Literal, Optional, Union
from pydantic import BaseModel, Field

ClaimKind = Literal["symbolic", "ordinary", "ideal"]
CheckStatus = Literal["agrees", "disagrees", "inconclusive"]
Finding = Union[bool, int, str, List[int], None]


class MembershipClaim(BaseModel):
    """Membership in I^(s) (symbolic), I^s (ordinary) or I itself (ideal)"""
    kind: ClaimKind
    degree: int = Field(default=1, ge=1)

    def describe(self) -> str:
        if self.kind == "ideal":
            return "I"
        if self.kind == "symbolic":
            return f"I^({self.degree})"
        return f"I^{self.degree}"


class WitnessReport(BaseModel):
    """A monomial claimed to separate two powers, with its re-check result"""
    construction: str
    monomial: str
    exponents: List[int]
    claimed_in: MembershipClaim
    claimed_not_in: MembershipClaim
    verified: bool
    note: str = ""

    def summary(self) -> str:
        mark = "verified" if self.verified else "UNVERIFIED"
        return (
            f"{self.monomial} in {self.claimed_in.describe()} \\ "
            f"{self.claimed_not_in.describe()} [{mark}]"
        )


class CrossCheck(BaseModel):
    """A prediction compared with direct computation"""
    claim: str
    predicted: bool
    observed: Optional[bool] = None
    status: CheckStatus
    bounded: bool = False
    s_max: Optional[int] = None
    failure_degree: Optional[int] = None
    witness: Optional[str] = None
    detail: str = ""


class Verdict(BaseModel):
    """
    Outcome of evaluating one theorem or proposition on an ideal

    `predictions` maps claim names (simis, no_embedded_primes, ...) to the
    value the statement predicts; an inapplicable verdict predicts nothing.
    """
    predicate: str
    applicable: bool
    hypotheses: Dict[str, bool] = Field(default_factory=dict)
    predictions: Dict[str, bool] = Field(default_factory=dict)
    findings: Dict[str, Finding] = Field(default_factory=dict)
    certificates: List[WitnessReport] = Field(default_factory=list)
    cross_checks: List[CrossCheck] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)

    @property
    def discrepancies(self) -> List[CrossCheck]:
        return [c for c in self.cross_checks if c.status == "disagrees"]

    @property
    def unverified(self) -> List[WitnessReport]:
        return [w for w in self.certificates if not w.verified]
