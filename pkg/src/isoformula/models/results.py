"""
isoformula.models.results
-------------------------
Results of the constructions and deciders, and the JSON payloads the CLI
emits for them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from .arrows import TypedRelArrow
from .canonical import RewriteTrace
from .formula import Formula


@dataclass(frozen=True)
class IsoWitness:
    """
    Mutually inverse occurrence relations f: A -> B and g: B -> A.

    The flags record whether the composites were found equal to the identity
    relations on A and on B.
    """

    f: TypedRelArrow
    g: TypedRelArrow
    gf_is_identity: bool
    fg_is_identity: bool

    @property
    def verified(self) -> bool:
        return self.gf_is_identity and self.fg_is_identity


@dataclass(frozen=True)
class IsoVerdict:
    """Answer of an isomorphism decider, with whatever evidence it produced."""

    notion: str
    is_iso: bool
    reason: Optional[str] = None
    witness: Optional[IsoWitness] = None
    trace: Optional[RewriteTrace] = None
    bijection: Optional[TypedRelArrow] = None
    system: Optional[str] = None


@dataclass(frozen=True)
class GeneralizedPair:
    """A pair relabeled so that its linking is perfect.

    ``substitution`` maps each fresh letter back to the letter it replaced, so
    applying it to ``a1`` and ``b1`` gives the original pair.
    """

    a1: Formula
    b1: Formula
    substitution: Dict[str, str] = field(hash=False)


@dataclass(frozen=True)
class DiversifiedReport:
    """Generalization of a bijective arrow together with the checks made on it."""

    pair: GeneralizedPair
    a1_diversified: bool
    b1_diversified: bool
    # None when the inputs were not equivalent or the links did not match polarity
    equivalent: Optional[bool]


@dataclass(frozen=True)
class Extraction:
    """A = (p & A1) | A2, with the occurrence relations both ways."""

    a1: Formula
    a2: Formula
    target: Formula
    tau: TypedRelArrow
    sigma: TypedRelArrow


@dataclass(frozen=True)
class Implant:
    """B' = B with one occurrence q replaced by p & q, and p & B -> B'."""

    b_prime: Formula
    eta: TypedRelArrow


# ---- CLI payloads -----------------------------------------------------------


class WitnessPayload(BaseModel):
    """JSON form of an isomorphism witness."""

    f: List[List[int]] = Field(..., description="Pairs [s, t] of the arrow A -> B")
    g: List[List[int]] = Field(..., description="Pairs [s, t] of the arrow B -> A")
    gf_is_identity: bool = Field(..., description="g after f is the identity relation on A")
    fg_is_identity: bool = Field(..., description="f after g is the identity relation on B")

    @classmethod
    def from_witness(cls, witness: IsoWitness) -> WitnessPayload:
        return cls(
            f=[list(pair) for pair in witness.f.pairs()],
            g=[list(pair) for pair in witness.g.pairs()],
            gf_is_identity=witness.gf_is_identity,
            fg_is_identity=witness.fg_is_identity,
        )

    model_config = {
        "json_schema_extra": {
            "example": {"f": [[0, 1], [1, 0]], "g": [[0, 1], [1, 0]], "gf_is_identity": True, "fg_is_identity": True}
        }
    }


class CliResult(BaseModel):
    """Everything one CLI invocation reports in --json mode."""

    command: str = Field(..., description="Command that produced the result")
    inputs: List[str] = Field(default_factory=list, description="Formula and argument texts as given")
    verdict: Optional[str] = Field(None, description="yes/no style answer, when the command decides something")
    reason: Optional[str] = Field(None, description="Why the verdict is negative")
    canonical: Optional[str] = Field(None, description="Rendered canonical form or normal form")
    trace_len: Optional[int] = Field(None, description="Length of the rewrite trace")
    trace: Optional[List[Dict[str, Any]]] = Field(None, description="Rewrite steps {axiom, path, direction}")
    witness: Optional[WitnessPayload] = Field(None, description="Isomorphism witness")
    value: Optional[Any] = Field(None, description="Command-specific result value")
    verified: Optional[bool] = Field(None, description="Outcome of the construction's internal checks")
    diagnostics: List[str] = Field(default_factory=list, description="Additional notes")

    model_config = {
        "json_schema_extra": {
            "example": {
                "command": "iso",
                "inputs": ["p & q", "q & p"],
                "verdict": "iso",
                "witness": {
                    "f": [[0, 1], [1, 0]],
                    "g": [[0, 1], [1, 0]],
                    "gf_is_identity": True,
                    "fg_is_identity": True,
                },
            }
        }
    }
