"""Verdict and path-step records shared by the classifier and the oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

NOT_ISOMORPHIC = "NotIsomorphic"
ADAMS = "Adams"
TYPE2 = "Type2"
COMPOSITE = "Composite"
UNKNOWN = "Unknown"

WITNESS_KINDS = (ADAMS, TYPE2, COMPOSITE)


@dataclass(frozen=True)
class Step:
    """One move in an isomorphism path: Adams(a) or Theta(r, t)."""

    kind: str
    a: Optional[int] = None
    r: Optional[int] = None
    t: Optional[int] = None

    @classmethod
    def adams(cls, a: int) -> Step:
        return cls("Adams", a=a)

    @classmethod
    def theta(cls, r: int, t: int) -> Step:
        return cls("Theta", r=r, t=t)

    def to_json(self) -> dict:
        if self.kind == "Adams":
            return {"kind": "Adams", "a": self.a}
        return {"kind": "Theta", "r": self.r, "t": self.t}

    @classmethod
    def from_json(cls, data: dict) -> Step:
        if data["kind"] == "Adams":
            return cls.adams(int(data["a"]))
        return cls.theta(int(data["r"]), int(data["t"]))

    def __str__(self) -> str:
        if self.kind == "Adams":
            return f"Adams({self.a})"
        return f"Theta({self.r},{self.t})"


@dataclass(frozen=True)
class IsoVerdict:
    kind: str
    witness: dict = field(default_factory=dict)
    path: tuple[Step, ...] = ()
    oracle_certificate: Optional[tuple[int, ...]] = None

    @property
    def isomorphic(self) -> Optional[bool]:
        if self.kind == NOT_ISOMORPHIC:
            return False
        if self.kind == UNKNOWN:
            return None
        return True

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "witness": dict(self.witness),
            "path": [s.to_json() for s in self.path],
            "oracle_certificate": list(self.oracle_certificate) if self.oracle_certificate is not None else None,
        }

    @classmethod
    def from_json(cls, data: dict) -> IsoVerdict:
        cert = data.get("oracle_certificate")
        return cls(
            kind=data["kind"],
            witness=dict(data.get("witness") or {}),
            path=tuple(Step.from_json(s) for s in data.get("path") or ()),
            oracle_certificate=tuple(cert) if cert is not None else None,
        )

    def __str__(self) -> str:
        if self.kind == ADAMS:
            return f"Adams({self.witness['a']})"
        if self.kind == TYPE2:
            return f"Type2(r={self.witness['r']}, t={self.witness['t']})"
        if self.kind == COMPOSITE:
            if self.path:
                return "Composite[" + ", ".join(map(str, self.path)) + "]"
            return "Composite[oracle certificate]"
        return self.kind
