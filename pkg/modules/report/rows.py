from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Tuple

from modules.ehrhart.closed_forms import Family

ROW_FIELDS = ("kind", "polytope", "d", "k", "count", "boundary", "source", "check", "status", "detail")

_FAMILY_ORDER = {family.value: idx for idx, family in enumerate(Family)}


class Source(Enum):
    FORMULA = "formula"
    ENUMERATION = "enumeration"


def format_float(x: float) -> str:
    """12 significant digits; -0 prints as 0."""
    return f"{x + 0.0:.12g}"


@dataclass(frozen=True)
class ReportRow:
    polytope: str
    d: int
    k: int
    count: int
    boundary: int
    source: Source

    def sort_key(self) -> Tuple:
        return (_FAMILY_ORDER.get(self.polytope, len(_FAMILY_ORDER)), self.polytope, self.d, self.k, self.source.value)

    def as_record(self) -> Dict[str, str]:
        # counts stay decimal strings so no consumer truncates them to 53 bits
        return {
            "kind": "count",
            "polytope": self.polytope,
            "d": str(self.d),
            "k": str(self.k),
            "count": str(self.count),
            "boundary": str(self.boundary),
            "source": self.source.value,
            "check": "",
            "status": "",
            "detail": "",
        }

    def describe(self) -> str:
        return (
            f"{self.polytope} d={self.d} k={self.k} count={self.count} "
            f"boundary={self.boundary} source={self.source.value}"
        )


@dataclass(frozen=True)
class VerdictRow:
    check: str
    polytope: str
    d: int
    k: Optional[int]
    passed: bool
    detail: str = ""

    def sort_key(self) -> Tuple:
        return (
            self.check,
            _FAMILY_ORDER.get(self.polytope, len(_FAMILY_ORDER)),
            self.polytope,
            self.d,
            -1 if self.k is None else self.k,
            self.detail,
        )

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def as_record(self) -> Dict[str, str]:
        return {
            "kind": "verdict",
            "polytope": self.polytope,
            "d": str(self.d),
            "k": "" if self.k is None else str(self.k),
            "count": "",
            "boundary": "",
            "source": "",
            "check": self.check,
            "status": self.status,
            "detail": self.detail,
        }

    def describe(self) -> str:
        k = "" if self.k is None else f" k={self.k}"
        return f"{self.status} {self.check} {self.polytope} d={self.d}{k} {self.detail}".rstrip()
