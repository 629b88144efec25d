from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .errors import InvalidConfigError

SCHEMA_VERSION = 1

EXHAUSTIVE = "exhaustive"
BOUNDED = "bounded"
FORMULA = "formula"
CERTIFICATE = "certificate"
PROVENANCES = (EXHAUSTIVE, BOUNDED, FORMULA, CERTIFICATE)


@dataclass
class SearchConfig:
    trials: int = 10_000
    seed: int = 1
    report_every: int = 1_000

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise InvalidConfigError(
                f"trials must be positive, got {self.trials}"
            )
        if self.report_every < 0:
            raise InvalidConfigError(
                f"report_every must not be negative, got {self.report_every}"
            )


@dataclass
class DistanceClaim:
    """A distance value and how it was established.

    `exhaustive` values come from full projective enumeration,
    `bounded` ones from a syndrome search that proved every smaller
    weight absent, `formula` ones are only cited and `certificate`
    ones pair a cited value with a verified codeword of that weight.
    """

    value: int
    provenance: str
    detail: Optional[str] = None
    """Codeword attaining the value, as field element integers."""
    certificate: Optional[List[int]] = None

    def __post_init__(self) -> None:
        if self.provenance not in PROVENANCES:
            raise InvalidConfigError(
                f"unknown provenance {self.provenance!r}"
            )

    @property
    def verified(self) -> bool:
        return self.provenance in (EXHAUSTIVE, BOUNDED)


@dataclass
class CodeFlags:
    so: Optional[bool] = None
    dc: Optional[bool] = None
    selfdual: Optional[bool] = None
    lcd: Optional[bool] = None
    hamming_mds: Optional[bool] = None
    symplectic_mds: Optional[bool] = None


@dataclass
class CodeReport:
    name: str
    field_header: str
    n: int
    k: int
    params: Dict[str, int] = field(default_factory=dict)
    flags: CodeFlags = field(default_factory=CodeFlags)
    d_hamming: Optional[DistanceClaim] = None
    d_symplectic: Optional[DistanceClaim] = None
    hamming_defect: Optional[int] = None
    symplectic_defect: Optional[int] = None
    predicted: Optional[int] = None
    seed: int = 1
    budget: int = 0
    w_max: Optional[int] = None
    """Names of the requested checks that did not hold."""
    failures: List[str] = field(default_factory=list)
    schema: int = SCHEMA_VERSION

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class Table1Row:
    kind: str
    q: int
    m: int
    r: int
    i: int
    n: int
    k: int
    d: int
    bound: int

    def __str__(self) -> str:
        return (
            f"{self.kind} (q={self.q}, m={self.m}, r={self.r}, i={self.i})"
            f" [{self.n},{self.k},{self.d}]"
        )


@dataclass
class Table1Outcome:
    row: Table1Row
    passed: bool
    report: Optional[CodeReport] = None
    reason: Optional[str] = None


@dataclass
class Table1Report:
    outcomes: List[Table1Outcome] = field(default_factory=list)
    budget: int = 0
    schema: int = SCHEMA_VERSION

    @property
    def passed(self) -> int:
        return sum(1 for outcome in self.outcomes if outcome.passed)

    @property
    def all_passed(self) -> bool:
        return self.passed == len(self.outcomes)


@dataclass
class LcdSearchReport:
    name: str
    n: int
    k: int
    q: int
    seed: int
    trials: int
    """The found permutation in bracket notation, or `None`."""
    permutation: Optional[str] = None
    codes: List[CodeReport] = field(default_factory=list)
    schema: int = SCHEMA_VERSION

    @property
    def found(self) -> bool:
        return self.permutation is not None
