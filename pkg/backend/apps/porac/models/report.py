import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional


class Provenance(str, enum.Enum):
    ANALYTIC = 'analytic'
    SIMULATED = 'simulated'
    ORACLE = 'oracle'


@dataclass(frozen=True)
class ResultEntry:
    name: str
    value: float
    provenance: Provenance
    exact: Optional[Fraction] = None


@dataclass
class RunReport:
    """Everything a CLI command reports; `passed` is the conjunction of its checks."""
    command: str
    parameters: Dict[str, Any]
    tolerance: float
    results: List[ResultEntry] = field(default_factory=list)
    checks: Dict[str, bool] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    def add(self, name: str, value, provenance: Provenance) -> ResultEntry:
        exact = value if isinstance(value, Fraction) else None
        entry = ResultEntry(name, float(value), provenance, exact)
        self.results.append(entry)
        return entry

    def check(self, name: str, condition: bool) -> bool:
        self.checks[name] = bool(condition)
        return bool(condition)

    def note(self, text: str):
        self.notes.append(text)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    @property
    def failed_checks(self) -> List[str]:
        return [name for name, ok in self.checks.items() if not ok]
