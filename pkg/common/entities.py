# common/entities.py
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class CheckReport:
    """
    Outcome of a verification command (Hilbert series match, relation check, ...).

    `counterexample` holds the first failing multidegree / sample when `ok` is False.
    """
    name: str
    ok: bool
    checked: int = 0
    counterexample: Optional[Any] = None
    details: Dict[str, Any] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    def summary_line(self) -> str:
        status = "match" if self.ok else "mismatch"
        line = f"{self.name}: {status} ({self.checked} checked)"
        if not self.ok and self.counterexample is not None:
            line += f"; first counterexample {self.counterexample}"
        return line
