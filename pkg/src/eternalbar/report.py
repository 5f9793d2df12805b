from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Report:
    """Outcome of a diagnostic check; falsy when the check failed."""

    name: str
    ok: bool
    message: str = ""
    witness: Any = None

    def __bool__(self):
        return self.ok

    def line(self) -> str:
        status = "pass" if self.ok else "FAIL"
        return f"{self.name}: {status}" + (f" ({self.message})" if self.message else "")
