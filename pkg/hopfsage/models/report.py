from dataclasses import dataclass, field as dc_field
from typing import Any, Dict, List, Optional
from hopfsage.models.matrix import Matrix
from hopfsage.utils.verdicts import (VERDICT_EXIT_CODES, ExitCode, Verdict,
                                     WitnessKind)


@dataclass
class Witness:
    """Matrices a verifier can replay without searching.

    ``construction`` names how the verifier rebuilds the source and target
    objects of a split witness from the instance.
    """
    kind: WitnessKind
    matrices: Dict[str, Matrix]
    context: Optional[str] = None
    construction: Optional[str] = None


@dataclass
class ObjectResult:
    object: str
    kind: str
    verdict: Verdict
    details: Dict[str, Any] = dc_field(default_factory=dict)
    witnesses: List[Witness] = dc_field(default_factory=list)
    notes: List[str] = dc_field(default_factory=list)
    diagnostics: List[str] = dc_field(default_factory=list)

    @property
    def exit_code(self) -> ExitCode:
        return VERDICT_EXIT_CODES[self.verdict]


@dataclass
class Report:
    command: str
    field: str
    instance: str
    results: List[ObjectResult] = dc_field(default_factory=list)
    timing: Optional[float] = None

    @property
    def exit_code(self) -> ExitCode:
        """The worst exit status over all results."""
        codes = [r.exit_code for r in self.results]
        return max(codes, key=lambda c: c.value, default=ExitCode.SUCCESS)
