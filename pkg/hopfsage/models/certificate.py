from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Tuple
from hopfsage.models.comodule import Subspace
from hopfsage.models.matrix import Matrix
from hopfsage.utils.verdicts import (DaggerWitness, ExactnessWitness,
                                     SimplicityFlag, SimplicityRoute,
                                     SplitContext, Verdict)


@dataclass(frozen=True)
class SplitWitness:
    """epi @ section is the identity of the epi's target."""
    epi: Matrix
    section: Matrix
    context: SplitContext

    def replays(self) -> bool:
        return self.epi @ self.section == \
            Matrix.identity(self.epi.field, self.epi.rows)


@dataclass(frozen=True)
class TotalIntegral:
    """Colinear phi : H -> A with phi(1_H) = 1_A."""
    map: Matrix


@dataclass
class ProjectivityCertificate:
    module: str
    verdict: Verdict
    b_witness: Optional[SplitWitness] = None
    category_witness: Optional[SplitWitness] = None
    descended_witness: Optional[SplitWitness] = None
    converse_witness: Optional[SplitWitness] = None
    u_bijective: bool = False
    index_bound: int = 0
    notes: List[str] = dc_field(default_factory=list)


@dataclass
class ChainReport:
    """Which of the three projectivity conditions were witnessed."""
    module: str
    free_split: bool
    generated_split: bool
    b_projective: bool
    exactness: Tuple[ExactnessWitness, ...]
    implications_hold: bool
    witnesses: Dict[str, SplitWitness] = dc_field(default_factory=dict)
    notes: List[str] = dc_field(default_factory=list)


@dataclass
class SimplicityResult:
    verdict: Verdict
    witness: Optional[Subspace] = None
    flag: Optional[SimplicityFlag] = None
    route: Optional[SimplicityRoute] = None
    notes: List[str] = dc_field(default_factory=list)


@dataclass
class FieldResult:
    verdict: Verdict
    element: Optional[Tuple] = None
    polynomial: Optional[Tuple] = None
    notes: List[str] = dc_field(default_factory=list)


@dataclass
class Summand:
    subspace: Subspace
    flag: SimplicityFlag
    route: Optional[SimplicityRoute] = None


@dataclass
class Decomposition:
    module: str
    summands: List[Summand]
    complete: bool
    hypotheses: List[str] = dc_field(default_factory=list)
    notes: List[str] = dc_field(default_factory=list)


@dataclass
class Prop43Report:
    module: str
    verdict: Verdict
    dagger: Tuple[DaggerWitness, ...] = ()
    exactness: Tuple[ExactnessWitness, ...] = ()
    witness: Optional[SplitWitness] = None
    notes: List[str] = dc_field(default_factory=list)
