from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Tuple
from hopfsage.models.field import Field, Scalar
from hopfsage.models.hopf import Diagnostic, HopfAlgebra
from hopfsage.models.relhopf import BModule, ComoduleAlgebra, RelHopfModule

Table = Dict[Tuple[int, ...], Scalar]

# keyword -> number of indices on its lines, per block kind
BLOCK_TABLES = {
    'hopf': {'unit': 1, 'mult': 3, 'comult': 3, 'counit': 1, 'antipode': 2},
    'algebra': {'unit': 1, 'mult': 3, 'coaction': 3},
    'module': {'action': 3, 'coaction': 3},
    'bmodule': {'action': 3},
}

# block kind -> kind of the block it is declared over
PARENT_KINDS = {'algebra': 'hopf', 'module': 'algebra', 'bmodule': 'algebra'}


@dataclass
class Block:
    """One named block of an instance file, with sparse 0-based tables."""
    kind: str
    name: str
    dim: int
    parent: Optional[str] = None
    tables: Dict[str, Table] = dc_field(default_factory=dict)
    line: int = dc_field(default=0, compare=False)

    def get(self, keyword: str) -> Table:
        return self.tables.get(keyword, {})

    def put(self, keyword: str, index: Tuple[int, ...], value: Scalar):
        """Store a nonzero entry; zero entries are never stored."""
        if value != 0:
            self.tables.setdefault(keyword, {})[index] = value


@dataclass
class InstanceFile:
    field: Field
    blocks: List[Block] = dc_field(default_factory=list)

    def find(self, name: str) -> Optional[Block]:
        return next((b for b in self.blocks if b.name == name), None)

    def of_kind(self, kind: str) -> List[Block]:
        return [b for b in self.blocks if b.kind == kind]


@dataclass
class LoadedInstance:
    """Validated objects of an instance file, by name.

    Objects that failed validation are absent from the dictionaries and
    have their diagnostics recorded instead.
    """
    source: InstanceFile
    text: str
    hopfs: Dict[str, HopfAlgebra] = dc_field(default_factory=dict)
    algebras: Dict[str, ComoduleAlgebra] = dc_field(default_factory=dict)
    modules: Dict[str, RelHopfModule] = dc_field(default_factory=dict)
    bmodules: Dict[str, BModule] = dc_field(default_factory=dict)
    diagnostics: Dict[str, List[Diagnostic]] = dc_field(default_factory=dict)

    @property
    def field(self) -> Field:
        return self.source.field
