from typing import Callable, Dict, List, Optional, Sequence, Tuple
from hopfsage.models.hopf import Diagnostic, FinAlgebra, HopfData
from hopfsage.models.instance import (PARENT_KINDS, Block, InstanceFile,
                                      LoadedInstance)
from hopfsage.models.matrix import Matrix
from hopfsage.models.relhopf import BModule, ComoduleAlgebra, RelHopfModule
from hopfsage.services.hopf_service import HopfService
from hopfsage.services.relhopf_service import RelHopfService
from hopfsage.utils.errors import InvalidStructureError, SemanticError
from hopfsage.utils.instance_format import parse
from hopfsage.utils.logging import logger

Place = Callable[[Tuple[int, ...]], Tuple[int, int]]


class InstanceService:
    """Resolve names in an instance file and validate every block."""

    @staticmethod
    def _matrix(block: Block, keyword: str, bounds: Sequence[int],
                shape: Tuple[int, int], place: Place, field) -> Matrix:
        entries = [[field.zero] * shape[1] for _ in range(shape[0])]
        for index, value in block.get(keyword).items():
            for i, bound in zip(index, bounds):
                if i >= bound:
                    raise SemanticError(
                        f"'{keyword}' index {i + 1} out of range 1..{bound} "
                        f"in block '{block.name}' (line {block.line})")
            row, col = place(index)
            entries[row][col] = value
        return Matrix.from_rows(field, entries, shape[1])

    @staticmethod
    def _algebra_tables(block: Block, field) -> Tuple[Matrix, Matrix]:
        d = block.dim
        unit = InstanceService._matrix(
            block, 'unit', (d,), (d, 1), lambda t: (t[0], 0), field)
        mult = InstanceService._matrix(
            block, 'mult', (d, d, d), (d, d * d),
            lambda t: (t[2], t[0] * d + t[1]), field)
        return mult, unit

    @staticmethod
    def _coaction(block: Block, dim_h: int, field) -> Matrix:
        d = block.dim
        return InstanceService._matrix(
            block, 'coaction', (d, d, dim_h), (d * dim_h, d),
            lambda t: (t[1] * dim_h + t[2], t[0]), field)

    @staticmethod
    def _action(block: Block, dim_acting: int, field) -> Matrix:
        d = block.dim
        return InstanceService._matrix(
            block, 'action', (dim_acting, d, d), (d, dim_acting * d),
            lambda t: (t[2], t[0] * d + t[1]), field)

    @staticmethod
    def hopf_data(block: Block, field) -> HopfData:
        d = block.dim
        mult, unit = InstanceService._algebra_tables(block, field)
        comult = InstanceService._matrix(
            block, 'comult', (d, d, d), (d * d, d),
            lambda t: (t[1] * d + t[2], t[0]), field)
        counit = InstanceService._matrix(
            block, 'counit', (d,), (1, d), lambda t: (0, t[0]), field)
        antipode = InstanceService._matrix(
            block, 'antipode', (d, d), (d, d), lambda t: (t[1], t[0]), field)
        return HopfData(block.name, field, d, mult, unit, comult, counit,
                        antipode, source_line=block.line)

    @staticmethod
    def build(instance: InstanceFile, text: str = '') -> LoadedInstance:
        """Validate blocks in file order; parents must come first."""
        loaded = LoadedInstance(instance, text)
        field = instance.field
        seen = set()
        for block in instance.blocks:
            if block.name in seen:
                raise SemanticError(f"duplicate name '{block.name}' "
                                    f"(line {block.line})")
            seen.add(block.name)
            if block.kind == 'hopf':
                hopf, problems = HopfService.validate_hopf(
                    InstanceService.hopf_data(block, field))
                if hopf is not None:
                    loaded.hopfs[block.name] = hopf
                loaded.diagnostics[block.name] = problems
                continue

            parent_kind = PARENT_KINDS[block.kind]
            parents = loaded.hopfs if parent_kind == 'hopf' \
                else loaded.algebras
            parent_block = instance.find(block.parent)
            if parent_block is None or parent_block.kind != parent_kind or \
                    parent_block.line > block.line:
                noun = 'Hopf algebra' if parent_kind == 'hopf' \
                    else 'algebra'
                raise SemanticError(f"unknown {noun} '{block.parent}' "
                                    f"(line {block.line})")
            parent = parents.get(block.parent)
            if parent is None:
                loaded.diagnostics[block.name] = [Diagnostic(
                    'invalid parent', (),
                    f"'{block.parent}' failed validation")]
                continue
            built, problems = InstanceService._validate_child(
                block, parent, field)
            loaded.diagnostics[block.name] = problems
            if built is not None:
                target = {'algebra': loaded.algebras,
                          'module': loaded.modules,
                          'bmodule': loaded.bmodules}[block.kind]
                target[block.name] = built
        invalid = [n for n, p in loaded.diagnostics.items() if p]
        if invalid:
            logger.warning(f"invalid objects: {', '.join(invalid)}")
        return loaded

    @staticmethod
    def _validate_child(block: Block, parent, field):
        if block.kind == 'algebra':
            mult, unit = InstanceService._algebra_tables(block, field)
            return RelHopfService.validate_comodule_algebra(
                parent, FinAlgebra(field, block.dim, mult, unit),
                InstanceService._coaction(block, parent.dim, field),
                block.name)
        if block.kind == 'module':
            return RelHopfService.validate_module(
                parent, block.dim,
                InstanceService._action(block, parent.dim, field),
                InstanceService._coaction(block, parent.hopf.dim, field),
                block.name)
        return RelHopfService.validate_bmodule(
            parent, block.dim,
            InstanceService._action(block, parent.coinv.dim, field),
            block.name)

    @staticmethod
    def load_text(text: str) -> LoadedInstance:
        return InstanceService.build(parse(text), text)

    # lookups used by the command-line driver

    @staticmethod
    def _lookup(loaded: LoadedInstance, name: str, kind: str,
                objects: Dict):
        block = loaded.source.find(name)
        if block is None or block.kind != kind:
            raise SemanticError(f"unknown {kind} '{name}'")
        if name not in objects:
            raise InvalidStructureError(f"{kind} '{name}' is invalid",
                                        loaded.diagnostics.get(name, []))
        return objects[name]

    @staticmethod
    def module(loaded: LoadedInstance, name: str) -> RelHopfModule:
        return InstanceService._lookup(loaded, name, 'module',
                                       loaded.modules)

    @staticmethod
    def algebra(loaded: LoadedInstance, name: str) -> ComoduleAlgebra:
        return InstanceService._lookup(loaded, name, 'algebra',
                                       loaded.algebras)

    @staticmethod
    def bmodule(loaded: LoadedInstance, name: str) -> BModule:
        return InstanceService._lookup(loaded, name, 'bmodule',
                                       loaded.bmodules)

    @staticmethod
    def _objects(loaded: LoadedInstance, kind: str) -> Dict:
        return {'module': loaded.modules, 'algebra': loaded.algebras,
                'bmodule': loaded.bmodules}[kind]

    @staticmethod
    def select(loaded: LoadedInstance, kind: str,
               name: Optional[str]) -> List:
        """The named object, or every valid object of the kind in file
        order."""
        if name is not None:
            lookup = {'module': InstanceService.module,
                      'algebra': InstanceService.algebra,
                      'bmodule': InstanceService.bmodule}[kind]
            return [lookup(loaded, name)]
        objects = InstanceService._objects(loaded, kind)
        return [objects[b.name] for b in loaded.source.of_kind(kind)
                if b.name in objects]

    @staticmethod
    def invalid(loaded: LoadedInstance, kind: str,
                name: Optional[str]) -> List[Block]:
        """Blocks of the kind that select skipped for failing validation."""
        if name is not None:
            return []
        objects = InstanceService._objects(loaded, kind)
        skipped = [b for b in loaded.source.of_kind(kind)
                   if b.name not in objects]
        for block in skipped:
            logger.warning(f"skipping invalid {kind} '{block.name}'")
        return skipped

    # exporting derived objects

    @staticmethod
    def module_block(module: RelHopfModule, name: str = '') -> Block:
        """Instance block of a module over an algebra of the instance."""
        d, dh = module.dim, module.hopf.dim
        block = Block('module', name or module.name, d,
                      parent=module.over.name)
        for i in range(module.over.dim):
            for j in range(d):
                for k in range(d):
                    block.put('action', (i, j, k),
                              module.action[k, i * d + j])
        for i in range(d):
            for j in range(d):
                for k in range(dh):
                    block.put('coaction', (i, j, k),
                              module.coaction.coaction[j * dh + k, i])
        return block
