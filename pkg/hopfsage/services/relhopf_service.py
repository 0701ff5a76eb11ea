from typing import List, Optional, Sequence, Tuple
from hopfsage.models.comodule import Comodule, Subspace
from hopfsage.models.hopf import Diagnostic, FinAlgebra, HopfAlgebra
from hopfsage.models.matrix import Matrix
from hopfsage.models.relhopf import (BModule, ComoduleAlgebra, Quotient,
                                     QuotientModule, RelHopfModule,
                                     RelHopfMorphism)
from hopfsage.services.comodule_service import ComoduleService
from hopfsage.services.hopf_service import HopfService
from hopfsage.services.linalg_service import LinearAlgebraService as LA
from hopfsage.utils.axioms import identity_diagnostics, shape_diagnostics
from hopfsage.utils.errors import (DimensionMismatchError,
                                   InvalidStructureError, PreconditionError)
from hopfsage.utils.logging import logger


class RelHopfService:
    """Comodule algebras, relative Hopf modules and modules over B."""

    # comodule algebras

    @staticmethod
    def comodule_algebra_diagnostics(hopf: HopfAlgebra, algebra: FinAlgebra,
                                     coaction: Matrix) -> List[Diagnostic]:
        problems = HopfService.algebra_diagnostics(algebra)
        problems += ComoduleService.coaction_diagnostics(
            hopf, algebra.dim, coaction)
        if any(p.axiom == 'dimension mismatch' for p in problems):
            return problems
        f, d, dh = hopf.field, algebra.dim, hopf.dim
        i_a, i_h = Matrix.identity(f, d), Matrix.identity(f, dh)
        problems += identity_diagnostics(
            'coaction unital', coaction @ algebra.unit,
            LA.kronecker(algebra.unit, hopf.unit), ())
        flip = LA.kron(i_a, Matrix.swap(f, dh, d), i_h)
        problems += identity_diagnostics(
            'coaction multiplicative', coaction @ algebra.mult,
            LA.kronecker(algebra.mult, hopf.mult) @ flip
            @ LA.kronecker(coaction, coaction), (d, d))
        return problems

    @staticmethod
    def validate_comodule_algebra(hopf: HopfAlgebra, algebra: FinAlgebra,
                                  coaction: Matrix, name: str = 'A'
                                  ) -> Tuple[Optional[ComoduleAlgebra],
                                             List[Diagnostic]]:
        """Validate A and compute its coinvariant subalgebra B."""
        if algebra.field != hopf.field:
            return None, [Diagnostic('mixed fields', (),
                                     f"{algebra.field} vs {hopf.field}")]
        problems = RelHopfService.comodule_algebra_diagnostics(
            hopf, algebra, coaction)
        if not problems:
            comodule = Comodule(hopf, algebra.dim, coaction, name)
            coinv = ComoduleService.coinvariants(comodule)
            if not LA.in_span(coinv.basis, algebra.one):
                problems.append(Diagnostic('coinvariants miss the unit'))
            products = algebra.mult @ LA.kronecker(coinv.basis, coinv.basis)
            if coinv.dim and not LA.span_contains(coinv.basis, products):
                problems.append(Diagnostic(
                    'coinvariants not closed under multiplication'))
        if problems:
            logger.warning(
                f"Comodule algebra '{name}' failed validation: "
                f"{'; '.join(str(p) for p in problems)}")
            return None, problems
        return ComoduleAlgebra(name, algebra, comodule, coinv,
                               algebra.is_commutative()), []

    @staticmethod
    def require_comodule_algebra(hopf: HopfAlgebra, algebra: FinAlgebra,
                                 coaction: Matrix,
                                 name: str = 'A') -> ComoduleAlgebra:
        result, problems = RelHopfService.validate_comodule_algebra(
            hopf, algebra, coaction, name)
        if result is None:
            raise InvalidStructureError(
                f"Invalid comodule algebra '{name}'", problems)
        return result

    @staticmethod
    def hopf_as_algebra(hopf: HopfAlgebra, name: str = '') -> ComoduleAlgebra:
        """A = H with coaction Delta."""
        return RelHopfService.require_comodule_algebra(
            hopf, hopf.algebra, hopf.comult, name or hopf.name)

    @staticmethod
    def trivial_algebra(hopf: HopfAlgebra, name: str = 'k') -> ComoduleAlgebra:
        """The ground field with trivial coaction."""
        f = hopf.field
        algebra = FinAlgebra(f, 1, Matrix.identity(f, 1),
                             Matrix.identity(f, 1))
        return RelHopfService.require_comodule_algebra(
            hopf, algebra, hopf.unit, name)

    @staticmethod
    def coinvariant_algebra(over: ComoduleAlgebra) -> FinAlgebra:
        """B = A^coH by structure constants in the coinvariant basis."""
        w = over.coinv.basis
        mult = LA.coordinate_matrix(
            w, over.algebra.mult @ LA.kronecker(w, w))
        unit = LA.coordinate_matrix(w, over.algebra.unit)
        return FinAlgebra(over.field, w.cols, mult, unit)

    # relative Hopf modules

    @staticmethod
    def module_diagnostics(over: ComoduleAlgebra, dim: int, action: Matrix,
                           coaction: Matrix) -> List[Diagnostic]:
        f, da, dh = over.field, over.dim, over.hopf.dim
        problems = shape_diagnostics('action', action, (dim, da * dim))
        problems += ComoduleService.coaction_diagnostics(
            over.hopf, dim, coaction)
        if any(p.axiom == 'dimension mismatch' for p in problems):
            return problems
        i_m, i_a = Matrix.identity(f, dim), Matrix.identity(f, da)
        i_h = Matrix.identity(f, dh)
        problems += identity_diagnostics(
            'module unit', action @ LA.kronecker(over.algebra.unit, i_m),
            i_m, (dim,))
        problems += identity_diagnostics(
            'module associativity',
            action @ LA.kronecker(over.algebra.mult, i_m),
            action @ LA.kronecker(i_a, action), (da, da, dim))
        flip = LA.kron(i_a, Matrix.swap(f, dh, dim), i_h)
        problems += identity_diagnostics(
            'relative Hopf compatibility', coaction @ action,
            LA.kronecker(action, over.hopf.mult) @ flip
            @ LA.kronecker(over.coaction.coaction, coaction), (da, dim))
        return problems

    @staticmethod
    def validate_module(over: ComoduleAlgebra, dim: int, action: Matrix,
                        coaction: Matrix, name: str = 'M'
                        ) -> Tuple[Optional[RelHopfModule], List[Diagnostic]]:
        problems = RelHopfService.module_diagnostics(
            over, dim, action, coaction)
        if not problems:
            comodule = Comodule(over.hopf, dim, coaction, name)
            coinv = ComoduleService.coinvariants(comodule)
            module = RelHopfModule(name, over, dim, action, comodule, coinv)
            if coinv.dim:
                for b in over.coinv.vectors():
                    if not LA.span_contains(coinv.basis,
                                            module.acting(b) @ coinv.basis):
                        problems.append(Diagnostic(
                            'coinvariants not stable under B'))
                        break
        if problems:
            logger.warning(
                f"Relative Hopf module '{name}' failed validation: "
                f"{'; '.join(str(p) for p in problems)}")
            return None, problems
        return module, []

    @staticmethod
    def require_module(over: ComoduleAlgebra, dim: int, action: Matrix,
                       coaction: Matrix, name: str = 'M') -> RelHopfModule:
        module, problems = RelHopfService.validate_module(
            over, dim, action, coaction, name)
        if module is None:
            raise InvalidStructureError(
                f"Invalid relative Hopf module '{name}'", problems)
        return module

    @staticmethod
    def regular_module(over: ComoduleAlgebra, name: str = '') -> RelHopfModule:
        """A as a relative Hopf module over itself."""
        return RelHopfService.require_module(
            over, over.dim, over.algebra.mult, over.coaction.coaction,
            name or over.name)

    @staticmethod
    def zero_module(over: ComoduleAlgebra, name: str = '0') -> RelHopfModule:
        f = over.field
        return RelHopfService.require_module(
            over, 0, Matrix.zeros(f, 0, 0), Matrix.zeros(f, 0, 0), name)

    @staticmethod
    def direct_sum(modules: Sequence[RelHopfModule],
                   name: str = '') -> RelHopfModule:
        if not modules:
            raise PreconditionError("direct sum of no modules")
        over = modules[0].over
        if any(m.over != over for m in modules):
            raise PreconditionError("summands over different algebras")
        f, da = over.field, over.dim
        total = sum(m.dim for m in modules)
        i_a = Matrix.identity(f, da)
        i_h = Matrix.identity(f, over.hopf.dim)
        action = Matrix.zeros(f, total, da * total)
        coaction = Matrix.zeros(f, total * over.hopf.dim, total)
        offset = 0
        for m in modules:
            embed = Matrix.identity(f, total).select_columns(
                range(offset, offset + m.dim))
            project = embed.transpose()
            action = action + embed @ m.action @ LA.kronecker(i_a, project)
            coaction = coaction + LA.kronecker(embed, i_h) @ \
                m.coaction.coaction @ project
            offset += m.dim
        return RelHopfService.require_module(
            over, total, action, coaction,
            name or '+'.join(m.name for m in modules))

    @staticmethod
    def is_subobject(module: RelHopfModule, subspace: Subspace) -> bool:
        """A-stable and coaction-stable."""
        if subspace.dim == 0:
            return True
        return all(LA.span_contains(subspace.basis, op @ subspace.basis)
                   for op in module.operators()) and \
            ComoduleService.is_subcomodule(module.coaction, subspace)

    @staticmethod
    def submodule(module: RelHopfModule, subspace: Subspace,
                  name: str = '') -> RelHopfModule:
        """A subobject in the coordinates of its basis."""
        if not RelHopfService.is_subobject(module, subspace):
            raise PreconditionError(
                f"subspace of '{module.name}' is not a subobject")
        f = module.field
        name = name or f"sub({module.name})"
        if subspace.dim == 0:
            return RelHopfService.zero_module(module.over, name)
        w = subspace.basis
        action = LA.coordinate_matrix(
            w, module.action @ LA.kronecker(
                Matrix.identity(f, module.over.dim), w))
        coaction = ComoduleService.restrict(module.coaction, subspace, name)
        return RelHopfService.require_module(
            module.over, subspace.dim, action, coaction.coaction, name)

    @staticmethod
    def quotient(relations: Matrix) -> Quotient:
        """Quotient of k^n by the column span of relations."""
        f, n = relations.field, relations.rows
        spanning = LA.image_basis(relations)
        complement = LA.complement_basis(spanning)
        inverse = LA.inverse(spanning.hstack(complement))
        projection = Matrix.from_rows(
            f, [inverse.row(i) for i in range(spanning.cols, n)], n)
        return Quotient(spanning, complement, projection)

    @staticmethod
    def induced_module(over: ComoduleAlgebra, quotient: Quotient,
                       action: Matrix, coaction: Matrix,
                       name: str) -> QuotientModule:
        """Action and coaction induced on V / R, after checking R is stable."""
        f = over.field
        i_a = Matrix.identity(f, over.dim)
        i_h = Matrix.identity(f, over.hopf.dim)
        r = quotient.relations
        leak_action = quotient.projection @ action @ LA.kronecker(i_a, r)
        leak_coaction = LA.kronecker(quotient.projection, i_h) @ coaction @ r
        if not (leak_action.is_zero() and leak_coaction.is_zero()):
            logger.error(f"relations of '{name}' are not a subobject")
            raise InvalidStructureError(
                f"induced structure on '{name}' is not well defined",
                [Diagnostic('quotient well-definedness')])
        induced_action = quotient.projection @ action @ \
            LA.kronecker(i_a, quotient.section)
        induced_coaction = LA.kronecker(quotient.projection, i_h) @ \
            coaction @ quotient.section
        module = RelHopfService.require_module(
            over, quotient.dim, induced_action, induced_coaction, name)
        return QuotientModule(module, quotient)

    @staticmethod
    def quotient_module(module: RelHopfModule, subspace: Subspace,
                        name: str = '') -> QuotientModule:
        if not RelHopfService.is_subobject(module, subspace):
            raise PreconditionError(
                f"subspace of '{module.name}' is not a subobject")
        return RelHopfService.induced_module(
            module.over, RelHopfService.quotient(subspace.basis),
            module.action, module.coaction.coaction,
            name or f"{module.name}/sub")

    # morphisms

    @staticmethod
    def is_A_linear(f: Matrix, source: RelHopfModule,
                    target: RelHopfModule) -> bool:
        return all(f @ s == t @ f for s, t in
                   zip(source.operators(), target.operators()))

    @staticmethod
    def is_morphism(f: Matrix, source: RelHopfModule,
                    target: RelHopfModule) -> bool:
        if f.shape != (target.dim, source.dim):
            raise DimensionMismatchError(
                f"map of shape {f.shape} from '{source.name}' "
                f"to '{target.name}'")
        return RelHopfService.is_A_linear(f, source, target) and \
            ComoduleService.is_colinear(f, source.coaction, target.coaction)

    @staticmethod
    def morphism(f: Matrix, source: RelHopfModule,
                 target: RelHopfModule) -> RelHopfMorphism:
        if not RelHopfService.is_morphism(f, source, target):
            raise InvalidStructureError(
                f"map '{source.name}' -> '{target.name}' is not A-linear "
                f"and H-colinear")
        return RelHopfMorphism(source, target, f)

    # modules over B

    @staticmethod
    def bmodule_diagnostics(over: ComoduleAlgebra, dim: int,
                            action: Matrix) -> List[Diagnostic]:
        b = RelHopfService.coinvariant_algebra(over)
        problems = shape_diagnostics('action', action, (dim, b.dim * dim))
        if problems:
            return problems
        f = over.field
        i_p, i_b = Matrix.identity(f, dim), Matrix.identity(f, b.dim)
        problems += identity_diagnostics(
            'module unit', action @ LA.kronecker(b.unit, i_p), i_p, (dim,))
        problems += identity_diagnostics(
            'module associativity', action @ LA.kronecker(b.mult, i_p),
            action @ LA.kronecker(i_b, action), (b.dim, b.dim, dim))
        return problems

    @staticmethod
    def validate_bmodule(over: ComoduleAlgebra, dim: int, action: Matrix,
                         name: str = 'P'
                         ) -> Tuple[Optional[BModule], List[Diagnostic]]:
        problems = RelHopfService.bmodule_diagnostics(over, dim, action)
        if problems:
            logger.warning(
                f"B-module '{name}' failed validation: "
                f"{'; '.join(str(p) for p in problems)}")
            return None, problems
        return BModule(name, over, dim, action), []

    @staticmethod
    def require_bmodule(over: ComoduleAlgebra, dim: int, action: Matrix,
                        name: str = 'P') -> BModule:
        bmodule, problems = RelHopfService.validate_bmodule(
            over, dim, action, name)
        if bmodule is None:
            raise InvalidStructureError(f"Invalid B-module '{name}'", problems)
        return bmodule

    @staticmethod
    def coinvariant_bmodule(module: RelHopfModule,
                            name: str = '') -> BModule:
        """M^coH with B acting by restriction, in the coinvariant basis."""
        over, v = module.over, module.coinv.basis
        name = name or f"{module.name}^coH"
        if v.cols == 0:
            return BModule(name, over, 0, Matrix.zeros(module.field, 0, 0))
        action = LA.coordinate_matrix(
            v, module.action @ LA.kronecker(over.coinv.basis, v))
        return RelHopfService.require_bmodule(over, v.cols, action, name)

    @staticmethod
    def bmodule_free(over: ComoduleAlgebra, copies: int,
                     name: str = '') -> BModule:
        """B^(copies); basis element b_i of copy j has index j * dim B + i."""
        f = over.field
        b = RelHopfService.coinvariant_algebra(over)
        action = LA.kronecker(Matrix.identity(f, copies), b.mult) @ \
            LA.kronecker(Matrix.swap(f, b.dim, copies),
                         Matrix.identity(f, b.dim))
        return BModule(name or f"B^{copies}", over, copies * b.dim, action)

    @staticmethod
    def is_B_linear(f: Matrix, source: BModule, target: BModule) -> bool:
        return all(f @ s == t @ f for s, t in
                   zip(source.operators(), target.operators()))
