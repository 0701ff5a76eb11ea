from typing import List, Optional, Sequence, Tuple
from hopfsage.models.comodule import Comodule, Subspace
from hopfsage.models.hopf import Diagnostic, FinAlgebra
from hopfsage.models.matrix import Matrix
from hopfsage.models.relhopf import (ComoduleAlgebra, RelHopfModule,
                                     RelHopfMorphism, SmashAlgebra)
from hopfsage.services.adjunction_service import AdjunctionService
from hopfsage.services.comodule_service import ComoduleService
from hopfsage.services.hom_service import HomService
from hopfsage.services.hopf_service import HopfService
from hopfsage.services.linalg_service import LinearAlgebraService as LA
from hopfsage.services.relhopf_service import RelHopfService
from hopfsage.utils.axioms import identity_diagnostics
from hopfsage.utils.errors import InvalidStructureError, PreconditionError
from hopfsage.utils.logging import logger


class SmashService:
    """The smash product A # H* and the H*-action on Hom spaces."""

    @staticmethod
    def smash(over: ComoduleAlgebra) -> SmashAlgebra:
        """(a (x) f)(b (x) g) = a b_0 (x) (f <- b_1) * g.

        (f <- b)(h) = f(b h) and * is convolution, (f * g) = (f (x) g) Delta.
        """
        hopf = over.hopf
        field, da, dh = over.field, over.dim, hopf.dim
        size = da * dh
        duals = [Matrix.basis_vector(field, dh, k).transpose()
                 for k in range(dh)]
        hit = [[duals[k] @ hopf.algebra.left_mult(
            hopf.algebra.basis_vector(s)) for s in range(dh)]
            for k in range(dh)]
        rho = over.coaction.coaction
        left = [over.left_mult(i) for i in range(da)]
        columns = []
        for i in range(da):
            for k in range(dh):
                for j in range(da):
                    for l in range(dh):
                        acc = Matrix.zeros(field, size, 1)
                        for r in range(da):
                            for s in range(dh):
                                c = rho[r * dh + s, j]
                                if c == 0:
                                    continue
                                dual = LA.kronecker(
                                    hit[k][s], duals[l]) @ hopf.comult
                                acc = acc + LA.kronecker(
                                    Matrix.column_vector(
                                        field, left[i].column(r)),
                                    dual.transpose()).scale(c)
                        columns.append(acc.entries)
        mult = Matrix.from_columns(field, columns, size)
        unit = LA.kronecker(over.algebra.unit, hopf.counit.transpose())
        algebra = FinAlgebra(field, size, mult, unit)
        problems = HopfService.algebra_diagnostics(algebra)
        if problems:
            logger.error(f"smash product of '{over.name}' failed: "
                         f"{'; '.join(str(p) for p in problems)}")
            raise InvalidStructureError(
                f"smash product of '{over.name}' is not associative",
                problems)
        embed_algebra = LA.kronecker(Matrix.identity(field, da),
                                     hopf.counit.transpose())
        embed_dual = LA.kronecker(over.algebra.unit,
                                  Matrix.identity(field, dh))
        return SmashAlgebra(over, algebra, embed_algebra, embed_dual)

    @staticmethod
    def operators(module: RelHopfModule) -> List[Matrix]:
        """(a_i (x) h^k) m = a_i (h^k(m_1) m_0), in smash basis order."""
        components = ComoduleService.components(module.coaction)
        return [op @ component for op in module.operators()
                for component in components]

    @staticmethod
    def module_action(module: RelHopfModule) -> Matrix:
        """Action matrix of M over A # H*, column c * dim M + j."""
        field = module.field
        action = Matrix.zeros(field, module.dim, 0)
        for op in SmashService.operators(module):
            action = action.hstack(op)
        return action

    @staticmethod
    def module_diagnostics(smash: SmashAlgebra,
                           module: RelHopfModule) -> List[Diagnostic]:
        """Module axioms of the induced A # H* action."""
        field, dm = module.field, module.dim
        action = SmashService.module_action(module)
        i_m = Matrix.identity(field, dm)
        i_s = Matrix.identity(field, smash.dim)
        problems = identity_diagnostics(
            'smash module unit',
            action @ LA.kronecker(smash.algebra.unit, i_m), i_m, (dm,))
        problems += identity_diagnostics(
            'smash module associativity',
            action @ LA.kronecker(smash.algebra.mult, i_m),
            action @ LA.kronecker(i_s, action), (smash.dim, smash.dim, dm))
        return problems

    @staticmethod
    def acting(module: RelHopfModule, element: Sequence) -> Matrix:
        """Operator of an element of A # H* given in smash coordinates."""
        field = module.field
        out = Matrix.zeros(field, module.dim, module.dim)
        for c, op in zip(element, SmashService.operators(module)):
            if c != 0:
                out = out + op.scale(field(c))
        return out

    @staticmethod
    def is_submodule(module: RelHopfModule, subspace: Subspace) -> bool:
        if subspace.dim == 0:
            return True
        return all(LA.span_contains(subspace.basis, op @ subspace.basis)
                   for op in SmashService.operators(module))

    @staticmethod
    def hstar_action(functional: Matrix, f: Matrix, source: RelHopfModule,
                     target: RelHopfModule) -> Matrix:
        """(h* f)(m) = h*(S^-1(m_1) f(m_0)_1) f(m_0)_0, summed leg by leg."""
        hopf = source.hopf
        field, dh = hopf.field, hopf.dim
        if functional.shape != (1, dh):
            raise PreconditionError(
                f"functional of shape {functional.shape} on a "
                f"{dh}-dimensional Hopf algebra")
        # weights[s * dh + t] = h*(S^-1(h_s) h_t)
        weights = functional @ hopf.mult @ LA.kronecker(
            hopf.antipode_inv, Matrix.identity(field, dh))
        rho_m, rho_n = source.coaction.coaction, target.coaction.coaction
        entries = [[field.zero] * source.dim for _ in range(target.dim)]
        for j in range(source.dim):
            for a in range(source.dim):
                for s in range(dh):
                    c = rho_m[a * dh + s, j]
                    if c == 0:
                        continue
                    for b in range(target.dim):
                        fb = f[b, a]
                        if fb == 0:
                            continue
                        for n in range(target.dim):
                            for t in range(dh):
                                d = rho_n[n * dh + t, b]
                                w = weights[0, s * dh + t]
                                if d == 0 or w == 0:
                                    continue
                                term = field.mul(field.mul(c, fb),
                                                 field.mul(d, w))
                                entries[n][j] = field.add(entries[n][j], term)
        result = Matrix.from_rows(field, entries, source.dim)
        if not RelHopfService.is_A_linear(result, source, target):
            raise InvalidStructureError(
                f"h* f left A-Hom('{source.name}', '{target.name}')")
        return result

    @staticmethod
    def rationality_check(source: RelHopfModule,
                          target: RelHopfModule) -> bool:
        """h* f = (id (x) h*) pi(f) on the dual basis and the Hom basis,
        reading pi from the coaction of the Hom space."""
        space = HomService.hom_space(source, target)
        if space.diagnostics:
            return False
        hopf = source.hopf
        field, dh, r = hopf.field, hopf.dim, space.dim
        coaction = space.comodule.coaction
        for k in range(dh):
            functional = Matrix.basis_vector(field, dh, k).transpose()
            for j, f in enumerate(space.basis):
                coords = [coaction[i * dh + k, j] for i in range(r)]
                expected = space.element(coords)
                if SmashService.hstar_action(
                        functional, f, source, target) != expected:
                    logger.error(
                        f"H*-action on A-Hom('{source.name}', "
                        f"'{target.name}') is not rational at "
                        f"({k + 1}, {j + 1})")
                    return False
        return True

    @staticmethod
    def generator_epi(module: RelHopfModule,
                      generators: Optional[Sequence[Sequence]] = None
                      ) -> Tuple[Comodule, RelHopfMorphism]:
        """A (x) V -> M, a (x) v -> a v, with V the subcomodule generated
        by the generators (default: the basis of M)."""
        field, over = module.field, module.over
        if generators is None:
            generators = [Matrix.basis_vector(field, module.dim, i).entries
                          for i in range(module.dim)]
        vectors = []
        for g in generators:
            vectors.extend(ComoduleService.generated_subcomodule(
                module.coaction, g).vectors())
        span = Subspace.from_vectors(field, module.dim, vectors)
        comodule = ComoduleService.restrict(
            module.coaction, span, f"V({module.name})")
        free = AdjunctionService.tensor_with_comodule(
            RelHopfService.regular_module(over), comodule,
            f"{over.name}(x)V")
        matrix = module.action @ LA.kronecker(
            Matrix.identity(field, over.dim), span.basis)
        epi = RelHopfService.morphism(matrix, free, module)
        if LA.rank(matrix) != module.dim:
            logger.error(f"generators do not generate '{module.name}'")
        return comodule, epi
