from typing import Dict, Optional, Tuple
from hopfsage.models.certificate import (ChainReport, ProjectivityCertificate,
                                         SplitWitness, TotalIntegral)
from hopfsage.models.matrix import Matrix
from hopfsage.models.relhopf import (BModule, ComoduleAlgebra, RelHopfModule,
                                     RelHopfMorphism)
from hopfsage.services.adjunction_service import AdjunctionService
from hopfsage.services.comodule_service import ComoduleService
from hopfsage.services.linalg_service import LinearAlgebraService as LA
from hopfsage.services.linalg_service import stack
from hopfsage.services.relhopf_service import RelHopfService
from hopfsage.utils.errors import InvalidStructureError
from hopfsage.utils.logging import logger
from hopfsage.utils.verdicts import ExactnessWitness, SplitContext, Verdict


class ProjectivityService:
    """Projectivity over B, split witnesses and total integrals."""

    @staticmethod
    def canonical_b_epi(bmodule: BModule) -> Tuple[BModule, Matrix]:
        """B^(r) -> P sending b_i in copy j to b_i p_j, r = dim P."""
        free = RelHopfService.bmodule_free(bmodule.over, bmodule.dim)
        ops = bmodule.operators()
        columns = [ops[i].column(j) for j in range(bmodule.dim)
                   for i in range(len(ops))]
        epi = Matrix.from_columns(bmodule.field, columns, bmodule.dim)
        return free, epi

    @staticmethod
    def is_projective_over_B(bmodule: BModule) -> Optional[SplitWitness]:
        """A B-linear section of the canonical epi, or None."""
        field = bmodule.field
        free, epi = ProjectivityService.canonical_b_epi(bmodule)
        pairs = list(zip(bmodule.operators(), free.operators()))

        def constraint(x: Matrix):
            return stack(epi @ x, *[x @ beta - phi @ x for beta, phi in pairs])

        target = Matrix.identity(field, bmodule.dim).vec() + \
            (field.zero,) * (len(pairs) * free.dim * bmodule.dim)
        section = LA.solve_affine_map(
            field, free.dim, bmodule.dim, constraint, target)
        if section is None:
            logger.info(f"'{bmodule.name}' is not projective over B")
            return None
        return SplitWitness(epi, section, SplitContext.OVER_B)

    @staticmethod
    def find_total_integral(over: ComoduleAlgebra) -> Optional[TotalIntegral]:
        """Colinear phi : H -> A with phi(1) = 1.

        The particular solution is extended greedily by homogeneous
        solutions, in pivot order, whenever they raise the rank of phi.
        """
        hopf = over.hopf
        field, da, dh = over.field, over.dim, hopf.dim

        def constraint(x: Matrix):
            return stack(ComoduleService.colinearity_defect(
                x, hopf.comult, over.coaction.coaction, dh), x @ hopf.unit)

        target = (field.zero,) * (da * dh * dh) + over.algebra.one
        particular = LA.solve_affine_map(field, da, dh, constraint, target)
        if particular is None:
            logger.info(f"no total integral {hopf.name} -> {over.name}")
            return None
        current, rank = particular, LA.rank(particular)
        for k in LA.solve_homogeneous_maps(field, da, dh, constraint):
            candidate = current + k
            candidate_rank = LA.rank(candidate)
            if candidate_rank > rank:
                current, rank = candidate, candidate_rank
        return TotalIntegral(current)

    @staticmethod
    def total_integral_replays(over: ComoduleAlgebra,
                               integral: TotalIntegral) -> bool:
        hopf = over.hopf
        colinear = ComoduleService.colinearity_defect(
            integral.map, hopf.comult, over.coaction.coaction,
            hopf.dim).is_zero()
        return colinear and integral.map @ hopf.unit == over.algebra.unit

    @staticmethod
    def exactness_witness(over: ComoduleAlgebra) -> Dict[ExactnessWitness,
                                                         Matrix]:
        """Sufficient conditions for (-)^coH to be exact, with witnesses."""
        witnesses = {}
        cosemisimple, integral = ComoduleService.is_cosemisimple(over.hopf)
        if cosemisimple:
            witnesses[ExactnessWitness.COSEMISIMPLE] = integral
        total = ProjectivityService.find_total_integral(over)
        if total is not None:
            witnesses[ExactnessWitness.TOTAL_INTEGRAL] = total.map
        return witnesses

    @staticmethod
    def is_coinvariantly_generated(module: RelHopfModule) -> bool:
        """M = A M^coH."""
        if module.dim == 0:
            return True
        span = module.action @ LA.kronecker(
            Matrix.identity(module.field, module.over.dim),
            module.coinv.basis)
        return LA.rank(span) == module.dim

    @staticmethod
    def coinvariant_generation_iso(bmodule: BModule) -> bool:
        """u (x) p -> u(1 (x) p) is the identity of A (x)_B P, and
        A (x)_B P is coinvariantly generated."""
        over = bmodule.over
        tensor = AdjunctionService.tensor_over_B(over, bmodule)
        module, q = tensor.module, tensor.quotient
        unit = q.projection @ LA.kronecker(
            over.algebra.unit, Matrix.identity(over.field, bmodule.dim))
        g = module.action @ LA.kronecker(
            Matrix.identity(over.field, over.dim), unit) @ q.section
        return g == Matrix.identity(over.field, module.dim) and \
            ProjectivityService.is_coinvariantly_generated(module)

    @staticmethod
    def split_section(f: RelHopfMorphism) -> Optional[RelHopfMorphism]:
        """An A-linear colinear s with f s = id, or None."""
        source, target = f.source, f.target
        field = source.field
        pairs = list(zip(target.operators(), source.operators()))

        def constraint(x: Matrix):
            return stack(f.matrix @ x, *[x @ t - s @ x for t, s in pairs],
                         ComoduleService.colinearity_defect(
                             x, target.coaction.coaction,
                             source.coaction.coaction, source.hopf.dim))

        rest = len(pairs) * source.dim * target.dim + \
            source.dim * source.hopf.dim * target.dim
        target_vector = Matrix.identity(field, target.dim).vec() + \
            (field.zero,) * rest
        section = LA.solve_affine_map(
            field, source.dim, target.dim, constraint, target_vector)
        if section is None:
            logger.debug(f"'{source.name}' -> '{target.name}' does not split")
            return None
        return RelHopfMorphism(target, source, section)

    @staticmethod
    def descend_witness(witness: SplitWitness, source: RelHopfModule,
                        target: RelHopfModule) -> SplitWitness:
        """Apply (-)^coH to a split epi source -> target in the category."""
        epi = LA.coordinate_matrix(target.coinv.basis,
                                   witness.epi @ source.coinv.basis)
        section = LA.coordinate_matrix(source.coinv.basis,
                                       witness.section @ target.coinv.basis)
        if epi is None or section is None:
            raise InvalidStructureError(
                "witness maps do not preserve coinvariants")
        return SplitWitness(epi, section, SplitContext.OVER_B)

    @staticmethod
    def canonical_epi(module: RelHopfModule) -> RelHopfMorphism:
        """A^(M^coH) -> M, (a_m) -> sum a_m m over the coinvariant basis."""
        over = module.over
        q = module.coinv.dim
        if q:
            free = RelHopfService.direct_sum(
                [RelHopfService.regular_module(over)] * q,
                f"{over.name}^{q}")
        else:
            free = RelHopfService.zero_module(over, f"{over.name}^0")
        i_a = Matrix.identity(module.field, over.dim)
        matrix = Matrix.zeros(module.field, module.dim, 0)
        for w in module.coinv.vectors():
            matrix = matrix.hstack(module.action @ LA.kronecker(
                i_a, Matrix.column_vector(module.field, w)))
        return RelHopfMorphism(free, module, matrix)

    @staticmethod
    def lift_epi(over: ComoduleAlgebra, bmodule: BModule, free: BModule,
                 epi: Matrix) -> RelHopfMorphism:
        """1 (x) p : A (x)_B B^(r) -> A (x)_B P."""
        t_free = AdjunctionService.tensor_over_B(over, free)
        t_p = AdjunctionService.tensor_over_B(over, bmodule)
        i_a = Matrix.identity(over.field, over.dim)
        matrix = t_p.quotient.projection @ LA.kronecker(i_a, epi) @ \
            t_free.quotient.section
        return RelHopfMorphism(t_free.module, t_p.module, matrix)

    @staticmethod
    def certify_projectivity(module: RelHopfModule
                             ) -> ProjectivityCertificate:
        """Certify projectivity of M^coH over B, lifting and descending
        split witnesses along the adjunction."""
        over = module.over
        bmodule = RelHopfService.coinvariant_bmodule(module)
        b_witness = ProjectivityService.is_projective_over_B(bmodule)
        certificate = ProjectivityCertificate(
            module.name,
            Verdict.PROJECTIVE if b_witness else Verdict.NOT_PROJECTIVE,
            b_witness=b_witness, index_bound=module.dim)
        certificate.notes.append(
            f"index sets of free objects bounded by dim M = {module.dim}")

        if b_witness is not None:
            free, _ = ProjectivityService.canonical_b_epi(bmodule)
            lifted = ProjectivityService.lift_epi(
                over, bmodule, free, b_witness.epi)
            t_free = AdjunctionService.tensor_over_B(over, free)
            t_p = AdjunctionService.tensor_over_B(over, bmodule)
            section = t_free.quotient.projection @ LA.kronecker(
                Matrix.identity(over.field, over.dim), b_witness.section) @ \
                t_p.quotient.section
            category = SplitWitness(lifted.matrix, section,
                                    SplitContext.IN_CATEGORY)
            if not (category.replays() and RelHopfService.is_morphism(
                    lifted.matrix, lifted.source, lifted.target) and
                    RelHopfService.is_morphism(
                        section, lifted.target, lifted.source)):
                logger.error(f"lifted witness for '{module.name}' "
                             f"does not replay")
                certificate.notes.append("lifted witness failed to replay")
            else:
                certificate.category_witness = category
                certificate.descended_witness = \
                    ProjectivityService.descend_witness(
                        category, lifted.source, lifted.target)
            certificate.u_bijective = \
                AdjunctionService.unit_map(bmodule).bijective
            if not certificate.u_bijective:
                logger.error(f"u_P not bijective for '{module.name}' "
                             f"although P is projective")

        epi = ProjectivityService.canonical_epi(module)
        if ProjectivityService.is_coinvariantly_generated(module):
            section = ProjectivityService.split_section(epi)
            if section is not None:
                certificate.converse_witness = \
                    ProjectivityService.descend_witness(
                        SplitWitness(epi.matrix, section.matrix,
                                     SplitContext.IN_CATEGORY),
                        epi.source, module)
                if b_witness is None:
                    logger.error(f"'{module.name}' is a summand of a free "
                                 f"object but M^coH is not projective")
        logger.info(f"'{module.name}': {certificate.verdict.value}")
        return certificate

    @staticmethod
    def prop25_chain(module: RelHopfModule) -> ChainReport:
        """Evaluate the three projectivity conditions for P = M^coH:
        (1) 1 (x) p : A (x)_B B^(r) -> A (x)_B P splits in the category,
        (2) a coinvariantly generated object with coinvariants P is a
        split quotient of a free object, (3) P is projective over B."""
        over = module.over
        bmodule = RelHopfService.coinvariant_bmodule(module)
        witnesses = {}

        free, epi = ProjectivityService.canonical_b_epi(bmodule)
        lifted = ProjectivityService.lift_epi(over, bmodule, free, epi)
        section = ProjectivityService.split_section(lifted)
        free_split = section is not None
        if free_split:
            witnesses['free_split'] = SplitWitness(
                lifted.matrix, section.matrix, SplitContext.IN_CATEGORY)

        generated_split = False
        candidates = [module]
        unit = AdjunctionService.unit_map(bmodule)
        if unit.bijective:
            candidates.append(unit.tensor.module)
        for candidate in candidates:
            if not ProjectivityService.is_coinvariantly_generated(candidate):
                continue
            canonical = ProjectivityService.canonical_epi(candidate)
            split = ProjectivityService.split_section(canonical)
            if split is not None:
                generated_split = True
                key = 'generated_split' if candidate is module \
                    else 'generated_split_tensor'
                witnesses[key] = SplitWitness(
                    canonical.matrix, split.matrix, SplitContext.IN_CATEGORY)
                break

        b_witness = ProjectivityService.is_projective_over_B(bmodule)
        if b_witness is not None:
            witnesses['b_projective'] = b_witness

        exactness = tuple(ProjectivityService.exactness_witness(over))
        holds = (not free_split or generated_split) and \
            (not generated_split or b_witness is not None)
        if exactness:
            holds = holds and (b_witness is None or free_split)
        if not holds:
            logger.error(f"projectivity chain violated for '{module.name}'")
        report = ChainReport(module.name, free_split, generated_split,
                             b_witness is not None, exactness, holds,
                             witnesses)
        if not exactness:
            report.notes.append("no exactness witness: only the forward "
                                "implications are checked")
        return report
