from typing import List, Optional, Set
from hopfsage.models.certificate import (Decomposition, Prop43Report,
                                         SimplicityResult, SplitWitness,
                                         Summand)
from hopfsage.models.comodule import Subspace
from hopfsage.models.hopf import FinAlgebra
from hopfsage.models.matrix import Matrix
from hopfsage.models.relhopf import (ComoduleAlgebra, RelHopfModule,
                                     RelHopfMorphism)
from hopfsage.services.comodule_service import ComoduleService
from hopfsage.services.hom_service import HomService
from hopfsage.services.linalg_service import LinearAlgebraService as LA
from hopfsage.services.projectivity_service import ProjectivityService
from hopfsage.services.relhopf_service import RelHopfService
from hopfsage.services.simplicity_service import SimplicityService
from hopfsage.services.smash_service import SmashService
from hopfsage.utils.errors import PreconditionError
from hopfsage.utils.logging import logger
from hopfsage.utils.verdicts import (DaggerWitness, ExactnessWitness,
                                     SimplicityFlag, SimplicityRoute,
                                     SplitContext, Verdict)


class DecompositionService:
    """Simple subobjects and semisimple decompositions of relative Hopf
    modules, through the smash product A # H*."""

    @staticmethod
    def radical_char0(algebra: FinAlgebra) -> Subspace:
        """Radical of the trace form tr(L_x L_y); the Jacobson radical in
        characteristic 0."""
        field, n = algebra.field, algebra.dim
        if field.is_prime_field:
            raise PreconditionError(
                "trace-form radical needs characteristic 0")
        left = [algebra.left_mult(algebra.basis_vector(i)) for i in range(n)]
        gram = Matrix.from_rows(
            field, [[LA.trace(x @ y) for y in left] for x in left], n)
        return Subspace(field, n, LA.kernel_basis(gram))

    @staticmethod
    def endomorphism_dimension(module: RelHopfModule) -> int:
        return len(HomService.hom_colinear(module, module))

    @staticmethod
    def radical_annihilates(module: RelHopfModule) -> bool:
        smash = SmashService.smash(module.over)
        radical = DecompositionService.radical_char0(smash.algebra)
        return all(SmashService.acting(module, r).is_zero()
                   for r in radical.vectors())

    @staticmethod
    def is_simple_object(module: RelHopfModule,
                         seed: Optional[int] = None) -> SimplicityResult:
        """Search for a proper nonzero subobject of M."""
        if module.dim == 0:
            raise PreconditionError("the zero object is not simple")
        if module.dim == 1:
            return SimplicityResult(Verdict.SIMPLE,
                                    flag=SimplicityFlag.CERTIFIED,
                                    route=SimplicityRoute.ONE_DIMENSIONAL)
        field = module.field
        ops = SmashService.operators(module)
        seeds, exhaustive = SimplicityService.seed_vectors(
            field, module.dim, module.coinv, seed)
        witness = SimplicityService.find_invariant_subspace(
            ops, module.dim, field, seeds)
        if witness is not None:
            return SimplicityResult(Verdict.NOT_SIMPLE, witness=witness)
        if exhaustive:
            return SimplicityResult(Verdict.SIMPLE,
                                    flag=SimplicityFlag.CERTIFIED,
                                    route=SimplicityRoute.EXHAUSTIVE,
                                    notes=['exhaustive search over F_p'])
        if DecompositionService.radical_annihilates(module) and \
                DecompositionService.endomorphism_dimension(module) == 1:
            return SimplicityResult(
                Verdict.SIMPLE, flag=SimplicityFlag.CERTIFIED,
                route=SimplicityRoute.RADICAL_AND_ENDOMORPHISMS,
                notes=['radical acts as zero and End is one-dimensional'])
        logger.debug(f"no subobject of '{module.name}' among the seeds")
        return SimplicityResult(Verdict.UNKNOWN, flag=SimplicityFlag.PROBABLE,
                                notes=['no subobject among the seeds'])

    @staticmethod
    def recheck_simple(module: RelHopfModule,
                       route: SimplicityRoute) -> bool:
        """Re-run the test a certified simple verdict names."""
        if route == SimplicityRoute.ONE_DIMENSIONAL:
            return module.dim == 1
        if route == SimplicityRoute.EXHAUSTIVE:
            return SimplicityService.no_invariant_subspace(
                SmashService.operators(module), module.dim, module.field)
        if route == SimplicityRoute.RADICAL_AND_ENDOMORPHISMS:
            return not module.field.is_prime_field and \
                DecompositionService.radical_annihilates(module) and \
                DecompositionService.endomorphism_dimension(module) == 1
        return False

    @staticmethod
    def hypotheses(over: ComoduleAlgebra) -> List[str]:
        """Failed semisimplicity hypotheses, as readable strings."""
        failed = []
        if over.field.is_prime_field:
            failed.append('semisimplicity of A not checked over F_p')
        elif DecompositionService.radical_char0(over.algebra).dim:
            failed.append('A is not semisimple')
        if not ComoduleService.is_cosemisimple(over.hopf)[0]:
            failed.append('H is not cosemisimple')
        return failed

    @staticmethod
    def peel_simple(module: RelHopfModule, seed: Optional[int] = None):
        """A simple (or probably simple) subobject: its basis in M and the
        simplicity result that stopped the descent."""
        current, embed = module, Matrix.identity(module.field, module.dim)
        while True:
            result = DecompositionService.is_simple_object(current, seed)
            if result.verdict != Verdict.NOT_SIMPLE:
                return embed, result
            embed = embed @ result.witness.basis
            current = RelHopfService.submodule(
                current, result.witness, f"{module.name}.sub")

    @staticmethod
    def decompose_semisimple(module: RelHopfModule,
                             seed: Optional[int] = None) -> Decomposition:
        """Peel simple subobjects, splitting off each one in the category."""
        field = module.field
        decomposition = Decomposition(
            module.name, [], False,
            hypotheses=DecompositionService.hypotheses(module.over))
        rest, embed = module, Matrix.identity(field, module.dim)
        while rest.dim:
            basis, simple = DecompositionService.peel_simple(rest, seed)
            decomposition.summands.append(Summand(
                Subspace(field, module.dim, embed @ basis), simple.flag,
                simple.route))
            if basis.cols == rest.dim:
                break
            quotient = RelHopfService.quotient_module(
                rest, Subspace(field, rest.dim, basis))
            projection = RelHopfMorphism(rest, quotient.module,
                                         quotient.quotient.projection)
            section = ProjectivityService.split_section(projection)
            if section is None:
                decomposition.notes.append(
                    f"a summand of dimension {basis.cols} has no "
                    f"complement")
                logger.info(f"decomposition of '{module.name}' stopped")
                return decomposition
            complement = Subspace(field, rest.dim, section.matrix)
            embed = embed @ section.matrix
            rest = RelHopfService.submodule(rest, complement,
                                            f"{module.name}.rest")
        decomposition.complete = True
        return decomposition

    @staticmethod
    def is_H(over: ComoduleAlgebra) -> bool:
        hopf = over.hopf
        return over.algebra == hopf.algebra and \
            over.coaction.coaction == hopf.comult

    @staticmethod
    def dagger_witness(over: ComoduleAlgebra) -> Set[DaggerWitness]:
        """Sufficient conditions for Hom(M, -) to be exact into comodules."""
        witnesses = set()
        if not over.field.is_prime_field and \
                DecompositionService.radical_char0(over.algebra).dim == 0:
            witnesses.add(DaggerWitness.A_SEMISIMPLE)
        if DecompositionService.is_H(over) and over.hopf.is_commutative():
            witnesses.add(DaggerWitness.A_EQUALS_H_COMMUTATIVE)
        return witnesses

    @staticmethod
    def prop43_check(module: RelHopfModule) -> Prop43Report:
        """Under an exactness and a dagger witness, M is projective in the
        category: the generator epi A (x) V -> M splits."""
        over = module.over
        dagger = tuple(sorted(DecompositionService.dagger_witness(over),
                              key=lambda w: w.value))
        exactness = tuple(ProjectivityService.exactness_witness(over))
        report = Prop43Report(module.name, Verdict.INAPPLICABLE,
                              dagger, exactness)
        commutative = over.commutative and over.hopf.is_commutative()
        applicable = bool(dagger) and (
            ExactnessWitness.COSEMISIMPLE in exactness or
            (commutative and ExactnessWitness.TOTAL_INTEGRAL in exactness))
        if not applicable:
            report.notes.append('hypotheses not witnessed')
            return report
        _, epi = SmashService.generator_epi(module)
        section = ProjectivityService.split_section(epi)
        if section is None:
            logger.error(f"generator epi of '{module.name}' does not split "
                         f"under witnessed hypotheses")
            report.verdict = Verdict.FAILS
            return report
        report.verdict = Verdict.HOLDS
        report.witness = SplitWitness(epi.matrix, section.matrix,
                                      SplitContext.IN_CATEGORY)
        return report
