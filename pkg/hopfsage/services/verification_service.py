from typing import List, NamedTuple, Tuple
from hopfsage.models.certificate import SplitWitness, TotalIntegral
from hopfsage.models.comodule import Subspace
from hopfsage.models.instance import LoadedInstance
from hopfsage.models.relhopf import RelHopfModule
from hopfsage.models.report import ObjectResult, Report, Witness
from hopfsage.services.adjunction_service import AdjunctionService
from hopfsage.services.comodule_service import ComoduleService
from hopfsage.services.decomposition_service import DecompositionService
from hopfsage.services.instance_service import InstanceService
from hopfsage.services.linalg_service import LinearAlgebraService as LA
from hopfsage.services.projectivity_service import ProjectivityService
from hopfsage.services.relhopf_service import RelHopfService
from hopfsage.services.simplicity_service import SimplicityService
from hopfsage.services.smash_service import SmashService
from hopfsage.utils.errors import HopfsageError, SemanticError
from hopfsage.utils.logging import logger
from hopfsage.utils.verdicts import (ExitCode, SimplicityFlag, SimplicityRoute,
                                     Verdict, WitnessKind)

Check = Tuple[bool, str]


class Replay(NamedTuple):
    object: str
    witness: str
    passed: bool
    reason: str = ''

    def line(self) -> str:
        status = 'PASS' if self.passed else 'FAIL'
        suffix = f": {self.reason}" if self.reason else ''
        return f"{status} {self.object} {self.witness}{suffix}"


class VerificationService:
    """Replay the witnesses of a report against its embedded instance.

    Every object a witness refers to is rebuilt by the deterministic
    construction recorded with it, and only identities are checked. The
    one search is the enumeration of F_p^n that an exhaustive simplicity
    certificate names.
    """

    @staticmethod
    def split_pair(module: RelHopfModule, construction: str
                   ) -> Tuple[RelHopfModule, RelHopfModule]:
        """Source and target of the split epi a construction names."""
        over = module.over
        if construction == 'lift':
            bmodule = RelHopfService.coinvariant_bmodule(module)
            free = RelHopfService.bmodule_free(over, bmodule.dim)
            return (AdjunctionService.tensor_over_B(over, free).module,
                    AdjunctionService.tensor_over_B(over, bmodule).module)
        if construction == 'canonical':
            epi = ProjectivityService.canonical_epi(module)
            return epi.source, epi.target
        if construction == 'canonical-tensor':
            tensor = AdjunctionService.tensor_over_B(
                over, RelHopfService.coinvariant_bmodule(module)).module
            epi = ProjectivityService.canonical_epi(tensor)
            return epi.source, epi.target
        if construction == 'generator':
            _, epi = SmashService.generator_epi(module)
            return epi.source, epi.target
        raise SemanticError(f"unknown construction '{construction}'")

    @staticmethod
    def _split(witness: Witness) -> SplitWitness:
        if {'epi', 'section'} - set(witness.matrices):
            raise SemanticError("split witness needs epi and section")
        return SplitWitness(witness.matrices['epi'],
                            witness.matrices['section'], None)

    @staticmethod
    def _split_over_b(loaded: LoadedInstance, result: ObjectResult,
                      witness: Witness) -> Check:
        module = InstanceService.module(loaded, result.object)
        split = VerificationService._split(witness)
        bmodule = RelHopfService.coinvariant_bmodule(module)
        free, epi = ProjectivityService.canonical_b_epi(bmodule)
        if split.epi != epi:
            return False, 'epi is not the canonical epi onto M^coH'
        if split.section.shape != (free.dim, bmodule.dim):
            return False, 'section has the wrong shape'
        if not RelHopfService.is_B_linear(split.section, bmodule, free):
            return False, 'section is not B-linear'
        return split.replays(), 'epi @ section is not the identity'

    @staticmethod
    def _split_in_category(loaded: LoadedInstance, result: ObjectResult,
                           witness: Witness) -> Check:
        module = InstanceService.module(loaded, result.object)
        split = VerificationService._split(witness)
        source, target = VerificationService.split_pair(
            module, witness.construction)
        if not RelHopfService.is_morphism(split.epi, source, target):
            return False, 'epi is not a morphism'
        if not RelHopfService.is_morphism(split.section, target, source):
            return False, 'section is not a morphism'
        return split.replays(), 'epi @ section is not the identity'

    @staticmethod
    def _descended_split(loaded: LoadedInstance, result: ObjectResult,
                         witness: Witness) -> Check:
        module = InstanceService.module(loaded, result.object)
        split = VerificationService._split(witness)
        source, target = VerificationService.split_pair(
            module, witness.construction)
        source_b = RelHopfService.coinvariant_bmodule(source)
        target_b = RelHopfService.coinvariant_bmodule(target)
        if split.epi.shape != (target_b.dim, source_b.dim) or \
                split.section.shape != (source_b.dim, target_b.dim):
            return False, 'maps do not match the coinvariant dimensions'
        if not (RelHopfService.is_B_linear(split.epi, source_b, target_b)
                and RelHopfService.is_B_linear(split.section, target_b,
                                               source_b)):
            return False, 'maps are not B-linear'
        return split.replays(), 'epi @ section is not the identity'

    @staticmethod
    def _total_integral(loaded: LoadedInstance, result: ObjectResult,
                        witness: Witness) -> Check:
        over = InstanceService.algebra(loaded, result.object)
        phi = witness.matrices['map']
        if phi.shape != (over.dim, over.hopf.dim):
            return False, 'map has the wrong shape'
        return ProjectivityService.total_integral_replays(
            over, TotalIntegral(phi)), 'map is not a total integral'

    @staticmethod
    def _cosemisimple_integral(loaded: LoadedInstance, result: ObjectResult,
                               witness: Witness) -> Check:
        over = InstanceService.algebra(loaded, result.object)
        integral = witness.matrices['integral']
        if integral.shape != (1, over.hopf.dim):
            return False, 'integral has the wrong shape'
        problems = ComoduleService.integral_diagnostics(over.hopf, integral)
        return not problems, '; '.join(str(p) for p in problems)

    @staticmethod
    def _h_ideal(loaded: LoadedInstance, result: ObjectResult,
                 witness: Witness) -> Check:
        over = InstanceService.algebra(loaded, result.object)
        basis = witness.matrices['basis']
        if basis.rows != over.dim or LA.rank(basis) != basis.cols:
            return False, 'basis is not independent in A'
        if not 0 < basis.cols < over.dim:
            return False, 'ideal is not proper and nonzero'
        return SimplicityService.is_H_ideal(
            over, Subspace(over.field, over.dim, basis)), \
            'subspace is not an H-ideal'

    @staticmethod
    def _decomposition(loaded: LoadedInstance, result: ObjectResult,
                       witness: Witness) -> Check:
        module = InstanceService.module(loaded, result.object)
        field = module.field
        total = None
        for name in sorted(witness.matrices):
            basis = witness.matrices[name]
            if basis.rows != module.dim or basis.cols == 0:
                return False, f"{name} is not a nonzero subspace of M"
            if not RelHopfService.is_subobject(
                    module, Subspace(field, module.dim, basis)):
                return False, f"{name} is not a subobject"
            total = basis if total is None else total.hstack(basis)
        if total is None or LA.rank(total) != total.cols:
            return False, 'summands are not independent'
        complete = bool(result.details.get('complete'))
        if complete and total.cols != module.dim:
            return False, 'summands do not span M'
        flags = result.details.get('flags', [])
        if len(flags) != len(witness.matrices):
            return False, 'flags do not match the summands'
        certificates = {w.context: w.matrices.get('basis')
                        for w in result.witnesses
                        if w.kind == WitnessKind.SIMPLICITY}
        for i, flag in enumerate(flags):
            name = f"summand{i + 1}"
            if flag == SimplicityFlag.CERTIFIED.value and \
                    certificates.get(name) != witness.matrices[name]:
                return False, f"{name} is {flag} without a certificate"
        if not complete:
            expected = Verdict.FAILS
        elif all(f == SimplicityFlag.CERTIFIED.value for f in flags):
            expected = Verdict.HOLDS
        else:
            expected = Verdict.UNKNOWN
        return result.verdict == expected, \
            f"verdict {result.verdict.value} does not follow from the flags"

    @staticmethod
    def _simplicity(loaded: LoadedInstance, result: ObjectResult,
                    witness: Witness) -> Check:
        try:
            route = SimplicityRoute(witness.construction)
        except ValueError:
            raise SemanticError(
                f"unknown construction '{witness.construction}'")
        failed = f"{route.value} test does not certify simplicity"
        if result.kind == 'algebra':
            over = InstanceService.algebra(loaded, result.object)
            return SimplicityService.recheck_H_simple(over, route), failed
        module = InstanceService.module(loaded, result.object)
        basis = witness.matrices['basis']
        if basis.rows != module.dim or basis.cols == 0 or \
                LA.rank(basis) != basis.cols:
            return False, 'basis is not independent in M'
        subspace = Subspace(module.field, module.dim, basis)
        if not RelHopfService.is_subobject(module, subspace):
            return False, 'basis does not span a subobject'
        summand = RelHopfService.submodule(
            module, subspace, f"{module.name}.{witness.context}")
        return DecompositionService.recheck_simple(summand, route), failed

    @staticmethod
    def _coinvariants(loaded: LoadedInstance, result: ObjectResult,
                      witness: Witness) -> Check:
        lookup = InstanceService.module if result.kind == 'module' \
            else InstanceService.algebra
        obj = lookup(loaded, result.object)
        basis = witness.matrices['basis']
        if basis.rows != obj.coinv.ambient_dim or \
                LA.rank(basis) != basis.cols:
            return False, 'basis is not independent'
        return LA.same_span(basis, obj.coinv.basis), \
            'span differs from the coinvariants'

    @staticmethod
    def _minimal_polynomial(loaded: LoadedInstance, result: ObjectResult,
                            witness: Witness) -> Check:
        over = InstanceService.algebra(loaded, result.object)
        coinvariant = RelHopfService.coinvariant_algebra(over)
        element = witness.matrices['element']
        if element.shape != (coinvariant.dim, 1):
            return False, 'element is not in B'
        minpoly = LA.minimal_polynomial(
            coinvariant.left_mult(element.entries))
        if witness.matrices['polynomial'].entries != tuple(minpoly):
            return False, 'polynomial is not the minimal polynomial'
        irreducible = SimplicityService.to_poly(
            over.field, minpoly).is_irreducible
        if result.verdict == Verdict.NOT_FIELD:
            return not irreducible, 'minimal polynomial is irreducible'
        if result.verdict == Verdict.FIELD:
            return irreducible and len(minpoly) - 1 == coinvariant.dim, \
                'element is not primitive'
        return True, ''

    @staticmethod
    def replay_witness(loaded: LoadedInstance, result: ObjectResult,
                       witness: Witness) -> Replay:
        checks = {
            WitnessKind.SPLIT_OVER_B: VerificationService._split_over_b,
            WitnessKind.SPLIT_IN_CATEGORY:
                VerificationService._split_in_category,
            WitnessKind.DESCENDED_SPLIT: VerificationService._descended_split,
            WitnessKind.TOTAL_INTEGRAL: VerificationService._total_integral,
            WitnessKind.COSEMISIMPLE_INTEGRAL:
                VerificationService._cosemisimple_integral,
            WitnessKind.H_IDEAL: VerificationService._h_ideal,
            WitnessKind.DECOMPOSITION: VerificationService._decomposition,
            WitnessKind.COINVARIANTS: VerificationService._coinvariants,
            WitnessKind.MINIMAL_POLYNOMIAL:
                VerificationService._minimal_polynomial,
            WitnessKind.SIMPLICITY: VerificationService._simplicity,
        }
        label = witness.kind.value
        if witness.construction:
            label += f" via {witness.construction}"
        try:
            passed, reason = checks[witness.kind](loaded, result, witness)
        except KeyError as e:
            passed, reason = False, f"missing matrix {e}"
        except HopfsageError as e:
            passed, reason = False, e.message
        if not passed:
            logger.warning(f"witness {label} of '{result.object}' failed: "
                           f"{reason}")
        return Replay(result.object, label, passed, '' if passed else reason)

    @staticmethod
    def unbacked(result: ObjectResult) -> List[Replay]:
        """A simple verdict of an algebra with no simplicity witness."""
        claimed = result.kind == 'algebra' and (
            result.verdict == Verdict.SIMPLE or
            result.details.get('flag') == SimplicityFlag.CERTIFIED.value)
        if not claimed or any(w.kind == WitnessKind.SIMPLICITY
                              for w in result.witnesses):
            return []
        logger.warning(f"'{result.object}' claims simplicity without a "
                       f"certificate")
        return [Replay(result.object, WitnessKind.SIMPLICITY.value, False,
                       'simple verdict without a certificate')]

    @staticmethod
    def replay(report: Report) -> List[Replay]:
        loaded = InstanceService.load_text(report.instance)
        return ([VerificationService.replay_witness(loaded, result, witness)
                 for result in report.results
                 for witness in result.witnesses] +
                [replay for result in report.results
                 for replay in VerificationService.unbacked(result)])

    @staticmethod
    def exit_code(replays: List[Replay]) -> ExitCode:
        return ExitCode.SUCCESS if all(r.passed for r in replays) \
            else ExitCode.NEGATIVE
