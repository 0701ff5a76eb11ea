import pytest
from hopfsage.models.comodule import Subspace
from hopfsage.services.decomposition_service import DecompositionService
from hopfsage.services.hom_service import HomService
from hopfsage.services.linalg_service import LinearAlgebraService as LA
from hopfsage.services.relhopf_service import RelHopfService
from hopfsage.services.smash_service import SmashService
from hopfsage.utils.errors import PreconditionError
from hopfsage.utils.verdicts import (DaggerWitness, SimplicityFlag,
                                     SimplicityRoute, Verdict)
from tests.utils import (coaction_components, column_set, dimension, stable,
                         subspaces)


class TestDecompose:
    def test_sum_of_two_hopf_modules(self, hh_instance):
        module = hh_instance.modules['HH2']
        decomposition = DecompositionService.decompose_semisimple(module)
        assert decomposition.complete
        assert decomposition.hypotheses == []
        assert [s.subspace.dim for s in decomposition.summands] == [2, 2]
        assert all(s.flag == SimplicityFlag.CERTIFIED
                   for s in decomposition.summands)
        total = decomposition.summands[0].subspace.basis.hstack(
            decomposition.summands[1].subspace.basis)
        assert LA.rank(total) == module.dim
        for summand in decomposition.summands:
            assert RelHopfService.is_subobject(module, summand.subspace)

    def test_simple_module_is_one_summand(self, hh_instance):
        decomposition = DecompositionService.decompose_semisimple(
            hh_instance.modules['M'])
        assert decomposition.complete
        assert len(decomposition.summands) == 1

    def test_nonsplit_module_stops(self, a4_instance):
        decomposition = DecompositionService.decompose_semisimple(
            a4_instance.modules['M2'])
        assert not decomposition.complete
        assert len(decomposition.summands) == 1
        assert decomposition.summands[0].subspace.dim == 1
        assert 'A is not semisimple' in decomposition.hypotheses
        assert decomposition.notes

    def test_sum_over_f2_matches_enumeration(self, kc2f2_instance):
        single = kc2f2_instance.modules['MF']
        module = RelHopfService.direct_sum([single, single])
        operators = module.operators() + coaction_components(
            module.coaction.coaction, module.dim, module.hopf.dim)
        subobjects = [s for s in subspaces(module.dim)
                      if stable(s, operators)]
        minimal = {s for s in subobjects if dimension(s) > 0 and
                   not any(0 < dimension(t) < dimension(s) and t < s
                           for t in subobjects)}
        decomposition = DecompositionService.decompose_semisimple(module)
        assert decomposition.complete
        assert len(decomposition.summands) == 2
        for summand in decomposition.summands:
            assert column_set(summand.subspace.basis) in minimal

    def test_zero_object_is_not_simple(self, hh):
        with pytest.raises(PreconditionError):
            DecompositionService.is_simple_object(
                RelHopfService.zero_module(hh))

    @pytest.mark.parametrize('fixture,name,route', [
        ('hh_instance', 'HH2', SimplicityRoute.RADICAL_AND_ENDOMORPHISMS),
        ('kc2f2_instance', 'MF', SimplicityRoute.EXHAUSTIVE),
    ])
    def test_certified_summands_recheck(self, request, fixture, name, route):
        module = request.getfixturevalue(fixture).modules[name]
        if module.field.is_prime_field:
            module = RelHopfService.direct_sum([module, module])
        decomposition = DecompositionService.decompose_semisimple(module)
        assert [s.route for s in decomposition.summands] == [route, route]
        for summand in decomposition.summands:
            simple = RelHopfService.submodule(module, summand.subspace)
            assert DecompositionService.recheck_simple(simple, route)
        assert not DecompositionService.recheck_simple(module, route)

    @pytest.mark.parametrize('route', list(SimplicityRoute))
    def test_recheck_rejects_a_module_with_a_subobject(self, a4_instance,
                                                       route):
        assert not DecompositionService.recheck_simple(
            a4_instance.modules['M2'], route)


class TestSimpleObjects:
    def test_regular_hopf_module_is_simple(self, hh_instance):
        result = DecompositionService.is_simple_object(
            hh_instance.modules['M'])
        assert result.verdict == Verdict.SIMPLE
        assert result.flag == SimplicityFlag.CERTIFIED

    def test_truncation_has_a_subobject(self, a4_instance):
        result = DecompositionService.is_simple_object(
            a4_instance.modules['M2'])
        assert result.verdict == Verdict.NOT_SIMPLE
        assert result.witness.vectors() == ((0, 1),)

    @pytest.mark.parametrize('fixture,name,dim', [
        ('hh_instance', 'M', 1),
        ('hh_instance', 'HH2', 4),
        ('a4_instance', 'M', 2),
    ])
    def test_endomorphism_dimension(self, request, fixture, name, dim):
        module = request.getfixturevalue(fixture).modules[name]
        assert DecompositionService.endomorphism_dimension(module) == dim

    def test_trace_form_radical(self, a4, hh):
        radical = DecompositionService.radical_char0(a4.algebra)
        assert radical.dim == 3
        assert DecompositionService.radical_char0(hh.algebra).dim == 0

    def test_radical_needs_characteristic_zero(self, kc2f2_instance):
        with pytest.raises(PreconditionError):
            DecompositionService.radical_char0(
                kc2f2_instance.algebras['HF'].algebra)


class TestSmash:
    @pytest.mark.parametrize('fixture,name', [('hh_instance', 'M'),
                                              ('a4_instance', 'M2')])
    def test_modules_are_smash_modules(self, request, fixture, name):
        module = request.getfixturevalue(fixture).modules[name]
        smash = SmashService.smash(module.over)
        assert smash.dim == module.over.dim * module.hopf.dim
        assert SmashService.module_diagnostics(smash, module) == []

    def test_subobjects_are_smash_submodules(self, a4_instance):
        module = a4_instance.modules['M2']
        line = Subspace.from_vectors(module.field, 2, [(0, 1)])
        assert RelHopfService.is_subobject(module, line)
        assert SmashService.is_submodule(module, line)

    @pytest.mark.parametrize('fixture,names', [
        ('hh_instance', ('M', 'HH2')),
        ('a4_instance', ('M', 'M2')),
    ])
    def test_hom_action_is_rational(self, request, fixture, names):
        instance = request.getfixturevalue(fixture)
        source, target = (instance.modules[n] for n in names)
        assert SmashService.rationality_check(source, target)

    def test_counit_acts_trivially_on_maps(self, hh_instance):
        module = hh_instance.modules['M']
        hopf = module.hopf
        for f in HomService.hom_space(module, module).basis:
            assert SmashService.hstar_action(hopf.counit, f, module,
                                             module) == f
        with pytest.raises(PreconditionError):
            SmashService.hstar_action(hopf.unit, f, module, module)

    def test_generator_epi_from_one_generator(self, a4_instance):
        m2 = a4_instance.modules['M2']
        comodule, epi = SmashService.generator_epi(m2, generators=[(1, 0)])
        assert comodule.dim == 1
        assert LA.rank(epi.matrix) == m2.dim

    def test_default_generators(self, hh_instance):
        module = hh_instance.modules['M']
        comodule, epi = SmashService.generator_epi(module)
        assert comodule.dim == module.dim
        assert epi.source.dim == module.over.dim * module.dim


class TestGeneratorSplitting:
    def test_holds_for_hopf_modules(self, hh_instance):
        report = DecompositionService.prop43_check(hh_instance.modules['M'])
        assert report.verdict == Verdict.HOLDS
        assert set(report.dagger) == {DaggerWitness.A_SEMISIMPLE,
                                      DaggerWitness.A_EQUALS_H_COMMUTATIVE}
        assert report.witness.replays()

    def test_inapplicable_without_dagger_witness(self, a4_instance):
        report = DecompositionService.prop43_check(a4_instance.modules['M'])
        assert report.verdict == Verdict.INAPPLICABLE
        assert report.dagger == ()
        assert report.witness is None
        assert report.notes == ['hypotheses not witnessed']
