import pytest
from hopfsage.models.matrix import Matrix
from hopfsage.services.projectivity_service import ProjectivityService
from hopfsage.services.relhopf_service import RelHopfService
from hopfsage.utils.verdicts import ExactnessWitness, SplitContext, Verdict
from tests.conftest import load_fixture_file


class TestCertify:
    def test_regular_module_is_projective(self, a4_instance):
        certificate = ProjectivityService.certify_projectivity(
            a4_instance.modules['M'])
        assert certificate.verdict == Verdict.PROJECTIVE
        assert certificate.b_witness.replays()
        assert certificate.category_witness.context == \
            SplitContext.IN_CATEGORY
        assert certificate.descended_witness.replays()
        assert certificate.converse_witness.replays()
        assert certificate.u_bijective

    def test_truncated_module_is_not_projective(self, a4_instance):
        certificate = ProjectivityService.certify_projectivity(
            a4_instance.modules['M2'])
        assert certificate.verdict == Verdict.NOT_PROJECTIVE
        assert certificate.b_witness is None
        assert certificate.category_witness is None
        assert certificate.converse_witness is None
        assert certificate.index_bound == 2

    @pytest.mark.parametrize('name', ['M', 'HH2'])
    def test_hopf_modules_are_projective(self, hh_instance, name):
        certificate = ProjectivityService.certify_projectivity(
            hh_instance.modules[name])
        assert certificate.verdict == Verdict.PROJECTIVE
        assert certificate.descended_witness.replays()

    @pytest.mark.parametrize('name,projective', [('B', True), ('BT', False)])
    def test_projective_over_b(self, a4_instance, name, projective):
        bmodule = a4_instance.bmodules[name]
        witness = ProjectivityService.is_projective_over_B(bmodule)
        assert (witness is not None) == projective
        if witness is not None:
            free, epi = ProjectivityService.canonical_b_epi(bmodule)
            assert witness.epi == epi
            assert RelHopfService.is_B_linear(witness.section, bmodule, free)

    def test_canonical_epi_covers_module(self, a4_instance):
        m2 = a4_instance.modules['M2']
        epi = ProjectivityService.canonical_epi(m2)
        assert epi.source.dim == a4_instance.algebras['A4'].dim
        assert RelHopfService.is_morphism(epi.matrix, epi.source, m2)
        assert ProjectivityService.split_section(epi) is None


class TestTotalIntegral:
    def test_graded_algebra_has_a_total_integral(self, a4):
        integral = ProjectivityService.find_total_integral(a4)
        assert integral is not None
        assert ProjectivityService.total_integral_replays(a4, integral)
        assert integral.map.column(0) == (1, 0, 0, 0)
        assert integral.map.column(1) == (0, 1, 0, 0)

    def test_total_integral_over_cosemisimple_hopf(self):
        over = load_fixture_file('kc2.hm').algebras['k']
        integral = ProjectivityService.find_total_integral(over)
        assert integral.map == Matrix.row_vector(over.field, [1, 0])

    def test_sweedler_over_ground_field_has_none(self):
        over = load_fixture_file('sw4.hm').algebras['k']
        assert ProjectivityService.find_total_integral(over) is None
        assert ProjectivityService.exactness_witness(over) == {}

    def test_exactness_witnesses(self, a4, hh):
        assert set(ProjectivityService.exactness_witness(a4)) == {
            ExactnessWitness.COSEMISIMPLE, ExactnessWitness.TOTAL_INTEGRAL}
        assert ExactnessWitness.COSEMISIMPLE in \
            ProjectivityService.exactness_witness(hh)


@pytest.mark.parametrize('filename', ['triv.hm', 'kc2.hm', 'a4.hm', 'hh.hm',
                                      'kc2f2.hm'])
def test_projectivity_chain_holds_on_fixtures(filename):
    instance = load_fixture_file(filename)
    for name in sorted(instance.modules):
        report = ProjectivityService.prop25_chain(instance.modules[name])
        assert report.implications_hold, name
        for witness in report.witnesses.values():
            assert witness.replays()


def test_chain_on_truncated_module(a4_instance):
    report = ProjectivityService.prop25_chain(a4_instance.modules['M2'])
    assert not report.free_split
    assert not report.generated_split
    assert not report.b_projective
    assert report.witnesses == {}


def test_chain_on_regular_module(a4_instance):
    report = ProjectivityService.prop25_chain(a4_instance.modules['M'])
    assert report.free_split and report.generated_split
    assert report.b_projective
    assert set(report.witnesses) >= {'free_split', 'generated_split',
                                     'b_projective'}
    assert not report.notes
