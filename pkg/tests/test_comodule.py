import pytest
from hopfsage.models.matrix import Matrix
from hopfsage.services.comodule_service import ComoduleService
from hopfsage.services.linalg_service import LinearAlgebraService as LA
from tests.utils import apply, coaction_components, column_set, vectors


class TestCoinvariants:
    def test_regular_comodule_coinvariants_are_scalars(self, kc2):
        coinv = ComoduleService.coinvariants(ComoduleService.regular(kc2))
        assert coinv.dim == 1
        assert coinv.basis.column(0) == (1, 0)

    def test_trivial_comodule(self, kc2):
        trivial = ComoduleService.trivial(kc2, 3)
        assert ComoduleService.coinvariants(trivial).is_whole()

    def test_coinvariants_of_a4(self, a4):
        expected = Matrix.from_columns(a4.field, [[1, 0, 0, 0],
                                                  [0, 0, 1, 0]], 4)
        assert LA.same_span(a4.coinv.basis, expected)

    def test_coinvariants_agree_with_enumeration_over_f2(self,
                                                          kc2f2_instance):
        over = kc2f2_instance.algebras['HF']
        hopf = over.hopf
        unit = [int(x) for x in hopf.unit.entries]
        expected = {v for v in vectors(over.dim)
                    if apply(over.coaction.coaction, v) ==
                    tuple(vj * uk % 2 for vj in v for uk in unit)}
        assert column_set(over.coinv.basis) == expected


class TestCosemisimplicity:
    def test_group_algebra_is_cosemisimple(self, kc2):
        cosemisimple, integral = ComoduleService.is_cosemisimple(kc2)
        assert cosemisimple
        assert ComoduleService.integral_diagnostics(kc2, integral) == []
        assert integral.entries == (1, 0)

    def test_sweedler_is_not_cosemisimple(self, sw4):
        assert ComoduleService.is_cosemisimple(sw4) == (False, None)


class TestSubcomodules:
    def test_generated_subcomodule(self, a4):
        generated = ComoduleService.generated_subcomodule(
            a4.coaction, (0, 1, 1, 0))
        assert generated.dim == 2
        assert ComoduleService.is_subcomodule(a4.coaction, generated)

    def test_components_recover_coaction(self, a4):
        ours = ComoduleService.components(a4.coaction)
        independent = coaction_components(a4.coaction.coaction, a4.dim,
                                          a4.hopf.dim)
        assert ours == independent

    @pytest.mark.parametrize('k', [0, 1])
    def test_components_are_projections(self, a4, k):
        component = ComoduleService.components(a4.coaction)[k]
        assert component @ component == component

    def test_colinearity(self, a4):
        identity = Matrix.identity(a4.field, a4.dim)
        shift = Matrix.from_columns(
            a4.field, [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1],
                       [0, 0, 0, 0]], 4)
        assert ComoduleService.is_colinear(identity, a4.coaction, a4.coaction)
        assert not ComoduleService.is_colinear(shift, a4.coaction,
                                               a4.coaction)
