import pytest
from dataclasses import replace
from hopfsage.models.matrix import Matrix
from hopfsage.services.hopf_service import HopfService
from hopfsage.utils.errors import FieldError, InvalidStructureError, \
    PreconditionError


class TestValidation:
    def test_group_algebra_is_valid(self, kc2):
        assert HopfService.revalidate(kc2) == []
        assert kc2.is_commutative()

    def test_sweedler_is_valid(self, sw4):
        assert HopfService.revalidate(sw4) == []
        assert not sw4.is_commutative()

    def test_zeroed_antipode_is_named(self, kc2):
        data = replace(HopfService.to_data(kc2),
                       antipode=Matrix.zeros(kc2.field, 2, 2))
        hopf, problems = HopfService.validate_hopf(data)
        axioms = {p.axiom for p in problems}
        assert hopf is None
        assert 'left antipode' in axioms
        assert 'right antipode' in axioms
        assert 'antipode not bijective' in axioms

    def test_broken_counit_is_named(self, kc2):
        data = replace(HopfService.to_data(kc2),
                       counit=Matrix.row_vector(kc2.field, [1, 0]))
        _, problems = HopfService.validate_hopf(data)
        assert problems
        assert any('counit' in p.axiom for p in problems)

    def test_diagnostics_carry_indices(self, kc2):
        data = replace(HopfService.to_data(kc2),
                       antipode=Matrix.zeros(kc2.field, 2, 2))
        _, problems = HopfService.validate_hopf(data)
        left = next(p for p in problems if p.axiom == 'left antipode')
        assert left.indices == ((0,), (1,))
        assert 'at basis indices (1), (2)' in str(left)

    def test_require_raises(self, kc2):
        data = replace(HopfService.to_data(kc2),
                       unit=Matrix.column_vector(kc2.field, [0, 1]))
        with pytest.raises(InvalidStructureError) as info:
            HopfService.require_hopf(data)
        assert info.value.diagnostics


class TestBuilders:
    @pytest.mark.parametrize('n', [1, 2, 3, 4])
    def test_cyclic_group_algebras(self, qq, n):
        hopf = HopfService.group_algebra(qq, HopfService.cyclic_table(n))
        assert hopf.dim == n
        assert HopfService.antipode_order(hopf) == (1 if n <= 2 else 2)

    def test_sweedler_antipode_has_order_four(self, sw4):
        assert HopfService.antipode_order(sw4) == 4

    def test_sweedler_needs_odd_characteristic(self, f2):
        with pytest.raises(FieldError):
            HopfService.sweedler_h4(f2)

    def test_bad_group_table(self, qq):
        with pytest.raises(PreconditionError):
            HopfService.group_algebra(qq, [[0, 1], [0, 1]])
