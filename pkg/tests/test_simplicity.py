import pytest
from hopfsage.models.comodule import Subspace
from hopfsage.models.hopf import FinAlgebra
from hopfsage.models.matrix import Matrix
from hopfsage.services.linalg_service import LinearAlgebraService as LA
from hopfsage.services.relhopf_service import RelHopfService
from hopfsage.services.simplicity_service import SimplicityService
from hopfsage.utils.errors import PreconditionError
from hopfsage.utils.verdicts import SimplicityFlag, SimplicityRoute, Verdict
from tests.utils import coaction_components, dimension, stable, subspaces


def quadratic_extension(field, c):
    """k[x]/(x^2 - c) on the basis 1, x."""
    mult = Matrix.from_rows(field, [[1, 0, 0, c], [0, 1, 1, 0]], 4)
    return FinAlgebra(field, 2, mult, Matrix.column_vector(field, [1, 0]))


class TestHSimple:
    def test_hopf_algebra_over_itself_is_simple(self, hh):
        result = SimplicityService.is_H_simple(hh)
        assert result.verdict == Verdict.SIMPLE
        assert result.flag == SimplicityFlag.CERTIFIED
        assert result.notes == ['operators generate all of End(A)']

    def test_graded_truncation_has_an_ideal(self, a4):
        result = SimplicityService.is_H_simple(a4)
        expected = Matrix.from_columns(a4.field, [[0, 0, 1, 0],
                                                  [0, 0, 0, 1]], 4)
        assert result.verdict == Verdict.NOT_SIMPLE
        assert LA.same_span(result.witness.basis, expected)
        assert SimplicityService.is_H_ideal(a4, result.witness)

    def test_seed_does_not_change_verdict(self, hh):
        verdicts = {SimplicityService.is_H_simple(hh, seed=s).verdict
                    for s in (0, 1, 7)}
        assert verdicts == {Verdict.SIMPLE}

    def test_x_line_is_not_an_ideal(self, a4):
        line = Subspace(a4.field, 4, Matrix.column_vector(
            a4.field, [0, 1, 0, 0]))
        assert not SimplicityService.is_H_ideal(a4, line)

    def test_exhaustive_search_agrees_with_enumeration(self, kc2f2_instance):
        over = kc2f2_instance.algebras['HF']
        operators = [over.left_mult(i) for i in range(over.dim)]
        operators += [over.right_mult(i) for i in range(over.dim)]
        operators += coaction_components(over.coaction.coaction, over.dim,
                                         over.hopf.dim)
        proper = [s for s in subspaces(over.dim)
                  if 0 < dimension(s) < over.dim and stable(s, operators)]
        result = SimplicityService.is_H_simple(over)
        assert proper == []
        assert result.verdict == Verdict.SIMPLE
        assert result.notes == ['exhaustive search over F_p']

    def test_certified_verdicts_recheck(self, hh, kc2f2_instance):
        over_q = SimplicityService.is_H_simple(hh)
        over_f2 = SimplicityService.is_H_simple(kc2f2_instance.algebras['HF'])
        assert over_q.route == SimplicityRoute.OPERATOR_ALGEBRA
        assert over_f2.route == SimplicityRoute.EXHAUSTIVE
        assert SimplicityService.recheck_H_simple(hh, over_q.route)
        assert SimplicityService.recheck_H_simple(
            kc2f2_instance.algebras['HF'], over_f2.route)

    @pytest.mark.parametrize('route', list(SimplicityRoute))
    def test_recheck_rejects_an_algebra_with_an_ideal(self, a4, route):
        assert not SimplicityService.recheck_H_simple(a4, route)

    def test_exhaustible(self, qq, f2):
        assert SimplicityService.exhaustible(f2, 4)
        assert not SimplicityService.exhaustible(f2, 4, limit=10)
        assert not SimplicityService.exhaustible(qq, 1)

    def test_projective_points(self, f2):
        points = list(SimplicityService.projective_points(f2, 3))
        assert len(points) == 7
        assert len(set(points)) == 7


class TestFieldTest:
    def test_coinvariants_of_a4_are_not_a_field(self, a4):
        result = SimplicityService.is_field(
            RelHopfService.coinvariant_algebra(a4))
        assert result.verdict == Verdict.NOT_FIELD
        assert result.polynomial == (0, 0, 1)

    def test_ground_field(self, hh):
        result = SimplicityService.is_field(
            RelHopfService.coinvariant_algebra(hh))
        assert result.verdict == Verdict.FIELD
        assert result.polynomial == (-1, 1)

    @pytest.mark.parametrize('c,verdict', [
        (2, Verdict.FIELD),
        (-1, Verdict.FIELD),
        (1, Verdict.NOT_FIELD),
        (4, Verdict.NOT_FIELD),
    ])
    def test_quadratic_extensions_of_q(self, qq, c, verdict):
        result = SimplicityService.is_field(quadratic_extension(qq, c))
        assert result.verdict == verdict
        assert result.polynomial == (-c, 0, 1)
        assert result.element == (0, 1)

    def test_over_f2(self, f2):
        # x^2 + 1 = (x + 1)^2 over F_2
        assert SimplicityService.is_field(
            quadratic_extension(f2, 1)).verdict == Verdict.NOT_FIELD

    def test_noncommutative_rejected(self, sw4):
        with pytest.raises(PreconditionError):
            SimplicityService.is_field(sw4.algebra)

    def test_to_poly(self, qq):
        poly = SimplicityService.to_poly(qq, (-2, 0, 1))
        assert poly.degree() == 2
        assert poly.is_irreducible
