import itertools
import random
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple
from sympy import Poly, Rational, Symbol
from sympy import QQ as SYMPY_QQ
from hopfsage.config import current_config
from hopfsage.models.certificate import FieldResult, SimplicityResult
from hopfsage.models.comodule import Subspace
from hopfsage.models.field import Field, Scalar
from hopfsage.models.hopf import FinAlgebra
from hopfsage.models.matrix import Matrix
from hopfsage.models.relhopf import ComoduleAlgebra
from hopfsage.services.comodule_service import ComoduleService
from hopfsage.services.linalg_service import LinearAlgebraService as LA
from hopfsage.utils.errors import PreconditionError
from hopfsage.utils.logging import logger
from hopfsage.utils.verdicts import SimplicityFlag, SimplicityRoute, Verdict

_x = Symbol('x')


class SimplicityService:
    """H-simplicity of comodule algebras and the field test for B."""

    @staticmethod
    def exhaustible(field: Field, dim: int, limit: Optional[int] = None) -> bool:
        limit = current_config().EXHAUSTIVE_LIMIT if limit is None else limit
        return field.is_prime_field and field.characteristic ** dim - 1 <= limit

    @staticmethod
    def projective_points(field: Field, dim: int) -> Iterator[Tuple[int, ...]]:
        """Nonzero vectors of F_p^dim with leading nonzero coordinate 1."""
        p = field.characteristic
        for lead in range(dim):
            for tail in itertools.product(range(p), repeat=dim - lead - 1):
                yield (0,) * lead + (1,) + tail

    @staticmethod
    def random_vectors(field: Field, dim: int, count: int, seed: int,
                       bound: int) -> List[Tuple[Scalar, ...]]:
        rng = random.Random(seed)
        vectors = []
        for _ in range(count):
            v = tuple(field(rng.randint(-bound, bound)) for _ in range(dim))
            if any(c != 0 for c in v):
                vectors.append(v)
        return vectors

    @staticmethod
    def seed_vectors(field: Field, dim: int, coinv: Subspace,
                     seed: Optional[int] = None
                     ) -> Tuple[Iterator[Tuple[Scalar, ...]], bool]:
        """Seeds in search order and whether they exhaust the space.

        Coinvariant basis vectors first, then the standard basis, then all
        of F_p^dim up to scalars or a batch of random vectors over Q.
        """
        config = current_config()
        seed = config.SEED if seed is None else seed
        standard = [Matrix.basis_vector(field, dim, i).entries
                    for i in range(dim)]
        exhaustive = SimplicityService.exhaustible(field, dim)
        if exhaustive:
            tail = SimplicityService.projective_points(field, dim)
        else:
            tail = iter(SimplicityService.random_vectors(
                field, dim, config.RANDOM_SEEDS, seed, config.SEED_BOUND))
        return itertools.chain(coinv.vectors(), standard, tail), exhaustive

    @staticmethod
    def ideal_operators(over: ComoduleAlgebra) -> List[Matrix]:
        """Left and right multiplications and the coaction components."""
        ops = [over.left_mult(i) for i in range(over.dim)]
        ops += [over.right_mult(i) for i in range(over.dim)]
        return ops + ComoduleService.components(over.coaction)

    @staticmethod
    def operator_algebra_dimension(operators: Sequence[Matrix], dim: int,
                                   field: Field) -> int:
        """Dimension of the unital algebra the operators generate."""
        if dim == 0:
            return 0
        basis = [Matrix.identity(field, dim)]
        span = Matrix.from_columns(field, [basis[0].vec()], dim * dim)
        frontier = list(basis)
        while frontier and len(basis) < dim * dim:
            grown = []
            for word in frontier:
                for op in operators:
                    candidate = op @ word
                    if not LA.in_span(span, candidate.vec()):
                        span = span.hstack(Matrix.column_vector(
                            field, candidate.vec()))
                        basis.append(candidate)
                        grown.append(candidate)
            frontier = grown
        return len(basis)

    @staticmethod
    def find_invariant_subspace(operators: Sequence[Matrix], dim: int,
                                field: Field, seeds) -> Optional[Subspace]:
        """First proper nonzero closure of a seed, or None."""
        for v in seeds:
            if all(c == 0 for c in v):
                continue
            closure = ComoduleService.close_under(operators, dim, [v], field)
            if 0 < closure.dim < dim:
                return closure
        return None

    @staticmethod
    def is_H_simple(over: ComoduleAlgebra,
                    seed: Optional[int] = None) -> SimplicityResult:
        """Search for a proper nonzero H-ideal of A."""
        field, dim = over.field, over.dim
        if dim <= 1:
            return SimplicityResult(Verdict.SIMPLE,
                                    flag=SimplicityFlag.CERTIFIED,
                                    route=SimplicityRoute.ONE_DIMENSIONAL)
        ops = SimplicityService.ideal_operators(over)
        seeds, exhaustive = SimplicityService.seed_vectors(
            field, dim, over.coinv, seed)
        witness = SimplicityService.find_invariant_subspace(
            ops, dim, field, seeds)
        if witness is not None:
            logger.info(f"'{over.name}' has an H-ideal of dimension "
                        f"{witness.dim}")
            return SimplicityResult(Verdict.NOT_SIMPLE, witness=witness)
        if exhaustive:
            return SimplicityResult(Verdict.SIMPLE,
                                    flag=SimplicityFlag.CERTIFIED,
                                    route=SimplicityRoute.EXHAUSTIVE,
                                    notes=['exhaustive search over F_p'])
        generated = SimplicityService.operator_algebra_dimension(
            ops, dim, field)
        logger.debug(f"operators of '{over.name}' generate an algebra of "
                     f"dimension {generated}")
        if generated == dim * dim:
            return SimplicityResult(
                Verdict.SIMPLE, flag=SimplicityFlag.CERTIFIED,
                route=SimplicityRoute.OPERATOR_ALGEBRA,
                notes=['operators generate all of End(A)'])
        return SimplicityResult(
            Verdict.UNKNOWN, flag=SimplicityFlag.PROBABLE,
            notes=['no H-ideal among the seeds; no certificate over Q'])

    @staticmethod
    def no_invariant_subspace(operators: Sequence[Matrix], dim: int,
                              field: Field) -> bool:
        """Every nonzero vector of F_p^dim generates all of it."""
        if not SimplicityService.exhaustible(field, dim):
            return False
        points = SimplicityService.projective_points(field, dim)
        return SimplicityService.find_invariant_subspace(
            operators, dim, field, points) is None

    @staticmethod
    def recheck_H_simple(over: ComoduleAlgebra,
                         route: SimplicityRoute) -> bool:
        """Re-run the test a certified simple verdict names."""
        field, dim = over.field, over.dim
        if route == SimplicityRoute.ONE_DIMENSIONAL:
            return dim <= 1
        ops = SimplicityService.ideal_operators(over)
        if route == SimplicityRoute.EXHAUSTIVE:
            return SimplicityService.no_invariant_subspace(ops, dim, field)
        if route == SimplicityRoute.OPERATOR_ALGEBRA:
            return SimplicityService.operator_algebra_dimension(
                ops, dim, field) == dim * dim
        return False

    @staticmethod
    def is_H_ideal(over: ComoduleAlgebra, subspace: Subspace) -> bool:
        if subspace.dim == 0:
            return True
        return all(LA.span_contains(subspace.basis, op @ subspace.basis)
                   for op in SimplicityService.ideal_operators(over))

    @staticmethod
    def to_poly(field: Field, coeffs: Sequence[Scalar]) -> Poly:
        """sympy polynomial from coefficients listed constant term first."""
        if field.is_prime_field:
            return Poly([int(c) for c in reversed(coeffs)], _x,
                        modulus=field.characteristic)
        return Poly([Rational(Fraction(c).numerator, Fraction(c).denominator)
                     for c in reversed(coeffs)], _x, domain=SYMPY_QQ)

    @staticmethod
    def candidates(algebra: FinAlgebra, bound: int,
                   budget: int) -> Iterator[Tuple[Scalar, ...]]:
        """Basis elements, then small integer combinations."""
        field, n = algebra.field, algebra.dim
        tried = 0
        for i in range(n):
            yield algebra.basis_vector(i)
            tried += 1
        for coeffs in itertools.product(range(-bound, bound + 1), repeat=n):
            if tried >= budget:
                return
            if sum(1 for c in coeffs if c) < 2:
                continue
            tried += 1
            yield tuple(field(c) for c in coeffs)

    @staticmethod
    def is_field(algebra: FinAlgebra, bound: Optional[int] = None,
                 budget: Optional[int] = None) -> FieldResult:
        """Decide whether a commutative algebra is a field by a primitive
        element theta: k[theta] = B forces B = k[x]/(minpoly)."""
        if not algebra.is_commutative():
            raise PreconditionError("field test needs a commutative algebra")
        config = current_config()
        bound = config.PRIMITIVE_BOUND if bound is None else bound
        budget = config.PRIMITIVE_BUDGET if budget is None else budget
        field, n = algebra.field, algebra.dim
        if n == 1:
            return FieldResult(Verdict.FIELD, element=algebra.one,
                               polynomial=(field.neg(field.one), field.one))
        for theta in SimplicityService.candidates(algebra, bound, budget):
            minpoly = LA.minimal_polynomial(algebra.left_mult(theta))
            degree = len(minpoly) - 1
            if degree < 2:
                continue
            irreducible = SimplicityService.to_poly(
                field, minpoly).is_irreducible
            if not irreducible:
                logger.info(f"reducible minimal polynomial of {theta}")
                return FieldResult(Verdict.NOT_FIELD, element=theta,
                                   polynomial=minpoly)
            if degree == n:
                return FieldResult(Verdict.FIELD, element=theta,
                                   polynomial=minpoly)
        logger.debug(f"no primitive element within {budget} candidates")
        return FieldResult(Verdict.UNKNOWN,
                           notes=[f"no primitive element among {budget} "
                                  f"candidates"])
