from typing import List, Optional, Sequence, Tuple
from hopfsage.models.comodule import Comodule, Subspace
from hopfsage.models.field import Scalar
from hopfsage.models.hopf import Diagnostic, HopfAlgebra
from hopfsage.models.matrix import Matrix
from hopfsage.services.linalg_service import LinearAlgebraService as LA
from hopfsage.services.linalg_service import stack
from hopfsage.utils.axioms import identity_diagnostics, shape_diagnostics
from hopfsage.utils.errors import DimensionMismatchError, InvalidStructureError
from hopfsage.utils.logging import logger


class ComoduleService:
    """Right H-comodules: validation, coinvariants, subcomodules."""

    @staticmethod
    def coaction_diagnostics(hopf: HopfAlgebra, dim: int, coaction: Matrix,
                             label: str = 'coaction') -> List[Diagnostic]:
        f, dh = hopf.field, hopf.dim
        problems = shape_diagnostics(label, coaction, (dim * dh, dim))
        if problems:
            return problems
        i_m, i_h = Matrix.identity(f, dim), Matrix.identity(f, dh)
        problems += identity_diagnostics(
            f"{label} coassociativity", LA.kronecker(coaction, i_h) @ coaction,
            LA.kronecker(i_m, hopf.comult) @ coaction, (dim,))
        problems += identity_diagnostics(
            f"{label} counit", LA.kronecker(i_m, hopf.counit) @ coaction, i_m,
            (dim,))
        return problems

    @staticmethod
    def validate_comodule(hopf: HopfAlgebra, dim: int, coaction: Matrix,
                          name: str = ''
                          ) -> Tuple[Optional[Comodule], List[Diagnostic]]:
        problems = ComoduleService.coaction_diagnostics(hopf, dim, coaction)
        if problems:
            logger.warning(
                f"Comodule '{name}' failed validation: "
                f"{'; '.join(str(p) for p in problems)}")
            return None, problems
        return Comodule(hopf, dim, coaction, name), []

    @staticmethod
    def trivial(hopf: HopfAlgebra, dim: int = 1, name: str = 'k') -> Comodule:
        """rho(m) = m (x) 1."""
        return Comodule(hopf, dim, LA.kronecker(
            Matrix.identity(hopf.field, dim), hopf.unit), name)

    @staticmethod
    def regular(hopf: HopfAlgebra, name: str = '') -> Comodule:
        """H as a comodule over itself via Delta."""
        return Comodule(hopf, hopf.dim, hopf.comult, name or hopf.name)

    @staticmethod
    def coinvariant_operator(hopf: HopfAlgebra, dim: int,
                             coaction: Matrix) -> Matrix:
        """rho - (- (x) 1); its kernel is the space of coinvariants."""
        return coaction - LA.kronecker(Matrix.identity(hopf.field, dim),
                                       hopf.unit)

    @staticmethod
    def coinvariants(comodule: Comodule) -> Subspace:
        kernel = LA.kernel_basis(ComoduleService.coinvariant_operator(
            comodule.hopf, comodule.dim, comodule.coaction))
        return Subspace(comodule.field, comodule.dim, kernel)

    @staticmethod
    def components(comodule: Comodule) -> List[Matrix]:
        """The maps m -> (id (x) h_k^*) rho(m), one per basis element of H."""
        f, dh = comodule.field, comodule.hopf.dim
        i_m = Matrix.identity(f, comodule.dim)
        return [LA.kronecker(i_m, Matrix.basis_vector(f, dh, k).transpose())
                @ comodule.coaction for k in range(dh)]

    @staticmethod
    def is_colinear(f: Matrix, source: Comodule, target: Comodule) -> bool:
        """rho_N f = (f (x) id) rho_M."""
        if f.shape != (target.dim, source.dim):
            raise DimensionMismatchError(
                f"map of shape {f.shape} between comodules of dimension "
                f"{source.dim} and {target.dim}")
        i_h = Matrix.identity(f.field, source.hopf.dim)
        return target.coaction @ f == \
            LA.kronecker(f, i_h) @ source.coaction

    @staticmethod
    def colinearity_defect(f: Matrix, source_coaction: Matrix,
                           target_coaction: Matrix, dim_h: int) -> Matrix:
        """rho_N f - (f (x) id) rho_M, linear in f."""
        i_h = Matrix.identity(f.field, dim_h)
        return target_coaction @ f - \
            LA.kronecker(f, i_h) @ source_coaction

    @staticmethod
    def close_under(operators: Sequence[Matrix], dim: int,
                    seeds: Sequence[Sequence[Scalar]], field) -> Subspace:
        """Smallest subspace containing the seeds and stable under operators.

        Terminates because every round either stops or strictly raises
        the dimension.
        """
        current = Subspace.from_vectors(field, dim, list(seeds))
        while True:
            images = [op @ current.basis for op in operators]
            grown = current.basis
            for image in images:
                grown = grown.hstack(image)
            basis = LA.image_basis(grown)
            if basis.cols == current.dim:
                return current
            current = Subspace(field, dim, basis)

    @staticmethod
    def generated_subcomodule(comodule: Comodule,
                              v: Sequence[Scalar]) -> Subspace:
        """Span of the first legs of rho(v), iterated to a fixed point."""
        if len(v) != comodule.dim:
            raise DimensionMismatchError(
                f"vector of length {len(v)} in a comodule of dimension "
                f"{comodule.dim}")
        field = comodule.field
        legs = [op.apply(tuple(field(x) for x in v))
                for op in ComoduleService.components(comodule)]
        return ComoduleService.close_under(
            ComoduleService.components(comodule), comodule.dim,
            [leg for leg in legs if any(x != 0 for x in leg)], field)

    @staticmethod
    def is_subcomodule(comodule: Comodule, subspace: Subspace) -> bool:
        return all(LA.span_contains(subspace.basis, op @ subspace.basis)
                   for op in ComoduleService.components(comodule)) \
            if subspace.dim else True

    @staticmethod
    def restrict(comodule: Comodule, subspace: Subspace,
                 name: str = '') -> Comodule:
        """The coaction of a subcomodule, in the coordinates of its basis."""
        hopf = comodule.hopf
        if subspace.dim == 0:
            return Comodule(hopf, 0, Matrix.zeros(hopf.field, 0, 0), name)
        lifted = LA.kronecker(subspace.basis,
                              Matrix.identity(hopf.field, hopf.dim))
        coaction = LA.coordinate_matrix(
            lifted, comodule.coaction @ subspace.basis)
        if coaction is None:
            raise InvalidStructureError(
                f"subspace of '{comodule.name}' is not a subcomodule")
        return Comodule(hopf, subspace.dim, coaction, name)

    @staticmethod
    def tensor_coaction(hopf: HopfAlgebra, dim_m: int, coaction_m: Matrix,
                        dim_v: int, coaction_v: Matrix) -> Matrix:
        """Codiagonal coaction m (x) v -> m_0 (x) v_0 (x) m_1 v_1."""
        f = hopf.field
        i_m, i_v = Matrix.identity(f, dim_m), Matrix.identity(f, dim_v)
        i_h = Matrix.identity(f, hopf.dim)
        flip = LA.kron(i_m, Matrix.swap(f, hopf.dim, dim_v), i_h)
        return LA.kron(i_m, i_v, hopf.mult) @ flip @ \
            LA.kronecker(coaction_m, coaction_v)

    @staticmethod
    def tensor(left: Comodule, right: Comodule, name: str = '') -> Comodule:
        return Comodule(left.hopf, left.dim * right.dim,
                        ComoduleService.tensor_coaction(
                            left.hopf, left.dim, left.coaction,
                            right.dim, right.coaction), name)

    @staticmethod
    def is_cosemisimple(hopf: HopfAlgebra) -> Tuple[bool, Optional[Matrix]]:
        """Dual Maschke test: a functional lambda with lambda(1) = 1 and
        (id (x) lambda) Delta = 1 lambda.

        Returns (True, lambda as a 1 x dim matrix) or (False, None).
        """
        f, d = hopf.field, hopf.dim
        i_d = Matrix.identity(f, d)

        def constraint(x: Matrix):
            return stack(LA.kronecker(i_d, x) @ hopf.comult - hopf.unit @ x,
                         x @ hopf.unit)

        target = [f.zero] * (d * d) + [f.one]
        integral = LA.solve_affine_map(f, 1, d, constraint, target)
        if integral is None:
            logger.info(f"'{hopf.name}' is not cosemisimple: "
                        f"no normalized integral")
            return False, None
        logger.debug(f"'{hopf.name}' cosemisimple with integral {integral!r}")
        return True, integral

    @staticmethod
    def integral_diagnostics(hopf: HopfAlgebra,
                             integral: Matrix) -> List[Diagnostic]:
        i_d = Matrix.identity(hopf.field, hopf.dim)
        problems = identity_diagnostics(
            'integral', LA.kronecker(i_d, integral) @ hopf.comult,
            hopf.unit @ integral, (hopf.dim,))
        problems += identity_diagnostics(
            'integral normalization', integral @ hopf.unit,
            Matrix.identity(hopf.field, 1), ())
        return problems
