from typing import List
from hopfsage.models.comodule import Comodule
from hopfsage.models.matrix import Matrix
from hopfsage.models.relhopf import (CurryIso, HomSpace, MorphismPair,
                                     RelHopfModule)
from hopfsage.services.adjunction_service import AdjunctionService
from hopfsage.services.comodule_service import ComoduleService
from hopfsage.services.linalg_service import LinearAlgebraService as LA
from hopfsage.services.linalg_service import stack
from hopfsage.services.relhopf_service import RelHopfService
from hopfsage.utils.errors import InvalidStructureError, PreconditionError
from hopfsage.utils.logging import logger


class HomService:
    """Spaces of A-linear maps between relative Hopf modules."""

    @staticmethod
    def _same_algebra(source: RelHopfModule, target: RelHopfModule):
        if source.over != target.over:
            raise PreconditionError(
                f"'{source.name}' and '{target.name}' are modules over "
                f"different algebras")

    @staticmethod
    def hom_basis(source: RelHopfModule,
                  target: RelHopfModule) -> List[Matrix]:
        """Basis of A-Hom(M, N) as target.dim x source.dim matrices."""
        HomService._same_algebra(source, target)
        pairs = list(zip(source.operators(), target.operators()))

        def constraint(x: Matrix):
            return stack(*[x @ s - t @ x for s, t in pairs])

        return LA.solve_homogeneous_maps(
            source.field, target.dim, source.dim, constraint)

    @staticmethod
    def hom_colinear(source: RelHopfModule,
                     target: RelHopfModule) -> List[Matrix]:
        """Basis of A-Hom^H(M, N), solved jointly for both conditions."""
        HomService._same_algebra(source, target)
        pairs = list(zip(source.operators(), target.operators()))
        dh = source.hopf.dim

        def constraint(x: Matrix):
            return stack(*[x @ s - t @ x for s, t in pairs],
                         ComoduleService.colinearity_defect(
                             x, source.coaction.coaction,
                             target.coaction.coaction, dh))

        return LA.solve_homogeneous_maps(
            source.field, target.dim, source.dim, constraint)

    @staticmethod
    def pi_image(f: Matrix, source: RelHopfModule,
                 target: RelHopfModule) -> Matrix:
        """pi(f) : m -> f(m_0)_0 (x) S^-1(m_1) f(m_0)_1, as M -> N (x) H."""
        hopf = source.hopf
        field, dh = hopf.field, hopf.dim
        i_h = Matrix.identity(field, dh)
        twisted = hopf.mult @ LA.kronecker(hopf.antipode_inv, i_h) @ \
            Matrix.swap(field, dh, dh)
        return LA.kronecker(Matrix.identity(field, target.dim), twisted) @ \
            LA.kronecker(target.coaction.coaction, i_h) @ \
            LA.kronecker(f, i_h) @ source.coaction.coaction

    @staticmethod
    def hom_space(source: RelHopfModule, target: RelHopfModule) -> HomSpace:
        """A-Hom(M, N) with the right H-coaction pi."""
        basis = HomService.hom_basis(source, target)
        hopf = source.hopf
        field, dh, r = hopf.field, hopf.dim, len(basis)
        space = HomSpace(source, target, tuple(basis),
                         Comodule(hopf, 0, Matrix.zeros(field, 0, 0)), True)
        diagnostics = []
        columns = []
        i_n = Matrix.identity(field, target.dim)
        legs = [LA.kronecker(i_n, Matrix.basis_vector(field, dh, k)
                             .transpose()) for k in range(dh)]
        for i, f in enumerate(basis):
            image = HomService.pi_image(f, source, target)
            column = [field.zero] * (r * dh)
            for k, leg in enumerate(legs):
                coords = space.coordinates(leg @ image)
                if coords is None:
                    diagnostics.append(
                        f"component {k + 1} of pi on basis map {i + 1} is "
                        f"not A-linear")
                    continue
                for j, c in enumerate(coords):
                    column[j * dh + k] = c
            columns.append(column)
        coaction = Matrix.from_columns(field, columns, r * dh)
        if not diagnostics:
            diagnostics = [str(p) for p in
                           ComoduleService.coaction_diagnostics(
                               hopf, r, coaction)]
        if diagnostics:
            logger.warning(
                f"pi on A-Hom('{source.name}', '{target.name}') is not a "
                f"coaction: {'; '.join(diagnostics)}")
        name = f"Hom({source.name},{target.name})"
        return HomSpace(source, target, tuple(basis),
                        Comodule(hopf, r, coaction, name), not diagnostics,
                        tuple(diagnostics))

    @staticmethod
    def hom_coinvariants_equal_colinear(source: RelHopfModule,
                                        target: RelHopfModule) -> bool:
        space = HomService.hom_space(source, target)
        if space.diagnostics:
            return False
        rows = target.dim * source.dim
        field = source.field
        coinv = ComoduleService.coinvariants(space.comodule)
        from_pi = Matrix.from_columns(
            field, [space.element(v).vec() for v in coinv.vectors()], rows)
        colinear = Matrix.from_columns(
            field, [f.vec() for f in HomService.hom_colinear(source, target)],
            rows)
        return LA.same_span(from_pi, colinear)

    @staticmethod
    def hom_from_regular(target: RelHopfModule) -> RelHopfModule:
        """A-Hom(A, N) with (a f)(u) = f(u a) and the coaction pi."""
        over = target.over
        regular = RelHopfService.regular_module(over)
        space = HomService.hom_space(regular, target)
        columns = []
        for i in range(over.dim):
            right = over.right_mult(i)
            for f in space.basis:
                columns.append(space.coordinates(f @ right))
        action = Matrix.from_columns(target.field, columns, space.dim)
        return RelHopfService.require_module(
            over, space.dim, action, space.comodule.coaction,
            f"Hom({over.name},{target.name})")

    @staticmethod
    def eval_iso_psi(target: RelHopfModule) -> MorphismPair:
        """psi(f) = f(1) and its inverse n -> (a -> a n)."""
        over = target.over
        hom = HomService.hom_from_regular(target)
        space_basis = HomService.hom_basis(
            RelHopfService.regular_module(over), target)
        field = target.field
        psi = Matrix.from_columns(
            field, [(f @ over.algebra.unit).entries for f in space_basis],
            target.dim)
        basis_matrix = Matrix.from_columns(
            field, [f.vec() for f in space_basis], target.dim * over.dim)
        i_a = Matrix.identity(field, over.dim)
        columns = []
        for n in range(target.dim):
            multiply = target.action @ LA.kronecker(
                i_a, Matrix.basis_vector(field, target.dim, n))
            columns.append(LA.coordinates(basis_matrix, multiply.vec()))
        psi_inv = Matrix.from_columns(field, columns, len(space_basis))
        return MorphismPair(RelHopfService.morphism(psi, hom, target),
                            RelHopfService.morphism(psi_inv, target, hom))

    @staticmethod
    def hom_module(source: RelHopfModule,
                   target: RelHopfModule) -> RelHopfModule:
        """A-Hom(M, N) for commutative A, with (a f)(m) = a f(m)."""
        over = source.over
        if not over.commutative:
            raise PreconditionError(
                f"A-Hom as a module needs '{over.name}' commutative")
        space = HomService.hom_space(source, target)
        columns = []
        for op in target.operators():
            for f in space.basis:
                columns.append(space.coordinates(op @ f))
        action = Matrix.from_columns(source.field, columns, space.dim)
        return RelHopfService.require_module(
            over, space.dim, action, space.comodule.coaction,
            f"Hom({source.name},{target.name})")

    @staticmethod
    def coinvariant_hom_iso(target: RelHopfModule) -> bool:
        """f -> f(1) maps A-Hom^H(A, M) onto M^coH bijectively."""
        over = target.over
        basis = HomService.hom_colinear(
            RelHopfService.regular_module(over), target)
        images = Matrix.from_columns(
            target.field, [(f @ over.algebra.unit).entries for f in basis],
            target.dim)
        return len(basis) == target.coinv.dim and \
            LA.rank(images) == len(basis) and \
            LA.span_contains(target.coinv.basis, images)

    @staticmethod
    def curry_iso(m: RelHopfModule, n: RelHopfModule,
                  p: RelHopfModule) -> CurryIso:
        """phi(f)(m (x) n) = f(m)(n), with both sides solved independently."""
        over = m.over
        if not over.commutative:
            raise PreconditionError(f"'{over.name}' is not commutative")
        if not over.hopf.is_commutative():
            raise PreconditionError(f"'{over.hopf.name}' is not commutative")
        field = m.field
        inner = HomService.hom_space(n, p)
        hom = HomService.hom_module(n, p)
        tensor = AdjunctionService.tensor_over_A(m, n)
        left = HomService.hom_colinear(m, hom)
        right = HomService.hom_colinear(tensor.module, p)

        def curry(f: Matrix) -> Matrix:
            ambient = Matrix.zeros(field, p.dim, m.dim * n.dim)
            columns = []
            for i in range(m.dim):
                value = inner.element(f.column(i))
                for j in range(n.dim):
                    columns.append(value.column(j))
            if columns:
                ambient = Matrix.from_columns(field, columns, p.dim)
            return ambient @ tensor.quotient.section

        def uncurry(g: Matrix) -> Matrix:
            ambient = g @ tensor.quotient.projection
            columns = []
            for i in range(m.dim):
                value = ambient.select_columns(
                    range(i * n.dim, (i + 1) * n.dim))
                coords = inner.coordinates(value)
                if coords is None:
                    raise InvalidStructureError(
                        "uncurried map is not A-linear")
                columns.append(coords)
            return Matrix.from_columns(field, columns, inner.dim)

        phi = HomService._on_coordinates(field, left, right, curry)
        phi_inv = HomService._on_coordinates(field, right, left, uncurry)
        logger.debug(f"curry iso for ({m.name}, {n.name}, {p.name}): "
                     f"dimensions {len(left)} and {len(right)}")
        return CurryIso(hom, tensor, tuple(left), tuple(right), phi, phi_inv)

    @staticmethod
    def _on_coordinates(field, domain: List[Matrix], codomain: List[Matrix],
                        transform) -> Matrix:
        """Matrix of transform from the span of domain to that of codomain."""
        if not codomain:
            return Matrix.zeros(field, 0, len(domain))
        rows = codomain[0].rows * codomain[0].cols
        basis = Matrix.from_columns(field, [c.vec() for c in codomain], rows)
        columns = []
        for d in domain:
            coords = LA.coordinates(basis, transform(d).vec())
            if coords is None:
                raise InvalidStructureError(
                    "image leaves the computed solution space")
            columns.append(coords)
        return Matrix.from_columns(field, columns, len(codomain))

