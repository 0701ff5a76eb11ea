from hopfsage.models.comodule import Comodule
from hopfsage.models.matrix import Matrix
from hopfsage.models.relhopf import (BModule, ComoduleAlgebra, MTensorH,
                                     QuotientModule, RelHopfModule,
                                     RelHopfMorphism, UnitMap)
from hopfsage.services.comodule_service import ComoduleService
from hopfsage.services.linalg_service import LinearAlgebraService as LA
from hopfsage.services.relhopf_service import RelHopfService
from hopfsage.utils.errors import InvalidStructureError, PreconditionError
from hopfsage.utils.logging import logger


class AdjunctionService:
    """Tensor constructions and the adjunction between A (x)_B - and (-)^coH."""

    @staticmethod
    def tensor_with_comodule(module: RelHopfModule, comodule: Comodule,
                             name: str = '') -> RelHopfModule:
        """N (x) V with a(n (x) v) = an (x) v and codiagonal coaction."""
        if comodule.hopf != module.hopf:
            raise PreconditionError("comodule over a different Hopf algebra")
        f = module.field
        action = LA.kronecker(module.action,
                              Matrix.identity(f, comodule.dim))
        coaction = ComoduleService.tensor_coaction(
            module.hopf, module.dim, module.coaction.coaction,
            comodule.dim, comodule.coaction)
        return RelHopfService.require_module(
            module.over, module.dim * comodule.dim, action, coaction,
            name or f"{module.name}(x){comodule.name or 'V'}")

    @staticmethod
    def tensor_commutative_H(comodule: Comodule, module: RelHopfModule,
                             name: str = '') -> RelHopfModule:
        """V (x) N with a(v (x) n) = v (x) an; needs H commutative."""
        hopf = module.hopf
        if not hopf.is_commutative():
            raise PreconditionError(
                f"V (x) N needs '{hopf.name}' commutative")
        if comodule.hopf != hopf:
            raise PreconditionError("comodule over a different Hopf algebra")
        f = module.field
        flip = LA.kronecker(Matrix.swap(f, module.over.dim, comodule.dim),
                            Matrix.identity(f, module.dim))
        action = LA.kronecker(Matrix.identity(f, comodule.dim),
                              module.action) @ flip
        coaction = ComoduleService.tensor_coaction(
            hopf, comodule.dim, comodule.coaction,
            module.dim, module.coaction.coaction)
        return RelHopfService.require_module(
            module.over, comodule.dim * module.dim, action, coaction,
            name or f"{comodule.name or 'V'}(x){module.name}")

    @staticmethod
    def tensor_over_A(left: RelHopfModule, right: RelHopfModule,
                      name: str = '') -> QuotientModule:
        """M (x)_A N for commutative A, modulo ma (x) n - m (x) an."""
        over = left.over
        if not over.commutative:
            raise PreconditionError(
                f"M (x)_A N needs '{over.name}' commutative")
        if right.over != over:
            raise PreconditionError("modules over different algebras")
        f = over.field
        i_m = Matrix.identity(f, left.dim)
        i_n = Matrix.identity(f, right.dim)
        relations = Matrix.zeros(f, left.dim * right.dim, 0)
        for a_m, a_n in zip(left.operators(), right.operators()):
            relations = relations.hstack(
                LA.kronecker(a_m, i_n) - LA.kronecker(i_m, a_n))
        coaction = ComoduleService.tensor_coaction(
            over.hopf, left.dim, left.coaction.coaction,
            right.dim, right.coaction.coaction)
        return RelHopfService.induced_module(
            over, RelHopfService.quotient(relations),
            LA.kronecker(left.action, i_n), coaction,
            name or f"{left.name}(x)_A{right.name}")

    @staticmethod
    def tensor_over_B(over: ComoduleAlgebra, bmodule: BModule,
                      name: str = '') -> QuotientModule:
        """T(P) = A (x)_B P, modulo ab (x) p - a (x) bp."""
        f = over.field
        i_a = Matrix.identity(f, over.dim)
        i_p = Matrix.identity(f, bmodule.dim)
        relations = Matrix.zeros(f, over.dim * bmodule.dim, 0)
        for b, beta in zip(over.coinv.vectors(), bmodule.operators()):
            relations = relations.hstack(
                LA.kronecker(over.algebra.right_mult(b), i_p)
                - LA.kronecker(i_a, beta))
        dh = over.hopf.dim
        coaction = LA.kronecker(
            i_a, Matrix.swap(f, dh, bmodule.dim)) @ \
            LA.kronecker(over.coaction.coaction, i_p)
        return RelHopfService.induced_module(
            over, RelHopfService.quotient(relations),
            LA.kronecker(over.algebra.mult, i_p), coaction,
            name or f"{over.name}(x)_B{bmodule.name}")

    @staticmethod
    def unit_map(bmodule: BModule) -> UnitMap:
        """u_P(p) = 1 (x) p, in the coinvariant coordinates of A (x)_B P."""
        over = bmodule.over
        tensor = AdjunctionService.tensor_over_B(over, bmodule)
        raw = tensor.quotient.projection @ LA.kronecker(
            over.algebra.unit, Matrix.identity(over.field, bmodule.dim))
        matrix = LA.coordinate_matrix(tensor.module.coinv.basis, raw)
        if matrix is None:
            raise InvalidStructureError(
                f"1 (x) p is not coinvariant in '{tensor.module.name}'")
        injective = LA.rank(matrix) == bmodule.dim
        if not injective:
            logger.error(f"unit map of '{bmodule.name}' is not injective")
        bijective = injective and tensor.module.coinv.dim == bmodule.dim
        logger.debug(f"unit map of '{bmodule.name}': injective={injective} "
                     f"bijective={bijective}")
        return UnitMap(bmodule, tensor, matrix, injective, bijective)

    @staticmethod
    def counit_map(module: RelHopfModule) -> RelHopfMorphism:
        """c_M(a (x) m) = am from A (x)_B M^coH."""
        over = module.over
        bmodule = RelHopfService.coinvariant_bmodule(module)
        tensor = AdjunctionService.tensor_over_B(over, bmodule)
        c = module.action @ LA.kronecker(
            Matrix.identity(module.field, over.dim), module.coinv.basis) @ \
            tensor.quotient.section
        return RelHopfService.morphism(c, tensor.module, module)

    @staticmethod
    def triangle_identity(module: RelHopfModule) -> bool:
        """(c_M)^coH u_{M^coH} is the identity of M^coH."""
        unit = AdjunctionService.unit_map(
            RelHopfService.coinvariant_bmodule(module))
        counit = AdjunctionService.counit_map(module)
        composite = counit.matrix @ counit.source.coinv.basis @ unit.matrix
        coords = LA.coordinate_matrix(module.coinv.basis, composite)
        return coords is not None and \
            coords == Matrix.identity(module.field, module.coinv.dim)

    @staticmethod
    def m_tensor_H(module: RelHopfModule, name: str = '') -> MTensorH:
        """M (x) H with a(m (x) h) = am (x) h, rho = m_0 (x) h_1 (x) m_1 h_2.

        f(m) = m_0 (x) S(m_1) and g(m (x) h) = eps(h) m identify M with
        (M (x) H)^coH.
        """
        hopf = module.hopf
        field, dm, dh = hopf.field, module.dim, hopf.dim
        i_m, i_h = Matrix.identity(field, dm), Matrix.identity(field, dh)
        action = LA.kronecker(module.action, i_h)
        coaction = LA.kron(i_m, i_h, hopf.mult) @ \
            LA.kron(i_m, Matrix.swap(field, dh, dh), i_h) @ \
            LA.kronecker(module.coaction.coaction, hopf.comult)
        product = RelHopfService.require_module(
            module.over, dm * dh, action, coaction,
            name or f"{module.name}(x)H")
        coinv = product.coinv.basis
        f = LA.coordinate_matrix(
            coinv, LA.kronecker(i_m, hopf.antipode) @
            module.coaction.coaction)
        if f is None:
            raise InvalidStructureError(
                f"m_0 (x) S(m_1) is not coinvariant in '{product.name}'")
        g = LA.kronecker(i_m, hopf.counit) @ coinv
        return MTensorH(module, product, f, g)
