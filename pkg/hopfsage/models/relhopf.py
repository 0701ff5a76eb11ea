from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple
from hopfsage.models.comodule import Comodule, Subspace
from hopfsage.models.field import Field, Scalar
from hopfsage.models.hopf import FinAlgebra, HopfAlgebra
from hopfsage.models.matrix import Matrix
from hopfsage.services.linalg_service import LinearAlgebraService


@dataclass(frozen=True)
class ComoduleAlgebra:
    """Right H-comodule algebra A with its coinvariant subalgebra B."""
    name: str
    algebra: FinAlgebra
    coaction: Comodule
    coinv: Subspace
    commutative: bool

    @property
    def hopf(self) -> HopfAlgebra:
        return self.coaction.hopf

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def left_mult(self, i: int) -> Matrix:
        return self.algebra.left_mult(self.algebra.basis_vector(i))

    def right_mult(self, i: int) -> Matrix:
        return self.algebra.right_mult(self.algebra.basis_vector(i))


@dataclass(frozen=True)
class RelHopfModule:
    """Relative Hopf module: left A-module and right H-comodule.

    ``action`` is dim x (dim A * dim) with column i * dim + j holding
    e_i . m_j.
    """
    name: str
    over: ComoduleAlgebra
    dim: int
    action: Matrix
    coaction: Comodule
    coinv: Subspace

    @property
    def field(self) -> Field:
        return self.over.field

    @property
    def hopf(self) -> HopfAlgebra:
        return self.over.hopf

    def acting(self, a: Sequence[Scalar]) -> Matrix:
        """The operator m -> a . m."""
        return self.action @ LinearAlgebraService.kronecker(
            Matrix.column_vector(self.field, a),
            Matrix.identity(self.field, self.dim))

    def operators(self) -> List[Matrix]:
        """Action operators of the basis of A, in basis order."""
        return [self.acting(self.over.algebra.basis_vector(i))
                for i in range(self.over.dim)]


@dataclass(frozen=True)
class RelHopfMorphism:
    source: RelHopfModule
    target: RelHopfModule
    matrix: Matrix


@dataclass(frozen=True)
class BModule:
    """Module over B = A^coH, acting through the coinvariant basis of A.

    ``action`` is dim x (dim B * dim) with column i * dim + j holding
    b_i . p_j.
    """
    name: str
    over: ComoduleAlgebra
    dim: int
    action: Matrix

    @property
    def field(self) -> Field:
        return self.over.field

    def acting(self, b: Sequence[Scalar]) -> Matrix:
        return self.action @ LinearAlgebraService.kronecker(
            Matrix.column_vector(self.field, b),
            Matrix.identity(self.field, self.dim))

    def operators(self) -> List[Matrix]:
        r = self.over.coinv.dim
        return [self.acting(Matrix.basis_vector(self.field, r, i).entries)
                for i in range(r)]


@dataclass(frozen=True)
class Quotient:
    """A quotient V / R given by a complement of standard basis vectors.

    ``projection`` (q x n) kills R and satisfies projection @ section = I;
    ``section`` (n x q) spans the complement fixed by column-pivot order.
    """
    relations: Matrix
    section: Matrix
    projection: Matrix

    @property
    def dim(self) -> int:
        return self.section.cols

    @property
    def ambient_dim(self) -> int:
        return self.section.rows


@dataclass(frozen=True)
class QuotientModule:
    """A relative Hopf module built as a quotient of an ambient object."""
    module: RelHopfModule
    quotient: Quotient


@dataclass(frozen=True)
class HomSpace:
    """Basis of A-linear maps M -> N together with the coaction pi.

    ``diagnostics`` lists why pi failed to be a coaction on the space.
    """
    source: RelHopfModule
    target: RelHopfModule
    basis: Tuple[Matrix, ...]
    comodule: Comodule
    coassociative: bool
    diagnostics: Tuple[str, ...] = ()

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_matrix(self) -> Matrix:
        """Columns are the vectorized basis maps."""
        f = self.source.field
        return Matrix.from_columns(
            f, [b.vec() for b in self.basis],
            self.target.dim * self.source.dim)

    def element(self, coords: Sequence[Scalar]) -> Matrix:
        f = self.source.field
        out = Matrix.zeros(f, self.target.dim, self.source.dim)
        for c, b in zip(coords, self.basis):
            if c != 0:
                out = out + b.scale(c)
        return out

    def coordinates(self, f: Matrix) -> Optional[Tuple[Scalar, ...]]:
        if not self.basis:
            return () if f.is_zero() else None
        return LinearAlgebraService.coordinates(self.basis_matrix(), f.vec())


@dataclass(frozen=True)
class MorphismPair:
    forward: RelHopfMorphism
    backward: RelHopfMorphism


@dataclass(frozen=True)
class UnitMap:
    """u_P : P -> (A (x)_B P)^coH in the coinvariant coordinates."""
    bmodule: BModule
    tensor: QuotientModule
    matrix: Matrix
    injective: bool
    bijective: bool


@dataclass(frozen=True)
class MTensorH:
    """M (x) H with f : M -> (M (x) H)^coH and its inverse g."""
    source: RelHopfModule
    module: RelHopfModule
    f: Matrix
    g: Matrix


@dataclass(frozen=True)
class SmashAlgebra:
    """A # H* on the basis e_i (x) h^k (index i * dim H + k), where h^k is
    the dual basis of H.

    ``embed_algebra`` sends a to a (x) eps, ``embed_dual`` sends f to 1 (x) f.
    """
    base: ComoduleAlgebra
    algebra: FinAlgebra
    embed_algebra: Matrix
    embed_dual: Matrix

    @property
    def dim(self) -> int:
        return self.algebra.dim


@dataclass(frozen=True)
class CurryIso:
    """phi between A-Hom^H(M, A-Hom(N, P)) and A-Hom^H(M (x)_A N, P).

    ``phi`` and ``phi_inv`` act on coordinates in ``left_basis`` and
    ``right_basis``.
    """
    hom_module: RelHopfModule
    tensor: QuotientModule
    left_basis: Tuple[Matrix, ...]
    right_basis: Tuple[Matrix, ...]
    phi: Matrix
    phi_inv: Matrix
