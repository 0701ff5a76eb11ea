from dataclasses import dataclass
from typing import Sequence, Tuple
from hopfsage.models.field import Field, Scalar
from hopfsage.models.hopf import HopfAlgebra
from hopfsage.models.matrix import Matrix
from hopfsage.services.linalg_service import LinearAlgebraService


@dataclass(frozen=True)
class Comodule:
    """Right H-comodule; column i of ``coaction`` is rho(e_i) in M (x) H."""
    hopf: HopfAlgebra
    dim: int
    coaction: Matrix
    name: str = ''

    @property
    def field(self) -> Field:
        return self.hopf.field


@dataclass(frozen=True)
class Subspace:
    """Subspace of k^ambient_dim spanned by the independent columns of basis."""
    field: Field
    ambient_dim: int
    basis: Matrix

    @property
    def dim(self) -> int:
        return self.basis.cols

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> 'Subspace':
        return cls(field, ambient_dim, Matrix.zeros(field, ambient_dim, 0))

    @classmethod
    def from_vectors(cls, field: Field, ambient_dim: int,
                     vectors: Sequence[Sequence[Scalar]]) -> 'Subspace':
        if not vectors:
            return cls.zero(field, ambient_dim)
        spanning = Matrix.from_columns(field, vectors, ambient_dim)
        return cls(field, ambient_dim,
                   LinearAlgebraService.image_basis(spanning))

    def vectors(self) -> Tuple[Tuple[Scalar, ...], ...]:
        return tuple(self.basis.columns())

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_whole(self) -> bool:
        return self.dim == self.ambient_dim
