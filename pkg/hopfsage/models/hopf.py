from dataclasses import dataclass, field as dc_field
from typing import List, Optional, Tuple
from hopfsage.models.field import Field, Scalar
from hopfsage.models.matrix import Matrix
from hopfsage.services.linalg_service import LinearAlgebraService


@dataclass(frozen=True)
class Diagnostic:
    """A failed axiom together with the offending basis index tuples."""
    axiom: str
    indices: Tuple[Tuple[int, ...], ...] = ()
    detail: str = ''

    def __str__(self) -> str:
        text = self.axiom
        if self.indices:
            shown = ', '.join('(' + ','.join(str(i + 1) for i in t) + ')'
                              for t in self.indices[:8])
            more = '' if len(self.indices) <= 8 else \
                f" and {len(self.indices) - 8} more"
            text += f" at basis indices {shown}{more}"
        if self.detail:
            text += f" ({self.detail})"
        return text


@dataclass(frozen=True)
class FinAlgebra:
    """Finite-dimensional algebra by structure constants.

    ``mult`` is dim x dim^2 with column i * dim + j holding e_i e_j;
    ``unit`` is the dim x 1 coordinate column of 1.
    """
    field: Field
    dim: int
    mult: Matrix
    unit: Matrix

    def product(self, a, b) -> Tuple[Scalar, ...]:
        kron = LinearAlgebraService.kronecker
        return (self.mult @ kron(Matrix.column_vector(self.field, a),
                                 Matrix.column_vector(self.field, b))).entries

    def left_mult(self, a) -> Matrix:
        """L_a as a dim x dim matrix."""
        return self.mult @ LinearAlgebraService.kronecker(
            Matrix.column_vector(self.field, a),
            Matrix.identity(self.field, self.dim))

    def right_mult(self, a) -> Matrix:
        return self.mult @ LinearAlgebraService.kronecker(
            Matrix.identity(self.field, self.dim),
            Matrix.column_vector(self.field, a))

    def basis_vector(self, i: int) -> Tuple[Scalar, ...]:
        return Matrix.basis_vector(self.field, self.dim, i).entries

    @property
    def one(self) -> Tuple[Scalar, ...]:
        return self.unit.entries

    def is_commutative(self) -> bool:
        swap = Matrix.swap(self.field, self.dim, self.dim)
        return self.mult == self.mult @ swap


@dataclass(frozen=True)
class FinCoalgebra:
    """``comult`` is dim^2 x dim (column i = Delta(e_i)), ``counit`` 1 x dim."""
    field: Field
    dim: int
    comult: Matrix
    counit: Matrix


@dataclass(frozen=True)
class HopfAlgebra:
    name: str
    algebra: FinAlgebra
    coalgebra: FinCoalgebra
    antipode: Matrix
    antipode_inv: Matrix

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def mult(self) -> Matrix:
        return self.algebra.mult

    @property
    def unit(self) -> Matrix:
        return self.algebra.unit

    @property
    def comult(self) -> Matrix:
        return self.coalgebra.comult

    @property
    def counit(self) -> Matrix:
        return self.coalgebra.counit

    def is_commutative(self) -> bool:
        return self.algebra.is_commutative()


@dataclass
class HopfData:
    """Raw, unvalidated structure constants of a Hopf algebra candidate."""
    name: str
    field: Field
    dim: int
    mult: Matrix
    unit: Matrix
    comult: Matrix
    counit: Matrix
    antipode: Matrix
    notes: List[str] = dc_field(default_factory=list)
    source_line: Optional[int] = None
