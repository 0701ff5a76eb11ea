from fractions import Fraction
from math import lcm
from typing import Callable, List, Optional, Sequence, Tuple, Union
from hopfsage.models.field import Field, Scalar
from hopfsage.models.matrix import Matrix
from hopfsage.utils.errors import DimensionMismatchError, MixedFieldError

Vector = Tuple[Scalar, ...]
LinearConstraint = Callable[[Matrix], Sequence[Scalar]]


class LinearAlgebraService:
    """Exact elimination kernel shared by every other service.

    Over Q the forward phase is fraction-free (Bareiss) on integer-scaled
    rows; over F_p it is plain Gauss-Jordan. Pivots are always the first
    nonzero entry in column order, so every result is deterministic.
    """

    @staticmethod
    def rref(a: Matrix) -> Tuple[List[List[Scalar]], List[int]]:
        """Reduced row echelon form: (nonzero rows, pivot columns)."""
        if a.field.is_prime_field:
            return LinearAlgebraService._rref_mod_p(a)
        return LinearAlgebraService._rref_bareiss(a)

    @staticmethod
    def _rref_mod_p(a: Matrix) -> Tuple[List[List[int]], List[int]]:
        p = a.field.characteristic
        rows = [list(a.row(i)) for i in range(a.rows)]
        pivots = []
        k = 0
        for col in range(a.cols):
            if k == len(rows):
                break
            piv = next((i for i in range(k, len(rows)) if rows[i][col]), None)
            if piv is None:
                continue
            rows[k], rows[piv] = rows[piv], rows[k]
            inv = pow(rows[k][col], -1, p)
            rows[k] = [x * inv % p for x in rows[k]]
            for i in range(len(rows)):
                if i != k and rows[i][col]:
                    c = rows[i][col]
                    rows[i] = [(x - c * y) % p
                               for x, y in zip(rows[i], rows[k])]
            pivots.append(col)
            k += 1
        return rows[:k], pivots

    @staticmethod
    def _rref_bareiss(a: Matrix) -> Tuple[List[List[Fraction]], List[int]]:
        rows = []
        for i in range(a.rows):
            row = a.row(i)
            den = lcm(*(x.denominator for x in row)) if row else 1
            rows.append([int(x * den) for x in row])
        n = len(rows)
        pivots = []
        k = 0
        prev = 1
        for col in range(a.cols):
            if k == n:
                break
            piv = next((i for i in range(k, n) if rows[i][col]), None)
            if piv is None:
                continue
            rows[k], rows[piv] = rows[piv], rows[k]
            pk = rows[k][col]
            row_k = rows[k]
            for i in range(k + 1, n):
                row_i = rows[i]
                mi = row_i[col]
                for j in range(col + 1, a.cols):
                    # exact by Sylvester's determinant identity
                    row_i[j] = (pk * row_i[j] - mi * row_k[j]) // prev
                row_i[col] = 0
            prev = pk
            pivots.append(col)
            k += 1
        echelon = [[Fraction(x) for x in rows[i]] for i in range(k)]
        for r in range(k - 1, -1, -1):
            col = pivots[r]
            pv = echelon[r][col]
            echelon[r] = [x / pv for x in echelon[r]]
            for i in range(r):
                c = echelon[i][col]
                if c:
                    echelon[i] = [x - c * y
                                  for x, y in zip(echelon[i], echelon[r])]
        return echelon, pivots

    @staticmethod
    def rank(a: Matrix) -> int:
        return len(LinearAlgebraService.rref(a)[1])

    @staticmethod
    def kernel_basis(a: Matrix) -> Matrix:
        """Columns spanning ker a, one per free column in increasing order."""
        f = a.field
        rows, pivots = LinearAlgebraService.rref(a)
        pivot_set = set(pivots)
        free = [j for j in range(a.cols) if j not in pivot_set]
        columns = []
        for j in free:
            v = [f.zero] * a.cols
            v[j] = f.one
            for r, pc in enumerate(pivots):
                v[pc] = f.neg(rows[r][j])
            columns.append(v)
        return Matrix.from_columns(f, columns, a.cols)

    @staticmethod
    def solve_linear(a: Matrix, b: Union[Matrix, Sequence[Scalar]]
                     ) -> Optional[Vector]:
        """Some x with a x = b, or None when the system is inconsistent."""
        if isinstance(b, Matrix):
            if b.field != a.field:
                raise MixedFieldError(
                    f"system over {a.field}, right-hand side over {b.field}")
            if b.cols != 1:
                raise DimensionMismatchError("right-hand side must be a column")
            b = b.entries
        if len(b) != a.rows:
            raise DimensionMismatchError(
                f"right-hand side of length {len(b)} for {a.rows} equations")
        f = a.field
        augmented = a.hstack(Matrix.column_vector(f, list(b)))
        rows, pivots = LinearAlgebraService.rref(augmented)
        if pivots and pivots[-1] == a.cols:
            return None
        x = [f.zero] * a.cols
        for r, pc in enumerate(pivots):
            x[pc] = f(rows[r][-1])
        return tuple(x)

    @staticmethod
    def image_basis(a: Matrix) -> Matrix:
        """Pivot columns of a: an independent spanning set of its image."""
        _, pivots = LinearAlgebraService.rref(a)
        return a.select_columns(pivots)

    @staticmethod
    def inverse(a: Matrix) -> Optional[Matrix]:
        if not a.is_square():
            raise DimensionMismatchError("inverse of a non-square matrix")
        n = a.rows
        rows, pivots = LinearAlgebraService.rref(
            a.hstack(Matrix.identity(a.field, n)))
        if pivots[:n] != list(range(n)) or len(pivots) < n:
            return None
        return Matrix.from_rows(a.field, [r[n:] for r in rows[:n]], n)

    @staticmethod
    def kronecker(a: Matrix, b: Matrix) -> Matrix:
        """(a (x) b)(v (x) w) = a v (x) b w, left factor index major."""
        if a.field != b.field:
            raise MixedFieldError(
                f"kronecker of matrices over {a.field} and {b.field}")
        f = a.field
        rows, cols = a.rows * b.rows, a.cols * b.cols
        entries = [f.zero] * (rows * cols)
        for i in range(a.rows):
            for j in range(a.cols):
                x = a[i, j]
                if x == 0:
                    continue
                for k in range(b.rows):
                    base = (i * b.rows + k) * cols + j * b.cols
                    for m in range(b.cols):
                        y = b.entries[k * b.cols + m]
                        if y != 0:
                            entries[base + m] = f.mul(x, y)
        return Matrix(f, rows, cols, tuple(entries))

    @staticmethod
    def kron(*factors: Matrix) -> Matrix:
        result = factors[0]
        for factor in factors[1:]:
            result = LinearAlgebraService.kronecker(result, factor)
        return result

    @staticmethod
    def minimal_polynomial(a: Matrix) -> Vector:
        """Monic least-degree p with p(a) = 0, constant coefficient first."""
        if not a.is_square():
            raise DimensionMismatchError(
                "minimal polynomial of a non-square matrix")
        f = a.field
        power = Matrix.identity(f, a.rows)
        vectors = [power.vec()]
        for degree in range(1, a.rows + 1):
            power = power @ a
            span = Matrix.from_columns(f, vectors, a.rows * a.rows)
            coeffs = LinearAlgebraService.solve_linear(span, power.vec())
            if coeffs is not None:
                return tuple(f.neg(c) for c in coeffs) + (f.one,)
            vectors.append(power.vec())
        return (f.one,)  # only reached for the 0x0 matrix

    @staticmethod
    def evaluate_polynomial(coeffs: Sequence[Scalar], a: Matrix) -> Matrix:
        f = a.field
        result = Matrix.zeros(f, a.rows, a.cols)
        for c in reversed(coeffs):
            result = result @ a + Matrix.identity(f, a.rows).scale(c)
        return result

    @staticmethod
    def trace(a: Matrix) -> Scalar:
        if not a.is_square():
            raise DimensionMismatchError("trace of a non-square matrix")
        f = a.field
        total = f.zero
        for i in range(a.rows):
            total = f.add(total, a[i, i])
        return total

    # subspaces given by column matrices

    @staticmethod
    def coordinates(basis: Matrix, v: Sequence[Scalar]) -> Optional[Vector]:
        """Coordinates of v in the independent columns of basis."""
        return LinearAlgebraService.solve_linear(basis, v)

    @staticmethod
    def coordinate_matrix(basis: Matrix, vectors: Matrix) -> Optional[Matrix]:
        """Solve basis X = vectors column by column."""
        columns = []
        for j in range(vectors.cols):
            x = LinearAlgebraService.solve_linear(basis, vectors.column(j))
            if x is None:
                return None
            columns.append(x)
        return Matrix.from_columns(basis.field, columns, basis.cols)

    @staticmethod
    def in_span(basis: Matrix, v: Sequence[Scalar]) -> bool:
        if basis.cols == 0:
            return all(x == 0 for x in v)
        return LinearAlgebraService.solve_linear(basis, v) is not None

    @staticmethod
    def span_contains(big: Matrix, small: Matrix) -> bool:
        return LinearAlgebraService.rank(big.hstack(small)) == \
            LinearAlgebraService.rank(big)

    @staticmethod
    def same_span(a: Matrix, b: Matrix) -> bool:
        ra = LinearAlgebraService.rank(a)
        return ra == LinearAlgebraService.rank(b) and \
            LinearAlgebraService.rank(a.hstack(b)) == ra

    @staticmethod
    def complement_basis(basis: Matrix) -> Matrix:
        """Standard basis vectors completing basis, chosen in pivot order."""
        n = basis.rows
        f = basis.field
        _, pivots = LinearAlgebraService.rref(
            basis.hstack(Matrix.identity(f, n)))
        chosen = [p - basis.cols for p in pivots if p >= basis.cols]
        return Matrix.identity(f, n).select_columns(chosen)

    @staticmethod
    def intersection(a: Matrix, b: Matrix) -> Matrix:
        """Basis of span(a) cap span(b) for independent column sets."""
        kernel = LinearAlgebraService.kernel_basis(a.hstack(-b))
        if kernel.cols == 0:
            return Matrix.zeros(a.field, a.rows, 0)
        top = Matrix.from_rows(a.field, [kernel.row(i)
                                         for i in range(a.cols)],
                               kernel.cols) if a.cols else \
            Matrix.zeros(a.field, 0, kernel.cols)
        return LinearAlgebraService.image_basis(a @ top)

    # solution spaces of linear conditions on an unknown matrix

    @staticmethod
    def constraint_matrix(field: Field, rows: int, cols: int,
                          constraint: LinearConstraint) -> Matrix:
        """Matrix of a linear map X -> constraint(X) on rows x cols unknowns."""
        columns = []
        for r in range(rows):
            for c in range(cols):
                unit = [field.zero] * (rows * cols)
                unit[r * cols + c] = field.one
                columns.append(tuple(constraint(
                    Matrix(field, rows, cols, tuple(unit)))))
        if not columns:
            return Matrix.zeros(field, 0, 0)
        return Matrix.from_columns(field, columns, len(columns[0]))

    @staticmethod
    def solve_homogeneous_maps(field: Field, rows: int, cols: int,
                               constraint: LinearConstraint) -> List[Matrix]:
        """Basis of {X : constraint(X) = 0}."""
        if rows * cols == 0:
            return []
        system = LinearAlgebraService.constraint_matrix(
            field, rows, cols, constraint)
        if system.rows == 0:
            return [Matrix.unvec(field, rows, cols, col) for col in
                    Matrix.identity(field, rows * cols).columns()]
        kernel = LinearAlgebraService.kernel_basis(system)
        return [Matrix.unvec(field, rows, cols, col)
                for col in kernel.columns()]

    @staticmethod
    def solve_affine_map(field: Field, rows: int, cols: int,
                         constraint: LinearConstraint,
                         target: Sequence[Scalar]) -> Optional[Matrix]:
        """Some X with constraint(X) = target, or None."""
        target = tuple(field(t) for t in target)
        if rows * cols == 0:
            return Matrix.zeros(field, rows, cols) \
                if all(t == 0 for t in target) else None
        system = LinearAlgebraService.constraint_matrix(
            field, rows, cols, constraint)
        x = LinearAlgebraService.solve_linear(system, target)
        if x is None:
            return None
        return Matrix.unvec(field, rows, cols, x)


def stack(*parts: Union[Matrix, Sequence[Scalar]]) -> Tuple[Scalar, ...]:
    """Concatenate vectorized matrices into one constraint vector."""
    out: List[Scalar] = []
    for part in parts:
        out.extend(part.vec() if isinstance(part, Matrix) else part)
    return tuple(out)
