from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple
from hopfsage.models.field import Field, Scalar
from hopfsage.utils.errors import DimensionMismatchError, MixedFieldError


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix over an exact field.

    Linear maps V -> W are stored as dim W x dim V matrices; the tensor basis
    e_i (x) f_j has index ``i * dim F + j`` (left factor major).
    """
    field: Field
    rows: int
    cols: int
    entries: Tuple[Scalar, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatchError(
                f"{self.rows}x{self.cols} matrix needs "
                f"{self.rows * self.cols} entries, got {len(self.entries)}")

    # construction

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> 'Matrix':
        return cls(field, rows, cols, (field.zero,) * (rows * cols))

    @classmethod
    def identity(cls, field: Field, n: int) -> 'Matrix':
        entries = [field.zero] * (n * n)
        for i in range(n):
            entries[i * n + i] = field.one
        return cls(field, n, n, tuple(entries))

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence],
                  cols: int = None) -> 'Matrix':
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimensionMismatchError("ragged rows")
        return cls(field, len(rows), cols,
                   tuple(field(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence],
                     rows: int) -> 'Matrix':
        columns = [list(c) for c in columns]
        if any(len(c) != rows for c in columns):
            raise DimensionMismatchError("ragged columns")
        return cls(field, rows, len(columns),
                   tuple(field(columns[j][i]) for i in range(rows)
                         for j in range(len(columns))))

    @classmethod
    def column_vector(cls, field: Field, values: Sequence) -> 'Matrix':
        return cls(field, len(values), 1, tuple(field(v) for v in values))

    @classmethod
    def row_vector(cls, field: Field, values: Sequence) -> 'Matrix':
        return cls(field, 1, len(values), tuple(field(v) for v in values))

    @classmethod
    def basis_vector(cls, field: Field, n: int, i: int) -> 'Matrix':
        entries = [field.zero] * n
        entries[i] = field.one
        return cls(field, n, 1, tuple(entries))

    @classmethod
    def permutation(cls, field: Field, images: Sequence[int]) -> 'Matrix':
        """Matrix sending basis vector j to basis vector images[j]."""
        n = len(images)
        entries = [field.zero] * (n * n)
        for j, i in enumerate(images):
            entries[i * n + j] = field.one
        return cls(field, n, n, tuple(entries))

    @classmethod
    def swap(cls, field: Field, dim_v: int, dim_w: int) -> 'Matrix':
        """The flip V (x) W -> W (x) V."""
        return cls.permutation(field, [w * dim_v + v for v in range(dim_v)
                                       for w in range(dim_w)])

    # access

    def __getitem__(self, index: Tuple[int, int]) -> Scalar:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[Scalar, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Tuple[Scalar, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def columns(self) -> List[Tuple[Scalar, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def to_lists(self) -> List[List[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def to_strings(self) -> List[List[str]]:
        return [[self.field.format(x) for x in self.row(i)]
                for i in range(self.rows)]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    # arithmetic

    def _check_field(self, other: 'Matrix'):
        if self.field != other.field:
            raise MixedFieldError(
                f"cannot combine matrices over {self.field} and {other.field}")

    def __add__(self, other: 'Matrix') -> 'Matrix':
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(
                f"cannot add {self.shape} and {other.shape}")
        f = self.field
        return Matrix(f, self.rows, self.cols,
                      tuple(f.add(a, b) for a, b in
                            zip(self.entries, other.entries)))

    def __sub__(self, other: 'Matrix') -> 'Matrix':
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(
                f"cannot subtract {other.shape} from {self.shape}")
        f = self.field
        return Matrix(f, self.rows, self.cols,
                      tuple(f.sub(a, b) for a, b in
                            zip(self.entries, other.entries)))

    def __neg__(self) -> 'Matrix':
        return Matrix(self.field, self.rows, self.cols,
                      tuple(self.field.neg(a) for a in self.entries))

    def scale(self, c) -> 'Matrix':
        f = self.field
        c = f(c)
        return Matrix(f, self.rows, self.cols,
                      tuple(f.mul(c, a) for a in self.entries))

    def __matmul__(self, other: 'Matrix') -> 'Matrix':
        self._check_field(other)
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"cannot compose {self.shape} with {other.shape}")
        f = self.field
        p = f.characteristic
        n, m, k = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = [f.zero] * (n * k)
        for i in range(n):
            base = i * m
            acc = [0] * k
            for t in range(m):
                x = a[base + t]
                if x == 0:
                    continue
                off = t * k
                for j in range(k):
                    y = b[off + j]
                    if y != 0:
                        acc[j] += x * y
            for j in range(k):
                out[i * k + j] = acc[j] % p if p else f(acc[j])
        return Matrix(f, n, k, tuple(out))

    def transpose(self) -> 'Matrix':
        return Matrix(self.field, self.cols, self.rows,
                      tuple(self.entries[i * self.cols + j]
                            for j in range(self.cols)
                            for i in range(self.rows)))

    def power(self, n: int) -> 'Matrix':
        if not self.is_square():
            raise DimensionMismatchError("power of a non-square matrix")
        result = Matrix.identity(self.field, self.rows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def apply(self, vector: Sequence[Scalar]) -> Tuple[Scalar, ...]:
        """Image of a coordinate vector."""
        if len(vector) != self.cols:
            raise DimensionMismatchError(
                f"vector of length {len(vector)} for {self.shape} matrix")
        return (self @ Matrix.column_vector(self.field, vector)).entries

    # block structure

    def hstack(self, other: 'Matrix') -> 'Matrix':
        self._check_field(other)
        if self.rows != other.rows:
            raise DimensionMismatchError("hstack needs equal row counts")
        entries = []
        for i in range(self.rows):
            entries.extend(self.row(i))
            entries.extend(other.row(i))
        return Matrix(self.field, self.rows, self.cols + other.cols,
                      tuple(entries))

    def vstack(self, other: 'Matrix') -> 'Matrix':
        self._check_field(other)
        if self.cols != other.cols:
            raise DimensionMismatchError("vstack needs equal column counts")
        return Matrix(self.field, self.rows + other.rows, self.cols,
                      self.entries + other.entries)

    def select_columns(self, indices: Iterable[int]) -> 'Matrix':
        indices = list(indices)
        return Matrix.from_columns(self.field,
                                   [self.column(j) for j in indices],
                                   self.rows)

    def vec(self) -> Tuple[Scalar, ...]:
        """Row-major vectorization, entry (r, c) at index r * cols + c."""
        return self.entries

    @classmethod
    def unvec(cls, field: Field, rows: int, cols: int,
              values: Sequence[Scalar]) -> 'Matrix':
        return cls(field, rows, cols, tuple(values))

    def __repr__(self) -> str:
        body = '; '.join(' '.join(r) for r in self.to_strings())
        return f"Matrix<{self.field} {self.rows}x{self.cols}>[{body}]"
