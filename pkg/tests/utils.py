import itertools
from typing import FrozenSet, List, Sequence, Set, Tuple
from hopfsage.models.matrix import Matrix

Vec = Tuple[int, ...]


def vectors(dim: int) -> List[Vec]:
    """Every vector of F_2^dim."""
    return list(itertools.product(range(2), repeat=dim))


def span(generators: Sequence[Vec], dim: int) -> FrozenSet[Vec]:
    out = set()
    for coeffs in itertools.product(range(2), repeat=len(generators)):
        v = [0] * dim
        for c, g in zip(coeffs, generators):
            if c:
                v = [(a + b) % 2 for a, b in zip(v, g)]
        out.add(tuple(v))
    return frozenset(out)


def subspaces(dim: int) -> Set[FrozenSet[Vec]]:
    """Every subspace of F_2^dim, as its set of elements."""
    nonzero = [v for v in vectors(dim) if any(v)]
    found = set()
    for k in range(dim + 1):
        for generators in itertools.combinations(nonzero, k):
            found.add(span(generators, dim))
    return found


def dimension(space: FrozenSet[Vec]) -> int:
    return len(space).bit_length() - 1


def apply(matrix: Matrix, v: Vec) -> Vec:
    return tuple(int(x) for x in matrix.apply(v))


def stable(space: FrozenSet[Vec], operators: Sequence[Matrix]) -> bool:
    return all(apply(op, v) in space for op in operators for v in space)


def coaction_components(coaction: Matrix, dim: int,
                        dim_h: int) -> List[Matrix]:
    """Maps v -> v_(k) with rho(v) = sum_k v_(k) (x) h_k."""
    return [Matrix.from_rows(coaction.field,
                             [coaction.row(j * dim_h + k)
                              for j in range(dim)], dim)
            for k in range(dim_h)]


def column_set(basis: Matrix) -> FrozenSet[Vec]:
    """Elements of the span of the columns of a matrix over F_2."""
    return span([tuple(int(x) for x in c) for c in basis.columns()],
                basis.rows)


def matrices(field, rows: int, cols: int) -> List[Matrix]:
    """Every rows x cols matrix over F_2."""
    return [Matrix.from_rows(field, [entries[i * cols:(i + 1) * cols]
                                     for i in range(rows)], cols)
            for entries in vectors(rows * cols)]
