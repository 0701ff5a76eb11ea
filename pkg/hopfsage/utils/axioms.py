from typing import List, Sequence, Tuple
from hopfsage.models.hopf import Diagnostic
from hopfsage.models.matrix import Matrix


def unravel(index: int, dims: Sequence[int]) -> Tuple[int, ...]:
    """Split a tensor-basis index into its factor indices (left major)."""
    out = []
    for d in reversed(dims):
        out.append(index % d)
        index //= d
    return tuple(reversed(out))


def identity_diagnostics(axiom: str, lhs: Matrix, rhs: Matrix,
                         dims: Sequence[int]) -> List[Diagnostic]:
    """Compare two linear maps column by column.

    ``dims`` are the factor dimensions of the common domain; every column
    where the maps differ is reported as a basis index tuple.
    """
    if lhs.shape != rhs.shape:
        return [Diagnostic(axiom, (), f"shape {lhs.shape} vs {rhs.shape}")]
    bad = tuple(unravel(j, dims) for j in range(lhs.cols)
                if lhs.column(j) != rhs.column(j))
    if not bad:
        return []
    return [Diagnostic(axiom, bad)]


def shape_diagnostics(name: str, matrix: Matrix,
                      shape: Tuple[int, int]) -> List[Diagnostic]:
    if matrix.shape != shape:
        return [Diagnostic('dimension mismatch', (),
                           f"{name} has shape {matrix.shape}, "
                           f"expected {shape}")]
    return []
