"""Dense matrices over GF(q).

A `MatGF` is a 2-d `galois.FieldArray`. Every function here is pure and
returns a new array.
"""

from typing import List, Sequence, Tuple

import galois
import numpy as np

from .errors import ShapeMismatchError
from .gf import same_field

MatGF = galois.FieldArray


def _require_2d(M: MatGF) -> None:
    if M.ndim != 2:
        raise ShapeMismatchError(f"expected a matrix, got shape {M.shape}")


def as_ints(M: galois.FieldArray) -> np.ndarray:
    return M.view(np.ndarray).astype(np.int64)


def rref(M: MatGF) -> Tuple[MatGF, int, List[int]]:
    """Reduced row echelon form.

    :param M: Any matrix, possibly with zero rows.
    :return: (R, rank, pivots) where the first `rank` rows of R are
        nonzero with leading entry 1 at the strictly increasing
        `pivots`.
    """
    _require_2d(M)
    rows, cols = M.shape
    if rows == 0 or cols == 0:
        return M.copy(), 0, []
    R = M.row_reduce()
    nonzero = np.flatnonzero(np.any(as_ints(R) != 0, axis=1))
    rank = int(nonzero.size)
    pivots = [int(np.flatnonzero(as_ints(R[i]))[0]) for i in range(rank)]
    return R, rank, pivots


def rank(M: MatGF) -> int:
    return rref(M)[1]


def row_basis(M: MatGF) -> MatGF:
    """Canonical basis of the row space: the nonzero rows of the RREF."""
    R, r, _ = rref(M)
    return R[:r].copy()


def right_kernel(M: MatGF) -> MatGF:
    """Basis of {v : M v^T = 0} as the rows of a (cols - rank) x cols
    matrix."""
    _require_2d(M)
    gf = type(M)
    cols = M.shape[1]
    if M.shape[0] == 0:
        return gf.Identity(cols)
    R, r, pivots = rref(M)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    K = gf.Zeros((len(free), cols))
    if not free:
        return K
    K[np.arange(len(free)), free] = 1
    if r:
        K[:, pivots] = -(R[:r][:, free].T)
    return K


def matmul(A: MatGF, B: MatGF) -> MatGF:
    _require_2d(A)
    _require_2d(B)
    same_field(A, B)
    if A.shape[1] != B.shape[0]:
        raise ShapeMismatchError(f"cannot multiply {A.shape} by {B.shape}")
    if 0 in (A.shape[0], A.shape[1], B.shape[1]):
        return type(A).Zeros((A.shape[0], B.shape[1]))
    return A @ B


def transpose(M: MatGF) -> MatGF:
    _require_2d(M)
    return M.T.copy()


def _concat(blocks: Sequence[MatGF], axis: int) -> MatGF:
    if not blocks:
        raise ShapeMismatchError("nothing to concatenate")
    for block in blocks:
        _require_2d(block)
        same_field(blocks[0], block)
    other = 1 - axis
    if len({block.shape[other] for block in blocks}) != 1:
        raise ShapeMismatchError(
            "incompatible shapes "
            + ", ".join(str(block.shape) for block in blocks)
        )
    stacked = np.concatenate([as_ints(block) for block in blocks], axis=axis)
    return type(blocks[0])(stacked)


def hconcat(*blocks: MatGF) -> MatGF:
    return _concat(blocks, axis=1)


def vconcat(*blocks: MatGF) -> MatGF:
    return _concat(blocks, axis=0)


def scale_rows(M: MatGF, factors: galois.FieldArray) -> MatGF:
    _require_2d(M)
    same_field(M, factors)
    if factors.shape != (M.shape[0],):
        raise ShapeMismatchError(
            f"{factors.shape[0]} factors for {M.shape[0]} rows"
        )
    return M * factors[:, np.newaxis]


def scale_columns(M: MatGF, factors: galois.FieldArray) -> MatGF:
    _require_2d(M)
    same_field(M, factors)
    if factors.shape != (M.shape[1],):
        raise ShapeMismatchError(
            f"{factors.shape[0]} factors for {M.shape[1]} columns"
        )
    return M * factors[np.newaxis, :]


def is_zero(M: galois.FieldArray) -> bool:
    return not np.any(as_ints(M))


def intersection_dim(G1: MatGF, G2: MatGF) -> int:
    """dim(rowspace(G1) & rowspace(G2)).

    :raises ShapeMismatchError: If the matrices have different widths.
    """
    _require_2d(G1)
    _require_2d(G2)
    if G1.shape[1] != G2.shape[1]:
        raise ShapeMismatchError(
            f"widths {G1.shape[1]} and {G2.shape[1]} differ"
        )
    return rank(G1) + rank(G2) - rank(vconcat(G1, G2))
