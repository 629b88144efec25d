"""The Plotkin sum (u, u + v) and its SO and LCD criteria."""

from dataclasses import dataclass
from typing import Optional, Tuple

import galois

from .code import LinearCode, dual_euclidean, is_subcode
from .errors import FieldMismatchError, LengthMismatchError
from .matgf import hconcat, intersection_dim, vconcat


@dataclass(frozen=True)
class CodeParameters:
    n: int
    k: int
    d: Optional[int] = None

    def __str__(self) -> str:
        d = "?" if self.d is None else str(self.d)
        return f"[{self.n},{self.k},{d}]"


def _check_pair(C1: LinearCode, C2: LinearCode) -> None:
    if C1.n != C2.n:
        raise LengthMismatchError(f"lengths {C1.n} and {C2.n} differ")
    if C1.field != C2.field:
        raise FieldMismatchError(f"GF({C1.q}) and GF({C2.q}) differ")


def plotkin_parity_check(C1: LinearCode, C2: LinearCode) -> galois.FieldArray:
    """[[H1, O], [-H2, H2]]."""
    _check_pair(C1, C2)
    H1, H2 = C1.parity_check, C2.parity_check
    gf = C1.field.GF
    return vconcat(
        hconcat(H1, gf.Zeros(H1.shape)),
        hconcat(-H2, H2),
    )


def plotkin_sum(C1: LinearCode, C2: LinearCode) -> LinearCode:
    """PP(C1, C2) = {(u, u + v) : u in C1, v in C2}, an [2n, k1 + k2]
    code generated by [[G1, G1], [O, G2]].

    :raises LengthMismatchError: If the lengths differ.
    :raises FieldMismatchError: If the fields differ.
    """
    _check_pair(C1, C2)
    G1, G2 = C1.generator, C2.generator
    gf = C1.field.GF
    G = vconcat(hconcat(G1, G1), hconcat(gf.Zeros(G2.shape), G2))
    return LinearCode(G, parity=plotkin_parity_check(C1, C2))


def plotkin_word(
    u: galois.FieldArray, v: galois.FieldArray
) -> galois.FieldArray:
    if u.shape != v.shape:
        raise LengthMismatchError(f"lengths {u.shape} and {v.shape} differ")
    return hconcat(u.reshape(1, -1), (u + v).reshape(1, -1))[0]


def plotkin_symplectic_dual(C1: LinearCode, C2: LinearCode) -> LinearCode:
    """PP(C1, C2)^perp_s, built as PP(C2^perp_E, C1^perp_E)."""
    _check_pair(C1, C2)
    return plotkin_sum(dual_euclidean(C2), dual_euclidean(C1))


def so_criterion(C1: LinearCode, C2: LinearCode) -> bool:
    """C1 is contained in C2^perp_E, which holds exactly when PP(C1, C2)
    is symplectic SO."""
    _check_pair(C1, C2)
    return is_subcode(C1, dual_euclidean(C2))


def lcd_criterion(C1: LinearCode, C2: LinearCode) -> bool:
    """C1 meets C2^perp_E trivially and k1 = k2, which holds exactly
    when PP(C1, C2) is symplectic LCD."""
    _check_pair(C1, C2)
    if C1.k != C2.k:
        return False
    dual = dual_euclidean(C2)
    return intersection_dim(C1.generator, dual.generator) == 0


def predicted_parameters(
    C1: LinearCode,
    C2: LinearCode,
    d1: Optional[int],
    d2: Optional[int],
    d1_dual: Optional[int],
    d2_dual: Optional[int],
) -> Tuple[CodeParameters, CodeParameters]:
    """Parameters of PP(C1, C2) and of its symplectic dual.

    The distances are min(d1, d2) and min(d1_dual, d2_dual); a zero
    constituent code contributes no distance and is passed as `None`.
    """
    _check_pair(C1, C2)
    n, k = 2 * C1.n, C1.k + C2.k
    return (
        CodeParameters(n, k, _min_known(d1, d2)),
        CodeParameters(n, n - k, _min_known(d1_dual, d2_dual)),
    )


def _min_known(a: Optional[int], b: Optional[int]) -> Optional[int]:
    known = [d for d in (a, b) if d is not None]
    return min(known) if known else None


def doubled(C: LinearCode) -> LinearCode:
    """PP(C, C); symplectic SO when C is Euclidean SO and symplectic LCD
    when C is Euclidean LCD."""
    return plotkin_sum(C, C)
