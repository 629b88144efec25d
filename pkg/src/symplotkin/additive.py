"""Additive codes over GF(q^2) as images of symplectic codes under
phi: (a_1..a_n | a_{n+1}..a_{2n}) -> (a_i + omega a_{n+i})_i."""

import itertools
from dataclasses import dataclass
from typing import Optional, Tuple

import galois
import numpy as np

from .code import LinearCode
from .config import DEFAULT_BUDGET
from .errors import (
    BudgetExceededError,
    LengthMismatchError,
    NotPhiImageError,
    OddLengthError,
)
from .gf import ExtTower, extension_tower, same_field
from .matgf import intersection_dim
from .symplectic import (
    dual_symplectic,
    is_symplectic_so,
    min_symplectic_distance,
)


@dataclass
class AdditiveCode:
    """An (n, q^k) GF(q)-linear subgroup of GF(q^2)^n spanned over
    GF(q) by the rows of `gens`."""

    n: int
    tower: ExtTower
    gens: galois.FieldArray
    k: int
    """The symplectic code this one is the phi-image of, if known."""
    preimage: Optional[LinearCode] = None

    @property
    def size(self) -> int:
        return int(self.tower.base.q**self.k)

    def elements(self, limit: int = 2**16) -> galois.FieldArray:
        """Every element of the span, one per row.

        :raises BudgetExceededError: If q^k exceeds `limit`.
        """
        if self.size > limit:
            raise BudgetExceededError(f"{self.size} elements exceed {limit}")
        base = self.tower.base
        ext = self.tower.ext.GF
        if self.k == 0:
            return ext.Zeros((1, self.n))
        coeffs = base.GF(
            np.array(
                list(itertools.product(range(base.q), repeat=self.k)),
                dtype=np.int64,
            )
        )
        return self.tower.embed(coeffs) @ self.gens


def phi_vec(x: galois.FieldArray, tower: ExtTower) -> galois.FieldArray:
    """Coordinate j is embed(x_j) + omega embed(x_{n+j}).

    :raises OddLengthError: If the length is odd.
    :raises FieldMismatchError: If x is not over the tower's base.
    """
    if x.shape[-1] % 2:
        raise OddLengthError(f"length {x.shape[-1]} is odd")
    n = x.shape[-1] // 2
    return tower.compose(x[..., :n], x[..., n:])


def phi_code(C: LinearCode) -> AdditiveCode:
    """phi(C); its size is q^k and its minimum Hamming distance is
    d_s(C)."""
    if C.n % 2:
        raise OddLengthError(f"length {C.n} is odd")
    tower = extension_tower(C.field)
    return AdditiveCode(
        n=C.n // 2,
        tower=tower,
        gens=phi_vec(C.generator, tower),
        k=C.k,
        preimage=C,
    )


def alternating_form(
    u: galois.FieldArray, v: galois.FieldArray, tower: ExtTower
) -> galois.FieldArray:
    """sum_i (u_i^q v_i - u_i v_i^q) / (omega - omega^q).

    This orientation makes <x, y>_s = <phi(x), phi(y)>_a hold exactly.
    """
    same_field(u, v)
    same_field(u, tower.omega)
    if u.shape != v.shape:
        raise LengthMismatchError(f"lengths {u.shape} and {v.shape} differ")
    q = tower.base.q
    numerator = np.add.reduce(u**q * v - u * v**q)
    return numerator / tower.denominator


def _preimage(A: AdditiveCode) -> LinearCode:
    if A.preimage is None:
        raise NotPhiImageError("additive code was not built by phi_code")
    return A.preimage


def is_trh_acd(A: AdditiveCode) -> bool:
    """True iff A meets its alternating dual trivially, decided on the
    preimage against its symplectic dual.

    :raises NotPhiImageError: If A has no stored preimage.
    """
    C = _preimage(A)
    return intersection_dim(C.generator, dual_symplectic(C).generator) == 0


def is_additive_so(A: AdditiveCode) -> bool:
    return is_symplectic_so(_preimage(A))


def additive_min_distance(
    A: AdditiveCode, budget: int = DEFAULT_BUDGET, workers: int = 1
) -> Tuple[int, galois.FieldArray]:
    """Minimum Hamming distance of A with a phi-image witness."""
    C = _preimage(A)
    d, word = min_symplectic_distance(C, budget, workers)
    return d, phi_vec(word, A.tower)
