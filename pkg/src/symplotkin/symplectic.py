"""The symplectic form, symplectic weight and distance, the symplectic
dual and the SO/DC/self-dual/LCD predicates.

Coordinate i of a length-2n vector pairs with coordinate n + i.
"""

import logging
from typing import Dict, List, Optional, Tuple

import galois
import numpy as np

from .code import (
    LinearCode,
    is_subcode,
    min_weight_search,
)
from .config import DEFAULT_BUDGET
from .errors import (
    DistanceUnknownError,
    LengthMismatchError,
    OddLengthError,
    ZeroCodeError,
)
from .gf import FieldSpec, same_field
from .matgf import (
    MatGF,
    as_ints,
    intersection_dim,
    is_zero,
    matmul,
    rank,
    transpose,
)

KEY_LIMIT = 2**62


def _half(length: int) -> int:
    if length % 2:
        raise OddLengthError(f"length {length} is odd")
    return length // 2


def omega(n: int, spec: FieldSpec) -> MatGF:
    """The 2n x 2n matrix [[O, I], [-I, O]]."""
    Om = spec.GF.Zeros((2 * n, 2 * n))
    idx = np.arange(n)
    Om[idx, n + idx] = 1
    Om[n + idx, idx] = -spec.GF(1)
    return Om


def symplectic_inner(
    x: galois.FieldArray, y: galois.FieldArray
) -> galois.FieldArray:
    """sum_i x_i y_{n+i} - x_{n+i} y_i.

    :raises LengthMismatchError: If the lengths differ.
    :raises OddLengthError: If the length is odd.
    """
    same_field(x, y)
    if x.shape != y.shape:
        raise LengthMismatchError(f"lengths {x.shape} and {y.shape} differ")
    n = _half(x.shape[0])
    return np.add.reduce(x[:n] * y[n:] - x[n:] * y[:n])


def symplectic_weights(words: np.ndarray) -> np.ndarray:
    n = _half(words.shape[1])
    occupied = (words[:, :n] != 0) | (words[:, n:] != 0)
    return np.count_nonzero(occupied, axis=1)


def symplectic_weight(x: galois.FieldArray) -> int:
    """Number of pairs (x_i, x_{n+i}) that are not both zero.

    :raises OddLengthError: If the length is odd.
    """
    return int(symplectic_weights(as_ints(x).reshape(1, -1))[0])


def symplectic_gram(C: LinearCode) -> MatGF:
    """G Omega G^T."""
    n = _half(C.n)
    return matmul(
        matmul(C.generator, omega(n, C.field)), transpose(C.generator)
    )


def dual_symplectic(C: LinearCode) -> LinearCode:
    """The [2n, 2n-k] symplectic dual, generated by H Omega for a
    parity-check matrix H of C."""
    n = _half(C.n)
    Om = omega(n, C.field)
    return LinearCode(
        matmul(C.parity_check, Om), parity=matmul(C.generator, Om)
    )


def is_symplectic_so(C: LinearCode) -> bool:
    return C.k == 0 or is_zero(symplectic_gram(C))


def is_symplectic_dc(C: LinearCode) -> bool:
    return is_subcode(dual_symplectic(C), C)


def is_symplectic_selfdual(C: LinearCode) -> bool:
    return 2 * C.k == C.n and is_symplectic_so(C)


def is_symplectic_lcd(C: LinearCode) -> bool:
    """True iff G Omega G^T is nonsingular.

    :raises ZeroCodeError: For the zero code.
    """
    if C.k == 0:
        raise ZeroCodeError("LCD test needs k >= 1")
    return rank(symplectic_gram(C)) == C.k


def symplectic_hull_dim(C: LinearCode) -> int:
    """dim(C & C^perp_s)."""
    return intersection_dim(C.generator, dual_symplectic(C).generator)


def min_symplectic_distance(
    C: LinearCode,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    floor: int = 1,
) -> Tuple[int, galois.FieldArray]:
    """Exact minimum symplectic distance by projective enumeration.

    :param floor: A known lower bound; the search stops at the first
        codeword of that weight.
    :return: (d_s, a codeword of symplectic weight d_s).
    :raises ZeroCodeError: For the zero code.
    :raises BudgetExceededError: If (q^k - 1)/(q - 1) exceeds `budget`.
    """
    _half(C.n)
    return min_weight_search(C, symplectic_weights, budget, workers, floor)


def symplectic_singleton_bound(length: int, k: int) -> int:
    return (length - k + 2) // 2


def symplectic_singleton_defect(C: LinearCode, d_s: Optional[int]) -> int:
    """floor((2n - k + 2)/2) - d_s; zero for symplectic MDS codes.

    :raises DistanceUnknownError: If `d_s` has not been established.
    """
    if d_s is None:
        raise DistanceUnknownError(f"no symplectic distance for {C!r}")
    return symplectic_singleton_bound(C.n, C.k) - d_s


class _Level:
    """Syndromes of all weight-w error patterns whose last pair is a
    given position and whose first pair is projectively normalised."""

    def __init__(
        self,
        syndromes: galois.FieldArray,
        supports: np.ndarray,
        values: np.ndarray,
    ):
        self.syndromes = syndromes
        self.supports = supports
        self.values = values

    def __len__(self) -> int:
        return int(self.supports.shape[0])


class _Keys:
    def __init__(self, q: int, r: int):
        self.packed = q**r < KEY_LIMIT
        self.powers = np.array([q**i for i in range(r)], dtype=np.int64)

    def __call__(self, syndromes: galois.FieldArray) -> List[object]:
        ints = as_ints(syndromes)
        if self.packed:
            return [int(v) for v in ints @ self.powers]
        return [row.tobytes() for row in ints]


def _pair_values(spec: FieldSpec) -> Tuple[np.ndarray, np.ndarray]:
    q = spec.q
    every = np.array(
        [(a, b) for a in range(q) for b in range(q) if (a, b) != (0, 0)],
        dtype=np.int64,
    )
    normalised = np.array(
        [(1, b) for b in range(q)] + [(0, 1)], dtype=np.int64
    )
    return every, normalised


def bounded_symplectic_weight_search(
    C: LinearCode, w_max: int
) -> Optional[Tuple[int, galois.FieldArray]]:
    """Smallest symplectic weight w <= w_max of a nonzero codeword.

    Every error pattern of symplectic weight w is tested through its
    syndrome. Supports are visited in colexicographic order; the first
    pair of a pattern runs over the q + 1 projective representatives
    and the others over all q^2 - 1 nonzero pairs. A pattern of weight w
    ending at pair j is found as a weight w - 1 pattern ending before j
    whose syndrome cancels a single pair at j.

    :return: (w, codeword) or None when d_s(C) > w_max.
    """
    n = _half(C.n)
    if w_max < 1:
        return None
    spec = C.field
    gf = spec.GF
    H = C.parity_check
    r = int(H.shape[0])
    if r == 0:
        word = gf.Zeros(C.n)
        word[0] = 1
        return 1, word
    every, normalised = _pair_values(spec)
    keys = _Keys(spec.q, r)

    def singles(j: int, values: np.ndarray) -> galois.FieldArray:
        a = gf(values[:, 0])[:, np.newaxis]
        b = gf(values[:, 1])[:, np.newaxis]
        return a * H[:, j][np.newaxis, :] + b * H[:, n + j][np.newaxis, :]

    def word_of(support: np.ndarray, values: np.ndarray) -> galois.FieldArray:
        word = gf.Zeros(C.n)
        for j, (a, b) in zip(support, values):
            word[int(j)] = int(a)
            word[n + int(j)] = int(b)
        return word

    first = [
        _Level(
            singles(j, normalised),
            np.full((len(normalised), 1), j, dtype=np.int64),
            normalised.reshape(-1, 1, 2),
        )
        for j in range(n)
    ]
    for j, level in enumerate(first):
        zero = np.flatnonzero(~np.any(as_ints(level.syndromes), axis=1))
        if zero.size:
            i = int(zero[0])
            return 1, word_of(level.supports[i], level.values[i])
    levels = first
    for w in range(2, w_max + 1):
        logging.debug("Bounded search: weight %s over %s pairs", w, n)
        seen: Dict[object, Tuple[int, int]] = {}
        nxt: List[_Level] = []
        for j in range(n):
            if j > 0:
                prev = levels[j - 1]
                for i, key in enumerate(keys(prev.syndromes)):
                    seen.setdefault(key, (j - 1, i))
            tail = singles(j, every)
            for t, key in enumerate(keys(-tail)):
                hit = seen.get(key)
                if hit is not None:
                    end, i = hit
                    prev = levels[end]
                    support = np.append(prev.supports[i], j)
                    values = np.vstack([prev.values[i], every[t]])
                    return w, word_of(support, values)
            if w < w_max:
                nxt.append(_extend(levels[:j], tail, every, j))
        levels = nxt
    return None


def _extend(
    before: List[_Level], tail: galois.FieldArray, every: np.ndarray, j: int
) -> _Level:
    gf = type(tail)
    syndromes: List[np.ndarray] = []
    supports: List[np.ndarray] = []
    values: List[np.ndarray] = []
    for level in before:
        if not len(level):
            continue
        count = len(level)
        combined = level.syndromes[:, np.newaxis, :] + tail[np.newaxis, :, :]
        syndromes.append(as_ints(combined).reshape(count * len(every), -1))
        supports.append(
            np.hstack(
                [
                    np.repeat(level.supports, len(every), axis=0),
                    np.full((count * len(every), 1), j, dtype=np.int64),
                ]
            )
        )
        tails = np.tile(every, (count, 1)).reshape(-1, 1, 2)
        values.append(
            np.concatenate(
                [np.repeat(level.values, len(every), axis=0), tails], axis=1
            )
        )
    if not syndromes:
        width = tail.shape[1]
        return _Level(
            gf.Zeros((0, width)),
            np.zeros((0, 1), dtype=np.int64),
            np.zeros((0, 1, 2), dtype=np.int64),
        )
    return _Level(
        gf(np.vstack(syndromes)),
        np.vstack(supports),
        np.concatenate(values, axis=0),
    )


