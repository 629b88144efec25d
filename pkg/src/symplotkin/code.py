"""Linear codes over GF(q) under the Hamming metric and the shared
exhaustive minimum-weight kernel."""

import itertools
import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from functools import cached_property
from typing import Callable, Dict, List, Optional, Tuple

import galois
import numpy as np

from .config import DEFAULT_BUDGET
from .errors import (
    BudgetExceededError,
    FieldMismatchError,
    LengthMismatchError,
    ZeroCodeError,
)
from .gf import FieldSpec, field_of
from .matgf import (
    MatGF,
    as_ints,
    is_zero,
    matmul,
    rank,
    rref,
    right_kernel,
    transpose,
    vconcat,
)

WeightFunction = Callable[[np.ndarray], np.ndarray]

LOW_TABLE_ROWS = 2**16
LOW_TABLE_ENTRIES = 2**23


class LinearCode:
    """An [n, k] code stored through its canonical generator, the
    nonzero rows of the RREF of whatever matrix it was built from.

    A parity-check matrix may be supplied when the construction already
    knows one; otherwise it is the right kernel of the generator.
    """

    def __init__(self, generator: MatGF, parity: Optional[MatGF] = None):
        R, k, pivots = rref(generator)
        self.generator: MatGF = R[:k].copy()
        self.field: FieldSpec = field_of(generator)
        self.n: int = int(generator.shape[1])
        self.k: int = k
        self.pivots: List[int] = pivots
        self._parity = parity

    @cached_property
    def parity_check(self) -> MatGF:
        if self._parity is not None:
            return self._parity
        return right_kernel(self.generator)

    @property
    def q(self) -> int:
        return self.field.q

    def contains(self, word: galois.FieldArray) -> bool:
        if word.shape != (self.n,):
            raise LengthMismatchError(
                f"word of length {word.shape[0]} for length {self.n}"
            )
        if type(word) is not self.field.GF:
            raise FieldMismatchError("word is over a different field")
        if self.parity_check.shape[0] == 0:
            return True
        return is_zero(self.parity_check @ word)

    def _key(self) -> Tuple[int, int, bytes]:
        return self.field.q, self.n, as_ints(self.generator).tobytes()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.field == other.field and self._key() == other._key()

    def __hash__(self) -> int:
        return hash((self.field, self._key()))

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}]_{self.field.q})"


def code_from_generator(M: MatGF) -> LinearCode:
    return LinearCode(M)


def zero_code(spec: FieldSpec, n: int) -> LinearCode:
    return LinearCode(spec.GF.Zeros((0, n)), parity=spec.GF.Identity(n))


def full_space(spec: FieldSpec, n: int) -> LinearCode:
    return LinearCode(spec.GF.Identity(n), parity=spec.GF.Zeros((0, n)))


def _check_compatible(A: LinearCode, B: LinearCode) -> None:
    if A.n != B.n:
        raise LengthMismatchError(f"lengths {A.n} and {B.n} differ")
    if A.field != B.field:
        raise FieldMismatchError(f"GF({A.q}) and GF({B.q}) differ")


def dual_euclidean(C: LinearCode) -> LinearCode:
    """The [n, n-k] Euclidean dual."""
    return LinearCode(C.parity_check, parity=C.generator)


def is_subcode(A: LinearCode, B: LinearCode) -> bool:
    """True iff every codeword of A lies in B.

    :raises LengthMismatchError: If the lengths differ.
    """
    _check_compatible(A, B)
    if A.k == 0:
        return True
    return rank(vconcat(B.generator, A.generator)) == B.k


def gram(C: LinearCode) -> MatGF:
    return matmul(C.generator, transpose(C.generator))


def is_euclidean_so(C: LinearCode) -> bool:
    return is_zero(gram(C))


def is_euclidean_lcd(C: LinearCode) -> bool:
    """True iff G G^T is nonsingular.

    :raises ZeroCodeError: For the zero code.
    """
    if C.k == 0:
        raise ZeroCodeError("LCD test needs k >= 1")
    return rank(gram(C)) == C.k


def hamming_weights(words: np.ndarray) -> np.ndarray:
    return np.count_nonzero(words, axis=1)


def projective_count(q: int, k: int) -> int:
    return (q**k - 1) // (q - 1)


class _Best:
    def __init__(self) -> None:
        self.lock = threading.Lock()
        self.weight: Optional[int] = None
        self.lead: Optional[int] = None

    def offer(self, weight: int, lead: int) -> None:
        with self.lock:
            if self.weight is None or self.lead is None:
                self.weight, self.lead = weight, lead
            elif (weight, lead) < (self.weight, self.lead):
                self.weight, self.lead = weight, lead

    def settled_before(self, lead: int, floor: int) -> bool:
        with self.lock:
            return (
                self.weight is not None
                and self.weight <= floor
                and self.lead is not None
                and self.lead < lead
            )


def min_weight_search(
    C: LinearCode,
    weights: WeightFunction,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    floor: int = 1,
) -> Tuple[int, galois.FieldArray]:
    """Exact minimum of `weights` over the nonzero codewords of C.

    One codeword is visited per projective class: for every lead row j
    the words g_j + span(g_{j+1}, ..., g_{k-1}). The span of the last
    rows is tabulated once and the remaining prefix is walked row by
    row. Work is split by lead row across `workers` threads and stops as
    soon as a word of weight `floor` turns up.

    :return: (weight, codeword attaining it).
    :raises ZeroCodeError: For the zero code.
    :raises BudgetExceededError: If the number of projective classes
        exceeds `budget`.
    """
    k, n, q = C.k, C.n, C.q
    if k == 0:
        raise ZeroCodeError("minimum distance of the zero code")
    classes = projective_count(q, k)
    if classes > budget:
        raise BudgetExceededError(
            f"{classes} projective classes exceed budget {budget}"
        )
    G = C.generator
    gf = C.field.GF
    t_max = 0
    while t_max < k - 1 and q ** (t_max + 1) <= LOW_TABLE_ROWS:
        if q ** (t_max + 1) * n > LOW_TABLE_ENTRIES:
            break
        t_max += 1
    tables: Dict[int, galois.FieldArray] = {}
    table_lock = threading.Lock()

    def low_table(t: int) -> galois.FieldArray:
        with table_lock:
            if t not in tables:
                if t == 0:
                    tables[t] = gf.Zeros((1, n))
                else:
                    coeffs = gf(
                        np.array(
                            list(itertools.product(range(q), repeat=t)),
                            dtype=np.int64,
                        )
                    )
                    tables[t] = coeffs @ G[k - t :]
            return tables[t]

    best = _Best()
    found: Dict[int, Tuple[int, galois.FieldArray]] = {}

    def scan(j: int) -> None:
        trailing = k - 1 - j
        t = min(trailing, t_max)
        table = low_table(t)
        middle = G[j + 1 : k - t]
        local: Optional[Tuple[int, galois.FieldArray]] = None
        for prefix in itertools.product(range(q), repeat=middle.shape[0]):
            if best.settled_before(j, floor):
                break
            base = G[j].copy()
            if middle.shape[0]:
                base = base + gf(np.array(prefix, dtype=np.int64)) @ middle
            words = table + base
            w = weights(as_ints(words))
            idx = int(np.argmin(w))
            if local is None or int(w[idx]) < local[0]:
                local = (int(w[idx]), words[idx].copy())
                best.offer(local[0], j)
                if local[0] <= floor:
                    break
        if local is not None:
            found[j] = local

    logging.debug(
        "Enumerating %s projective classes of a [%s,%s]_%s code",
        classes,
        n,
        k,
        q,
    )
    if workers > 1 and k > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(scan, range(k)))
    else:
        for j in range(k):
            scan(j)
    lead = min(found, key=lambda j: (found[j][0], j))
    return found[lead]


def min_hamming_distance(
    C: LinearCode,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> Tuple[int, galois.FieldArray]:
    """Exact minimum Hamming distance by projective enumeration.

    :param C: A code with k >= 1.
    :param budget: Largest number of projective classes to visit.
    :param workers: Number of threads.
    :return: (d, a codeword of weight d).
    :raises ZeroCodeError: For the zero code.
    :raises BudgetExceededError: If (q^k - 1)/(q - 1) exceeds `budget`.
    """
    return min_weight_search(C, hamming_weights, budget, workers)
