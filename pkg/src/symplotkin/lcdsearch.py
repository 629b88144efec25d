"""Column permutations P that make PP(C1, C1 P) symplectic LCD."""

import logging
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .code import LinearCode, dual_euclidean
from .errors import (
    CriterionFailedError,
    InvalidPermutationError,
    SizeMismatchError,
    ZeroCodeError,
)
from .matgf import MatGF, intersection_dim, matmul, rank, transpose
from .models import SearchConfig
from .plotkin import plotkin_sum, plotkin_symplectic_dual
from .prng import Xorshift64Star

SEARCH_BATCH = 256

_SEPARATORS = re.compile(r"[\s,]+")


@dataclass(frozen=True)
class Permutation:
    """A permutation of 1..n written as its images.

    Coordinate i of a word moves to position images[i - 1], so
    (3 5 2 1 6 4) sends the first coordinate to the third position.
    """

    images: Tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if n == 0:
            raise InvalidPermutationError("empty permutation")
        if sorted(self.images) != list(range(1, n + 1)):
            raise InvalidPermutationError(
                f"{self.format()} is not a bijection of 1..{n}"
            )

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_zero_based(cls, images: Sequence[int]) -> "Permutation":
        return cls(tuple(int(i) + 1 for i in images))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Read "(3 5 2 1 6 4)"; commas and bare lists are accepted.

        :raises InvalidPermutationError: On non-integer tokens or a
            non-bijective list.
        """
        body = text.strip().lstrip("(").rstrip(")").strip()
        tokens = [t for t in _SEPARATORS.split(body) if t]
        try:
            images = tuple(int(t) for t in tokens)
        except ValueError:
            raise InvalidPermutationError(f"cannot read {text!r}")
        return cls(images)

    def format(self) -> str:
        return "(" + " ".join(str(i) for i in self.images) + ")"

    def inverse(self) -> "Permutation":
        inverse = [0] * self.n
        for i, image in enumerate(self.images, start=1):
            inverse[image - 1] = i
        return Permutation(tuple(inverse))

    def zero_based(self) -> np.ndarray:
        return np.array(self.images, dtype=np.int64) - 1


@dataclass
class SearchOutcome:
    permutation: Optional[Permutation]
    trials: int
    seed: int

    @property
    def found(self) -> bool:
        return self.permutation is not None


def _permuted_columns(G: MatGF, P: Permutation) -> MatGF:
    permuted = G.copy()
    permuted[:, P.zero_based()] = G
    return permuted


def _check_size(C: LinearCode, P: Permutation) -> None:
    if P.n != C.n:
        raise SizeMismatchError(
            f"permutation of {P.n} points for length {C.n}"
        )


def apply_permutation(C: LinearCode, P: Permutation) -> LinearCode:
    """C P, the code whose words are those of C with coordinate i moved
    to position P(i).

    :raises SizeMismatchError: If P does not act on n points.
    """
    _check_size(C, P)
    return LinearCode(_permuted_columns(C.generator, P))


def theorem9_check(C1: LinearCode, P: Permutation) -> bool:
    """True iff C1 meets (C1 P)^perp_E trivially.

    :raises SizeMismatchError: If P does not act on n points.
    """
    C2 = apply_permutation(C1, P)
    return intersection_dim(C1.generator, dual_euclidean(C2).generator) == 0


def _passes(G1: MatGF, k: int, P: Permutation) -> bool:
    # dim(C1 & (C1 P)^perp) = k - rank(G1 (G1 P)^T)
    cross = matmul(G1, transpose(_permuted_columns(G1, P)))
    return rank(cross) == k


def search_lcd_permutation(
    C1: LinearCode, config: SearchConfig, workers: int = 1
) -> SearchOutcome:
    """Draw uniform permutations until one passes `theorem9_check`.

    Candidates come from a single xorshift64* stream seeded with
    `config.seed` in batches of SEARCH_BATCH; a batch may be tested by
    several threads but the earliest passing trial is the one returned,
    so the outcome depends on the seed alone.

    :raises ZeroCodeError: For the zero code.
    """
    if C1.k == 0:
        raise ZeroCodeError("permutation search needs k >= 1")
    rng = Xorshift64Star(config.seed)
    G1 = C1.generator
    drawn = 0
    next_report = config.report_every
    logging.info(
        "Searching %s permutations of %r with seed %s",
        config.trials,
        C1,
        config.seed,
    )
    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while drawn < config.trials:
            size = min(SEARCH_BATCH, config.trials - drawn)
            batch: List[Permutation] = [
                Permutation.from_zero_based(rng.permutation(C1.n))
                for _ in range(size)
            ]
            if pool is None:
                verdicts = [_passes(G1, C1.k, P) for P in batch]
            else:
                verdicts = list(
                    pool.map(lambda P: _passes(G1, C1.k, P), batch)
                )
            for offset, ok in enumerate(verdicts):
                if ok:
                    trials = drawn + offset + 1
                    logging.info("Permutation found at trial %s", trials)
                    return SearchOutcome(batch[offset], trials, config.seed)
            drawn += size
            while config.report_every and drawn >= next_report:
                logging.debug("%s/%s trials drawn", drawn, config.trials)
                next_report += config.report_every
    finally:
        if pool is not None:
            pool.shutdown()
    logging.info("No permutation after %s trials", drawn)
    return SearchOutcome(None, drawn, config.seed)


def build_theorem9_codes(
    C1: LinearCode, P: Permutation
) -> Tuple[LinearCode, LinearCode]:
    """PP(C1, C1 P), a symplectic LCD [2n, 2k, d_H(C1)] code, and its
    symplectic dual, a symplectic LCD [2n, 2n - 2k, d_H(C1^perp_E)]
    code.

    :raises CriterionFailedError: If C1 meets (C1 P)^perp_E.
    """
    if not theorem9_check(C1, P):
        raise CriterionFailedError(
            f"{P.format()} leaves C1 meeting (C1 P)^perp_E"
        )
    C2 = apply_permutation(C1, P)
    return plotkin_sum(C1, C2), plotkin_symplectic_dual(C1, C2)
