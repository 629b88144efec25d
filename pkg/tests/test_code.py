import itertools
from typing import Callable

import numpy as np
import pytest

from symplotkin.code import (
    LinearCode,
    code_from_generator,
    dual_euclidean,
    full_space,
    is_euclidean_lcd,
    is_euclidean_so,
    is_subcode,
    min_hamming_distance,
    projective_count,
    zero_code,
)
from symplotkin.errors import (
    BudgetExceededError,
    LengthMismatchError,
    ZeroCodeError,
)
from symplotkin.gf import FieldSpec
from symplotkin.matgf import as_ints, hconcat, is_zero, matmul, transpose
from tests.data_factory import (
    HAMMING_7_4,
    build_extended_hamming_8_4,
    build_gf2,
    build_gf3,
    build_gf4,
    build_gf5,
    build_hamming_7_4,
    build_matrix,
    build_random_code,
    build_repetition,
)


def test_generator_is_canonical() -> None:
    spec = build_gf2()
    rows = [HAMMING_7_4[3], HAMMING_7_4[0], HAMMING_7_4[2], HAMMING_7_4[1]]
    assert LinearCode(build_matrix(spec, rows)) == build_hamming_7_4()
    assert build_hamming_7_4().k == 4
    assert build_hamming_7_4().n == 7


def test_dependent_rows_are_dropped() -> None:
    spec = build_gf3()
    C = LinearCode(build_matrix(spec, [[1, 2, 0], [2, 1, 0], [0, 0, 1]]))
    assert C.k == 2
    assert C.generator.shape == (2, 3)


def test_repetition_code_and_dual() -> None:
    C = build_repetition(build_gf3(), 3)
    assert min_hamming_distance(C)[0] == 3
    dual = dual_euclidean(C)
    assert (dual.n, dual.k) == (3, 2)
    assert min_hamming_distance(dual)[0] == 2
    assert C.contains(build_gf3().GF([2, 2, 2]))
    assert not C.contains(build_gf3().GF([1, 2, 2]))


def test_hamming_code_distances() -> None:
    C = build_hamming_7_4()
    d, word = min_hamming_distance(C)
    assert d == 3
    assert C.contains(word)
    assert int((as_ints(word) != 0).sum()) == 3
    assert min_hamming_distance(dual_euclidean(C))[0] == 4


def test_extended_hamming_is_self_dual() -> None:
    C = build_extended_hamming_8_4()
    assert is_euclidean_so(C)
    assert dual_euclidean(C) == C
    assert min_hamming_distance(C)[0] == 4
    assert is_subcode(build_repetition(build_gf2(), 8), C)


def test_is_subcode() -> None:
    C = build_hamming_7_4()
    assert is_subcode(dual_euclidean(C), C)
    assert not is_subcode(C, dual_euclidean(C))
    assert is_subcode(zero_code(build_gf2(), 7), C)
    assert is_subcode(C, full_space(build_gf2(), 7))


def test_is_subcode_length_mismatch() -> None:
    with pytest.raises(LengthMismatchError):
        is_subcode(build_hamming_7_4(), build_extended_hamming_8_4())


def test_euclidean_lcd() -> None:
    assert is_euclidean_lcd(build_repetition(build_gf2(), 3))
    assert not is_euclidean_lcd(build_repetition(build_gf2(), 2))
    assert not is_euclidean_lcd(build_repetition(build_gf3(), 3))


def test_zero_code_rejected() -> None:
    C = zero_code(build_gf2(), 4)
    assert C.k == 0
    with pytest.raises(ZeroCodeError):
        min_hamming_distance(C)
    with pytest.raises(ZeroCodeError):
        is_euclidean_lcd(C)


def test_budget_exceeded() -> None:
    C = build_hamming_7_4()
    assert projective_count(2, 4) == 15
    with pytest.raises(BudgetExceededError) as ex_info:
        min_hamming_distance(C, budget=10)
    assert ex_info.value.problem_details.error_code == "budget_exceeded"


def test_contains_rejects_wrong_length() -> None:
    C = build_hamming_7_4()
    with pytest.raises(LengthMismatchError):
        C.contains(build_gf2().GF.Zeros(8))


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_workers_agree_on_distance(seed: int) -> None:
    C = build_random_code(build_gf5(), 9, 4, seed)
    d, _ = min_hamming_distance(C, workers=1)
    d_threaded, word = min_hamming_distance(C, workers=4)
    assert d_threaded == d
    assert C.contains(word)
    assert int((as_ints(word) != 0).sum()) == d


def test_code_from_generator_drops_dependent_rows() -> None:
    spec = build_gf3()
    C = code_from_generator(build_matrix(spec, [[1, 2, 0], [2, 1, 0]]))
    assert C.k == 1
    assert C.generator.tolist() == [[1, 2, 0]]


def _brute_force_distance(C: LinearCode) -> int:
    q = C.field.q
    messages = np.array(list(itertools.product(range(q), repeat=C.k)))
    words = as_ints(C.field.GF(messages) @ C.generator)
    weights = np.count_nonzero(words, axis=1)
    return int(weights[weights > 0].min())


@pytest.mark.parametrize("build", [build_gf2, build_gf3, build_gf4])
@pytest.mark.parametrize("seed", range(8))
def test_distance_matches_full_enumeration(
    build: Callable[[], FieldSpec], seed: int
) -> None:
    spec = build()
    rng = np.random.default_rng(seed)
    n = int(rng.integers(3, 8))
    G = spec.GF.Random((int(rng.integers(1, 4)), n), seed=seed)
    if seed % 2:
        # a zero column and a repeated column make the generator
        # non-projective
        G = hconcat(G, spec.GF.Zeros((G.shape[0], 1)), G[:, :1])
    C = LinearCode(G)
    if not C.k:
        return
    d, word = min_hamming_distance(C)
    assert d == _brute_force_distance(C)
    assert C.contains(word)
    assert d <= C.n - C.k + 1


@pytest.mark.parametrize("build", [build_gf2, build_gf3, build_gf4])
@pytest.mark.parametrize("seed", range(8))
def test_dual_dimension(build: Callable[[], FieldSpec], seed: int) -> None:
    spec = build()
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 9))
    C = build_random_code(spec, n, int(rng.integers(1, n + 1)), seed)
    dual = dual_euclidean(C)
    assert C.k + dual.k == n
    assert is_zero(matmul(C.generator, transpose(dual.generator)))
