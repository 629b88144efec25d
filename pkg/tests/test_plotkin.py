from typing import Tuple

import galois
import numpy as np
import pytest

from symplotkin.code import (
    LinearCode,
    dual_euclidean,
    is_euclidean_lcd,
    is_euclidean_so,
    min_hamming_distance,
    projective_count,
)
from symplotkin.errors import LengthMismatchError
from symplotkin.matgf import as_ints, hconcat
from symplotkin.plotkin import (
    CodeParameters,
    doubled,
    lcd_criterion,
    plotkin_sum,
    plotkin_symplectic_dual,
    plotkin_word,
    predicted_parameters,
    so_criterion,
)
from symplotkin.symplectic import (
    dual_symplectic,
    is_symplectic_dc,
    is_symplectic_lcd,
    is_symplectic_so,
    min_symplectic_distance,
    symplectic_weight,
)
from tests.data_factory import (
    build_even_weight_2,
    build_extended_hamming_8_4,
    build_gf2,
    build_gf3,
    build_gf4,
    build_gf5,
    build_hamming_7_4,
    build_random_code,
    build_repetition,
    build_weight_one_2,
)


def test_plotkin_sum_of_even_weight_codes() -> None:
    C = build_even_weight_2()
    P = plotkin_sum(C, C)
    assert (P.n, P.k) == (4, 2)
    assert P.contains(P.field.GF([1, 1, 1, 1]))
    assert P.contains(P.field.GF([0, 0, 1, 1]))
    assert so_criterion(C, C)
    assert is_symplectic_so(P)


def test_plotkin_sum_of_weight_one_codes() -> None:
    C = build_weight_one_2()
    P = plotkin_sum(C, C)
    assert lcd_criterion(C, C)
    assert is_symplectic_lcd(P)
    assert not so_criterion(C, C)


def test_lcd_criterion_needs_equal_dimensions() -> None:
    C1 = build_repetition(build_gf3(), 5)
    C2 = dual_euclidean(C1)
    assert not lcd_criterion(C1, C2)
    assert not is_symplectic_lcd(plotkin_sum(C1, C2))


@pytest.mark.parametrize("k1, k2, seed", [(1, 2, 1), (2, 2, 2), (3, 2, 3)])
def test_criteria_match_direct_checks(k1: int, k2: int, seed: int) -> None:
    spec = build_gf3()
    C1 = build_random_code(spec, 5, k1, seed)
    C2 = build_random_code(spec, 5, k2, seed + 10)
    P = plotkin_sum(C1, C2)
    assert so_criterion(C1, C2) == is_symplectic_so(P)
    assert lcd_criterion(C1, C2) == is_symplectic_lcd(P)
    assert so_criterion(C1, dual_euclidean(C1))
    assert is_symplectic_so(plotkin_sum(C1, dual_euclidean(C1)))


@pytest.mark.parametrize("seed", [4, 5, 6])
def test_symplectic_dual_of_plotkin_sum(seed: int) -> None:
    spec = build_gf3()
    C1 = build_random_code(spec, 4, 2, seed)
    C2 = build_random_code(spec, 4, 1, seed + 10)
    assert plotkin_symplectic_dual(C1, C2) == dual_symplectic(
        plotkin_sum(C1, C2)
    )


def test_plotkin_distance_is_minimum_of_constituents() -> None:
    C1 = build_hamming_7_4()
    C2 = dual_euclidean(C1)
    P = plotkin_sum(C1, C2)
    assert (P.n, P.k) == (14, 7)
    assert min_symplectic_distance(P)[0] == 3
    Q = plotkin_sum(C2, C1)
    assert min_symplectic_distance(Q)[0] == 3
    assert min_hamming_distance(C2)[0] == 4


def test_doubled_extended_hamming() -> None:
    C = build_extended_hamming_8_4()
    P = doubled(C)
    assert (P.n, P.k) == (16, 8)
    assert is_symplectic_so(P)
    assert min_symplectic_distance(P)[0] == 4


def test_plotkin_word() -> None:
    GF = build_gf3().GF
    word = plotkin_word(GF([1, 2, 0]), GF([1, 1, 1]))
    assert word.tolist() == [1, 2, 0, 2, 0, 1]
    with pytest.raises(LengthMismatchError):
        plotkin_word(GF([1, 2]), GF([1, 1, 1]))


def test_predicted_parameters() -> None:
    C1 = build_hamming_7_4()
    C2 = dual_euclidean(C1)
    pp, dual = predicted_parameters(C1, C2, 3, 4, 4, 3)
    assert pp == CodeParameters(14, 7, 3)
    assert dual == CodeParameters(14, 7, 3)
    assert str(pp) == "[14,7,3]"
    assert str(CodeParameters(4, 2)) == "[4,2,?]"
    _, unknown = predicted_parameters(C1, C2, 3, 4, None, None)
    assert unknown.d is None


def test_length_mismatch() -> None:
    with pytest.raises(LengthMismatchError):
        plotkin_sum(
            build_repetition(build_gf3(), 3),
            build_repetition(build_gf3(), 4),
        )


def _random_pair(seed: int, nested: bool) -> Tuple[LinearCode, LinearCode]:
    rng = np.random.default_rng(seed)
    spec = [build_gf2, build_gf3, build_gf4][int(rng.integers(3))]()
    n = int(rng.integers(2, 9))
    C1 = build_random_code(spec, n, int(rng.integers(1, n)), seed)
    if nested:
        D = dual_euclidean(C1)
        if not D.k:
            return C1, D
        rows = spec.GF.Random((int(rng.integers(1, n)), D.k), seed=seed + 1)
        C2 = LinearCode(rows @ D.generator)
    else:
        C2 = build_random_code(spec, n, int(rng.integers(1, n)), seed + 1)
    return C1, C2


def _cheap(C: LinearCode) -> bool:
    return projective_count(C.field.q, C.k) <= 4_096


def _min_distance(*codes: LinearCode) -> int:
    return min(min_hamming_distance(C)[0] for C in codes if C.k)


@pytest.mark.parametrize("seed", range(200))
def test_self_orthogonality_statements_agree(seed: int) -> None:
    C1, C2 = _random_pair(seed, nested=seed % 2 == 0)
    P = plotkin_sum(C1, C2)
    dual = dual_symplectic(P)
    assert plotkin_symplectic_dual(C1, C2) == dual
    holds = so_criterion(C1, C2)
    assert is_symplectic_so(P) == holds
    assert is_symplectic_dc(dual) == holds
    if not holds:
        return
    if P.k and _cheap(P):
        assert min_symplectic_distance(P)[0] == _min_distance(C1, C2)
    if dual.k and _cheap(dual):
        assert min_symplectic_distance(dual)[0] == _min_distance(
            dual_euclidean(C1), dual_euclidean(C2)
        )


@pytest.mark.parametrize("seed", range(200))
def test_lcd_statements_agree(seed: int) -> None:
    C1, C2 = _random_pair(seed, nested=False)
    P = plotkin_sum(C1, C2)
    dual = dual_symplectic(P)
    holds = lcd_criterion(C1, C2)
    if P.k:
        assert is_symplectic_lcd(P) == holds
    if dual.k:
        assert is_symplectic_lcd(dual) == holds
    if C1.k != C2.k and P.k:
        assert not is_symplectic_lcd(P)


@pytest.mark.parametrize("seed", range(50))
def test_doubled_euclidean_so_code_is_symplectic_so(seed: int) -> None:
    # (u, c u) with c^2 = -1 is Euclidean self-orthogonal
    rng = np.random.default_rng(seed)
    spec, c = [(build_gf2(), 1), (build_gf4(), 1), (build_gf5(), 2)][
        int(rng.integers(3))
    ]
    n = int(rng.integers(1, 5))
    G = spec.GF.Random((int(rng.integers(1, n + 1)), n), seed=seed)
    C = LinearCode(hconcat(G, G * spec.GF(c)))
    assert is_euclidean_so(C)
    assert is_symplectic_so(doubled(C))


@pytest.mark.parametrize("seed", range(50))
def test_doubled_euclidean_lcd_code_is_symplectic_lcd(seed: int) -> None:
    spec = [build_gf2, build_gf3, build_gf4][seed % 3]()
    trial = seed
    while True:
        C = build_random_code(spec, 6, 1 + trial % 4, trial)
        if C.k and is_euclidean_lcd(C):
            break
        trial += 50
    assert is_symplectic_lcd(doubled(C))


@pytest.mark.parametrize("seed", range(20))
def test_plotkin_word_weights(seed: int) -> None:
    spec = [build_gf2, build_gf3, build_gf4][seed % 3]()
    n = 1 + seed % 7
    u = spec.GF.Random(n, seed=seed)
    v = spec.GF.Random(n, seed=seed + 100)
    assert symplectic_weight(plotkin_word(u, v)) >= _hamming_weight(v)
    assert symplectic_weight(plotkin_word(u, v)) >= _hamming_weight(u)
    assert symplectic_weight(plotkin_word(u, spec.GF.Zeros(n))) == (
        _hamming_weight(u)
    )


def _hamming_weight(word: galois.FieldArray) -> int:
    return int(np.count_nonzero(as_ints(word)))
