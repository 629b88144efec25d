import galois
import numpy as np
import pytest

from symplotkin.errors import (
    DivisionByZeroError,
    FieldMismatchError,
    FieldTooLargeError,
    NonPrimeError,
    ParameterOutOfRangeError,
)
from symplotkin.gf import (
    FieldSpec,
    extension_tower,
    field_arith,
    field_from_modulus,
    field_new,
    field_of,
    field_of_order,
)
from tests.data_factory import build_gf2, build_gf3, build_gf4, build_gf5


def _all(spec: FieldSpec) -> galois.FieldArray:
    return spec.GF(np.arange(spec.q))


def test_prime_field_has_modulus_x_plus_one() -> None:
    spec = build_gf2()
    assert (spec.p, spec.m, spec.q) == (2, 1, 2)
    assert spec.modulus == (1, 1)
    assert spec.gen == 1


def test_gf4_modulus_and_generator_relation() -> None:
    spec = build_gf4()
    assert spec.modulus == (1, 1, 1)
    x = spec.element(2)
    assert int(x * x) == int(x + spec.element(1))


def test_gf9_uses_least_irreducible() -> None:
    assert field_new(3, 2).modulus == (1, 0, 1)


def test_non_prime_characteristic() -> None:
    with pytest.raises(NonPrimeError):
        field_new(4, 1)


def test_field_too_large() -> None:
    with pytest.raises(FieldTooLargeError):
        field_new(2, 17)


def test_field_new_is_cached() -> None:
    assert field_new(2, 3) is field_new(2, 3)


def test_field_of_order() -> None:
    assert field_of_order(9) is field_new(3, 2)
    assert field_of_order(7) is field_new(7, 1)
    with pytest.raises(NonPrimeError):
        field_of_order(6)


def test_field_of_array() -> None:
    spec = build_gf4()
    assert field_of(spec.zeros(2, 3)) is spec


@pytest.mark.parametrize("p, m", [(2, 4), (3, 2), (5, 1), (7, 1), (2, 3)])
def test_generator_is_primitive(p: int, m: int) -> None:
    spec = field_new(p, m)
    gen = spec.element(spec.gen)
    assert int(gen ** (spec.q - 1)) == 1
    for d in range(1, spec.q - 1):
        if (spec.q - 1) % d == 0:
            assert int(gen**d) != 1


@pytest.mark.parametrize("p, m", [(2, 2), (2, 3), (3, 2), (2, 4)])
def test_field_axioms_exhaustive(p: int, m: int) -> None:
    spec = field_new(p, m)
    e = _all(spec)
    a = e[:, None, None]
    b = e[None, :, None]
    c = e[None, None, :]
    assert np.array_equal(a * (b + c), a * b + a * c)
    assert np.array_equal((a * b) * c, a * (b * c))
    assert np.array_equal(a + b, b + a)
    assert not np.any(e + (-e))
    nonzero = e[1:]
    assert np.all(nonzero * nonzero**-1 == 1)


@pytest.mark.parametrize("p, m", [(2, 5), (3, 3)])
def test_field_axioms_random(p: int, m: int) -> None:
    spec = field_new(p, m)
    a, b, c = (spec.GF.Random(1_000, seed=seed) for seed in (1, 2, 3))
    assert np.array_equal(a * (b + c), a * b + a * c)
    assert np.array_equal((a * b) * c, a * (b * c))
    assert np.array_equal((a + b) + c, a + (b + c))
    assert np.array_equal(a * b, b * a)
    assert not np.any(a + (-a))
    nonzero = a[a != 0]
    assert np.all(nonzero * nonzero**-1 == 1)


def test_field_arith_examples() -> None:
    gf3, gf5, gf4 = build_gf3(), build_gf5(), build_gf4()
    assert int(field_arith(gf3.element(1), None, "neg")) == 2
    assert int(field_arith(gf5.element(2), 4, "pow")) == 1
    x = gf4.element(2)
    assert int(field_arith(x, x, "mul")) == 3
    assert int(field_arith(x, gf4.element(3), "add")) == 1
    assert int(field_arith(gf5.element(3), gf5.element(3), "div")) == 1
    assert int(field_arith(gf5.element(2), None, "inv")) == 3


def test_field_arith_frobenius_fixes_base() -> None:
    spec = build_gf4()
    for value in range(spec.q):
        a = spec.element(value)
        assert int(field_arith(a, spec.q, "pow")) == value


def test_field_arith_division_by_zero() -> None:
    spec = build_gf5()
    with pytest.raises(DivisionByZeroError):
        field_arith(spec.element(1), spec.element(0), "div")
    with pytest.raises(ZeroDivisionError):
        field_arith(spec.element(0), None, "inv")


def test_field_arith_field_mismatch() -> None:
    with pytest.raises(FieldMismatchError):
        field_arith(build_gf3().element(1), build_gf5().element(1), "add")


def test_field_from_modulus() -> None:
    assert field_from_modulus(2, 2, [1, 1, 1]) is field_new(2, 2)
    spec = field_from_modulus(2, 3, [1, 1, 0, 1])
    assert spec.modulus == (1, 1, 0, 1)
    assert spec.q == 8
    with pytest.raises(ParameterOutOfRangeError):
        field_from_modulus(2, 2, [1, 0, 1])
    with pytest.raises(ParameterOutOfRangeError):
        field_from_modulus(2, 2, [1, 1, 0])


def test_header() -> None:
    assert build_gf4().header() == "field p=2 m=2 modulus=1,1,1"
    assert build_gf3().header() == "field p=3 m=1 modulus=1,1"


def test_tower_over_gf2() -> None:
    tower = extension_tower(build_gf2())
    assert tower.ext.q == 4
    omega = tower.omega
    one = tower.ext.GF(1)
    assert int(omega * omega) == int(omega + one)
    a, b = tower.decompose(omega + one)
    assert (int(a), int(b)) == (1, 1)


def test_tower_denominator_nonzero_over_gf3() -> None:
    tower = extension_tower(build_gf3())
    assert tower.ext.q == 9
    assert int(tower.denominator) != 0
    assert int(tower.omega - tower.omega**3) == int(tower.denominator)


@pytest.mark.parametrize("p, m", [(2, 1), (3, 1), (2, 2), (3, 2)])
def test_tower_compose_decompose_exhaustive(p: int, m: int) -> None:
    tower = extension_tower(field_new(p, m))
    c = _all(tower.ext)
    a, b = tower.decompose(c)
    assert np.array_equal(tower.compose(a, b), c)


@pytest.mark.parametrize("p, m", [(2, 2), (3, 2), (2, 3)])
def test_tower_embedding_is_homomorphism(p: int, m: int) -> None:
    base = field_new(p, m)
    tower = extension_tower(base)
    e = _all(base)
    a = e[:, None]
    b = e[None, :]
    assert np.array_equal(
        tower.embed(a * b), tower.embed(a) * tower.embed(b)
    )
    assert np.array_equal(
        tower.embed(a + b), tower.embed(a) + tower.embed(b)
    )
    first, second = tower.decompose(tower.embed(e))
    assert np.array_equal(first, e)
    assert not np.any(second)


def test_tower_too_large() -> None:
    with pytest.raises(FieldTooLargeError):
        extension_tower(field_new(2, 9))
