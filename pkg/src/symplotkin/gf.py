"""Finite fields GF(p^m) with a fixed presentation and the degree-2
tower GF(q^2) used by the additive bridge."""

import itertools
import logging
import threading
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Dict, Optional, Sequence, Tuple, Type, Union

import galois
import numpy as np

from .errors import (
    DivisionByZeroError,
    FieldMismatchError,
    FieldTooLargeError,
    NonPrimeError,
    ParameterOutOfRangeError,
)

MAX_FIELD_ORDER = 2**16

Felt = galois.FieldArray
"""A 0-d `galois.FieldArray`; its integer value is the base-p digit
packing of the element (digit i is the coefficient of x^i)."""


@dataclass(frozen=True)
class FieldSpec:
    p: int
    m: int
    q: int
    """Coefficients of the monic modulus, constant term first."""
    modulus: Tuple[int, ...]
    """Integer encoding of the fixed primitive element."""
    gen: int
    GF: Type[galois.FieldArray] = field(compare=False, repr=False)

    def element(self, value: int) -> Felt:
        return self.GF(value)

    def zeros(self, *shape: int) -> galois.FieldArray:
        return self.GF.Zeros(shape)

    def header(self) -> str:
        modulus = ",".join(str(c) for c in self.modulus)
        return f"field p={self.p} m={self.m} modulus={modulus}"


_registry: Dict[Any, FieldSpec] = {}
_registry_lock = threading.Lock()


def _register(spec: FieldSpec) -> FieldSpec:
    with _registry_lock:
        return _registry.setdefault(spec.GF, spec)


def _check_order(p: int, m: int) -> None:
    if not galois.is_prime(p):
        raise NonPrimeError(f"p={p} is not a prime")
    if m < 1:
        raise ParameterOutOfRangeError(f"m={m} must be at least 1")
    if p**m > MAX_FIELD_ORDER:
        raise FieldTooLargeError(f"{p}^{m} exceeds {MAX_FIELD_ORDER}")


def _least_irreducible(p: int, m: int) -> Tuple[int, ...]:
    prime_field = galois.GF(p)
    # product() varies the last digit fastest, so tuples (c0, ..., c_{m-1})
    # come out in lexicographic order with the constant term compared first.
    for low in itertools.product(range(p), repeat=m):
        if low[0] == 0:
            continue
        coeffs = list(low) + [1]
        poly = galois.Poly(coeffs, field=prime_field, order="asc")
        if m == 1 or poly.is_irreducible():
            return tuple(coeffs)
    raise ParameterOutOfRangeError(f"no irreducible of degree {m} over {p}")


def _build(p: int, m: int, modulus: Tuple[int, ...]) -> FieldSpec:
    if m == 1:
        gf = galois.GF(p)
    else:
        poly = galois.Poly(list(modulus), field=galois.GF(p), order="asc")
        gf = galois.GF(p**m, irreducible_poly=poly)
    spec = FieldSpec(
        p=p,
        m=m,
        q=p**m,
        modulus=modulus,
        gen=int(gf.primitive_element),
        GF=gf,
    )
    logging.debug("Built GF(%s^%s) with modulus %s", p, m, modulus)
    return _register(spec)


@lru_cache(maxsize=None)
def field_new(p: int, m: int) -> FieldSpec:
    """Returns GF(p^m) presented by the lexicographically least monic
    irreducible of degree m.

    :param p: Prime characteristic.
    :param m: Extension degree.
    :return: The field descriptor.
    :raises NonPrimeError: If `p` is not a prime.
    :raises FieldTooLargeError: If p^m exceeds 2^16.
    """
    _check_order(p, m)
    return _build(p, m, _least_irreducible(p, m))


def field_from_modulus(p: int, m: int, modulus: Sequence[int]) -> FieldSpec:
    """Returns GF(p^m) presented by an explicit modulus, as read from a
    matrix file header."""
    _check_order(p, m)
    coeffs = tuple(int(c) for c in modulus)
    if len(coeffs) != m + 1 or coeffs[-1] != 1:
        raise ParameterOutOfRangeError(
            f"modulus {coeffs} is not monic of degree {m}"
        )
    if any(not 0 <= c < p for c in coeffs):
        raise ParameterOutOfRangeError(
            f"modulus {coeffs} has digits outside [0, {p})"
        )
    if m == 1:
        return field_new(p, 1)
    if coeffs == field_new(p, m).modulus:
        return field_new(p, m)
    poly = galois.Poly(list(coeffs), field=galois.GF(p), order="asc")
    if not poly.is_irreducible():
        raise ParameterOutOfRangeError(f"modulus {coeffs} is reducible")
    return _build(p, m, coeffs)


def field_of_order(q: int) -> FieldSpec:
    if q < 2:
        raise NonPrimeError(f"q={q} is not a prime power")
    primes, exponents = galois.factors(q)
    if len(primes) != 1:
        raise NonPrimeError(f"q={q} is not a prime power")
    return field_new(int(primes[0]), int(exponents[0]))


def field_of(array: galois.FieldArray) -> FieldSpec:
    """Returns the descriptor of the field an array lives in."""
    gf = type(array)
    spec = _registry.get(gf)
    if spec is not None:
        return spec
    p, m = int(gf.characteristic), int(gf.degree)
    if m == 1:
        return field_new(p, 1)
    coeffs = tuple(int(c) for c in gf.irreducible_poly.coeffs[::-1])
    return _register(
        FieldSpec(
            p=p,
            m=m,
            q=p**m,
            modulus=coeffs,
            gen=int(gf.primitive_element),
            GF=gf,
        )
    )


def same_field(a: galois.FieldArray, b: galois.FieldArray) -> None:
    if type(a) is not type(b):
        raise FieldMismatchError(
            f"{type(a).name} and {type(b).name} are different fields"
        )


def field_arith(a: Felt, b: Union[Felt, int, None], op: str) -> Felt:
    """Applies one field operation.

    :param a: Left operand.
    :param b: Right operand; the exponent for `pow`; ignored by `neg`
        and `inv`.
    :param op: One of add, sub, mul, div, neg, inv and pow.
    :return: The resulting element.
    :raises FieldMismatchError: If the operands live in different
        fields.
    :raises DivisionByZeroError: If the divisor or inverted element is
        zero.
    """
    if op == "neg":
        return -a
    if op == "inv":
        if int(a) == 0:
            raise DivisionByZeroError("zero has no inverse")
        return a**-1
    if op == "pow":
        if not isinstance(b, (int, np.integer)) or b < 0:
            raise ParameterOutOfRangeError(f"exponent {b} must be >= 0")
        return a ** int(b)
    if not isinstance(b, galois.FieldArray):
        raise FieldMismatchError(f"operand {b!r} is not a field element")
    same_field(a, b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if int(b) == 0:
            raise DivisionByZeroError(f"{int(a)} / 0")
        return a / b
    raise ParameterOutOfRangeError(f"unknown operation {op}")


class ExtTower:
    """GF(q^2) as a degree-2 extension of GF(q).

    `omega` is the primitive element of the extension, so {1, omega}
    is a GF(q)-basis and omega - omega^q is nonzero.
    """

    def __init__(self, base: FieldSpec):
        if base.q**2 > MAX_FIELD_ORDER:
            raise FieldTooLargeError(f"{base.q}^2 exceeds {MAX_FIELD_ORDER}")
        self.base = base
        self.ext = field_new(base.p, 2 * base.m)
        self.omega: Felt = self.ext.GF(self.ext.gen)
        self._denominator = self.omega - self.omega**base.q
        self.embed_table = self._embedding()
        inverse = np.full(self.ext.q, -1, dtype=np.int64)
        inverse[self.embed_table] = np.arange(base.q)
        self.inverse_table = inverse

    def _embedding(self) -> np.ndarray:
        p, m, q = self.base.p, self.base.m, self.base.q
        if m == 1:
            return np.arange(q, dtype=np.int64)
        modulus = galois.Poly(
            list(self.base.modulus), field=self.ext.GF, order="asc"
        )
        beta = min(modulus.roots(), key=int)
        powers = self.ext.GF.Ones(m)
        for i in range(1, m):
            powers[i] = powers[i - 1] * beta
        digits = np.array(
            [[(r // p**i) % p for i in range(m)] for r in range(q)],
            dtype=np.int64,
        )
        images = np.add.reduce(self.ext.GF(digits) * powers, axis=1)
        return images.view(np.ndarray).astype(np.int64)

    @property
    def denominator(self) -> Felt:
        """omega - omega^q."""
        return self._denominator

    def embed(self, values: galois.FieldArray) -> galois.FieldArray:
        same_field(values, self.base.GF(0))
        return self.ext.GF(self.embed_table[values.view(np.ndarray)])

    def pull_back(self, values: galois.FieldArray) -> galois.FieldArray:
        indices = self.inverse_table[values.view(np.ndarray)]
        if np.any(indices < 0):
            raise ParameterOutOfRangeError("value is outside GF(q)")
        return self.base.GF(indices)

    def decompose(
        self, c: galois.FieldArray
    ) -> Tuple[galois.FieldArray, galois.FieldArray]:
        """Returns (a, b) over GF(q) with c = embed(a) + omega * embed(b)."""
        same_field(c, self.omega)
        b = (c - c**self.base.q) / self._denominator
        a = c - self.omega * b
        return self.pull_back(a), self.pull_back(b)

    def compose(
        self, a: galois.FieldArray, b: galois.FieldArray
    ) -> galois.FieldArray:
        return self.embed(a) + self.omega * self.embed(b)


_towers: Dict[FieldSpec, ExtTower] = {}


def extension_tower(base: FieldSpec) -> ExtTower:
    """Returns the cached degree-2 tower over `base`.

    :raises FieldTooLargeError: If q^2 exceeds 2^16.
    """
    tower: Optional[ExtTower] = _towers.get(base)
    if tower is None:
        tower = ExtTower(base)
        _towers[base] = tower
        logging.debug(
            "Built tower GF(%s) over GF(%s), omega=%s",
            tower.ext.q,
            base.q,
            int(tower.omega),
        )
    return tower
