"""Code families and the theorem-level builders that turn them into
symplectic SO, DC and self-dual codes through the Plotkin sum."""

import itertools
import logging
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterator, List, Optional, Tuple

import galois
import numpy as np

from .code import LinearCode, dual_euclidean, is_subcode
from .config import DEFAULT_BUDGET
from .errors import (
    BudgetExceededError,
    ConditionViolatedError,
    ConstructionNotFoundError,
    DuplicatePointsError,
    OrderOutOfRangeError,
    ParameterOutOfRangeError,
    UnsupportedLengthError,
    ZeroMultiplierError,
)
from .gf import FieldSpec, field_new, field_of_order
from .matgf import MatGF, as_ints, rank, right_kernel
from .plotkin import plotkin_sum, plotkin_symplectic_dual, plotkin_word
from .prng import Xorshift64Star

CANDIDATE_BATCH = 4096
KERNEL_ENUMERATION_LIMIT = 2**16


@dataclass
class Construction:
    """A built code together with the distance its construction
    predicts and, when the builder knows one, a codeword attaining it."""

    name: str
    code: LinearCode
    predicted: Optional[int] = None
    certificate: Optional[galois.FieldArray] = None
    params: Dict[str, int] = field(default_factory=dict)


@dataclass(frozen=True)
class GrsSpec:
    field: FieldSpec
    alpha: Tuple[int, ...]
    v: Tuple[int, ...]
    k: int

    @property
    def n(self) -> int:
        return len(self.alpha)


def grs_spec(q: int, n: int, k: int) -> GrsSpec:
    """GRS on the first n field elements with unit multipliers."""
    return GrsSpec(field_of_order(q), tuple(range(n)), (1,) * n, k)


def _validate_grs(spec: GrsSpec) -> None:
    if len(set(spec.alpha)) != len(spec.alpha):
        raise DuplicatePointsError(f"points {spec.alpha} repeat")
    if len(spec.v) != len(spec.alpha):
        raise ParameterOutOfRangeError(
            f"{len(spec.v)} multipliers for {len(spec.alpha)} points"
        )
    if any(value == 0 for value in spec.v):
        raise ZeroMultiplierError(f"multipliers {spec.v} contain zero")
    if not 1 <= spec.k <= spec.n:
        raise ParameterOutOfRangeError(f"k={spec.k} outside [1, {spec.n}]")


def _power_rows(points: galois.FieldArray, count: int) -> MatGF:
    gf = type(points)
    rows = gf.Ones((count, points.shape[0]))
    for i in range(1, count):
        rows[i] = rows[i - 1] * points
    return rows


def grs_code(spec: GrsSpec) -> LinearCode:
    """Evaluations v_j f(alpha_j) of the polynomials of degree < k.

    :raises DuplicatePointsError: If two points coincide.
    :raises ZeroMultiplierError: If a multiplier is zero.
    """
    _validate_grs(spec)
    gf = spec.field.GF
    G = _power_rows(gf(list(spec.alpha)), spec.k) * gf(list(spec.v))
    return LinearCode(G)


def grs_dual(spec: GrsSpec) -> GrsSpec:
    """GRS_k(alpha, v)^perp_E = GRS_{n-k}(alpha, v') with
    v'_j = 1 / (v_j prod_{i != j} (alpha_j - alpha_i))."""
    _validate_grs(spec)
    gf = spec.field.GF
    alpha = gf(list(spec.alpha))
    v = gf(list(spec.v))
    dual_v = []
    for j in range(spec.n):
        product = v[j]
        for i in range(spec.n):
            if i != j:
                product = product * (alpha[j] - alpha[i])
        dual_v.append(int(product**-1))
    return GrsSpec(spec.field, spec.alpha, tuple(dual_v), spec.n - spec.k)


def is_mds(C: LinearCode) -> bool:
    """True iff every k columns of the generator are independent."""
    if C.k in (0, C.n):
        return True
    G = C.generator
    return all(
        rank(G[:, list(cols)]) == C.k
        for cols in itertools.combinations(range(C.n), C.k)
    )


def extended_rs_matrix(spec: FieldSpec, k: int) -> MatGF:
    """Doubly-extended RS generator on all q field elements plus the
    point at infinity, which reads the coefficient of x^(k-1)."""
    gf = spec.GF
    G = gf.Zeros((k, spec.q + 1))
    G[:, : spec.q] = _power_rows(gf(np.arange(spec.q)), k)
    G[k - 1, spec.q] = 1
    return G


def least_irreducible_over(spec: FieldSpec, degree: int) -> galois.Poly:
    """Lexicographically least monic irreducible of `degree` over GF(q),
    constant term compared first."""
    for low in itertools.product(range(spec.q), repeat=degree):
        if low[0] == 0:
            continue
        poly = galois.Poly(list(low) + [1], field=spec.GF, order="asc")
        if poly.is_irreducible():
            return poly
    raise ParameterOutOfRangeError(f"no irreducible of degree {degree}")


def _projective_points(gf: type, k: int) -> Iterator[np.ndarray]:
    q = gf.order
    for lead in range(k):
        tail = k - 1 - lead
        batch: List[List[int]] = []
        for rest in itertools.product(range(q), repeat=tail):
            batch.append([0] * lead + [1] + list(rest))
            if len(batch) == CANDIDATE_BATCH:
                yield np.array(batch, dtype=np.int64)
                batch = []
        if batch:
            yield np.array(batch, dtype=np.int64)


def _codimension_one_mds(G2: MatGF, budget: int) -> Optional[MatGF]:
    """A generator of an MDS subcode of codimension 1 of the MDS code
    generated by G2, or None.

    Every codeword of C2 with k2 - 1 zeros is m_S G2 for the message
    m_S killing a (k2 - 1)-set S of columns; the subcode {m G2 : m.c = 0}
    is MDS exactly when no m_S is orthogonal to c.
    """
    gf = type(G2)
    k2, n = G2.shape
    k1 = k2 - 1
    killers = []
    for cols in itertools.combinations(range(n), k1):
        killers.append(right_kernel(G2[:, list(cols)].T)[0])
    M = gf(np.array([as_ints(m) for m in killers]))
    count = (gf.order**k2 - 1) // (gf.order - 1)
    if count > budget:
        raise BudgetExceededError(
            f"{count} projection centres exceed budget {budget}"
        )
    for batch in _projective_points(gf, k2):
        centres = gf(batch)
        values = as_ints(M @ centres.T)
        good = np.flatnonzero(np.all(values != 0, axis=0))
        if good.size:
            centre = centres[int(good[0])].reshape(1, -1)
            return right_kernel(centre) @ G2
    return None


def nested_mds_pair(
    q: int, n: int, k1: int, k2: int, budget: int = DEFAULT_BUDGET
) -> Tuple[LinearCode, LinearCode]:
    """Hamming MDS codes C1 inside C2 of dimensions k1 <= k2.

    For n <= q both are GRS codes on the first n field elements. For
    n = q + 1, C2 is doubly-extended RS; C1 is the same code when
    k1 = k2, the multiples of a fixed irreducible of degree k2 - k1 when
    that degree is at least 2, and a searched codimension-1 subcode
    otherwise.

    :raises ParameterOutOfRangeError: If the parameters are outside
        3 <= q, 2 <= n <= q + 1, 1 <= k1 <= k2 <= n.
    :raises UnsupportedLengthError: If no codimension-1 MDS subcode
        exists at n = q + 1.
    """
    spec = field_of_order(q)
    if q < 3 or not 2 <= n <= q + 1 or not 1 <= k1 <= k2 <= n:
        raise ParameterOutOfRangeError(
            f"(q, n, k1, k2)=({q}, {n}, {k1}, {k2}) out of range"
        )
    if n <= q:
        return (
            grs_code(grs_spec(q, n, k1)),
            grs_code(grs_spec(q, n, k2)),
        )
    gf = spec.GF
    G2 = extended_rs_matrix(spec, k2)
    C2 = LinearCode(G2)
    if k1 == k2:
        return C2, C2
    if k2 == n:
        return LinearCode(extended_rs_matrix(spec, k1)), C2
    step = k2 - k1
    if step >= 2:
        h = least_irreducible_over(spec, step)
        logging.debug("Nested pair at n=q+1 through %s", h)
        x = galois.Poly.Identity(gf)
        affine = gf(np.arange(q))
        G1 = gf.Zeros((k1, n))
        for i in range(k1):
            G1[i, :q] = (h * x**i)(affine)
        G1[k1 - 1, q] = 1
        return LinearCode(G1), C2
    G1 = _codimension_one_mds(G2, budget)
    if G1 is None:
        raise UnsupportedLengthError(
            f"no MDS [{n},{k1}] subcode of the [{n},{k2}] code over GF({q})"
        )
    return LinearCode(G1), C2


def hyperoval_matrix(spec: FieldSpec) -> MatGF:
    gf = spec.GF
    q = spec.q
    H = gf.Zeros((3, q + 2))
    H[:, :q] = _power_rows(gf(np.arange(q)), 3)
    H[1, q] = 1
    H[2, q + 1] = 1
    return H


def hyperoval_code(m: int) -> LinearCode:
    """The [q+2, 3, q] MDS code over GF(2^m): columns (1, a, a^2) for
    every a, then (0, 1, 0) and (0, 0, 1)."""
    if m < 2:
        raise ParameterOutOfRangeError(f"m={m} must be at least 2")
    return LinearCode(hyperoval_matrix(field_new(2, m)))


def _hyperoval_dual_word(spec: FieldSpec) -> galois.FieldArray:
    # columns of a=0, a=1, nucleus and extension point sum to zero
    q = spec.q
    word = spec.GF.Zeros(q + 2)
    word[[0, 1, q, q + 1]] = 1
    return word


def _check_theorem3_range(q: int, n: int, k1: int, k2: int) -> None:
    if q < 3 or not 2 <= n <= q + 1:
        raise ParameterOutOfRangeError(f"(q, n)=({q}, {n}) out of range")
    if not 1 <= k1 <= k2 <= n - 1 or k1 + k2 < n:
        raise ParameterOutOfRangeError(
            f"(k1, k2)=({k1}, {k2}) out of range for n={n}"
        )


def _nested_plotkin(
    name: str,
    q: int,
    n: int,
    k1: int,
    k2: int,
    budget: int,
) -> Tuple[Construction, Construction]:
    C1, C2 = nested_mds_pair(q, n, k1, k2, budget)
    C2_dual = dual_euclidean(C2)
    params = {"q": q, "n": n, "k1": k1, "k2": k2}
    so = Construction(
        f"{name}.so", plotkin_sum(C1, C2_dual), n - k1 + 1, None, params
    )
    dc = Construction(
        f"{name}.dc",
        plotkin_symplectic_dual(C1, C2_dual),
        n - k2 + 1,
        None,
        dict(params),
    )
    return so, dc


def theorem3_codes(
    q: int, n: int, k1: int, k2: int, budget: int = DEFAULT_BUDGET
) -> Tuple[Construction, Construction]:
    """Symplectic SO [2n, n+k1-k2, n-k1+1] and DC [2n, n+k2-k1, n-k2+1]
    codes from a nested MDS pair.

    :raises ParameterOutOfRangeError: Unless q >= 3, 2 <= n <= q + 1,
        1 <= k1 <= k2 <= n - 1 and k1 + k2 >= n.
    """
    _check_theorem3_range(q, n, k1, k2)
    return _nested_plotkin("theorem3", q, n, k1, k2, budget)


def theorem4_mds_codes(
    q: int,
    n: int,
    k: int,
    variant: str = "even",
    budget: int = DEFAULT_BUDGET,
    trials: int = 2_000,
    seed: int = 1,
) -> Tuple[Construction, Construction]:
    """Symplectic MDS SO and DC codes.

    The even variant gives [2n, 2k, n-k+1] and [2n, 2n-2k, k+1]; the odd
    variant gives [2n, 2k+1, n-k] and [2n, 2n-2k-1, k+1]. For even q,
    n = q + 2 and k = 3 the even variant is the hyperoval pair.

    :raises ParameterOutOfRangeError: If k is out of range for the
        variant or n is out of range for q.
    """
    if variant not in ("even", "odd"):
        raise ParameterOutOfRangeError(f"unknown variant {variant}")
    spec = field_of_order(q)
    if variant == "even" and n == q + 2 and k == 3 and spec.p == 2:
        return theorem4_hyperoval_codes(spec.m, trials, seed)
    if q < 3 or not 2 <= n <= q + 1:
        raise ParameterOutOfRangeError(f"(q, n)=({q}, {n}) out of range")
    if variant == "even":
        if not 1 <= k <= n // 2:
            raise ParameterOutOfRangeError(f"k={k} outside [1, {n // 2}]")
        k1, k2 = k, n - k
    else:
        if not 0 <= k <= (n - 1) // 2:
            raise ParameterOutOfRangeError(
                f"k={k} outside [0, {(n - 1) // 2}]"
            )
        k1, k2 = k + 1, n - k
    so, dc = _nested_plotkin("theorem4", q, n, k1, k2, budget)
    so.params["k"] = dc.params["k"] = k
    return so, dc


def _permutation_candidates(
    n: int, trials: int, rng: Xorshift64Star
) -> Iterator[List[int]]:
    yield list(range(n))
    swapped = list(range(n))
    swapped[n - 2], swapped[n - 1] = n - 1, n - 2
    yield swapped
    for _ in range(trials):
        yield rng.permutation(n)


def _nowhere_zero(K: MatGF, rng: Xorshift64Star) -> Optional[MatGF]:
    gf = type(K)
    dim = K.shape[0]
    if dim == 0:
        return None
    q = gf.order
    if q**dim <= KERNEL_ENUMERATION_LIMIT:
        coeffs = np.array(
            list(itertools.product(range(q), repeat=dim)), dtype=np.int64
        )
    else:
        coeffs = np.array(
            [
                [rng.below(q) for _ in range(dim)]
                for _ in range(CANDIDATE_BATCH)
            ],
            dtype=np.int64,
        )
    combos = gf(coeffs) @ K
    good = np.flatnonzero(np.all(as_ints(combos) != 0, axis=1))
    if not good.size:
        return None
    return combos[int(good[0])]


def theorem4_hyperoval_codes(
    m: int, trials: int = 2_000, seed: int = 1
) -> Tuple[Construction, Construction]:
    """Symplectic MDS SO [2q+4, 6, q] and DC [2q+4, 2q-2, 4] codes over
    GF(2^m).

    C1 is the hyperoval code and D = C1 P diag(v) a monomially
    equivalent copy orthogonal to it, found by solving the nine bilinear
    conditions for v over candidate column permutations P. The outputs
    are PP(C1, D) and PP(D^perp_E, C1^perp_E).

    :raises ConstructionNotFoundError: If no permutation within
        `trials` admits a nowhere-zero v.
    """
    if m < 2:
        raise ParameterOutOfRangeError(f"m={m} must be at least 2")
    spec = field_new(2, m)
    gf = spec.GF
    q = spec.q
    n = q + 2
    G = hyperoval_matrix(spec)
    C1 = LinearCode(G)
    rng = Xorshift64Star(seed)
    for attempt, perm in enumerate(_permutation_candidates(n, trials, rng)):
        A = gf.Zeros((9, n))
        for a in range(3):
            for b in range(3):
                A[3 * a + b] = G[a] * G[b, perm]
        v = _nowhere_zero(right_kernel(A), rng)
        if v is None:
            continue
        D_gen = gf.Zeros((3, n))
        D_gen[:, perm] = G * v
        D = LinearCode(D_gen)
        if not is_subcode(C1, dual_euclidean(D)):
            continue
        logging.debug("Hyperoval partner found after %s attempts", attempt + 1)
        params = {"m": m, "q": q, "n": n, "k": 3}
        u = G[2]
        so = Construction(
            "theorem4.so",
            plotkin_sum(C1, D),
            q,
            plotkin_word(u, gf.Zeros(n)),
            params,
        )
        dc = Construction(
            "theorem4.dc",
            plotkin_symplectic_dual(C1, D),
            4,
            plotkin_word(gf.Zeros(n), _hyperoval_dual_word(spec)),
            dict(params),
        )
        return so, dc
    raise ConstructionNotFoundError(
        f"no orthogonal hyperoval copy over GF({q}) after {trials} trials"
    )


def theorem6_selfdual(m: int) -> Construction:
    """Symplectic self-dual [2q+4, q+2, 4] code PP(H, H^perp_E) for the
    hyperoval code H over GF(2^m)."""
    H = hyperoval_code(m)
    spec = H.field
    n = H.n
    certificate = plotkin_word(spec.GF.Zeros(n), _hyperoval_dual_word(spec))
    return Construction(
        "theorem6",
        plotkin_sum(H, dual_euclidean(H)),
        min(spec.q, 4),
        certificate,
        {"m": m, "q": spec.q},
    )


def corollary_selfdual(
    q: int, n: int, budget: int = DEFAULT_BUDGET
) -> Construction:
    """Symplectic MDS self-dual [2n, n, n/2 + 1] (even n) or
    [2n, n, (n+1)/2] (odd n) codes, and [12, 6, 4] over GF(4).

    :raises ParameterOutOfRangeError: Unless q >= 3 and 2 <= n <= q + 1,
        or (q, n) = (4, 6).
    """
    if (q, n) == (4, 6):
        built = theorem6_selfdual(2)
    elif n % 2 == 0:
        built, _ = theorem4_mds_codes(q, n, n // 2, "even", budget)
    else:
        built, _ = theorem4_mds_codes(q, n, (n - 1) // 2, "odd", budget)
    return Construction(
        "corollary-selfdual",
        built.code,
        built.predicted,
        built.certificate,
        {"q": q, "n": n},
    )


@dataclass(frozen=True)
class GrmSpec:
    q: int
    r: int
    m: int

    def __post_init__(self) -> None:
        if self.m < 1 or not 0 <= self.r < self.m * (self.q - 1):
            raise OrderOutOfRangeError(
                f"r={self.r} outside [0, {self.m * (self.q - 1)}) for "
                f"q={self.q}, m={self.m}"
            )

    @property
    def n(self) -> int:
        return int(self.q**self.m)

    @property
    def field(self) -> FieldSpec:
        return field_of_order(self.q)

    @cached_property
    def monomials(self) -> List[Tuple[int, ...]]:
        """Exponent tuples with every e_i <= q - 1 and sum <= r."""
        exps = [
            e
            for e in itertools.product(range(self.q), repeat=self.m)
            if sum(e) <= self.r
        ]
        return sorted(exps, key=lambda e: (sum(e), e))

    @cached_property
    def points(self) -> galois.FieldArray:
        """GF(q)^m in lexicographic order of element integers."""
        grid = itertools.product(range(self.q), repeat=self.m)
        return self.field.GF(np.array(list(grid), dtype=np.int64))


def _evaluate(
    points: galois.FieldArray, exps: List[Tuple[int, ...]]
) -> MatGF:
    gf = type(points)
    n, m = points.shape
    top = max((max(e) for e in exps), default=0) + 1
    powers = [_power_rows(points[:, i], top) for i in range(m)]
    rows = gf.Ones((len(exps), n))
    for r, e in enumerate(exps):
        for i, power in enumerate(e):
            if power:
                rows[r] = rows[r] * powers[i][power]
    return rows


def grm_code(spec: GrmSpec) -> LinearCode:
    """GRM(r, m): evaluations at all points of GF(q)^m of the
    polynomials of total degree <= r."""
    return LinearCode(_evaluate(spec.points, spec.monomials))


def _check_order(q: int, r: int, m: int) -> None:
    GrmSpec(q, r, m)


def grm_dimension(q: int, r: int, m: int) -> int:
    _check_order(q, r, m)
    total = 0
    for j in range(m + 1):
        if r - j * q < 0:
            break
        top = r - j * q
        total += (-1) ** j * math.comb(m, j) * math.comb(m + top, top)
    return total


def grm_distance(q: int, r: int, m: int) -> int:
    """(b + 1) q^a where m(q - 1) - r = a(q - 1) + b, 0 <= b < q - 1."""
    _check_order(q, r, m)
    a, b = divmod(m * (q - 1) - r, q - 1)
    return int((b + 1) * q**a)


def grm_dual_order(q: int, r: int, m: int) -> int:
    _check_order(q, r, m)
    return m * (q - 1) - r - 1


def grm_min_weight_codeword(q: int, r: int, m: int) -> galois.FieldArray:
    """A word of GRM(r, m) of weight `grm_distance(q, r, m)`.

    With r = a(q - 1) + b it evaluates
    prod_{j<a} (1 - x_j^(q-1)) * prod_{t<b} (x_a - c_t) for distinct
    nonzero c_t, which is nonzero on (q - b) q^(m-a-1) points.
    """
    spec = GrmSpec(q, r, m)
    gf = spec.field.GF
    P = spec.points
    a, b = divmod(r, q - 1)
    word = gf.Ones(spec.n)
    for j in range(a):
        word = word * (gf(1) - P[:, j] ** (q - 1))
    for t in range(b):
        word = word * (P[:, a] - gf(t + 1))
    return word


def _grm_certificate(
    q: int, m: int, first: int, second: int
) -> Tuple[int, galois.FieldArray]:
    """The lighter of (u, u) for u in GRM(first) and (0, v) for v in
    GRM(second)."""
    d1, d2 = grm_distance(q, first, m), grm_distance(q, second, m)
    if d1 <= d2:
        u = grm_min_weight_codeword(q, first, m)
        return d1, plotkin_word(u, type(u).Zeros(u.shape[0]))
    v = grm_min_weight_codeword(q, second, m)
    return d2, plotkin_word(type(v).Zeros(v.shape[0]), v)


def plotkin_grm(q: int, m: int, first: int, second: int) -> Construction:
    """PP(GRM(first, m), GRM(second, m)) with symplectic distance
    min(d_H(GRM(first, m)), d_H(GRM(second, m)))."""
    C1 = grm_code(GrmSpec(q, first, m))
    C2 = grm_code(GrmSpec(q, second, m))
    d, word = _grm_certificate(q, m, first, second)
    return Construction(
        "plotkin",
        plotkin_sum(C1, C2),
        d,
        word,
        {"q": q, "m": m, "r1": first, "r2": second},
    )


def theorem7_codes(
    q: int, m: int, r: int, i: int
) -> Tuple[Construction, Construction]:
    """Symplectic SO PP(GRM(i, m), GRM(r, m)) and its symplectic dual,
    the DC code PP(GRM(r', m), GRM(i', m)) with r' and i' the dual
    orders.

    :raises OrderOutOfRangeError: If r or i is not a valid order.
    :raises ConditionViolatedError: If i > m(q - 1) - r - 1.
    """
    r_dual = grm_dual_order(q, r, m)
    if i < 0:
        raise OrderOutOfRangeError(f"i={i} is negative")
    if i > r_dual:
        raise ConditionViolatedError(
            f"i={i} exceeds m(q-1)-r-1={r_dual}"
        )
    i_dual = grm_dual_order(q, i, m)
    C1 = grm_code(GrmSpec(q, i, m))
    C2 = grm_code(GrmSpec(q, r, m))
    params = {"q": q, "m": m, "r": r, "i": i}
    so_d, so_word = _grm_certificate(q, m, i, r)
    dc_d, dc_word = _grm_certificate(q, m, r_dual, i_dual)
    so = Construction(
        "theorem7.so", plotkin_sum(C1, C2), so_d, so_word, params
    )
    dc = Construction(
        "theorem7.dc",
        plotkin_symplectic_dual(C1, C2),
        dc_d,
        dc_word,
        dict(params),
    )
    return so, dc
