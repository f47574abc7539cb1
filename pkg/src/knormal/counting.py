"""Exact counts of k-normal elements of F_{q^n} over F_q.

An element is k-normal when gcd(x**n - 1, g_alpha) has degree k, where
g_alpha = sum of alpha**(q**i) * x**(n-1-i).  Counting them reduces to a
weighted count of divisors of x**n - 1 of degree n - k: each distinct
irreducible factor f of degree r may appear with multiplicity a in
0..p**s, contributing degree r*a and weight phi_q(f**a) (1 when a = 0).

The production algorithm extracts the coefficient of z**(n-k) from the
truncated product of one generating series per irreducible factor.  A
literal tuple enumeration, a binomial form for the squarefree case, and
per-k closed forms are provided as independent routes for cross-checks.
All results are plain Python ints and therefore exact.
"""

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from . import spectrum
from .errors import (
    EnumerationTooLarge,
    InternalInconsistency,
    KOutOfRange,
    NotCoprimeCase,
)

# Refuse reference enumerations beyond this many multiplicity tuples.
ENUMERATION_LIMIT = 10**7


@dataclass(frozen=True)
class Distribution:
    """Counts of k-normal elements for k = 0..n at fixed (q, n)."""

    q: int
    n: int
    counts: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.counts[k]

    def total(self) -> int:
        """Sum over all k; always q**n, since every element has one defect."""
        return sum(self.counts)


def phi_q_prime_power(q: int, r: int, e: int) -> int:
    """Polynomial totient of the e-th power of a degree-r irreducible.

    Counts units in F_q[x]/(f**e) for irreducible f of degree r:
    q**(r*e) - q**(r*(e-1)).  For e = 0 the empty product gives 1.
    """
    if r < 1 or e < 0:
        raise ValueError(f"need r >= 1, e >= 0; got r={r}, e={e}")
    if e == 0:
        return 1
    return q ** (r * e) - q ** (r * (e - 1))


def _check_k(n: int, k: int) -> None:
    if k < 0 or k > n:
        raise KOutOfRange(f"k must lie in 0..{n}, got {k}")


def _factor_series(q: int, r: int, multiplicity_cap: int, degree_cap: int) -> list[int]:
    """Weight series of one degree-r irreducible factor, truncated.

    Coefficient of z**(r*a) is the weight of using the factor's a-th power;
    all other coefficients are zero.
    """
    series = [0] * (degree_cap + 1)
    series[0] = 1
    for a in range(1, min(multiplicity_cap, degree_cap // r) + 1):
        series[r * a] = phi_q_prime_power(q, r, a)
    return series


def _mul_trunc(a: list[int], b: list[int], cap: int) -> list[int]:
    """Product of two coefficient lists, dropping degrees above cap."""
    out = [0] * (cap + 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        top = cap - i
        for j, bj in enumerate(b):
            if j > top:
                break
            if bj:
                out[i + j] += ai * bj
    return out


@lru_cache(maxsize=8192)
def _weight_series(params: spectrum.ExtensionParams) -> tuple[int, ...]:
    """Product of the weight series of every irreducible factor, up to z**n.

    Coefficient of z**m is the total weight of all divisors of x**n - 1 of
    degree m, i.e. the number of (n - m)-normal elements.  Factors are
    multiplied in ascending degree order, each repeated per its count.
    """
    degree_cap = params.n
    pattern = spectrum.degree_pattern(params)
    total = [0] * (degree_cap + 1)
    total[0] = 1
    for r, count in pattern.items():
        factor = _factor_series(params.q, r, params.ps, degree_cap)
        for _ in range(count):
            total = _mul_trunc(total, factor, degree_cap)
    return tuple(total)


def count_k_normal(q: int, n: int, k: int) -> int:
    """Number of k-normal elements of F_{q^n} over F_q."""
    params = spectrum.derive_params(q, n)
    _check_k(n, k)
    return _weight_series(params)[n - k]


def count_normal(q: int, n: int) -> int:
    """Number of normal (0-normal) elements: q**(n-n0) * prod (q**r - 1)**v_r.

    Independent of count_k_normal's series product; the two must agree at
    k = 0.
    """
    params = spectrum.derive_params(q, n)
    pattern = spectrum.degree_pattern(params)
    result = q ** (params.n - params.n0)
    for r, count in pattern.items():
        result *= (q**r - 1) ** count
    return result


def distribution(q: int, n: int) -> Distribution:
    """Counts of k-normal elements for every k = 0..n at once."""
    params = spectrum.derive_params(q, n)
    series = _weight_series(params)
    counts = tuple(series[n - k] for k in range(n + 1))
    return Distribution(q=q, n=n, counts=counts)


def count_k_normal_enum(q: int, n: int, k: int, limit: int = ENUMERATION_LIMIT) -> int:
    """Reference count by explicit enumeration of multiplicity tuples.

    Iterates every assignment of a multiplicity 0..p**s to every distinct
    irreducible factor, keeping those whose degrees sum to n - k and adding
    the product of their weights.  Exponentially slower than
    count_k_normal but with no shared convolution machinery; guarded by
    `limit` on the raw tuple count.
    """
    params = spectrum.derive_params(q, n)
    _check_k(n, k)
    pattern = spectrum.degree_pattern(params)
    degrees = [r for r, count in pattern.items() for _ in range(count)]
    ps = params.ps
    tuple_count = (ps + 1) ** len(degrees)
    if tuple_count > limit:
        raise EnumerationTooLarge(
            f"{tuple_count} multiplicity tuples exceed the guard {limit}"
        )
    target = n - k
    total = 0
    for alphas in itertools.product(range(ps + 1), repeat=len(degrees)):
        if sum(r * a for r, a in zip(degrees, alphas)) != target:
            continue
        weight = 1
        for r, a in zip(degrees, alphas):
            weight *= phi_q_prime_power(q, r, a)
        total += weight
    return total


def count_k_normal_coprime(q: int, n: int, k: int) -> int:
    """Binomial form of count_k_normal, valid only when gcd(n, q) = 1.

    With x**n - 1 squarefree, each factor is used or not, so the count is a
    sum over choices (a_r) with 0 <= a_r <= v_r and sum r*a_r = n - k of
    prod C(v_r, a_r) * (q**r - 1)**a_r.
    """
    params = spectrum.derive_params(q, n)
    if params.s != 0:
        raise NotCoprimeCase(
            f"n = {n} is divisible by the characteristic {params.p} of F_{q}"
        )
    _check_k(n, k)
    items = spectrum.degree_pattern(params).items()

    def explore(idx: int, remaining: int) -> int:
        if idx == len(items):
            return 1 if remaining == 0 else 0
        r, v = items[idx]
        total = 0
        for a in range(min(v, remaining // r) + 1):
            total += (
                math.comb(v, a)
                * (q**r - 1) ** a
                * explore(idx + 1, remaining - r * a)
            )
        return total

    return explore(0, n - k)


def _exact_div(a: int, b: int) -> int:
    q, rem = divmod(a, b)
    if rem:
        raise InternalInconsistency(f"{b} does not divide {a}")
    return q


def _times_q_power(value: int, q: int, e: int) -> int:
    """value * q**e with possibly negative e; the division must be exact."""
    if e >= 0:
        return value * q**e
    return _exact_div(value, q ** (-e))


def _factor_product(q: int, pattern: spectrum.DegreePattern) -> int:
    """prod (q**r - 1)**v_r over the degree pattern."""
    result = 1
    for r, count in pattern.items():
        result *= (q**r - 1) ** count
    return result


def closed_form_n1(q: int, n: int) -> int:
    """Closed form for the number of 1-normal elements (any n >= 1)."""
    params = spectrum.derive_params(q, n)
    pattern = spectrum.degree_pattern(params)
    v1 = pattern.v(1)
    base = _factor_product(q, pattern)
    if params.s == 0:
        # v1 * (q-1)**(v1-1) * prod over r >= 2; v1 >= 1 always.
        return v1 * _exact_div(base, q - 1)
    return v1 * _times_q_power(base, q, n - params.n0 - 1)


def closed_form_n2(q: int, n: int) -> int:
    """Closed form for the number of 2-normal elements (n >= 2)."""
    params = spectrum.derive_params(q, n)
    _check_k(n, 2)
    pattern = spectrum.degree_pattern(params)
    v1, v2 = pattern.v(1), pattern.v(2)
    base = _factor_product(q, pattern)
    pairs = math.comb(v1, 2)
    if params.s == 0:
        result = pairs * _exact_div(base, (q - 1) ** 2) if pairs else 0
        if v2:
            result += v2 * _exact_div(base, q * q - 1)
        return result
    if params.ps > 2:
        inner = (v1 + pairs + v2) * base
    else:  # p**s = 2
        inner = v1 * q * _exact_div(base, q - 1) + (pairs + v2) * base
    return _times_q_power(inner, q, n - params.n0 - 2)


def closed_form_n3(q: int, n: int) -> int:
    """Closed form for the number of 3-normal elements (n >= 3)."""
    params = spectrum.derive_params(q, n)
    _check_k(n, 3)
    pattern = spectrum.degree_pattern(params)
    v1, v2, v3 = pattern.v(1), pattern.v(2), pattern.v(3)
    base = _factor_product(q, pattern)
    triples = math.comb(v1, 3)
    if params.s == 0:
        result = triples * _exact_div(base, (q - 1) ** 3) if triples else 0
        if v1 and v2:
            result += v1 * v2 * _exact_div(base, (q - 1) * (q * q - 1))
        if v3:
            result += v3 * _exact_div(base, q**3 - 1)
        return result
    ps = params.ps
    # v1*(v1-1)*(v1+4) is always divisible by 6.
    mixed = v1 * (v1 - 1) * (v1 + 4) // 6 + v1 * v2 + v3
    if ps > 3:
        inner = (v1 + mixed) * base
    elif ps == 3:
        inner = v1 * q * _exact_div(base, q - 1) + mixed * base
    else:  # p**s = 2
        inner = v1 * (v1 - 1) * q * _exact_div(base, q - 1) + (
            triples + v1 * v2 + v3
        ) * base
    return _times_q_power(inner, q, n - params.n0 - 3)


def lower_bound_holds(q: int, n: int, k: int) -> bool:
    """Check N_k * q**k >= N_0 whenever N_k > 0, in exact integer arithmetic."""
    nk = count_k_normal(q, n, k)
    if nk == 0:
        return True
    return nk * q**k >= count_normal(q, n)
