"""Structure of x**n - 1 over F_q, computed arithmetically.

The two central objects are the decomposition n = p**s * n0 with
gcd(n0, p) = 1 (so x**n - 1 = (x**n0 - 1)**(p**s)) and the degree pattern:
how many distinct monic irreducible factors of each degree x**n0 - 1 has.
Both come from modular arithmetic alone; no polynomial is ever factored.
"""

from dataclasses import dataclass
from functools import lru_cache

from . import numtheory
from .errors import InputTooLarge, InternalInconsistency

MAX_DEGREE = numtheory.MAX_N


@dataclass(frozen=True)
class ExtensionParams:
    """Shape of the extension F_{q^n}/F_q.

    q = p**m, n = p**s * n0 with gcd(n0, p) = 1, and d is the multiplicative
    order of q mod n0, which is the largest factor degree in x**n0 - 1.
    """

    q: int
    p: int
    m: int
    n: int
    n0: int
    s: int
    d: int

    @property
    def ps(self) -> int:
        """p**s, the multiplicity of every irreducible factor of x**n - 1."""
        return self.p**self.s

    @property
    def coprime(self) -> bool:
        """True when gcd(n, q) = 1, i.e. x**n - 1 is squarefree."""
        return self.s == 0


@dataclass(frozen=True)
class DegreePattern:
    """Map degree r -> count of distinct monic irreducible factors of x**n0 - 1.

    Zero counts are dropped at construction, so equality ignores them.
    """

    entries: dict[int, int]

    def __post_init__(self):
        object.__setattr__(
            self, "entries", {r: v for r, v in self.entries.items() if v}
        )

    def v(self, r: int) -> int:
        """Number of distinct irreducible factors of degree r (0 if none)."""
        return self.entries.get(r, 0)

    def items(self) -> list[tuple[int, int]]:
        """(degree, count) pairs in ascending degree order."""
        return sorted(self.entries.items())

    def factor_count(self) -> int:
        """Total number of distinct irreducible factors."""
        return sum(self.entries.values())

    def degree_sum(self) -> int:
        """Sum of degree * count over all factors; always equals n0."""
        return sum(r * v for r, v in self.entries.items())


@lru_cache(maxsize=4096)
def derive_params(q: int, n: int) -> ExtensionParams:
    """Validate (q, n) and decompose the extension shape."""
    p, m = numtheory.prime_power_decompose(q)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > MAX_DEGREE:
        raise InputTooLarge(f"n = {n} exceeds the supported bound {MAX_DEGREE}")
    n0, s = n, 0
    while n0 % p == 0:
        n0 //= p
        s += 1
    d = numtheory.multiplicative_order(q, n0)
    return ExtensionParams(q=q, p=p, m=m, n=n, n0=n0, s=s, d=d)


@lru_cache(maxsize=4096)
def degree_pattern(params: ExtensionParams) -> DegreePattern:
    """Factor-degree multiplicities of x**n0 - 1 via Moebius inversion.

    With t_r = gcd(q**r - 1, n), the number of degree-r factors is
    (1/r) * sum over u | r of moebius(r/u) * t_u; degrees r run over the
    divisors of d.
    """
    entries: dict[int, int] = {}
    for r in numtheory.divisors(params.d):
        total = 0
        for u in numtheory.divisors(r):
            total += numtheory.moebius(r // u) * numtheory.gcd_qr_minus_one(
                params.q, u, params.n
            )
        count, rem = divmod(total, r)
        if rem or count < 0:
            raise InternalInconsistency(f"degree {r} multiplicity {total}/{r} is not integral")
        if count:
            entries[r] = count
    pattern = DegreePattern(entries)
    if pattern.degree_sum() != params.n0:
        raise InternalInconsistency(
            f"pattern degree sum {pattern.degree_sum()} != n0 = {params.n0}"
        )
    return pattern


def omega(params: ExtensionParams) -> int:
    """Number of distinct irreducible factors of x**n - 1 over F_q.

    Computed directly as (1/d) * sum over r | d of gcd(q**r - 1, n) * phi(d/r),
    independently of degree_pattern.
    """
    total = 0
    for r in numtheory.divisors(params.d):
        total += numtheory.gcd_qr_minus_one(params.q, r, params.n) * numtheory.euler_phi(
            params.d // r
        )
    count, rem = divmod(total, params.d)
    if rem:
        raise InternalInconsistency(f"factor count {total}/{params.d} is not integral")
    return count
