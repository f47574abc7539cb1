"""Finite-field towers and dense polynomial arithmetic.

The ground-truth classifier needs honest field arithmetic: a prime field
F_p, an extension F_q = F_p[u]/(g), a top extension F_{q^n} = F_q[v]/(h),
polynomials over any of these, and a Euclidean gcd.  Fields stay small (the
classifier refuses anything past its guard), so the code favors clarity
over asymptotics: prime-field elements are ints in [0, p), extension
elements are tuples of subfield elements (constant coefficient first), and
polynomials are trimmed coefficient tuples.

Moduli are found by a deterministic scan in ascending coefficient order, so
every run of every process builds the identical tower for given (q, n).
"""

from functools import lru_cache

from . import numtheory
from .errors import BothZero, InternalInconsistency


class PrimeField:
    """Arithmetic mod a prime; elements are ints in [0, p)."""

    def __init__(self, p: int):
        if not numtheory.is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.char = p
        self.order = p
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (a + b) % self.order

    def sub(self, a, b):
        return (a - b) % self.order

    def neg(self, a):
        return (-a) % self.order

    def mul(self, a, b):
        return (a * b) % self.order

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.order)

    def pow(self, a, e: int):
        return field_pow(self, a, e)

    def index(self, a) -> int:
        return a

    def element(self, i: int):
        if not 0 <= i < self.order:
            raise ValueError(f"element index {i} out of range")
        return i

    def __repr__(self):
        return f"PrimeField({self.order})"


class ExtensionField:
    """F[x]/(modulus) for a monic irreducible modulus over a base field.

    Elements are tuples of exactly `degree` base-field elements, constant
    coefficient first.
    """

    def __init__(self, base, modulus: "Poly"):
        if modulus.field is not base:
            raise ValueError("modulus must be a polynomial over the base field")
        degree = modulus.degree
        if degree < 1:
            raise ValueError("modulus must have degree >= 1")
        if modulus.coeffs[-1] != base.one:
            raise ValueError("modulus must be monic")
        self.base = base
        self.modulus = modulus
        self.degree = degree
        self.char = base.char
        self.order = base.order**degree
        self.zero = (base.zero,) * degree
        self.one = (base.one,) + (base.zero,) * (degree - 1)
        # Non-leading modulus coefficients, padded to full length.
        self._mod_tail = tuple(modulus.coeffs[:degree]) + (base.zero,) * (
            degree - len(modulus.coeffs[:degree])
        )

    def add(self, a, b):
        base = self.base
        return tuple(base.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        base = self.base
        return tuple(base.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        base = self.base
        return tuple(base.neg(x) for x in a)

    def mul(self, a, b):
        base = self.base
        deg = self.degree
        zero = base.zero
        prod = [zero] * (2 * deg - 1)
        for i, ai in enumerate(a):
            if ai == zero:
                continue
            for j, bj in enumerate(b):
                if bj != zero:
                    prod[i + j] = base.add(prod[i + j], base.mul(ai, bj))
        tail = self._mod_tail
        for i in range(2 * deg - 2, deg - 1, -1):
            c = prod[i]
            if c == zero:
                continue
            prod[i] = zero
            for j in range(deg):
                tj = tail[j]
                if tj != zero:
                    prod[i - deg + j] = base.sub(prod[i - deg + j], base.mul(c, tj))
        return tuple(prod[:deg])

    def inv(self, a):
        """Inverse by the extended Euclidean algorithm on coefficient polys."""
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        base = self.base
        r0, r1 = self.modulus, Poly(base, a)
        t0 = Poly(base, ())
        t1 = Poly(base, (base.one,))
        while not r1.is_zero:
            quot, rem = divmod(r0, r1)
            r0, r1 = r1, rem
            t0, t1 = t1, t0 - quot * t1
        # r0 is a nonzero constant since the modulus is irreducible.
        scale = base.inv(r0.coeffs[0])
        coeffs = tuple(base.mul(scale, c) for c in t0.coeffs)
        return coeffs + (base.zero,) * (self.degree - len(coeffs))

    def pow(self, a, e: int):
        return field_pow(self, a, e)

    def index(self, a) -> int:
        i = 0
        base = self.base
        for c in reversed(a):
            i = i * base.order + base.index(c)
        return i

    def element(self, i: int):
        if not 0 <= i < self.order:
            raise ValueError(f"element index {i} out of range")
        base = self.base
        digits = []
        for _ in range(self.degree):
            i, r = divmod(i, base.order)
            digits.append(base.element(r))
        return tuple(digits)

    def embed(self, c):
        """Lift a base-field element to a constant of this field."""
        return (c,) + (self.base.zero,) * (self.degree - 1)

    def __repr__(self):
        return f"ExtensionField(order={self.order})"


def field_pow(field, a, e: int):
    """a**e by square and multiply; e >= 0."""
    if e < 0:
        raise ValueError("negative exponents are not supported")
    result = field.one
    while e:
        if e & 1:
            result = field.mul(result, a)
        a = field.mul(a, a)
        e >>= 1
    return result


class Poly:
    """Dense polynomial over a field; trailing zeros trimmed on construction.

    The zero polynomial has empty coefficients and degree -1.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == field.zero:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, field, degree: int, coeff=None):
        """coeff * x**degree (default coefficient 1)."""
        if coeff is None:
            coeff = field.one
        return cls(field, (field.zero,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field is other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def __add__(self, other):
        field = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = field.add(out[i], c)
        return Poly(field, out)

    def __neg__(self):
        field = self.field
        return Poly(field, tuple(field.neg(c) for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        field = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(field, ())
        zero = field.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == zero:
                continue
            for j, bj in enumerate(b):
                if bj != zero:
                    out[i + j] = field.add(out[i + j], field.mul(ai, bj))
        return Poly(field, out)

    def __divmod__(self, other):
        """Division with remainder; the divisor may be any nonzero poly."""
        field = self.field
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        db = other.degree
        inv_lead = field.inv(other.coeffs[db])
        rem = list(self.coeffs)
        quot = [field.zero] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1 - db, -1, -1):
            c = rem[i + db]
            if c == field.zero:
                continue
            factor = field.mul(c, inv_lead)
            quot[i] = factor
            for j in range(db + 1):
                rem[i + j] = field.sub(rem[i + j], field.mul(factor, other.coeffs[j]))
        return Poly(field, quot), Poly(field, rem[:db])

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, point):
        """Evaluate at a field element by Horner's rule."""
        field = self.field
        acc = field.zero
        for c in reversed(self.coeffs):
            acc = field.add(field.mul(acc, point), c)
        return acc

    def monic(self) -> "Poly":
        """Scale by the inverse of the leading coefficient."""
        if self.is_zero:
            return self
        field = self.field
        lead = self.coeffs[-1]
        if lead == field.one:
            return self
        inv = field.inv(lead)
        return Poly(field, tuple(field.mul(inv, c) for c in self.coeffs))

    def __repr__(self):
        return f"Poly(degree={self.degree}, coeffs={list(self.coeffs)!r})"


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm; gcd(f, 0) is monic f."""
    if f.is_zero and g.is_zero:
        raise BothZero("gcd(0, 0) is undefined")
    while not g.is_zero:
        f, g = g, f % g
    return f.monic()


def poly_pow_mod(base: Poly, exponent: int, modulus: Poly) -> Poly:
    """base**exponent mod modulus by square and multiply."""
    result = Poly(base.field, (base.field.one,))
    base = base % modulus
    while exponent:
        if exponent & 1:
            result = (result * base) % modulus
        base = (base * base) % modulus
        exponent >>= 1
    return result


def is_irreducible(f: Poly) -> bool:
    """Rabin's criterion over the coefficient field of f (degree >= 1).

    f is irreducible iff x**(Q**deg) = x mod f and, for every prime l
    dividing deg, gcd(x**(Q**(deg/l)) - x, f) = 1, where Q is the field
    order.
    """
    deg = f.degree
    if deg < 1:
        raise ValueError("irreducibility needs degree >= 1")
    if deg == 1:
        return True
    field = f.field
    order = field.order
    x = Poly(field, (field.zero, field.one))
    for prime in numtheory.factorize(deg):
        power = poly_pow_mod(x, order ** (deg // prime), f)
        if poly_gcd(power - x, f).degree != 0:
            return False
    return poly_pow_mod(x, order**deg, f) == x


def find_irreducible(field, degree: int, index: int = 0):
    """(index+1)-th monic irreducible of the given degree in scan order.

    Candidates x**degree + c are enumerated with the lower coefficients c
    in ascending mixed-radix order (constant coefficient least
    significant), so the result is reproducible bit for bit across runs.
    """
    if degree < 1:
        raise ValueError("degree must be >= 1")
    if index < 0:
        raise ValueError("index must be >= 0")
    order = field.order
    seen = 0
    for j in range(order**degree):
        digits = []
        t = j
        for _ in range(degree):
            t, r = divmod(t, order)
            digits.append(field.element(r))
        cand = Poly(field, tuple(digits) + (field.one,))
        if is_irreducible(cand):
            if seen == index:
                return cand
            seen += 1
    raise ValueError(
        f"fewer than {index + 1} monic irreducibles of degree {degree} exist"
    )


class TowerField:
    """The tower F_p -> F_q = F_p[u]/(g) -> F_{q^n} = F_q[v]/(h).

    Both moduli come from the deterministic irreducible scan;
    `modulus_index` picks a later hit for the top modulus so callers can
    check that counts do not depend on the field representation.
    """

    def __init__(self, q: int, n: int, modulus_index: int = 0):
        p, m = numtheory.prime_power_decompose(q)
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        prime = PrimeField(p)
        if m == 1:
            mid = prime
            mid_modulus = find_irreducible(prime, 1)
        else:
            mid_modulus = find_irreducible(prime, m)
            mid = ExtensionField(prime, mid_modulus)
        top_modulus = find_irreducible(mid, n, index=modulus_index)
        top = ExtensionField(mid, top_modulus)
        if mid.order != q or top.order != q**n:
            raise InternalInconsistency("tower cardinalities do not match q, q**n")
        self.q = q
        self.n = n
        self.prime = prime
        self.mid = mid
        self.top = top
        self.mid_modulus = mid_modulus
        self.top_modulus = top_modulus

    def element(self, i: int):
        """i-th element of the top field in coefficient order."""
        return self.top.element(i)

    def frobenius_iterate(self, alpha, i: int = 1):
        """alpha**(q**i) in the top field."""
        if i < 0:
            raise ValueError("i must be >= 0")
        return field_pow(self.top, alpha, self.q**i)

    def g_alpha(self, alpha) -> Poly:
        """Conjugate polynomial sum of alpha**(q**i) * x**(n-1-i) over i < n."""
        top = self.top
        coeffs = [top.zero] * self.n
        conj = alpha
        for i in range(self.n):
            coeffs[self.n - 1 - i] = conj
            conj = field_pow(top, conj, self.q)
        return Poly(top, coeffs)

    def xn_minus_one(self) -> Poly:
        """x**n - 1 over the top field."""
        top = self.top
        return Poly(
            top, (top.neg(top.one),) + (top.zero,) * (self.n - 1) + (top.one,)
        )

    def __repr__(self):
        return f"TowerField(q={self.q}, n={self.n})"


@lru_cache(maxsize=None)
def build_tower(q: int, n: int, modulus_index: int = 0) -> TowerField:
    """Shared TowerField instances; construction scans for moduli."""
    return TowerField(q, n, modulus_index)
