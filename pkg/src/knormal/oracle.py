"""Ground-truth classification of field elements, with no counting formulas.

``brute_force_distribution`` walks all of F_{q^n} and buckets every element
alpha by deg gcd(x**n - 1, g_alpha), the definition of k-normality.  Two
accelerations keep full sweeps up to 2**22 elements feasible, neither of
which borrows anything from the counting side:

* field arithmetic runs in discrete-log form (nonzero elements are
  exponents of one fixed generator; addition uses a Zech table
  z[t] = log(1 + gen**t) built by walking the generator's powers), and
* gcd degrees are constant on classes {c * alpha**(q**i): c in F_q*, i < n},
  because g_{c*alpha} = c*g_alpha and g_{alpha**q} = x*g_alpha mod x**n - 1
  with x coprime to x**n - 1, so one gcd per class suffices, weighted by
  class size.  In exponent terms the class of e is {q**i * e + j*L mod M}
  with M = q**n - 1, L = M/(q-1).

``_classify_elementwise`` is the same sweep with no shortcuts, one generic
tower-arithmetic gcd per element; tests assert both paths agree on a spread
of small fields.

``cyclotomic_cosets`` gives the orbit sizes of Z/n0 under multiplication by
q, an independent route to the factor-degree pattern of x**n0 - 1.
"""

import math

from . import galois, numtheory, spectrum
from .counting import Distribution
from .errors import InstanceTooLarge, InternalInconsistency, NotCoprime

# Refuse full-field sweeps beyond this many elements by default.
DEFAULT_MAX_ORDER = 1 << 22


def brute_force_distribution(
    q: int,
    n: int,
    *,
    max_order: int = DEFAULT_MAX_ORDER,
    modulus_index: int = 0,
) -> Distribution:
    """Exact k-normal distribution computed from the field itself."""
    spectrum.derive_params(q, n)  # validates q prime power, n >= 1
    if q**n > max_order:
        raise InstanceTooLarge(f"q**n = {q**n} exceeds the sweep guard {max_order}")
    tower = galois.build_tower(q, n, modulus_index)
    if n == 1:
        # x - 1 against a nonzero constant: the table machinery would be
        # all overhead (and the mid tables need not fit for huge prime q).
        counts = _classify_elementwise(tower)
    else:
        counts = _classify_by_classes(tower)
    if sum(counts) != q**n:
        raise InternalInconsistency("classification missed or double-counted elements")
    return Distribution(q=q, n=n, counts=tuple(counts))


def cyclotomic_cosets(q: int, n0: int) -> list[int]:
    """Sorted orbit sizes of Z/n0 under b -> q*b mod n0 (needs gcd(q, n0) = 1).

    The orbit sizes are exactly the degrees of the distinct irreducible
    factors of x**n0 - 1 over F_q, one factor per orbit.
    """
    if n0 < 1:
        raise ValueError(f"n0 must be >= 1, got {n0}")
    if math.gcd(q, n0) != 1:
        raise NotCoprime(f"q = {q} and n0 = {n0} share a factor")
    seen = bytearray(n0)
    sizes = []
    for start in range(n0):
        if seen[start]:
            continue
        size = 0
        b = start
        while not seen[b]:
            seen[b] = 1
            size += 1
            b = b * q % n0
        sizes.append(size)
    return sorted(sizes)


def _classify_elementwise(tower: galois.TowerField) -> list[int]:
    """One generic-arithmetic gcd per element; slow reference path."""
    top = tower.top
    n = tower.n
    target = tower.xn_minus_one()
    counts = [0] * (n + 1)
    for i in range(top.order):
        alpha = top.element(i)
        if alpha == top.zero:
            counts[n] += 1
            continue
        counts[galois.poly_gcd(target, tower.g_alpha(alpha)).degree] += 1
    return counts


def _classify_by_classes(tower: galois.TowerField) -> list[int]:
    """One exponent-space gcd per scalar/Frobenius class, weighted by size."""
    n, q = tower.n, tower.q
    M, zech, half, qpows = _build_tables(tower)
    counts = [0] * (n + 1)
    counts[n] += 1  # alpha = 0 has g_alpha = 0, so the gcd is x**n - 1
    L = M // (q - 1)
    visited = bytearray(M)
    scalar_steps = q - 1
    for e in range(M):
        if visited[e]:
            continue
        size = 0
        f = e
        while True:
            g = f
            for _ in range(scalar_steps):
                if not visited[g]:
                    visited[g] = 1
                    size += 1
                g += L
                if g >= M:
                    g -= M
            f = f * q % M
            if f == e:
                break
        counts[_gcd_degree_exp(e, n, M, zech, half, qpows)] += size
    return counts


def _gcd_degree_exp(e, n, M, zech, half, qpows):
    """deg gcd(x**n - 1, g_alpha) for alpha = gen**e, all in exponent form.

    Coefficient lists hold generator exponents, -1 encoding zero; index j is
    the coefficient of x**j.  Euclidean remainders, with each elimination
    step done through the Zech table.
    """
    # g_alpha coefficient of x**j is alpha**(q**(n-1-j)): never zero.
    b = [e * qpows[n - 1 - j] % M for j in range(n)]
    a = [half] + [-1] * (n - 1) + [0]  # x**n - 1
    while b:
        db = len(b) - 1
        neg_inv_lead = (half - b[db]) % M
        r = list(a)
        for t in range(len(r) - 1 - db, -1, -1):
            c = r[db + t]
            if c < 0:
                continue
            factor = c + neg_inv_lead
            if factor >= M:
                factor -= M
            for j in range(db):
                bj = b[j]
                if bj < 0:
                    continue
                ae = factor + bj
                if ae >= M:
                    ae -= M
                rj = r[j + t]
                if rj < 0:
                    r[j + t] = ae
                else:
                    dz = zech[ae - rj if ae >= rj else ae - rj + M]
                    if dz < 0:
                        r[j + t] = -1
                    else:
                        s = rj + dz
                        r[j + t] = s - M if s >= M else s
            r[db + t] = -1
        while r and r[-1] < 0:
            r.pop()
        a, b = b, r
    return len(a) - 1


def _build_tables(tower: galois.TowerField):
    """Zech-log tables for the top field: (M, zech, half, qpows).

    M = q**n - 1; zech[t] = log(1 + gen**t) with -1 for the t where the sum
    is zero; half = log(-1); qpows[i] = q**i mod M.
    """
    n, q = tower.n, tower.q
    mid = tower.mid
    order = tower.top.order
    M = order - 1

    # Mid-field add/mul tables on element indices, flattened.
    elems = [mid.element(i) for i in range(q)]
    add_t = [0] * (q * q)
    mul_t = [0] * (q * q)
    for i in range(q):
        row = i * q
        ei = elems[i]
        for j in range(q):
            add_t[row + j] = mid.index(mid.add(ei, elems[j]))
            mul_t[row + j] = mid.index(mid.mul(ei, elems[j]))

    # Negated non-leading top-modulus coefficients, as indices: the
    # reduction v**n = sum hneg[j] * v**j.
    hcoeffs = tower.top_modulus.coeffs
    hneg = [mid.index(mid.neg(hcoeffs[j])) for j in range(n)]

    gamma = _find_generator(M, n, q, add_t, mul_t, hneg)

    p = tower.prime.order
    if p == 2 and all(c <= 1 for c in gamma):
        exp_packed, log_packed = _walk_packed_char2(
            gamma, n, q, order, M, mul_t, hneg
        )
    else:
        exp_packed, log_packed = _walk_vector(gamma, n, q, order, M, add_t, mul_t, hneg)

    minus_one = mid.index(mid.neg(mid.one))
    half = log_packed[minus_one]
    if half < 0:
        raise InternalInconsistency("log of -1 missing from the walk")

    if p == 2:
        zech = [log_packed[y ^ 1] for y in exp_packed]
    else:
        pm1 = p - 1
        zech = [
            log_packed[y - pm1] if y % p == pm1 else log_packed[y + 1]
            for y in exp_packed
        ]

    qpows = [pow(q, i, M) for i in range(n)]
    return M, zech, half, qpows


def _find_generator(M, n, q, add_t, mul_t, hneg):
    """Smallest-index multiplicative generator, preferring 0/1 coefficients.

    Returned as a coefficient-index vector of length n.  In characteristic
    2 an all-{0,1} generator lets the table walk run on packed ints, so
    those candidates are tried first; correctness never depends on which
    generator wins.
    """
    one = [0] * n
    one[0] = 1
    if M == 1:
        return one
    cofactors = [M // prime for prime in numtheory.factorize(M)]

    def is_generator(vec):
        return all(
            _vec_pow(vec, cf, n, q, add_t, mul_t, hneg) != one for cf in cofactors
        )

    if q % 2 == 0:
        # Subset bitmasks: bit j set -> coefficient of v**j is 1.
        for mask in range(2, 1 << min(n, 14)):
            vec = [(mask >> j) & 1 for j in range(n)]
            if is_generator(vec):
                return vec
    for idx in range(2, M + 1):
        vec = []
        t = idx
        for _ in range(n):
            t, r = divmod(t, q)
            vec.append(r)
        if is_generator(vec):
            return vec
    raise InternalInconsistency("no multiplicative generator found")


def _vec_mul(a, b, n, q, add_t, mul_t, hneg):
    """Product of coefficient-index vectors modulo the top modulus."""
    prod = [0] * (2 * n - 1)
    for i, ai in enumerate(a):
        if ai:
            arow = ai * q
            for j, bj in enumerate(b):
                if bj:
                    k = i + j
                    prod[k] = add_t[prod[k] * q + mul_t[arow + bj]]
    for i in range(2 * n - 2, n - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            crow = c * q
            off = i - n
            for j in range(n):
                hj = hneg[j]
                if hj:
                    k = off + j
                    prod[k] = add_t[prod[k] * q + mul_t[crow + hj]]
    del prod[n:]
    return prod


def _vec_pow(vec, e, n, q, add_t, mul_t, hneg):
    result = [0] * n
    result[0] = 1
    base = list(vec)
    while e:
        if e & 1:
            result = _vec_mul(result, base, n, q, add_t, mul_t, hneg)
        base = _vec_mul(base, base, n, q, add_t, mul_t, hneg)
        e >>= 1
    return result


def _walk_packed_char2(gamma, n, q, order, M, mul_t, hneg):
    """Generator-power walk on packed ints; characteristic 2, 0/1 gamma.

    Packing concatenates coefficient indices in base q = 2**mbits, so
    addition is XOR and multiplying by v is a shift plus one tabulated
    reduction of the overflow coefficient.
    """
    mbits = q.bit_length() - 1
    full = n * mbits
    mask = order - 1
    # corr[c]: packed form of c * (v**n reduced), i.e. sum c*hneg[j] v**j.
    corr = [0] * q
    for c in range(1, q):
        crow = c * q
        pk = 0
        for j in reversed(range(n)):
            pk = (pk << mbits) | mul_t[crow + hneg[j]]
        corr[c] = pk
    positions = [j for j, cj in enumerate(gamma) if cj]
    log_packed = [-1] * order
    exp_packed = [0] * M
    x = 1
    if positions == [1]:  # gamma = v: pure shift walk
        for e in range(M):
            if log_packed[x] >= 0:
                raise InternalInconsistency("generator walk revisited an element")
            log_packed[x] = e
            exp_packed[e] = x
            x <<= mbits
            ov = x >> full
            if ov:
                x = (x & mask) ^ corr[ov]
    else:
        for e in range(M):
            if log_packed[x] >= 0:
                raise InternalInconsistency("generator walk revisited an element")
            log_packed[x] = e
            exp_packed[e] = x
            acc = x if gamma[0] else 0
            z = x
            prev = 0
            for j in positions:
                if j == 0:
                    continue
                for _ in range(j - prev):
                    z <<= mbits
                    ov = z >> full
                    if ov:
                        z = (z & mask) ^ corr[ov]
                prev = j
                acc ^= z
            x = acc
    return exp_packed, log_packed


def _walk_vector(gamma, n, q, order, M, add_t, mul_t, hneg):
    """Generator-power walk on coefficient-index vectors; any characteristic."""
    sparse = [(j, c) for j, c in enumerate(gamma) if c]
    log_packed = [-1] * order
    exp_packed = [0] * M
    vec = [0] * n
    vec[0] = 1
    for e in range(M):
        pk = 0
        for c in reversed(vec):
            pk = pk * q + c
        if log_packed[pk] >= 0:
            raise InternalInconsistency("generator walk revisited an element")
        log_packed[pk] = e
        exp_packed[e] = pk
        acc = [0] * n
        z = vec
        prev = 0
        for j, cj in sparse:
            for _ in range(j - prev):
                # z = z * v
                top = z[-1]
                z = [0] + z[:-1]
                if top:
                    trow = top * q
                    for t in range(n):
                        hj = hneg[t]
                        if hj:
                            z[t] = add_t[z[t] * q + mul_t[trow + hj]]
            prev = j
            if cj == 1:
                for t in range(n):
                    zt = z[t]
                    if zt:
                        acc[t] = add_t[acc[t] * q + zt]
            else:
                crow = cj * q
                for t in range(n):
                    zt = z[t]
                    if zt:
                        acc[t] = add_t[acc[t] * q + mul_t[crow + zt]]
        vec = acc
    return exp_packed, log_packed
