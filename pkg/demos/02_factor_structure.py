"""Where the counts come from: the factor structure of x^n - 1.

All counting formulas rest on two integers and one small table, computed
with modular arithmetic only (no polynomial factoring):

* write n = p^s * n0 with gcd(n0, p) = 1, where q = p^m;
* let d be the multiplicative order of q mod n0;
* for each divisor r of d, count the distinct monic irreducible degree-r
  factors of x^n0 - 1 (the degree pattern v_r).

Then x^n - 1 = (x^n0 - 1)^(p^s) and every irreducible factor appears with
multiplicity exactly p^s.
"""

from collections import Counter

from knormal import cyclotomic_cosets, degree_pattern, derive_params, omega

params = derive_params(27, 11)
print(f"q = 27 = {params.p}^{params.m}, n = 11 = {params.p}^{params.s} * {params.n0}")
print("order of q mod n0:", params.d)

pattern = degree_pattern(params)
print("degree pattern of x^11 - 1 over F_27:", pattern.entries)
assert pattern.degree_sum() == params.n0

# omega counts distinct irreducible factors without building the pattern.
print("distinct irreducible factors:", omega(params))
assert omega(params) == pattern.factor_count()

# An independent route: orbits of Z/n0 under multiplication by q.  Each
# orbit corresponds to one irreducible factor, and the orbit size is its
# degree.
sizes = cyclotomic_cosets(27, params.n0)
print("cyclotomic coset sizes:", sizes)
assert Counter(sizes) == Counter(pattern.entries)

# A wilder example: x^15 - 1 over F_16 splits into 15 linear factors
# because 16 = 1 mod 15.
params = derive_params(16, 15)
print("pattern for q=16, n=15:", degree_pattern(params).entries)
