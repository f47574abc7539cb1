"""Counting k-normal elements: the basics.

An element alpha of F_{q^n} is 0-normal (just "normal") when its Frobenius
conjugates alpha, alpha^q, ..., alpha^(q^(n-1)) form a basis of F_{q^n}
over F_q.  More generally alpha is k-normal when the conjugates span a
subspace of codimension k, which happens exactly when
gcd(x^n - 1, g_alpha) has degree k.  Every element has exactly one defect
k, so the counts over k = 0..n partition the field.
"""

from knormal import count_k_normal, count_normal, distribution

# How many normal elements does F_{2^6} have over F_2?
print("normal elements of F_64 over F_2:", count_normal(2, 6))

# The full defect spectrum for the same field.
dist = distribution(2, 6)
for k, count in enumerate(dist.counts):
    print(f"  {k}-normal: {count}")

# The counts always add up to the field size: every element has a defect.
assert dist.total() == 2**6
print("total:", dist.total(), "= 2^6")

# k = n happens only for the zero element, whose conjugates span nothing.
assert dist[6] == 1

# Single counts without the whole distribution:
print("2-normal elements of F_{25^3} over F_25:", count_k_normal(25, 3, 2))

# Counts are exact integers no matter the size.
huge = count_normal(16, 16)
print("normal elements of F_{16^16} over F_16:", huge)
assert huge == 16**15 * 15  # x^16 - 1 = (x - 1)^16 here, one factor
