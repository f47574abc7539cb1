"""Trust, but verify: sweeping an actual field element by element.

The formulas never touch a field element.  The oracle does nothing but:
it builds F_p -> F_q -> F_{q^n} with deterministically chosen moduli,
computes g_alpha for every alpha, and buckets elements by
deg gcd(x^n - 1, g_alpha).  If formulas and sweep disagree anywhere,
something is broken.
"""

from knormal import (
    brute_force_distribution,
    build_tower,
    distribution,
    poly_gcd,
)

# A full sweep of F_{3^4} = 81 elements.
brute = brute_force_distribution(3, 4)
fast = distribution(3, 4)
print("brute force:", brute.counts)
print("formulas:   ", fast.counts)
assert brute == fast

# Under the hood: the tower and one element's conjugate polynomial.
tower = build_tower(3, 4)
print("mid modulus: ", tower.mid_modulus)
print("top modulus: ", tower.top_modulus)
alpha = tower.element(5)
g = tower.g_alpha(alpha)
defect = poly_gcd(tower.xn_minus_one(), g).degree
print("element 5 has defect", defect)

# The counts cannot depend on which irreducible modulus represents the
# field; ask for a different representation and sweep again.
other = brute_force_distribution(3, 4, modulus_index=1)
assert other == brute
assert build_tower(3, 4, 1).top_modulus != tower.top_modulus
print("same distribution under a different top modulus")

# The sweep refuses huge fields unless the guard is raised explicitly.
try:
    brute_force_distribution(2, 40)
except Exception as exc:
    print("guard:", exc)
