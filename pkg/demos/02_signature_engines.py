"""Three independent engines for one signature tensor.

A piecewise-linear signature can be computed as a product of tensor
exponentials, as a combinatorial sum over weakly increasing step
assignments, or as a congruence of the axis core.  The polynomial engine
integrates iterated integrals symbolically and cross-checks against the
monomial-core congruence.  All engines agree bit-exactly over rationals.
"""

import random
from fractions import Fraction

from sigtensor import (
    pl_level_direct,
    pl_signature,
    pl_signature_congruence,
    poly_signature_congruence,
    poly_signature_integrate,
    project_level,
)

rng = random.Random(0)


def rand_fraction():
    return Fraction(rng.randint(-4, 4), rng.randint(1, 3))


steps = [tuple(rand_fraction() for _ in range(3)) for _ in range(3)]
print("random 3-step path in R^3, steps:")
for s in steps:
    print("   ", [str(v) for v in s])

for k in (2, 3, 4):
    chen = project_level(pl_signature(steps, k), k)
    direct = pl_level_direct(steps, k)
    congruent = pl_signature_congruence(steps, k)
    assert chen == direct == congruent
    print(f"level {k}: exponential product == direct sum == congruence  [exact]")

coeffs = [tuple(rand_fraction() for _ in range(2)) for _ in range(3)]
print("\nrandom quadratic path in R^3, coefficient rows (t, t^2):")
for row in coeffs:
    print("   ", [str(v) for v in row])
for k in (2, 3, 4):
    integrated = project_level(poly_signature_integrate(coeffs, k), k)
    congruent = poly_signature_congruence(coeffs, k)
    assert integrated == congruent
    print(f"level {k}: iterated integration == congruence  [exact]")

sig = poly_signature_integrate(coeffs, 3)
s1 = sig.coefficient((1,))
s2 = sig.coefficient((2,))
lhs = sig.coefficient((1, 1, 2)) + sig.coefficient((1, 2, 1)) + sig.coefficient((2, 1, 1))
print("\nshuffle identity on level 3:")
print(f"    sigma_112 + sigma_121 + sigma_211 = {lhs} = (1/2) sigma_1^2 sigma_2 = {s1 * s1 * s2 / 2}")
assert lhs == s1 * s1 * s2 / 2
