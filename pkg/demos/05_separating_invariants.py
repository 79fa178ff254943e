"""Telling two-step paths from quadratic paths at order >= 3.

At order 2 the families are indistinguishable; at order 3 a triple of
quadrics separates them, the two triples differing in a single integer
coefficient (10 on quadratic data, 9 on two-step data).  At order 4 the
ratio of two linear invariants distinguishes the canonical cores, and in
dimension d the alternating volume form vanishes on co-planar paths.
"""

import random
from fractions import Fraction

from sigtensor import (
    canonical_axis,
    canonical_mono,
    linear_invariants,
    pl_signature,
    poly_signature_integrate,
    project_level,
    quadric_family_eval,
)

rng = random.Random(3)


def rand_fraction():
    return Fraction(rng.randint(-4, 4), rng.randint(1, 3))


coeffs = [(rand_fraction(), rand_fraction()) for _ in range(2)]
quad = project_level(poly_signature_integrate(coeffs, 3), 3)
steps = [(rand_fraction(), rand_fraction()) for _ in range(2)]
two_step = project_level(pl_signature(steps, 3), 3)

print("quadratic-path tensor:   coefficient-10 triple ->",
      [str(v) for v in quadric_family_eval(quad, "P")])
print("                         coefficient-9  triple ->",
      [str(v) for v in quadric_family_eval(quad, "L")])
print("two-step-path tensor:    coefficient-9  triple ->",
      [str(v) for v in quadric_family_eval(two_step, "L")])
print("                         coefficient-10 triple ->",
      [str(v) for v in quadric_family_eval(two_step, "P")])

axis = linear_invariants(canonical_axis(2, 4))
mono = linear_invariants(canonical_mono(2, 4))
print("\nlinear invariants at order 4 (d=2):")
print(f"    axis core: l1 = {axis.l1}, l2 = {axis.l2}, ratio = {Fraction(axis.l1) / axis.l2}")
print(f"    mono core: l1 = {mono.l1}, l2 = {mono.l2}, ratio = {Fraction(mono.l1) / mono.l2}")

u, v = (Fraction(1), Fraction(2), Fraction(-1)), (Fraction(0), Fraction(1), Fraction(1))
planar = [tuple(a * u[i] + b * v[i] for i in range(3))
          for a, b in [(1, 0), (Fraction(1, 2), 2), (-1, 3)]]
tensor = project_level(pl_signature(planar, 3), 3)
print("\nvolume form on a planar path in R^3:", linear_invariants(tensor).volume)
staircase = [(Fraction(1), Fraction(0), Fraction(0)),
             (Fraction(0), Fraction(1), Fraction(0)),
             (Fraction(0), Fraction(0), Fraction(1))]
tensor = project_level(pl_signature(staircase, 3), 3)
print("volume form on the unit staircase:   ", linear_invariants(tensor).volume)
