"""Signature matrices: rank conditions, generators, and the congruence.

At order 2 the path families collapse: an m-step and a degree-m path give
matrices in the same congruence orbit, characterized by rank(P) <= 1 and
rank([P Q]) <= m for the symmetric/skew split S = P + Q.  A float
congruence H carries the monomial matrix onto the axis matrix.
"""

import random
from fractions import Fraction

import numpy as np

from sigtensor import (
    axis_matrix,
    circuit_matrix,
    exact_det,
    is_signature_matrix,
    mono_matrix,
    mono_matrix_det,
    mono_to_axis_congruence,
    pl_signature,
    project_level,
    signature_matrix_generators,
    split_pencil,
)

rng = random.Random(2)
steps = [tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(4)) for _ in range(2)]
matrix = project_level(pl_signature(steps, 2), 2)
pencil = split_pencil(matrix)
print("random 2-step path in R^4:")
print("    member with m=2:", is_signature_matrix(matrix, 2))
print("    member with m=1:", is_signature_matrix(matrix, 1), "(skew part is nonzero)")

steps3 = [tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(3)) for _ in range(2)]
member = project_level(pl_signature(steps3, 2), 2)
values = signature_matrix_generators(member, 2)
print(f"\nd=3, m=2 generator values on a member (all zero): {[str(v) for v in values]}")

q = [[Fraction(0), Fraction(2), Fraction(-1)], [Fraction(-2), Fraction(0), Fraction(3)], [Fraction(1), Fraction(-3), Fraction(0)]]
print("\ncircuit column of a 3x3 skew matrix (kernel generator):",
      [str(row[0]) for row in circuit_matrix(q, 2)])

print("\nCauchy-type determinant of the monomial matrix:")
for d in range(1, 7):
    closed = mono_matrix_det(d)
    assert exact_det(mono_matrix(d)) == closed
    print(f"    d={d}: det = {closed}")

print("\nconstructive congruence H mono H^T = axis (float):")
for d in (2, 4, 6):
    h = mono_to_axis_congruence(d)
    m = np.array([[float(v) for v in row] for row in mono_matrix(d)])
    a = np.array([[float(v) for v in row] for row in axis_matrix(d)])
    print(f"    d={d}: max residual {np.max(np.abs(h @ m @ h.T - a)):.2e}")
