"""Canonical core tensors: the staircase path and the moment curve.

The two model paths from 0 to (1,...,1) -- the axis-parallel staircase and
the moment curve t -> (t, t^2, ..., t^d) -- have closed-form signature
tensors.  Every piecewise-linear or polynomial path is a linear image of
one of them, so these cores drive the congruence engines.
"""

from fractions import Fraction

from sigtensor import canonical_axis, canonical_mono, pl_signature, project_level


def show_matrix(name, tensor):
    print(f"{name}:")
    d = tensor.d
    for i in range(1, d + 1):
        print("   ", [str(tensor[(i, j)]) for j in range(1, d + 1)])


show_matrix("order-2 axis core, d=3", canonical_axis(3, 2))
show_matrix("order-2 monomial core, d=3", canonical_mono(3, 2))

print("\nsymmetrized parts agree (both paths share their endpoint):")
show_matrix("axis core symmetrized", canonical_axis(3, 2).symmetrize())

print("\norder-4 axis entries count arrangements of the word:")
core = canonical_axis(4, 4)
for word in [(1, 1, 1, 1), (1, 1, 1, 2), (1, 1, 2, 2), (1, 1, 2, 3), (1, 2, 3, 4), (1, 2, 4, 3)]:
    print(f"    sigma_{''.join(map(str, word))} = {core[word]}")

print("\nthe axis core is the product of step exponentials:")
steps = [[Fraction(int(i == j)) for i in range(4)] for j in range(4)]
assert project_level(pl_signature(steps, 4), 4) == core
print("    exp(e1) exp(e2) exp(e3) exp(e4) level 4 == axis core  [verified]")
