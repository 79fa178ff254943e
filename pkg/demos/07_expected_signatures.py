"""Expected signatures of Brownian paths, moments, and mixtures.

The expected signature of a Brownian path with drift mu and covariance
Sigma is exp(mu + Sigma/2) in the tensor algebra; a skew perturbation of
the level-2 data models non-reversible noise.  Classical Gaussian moments
are shuffle linear forms in the series, and two-component unit-covariance
planar mixtures satisfy a bordered 3x3 determinant.
"""

from fractions import Fraction

from sigtensor import (
    BrownianModel,
    MixtureModel,
    exact_det,
    expected_signature,
    gaussian_moment,
    mixture_expected_signature,
)

mu = (Fraction(1), Fraction(-1), Fraction(1, 2))
sigma = (
    (Fraction(2), Fraction(1, 2), Fraction(0)),
    (Fraction(1, 2), Fraction(1), Fraction(-1, 3)),
    (Fraction(0), Fraction(-1, 3), Fraction(3, 2)),
)
model = BrownianModel(mu, sigma)
series = expected_signature(model, 4)

print("expected signature level 2 equals (mu mu^T + Sigma)/2:")
for i in range(3):
    print("   ", [str(series.coefficient((i + 1, j + 1))) for j in range(3)])

print("\nGaussian moments read off as shuffle forms:")
for u in [(2, 0, 0), (1, 1, 0), (1, 1, 1), (2, 2, 0), (0, 3, 1)]:
    print(f"    E Z^({u}) = {gaussian_moment(u, series)}")

print("\nreflection symmetry at level 3: sigma_ijk == sigma_kji:")
print("    e.g. sigma_123 =", series.coefficient((1, 2, 3)),
      " sigma_321 =", series.coefficient((3, 2, 1)))

eye = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
mix = MixtureModel(
    (
        (Fraction(2, 5), BrownianModel((Fraction(1), Fraction(2)), eye)),
        (Fraction(3, 5), BrownianModel((Fraction(-1), Fraction(1, 2)), eye)),
    )
)
ms = mixture_expected_signature(mix, 2)
s1, s2 = ms.coefficient((1,)), ms.coefficient((2,))
s11, s12, s22 = ms.coefficient((1, 1)), ms.coefficient((1, 2)), ms.coefficient((2, 2))
bordered = [
    [Fraction(1), s1, s2],
    [s1, 2 * s11 - 1, 2 * s12],
    [s2, 2 * s12, 2 * s22 - 1],
]
print("\ntwo-component unit-covariance planar mixture:")
print("    bordered determinant:", exact_det(bordered))
