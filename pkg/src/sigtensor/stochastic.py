"""Expected signatures of Brownian paths, mixtures, and Gaussian moments.

The expected signature of a Brownian path with drift mu and covariance
Sigma is the tensor exponential of mu + Sigma/2; a skew perturbation Q of
the second-level data (non-reversible noise) adds Q to the exponent.
Mixtures are convex combinations of component series, and every moment of
the underlying Gaussian is a shuffle linear form in the series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .scalars import format_scalar, parse_scalar
from .shuffle import WordCombination, shuffle_combinations
from .tensor import LevelTensor, TensorSeries, exp_series, zero_series


@dataclass(frozen=True)
class BrownianModel:
    """Drift mu, symmetric covariance sigma, optional skew perturbation q.

    Symmetry and skewness are enforced exactly; positive-definiteness is
    deliberately not (the algebra makes sense without it) but can be
    requested through validate(strict=True).
    """

    mu: tuple
    sigma: tuple
    q: tuple | None = None

    def __post_init__(self):
        mu = tuple(self.mu)
        sigma = tuple(tuple(r) for r in self.sigma)
        d = len(mu)
        if len(sigma) != d or any(len(r) != d for r in sigma):
            raise ValueError("sigma must be d x d")
        for i in range(d):
            for j in range(d):
                if sigma[i][j] != sigma[j][i]:
                    raise ValueError("sigma must be symmetric")
        q = None
        if self.q is not None:
            q = tuple(tuple(r) for r in self.q)
            if len(q) != d or any(len(r) != d for r in q):
                raise ValueError("q must be d x d")
            for i in range(d):
                for j in range(d):
                    if q[i][j] != -q[j][i]:
                        raise ValueError("q must be skew-symmetric")
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "q", q)

    @property
    def d(self):
        return len(self.mu)

    def validate(self, strict: bool = False) -> None:
        """strict=True additionally requires sigma to be positive semidefinite."""
        if strict:
            import numpy as np

            eigs = np.linalg.eigvalsh(np.asarray(self.sigma, dtype=float))
            if eigs.min() < -1e-12:
                raise ValueError("sigma is not positive semidefinite")

    def to_json(self) -> dict:
        data = {
            "mu": [format_scalar(v) for v in self.mu],
            "sigma": [[format_scalar(v) for v in r] for r in self.sigma],
            "q": None,
        }
        if self.q is not None:
            data["q"] = [[format_scalar(v) for v in r] for r in self.q]
        return data

    @classmethod
    def from_json(cls, data: dict, exact: bool = True) -> "BrownianModel":
        mu = tuple(parse_scalar(v, exact) for v in data["mu"])
        sigma = tuple(tuple(parse_scalar(v, exact) for v in r) for r in data["sigma"])
        q = data.get("q")
        if q is not None:
            q = tuple(tuple(parse_scalar(v, exact) for v in r) for r in q)
        return cls(mu, sigma, q)


@dataclass(frozen=True)
class MixtureModel:
    """Weighted components; weights must sum to 1 (and be >= 0 unless signed)."""

    components: tuple
    signed: bool = False

    def __post_init__(self):
        comps = tuple((w, m) for w, m in self.components)
        if not comps:
            raise ValueError("a mixture needs at least one component")
        total = sum((w for w, _ in comps), Fraction(0))
        if total != 1:
            raise ValueError(f"mixture weights sum to {total}, expected 1")
        if not self.signed and any(w < 0 for w, _ in comps):
            raise ValueError("negative weight in an unsigned mixture")
        dims = {m.d for _, m in comps}
        if len(dims) != 1:
            raise ValueError("components must share one dimension")
        object.__setattr__(self, "components", comps)

    @property
    def d(self):
        return self.components[0][1].d

    def to_json(self) -> dict:
        return {
            "signed": self.signed,
            "components": [
                {"weight": format_scalar(w), "model": m.to_json()} for w, m in self.components
            ],
        }

    @classmethod
    def from_json(cls, data: dict, exact: bool = True) -> "MixtureModel":
        comps = tuple(
            (parse_scalar(c["weight"], exact), BrownianModel.from_json(c["model"], exact))
            for c in data["components"]
        )
        return cls(comps, signed=bool(data.get("signed", False)))


def drift_covariance_exponent(model: BrownianModel, n: int) -> TensorSeries:
    """The exponent mu + (sigma + 2q)/2 as a series (levels 1 and 2)."""
    d = model.d
    series = zero_series(d, n)
    levels = list(series.levels)
    if n >= 1:
        levels[1] = LevelTensor(d, 1, list(model.mu))
    if n >= 2:
        half = Fraction(1, 2)
        entries = []
        for i in range(d):
            for j in range(d):
                value = half * model.sigma[i][j]
                if model.q is not None:
                    value = value + model.q[i][j]
                entries.append(value)
        levels[2] = LevelTensor(d, 2, entries)
    return TensorSeries(d, n, levels)


def expected_signature(model: BrownianModel, n: int) -> TensorSeries:
    """Expected step-n signature: exp(mu + (sigma + 2q)/2).

    The result is generally not group-like; it is the exponential of an
    inhomogeneous element with a symmetric level-2 part.
    """
    return exp_series(drift_covariance_exponent(model, n))


def mixture_expected_signature(mixture: MixtureModel, n: int) -> TensorSeries:
    """Weighted sum of the component expected signatures."""
    total = None
    for weight, model in mixture.components:
        term = expected_signature(model, n).scale(weight)
        total = term if total is None else total.add(term)
    return total


def moment_word_combination(u: Sequence[int]) -> WordCombination:
    """Iterated shuffle power of single letters: letter i taken u[i-1] times."""
    acc = {(): 1}
    for letter, power in enumerate(u, start=1):
        if power < 0:
            raise ValueError("multi-index entries must be >= 0")
        for _ in range(power):
            acc = shuffle_combinations(acc, {(letter,): 1})
    return WordCombination(acc)


def gaussian_moment(u: Sequence[int], series: TensorSeries):
    """Moment E(Z_1^u1 ... Z_d^ud) read off an expected-signature series.

    Evaluates the iterated shuffle form of the multi-index u on level |u|.
    """
    u = tuple(int(v) for v in u)
    if len(u) != series.d:
        raise ValueError(f"multi-index length {len(u)} != dimension {series.d}")
    total = sum(u)
    if total > series.n:
        raise ValueError(f"moment order {total} exceeds truncation {series.n}")
    if total == 0:
        return series.constant_term
    return moment_word_combination(u).eval_on(series.levels[total])
