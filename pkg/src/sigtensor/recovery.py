"""Inverting signature maps: universal recovery, closed forms, least squares.

A generic order-n tensor on the group-like locus determines its whole
series once an n-th root fixes the first level; planar two-step and
quadratic paths at order 3 admit linear closed-form recovery; any family
admits damped Gauss-Newton recovery in float mode; and Jacobian ranks of
the parametrizations certify dimensions.

Reduction recipe for d > m (not automated here): a rank-m path matrix X
factors through its column space, so with any left inverse G of an
orthonormal-ish basis B of that space, the order-3 tensor of X equals the
congruence by B of the order-3 tensor of G @ X; recovering the smaller
m x m problem and mapping back with B reduces recovery to the d = m case
handled by gauss_newton_recover or the closed forms.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .dual import Dual, seed_matrix
from .matrices import exact_rank, matrix_inverse
from .paths import canonical_axis, canonical_mono, tensor_congruence
from .scalars import fraction_nth_root, real_nth_root
from .shuffle import shuffle_form_eval, shuffle_words
from .tensor import LevelTensor, TensorSeries
from .words import all_words


class NonGenericInput(ValueError):
    """The required shuffle-form denominators vanish."""


class RootUnavailable(ValueError):
    """No n-th root exists in the requested scalar mode."""


class DegenerateRecovery(ValueError):
    """The closed-form linear relations do not determine a unique point."""


class RecoveryFailed(RuntimeError):
    """No Gauss-Newton restart converged; carries the best attempt."""

    def __init__(self, message, matrix=None, residual=None):
        super().__init__(message)
        self.matrix = matrix
        self.residual = residual


@dataclass(frozen=True)
class RecoveryResult:
    """A group-like series projecting onto the input level tensor."""

    series: TensorSeries
    multiplicity: int
    real_count: int
    root_choice: str


@dataclass(frozen=True)
class JacobianReport:
    family: str
    d: int
    k: int
    m: int
    parameter_count: int
    rank: int

    @property
    def projective_dim(self) -> int:
        return self.rank - 1


# --- universal n-to-1 recovery ---------------------------------------------


def _random_change(d: int, rng: random.Random) -> list:
    """Small invertible integer matrix."""
    while True:
        a = [[Fraction(rng.randint(-3, 3)) for _ in range(d)] for _ in range(d)]
        from .matrices import exact_det

        if exact_det(a) != 0:
            return a


def recover_group_element(
    tensor: LevelTensor, mode: str = "rational", seed: int = 0, attempts: int = 4
) -> RecoveryResult:
    """Reconstruct the group-like series from its top-level tensor.

    The leading coordinate is an n-th root of n! times the 1...1 entry
    (exact in rational mode, the positive real root for even order in real
    mode); lower levels follow by dividing shuffle forms by that
    coordinate.  When the 1...1 entry vanishes, or an even-order root has
    a negative radicand, a few seeded random linear changes of coordinates
    are tried before giving up.
    """
    if mode not in ("rational", "real"):
        raise ValueError("mode must be 'rational' or 'real'")
    n = tensor.k
    if n < 1:
        raise ValueError("need a tensor of order >= 1")
    if mode == "rational" and not tensor.is_exact():
        raise TypeError("rational mode needs exact entries")
    if mode == "real":
        tensor = tensor.to_float()

    rng = random.Random(seed)
    changes = [None] + [_random_change(tensor.d, rng) for _ in range(attempts)]
    saw_negative = False
    for change in changes:
        working = tensor if change is None else tensor_congruence(tensor, change)
        leading = working[(1,) * n]
        if leading == 0:
            continue
        base = math.factorial(n) * leading
        if mode == "rational":
            root = fraction_nth_root(Fraction(base), n)
            if root is None:
                if n % 2 == 0 and base < 0:
                    saw_negative = True
                    continue
                raise RootUnavailable("root unavailable in this scalar mode")
        else:
            if n % 2 == 0 and base < 0:
                saw_negative = True
                continue
            root = real_nth_root(float(base), n)
        series = _descend(working, root)
        if change is not None:
            if mode == "rational":
                inverse = matrix_inverse(change)
            else:
                inverse = np.linalg.inv(np.asarray(change, dtype=float)).tolist()
            series = TensorSeries(
                series.d,
                series.n,
                [tensor_congruence(level, inverse) if level.k else level for level in series.levels],
            )
        if n % 2 == 1:
            real_count, choice = 1, "unique real root"
        else:
            real_count, choice = 2, "positive real root (sibling: negate odd levels)"
        if mode == "rational":
            choice = "exact rational root; " + choice
        return RecoveryResult(series, n, real_count, choice)
    if saw_negative:
        raise RootUnavailable("root unavailable in this scalar mode")
    raise NonGenericInput("non-generic input: the leading shuffle denominators vanish")


def _descend(tensor: LevelTensor, sigma1) -> TensorSeries:
    """Fill levels n-1 .. 1 downward from the top level, dividing by sigma1."""
    d, n = tensor.d, tensor.k
    one = sigma1 / sigma1
    levels: list = [None] * (n + 1)
    levels[0] = LevelTensor(d, 0, [one])
    levels[n] = tensor
    # level 1 from the full-order shuffle powers
    ones_word = (1,) * (n - 1)
    power = sigma1 ** (n - 1)
    factor = math.factorial(n - 1)
    vec = []
    for i in range(1, d + 1):
        if n == 1:
            vec.append(tensor[(i,)])
            continue
        form = shuffle_words((i,), ones_word).eval_on(tensor)
        vec.append(factor * form / power)
    vec[0] = sigma1
    if n >= 2:
        levels[1] = LevelTensor(d, 1, vec)
    for k in range(n - 1, 1, -1):
        upper = levels[k + 1]
        entries = [shuffle_form_eval(word, (1,), upper) / sigma1 for word in all_words(d, k)]
        levels[k] = LevelTensor(d, k, entries)
    return TensorSeries(d, n, levels)


def negate_odd_levels(series: TensorSeries) -> TensorSeries:
    """The second real preimage for even order: scale level k by (-1)^k."""
    return series.eta_scale(-1)


# --- closed-form planar recovery at order 3 ---------------------------------


def _swap_word(word: tuple) -> tuple:
    return tuple(3 - letter for letter in word)


def _swapped_tensor(tensor: LevelTensor) -> LevelTensor:
    entries = {w: tensor[_swap_word(w)] for w in all_words(2, tensor.k)}
    return LevelTensor.from_map(2, tensor.k, entries)


def _kernel_point(rows: list) -> tuple:
    """Unique (up to scale) kernel vector of an exact matrix, else error."""
    cols = len(rows[0])
    work = [list(map(Fraction, r)) for r in rows]
    n_rows = len(work)
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, n_rows) if work[i][c] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = Fraction(1) / work[r][c]
        work[r] = [v * inv for v in work[r]]
        for i in range(n_rows):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [v - f * w for v, w in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    if cols - len(pivots) != 1:
        raise DegenerateRecovery(
            f"relations determine a {cols - len(pivots)}-dimensional solution space"
        )
    free = next(c for c in range(cols) if c not in pivots)
    sol = [Fraction(0)] * cols
    sol[free] = Fraction(1)
    for row, c in zip(work, pivots):
        sol[c] = -row[free]
    # normalize to coprime integers with the first nonzero entry positive
    lcm = 1
    for v in sol:
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    ints = [int(v * lcm) for v in sol]
    g = 0
    for v in ints:
        g = math.gcd(g, abs(v))
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(Fraction(v) for v in ints)


def _two_step_rows(t: LevelTensor) -> list:
    """Linear relations in (x11, x12, x21, x22) for planar two-step recovery."""
    s = t.__getitem__
    return [
        # underlined leading unknowns x21, x12, x11 in the three relations
        [0, 0, s((1, 2, 2)) - s((2, 1, 2)), -(s((1, 2, 1)) - s((2, 1, 1)))],
        [0, s((1, 2, 1)) - s((2, 1, 1)), -(s((2, 1, 2)) - s((2, 2, 1))), 0],
        [3 * s((2, 1, 1)), -3 * s((1, 1, 1)), s((2, 1, 1)) - s((1, 2, 1)), 0],
    ]


def recover_two_step_planar(tensor: LevelTensor) -> tuple:
    """Projective parameters (x11:x12:x21:x22) of a planar two-step path.

    Rows are the closed-form linear relations together with their images
    under swapping the two plane axes (which permutes both the tensor and
    the unknowns); the unique kernel direction is returned as coprime
    integers.  x_ij is coordinate j of step i.
    """
    if tensor.d != 2 or tensor.k != 3:
        raise ValueError("closed-form recovery needs d=2, k=3")
    rows = _two_step_rows(tensor)
    # swap unknowns (x11,x12,x21,x22) -> (x12,x11,x22,x21)
    perm = (1, 0, 3, 2)
    for row in _two_step_rows(_swapped_tensor(tensor)):
        rows.append([row[perm.index(c)] for c in range(4)])
    return _kernel_point(rows)


def _quadratic_rows(t: LevelTensor) -> list:
    """Linear relations in (x11, x12, x21, x22) for planar quadratic recovery.

    The x21/x22 relation is the unique (up to scale) one with coefficients
    linear in the tensor entries; it can be re-derived by substituting the
    degree-3 entries of a general quadratic plane path into an ansatz.
    """
    s = t.__getitem__
    return [
        [0, 0, 5 * (s((1, 2, 2)) - 2 * s((2, 1, 2)) + s((2, 2, 1))),
         2 * (s((1, 2, 2)) - 5 * s((2, 1, 2)) + 4 * s((2, 2, 1)))],
        [0, s((1, 2, 2)) - 2 * s((2, 1, 2)) + s((2, 2, 1)), 0,
         s((1, 1, 2)) - 2 * s((1, 2, 1)) + s((2, 1, 1))],
        [5 * s((1, 2, 1)), -(s((1, 1, 2)) - 5 * s((1, 2, 1)) - s((2, 1, 1))),
         -5 * s((1, 1, 1)), -5 * s((1, 1, 1))],
    ]


def recover_quadratic_planar(tensor: LevelTensor) -> tuple:
    """Projective parameters (x11:x12:x21:x22) of a planar quadratic path.

    x_i1 and x_i2 are the linear and quadratic coefficients of coordinate
    i.  Same elimination strategy as the two-step recovery.
    """
    if tensor.d != 2 or tensor.k != 3:
        raise ValueError("closed-form recovery needs d=2, k=3")
    rows = _quadratic_rows(tensor)
    # swapping the plane axes maps (x11,x12,x21,x22) -> (x21,x22,x11,x12)
    perm = (2, 3, 0, 1)
    for row in _quadratic_rows(_swapped_tensor(tensor)):
        rows.append([row[perm.index(c)] for c in range(4)])
    return _kernel_point(rows)


# --- families shared by the numerical code ----------------------------------


def _family_core(family: str, m: int, k: int) -> LevelTensor:
    if family in ("pl", "L"):
        return canonical_axis(m, k)
    if family in ("poly", "P"):
        return canonical_mono(m, k)
    raise ValueError("family must be 'pl' or 'poly'")


def signature_map(family: str, matrix: Sequence[Sequence], k: int) -> LevelTensor:
    """Order-k signature of the family member encoded by a d x m matrix."""
    rows = [list(r) for r in matrix]
    core = _family_core(family, len(rows[0]), k)
    return tensor_congruence(core, rows)


# --- Jacobian ranks ----------------------------------------------------------


def jacobian_rank(
    family: str, d: int, k: int, m: int, seed_count: int = 3, seed: int = 0
) -> JacobianReport:
    """Exact rank of the (d*m) x d^k Jacobian of the parametrization.

    Dual numbers with rational seeds give the Jacobian at random rational
    points exactly; the report keeps the maximum rank over the seeds.
    """
    rng = random.Random(seed)
    best = 0
    for _ in range(seed_count):
        point = [
            [Fraction(rng.randint(1, 12), rng.randint(1, 4)) * (-1) ** rng.randint(0, 1) for _ in range(m)]
            for _ in range(d)
        ]
        seeded = seed_matrix(point)
        image = signature_map(family, seeded, k)
        jac = [[0] * (d**k) for _ in range(d * m)]
        for col, entry in enumerate(image.entries):
            if isinstance(entry, Dual):
                for row in range(d * m):
                    jac[row][col] = entry.b[row]
        best = max(best, exact_rank(jac))
    return JacobianReport(family, d, k, m, d * m, best)


# --- damped Gauss-Newton recovery --------------------------------------------


@dataclass(frozen=True)
class GaussNewtonResult:
    matrix: np.ndarray
    residual: float
    converged: bool
    restarts_used: int
    iterations: int


def gauss_newton_recover(
    family: str,
    d: int,
    m: int,
    k: int,
    tensor: LevelTensor,
    tol: float = 1e-10,
    max_iter: int = 200,
    restarts: int = 8,
    seed: int = 0,
) -> GaussNewtonResult:
    """Least-squares path recovery by damped Gauss-Newton (float mode).

    Minimizes the squared distance between the family signature of a d x m
    matrix and the target tensor.  The Jacobian comes from float dual
    numbers pushed through the signature map.  Restarts draw seeded random
    starting matrices; the best residual wins, and RecoveryFailed (carrying
    the best attempt) is raised when no restart meets tol.
    """
    if k < 3:
        raise ValueError("need k >= 3 for tensor recovery")
    target = np.asarray([float(v) for v in tensor.entries])
    denom = float(np.linalg.norm(target)) or 1.0
    rng = random.Random(seed)
    scale = (np.linalg.norm(target) * math.factorial(k)) ** (1.0 / k) / max(1.0, math.sqrt(d * m))
    scale = float(scale) if scale > 0 else 1.0

    starts = [np.zeros((d, m))]
    starts += [
        np.array([[rng.gauss(0.0, scale + 1e-3) for _ in range(m)] for _ in range(d)])
        for _ in range(max(0, restarts - 1))
    ]

    best = (math.inf, starts[0], False, 0, 0)
    for restart_index, x0 in enumerate(starts):
        x = x0.copy()
        lam = 1e-3
        stalled = 0
        residual, jac = _residual_and_jacobian(family, x, k, target)
        norm = float(np.linalg.norm(residual)) / denom
        iterations = 0
        for iterations in range(1, max_iter + 1):
            if norm < tol:
                break
            g = jac @ residual
            h = jac @ jac.T
            accepted = False
            for _ in range(40):
                try:
                    step = np.linalg.solve(h + lam * np.eye(d * m), -g)
                except np.linalg.LinAlgError:
                    lam = min(lam * 10.0, 1e12)
                    continue
                trial = x + step.reshape(d, m)
                trial_res, trial_jac = _residual_and_jacobian(family, trial, k, target)
                trial_norm = float(np.linalg.norm(trial_res)) / denom
                if trial_norm < norm:
                    x, residual, jac, norm = trial, trial_res, trial_jac, trial_norm
                    lam = max(lam / 10.0, 1e-14)
                    accepted = True
                    break
                lam = min(lam * 10.0, 1e12)
            if not accepted:
                stalled += 1
                if stalled >= 3:
                    break
        if norm < best[0]:
            best = (norm, x.copy(), norm < tol, restart_index + 1, iterations)
        if norm < tol:
            break
    residual, matrix, converged, used, iterations = (
        best[0],
        best[1],
        best[2],
        best[3],
        best[4],
    )
    if not converged:
        raise RecoveryFailed(
            f"recovery failed: best relative residual {residual:.3e} after {used} restarts",
            matrix=matrix,
            residual=residual,
        )
    return GaussNewtonResult(matrix, residual, converged, used, iterations)


def _residual_and_jacobian(family: str, x: np.ndarray, k: int, target: np.ndarray):
    d, m = x.shape
    seeded = seed_matrix([[float(v) for v in row] for row in x])
    image = signature_map(family, seeded, k)
    values = np.empty(len(image.entries))
    jac = np.zeros((d * m, len(image.entries)))
    for col, entry in enumerate(image.entries):
        if isinstance(entry, Dual):
            values[col] = entry.a
            jac[:, col] = entry.b
        else:
            values[col] = float(entry)
    return values - target, jac
