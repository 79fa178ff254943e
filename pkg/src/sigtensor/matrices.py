"""Signature matrices: pencil split, exact rank, pfaffians, membership.

An order-2 signature tensor S splits into a symmetric part P and a skew
part Q.  S comes from an m-piece piecewise-linear path (equivalently a
degree-m polynomial path) exactly when rank(P) <= 1 and the concatenated
d x 2d matrix [P Q] has rank <= m; the generating equations are 2-minors
of P together with pfaffian data of Q.  A float congruence transports the
monomial matrix onto the axis matrix constructively.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .paths import canonical_axis, canonical_mono
from .scalars import is_exact
from .tensor import LevelTensor


class NumericalFailure(RuntimeError):
    """A float construction failed to meet its tolerance."""


def _as_rows(matrix) -> list:
    if isinstance(matrix, LevelTensor):
        if matrix.k != 2:
            raise ValueError("expected an order-2 tensor")
        d = matrix.d
        return [[matrix.entries[i * d + j] for j in range(d)] for i in range(d)]
    rows = [list(r) for r in matrix]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged matrix")
    return rows


def matrix_to_tensor(rows: Sequence[Sequence]) -> LevelTensor:
    rows = _as_rows(rows)
    d = len(rows)
    if any(len(r) != d for r in rows):
        raise ValueError("matrix must be square")
    return LevelTensor(d, 2, [rows[i][j] for i in range(d) for j in range(d)])


@dataclass(frozen=True)
class MatrixPencil:
    """Symmetric part P and skew-symmetric part Q with P + Q = S."""

    P: tuple
    Q: tuple

    @property
    def d(self):
        return len(self.P)

    def reconstruct(self) -> list:
        return [[p + q for p, q in zip(prow, qrow)] for prow, qrow in zip(self.P, self.Q)]


def split_pencil(matrix) -> MatrixPencil:
    """Exact halves S = P + Q with P symmetric and Q skew."""
    rows = _as_rows(matrix)
    d = len(rows)
    if any(len(r) != d for r in rows):
        raise ValueError("matrix must be square")
    half = Fraction(1, 2)
    P = tuple(tuple(half * (rows[i][j] + rows[j][i]) for j in range(d)) for i in range(d))
    Q = tuple(tuple(half * (rows[i][j] - rows[j][i]) for j in range(d)) for i in range(d))
    return MatrixPencil(P, Q)


# --- exact linear algebra -------------------------------------------------


def _clear_denominators(rows: list) -> list:
    """Row-wise integer scaling; preserves rank and determinant sign."""
    out = []
    for row in rows:
        fracs = [Fraction(v) for v in row]
        lcm = 1
        for f in fracs:
            lcm = lcm * f.denominator // math.gcd(lcm, f.denominator)
        out.append([int(f * lcm) for f in fracs])
    return out


def exact_rank(matrix, float_tol: float = 1e-9) -> int:
    """Rank of a matrix: fraction-free elimination over the rationals.

    Float matrices fall back to counting singular values above
    float_tol * sigma_max.
    """
    rows = _as_rows(matrix)
    if not rows or not rows[0]:
        return 0
    if not all(is_exact(v) for row in rows for v in row):
        a = np.asarray(rows, dtype=float)
        s = np.linalg.svd(a, compute_uv=False)
        if s.size == 0 or s[0] == 0.0:
            return 0
        return int(np.sum(s > float_tol * s[0]))
    work = _clear_denominators(rows)
    n_rows, n_cols = len(work), len(work[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(n_cols):
        pivot = next((r for r in range(row, n_rows) if work[r][col] != 0), None)
        if pivot is None:
            continue
        work[row], work[pivot] = work[pivot], work[row]
        for r in range(row + 1, n_rows):
            for c in range(col + 1, n_cols):
                work[r][c] = (work[row][col] * work[r][c] - work[r][col] * work[row][c]) // prev
            work[r][col] = 0
        prev = work[row][col]
        rank += 1
        row += 1
        if row == n_rows:
            break
    return rank


def exact_det(matrix):
    """Determinant by fraction-free (Bareiss) elimination."""
    rows = [[Fraction(v) for v in row] for row in _as_rows(matrix)]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for col in range(n - 1):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            sign = -sign
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                rows[r][c] = (rows[col][col] * rows[r][c] - rows[r][col] * rows[col][c]) / prev
            rows[r][col] = Fraction(0)
        prev = rows[col][col]
    return sign * rows[n - 1][n - 1]


def matrix_inverse(matrix) -> list:
    """Exact inverse via Gauss-Jordan elimination."""
    rows = [[Fraction(v) for v in row] for row in _as_rows(matrix)]
    n = len(rows)
    aug = [rows[i] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [v - factor * w for v, w in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


# --- pfaffians and circuit matrices ----------------------------------------


def _check_skew(rows: list) -> None:
    d = len(rows)
    for i in range(d):
        for j in range(d):
            if rows[i][j] != -rows[j][i]:
                raise ValueError("matrix is not skew-symmetric")


def pfaffian(matrix, subset: Sequence[int] | None = None):
    """Pfaffian of a skew matrix (or of its principal submatrix on subset).

    Computed by expansion along the first row; the square of the result is
    the corresponding principal minor.  Odd sizes are rejected.
    """
    rows = _as_rows(matrix)
    _check_skew(rows)
    idx = tuple(range(len(rows))) if subset is None else tuple(subset)
    if len(idx) % 2 != 0:
        raise ValueError("pfaffian needs an even index set")
    return _pfaffian_rec(rows, idx)


def _pfaffian_rec(rows: list, idx: tuple):
    if not idx:
        return Fraction(1)
    if len(idx) == 2:
        return rows[idx[0]][idx[1]]
    first, rest = idx[0], idx[1:]
    total = 0
    for pos, j in enumerate(rest):
        value = rows[first][j]
        if value == 0:
            continue
        sub = rest[:pos] + rest[pos + 1 :]
        term = value * _pfaffian_rec(rows, sub)
        total = total + term if pos % 2 == 0 else total - term
    return total


def circuit_matrix(matrix, m: int) -> list:
    """d x C(d, m+1) matrix of signed sub-pfaffians (m even).

    Column I (an (m+1)-subset, in lexicographic order) has entry 0 at rows
    outside I and (-1)^pos * pfaffian(Q on I minus {i}) at row i, where pos
    is the 0-based position of i inside I.  Each column lies in ker(Q)
    whenever rank(Q) = m.
    """
    rows = _as_rows(matrix)
    _check_skew(rows)
    d = len(rows)
    if m % 2 != 0 or m < 0:
        raise ValueError("circuit matrix needs even m >= 0")
    if m + 1 > d:
        raise ValueError(f"no (m+1)-subsets of 1..{d} for m={m}")
    columns = []
    for subset in itertools.combinations(range(d), m + 1):
        col = [Fraction(0)] * d
        for pos, i in enumerate(subset):
            rest = subset[:pos] + subset[pos + 1 :]
            value = _pfaffian_rec(rows, rest)
            col[i] = value if pos % 2 == 0 else -value
        columns.append(col)
    return [[columns[c][r] for c in range(len(columns))] for r in range(d)]


# --- membership and generators ---------------------------------------------


def is_signature_matrix(matrix, m: int, float_tol: float = 1e-9) -> bool:
    """Whether S = P + Q satisfies rank(P) <= 1 and rank([P Q]) <= m."""
    ok, _ = signature_matrix_witness(matrix, m, float_tol)
    return ok


def signature_matrix_witness(matrix, m: int, float_tol: float = 1e-9):
    """Membership boolean plus a description of the violated rank condition."""
    pencil = split_pencil(matrix)
    rank_p = exact_rank(pencil.P, float_tol)
    if rank_p > 1:
        return False, f"rank(P) = {rank_p} > 1"
    stacked = [list(prow) + list(qrow) for prow, qrow in zip(pencil.P, pencil.Q)]
    rank_pq = exact_rank(stacked, float_tol)
    if rank_pq > m:
        return False, f"rank([P Q]) = {rank_pq} > {m}"
    return True, None


def signature_matrix_generators(matrix, m: int) -> list:
    """Values of the generating equations at S, for the given m.

    Odd m: 2-minors of P and (m+1)-pfaffians of Q.  Even m: 2-minors of P,
    (m+2)-pfaffians of Q, and the entries of P * C_m(Q).  All values vanish
    exactly on signature matrices of m-piece or degree-m paths.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    pencil = split_pencil(matrix)
    d = pencil.d
    P = [list(r) for r in pencil.P]
    Q = [list(r) for r in pencil.Q]
    values = []
    pairs = list(itertools.combinations(range(d), 2))
    for a, (i, j) in enumerate(pairs):
        for k, l in pairs[a:]:
            values.append(P[i][k] * P[j][l] - P[i][l] * P[j][k])
    if m % 2 == 1:
        for subset in itertools.combinations(range(d), m + 1):
            values.append(_pfaffian_rec(Q, subset))
    else:
        if m + 2 <= d:
            for subset in itertools.combinations(range(d), m + 2):
                values.append(_pfaffian_rec(Q, subset))
        if m + 1 <= d:
            circuit = circuit_matrix(Q, m)
            for i in range(d):
                for c in range(len(circuit[0])):
                    values.append(sum((P[i][j] * circuit[j][c] for j in range(d)), Fraction(0)))
    return values


# --- canonical matrices and the constructive congruence ---------------------


def axis_matrix(d: int, m: int | None = None) -> list:
    """d x d matrix with the order-2 axis core in its upper-left m x m block."""
    m = d if m is None else m
    if not 1 <= m <= d:
        raise ValueError("need 1 <= m <= d")
    core = canonical_axis(m, 2)
    out = [[Fraction(0)] * d for _ in range(d)]
    for i in range(m):
        for j in range(m):
            out[i][j] = core.entries[i * m + j]
    return out


def mono_matrix(d: int, m: int | None = None) -> list:
    """d x d matrix with the order-2 monomial core in its upper-left block."""
    m = d if m is None else m
    if not 1 <= m <= d:
        raise ValueError("need 1 <= m <= d")
    core = canonical_mono(m, 2)
    out = [[Fraction(0)] * d for _ in range(d)]
    for i in range(m):
        for j in range(m):
            out[i][j] = core.entries[i * m + j]
    return out


def mono_matrix_det(d: int):
    """Closed form for det of the order-2 monomial matrix (Cauchy-type)."""
    if d < 1:
        raise ValueError("need d >= 1")
    num = Fraction(1)
    for i in range(1, d + 1):
        num *= Fraction(i)
    for i in range(1, d + 1):
        for j in range(i + 1, d + 1):
            num *= Fraction(j - i) ** 2
    den = Fraction(1)
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            den *= Fraction(i + j)
    return num / den


def mono_slice_matrix(d: int) -> list:
    """First slice of the order-3 monomial core: entry (j,k) = jk/((j+1)(j+k+1))."""
    return [
        [Fraction(j * k, (j + 1) * (j + k + 1)) for k in range(1, d + 1)]
        for j in range(1, d + 1)
    ]


def mono_slice_det(d: int):
    """Closed form for det of the order-3 monomial first slice."""
    if d < 1:
        raise ValueError("need d >= 1")
    num = Fraction(1)
    for i in range(1, d + 1):
        num *= Fraction(i)
    num /= Fraction(d + 1)
    for i in range(1, d + 1):
        for j in range(i + 1, d + 1):
            num *= Fraction(j - i) ** 2
    den = Fraction(1)
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            den *= Fraction(i + j + 1)
    return num / den


def mono_to_axis_congruence(d: int, tol: float = 1e-8) -> np.ndarray:
    """Invertible float H with H * mono_matrix(d) * H^T = axis_matrix(d).

    Built inductively: each dimension step solves the border equations for
    the new row parametrically in the corner entry y, selects the real root
    of the single quadratic that makes the block identity hold, and keeps
    the candidate with the smaller residual.  Raises NumericalFailure when
    the final residual exceeds tol.
    """
    if d < 1:
        raise ValueError("need d >= 1")
    h = np.array([[1.0]])
    for size in range(1, d):
        m_small = np.array(mono_matrix(size), dtype=float)
        m_big = np.array(mono_matrix(size + 1), dtype=float)
        col = m_big[:size, size]
        row = m_big[size, :size]
        a_mat = m_small @ h.T
        ones = np.ones(size)
        x0 = np.linalg.solve(a_mat.T, ones)
        x1 = np.linalg.solve(a_mat.T, -(row @ h.T))
        # y * (row . x(y) + y/2) = 1/2 with x(y) = x0 + y*x1
        qa = float(row @ x1) + 0.5
        qb = float(row @ x0)
        roots = np.roots([qa, qb, -0.5]) if abs(qa) > 1e-14 else np.array([0.5 / qb])
        target = np.array(axis_matrix(size + 1), dtype=float)
        best = None
        for y in roots:
            if abs(y.imag) > 1e-9:
                continue
            y = float(y.real)
            x = x0 + y * x1
            cand = np.zeros((size + 1, size + 1))
            cand[0, :size] = x
            cand[0, size] = y
            cand[1:, :size] = h
            residual = np.max(np.abs(cand @ m_big @ cand.T - target))
            if best is None or residual < best[0]:
                best = (residual, cand)
        if best is None:
            raise NumericalFailure(f"no real root at dimension {size + 1}")
        h = best[1]
    final = np.max(
        np.abs(h @ np.array(mono_matrix(d), dtype=float) @ h.T - np.array(axis_matrix(d), dtype=float))
    )
    if final > tol:
        raise NumericalFailure(f"congruence residual {final:.3e} exceeds {tol:.1e}")
    return h
