from fractions import Fraction

import numpy as np
import pytest

from sigtensor import (
    NumericalFailure,
    axis_matrix,
    circuit_matrix,
    exact_det,
    exact_rank,
    is_signature_matrix,
    matrix_to_tensor,
    mono_matrix,
    mono_matrix_det,
    mono_slice_det,
    mono_slice_matrix,
    mono_to_axis_congruence,
    pfaffian,
    pl_signature,
    poly_signature_integrate,
    project_level,
    signature_matrix_generators,
    signature_matrix_witness,
    split_pencil,
)

from conftest import rand_fraction, rand_skew, rand_vector


def test_split_pencil_axis_block():
    s = axis_matrix(3, 2)
    assert s == [
        [Fraction(1, 2), Fraction(1), Fraction(0)],
        [Fraction(0), Fraction(1, 2), Fraction(0)],
        [Fraction(0), Fraction(0), Fraction(0)],
    ]
    pencil = split_pencil(s)
    assert pencil.P[0][0] == Fraction(1, 2) and pencil.P[0][1] == Fraction(1, 2)
    assert pencil.P[1][1] == Fraction(1, 2)
    assert pencil.Q[0][1] == Fraction(1, 2) and pencil.Q[1][0] == -Fraction(1, 2)
    assert pencil.reconstruct() == s


def test_split_pencil_pure_cases(rng):
    sym = [[rand_fraction(rng) for _ in range(3)] for _ in range(3)]
    sym = [[sym[min(i, j)][max(i, j)] for j in range(3)] for i in range(3)]
    pencil = split_pencil(sym)
    assert all(v == 0 for row in pencil.Q for v in row)
    skew = rand_skew(rng, 3)
    pencil = split_pencil(skew)
    assert all(v == 0 for row in pencil.P for v in row)
    with pytest.raises(ValueError):
        split_pencil([[1, 2, 3], [4, 5, 6]])


def test_exact_rank_basics():
    assert exact_rank([[1, 1, 1]] * 3) == 1
    assert exact_rank(mono_matrix(3)) == 3
    assert exact_rank([[0, 0], [0, 0]]) == 0
    assert exact_rank(np.array([[1.0, 2.0], [2.0, 4.0]])) == 1
    assert exact_rank(np.array([[1.0, 0.0], [0.0, 1e-15]])) == 1


def test_determinant_closed_forms():
    assert mono_matrix_det(1) == Fraction(1, 2)
    assert mono_matrix_det(2) == Fraction(1, 36)
    assert mono_slice_det(1) == Fraction(1, 6)
    for d in range(1, 7):
        assert exact_det(mono_matrix(d)) == mono_matrix_det(d)
        assert exact_det(mono_slice_matrix(d)) == mono_slice_det(d)


def test_pfaffian_examples_and_squares(rng):
    assert pfaffian([[0, 5], [-5, 0]]) == 5
    with pytest.raises(ValueError):
        pfaffian([[Fraction(0)] * 3 for _ in range(3)])
    with pytest.raises(ValueError):
        pfaffian([[0, 1], [1, 0]])
    for d in (4, 6):
        q = rand_skew(rng, d)
        assert pfaffian(q) ** 2 == exact_det(q)


def test_circuit_matrix_golden_column(rng):
    q = rand_skew(rng, 3)
    cm = circuit_matrix(q, 2)
    assert [cm[0][0], cm[1][0], cm[2][0]] == [q[1][2], -q[0][2], q[0][1]]
    with pytest.raises(ValueError):
        circuit_matrix(q, 1)
    with pytest.raises(ValueError):
        circuit_matrix(q, 4)


def _random_skew_of_rank(rng, d, m):
    base = [[Fraction(0)] * d for _ in range(d)]
    for b in range(m // 2):
        base[2 * b][2 * b + 1] = Fraction(1)
        base[2 * b + 1][2 * b] = Fraction(-1)
    while True:
        a = [[Fraction(rng.randint(-3, 3)) for _ in range(d)] for _ in range(d)]
        q = [
            [
                sum(a[i][r] * base[r][c] * a[j][c] for r in range(d) for c in range(d))
                for j in range(d)
            ]
            for i in range(d)
        ]
        if exact_rank(q) == m:
            return q


def test_circuit_columns_span_kernel(rng):
    for d, m in [(3, 2), (4, 2), (5, 2), (6, 2), (5, 4), (6, 4)]:
        q = _random_skew_of_rank(rng, d, m)
        cm = circuit_matrix(q, m)
        cols = len(cm[0])
        for c in range(cols):
            for i in range(d):
                assert sum(q[i][r] * cm[r][c] for r in range(d)) == 0, (d, m, c, i)


def test_membership_accepts_paths_and_chain(rng):
    for d in (2, 3, 4, 5):
        for m in range(1, d + 1):
            steps = [rand_vector(rng, d) for _ in range(m)]
            s = project_level(pl_signature(steps, 2), 2)
            assert is_signature_matrix(s, m), (d, m)
            assert is_signature_matrix(s, m + 1), (d, m)
            coeffs = [tuple(rand_fraction(rng) for _ in range(m)) for _ in range(d)]
            sp = project_level(poly_signature_integrate(coeffs, 2), 2)
            assert is_signature_matrix(sp, m), (d, m, "poly")


def test_membership_rejections(rng):
    # generic two-step data has nonzero skew part, so m=1 fails
    steps = [rand_vector(rng, 3), rand_vector(rng, 3)]
    s = project_level(pl_signature(steps, 2), 2)
    ok, witness = signature_matrix_witness(s, 1)
    assert not ok and "rank([P Q])" in witness
    # a generic matrix has full-rank symmetric part
    generic = [[Fraction(i * 7 + j * 3 + 1, 1 + ((i * j) % 3)) for j in range(3)] for i in range(3)]
    generic[0][0] += Fraction(5)
    ok, witness = signature_matrix_witness(generic, 3)
    assert not ok and "rank(P)" in witness
    # perturbing one entry of a member breaks the rank-1 condition
    entries = list(s.entries)
    entries[0] += Fraction(1)
    perturbed = type(s)(s.d, s.k, entries)
    assert not is_signature_matrix(perturbed, 2)


def test_generators_d3_m2(rng):
    steps = [rand_vector(rng, 3), rand_vector(rng, 3)]
    s = project_level(pl_signature(steps, 2), 2)
    values = signature_matrix_generators(s, 2)
    assert len(values) == 9
    assert all(v == 0 for v in values)
    # rank-1 symmetric with zero skew satisfies the m=1 generators
    v = rand_vector(rng, 3, nonzero=True)
    rank1 = [[v[i] * v[j] for j in range(3)] for i in range(3)]
    values = signature_matrix_generators(rank1, 1)
    assert all(x == 0 for x in values)
    # a random matrix violates some generator
    generic = [[Fraction(1), Fraction(2), Fraction(3)],
               [Fraction(4), Fraction(6), Fraction(6)],
               [Fraction(7), Fraction(8), Fraction(10)]]
    assert any(x != 0 for x in signature_matrix_generators(generic, 2))


def test_matrix_tensor_round_trip():
    s = axis_matrix(3, 2)
    t = matrix_to_tensor(s)
    assert t.d == 3 and t.k == 2
    assert split_pencil(t).reconstruct() == s


def test_congruence_construction_residuals():
    assert mono_to_axis_congruence(1).tolist() == [[1.0]]
    for d in range(2, 7):
        h = mono_to_axis_congruence(d)
        m = np.array([[float(v) for v in row] for row in mono_matrix(d)])
        a = np.array([[float(v) for v in row] for row in axis_matrix(d)])
        residual = np.max(np.abs(h @ m @ h.T - a))
        assert residual < (1e-9 if d == 2 else 1e-8), (d, residual)
        assert abs(np.linalg.det(h)) > 1e-12
    with pytest.raises(NumericalFailure):
        mono_to_axis_congruence(6, tol=1e-300)
