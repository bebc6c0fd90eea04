import random
from fractions import Fraction

import numpy as np
import pytest

from msing.algebra import Poly, PolyMatrix, pfaffian
from msing.skew import (ComplexSkewMatrix, MatrixFormatError, format_matrix,
                        is_quaternionic, parse_matrix_file, pfaffian_numeric,
                        random_quaternionic, random_skew, skew_eigenvalues,
                        sktr, standard_symplectic, verify_reality)


def _sorted(vals):
    return sorted(vals, key=lambda z: (round(z.real, 8), round(z.imag, 8)))


# ---------------------------------------------------------------------------
# construction


def test_matrix_is_symmetrized_and_readonly():
    m = ComplexSkewMatrix([[0, 1], [-1, 5e-13]])
    assert m.array[0, 0] == 0
    assert m.k == 1
    with pytest.raises(ValueError):
        m.array[0, 1] = 3


def test_matrix_rejects_bad_shapes():
    with pytest.raises(ValueError):
        ComplexSkewMatrix([[0, 1, 0], [-1, 0, 0], [0, 0, 0]])  # odd size
    with pytest.raises(ValueError):
        ComplexSkewMatrix([[0, 1]])
    with pytest.raises(ValueError):
        ComplexSkewMatrix([[0, 1], [1, 0]])  # not skew


# ---------------------------------------------------------------------------
# skew trace


def test_sktr_examples():
    assert sktr(standard_symplectic(2)) == 2
    assert sktr(np.zeros((4, 4))) == 0
    lam = 1.5 - 2j
    assert abs(sktr(lam * standard_symplectic(3).array) - 3 * lam) < 1e-14


# ---------------------------------------------------------------------------
# Pfaffian


def test_pfaffian_normalization():
    for k in (1, 2, 3, 4):
        assert abs(pfaffian_numeric(standard_symplectic(k)) - 1) < 1e-12


def test_pfaffian_block_diagonal():
    a = np.zeros((4, 4), complex)
    a[0, 1], a[1, 0] = 2, -2
    a[2, 3], a[3, 2] = 3, -3
    assert abs(pfaffian_numeric(a) - 6) < 1e-12


def test_pfaffian_cross_pairing_sign():
    a = np.zeros((4, 4), complex)
    a[0, 2], a[2, 0] = 1, -1
    a[1, 3], a[3, 1] = 1, -1
    # Pf = a01 a23 - a02 a13 + a03 a12 = -1
    assert abs(pfaffian_numeric(a) + 1) < 1e-12


def test_pfaffian_matches_symbolic_oracle():
    rng = random.Random(7)
    n = 6
    entries = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = Fraction(rng.randrange(-20, 21), rng.randrange(1, 9))
            entries[i][j], entries[j][i] = v, -v
    exact = pfaffian(PolyMatrix(
        "sk", [[Poly.const(c) for c in row] for row in entries]))
    want = complex(exact.constant_term)
    got = pfaffian_numeric(np.array([[float(c) for c in row]
                                     for row in entries]))
    assert abs(got - want) <= 1e-9 * max(1.0, abs(want))


def test_pfaffian_of_singular_matrix_is_zero():
    a = np.zeros((4, 4), complex)
    a[0, 1], a[1, 0] = 1, -1  # rows 2,3 vanish
    assert pfaffian_numeric(a) == 0


# ---------------------------------------------------------------------------
# skew eigenvalues


def test_eigenvalues_of_scaled_symplectic():
    lam = -0.75
    vals = skew_eigenvalues(lam * standard_symplectic(2).array)
    assert len(vals) == 2
    # double root: the cluster is tight but not exact
    assert all(abs(z - lam) < 1e-6 for z in vals)


def test_eigenvalues_block_diagonal():
    a = np.zeros((4, 4), complex)
    a[0, 1], a[1, 0] = -2, 2
    a[2, 3], a[3, 2] = 5, -5
    vals = _sorted(skew_eigenvalues(a))
    assert abs(vals[0] + 2) < 1e-9
    assert abs(vals[1] - 5) < 1e-9


def test_eigenvalue_product_is_pfaffian():
    m = random_skew(8, random.Random(3))
    prod = 1
    for z in skew_eigenvalues(m):
        prod *= z
    pf = pfaffian_numeric(m)
    assert abs(prod - pf) < 1e-8 * max(1.0, abs(pf))


def test_eigenvalue_sum_is_sktr():
    for seed in (1, 2, 3):
        m = random_skew(6, random.Random(seed))
        assert abs(sum(skew_eigenvalues(m)) - sktr(m)) < 1e-8


def test_eigenvalues_invariant_under_pair_swap():
    m = random_skew(6, random.Random(5))
    a = np.array(m.array)
    perm = [4, 5, 2, 3, 0, 1]  # swap first and last symplectic pairs
    b = a[np.ix_(perm, perm)]
    e1 = _sorted(skew_eigenvalues(a))
    e2 = _sorted(skew_eigenvalues(b))
    assert all(abs(x - y) < 1e-8 for x, y in zip(e1, e2))


def test_interpolation_matches_fresh_node():
    # rebuild the characteristic polynomial from its roots and compare a
    # direct Pfaffian evaluation at a node never used for interpolation
    m = random_skew(6, random.Random(9))
    vals = skew_eigenvalues(m)
    t = 0.731
    lead = (-1) ** 3
    from_roots = lead
    for z in vals:
        from_roots *= (t - z)
    direct = pfaffian_numeric(m.array - t * standard_symplectic(3).array)
    assert abs(from_roots - direct) < 1e-8 * max(1.0, abs(direct))


# ---------------------------------------------------------------------------
# quaternionic structure


def test_is_quaternionic_examples():
    assert is_quaternionic(standard_symplectic(2))
    gen = random_skew(4, random.Random(0))
    assert not is_quaternionic(gen)
    q = random_quaternionic(3, random.Random(11))
    assert is_quaternionic(q)


def test_quaternionic_needs_real_diagonal_blocks():
    a = np.zeros((4, 4), complex)
    a[0, 1], a[1, 0] = 1j, -1j
    a[2, 3], a[3, 2] = 1, -1
    assert not is_quaternionic(a)


def test_reality_of_quaternionic_eigenvalues():
    worst = verify_reality(2, 60, seed=1)
    assert worst <= 1e-8
    worst = verify_reality(3, 40, seed=2)
    assert worst <= 1e-8


def test_reality_check_is_deterministic():
    a = verify_reality(2, 25, seed=9)
    b = verify_reality(2, 25, seed=9)
    assert a == b


def test_reality_control_run_is_complex():
    rng = random.Random(100)
    top = 0.0
    for _ in range(60):
        m = random_skew(4, random.Random(rng.randrange(2 ** 63)))
        top = max(top, max(abs(z.imag) for z in skew_eigenvalues(m)))
    assert top > 1e-3


def test_reality_input_validation():
    with pytest.raises(ValueError):
        verify_reality(7, 10, seed=0)
    with pytest.raises(ValueError):
        verify_reality(2, 0, seed=0)


# ---------------------------------------------------------------------------
# file format


def test_matrix_file_roundtrip():
    q = random_quaternionic(2, random.Random(4))
    again = parse_matrix_file(format_matrix(q))
    assert np.max(np.abs(again.array - q.array)) < 1e-15


def test_matrix_file_accepts_i_and_j():
    m = parse_matrix_file("size 2\n0 1+0.5i\n-1-0.5j 0\n")
    assert m.array[0, 1] == 1 + 0.5j


def test_matrix_file_errors():
    with pytest.raises(MatrixFormatError):
        parse_matrix_file("rows 2\n0 1\n-1 0\n")
    with pytest.raises(MatrixFormatError, match="line 2"):
        parse_matrix_file("size 2\n0 spam\n-1 0\n")
    with pytest.raises(MatrixFormatError):
        parse_matrix_file("size 2\n0 1\n")
    with pytest.raises(MatrixFormatError):
        parse_matrix_file("size 2\n0 1 0\n-1 0 0\n")
    with pytest.raises(MatrixFormatError):
        parse_matrix_file("size 2\n0 1\n1 0\n")  # not skew
