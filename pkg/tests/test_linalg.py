import math
import random

import pytest

from hopfglue.linalg import (
    IntMatrix,
    NotPrimitiveError,
    NotUnimodularError,
    ShapeError,
    UnimodularMatrix,
    complete_primitive_to_sl3,
    determinant,
    extended_gcd,
    gcd_of_k_minors,
    inverse_unimodular,
    multiply,
    random_sl3,
    sl2_carry_to_e1,
    smith_normal_form,
)

from oracles import leibniz_det, matrix_from_index, minors_gcd, naive_product


# --- IntMatrix basics ---------------------------------------------------


def test_matrix_value_semantics():
    a = IntMatrix([[1, 2], [3, 4]])
    b = IntMatrix([[1, 2], [3, 4]])
    assert a == b
    assert hash(a) == hash(b)
    assert a != IntMatrix([[1, 2], [3, 5]])
    assert a.row(1) == (3, 4)
    assert a.col(0) == (1, 3)
    assert a[0, 1] == 2
    assert a.transpose() == IntMatrix([[1, 3], [2, 4]])


def test_matrix_rejects_bad_shapes():
    with pytest.raises(ShapeError):
        IntMatrix([])
    with pytest.raises(ShapeError):
        IntMatrix([[1, 2], [3]])
    with pytest.raises(TypeError):
        IntMatrix([[1.5]])


# --- multiply ------------------------------------------------------------


def test_multiply_identity():
    m = IntMatrix([[3, -1, 4], [1, 5, -9], [2, 6, 5]])
    assert multiply(IntMatrix.identity(3), m) == m
    assert multiply(m, IntMatrix.identity(3)) == m


def test_multiply_shears():
    a = IntMatrix([[1, 1], [0, 1]])
    b = IntMatrix([[1, 0], [1, 1]])
    assert multiply(a, b) == IntMatrix([[2, 1], [1, 1]])


def test_multiply_against_naive_oracle():
    rng = random.Random(7)
    for _ in range(200):
        a = [[rng.randint(-9, 9) for _ in range(3)] for _ in range(3)]
        b = [[rng.randint(-9, 9) for _ in range(3)] for _ in range(3)]
        assert multiply(IntMatrix(a), IntMatrix(b)) == IntMatrix(naive_product(a, b))


def test_multiply_shape_mismatch():
    with pytest.raises(ShapeError):
        multiply(IntMatrix([[1, 2]]), IntMatrix([[1, 2]]))


# --- determinant ---------------------------------------------------------


def test_determinant_pinned_values():
    assert determinant(IntMatrix.identity(3)) == 1
    assert determinant(IntMatrix([[1, 0, 0], [0, 1, 0], [0, 0, -1]])) == -1
    assert determinant(IntMatrix([[1, 0, 1], [0, 1, 0], [0, 0, -1]])) == -1


def test_determinant_against_leibniz_oracle():
    rng = random.Random(11)
    for n in (1, 2, 3, 4):
        for _ in range(150):
            rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            assert determinant(IntMatrix(rows)) == leibniz_det(rows)


def test_determinant_requires_square():
    with pytest.raises(ShapeError):
        determinant(IntMatrix([[1, 2, 3], [4, 5, 6]]))


# --- unimodular inverse ---------------------------------------------------


def test_inverse_identity_and_shear():
    i3 = UnimodularMatrix(IntMatrix.identity(3))
    assert inverse_unimodular(i3) == i3
    shear = UnimodularMatrix(IntMatrix([[1, 1], [0, 1]]))
    assert inverse_unimodular(shear).m == IntMatrix([[1, -1], [0, 1]])


def test_inverse_is_two_sided():
    for seed in range(60):
        u = random_sl3(seed, 14)
        inv = inverse_unimodular(u)
        assert u.m @ inv.m == IntMatrix.identity(3)
        assert inv.m @ u.m == IntMatrix.identity(3)


def test_unimodular_rejects_other_determinants():
    with pytest.raises(NotUnimodularError):
        UnimodularMatrix(IntMatrix([[2, 0], [0, 1]]))
    with pytest.raises(ShapeError):
        UnimodularMatrix(IntMatrix([[1, 0, 0], [0, 1, 0]]))


# --- extended gcd ----------------------------------------------------------


def test_extended_gcd_pinned_values():
    assert extended_gcd(2, 1) == (1, 0, 1)
    assert extended_gcd(0, 0) == (0, 0, 0)
    g, x, y = extended_gcd(6, 4)
    assert g == 2 and 6 * x + 4 * y == 2


def test_extended_gcd_bezout_identity():
    rng = random.Random(13)
    for _ in range(2000):
        a = rng.randint(-500, 500)
        b = rng.randint(-500, 500)
        g, x, y = extended_gcd(a, b)
        assert g == math.gcd(a, b)
        assert x * a + y * b == g


# --- Smith normal form ------------------------------------------------------


def check_snf(rows):
    a = IntMatrix(rows)
    res = smith_normal_form(a)
    assert (res.u.m @ a) @ res.v.m == res.d
    diag = res.diagonal()
    # zero off the diagonal
    for i in range(res.d.rows):
        for j in range(res.d.cols):
            if i != j:
                assert res.d[i, j] == 0
    # non-negative, divisibility chain, zeros trailing
    prod = 1
    for k, entry in enumerate(diag, start=1):
        assert entry >= 0
        if k > 1:
            prev = diag[k - 2]
            if prev == 0:
                assert entry == 0
            else:
                assert entry % prev == 0
        prod *= entry
        assert prod == minors_gcd(rows, k)
    return res


def test_snf_zero_matrix():
    res = smith_normal_form(IntMatrix.zeros(2, 3))
    assert res.d == IntMatrix.zeros(2, 3)
    assert res.u.m == IntMatrix.identity(2)
    assert res.v.m == IntMatrix.identity(3)


def test_snf_pinned_examples():
    res = check_snf([[2, 4], [6, 8]])
    assert res.diagonal() == (2, 4)
    res = check_snf([[1, 0, -1], [0, 0, 1]])
    assert res.d == IntMatrix([[1, 0, 0], [0, 1, 0]])


def test_snf_exhaustive_small_shapes():
    # every 1x1, 1x2, 2x1 and 2x2 matrix with entries in [-3, 3]
    for shape in ((1, 1), (1, 2), (2, 1), (2, 2)):
        m, n = shape
        for index in range(7 ** (m * n)):
            check_snf(matrix_from_index(index, shape, -3, 3))


def test_snf_sampled_larger_shapes():
    for shape, stride in (((2, 3), 331), ((3, 2), 331), ((3, 3), 31337)):
        m, n = shape
        total = 7 ** (m * n)
        for index in range(0, total, stride):
            check_snf(matrix_from_index(index, shape, -3, 3))


def test_snf_random_wide_entries():
    rng = random.Random(17)
    for _ in range(300):
        m = rng.randint(1, 3)
        n = rng.randint(1, 3)
        check_snf([[rng.randint(-50, 50) for _ in range(n)] for _ in range(m)])


def test_snf_thousand_random_larger_cases():
    rng = random.Random(19)
    for _ in range(1000):
        m = rng.randint(1, 5)
        n = rng.randint(1, 5)
        check_snf([[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)])


def test_snf_is_deterministic():
    rows = [[3, 1, -4], [1, 5, 9], [-2, 6, 5]]
    r1 = smith_normal_form(IntMatrix(rows))
    r2 = smith_normal_form(IntMatrix(rows))
    assert r1.u == r2.u and r1.d == r2.d and r1.v == r2.v


# --- gcd of k-minors --------------------------------------------------------


def test_minor_gcd_pinned_values():
    a = IntMatrix([[2, 4], [6, 8]])
    assert gcd_of_k_minors(a, 1) == 2
    assert gcd_of_k_minors(a, 2) == 8
    assert gcd_of_k_minors(IntMatrix([[1, 0, -1], [0, 0, 1]]), 2) == 1


def test_minor_gcd_all_zero_convention():
    assert gcd_of_k_minors(IntMatrix.zeros(2, 2), 1) == 0
    assert gcd_of_k_minors(IntMatrix.zeros(2, 2), 2) == 0


def test_minor_gcd_range_errors():
    a = IntMatrix([[1, 2], [3, 4]])
    with pytest.raises(ShapeError):
        gcd_of_k_minors(a, 0)
    with pytest.raises(ShapeError):
        gcd_of_k_minors(a, 3)


def test_minor_gcd_against_oracle():
    rng = random.Random(23)
    for _ in range(150):
        m = rng.randint(1, 3)
        n = rng.randint(1, 3)
        rows = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(m)]
        a = IntMatrix(rows)
        for k in range(1, min(m, n) + 1):
            assert gcd_of_k_minors(a, k) == minors_gcd(rows, k)


# --- primitive completion ----------------------------------------------------


def test_completion_pinned_cases():
    assert complete_primitive_to_sl3((0, 0, 1)).m == IntMatrix.identity(3)
    for v in ((1, 0, 0), (2, 3, 5), (0, 0, -1)):
        u = complete_primitive_to_sl3(v)
        assert u.det == 1
        assert determinant(u.m) == 1
        assert u.m.col(2) == v


def test_completion_random_primitive_triples():
    rng = random.Random(29)
    done = 0
    while done < 400:
        v = tuple(rng.randint(-20, 20) for _ in range(3))
        if math.gcd(math.gcd(v[0], v[1]), v[2]) != 1:
            continue
        done += 1
        u = complete_primitive_to_sl3(v)
        assert u.det == 1
        assert u.m.col(2) == v


def test_completion_rejects_non_primitive():
    for v in ((2, 0, 2), (0, 0, 0), (3, 6, 9), (0, 0, 2)):
        with pytest.raises(NotPrimitiveError):
            complete_primitive_to_sl3(v)


# --- 2x2 carry to e1 ----------------------------------------------------------


def test_sl2_carry_pinned_cases():
    assert sl2_carry_to_e1(1, 0).m == IntMatrix.identity(2)
    assert sl2_carry_to_e1(0, 1).m == IntMatrix([[0, 1], [-1, 0]])
    assert sl2_carry_to_e1(2, 1).m == IntMatrix([[0, 1], [-1, 2]])


def test_sl2_carry_postcondition():
    rng = random.Random(31)
    done = 0
    while done < 500:
        g = rng.randint(-40, 40)
        h = rng.randint(-40, 40)
        if math.gcd(g, h) != 1:
            continue
        done += 1
        u = sl2_carry_to_e1(g, h)
        assert u.det == 1
        assert u.m @ IntMatrix([[g], [h]]) == IntMatrix([[1], [0]])


def test_sl2_carry_rejects_non_coprime():
    with pytest.raises(NotPrimitiveError):
        sl2_carry_to_e1(2, 4)
    with pytest.raises(NotPrimitiveError):
        sl2_carry_to_e1(0, 0)


# --- random_sl3 ------------------------------------------------------------------


def test_random_sl3_empty_word():
    assert random_sl3(0, 0).m == IntMatrix.identity(3)


def test_random_sl3_always_det_one():
    for seed in range(1000):
        assert random_sl3(seed, 10).det == 1


def test_random_sl3_deterministic():
    for seed in (0, 1, 42):
        assert random_sl3(seed, 20) == random_sl3(seed, 20)
