import random

import numpy as np
import pytest

from ckinv import intmat
from ckinv.groups import FgAbGroup, Z

from oracles import bareiss_det, cofactor_det, minor_gcd_diagonal

EX3_A = [[1, 1, 1], [1, 1, 1], [1, 0, 0]]


def i_minus(m):
    m = np.asarray(m)
    return np.eye(m.shape[0], dtype=np.int64) - m


def random_matrix(rng, max_dim=8, span=5):
    rows, cols = rng.randint(1, max_dim), rng.randint(1, max_dim)
    return np.array([[rng.randint(-span, span) for _ in range(cols)]
                     for _ in range(rows)])


# -- smith normal form ------------------------------------------------------

def test_smith_identity():
    dec = intmat.smith_normal_form(np.eye(3, dtype=np.int64))
    assert dec.diagonal == (1, 1, 1)
    assert abs(bareiss_det(dec.u.tolist())) == 1
    assert abs(bareiss_det(dec.v.tolist())) == 1


def test_smith_diag_2_3():
    # determinant-divisor oracle: d1 = gcd of entries = 1, d1*d2 = det = 6
    assert minor_gcd_diagonal([[2, 0], [0, 3]]) == [1, 6]
    assert intmat.smith_normal_form([[2, 0], [0, 3]]).diagonal == (1, 6)


def test_smith_example_matrix():
    ia = i_minus(EX3_A)
    # brute-force cofactor oracle: |det(I-A)| = 2 forces factors (1,1,2)
    assert abs(cofactor_det(ia.tolist())) == 2
    assert minor_gcd_diagonal(ia.tolist()) == [1, 1, 2]
    assert intmat.smith_normal_form(ia).diagonal == (1, 1, 2)


def test_smith_properties_random():
    rng = random.Random(1)
    for _ in range(300):
        m = random_matrix(rng)
        dec = intmat.smith_normal_form(m)
        mm = intmat.as_intmat(m)
        assert ((dec.u @ mm @ dec.v) == dec.s).all()
        assert abs(bareiss_det(dec.u.tolist())) == 1
        assert abs(bareiss_det(dec.v.tolist())) == 1
        diag = dec.diagonal
        assert all(d >= 0 for d in diag)
        for i in range(len(diag) - 1):
            if diag[i] == 0:
                assert diag[i + 1] == 0
            else:
                assert diag[i + 1] % diag[i] == 0
        # off-diagonal of s is zero
        s = dec.s.copy()
        for i in range(min(s.shape)):
            s[i, i] = 0
        assert not np.any(s)


def test_smith_deterministic():
    m = [[4, -2, 6], [2, 2, 2], [0, 8, -4]]
    a = intmat.smith_normal_form(m)
    b = intmat.smith_normal_form(m)
    assert (a.u == b.u).all() and (a.v == b.v).all() and (a.s == b.s).all()


def test_smith_empty_and_degenerate():
    for shape in ((0, 0), (0, 4), (4, 0), (1, 1)):
        m = np.zeros(shape, dtype=np.int64)
        dec = intmat.smith_normal_form(m)
        assert dec.s.shape == shape
        assert dec.rank == 0


def test_smith_big_entries_promote_exactly():
    big = [[10 ** 40, 1], [0, 10 ** 40]]
    dec = intmat.smith_normal_form(big)
    assert dec.diagonal == (1, 10 ** 80)
    assert ((dec.u @ intmat.as_intmat(big) @ dec.v) == dec.s).all()


def test_smith_growth_beyond_int64_is_exact():
    # entries start under the int64 guard but elimination grows past it,
    # forcing the mid-run promotion to Python ints
    rng = random.Random(4)
    m = np.array([[rng.randint(-9, 9) for _ in range(7)] for _ in range(7)])
    m = m * (2 ** 27)
    dec = intmat.smith_normal_form(m)
    assert ((dec.u @ intmat.as_intmat(m) @ dec.v) == dec.s).all()
    assert abs(bareiss_det(dec.u.tolist())) == 1
    assert abs(bareiss_det(dec.v.tolist())) == 1


# -- cokernel ---------------------------------------------------------------

def test_cokernel_examples():
    allones4 = np.ones((4, 4), dtype=np.int64)
    assert intmat.cokernel_invariants(i_minus(allones4)) == \
        FgAbGroup(0, (3,))
    assert intmat.cokernel_invariants([[0, 0], [0, 0]]) == FgAbGroup(2)
    # a matrix with no columns presents the free group on its rows
    assert intmat.cokernel_invariants(np.zeros((3, 0), dtype=int)) == \
        FgAbGroup(3)
    # I - hat of the transposed example matrix presents Z + Z/2
    ia_hat_b = [[0, -1, -1], [0, 1, 1], [0, 0, 2]]
    assert intmat.cokernel_invariants(ia_hat_b) == FgAbGroup(1, (2,))


def test_cokernel_transpose_invariance():
    # square case: full canonical equality (Smith diagonals coincide)
    rng = random.Random(2)
    for _ in range(150):
        n = rng.randint(1, 6)
        m = np.array([[rng.randint(-5, 5) for _ in range(n)]
                      for _ in range(n)])
        assert intmat.cokernel_invariants(m) == \
            intmat.cokernel_invariants(m.T)
    # rectangular case: the torsion still agrees, only the ambient rank moves
    for _ in range(100):
        m = random_matrix(rng, max_dim=6)
        assert intmat.cokernel_invariants(m).invariant_factors == \
            intmat.cokernel_invariants(m.T).invariant_factors


def test_rank_nullity_square():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(1, 7)
        m = np.array([[rng.randint(-3, 3) for _ in range(n)]
                      for _ in range(n)])
        free = intmat.cokernel_invariants(m).free_rank
        assert intmat.kernel_basis(m).shape[1] == free


# -- kernels ----------------------------------------------------------------

def test_kernel_examples():
    # det(I - A) = -1 for the all-ones 2x2, so the kernel is trivial
    assert cofactor_det(i_minus(np.ones((2, 2), dtype=int)).tolist()) == -1
    assert intmat.kernel_basis(i_minus(np.ones((2, 2), dtype=int))).shape \
        == (2, 0)
    kb = intmat.kernel_basis([[1, 1, 1]])
    assert kb.shape == (3, 2)
    for col in kb.T:
        assert sum(col) == 0
    # I - R_1 for n=3: rows force x2 = x3 = 0, x1 free
    ir1 = np.eye(3, dtype=np.int64)
    ir1[0, :] -= 1
    kb = intmat.kernel_basis(ir1)
    assert kb.shape == (3, 1)
    assert tuple(abs(x) for x in kb[:, 0]) == (1, 0, 0)


def test_kernel_completeness():
    # random kernel vectors are integer combinations of the basis
    rng = random.Random(5)
    checked = 0
    for _ in range(200):
        m = random_matrix(rng, max_dim=5, span=3)
        kb = intmat.kernel_basis(m)
        if kb.shape[1] == 0:
            continue
        coeffs = np.array([rng.randint(-6, 6) for _ in range(kb.shape[1])],
                          dtype=object)
        v = kb @ coeffs
        assert not np.any(intmat.as_intmat(m) @ v)
        assert intmat.lattice_contains(kb, v)
        checked += 1
    assert checked > 50


# -- hermite ----------------------------------------------------------------

def test_hermite_identity():
    dec = intmat.hermite_normal_form(np.eye(3, dtype=np.int64))
    assert (dec.h == np.eye(3, dtype=object)).all()
    assert dec.rank == 3


def test_hermite_single_pivot():
    dec = intmat.hermite_normal_form([[2, 4], [0, 0]])
    assert (dec.h == np.array([[2, 0], [0, 0]], dtype=object)).all()
    assert dec.pivots == ((0, 0),)


def test_hermite_rank_matches_smith():
    # columns of I - A^hat for the example matrix span a rank-2 lattice
    cols = np.array([[-1, -1], [1, 0], [1, 2]])
    assert intmat.hermite_normal_form(cols).rank == 2
    assert sum(1 for d in intmat.smith_diagonal(cols) if d) == 2


def test_hermite_properties_random():
    rng = random.Random(6)
    for _ in range(250):
        m = random_matrix(rng, max_dim=6)
        dec = intmat.hermite_normal_form(m)
        mm = intmat.as_intmat(m)
        assert (mm @ dec.u == dec.h).all()
        assert abs(bareiss_det(dec.u.tolist())) == 1
        rows = [r for r, _ in dec.pivots]
        assert rows == sorted(rows)
        for j, (r, c) in enumerate(dec.pivots):
            assert c == j
            p = dec.h[r, j]
            assert p > 0
            assert not any(dec.h[i, j] for i in range(r))
            for left in range(j):
                assert 0 <= dec.h[r, left] < p
        assert not np.any(dec.h[:, dec.rank:])


# -- lattice membership -----------------------------------------------------

def test_lattice_contains_examples():
    assert intmat.lattice_contains(np.eye(2, dtype=np.int64), [7, -3])
    assert not intmat.lattice_contains([[2], [0]], [1, 0])
    # (I-A) e_1 = (0,-1,-1) is not in the lattice of I - A^hat's columns
    ia_hat = [[0, -1, -1], [0, 1, 0], [0, 1, 2]]
    assert not intmat.lattice_contains(ia_hat, [0, -1, -1])


def test_lattice_contains_dimension_mismatch():
    with pytest.raises(ValueError):
        intmat.lattice_contains([[1, 0], [0, 1]], [1, 2, 3])


def test_lattice_contains_images():
    rng = random.Random(7)
    for _ in range(150):
        m = random_matrix(rng, max_dim=5)
        x = np.array([rng.randint(-5, 5) for _ in range(m.shape[1])],
                     dtype=object)
        v = intmat.as_intmat(m) @ x
        sol = intmat.lattice_solve(m, v)
        assert sol is not None
        assert ((intmat.as_intmat(m) @ sol) == v).all()


def test_lattice_solve_outside():
    assert intmat.lattice_solve([[2], [4]], [1, 2]) is None
    assert intmat.lattice_solve([[2], [4]], [3, 6]) is None
    sol = intmat.lattice_solve([[2], [4]], [-4, -8])
    assert sol is not None and sol[0] == -2


def test_matrix_algebra_via_numpy():
    a = intmat.as_intmat([[1, 2], [3, 4]])
    assert ((intmat.identity(2) @ a) == a).all()
    assert (a.T.T == a).all()
    with pytest.raises(ValueError):
        intmat.hstack(a, intmat.zeros(3, 1))


def test_as_intmat_rejects_non_integers():
    with pytest.raises(TypeError):
        intmat.as_intmat([[1.5, 2], [0, 1]])
    with pytest.raises(TypeError):
        intmat.as_intmat(np.array([["a", "b"]], dtype=object))
    with pytest.raises(ValueError):
        intmat.as_intmat([1, 2, 3])
