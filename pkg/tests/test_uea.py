import pytest

import display_data  # noqa: F401  (path sanity for the tests package)
import normal_form_checks as nfc  # shared helpers defined below in tests dir

from sp3gk import uea
from sp3gk.uea import (BAD_N, BASIS_MATRICES, GOOD_N, GaussianRational, I,
                       KAPPA_ORDER, N_LETTERS, ONE, E, H, X, bracket,
                       c_operator_dict, d_matrix, kappa, lie_to_matrix, m3,
                       mat_bracket, matrix_to_lie, minor, nn_span_check,
                       normalize, reduce_mod_nn, uea_add, uea_commutator,
                       uea_const, uea_mul, uea_scale, x_matrix)


def test_gaussian_rational():
    a = GaussianRational(1, 2)
    b = GaussianRational(0, -1)
    assert a * b == GaussianRational(2, -1)
    assert a / a == ONE
    assert I * I == GaussianRational(-1)
    assert bool(GaussianRational()) is False


def test_basis_expansion_roundtrip():
    for idx in range(N_LETTERS):
        assert matrix_to_lie(BASIS_MATRICES[idx]) == {idx: ONE}
    for sign in "+-":
        for i in range(1, 4):
            for j in range(i, 4):
                m = x_matrix(sign, i, j)
                assert lie_to_matrix(matrix_to_lie(m)) == m


def test_iwasawa_expansions_exact():
    for sign in "+-":
        for i in range(1, 4):
            for j in range(i, 4):
                assert (lie_to_matrix(uea.X_EXPANSION[(sign, i, j)])
                        == x_matrix(sign, i, j))


def test_bracket_examples():
    land = bracket({0: ONE}, {2: ONE})  # [E_{e1-e2}, E_{e2-e3}]
    assert land == {1: ONE}
    assert bracket({9: ONE}, {6: ONE}) == {6: GaussianRational(2)}
    # [E_alpha, E_{-alpha}] lands in the split part
    for alpha in range(9):
        neg = matrix_to_lie(
            uea._mat([[-BASIS_MATRICES[alpha][c][r] for c in range(6)]
                      for r in range(6)]))
        out = bracket({alpha: ONE}, neg)
        assert set(out) <= {9, 10, 11}, alpha


def test_jacobi_spot_checks():
    import itertools
    import random
    rng = random.Random(7)
    triples = [tuple(rng.randrange(N_LETTERS) for _ in range(3))
               for _ in range(60)]
    for a, b, c in triples:
        total = {}
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            inner = bracket({y: ONE}, {z: ONE})
            for idx, coeff in bracket({x: ONE}, inner).items():
                new = total.get(idx, GaussianRational()) + coeff
                if new:
                    total[idx] = new
                else:
                    total.pop(idx, None)
        assert not total


def test_nn_span():
    assert nn_span_check()
    assert set(GOOD_N) | set(BAD_N) == set(range(9))


def test_normalize_single_swap():
    # H3 E_{2e3} = E_{2e3} H3 + 2 E_{2e3}
    out = normalize({(11, 8): ONE})
    assert out == {(8, 11): ONE, (8,): GaussianRational(2)}
    # already sorted words pass through
    assert normalize({(0, 9, 12): ONE}) == {(0, 9, 12): ONE}


def test_normalize_idempotent_and_homomorphic():
    a = uea_mul(X("+", 1, 2), H(2))
    b = uea_mul(kappa(2, 1), X("-", 2, 3))
    ab = uea_mul(a, b)
    assert normalize(ab) == ab
    raw = {}
    for w1, c1 in a.items():
        for w2, c2 in b.items():
            uea._uea_add(raw, w1 + w2, c1 * c2)
    assert normalize(raw) == ab


def test_commuting_pair_reorders():
    out = uea_mul(H(1), E("e2-e3"))
    assert out == {(2, 9): ONE}  # E before H in the letter order


def test_reduce_mod_nn():
    t = uea_mul(E("e1-e3"), H(1))
    assert reduce_mod_nn(t) == {}
    t2 = uea_mul(E("e1-e2"), H(1))
    assert reduce_mod_nn(t2) == t2


def test_early_reduction_consistent():
    a = m3("+", reduced=True)
    assert a == reduce_mod_nn(m3("+"))
    c4r = c_operator_dict(2, reduced=True)
    assert c4r == reduce_mod_nn(c_operator_dict(2))


def test_chirality_matrix_entries():
    m = uea.m1("+")
    assert m[0][0] == X("+", 1, 1)
    assert m[1][2] == X("+", 2, 3) == m[2][1]


def test_minor_symmetry():
    # the chirality matrix is symmetric, so paired minors agree
    for sign in "+-":
        for (i, j) in [(1, 2), (1, 3), (2, 3)]:
            assert minor(sign, i, j) == minor(sign, j, i)
    # p-blocks are abelian: determinant order irrelevant
    a = uea_mul(X("+", 1, 2), X("+", 3, 3))
    b = uea_mul(X("+", 3, 3), X("+", 1, 2))
    assert a == b


def test_display_normal_forms():
    report = nfc.check_all_displays()
    assert report == []


def test_k_invariance_c2_c4():
    assert uea.k_invariance_violations(1) == []
    assert uea.k_invariance_violations(2) == []


def test_ad_letter_matches_commutator():
    c2 = c_operator_dict(1)
    for pq in ((1, 2), (3, 1)):
        idx = 12 + KAPPA_ORDER.index(pq)
        assert (uea.uea_ad_letter(idx, c2)
                == uea_commutator(kappa(*pq), c2))


def test_trace_formula_c2():
    # C2 as the explicit sum of weighted two-letter products
    want = {}
    for (i, j), w in [((1, 1), 1), ((2, 2), 1), ((3, 3), 1),
                      ((1, 2), 2), ((1, 3), 2), ((2, 3), 2)]:
        want = uea_add(want, uea_scale(uea_mul(X("+", i, j), X("-", i, j)), w))
    assert want == c_operator_dict(1)
