from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from grothkit.analysis import (
    NotHomogeneous,
    charpoly,
    check_conjecture_1_1,
    check_conjecture_1_2,
    check_conjecture_1_6,
    check_lorentzian_theorem,
    closed_form_charpoly,
    closed_form_matrix,
    conjecture_checks,
    count_positive_eigenvalues,
    inertia,
    is_lorentzian,
    is_m_convex,
)
from grothkit.groth import grothendieck_dd, schubert_dd
from grothkit.perm import avoids_zero_one_patterns, enumerate_sn
from grothkit.poly import VarSpace, normalize

s2 = VarSpace(2)
x1, x2 = s2.x(1), s2.x(2)


def test_m_convex_examples(P):
    assert is_m_convex({(1, 0), (0, 1)})
    v = is_m_convex({(2, 0), (0, 2)})
    assert not v and v.to_json()["pass"] is False
    assert is_m_convex(schubert_dd(P("21543")).support())


@pytest.mark.parametrize("n", range(1, 7))
def test_schubert_supports_m_convex(n):
    for w in enumerate_sn(n):
        assert is_m_convex(schubert_dd(w).support())


def test_eigenvalue_examples():
    h = F(1, 2)
    assert count_positive_eigenvalues([[0, h], [h, 0]]) == 1
    assert charpoly([[0, h], [h, 0]]) == [1, 0, F(-1, 4)]
    assert count_positive_eigenvalues([[1, 0], [0, 1]]) == 2
    assert charpoly([[h, 1], [1, h]]) == [1, -1, F(-3, 4)]
    assert count_positive_eigenvalues([[h, 1], [1, h]]) == 1


small = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@st.composite
def symmetric(draw):
    m = draw(st.integers(1, 5))
    A = [[F(0)] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            A[i][j] = A[j][i] = draw(small)
    return A


@given(symmetric())
def test_inertia_adds_up(A):
    pos, neg, zero = inertia(A)
    assert pos + neg + zero == len(A)
    neg_A = [[-v for v in row] for row in A]
    assert inertia(neg_A) == (neg, pos, zero)


@given(st.lists(small, min_size=1, max_size=5))
def test_diagonal_inertia(d):
    A = [[d[i] if i == j else F(0) for j in range(len(d))] for i in range(len(d))]
    assert inertia(A) == (sum(v > 0 for v in d), sum(v < 0 for v in d), sum(v == 0 for v in d))


def test_lorentzian_examples():
    assert is_lorentzian(normalize(x1 * x2))
    assert is_lorentzian(x1**2 + x2**2).reason == "support is not M-convex"
    assert is_lorentzian(normalize(x1**2 + 2 * x1 * x2 + x2**2))
    # M-convex support, but Q = [[1, 1/4], [1/4, 1]] has two positive eigenvalues
    bad = is_lorentzian(x1**2 + F(1, 2) * x1 * x2 + x2**2)
    assert not bad and "eigenvalue" in bad.reason
    assert not is_lorentzian(x1 * x2 - x1**2)
    with pytest.raises(NotHomogeneous):
        is_lorentzian(x1 + x1 * x2)
    assert is_lorentzian(x1 + x2).reason == "degree < 2"


@pytest.mark.parametrize("w", ["21", "132", "321"])
def test_lorentzian_theorem_examples(P, w):
    assert check_lorentzian_theorem(P(w))


def test_lorentzian_theorem_refuses(P):
    with pytest.raises(ValueError):
        check_lorentzian_theorem(P("1342"))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_lorentzian_theorem_sweep(n):
    for w in enumerate_sn(n):
        if avoids_zero_one_patterns(w):
            assert check_lorentzian_theorem(w)


def test_conjecture_examples(P):
    g = grothendieck_dd(P("1342"))
    assert check_conjecture_1_1(g) and check_conjecture_1_2(g) and check_conjecture_1_6(g)
    assert all(conjecture_checks(P("21")))
    assert check_conjecture_1_6(grothendieck_dd(P("132")))
    v = check_conjecture_1_2(x1 + x2**2)
    assert not v and v.counterexample == {"alpha": [1, 0]}
    assert not check_conjecture_1_1(x1 + x2**2)
    assert not check_conjecture_1_6(2 * x1)


@pytest.mark.parametrize("n", range(1, 7))
def test_conjectures_on_zero_one(n):
    for w in enumerate_sn(n):
        if avoids_zero_one_patterns(w):
            assert all(conjecture_checks(w)), w


@pytest.mark.parametrize("m", range(3, 12))
def test_closed_form_charpoly(m):
    assert charpoly(closed_form_matrix(m)) == closed_form_charpoly(m)
    assert count_positive_eigenvalues(closed_form_matrix(m)) == 1
