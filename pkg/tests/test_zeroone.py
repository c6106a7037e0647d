import pytest
from hypothesis import given
from hypothesis import strategies as st

from grothkit.groth import g_tilde, grothendieck_dd, schubert_dd
from grothkit.perm import Permutation, avoids_zero_one_patterns, enumerate_sn
from grothkit.poly import Polynomial, VarSpace, evaluate_all_ones
from grothkit.zeroone import (
    NotZeroOne,
    classify_groth,
    classify_schubert,
    factor_F,
    factor_F_double,
    factor_G,
    factor_G_double,
    factorize,
    factorize_double_schubert,
    is_zero_one_by_coefficients,
    local_structures,
    signed_factorization,
)


def test_coefficient_verdict(P):
    v = is_zero_one_by_coefficients(grothendieck_dd(P("1342")))
    assert not v and v.witness == (1, 1, 1, 0) and v.coefficient == -2
    assert is_zero_one_by_coefficients(grothendieck_dd(P("21")))
    assert is_zero_one_by_coefficients(g_tilde(P("58326147")))


@pytest.mark.parametrize("w, verdict", [("1342", False), ("58326147", True), ("13254", False)])
def test_classify_groth(P, w, verdict):
    c = classify_groth(P(w))
    assert c.by_patterns is verdict and c.by_coefficients.zero_one is verdict


@pytest.mark.parametrize("w, verdict", [("13254", False), ("1234", True), ("1432", True)])
def test_classify_schubert(P, w, verdict):
    c = classify_schubert(P(w))
    assert c.by_patterns is verdict and c.by_coefficients.zero_one is verdict


def test_factor_examples():
    s = VarSpace(5)
    x = s.x
    assert factor_F(2, 1, space=s) == x(1) ** 2 + x(1) * x(2) + x(2) ** 2 + x(1) * x(2) ** 2 + x(1) ** 2 * x(2)
    assert factor_F(1, 1, space=s) == x(1) + x(2) + x(1) * x(2)
    assert factor_G(2, 3, space=s) == (
        x(3) + x(4) + x(5) + x(3) * x(4) + x(4) * x(5) + x(3) * x(5) + x(3) * x(4) * x(5)
    )
    t = VarSpace(3)
    assert factor_G(1, 1, signed=True, space=t) == grothendieck_dd(Permutation.parse("132"))


def test_double_factor_examples():
    s = VarSpace(3, 3)
    x, y = s.x, s.y
    assert factor_F_double(1, 1, 1, space=s) == x(1) + x(2) + y(1) + y(2)
    assert factor_G_double(1, 1, 2, space=s) == x(1) + x(2) + y(2) + y(3)
    with pytest.raises(ValueError):
        factor_F_double(0, 1, 1)
    with pytest.raises(ValueError):
        factor_F(0, 1)


@given(st.integers(1, 10))
def test_all_ones(k):
    assert evaluate_all_ones(factor_F(k, 1)) == 2 * k + 1
    assert evaluate_all_ones(factor_G(k, 1)) == 2 ** (k + 1) - 1
    assert factor_F(1, k) == factor_G(1, k, space=VarSpace(k + 1)) or k > 1
    assert is_zero_one_by_coefficients(factor_F(k, 1, signed=True))
    assert is_zero_one_by_coefficients(factor_G(k, 1, signed=True))


def test_local_structures(P):
    got = [str(s) for s in local_structures(P("58326147"))]
    assert got == ["A(k=2, p=1)", "B(l=2, r=3)"]
    (b,) = local_structures(P("132"))
    assert (b.kind, b.size, b.cells, b.row) == ("B", 1, ((2, 2),), 1)
    assert local_structures(P("321")) == []
    with pytest.raises(NotZeroOne):
        local_structures(P("1342"))


def test_factorize_examples(P):
    rep = factorize(P("58326147"))
    assert rep.lam == (4, 4, 2, 1, 1, 0, 0, 0) and rep.product_verified
    assert factorize(P("321")).lam == (2, 1, 0)
    rep = factorize(P("132"))
    assert rep.lam == (0, 0, 0)
    assert [f.poly for f in rep.factors] == [g_tilde(P("132"))]
    data = rep.to_json()
    assert data["factors"][0]["kind"] == "B" and data["verified"] is True


def test_factorize_double_examples(P):
    rep = factorize_double_schubert(P("21"))
    assert rep.lambda_cells == ((1, 1),) and rep.factors == ()
    rep = factorize_double_schubert(P("132"))
    s = VarSpace(3, 3)
    assert rep.lambda_cells == () and [f.poly for f in rep.factors] == [s.x(1) + s.x(2) + s.y(1) + s.y(2)]
    rep = factorize_double_schubert(P("58326147"))
    assert len(rep.lambda_cells) == 12 and len(rep.factors) == 2


@pytest.mark.parametrize("n", range(1, 7))
def test_factorization_sweep(n):
    for w in enumerate_sn(n):
        if not avoids_zero_one_patterns(w):
            continue
        rep = factorize(w)
        assert rep.product_verified
        windows = [set(f.structure.x_window) for f in rep.factors]
        for i, a in enumerate(windows):
            for b in windows[i + 1:]:
                assert a.isdisjoint(b)
        assert is_zero_one_by_coefficients(g_tilde(w))
        assert signed_factorization(w) == grothendieck_dd(w)
        if n <= 5:
            assert factorize_double_schubert(w).product_verified


@pytest.mark.parametrize("n", range(1, 7))
def test_theorems_agree(n):
    for w in enumerate_sn(n):
        assert classify_groth(w).agree
        assert classify_schubert(w).agree


def test_schubert_zero_one_by_factorization():
    # a zero-one Grothendieck polynomial has a zero-one Schubert part
    for w in enumerate_sn(5):
        if avoids_zero_one_patterns(w):
            assert is_zero_one_by_coefficients(schubert_dd(w), allowed=(0, 1))
