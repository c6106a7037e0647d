import pytest

from grothkit.acceptance import display_1342
from grothkit.groth import (
    DOUBLE,
    EngineBoundExceeded,
    SINGLE,
    degree_d,
    g_hat,
    g_tilde,
    grothendieck_bpd,
    grothendieck_dd,
    s_tilde_double,
    schubert_bpd,
    schubert_dd,
)
from grothkit.perm import Permutation, enumerate_sn
from grothkit.poly import Polynomial, VarSpace, homogeneous_component

s3, s4 = VarSpace(3), VarSpace(4)


def test_dd_examples(P):
    assert grothendieck_dd(P("21")) == VarSpace(2).x(1)
    x = s3.x
    assert grothendieck_dd(P("132")) == x(1) + x(2) - x(1) * x(2)
    assert grothendieck_dd(P("1342"), DOUBLE) == display_1342()


def test_schubert_examples(P):
    assert schubert_dd(P("21")) == VarSpace(2).x(1)
    assert schubert_dd(P("132")) == s3.x(1) + s3.x(2)
    x = s4.x
    assert schubert_dd(P("1342")) == x(1) * x(2) + x(1) * x(3) + x(2) * x(3)


def test_bpd_engine_examples(P):
    x = s4.x
    assert grothendieck_bpd(P("1342"), DOUBLE) == display_1342()
    assert grothendieck_bpd(P("1234")) == Polynomial.constant(s4, 1)
    e2 = x(1) * x(2) + x(1) * x(3) + x(2) * x(3)
    assert grothendieck_bpd(P("1342")) == e2 - 2 * x(1) * x(2) * x(3)


def test_bpd_engine_bound():
    assert schubert_bpd(Permutation.identity(7)) == 1
    with pytest.raises(EngineBoundExceeded):
        grothendieck_bpd(Permutation.identity(7))


def test_k_theoretic_sign(P):
    # the first place where the K-droop sign is visible
    assert grothendieck_bpd(P("2143")) == s4.x(1) * grothendieck_dd(P("1243"))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("variant", [SINGLE, DOUBLE])
def test_engines_agree(n, variant):
    for w in enumerate_sn(n):
        assert grothendieck_bpd(w, variant) == grothendieck_dd(w, variant)
        assert schubert_bpd(w, variant) == schubert_dd(w, variant)


def test_strategies_agree():
    for w in enumerate_sn(5):
        for kind in (grothendieck_dd, schubert_dd):
            assert kind(w, SINGLE, "smallest") == kind(w, SINGLE, "largest")


@pytest.mark.parametrize("n", range(1, 7))
def test_lowest_component_is_schubert(n):
    for w in enumerate_sn(n):
        assert homogeneous_component(grothendieck_dd(w), w.length()) == schubert_dd(w)


def test_tilde_forms(P):
    x = s4.x
    e2 = x(1) * x(2) + x(1) * x(3) + x(2) * x(3)
    assert g_tilde(P("1342")) == e2 + 2 * x(1) * x(2) * x(3)
    assert g_tilde(P("21")) == VarSpace(2).x(1)
    d = VarSpace(2, 2)
    assert s_tilde_double(P("21")) == d.x(1) + d.y(1)


def test_g_hat(P):
    s = VarSpace(3, 0, True)
    z = Polynomial.variable(s, s.z_index())
    x = s.x
    assert g_hat(P("132")) == x(1) * z + x(2) * z + x(1) * x(2)


@pytest.mark.parametrize("w, d", [("1234", 0), ("1342", 3), ("21", 1)])
def test_degree_d(P, w, d):
    assert degree_d(P(w)) == d


def test_g_tilde_nonnegative():
    for n in range(1, 6):
        for w in enumerate_sn(n):
            assert all(c > 0 for c in g_tilde(w).coefficients())
            assert g_hat(w).is_homogeneous()
