import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from grothkit.perm import (
    GROTHENDIECK_ZERO_ONE_PATTERNS,
    PatternTooLong,
    Permutation,
    avoids_schubert_zero_one_patterns,
    avoids_zero_one_patterns,
    contains_pattern,
    enumerate_sn,
    rothe_diagram,
)

perms = st.integers(1, 7).flatmap(lambda n: st.permutations(range(1, n + 1))).map(Permutation)


@pytest.mark.parametrize("w, ell", [("1234", 0), ("4321", 6), ("1342", 2)])
def test_length(P, w, ell):
    assert P(w).length() == ell


def test_parse_forms(P):
    assert P("1,3,2") == P("132")
    big = Permutation(range(10, 0, -1))
    assert str(big) == "10,9,8,7,6,5,4,3,2,1"
    assert P(str(big)) == big
    for bad in ("", "122", "013", "1,x"):
        with pytest.raises(ValueError):
            P(bad)


@pytest.mark.parametrize(
    "w, sigma, expected",
    [("1432", "1432", True), ("1234", "21", False), ("58326147", "13254", False), ("1342", "132", True)],
)
def test_contains_pattern(P, w, sigma, expected):
    assert contains_pattern(P(w), P(sigma)) is expected


def test_pattern_too_long(P):
    with pytest.raises(PatternTooLong):
        contains_pattern(P("12"), P("123"))


@pytest.mark.parametrize("w, expected", [("1342", False), ("58326147", True), ("2143", True)])
def test_six_patterns(P, w, expected):
    assert avoids_zero_one_patterns(P(w)) is expected


@pytest.mark.parametrize("w, expected", [("13254", False), ("1432", True), ("12543", False)])
def test_twelve_patterns(P, w, expected):
    assert avoids_schubert_zero_one_patterns(P(w)) is expected


def test_every_pattern_contains_itself():
    for p in GROTHENDIECK_ZERO_ONE_PATTERNS:
        assert not avoids_zero_one_patterns(p)


@pytest.mark.parametrize(
    "w, cells",
    [("1234", set()), ("321", {(1, 1), (1, 2), (2, 1)}), ("1342", {(2, 2), (3, 2)})],
)
def test_rothe_diagram(P, w, cells):
    assert rothe_diagram(P(w)) == cells


def test_enumerate_sn():
    assert [str(w) for w in enumerate_sn(1)] == ["1"]
    assert [str(w) for w in enumerate_sn(2)] == ["12", "21"]
    s4 = list(enumerate_sn(4))
    assert len(s4) == 24 and str(s4[0]) == "1234" and str(s4[-1]) == "4321"
    assert s4 == sorted(s4)


@given(perms)
def test_diagram_size_is_length(w):
    assert len(rothe_diagram(w)) == w.length()


@given(perms)
def test_inverse_roundtrip(w):
    assert w.inverse.inverse == w
    assert all(w.inv(w(i)) == i for i in range(1, w.n + 1))


@given(perms)
def test_contains_pattern_matches_brute_force(w):
    for sigma in (Permutation.parse(s) for s in ("132", "2143", "1432")):
        if sigma.n > w.n:
            continue
        brute = any(
            Permutation.parse(",".join(str(sorted(sub).index(v) + 1) for v in sub)) == sigma
            for sub in itertools.combinations(w.entries, sigma.n)
        )
        assert contains_pattern(w, sigma) is brute


def test_pattern_counts_in_s4():
    assert sum(avoids_zero_one_patterns(w) for w in enumerate_sn(4)) == 22
    assert sum(1 for _ in enumerate_sn(5)) == math.factorial(5)
