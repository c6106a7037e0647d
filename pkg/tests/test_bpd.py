import random
from collections import deque

import pytest

from grothkit.bpd import (
    BumplessPipeDream,
    InvalidGrid,
    all_bpds,
    droops,
    enumerate_bpds,
    enumerate_bpds_bruteforce,
    k_droops,
    reduced_bpds,
    rothe_bpd,
    trace_permutation,
    weight_double,
    weight_single,
)
from grothkit.perm import Permutation, enumerate_sn
from grothkit.poly import VarSpace

ROTHE_1342 = ["r---", "|.r-", "|.|r", "|r++"]
MIDDLE_1342 = [".r--", "rjr-", "|.|r", "|r++"]
THIRD_1342 = [".r--", ".|r-", "rj|r", "|r++"]


def grid(rows):
    return BumplessPipeDream(rows)


def test_rothe(P):
    assert rothe_bpd(P("1234")).empty_cells() == []
    assert rothe_bpd(P("1342")) == grid(ROTHE_1342)
    assert set(rothe_bpd(P("1342")).empty_cells()) == {(2, 2), (3, 2)}
    assert set(rothe_bpd(P("321")).empty_cells()) == {(1, 1), (1, 2), (2, 1)}


def test_trace(P):
    assert trace_permutation(ROTHE_1342) == P("1342")
    assert trace_permutation(MIDDLE_1342) == P("1342")
    with pytest.raises(InvalidGrid):
        trace_permutation(["...", "...", "..."])


def test_invalid_edges():
    with pytest.raises(InvalidGrid):
        grid(["r-", "-+"])


def test_droops(P):
    assert sorted(droops(rothe_bpd(P("1342")))) == sorted([grid(MIDDLE_1342), grid(THIRD_1342)])
    assert droops(rothe_bpd(P("321"))) == []
    assert len(droops(rothe_bpd(P("132")))) == 1


def test_k_droops_never_apply_to_rothe():
    for n in range(1, 6):
        for w in enumerate_sn(n):
            assert k_droops(rothe_bpd(w)) == []


def _droop_closure(w):
    seen = {rothe_bpd(w)}
    queue = deque(seen)
    while queue:
        for Q in droops(queue.popleft()):
            if Q not in seen:
                seen.add(Q)
                queue.append(Q)
    return seen


def test_k_droops_matter(P):
    w = P("21534")
    assert _droop_closure(w) < set(enumerate_bpds(w))
    assert set(_droop_closure(P("1342"))) == set(enumerate_bpds(P("1342")))


@pytest.mark.parametrize("w, count", [("1234", 1), ("1342", 3), ("132", 2), ("321", 1)])
def test_enumerate_counts(P, w, count):
    assert len(enumerate_bpds(P(w))) == count


def test_bruteforce_examples(P):
    assert enumerate_bpds_bruteforce(P("1342")) == enumerate_bpds(P("1342"))
    assert len(enumerate_bpds_bruteforce(P("321"))) == 1
    groups = all_bpds(3)
    assert set(groups) == set(enumerate_sn(3))
    assert sum(len(g) for g in groups.values()) == 7  # alternating sign matrices of order 3


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_closure_equals_bruteforce_all(n):
    for w in enumerate_sn(n):
        assert enumerate_bpds(w) == enumerate_bpds_bruteforce(w)


def test_closure_equals_bruteforce_sampled_s5():
    for w in random.Random(5).sample(list(enumerate_sn(5)), 20):
        assert enumerate_bpds(w) == enumerate_bpds_bruteforce(w)


def test_weights():
    s = VarSpace(4)
    x = s.x
    assert weight_single(grid(ROTHE_1342)) == x(2) * x(3)
    assert weight_single(grid(MIDDLE_1342)) == x(1) * x(3) - x(1) * x(2) * x(3)
    assert weight_single(rothe_bpd(Permutation.parse("321"))) == VarSpace(3).x(1) ** 2 * VarSpace(3).x(2)
    d = VarSpace(4, 4)
    X, Y = d.x, d.y

    def b(i, j):
        return X(i) + Y(j) - X(i) * Y(j)

    assert weight_double(grid(ROTHE_1342)) == b(2, 2) * b(3, 2)
    assert weight_double(grid(THIRD_1342)) == b(1, 1) * b(2, 1) * (1 - X(3) - Y(2) + X(3) * Y(2))
    assert weight_double(rothe_bpd(Permutation.parse("1234"))) == 1


def test_render_and_json_roundtrip(P):
    for Q in enumerate_bpds(P("21534")):
        assert BumplessPipeDream.from_json(Q.to_json()) == Q
        assert Q.render().splitlines() == list(Q.rows)


def test_crossing_pipes(P):
    Q = rothe_bpd(P("1342"))
    vertical, horizontal, bump = Q.crossing_pipes(4, 3)
    assert {vertical, horizontal} <= {1, 2, 3, 4} and not bump


@pytest.mark.parametrize("n", range(1, 7))
def test_reduced_closure_is_length_slice(n):
    for w in enumerate_sn(n):
        full = enumerate_bpds_bruteforce(w)
        assert reduced_bpds(w) == {Q for Q in full if len(Q.empty_cells()) == w.length()}
