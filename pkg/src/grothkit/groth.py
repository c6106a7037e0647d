"""
Schubert and Grothendieck polynomials, single and double, by two routes.

``dd``  -- divided differences from the longest element (the definition).
``bpd`` -- weighted sums over bumpless pipe dreams.

Single polynomials live in ``VarSpace(n)``; double ones in ``VarSpace(n, n)``
with the x-block before the y-block.

>>> from grothkit.perm import Permutation
>>> str(grothendieck_dd(Permutation.parse("132")))
'x1 + x2 - x1*x2'
>>> str(schubert_dd(Permutation.parse("1342")))
'x1*x2 + x1*x3 + x2*x3'
"""

from __future__ import annotations

from functools import lru_cache

from .bpd import BRUTEFORCE_MAX_N, enumerate_bpds, reduced_bpds, weight_double, weight_single
from .perm import Permutation
from .poly import (
    Polynomial,
    VarSpace,
    divided_difference,
    homogenize,
    isobaric_divided_difference,
    product,
    sign_flip_by_degree,
)

__all__ = [
    "SINGLE",
    "DOUBLE",
    "SignAlternationError",
    "EngineBoundExceeded",
    "space_for",
    "grothendieck_dd",
    "schubert_dd",
    "grothendieck_bpd",
    "schubert_bpd",
    "g_tilde",
    "g_hat",
    "s_tilde_double",
    "degree_d",
    "BPD_ENGINE_MAX_N",
]

SINGLE = "single"
DOUBLE = "double"

BPD_ENGINE_MAX_N = BRUTEFORCE_MAX_N


class SignAlternationError(AssertionError):
    pass


class EngineBoundExceeded(ValueError):
    pass


def space_for(n: int, variant: str = SINGLE) -> VarSpace:
    if variant == SINGLE:
        return VarSpace(n)
    if variant == DOUBLE:
        return VarSpace(n, n)
    raise ValueError(f"unknown variant {variant!r}")


def _top(n: int, variant: str, kind: str) -> Polynomial:
    space = space_for(n, variant)
    if variant == SINGLE:
        # both families reduce to x^delta at w0 once y = 0
        return Polynomial.monomial(space, [n - i for i in range(1, n + 1)])
    factors = []
    for i in range(1, n + 1):
        for j in range(1, n + 1 - i):
            x, y = space.x(i), space.y(j)
            factors.append(x - y if kind == "schubert" else x + y - x * y)
    return product(factors, space)


def _pick_smallest(w: Permutation) -> int:
    return w.ascents()[0]


def _pick_largest(w: Permutation) -> int:
    return w.ascents()[-1]


STRATEGIES = {"smallest": _pick_smallest, "largest": _pick_largest}


@lru_cache(maxsize=None)
def _dd(entries: tuple[int, ...], variant: str, kind: str, strategy: str) -> Polynomial:
    w = Permutation(entries)
    ascents = w.ascents()
    if not ascents:
        return _top(w.n, variant, kind)
    i = STRATEGIES[strategy](w)
    above = _dd(w.swap(i).entries, variant, kind, strategy)
    op = isobaric_divided_difference if kind == "groth" else divided_difference
    return op(above, i)


def grothendieck_dd(w: Permutation, variant: str = SINGLE, strategy: str = "smallest") -> Polynomial:
    """G_w(x) or G_w(x;y) by isobaric divided differences from w0."""
    space_for(w.n, variant)
    return _dd(w.entries, variant, "groth", strategy)


def schubert_dd(w: Permutation, variant: str = SINGLE, strategy: str = "smallest") -> Polynomial:
    """S_w(x) or S_w(x;y) by divided differences from w0."""
    space_for(w.n, variant)
    return _dd(w.entries, variant, "schubert", strategy)


def clear_cache():
    _dd.cache_clear()


def grothendieck_bpd(w: Permutation, variant: str = SINGLE, max_n: int = BPD_ENGINE_MAX_N) -> Polynomial:
    """Signed sum of pipe dream weights over the droop closure of the Rothe pipe dream.

    A pipe dream with more empty tiles than l(w) carries the sign
    (-1)^(|B(P)| - l(w)); these are exactly the ones reached through
    K-theoretic droops.  Without the sign G_2143 != x1 * G_1243.
    """
    if w.n > max_n:
        raise EngineBoundExceeded(f"BPD engine is bounded to n <= {max_n}, got n = {w.n}")
    space = space_for(w.n, variant)
    weight = weight_single if variant == SINGLE else weight_double
    total = Polynomial.zero(space)
    length = w.length()
    for P in sorted(enumerate_bpds(w)):
        term = weight(P, space)
        if (len(P.empty_cells()) - length) % 2:
            term = -term
        total = total + term
    return total


def schubert_bpd(w: Permutation, variant: str = SINGLE) -> Polynomial:
    """Sum over reduced pipe dreams of prod_{(i,j) in B(P)} (x_i - y_j).

    Only plain droops are needed here, so there is no size bound; the number of
    terms is the number of reduced pipe dreams, not the size of S_n.
    """
    space = space_for(w.n, variant)
    total = Polynomial.zero(space)
    for P in sorted(reduced_bpds(w)):
        cells = P.empty_cells()
        if variant == SINGLE:
            total = total + product((space.x(i) for i, _ in cells), space)
        else:
            total = total + product((space.x(i) - space.y(j) for i, j in cells), space)
    return total


def _check_alternation(G: Polynomial, base: int, w: Permutation):
    for a, c in G.items():
        expected = 1 if (sum(a) - base) % 2 == 0 else -1
        if c * expected <= 0:
            raise SignAlternationError(f"G_{w}: coefficient {c} at {a} breaks sign alternation")


def g_tilde(w: Permutation) -> Polynomial:
    """G_w(x) with the degree l(w)+k part multiplied by (-1)^k; all coefficients >= 0."""
    G = grothendieck_dd(w)
    base = w.length()
    _check_alternation(G, base, w)
    return sign_flip_by_degree(G, base)


def g_hat(w: Permutation) -> Polynomial:
    """Homogeneous Grothendieck polynomial in x1..xn, z (signs as in g_tilde)."""
    G = grothendieck_dd(w)
    base, top = w.length(), G.degree()
    G = G.embed(VarSpace(w.n, 0, True))
    return homogenize(sign_flip_by_degree(G, base), base, top)


def s_tilde_double(w: Permutation) -> Polynomial:
    """S_w(x;y) with every coefficient replaced by its absolute value.

    Built from reduced pipe dreams: divided differences from w0 would expand
    a product of n(n-1)/2 binomials in 2n variables first.
    """
    return schubert_bpd(w, DOUBLE).map_coefficients(abs)


def degree_d(w: Permutation) -> int:
    """Total degree of G_w(x)."""
    return grothendieck_dd(w).degree()
