"""
M-convexity, exact Lorentzian checks, and the support/coefficient conjectures.

All linear algebra is over ``Fraction``: eigenvalue signs come from the
characteristic polynomial, which for a symmetric matrix is real-rooted, so
Descartes' rule of signs counts the positive roots exactly.

>>> from fractions import Fraction as F
>>> count_positive_eigenvalues([[0, F(1, 2)], [F(1, 2), 0]])
1
>>> is_m_convex({(2, 0), (0, 2)}).ok
False
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from .groth import grothendieck_dd, s_tilde_double
from .perm import Permutation, avoids_zero_one_patterns
from .poly import Polynomial, homogeneous_component, normalize

__all__ = [
    "Verdict",
    "NotHomogeneous",
    "is_m_convex",
    "charpoly",
    "inertia",
    "count_positive_eigenvalues",
    "quadratic_form",
    "is_lorentzian",
    "check_lorentzian_theorem",
    "check_conjecture_1_1",
    "check_conjecture_1_2",
    "check_conjecture_1_6",
    "conjecture_checks",
    "closed_form_matrix",
    "closed_form_charpoly",
]

Matrix = Sequence[Sequence[Fraction]]


class NotHomogeneous(ValueError):
    pass


@dataclass(frozen=True)
class Verdict:
    check: str
    ok: bool
    counterexample: Any = None
    reason: str = ""

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {"check": self.check, "pass": self.ok, "counterexample": self.counterexample}


# -- M-convexity -----------------------------------------------------------------


def is_m_convex(J) -> Verdict:
    """Exchange axiom: alpha_i > beta_i  =>  some j with alpha_j < beta_j and alpha - e_i + e_j in J.

    >>> is_m_convex({(1, 0), (0, 1)}).ok
    True
    """
    J = set(J)
    if len({len(a) for a in J}) > 1:
        raise ValueError("exponent vectors of different lengths")
    for alpha in sorted(J):
        for beta in sorted(J):
            for i, (ai, bi) in enumerate(zip(alpha, beta)):
                if ai <= bi:
                    continue
                found = False
                for j, (aj, bj) in enumerate(zip(alpha, beta)):
                    if aj < bj:
                        gamma = list(alpha)
                        gamma[i] -= 1
                        gamma[j] += 1
                        if tuple(gamma) in J:
                            found = True
                            break
                if not found:
                    cex = {"alpha": list(alpha), "beta": list(beta), "i": i}
                    return Verdict("m_convex", False, cex, "support is not M-convex")
    return Verdict("m_convex", True)


# -- exact eigenvalue signs --------------------------------------------------------


def charpoly(Q: Matrix) -> list[Fraction]:
    """Coefficients [1, c1, ..., cm] of det(t I - Q), by Faddeev-LeVerrier.

    >>> charpoly([[1, 0], [0, 1]])
    [Fraction(1, 1), Fraction(-2, 1), Fraction(1, 1)]
    """
    m = len(Q)
    A = [[Fraction(v) for v in row] for row in Q]
    coeffs = [Fraction(1)]
    M = [[Fraction(0)] * m for _ in range(m)]  # M_0 = 0
    c = Fraction(1)
    for k in range(1, m + 1):
        # M_k = A M_{k-1} + c_{k-1} I ;  c_k = -tr(A M_k) / k
        for i in range(m):
            M[i][i] += c
        AM = [[sum(A[i][t] * M[t][j] for t in range(m)) for j in range(m)] for i in range(m)]
        c = -sum(AM[i][i] for i in range(m)) / k
        coeffs.append(c)
        M = AM
    return coeffs


def _sign_changes(seq) -> int:
    signs = [1 if v > 0 else -1 for v in seq if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def inertia(Q: Matrix) -> tuple[int, int, int]:
    """(positive, negative, zero) eigenvalue counts of a symmetric rational matrix."""
    for i, row in enumerate(Q):
        for j, v in enumerate(row):
            if v != Q[j][i]:
                raise ValueError("matrix is not symmetric")
    coeffs = charpoly(Q)  # highest power first
    m = len(coeffs) - 1
    zero = 0
    while zero <= m and coeffs[m - zero] == 0:
        zero += 1
    pos = _sign_changes(coeffs)
    mirrored = [c * (-1) ** (m - k) for k, c in enumerate(coeffs)]
    neg = _sign_changes(mirrored)
    return pos, neg, zero


def count_positive_eigenvalues(Q: Matrix) -> int:
    return inertia(Q)[0]


# -- Lorentzian ------------------------------------------------------------------


def quadratic_form(q: Polynomial) -> list[list[Fraction]]:
    """Symmetric Q with q(x) = x^T Q x for a quadratic form q."""
    m = q.space.nvars
    Q = [[Fraction(0)] * m for _ in range(m)]
    for alpha, c in q.items():
        idx = [i for i, e in enumerate(alpha) for _ in range(e)]
        if len(idx) != 2:
            raise NotHomogeneous(f"term {alpha} is not quadratic")
        a, b = idx
        if a == b:
            Q[a][a] += c
        else:
            Q[a][b] += Fraction(c) / 2
            Q[b][a] += Fraction(c) / 2
    return Q


def _derivative_forms(f: Polynomial, depth: int, start: int = 0, prefix=()):
    """Yield (index multiset, derivative) over nondecreasing index tuples of the given size."""
    if depth == 0:
        yield prefix, f
        return
    for k in range(start, f.space.nvars):
        g = f.derivative(k)
        if g:
            yield from _derivative_forms(g, depth - 1, k, prefix + (k,))


def is_lorentzian(f: Polynomial) -> Verdict:
    """Ordered checks: homogeneity, nonnegativity, M-convex support, one positive eigenvalue.

    Degree 0 and 1 pass by convention; there is no quadratic form to test.

    >>> from grothkit.poly import VarSpace
    >>> s = VarSpace(2)
    >>> is_lorentzian(s.x(1) * s.x(2)).ok
    True
    >>> is_lorentzian(s.x(1) ** 2 + s.x(2) ** 2).reason
    'support is not M-convex'
    """
    if f.is_zero():
        raise ValueError("the zero polynomial is excluded")
    if not f.is_homogeneous():
        raise NotHomogeneous(f"degrees {f.min_degree()}..{f.degree()} are mixed")
    d = f.degree()
    if d < 2:
        return Verdict("lorentzian", True, reason="degree < 2")
    for alpha, c in f.terms():
        if c < 0:
            return Verdict("lorentzian", False, {"alpha": list(alpha), "coeff": str(c)}, "negative coefficient")
    support = is_m_convex(f.support())
    if not support:
        return Verdict("lorentzian", False, support.counterexample, support.reason)
    names = f.space.names()
    for idx, q in _derivative_forms(f, d - 2):
        pos = count_positive_eigenvalues(quadratic_form(q))
        if pos > 1:
            cex = {"derivative": [names[k] for k in idx], "positive_eigenvalues": pos}
            return Verdict("lorentzian", False, cex, "quadratic form has more than one positive eigenvalue")
    return Verdict("lorentzian", True)


def check_lorentzian_theorem(w: Permutation) -> Verdict:
    """N(S-tilde_w(x;y)) in the 2n-variable space is Lorentzian for zero-one w."""
    if not avoids_zero_one_patterns(w):
        raise ValueError(f"{w} is not zero-one")
    return is_lorentzian(normalize(s_tilde_double(w)))


# -- conjectures -------------------------------------------------------------------


def _leq(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _dominated(f: Polynomial, step_one: bool, name: str) -> Verdict:
    if f.is_zero():
        raise ValueError("the zero polynomial is excluded")
    d = f.degree()
    supp = sorted(f.support(), key=lambda a: (sum(a), a))
    for alpha in supp:
        size = sum(alpha)
        if size >= d:
            continue
        if not any(
            beta != alpha and _leq(alpha, beta) and (not step_one or sum(beta) == size + 1)
            for beta in supp
        ):
            return Verdict(name, False, {"alpha": list(alpha)})
    return Verdict(name, True)


def check_conjecture_1_1(f: Polynomial) -> Verdict:
    """Every alpha in supp(f) below the top degree lies strictly under some beta in supp(f)."""
    return _dominated(f, False, "conjecture_1_1")


def check_conjecture_1_2(f: Polynomial) -> Verdict:
    """As the previous check, with |beta| = |alpha| + 1.

    >>> from grothkit.poly import VarSpace
    >>> s = VarSpace(2)
    >>> check_conjecture_1_2(s.x(1) + s.x(2) ** 2).counterexample
    {'alpha': [1, 0]}
    """
    return _dominated(f, True, "conjecture_1_2")


def check_conjecture_1_6(f: Polynomial) -> Verdict:
    """For each top-degree beta, the coefficients of all alpha <= beta sum to 1."""
    if f.is_zero():
        raise ValueError("the zero polynomial is excluded")
    top = homogeneous_component(f, f.degree())
    items = f.terms()
    for beta, _ in top.terms():
        total = sum(c for alpha, c in items if _leq(alpha, beta))
        if total != 1:
            return Verdict("conjecture_1_6", False, {"beta": list(beta), "sum": str(total)})
    return Verdict("conjecture_1_6", True)


def conjecture_checks(w: Permutation) -> list[Verdict]:
    G = grothendieck_dd(w)
    return [check_conjecture_1_1(G), check_conjecture_1_2(G), check_conjecture_1_6(G)]


# -- closed-form cross-check ----------------------------------------------------------


def closed_form_matrix(m: int) -> list[list[Fraction]]:
    """The m x m quadratic form from a derivative of N(F-tilde_k(x;y)): all 1/2, zero diagonal after two."""
    half = Fraction(1, 2)
    return [[(0 if i == j and i >= 2 else half) for j in range(m)] for i in range(m)]


def closed_form_charpoly(m: int) -> list[Fraction]:
    """t (t + 1/2)^(m-3) (t^2 - (m-1)/2 t - 1/2), highest power first."""
    if m < 3:
        raise ValueError("the family starts at dimension 3")
    poly = [Fraction(1), Fraction(0)]  # t
    for _ in range(m - 3):
        poly = _polymul(poly, [Fraction(1), Fraction(1, 2)])
    return _polymul(poly, [Fraction(1), Fraction(-(m - 1), 2), Fraction(-1, 2)])


def _polymul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out
