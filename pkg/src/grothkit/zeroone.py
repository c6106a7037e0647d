"""
Zero-one classification and the explicit factorization of G-tilde.

For a permutation avoiding 1432, 1342, 13254, 31524, 12534 and 21534 the
droopable cells of the Rothe diagram come in two shapes:

* **A** -- k >= 2 consecutive cells in row p+1, columns c+1..c+k, right under
  the dot (p, c).  They contribute ``factor_F(k, p)``.
* **B** -- a single cell (p, q) with l pipes to its north-west forming a
  staircase.  It contributes ``factor_G(l, p - l)``.

Everything else in the diagram is frozen and contributes the monomial x^lambda.

>>> from grothkit.perm import Permutation
>>> rep = factorize(Permutation.parse("58326147"))
>>> rep.lam
(4, 4, 2, 1, 1, 0, 0, 0)
>>> [str(f) for f in rep.factors]
['A(k=2, p=1)', 'B(l=2, r=3)']
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .groth import DOUBLE, g_tilde, grothendieck_dd, s_tilde_double, schubert_dd
from .perm import (
    Permutation,
    avoids_schubert_zero_one_patterns,
    avoids_zero_one_patterns,
    rothe_diagram,
)
from .poly import (
    NotDivisible,
    Polynomial,
    VarSpace,
    complete_homogeneous,
    elementary_symmetric,
    exact_divide,
    product,
    to_json,
)

__all__ = [
    "NotZeroOne",
    "TheoremViolation",
    "FactorizationMismatch",
    "CoefficientVerdict",
    "Classification",
    "LocalStructure",
    "Factor",
    "FactorizationReport",
    "is_zero_one_by_coefficients",
    "classify_groth",
    "classify_schubert",
    "factor_F",
    "factor_G",
    "factor_F_double",
    "factor_G_double",
    "local_structures",
    "factorize",
    "factorize_double_schubert",
]


class NotZeroOne(ValueError):
    pass


class TheoremViolation(AssertionError):
    pass


class FactorizationMismatch(AssertionError):
    pass


@dataclass(frozen=True)
class CoefficientVerdict:
    zero_one: bool
    witness: tuple[int, ...] | None = None
    coefficient: int | None = None

    def __bool__(self):
        return self.zero_one


def is_zero_one_by_coefficients(f: Polynomial, allowed=(-1, 0, 1)) -> CoefficientVerdict:
    """Zero-one test; on failure the witness is the first bad term in canonical order."""
    for alpha, c in f.terms():
        if c not in allowed:
            return CoefficientVerdict(False, alpha, c)
    return CoefficientVerdict(True)


@dataclass(frozen=True)
class Classification:
    perm: Permutation
    by_patterns: bool
    by_coefficients: CoefficientVerdict

    @property
    def agree(self) -> bool:
        return self.by_patterns == self.by_coefficients.zero_one


def classify_groth(w: Permutation, strict: bool = True) -> Classification:
    """Six-pattern verdict against the {-1, 0, 1} test on G_w(x)."""
    verdict = Classification(
        w, avoids_zero_one_patterns(w), is_zero_one_by_coefficients(grothendieck_dd(w))
    )
    if strict and not verdict.agree:
        raise TheoremViolation(f"G_{w}: patterns say {verdict.by_patterns}, coefficients disagree")
    return verdict


def classify_schubert(w: Permutation, strict: bool = True) -> Classification:
    """Twelve-pattern verdict against the {0, 1} test on S_w(x)."""
    verdict = Classification(
        w,
        avoids_schubert_zero_one_patterns(w),
        is_zero_one_by_coefficients(schubert_dd(w), allowed=(0, 1)),
    )
    if strict and not verdict.agree:
        raise TheoremViolation(f"S_{w}: patterns say {verdict.by_patterns}, coefficients disagree")
    return verdict


# -- factors ------------------------------------------------------------------


def _positive(name, value):
    if value < 1:
        raise ValueError(f"{name} must be >= 1, got {value}")


def factor_F(k: int, p: int, signed: bool = False, space: VarSpace | None = None) -> Polynomial:
    """sum_{t=0}^k x_p^t x_{p+1}^{k-t}  +/-  sum_{s=1}^k x_p^s x_{p+1}^{k+1-s}."""
    _positive("k", k)
    space = space or VarSpace(p + 1)
    a, b = space.x_index(p), space.x_index(p + 1)
    terms = {}

    def mono(e1, e2):
        alpha = [0] * space.nvars
        alpha[a], alpha[b] = e1, e2
        return tuple(alpha)

    for t in range(k + 1):
        terms[mono(t, k - t)] = 1
    for s in range(1, k + 1):
        terms[mono(s, k + 1 - s)] = -1 if signed else 1
    return Polynomial(space, terms)


def factor_G(l: int, r: int, signed: bool = False, space: VarSpace | None = None) -> Polynomial:
    """sum_{s=1}^{l+1} (+/-1)^(s-1) e_s(x_r, ..., x_{r+l})."""
    _positive("l", l)
    space = space or VarSpace(r + l)
    idx = [space.x_index(i) for i in range(r, r + l + 1)]
    total = Polynomial.zero(space)
    for s in range(1, l + 2):
        e = elementary_symmetric(space, idx, s)
        total = total + (-e if signed and s % 2 == 0 else e)
    return total


def factor_F_double(k: int, p: int, i: int, space: VarSpace | None = None) -> Polynomial:
    """sum_{t=0}^k h_{k-t}(x_p, x_{p+1}) e_t(y_i, ..., y_{i+k})."""
    _positive("k", k)
    space = space or VarSpace(p + 1, i + k)
    xs = [space.x_index(p), space.x_index(p + 1)]
    ys = [space.y_index(j) for j in range(i, i + k + 1)]
    total = Polynomial.zero(space)
    for t in range(k + 1):
        total = total + complete_homogeneous(space, xs, k - t) * elementary_symmetric(space, ys, t)
    return total


def factor_G_double(l: int, r: int, j: int, space: VarSpace | None = None) -> Polynomial:
    """x_r + ... + x_{r+l} + y_j + ... + y_{j+l}."""
    _positive("l", l)
    space = space or VarSpace(r + l, j + l)
    total = Polynomial.zero(space)
    for t in range(l + 1):
        total = total + space.x(r + t) + space.y(j + t)
    return total


# -- local structures ----------------------------------------------------------


@dataclass(frozen=True)
class LocalStructure:
    """A droopable region of the Rothe diagram.

    For kind "A": ``size`` is k, ``row`` is p (the dot's row), ``column`` is the
    dot's column, ``cells`` the k boxes in row p+1.  For kind "B": ``size`` is
    l, ``cells`` the single box (p, q), ``row`` is r = p - l, ``column`` is
    j = q - l (first pipe of the staircase).
    """

    kind: str
    size: int
    row: int
    column: int
    cells: tuple[tuple[int, int], ...]

    @property
    def x_window(self) -> range:
        if self.kind == "A":
            return range(self.row, self.row + 2)
        return range(self.row, self.row + self.size + 1)

    @property
    def y_window(self) -> range:
        return range(self.column, self.column + self.size + 1)

    def polynomial(self, space: VarSpace, signed: bool = False) -> Polynomial:
        if self.kind == "A":
            return factor_F(self.size, self.row, signed, space)
        return factor_G(self.size, self.row, signed, space)

    def double_polynomial(self, space: VarSpace) -> Polynomial:
        if self.kind == "A":
            return factor_F_double(self.size, self.row, self.column, space)
        return factor_G_double(self.size, self.row, self.column, space)

    def to_json(self) -> dict:
        if self.kind == "A":
            return {"kind": "A", "k": self.size, "p": self.row}
        return {"kind": "B", "l": self.size, "r": self.row}

    def __str__(self):
        if self.kind == "A":
            return f"A(k={self.size}, p={self.row})"
        return f"B(l={self.size}, r={self.row})"


def _admits_droop(w: Permutation, cell) -> bool:
    p, q = cell
    for i in range(1, q):
        top = w.inv(i)
        if top >= p:
            continue
        # no other dot (= SE elbow of the Rothe pipe dream) in [top, p] x [i, q]
        if not any(i <= w(r) <= q and w(r) != i for r in range(top, p + 1)):
            return True
    return False


def local_structures(w: Permutation) -> list[LocalStructure]:
    if not avoids_zero_one_patterns(w):
        raise NotZeroOne(f"{w} contains one of the six patterns")
    D = rothe_diagram(w)
    n = w.n
    structures = []
    used = set()
    for p in range(1, n):
        c = w(p)
        run = []
        q = c + 1
        while (p + 1, q) in D:
            run.append((p + 1, q))
            q += 1
        if len(run) >= 2:
            structures.append(LocalStructure("A", len(run), p, c, tuple(run)))
            used.update(run)
    for cell in sorted(D - used):
        if not _admits_droop(w, cell):
            continue
        p, q = cell
        l = 0
        for i in range(1, q):
            top = w.inv(i)
            if top >= p:
                continue
            inside = [
                (r, s) for (r, s) in D if top < r <= p and i < s <= q and (r, s) != cell
            ]
            if not inside:
                l += 1
        structures.append(LocalStructure("B", l, p - l, q - l, (cell,)))
        used.add(cell)
    structures.sort(key=lambda s: (s.row, s.kind))
    return structures


# -- factorization ---------------------------------------------------------------


@dataclass(frozen=True)
class Factor:
    structure: LocalStructure
    poly: Polynomial

    def __str__(self):
        return str(self.structure)

    def to_json(self) -> dict:
        return {**self.structure.to_json(), "poly": to_json(self.poly)}


@dataclass(frozen=True)
class FactorizationReport:
    perm: Permutation
    lam: tuple[int, ...]
    factors: tuple[Factor, ...]
    product_verified: bool
    lambda_cells: tuple[tuple[int, int], ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "perm": str(self.perm),
            "lambda": list(self.lam),
            "factors": [f.to_json() for f in self.factors],
            "verified": self.product_verified,
        }


def _frozen_cells(w: Permutation, structures) -> tuple[tuple[int, int], ...]:
    used = {cell for s in structures for cell in s.cells}
    return tuple(sorted(rothe_diagram(w) - used))


def _check_disjoint(w, structures):
    seen: set[int] = set()
    for s in structures:
        window = set(s.x_window)
        if window & seen:
            raise FactorizationMismatch(f"{w}: factor windows overlap at {sorted(window & seen)}")
        seen |= window


def factorize(w: Permutation) -> FactorizationReport:
    """G-tilde_w = x^lambda * prod(F-tilde) * prod(G-tilde), verified by exact division."""
    structures = local_structures(w)
    _check_disjoint(w, structures)
    space = VarSpace(w.n)
    factors = tuple(Factor(s, s.polynomial(space)) for s in structures)
    target = g_tilde(w)
    try:
        quotient = exact_divide(target, product((f.poly for f in factors), space))
    except NotDivisible as exc:
        raise FactorizationMismatch(f"{w}: factors do not divide G-tilde ({exc})") from None
    if len(quotient) != 1:
        raise FactorizationMismatch(f"{w}: quotient {quotient} is not a monomial")
    ((lam, coeff),) = quotient.items()
    if coeff != 1:
        raise FactorizationMismatch(f"{w}: quotient coefficient {coeff} != 1")
    frozen = _frozen_cells(w, structures)
    geometric = [0] * w.n
    for r, _ in frozen:
        geometric[r - 1] += 1
    if tuple(geometric) != lam:
        raise FactorizationMismatch(f"{w}: division gives lambda {lam}, diagram gives {geometric}")
    return FactorizationReport(w, lam, factors, True, frozen)


def factorize_double_schubert(w: Permutation) -> FactorizationReport:
    """S-tilde_w(x;y) = prod_{(i,j) in lambda}(x_i + y_j) * prod F-tilde(x;y) * prod G-tilde(x;y)."""
    structures = local_structures(w)
    _check_disjoint(w, structures)
    space = VarSpace(w.n, w.n)
    factors = tuple(Factor(s, s.double_polynomial(space)) for s in structures)
    frozen = _frozen_cells(w, structures)
    binomials = product((space.x(i) + space.y(j) for i, j in frozen), space)
    target = s_tilde_double(w)
    try:
        quotient = exact_divide(target, product((f.poly for f in factors), space) * binomials)
    except NotDivisible as exc:
        raise FactorizationMismatch(f"{w}: double factors do not divide S-tilde ({exc})") from None
    if quotient != Polynomial.constant(space, 1):
        raise FactorizationMismatch(f"{w}: leftover quotient {quotient}")
    lam = [0] * w.n
    for r, _ in frozen:
        lam[r - 1] += 1
    return FactorizationReport(w, tuple(lam), factors, True, frozen)


def signed_factorization(w: Permutation) -> Polynomial:
    """x^lambda * prod F_k * prod G_l with signed factors; equals G_w(x)."""
    rep = factorize(w)
    space = VarSpace(w.n)
    mono = Polynomial.monomial(space, rep.lam)
    return mono * product((f.structure.polynomial(space, signed=True) for f in rep.factors), space)


def double_schubert_is_zero_one(w: Permutation) -> bool:
    return bool(is_zero_one_by_coefficients(schubert_dd(w, DOUBLE)))
