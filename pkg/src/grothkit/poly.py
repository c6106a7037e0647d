"""
Exact sparse multivariate polynomials.

A polynomial lives in a fixed :class:`VarSpace`: an x-block ``x1..xn``, an
optional y-block ``y1..ym`` and an optional single ``z``.  Exponent vectors are
tuples in that variable order.  Coefficients are Python ints, or
``fractions.Fraction`` after :func:`normalize`.

>>> S = VarSpace(2)
>>> x1, x2 = S.gens()
>>> str((x1 + x2) * (x1 - x2))
'x1^2 - x2^2'
>>> str(isobaric_divided_difference(x1 * x1, 1))
'x1 + x2 - x1*x2'
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from numbers import Rational

__all__ = [
    "VarSpace",
    "Polynomial",
    "VariableSpaceMismatch",
    "DegreeOfZero",
    "NotDivisible",
    "divided_difference",
    "isobaric_divided_difference",
    "homogeneous_component",
    "sign_flip_by_degree",
    "homogenize",
    "normalize",
    "exact_divide",
    "evaluate",
    "product",
    "elementary_symmetric",
    "complete_homogeneous",
]


class VariableSpaceMismatch(ValueError):
    pass


class DegreeOfZero(ValueError):
    pass


class NotDivisible(ArithmeticError):
    pass


@dataclass(frozen=True)
class VarSpace:
    """Variable layout: ``nx`` x's, then ``ny`` y's, then optionally ``z``."""

    nx: int
    ny: int = 0
    z: bool = False

    @property
    def nvars(self) -> int:
        return self.nx + self.ny + (1 if self.z else 0)

    def names(self) -> list[str]:
        names = [f"x{i}" for i in range(1, self.nx + 1)]
        names += [f"y{j}" for j in range(1, self.ny + 1)]
        if self.z:
            names.append("z")
        return names

    def x_index(self, i: int) -> int:
        if not 1 <= i <= self.nx:
            raise IndexError(f"x{i} not in {self}")
        return i - 1

    def y_index(self, j: int) -> int:
        if not 1 <= j <= self.ny:
            raise IndexError(f"y{j} not in {self}")
        return self.nx + j - 1

    def z_index(self) -> int:
        if not self.z:
            raise IndexError(f"no z variable in {self}")
        return self.nx + self.ny

    def index(self, name: str) -> int:
        if name == "z":
            return self.z_index()
        block, num = name[0], int(name[1:])
        if block == "x":
            return self.x_index(num)
        if block == "y":
            return self.y_index(num)
        raise KeyError(name)

    def gens(self) -> list[Polynomial]:
        return [Polynomial.variable(self, k) for k in range(self.nvars)]

    def x(self, i: int) -> Polynomial:
        return Polynomial.variable(self, self.x_index(i))

    def y(self, j: int) -> Polynomial:
        return Polynomial.variable(self, self.y_index(j))

    def to_json(self) -> dict:
        return {"x": self.nx, "y": self.ny, "z": self.z}


def term_order_key(alpha: tuple[int, ...]):
    """Ascending total degree; within a degree, x1-heavy exponents first."""
    return (sum(alpha), tuple(-a for a in alpha))


class Polynomial:
    """Immutable sparse polynomial; never stores a zero coefficient."""

    __slots__ = ("space", "_terms")

    def __init__(self, space: VarSpace, terms: Mapping | Iterable = ()):
        m = space.nvars
        clean: dict[tuple[int, ...], Rational] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for alpha, c in items:
            alpha = tuple(alpha)
            if len(alpha) != m or any(a < 0 for a in alpha):
                raise ValueError(f"bad exponent vector {alpha} for {space}")
            c = clean.get(alpha, 0) + c
            if c:
                clean[alpha] = c
            else:
                clean.pop(alpha, None)
        self.space = space
        self._terms = clean

    @classmethod
    def _raw(cls, space, terms):
        # trusted constructor: terms already clean
        p = object.__new__(cls)
        p.space = space
        p._terms = terms
        return p

    @classmethod
    def zero(cls, space: VarSpace) -> Polynomial:
        return cls._raw(space, {})

    @classmethod
    def constant(cls, space: VarSpace, c=1) -> Polynomial:
        return cls._raw(space, {(0,) * space.nvars: c} if c else {})

    @classmethod
    def monomial(cls, space: VarSpace, alpha, c=1) -> Polynomial:
        return cls(space, {tuple(alpha): c})

    @classmethod
    def variable(cls, space: VarSpace, k: int) -> Polynomial:
        alpha = [0] * space.nvars
        alpha[k] = 1
        return cls._raw(space, {tuple(alpha): 1})

    # -- inspection -------------------------------------------------------

    def terms(self) -> list[tuple[tuple[int, ...], Rational]]:
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda t: term_order_key(t[0]))

    def items(self):
        return self._terms.items()

    def coeff(self, alpha) -> Rational:
        return self._terms.get(tuple(alpha), 0)

    def support(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self._terms)

    def coefficients(self) -> list[Rational]:
        return list(self._terms.values())

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def degree(self) -> int:
        if not self._terms:
            raise DegreeOfZero("the zero polynomial has no degree")
        return max(map(sum, self._terms))

    def min_degree(self) -> int:
        if not self._terms:
            raise DegreeOfZero("the zero polynomial has no degree")
        return min(map(sum, self._terms))

    def is_homogeneous(self) -> bool:
        return len({sum(a) for a in self._terms}) <= 1

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.space == other.space and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.space, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.space, frozenset(self._terms.items())))

    def __repr__(self):
        return f"Polynomial({self.space}, {self})"

    def __str__(self):
        return to_text(self)

    # -- arithmetic -------------------------------------------------------

    def _check(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.space, other)
        if not isinstance(other, Polynomial):
            return None
        if other.space != self.space:
            raise VariableSpaceMismatch(f"{self.space} vs {other.space}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for alpha, c in other._terms.items():
            c = out.get(alpha, 0) + c
            if c:
                out[alpha] = c
            else:
                del out[alpha]
        return Polynomial._raw(self.space, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.space, {a: -c for a, c in self._terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial.zero(self.space)
            return Polynomial._raw(self.space, {a: c * other for a, c in self._terms.items()})
        other = self._check(other)
        if other is None:
            return NotImplemented
        out: dict = {}
        get = out.get
        for a, c in self._terms.items():
            for b, d in other._terms.items():
                key = tuple(x + y for x, y in zip(a, b))
                out[key] = get(key, 0) + c * d
        return Polynomial._raw(self.space, {k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.space, 1)
        for _ in range(k):
            result = result * self
        return result

    # -- transformations --------------------------------------------------

    def map_coefficients(self, fn) -> Polynomial:
        return Polynomial(self.space, {a: fn(c) for a, c in self._terms.items()})

    def embed(self, space: VarSpace) -> Polynomial:
        """Re-express in a larger space with the same x-block ordering.

        The target must contain every block of the source; new variables get
        exponent zero.
        """
        src = self.space
        if space.nx < src.nx or space.ny < src.ny or (src.z and not space.z):
            raise VariableSpaceMismatch(f"cannot embed {src} into {space}")
        out = {}
        for a, c in self._terms.items():
            b = [0] * space.nvars
            b[: src.nx] = a[: src.nx]
            b[space.nx : space.nx + src.ny] = a[src.nx : src.nx + src.ny]
            if src.z:
                b[space.z_index()] = a[src.z_index()]
            out[tuple(b)] = c
        return Polynomial._raw(space, out)

    def set_y_zero(self) -> Polynomial:
        """Specialize y = 0, landing in the space without a y-block."""
        src = self.space
        dst = VarSpace(src.nx, 0, src.z)
        lo, hi = src.nx, src.nx + src.ny
        out = {}
        for a, c in self._terms.items():
            if any(a[lo:hi]):
                continue
            out[a[:lo] + a[hi:]] = c
        return Polynomial._raw(dst, out)

    def swap_variables(self, k: int, l: int) -> Polynomial:
        out = {}
        for a, c in self._terms.items():
            b = list(a)
            b[k], b[l] = b[l], b[k]
            out[tuple(b)] = c
        return Polynomial._raw(self.space, out)

    def derivative(self, k: int) -> Polynomial:
        out = {}
        for a, c in self._terms.items():
            if a[k]:
                b = list(a)
                b[k] -= 1
                out[tuple(b)] = c * a[k]
        return Polynomial._raw(self.space, out)


def product(factors: Iterable[Polynomial], space: VarSpace) -> Polynomial:
    return reduce(lambda p, q: p * q, factors, Polynomial.constant(space, 1))


def _x_pair(f: Polynomial, i: int) -> tuple[int, int]:
    k = f.space.x_index(i)
    f.space.x_index(i + 1)
    return k, k + 1


def divided_difference(f: Polynomial, i: int) -> Polynomial:
    """(f - s_i f) / (x_i - x_{i+1}), term by term via geometric sums."""
    k, l = _x_pair(f, i)
    out: dict = {}
    get = out.get
    for alpha, c in f.items():
        a, b = alpha[k], alpha[l]
        if a == b:
            continue
        # (x^a y^b - x^b y^a)/(x - y) = sign * sum_{t} x^{hi-1-t} y^{lo+t}
        if a > b:
            hi, lo, sign = a, b, c
        else:
            hi, lo, sign = b, a, -c
        beta = list(alpha)
        for t in range(hi - lo):
            beta[k] = hi - 1 - t
            beta[l] = lo + t
            key = tuple(beta)
            out[key] = get(key, 0) + sign
    return Polynomial._raw(f.space, {a: c for a, c in out.items() if c})


def isobaric_divided_difference(f: Polynomial, i: int) -> Polynomial:
    """((1 - x_{i+1}) f - (1 - x_i) s_i f) / (x_i - x_{i+1})."""
    return divided_difference(f - f * f.space.x(i + 1), i)


def homogeneous_component(f: Polynomial, d: int) -> Polynomial:
    return Polynomial._raw(f.space, {a: c for a, c in f.items() if sum(a) == d})


def sign_flip_by_degree(f: Polynomial, base: int) -> Polynomial:
    """Multiply the degree ``base + k`` part by (-1)^k."""
    if f.is_zero():
        return f
    if base > f.min_degree():
        raise ValueError(f"base {base} exceeds the minimal degree {f.min_degree()}")
    return Polynomial._raw(
        f.space, {a: (-c if (sum(a) - base) % 2 else c) for a, c in f.items()}
    )


def homogenize(f: Polynomial, base: int, top: int) -> Polynomial:
    """Multiply the degree ``base + k`` part by z^(top - base - k).

    Signs are not touched; compose with :func:`sign_flip_by_degree` for the
    signed homogenization.
    """
    zi = f.space.z_index()
    out = {}
    for a, c in f.items():
        d = sum(a)
        if not base <= d <= top:
            raise ValueError(f"term of degree {d} outside [{base}, {top}]")
        b = list(a)
        b[zi] += top - d
        out[tuple(b)] = c
    return Polynomial._raw(f.space, out)


def normalize(f: Polynomial) -> Polynomial:
    """x^alpha -> x^alpha / (alpha_1! ... alpha_m!)."""
    out = {}
    for a, c in f.items():
        denom = math.prod(math.factorial(e) for e in a)
        out[a] = Fraction(c, denom)
    return Polynomial._raw(f.space, out)


def _divide_coeff(c, d):
    if isinstance(c, int) and isinstance(d, int):
        q, r = divmod(c, d)
        if r:
            raise NotDivisible(f"{c} is not divisible by {d} over the integers")
        return q
    q = Fraction(c) / Fraction(d)
    return q.numerator if q.denominator == 1 else q


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """Return q with q * g == f, or raise NotDivisible.

    Multivariate division by the graded-lex leading term; any nonzero
    remainder means g does not divide f.
    """
    if g.space != f.space:
        raise VariableSpaceMismatch(f"{f.space} vs {g.space}")
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lead_g = max(g.support(), key=term_order_key)
    lead_c = g.coeff(lead_g)
    rest_g = [(a, c) for a, c in g.items() if a != lead_g]
    rem = dict(f.items())
    quot: dict = {}
    while rem:
        lead = max(rem, key=term_order_key)
        shift = tuple(x - y for x, y in zip(lead, lead_g))
        if any(s < 0 for s in shift):
            raise NotDivisible(f"leading term {lead} not divisible by {lead_g}")
        c = _divide_coeff(rem[lead], lead_c)
        quot[shift] = c
        del rem[lead]
        for b, d in rest_g:
            key = tuple(x + y for x, y in zip(shift, b))
            v = rem.get(key, 0) - c * d
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    return Polynomial._raw(f.space, quot)


def evaluate(f: Polynomial, point) -> Rational:
    if len(point) != f.space.nvars:
        raise ValueError(f"expected {f.space.nvars} values, got {len(point)}")
    point = [Fraction(v) for v in point]
    total = Fraction(0)
    for a, c in f.items():
        total += c * math.prod(v**e for v, e in zip(point, a) if e)
    return total.numerator if total.denominator == 1 else total


def elementary_symmetric(space: VarSpace, indices, s: int) -> Polynomial:
    """e_s in the variables at the given (0-based) positions."""
    out = {}
    for combo in itertools.combinations(indices, s):
        a = [0] * space.nvars
        for k in combo:
            a[k] += 1
        out[tuple(a)] = out.get(tuple(a), 0) + 1
    return Polynomial(space, out)


def complete_homogeneous(space: VarSpace, indices, s: int) -> Polynomial:
    """h_s in the variables at the given (0-based) positions."""
    out = {}
    for combo in itertools.combinations_with_replacement(indices, s):
        a = [0] * space.nvars
        for k in combo:
            a[k] += 1
        out[tuple(a)] = out.get(tuple(a), 0) + 1
    return Polynomial(space, out)


# -- serialization --------------------------------------------------------


def _fmt_coeff(c) -> str:
    return str(c)


def _monomial_text(names, alpha, sep="*") -> str:
    parts = []
    for name, e in zip(names, alpha):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return sep.join(parts)


def to_text(f: Polynomial) -> str:
    """Signed sum of monomials in canonical order, e.g. ``x1^2*x2 - 2*x1*x2*x3``."""
    if f.is_zero():
        return "0"
    names = f.space.names()
    out = []
    for alpha, c in f.terms():
        mono = _monomial_text(names, alpha)
        neg = c < 0
        mag = -c if neg else c
        if not mono:
            body = _fmt_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_fmt_coeff(mag)}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def to_latex(f: Polynomial) -> str:
    if f.is_zero():
        return "0"
    names = [n if n == "z" else f"{n[0]}_{{{n[1:]}}}" for n in f.space.names()]
    out = []
    for alpha, c in f.terms():
        parts = []
        for name, e in zip(names, alpha):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{{{e}}}")
        mono = " ".join(parts)
        neg = c < 0
        mag = -c if neg else c
        if isinstance(mag, Fraction) and mag.denominator != 1:
            mag_s = f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}"
        else:
            mag_s = str(mag)
        body = mag_s if not mono else (mono if mag == 1 else f"{mag_s} {mono}")
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def to_json(f: Polynomial) -> dict:
    return {
        "vars": f.space.nvars,
        "blocks": f.space.to_json(),
        "terms": [[list(a), str(c)] for a, c in f.terms()],
    }


def from_json(data: Mapping) -> Polynomial:
    blocks = data["blocks"]
    space = VarSpace(int(blocks["x"]), int(blocks.get("y", 0)), bool(blocks.get("z", False)))
    if space.nvars != int(data["vars"]):
        raise ValueError("vars does not match blocks")

    def parse(s: str):
        q = Fraction(s)
        return q.numerator if q.denominator == 1 else q

    return Polynomial(space, [(tuple(a), parse(c)) for a, c in data["terms"]])


def evaluate_all_ones(f: Polynomial) -> Rational:
    return evaluate(f, [1] * f.space.nvars)
