"""Homogeneous polynomials in normalized-coefficient form.

A polynomial of degree ``d`` in ``n`` variables is stored as

    f = sum_alpha p_alpha * x^alpha / alpha!

so ``p_alpha`` equals the mixed partial derivative ``d^alpha f``. Variables are
indexed from 0.  Coefficients are exact: ints and strings are coerced to
:class:`fractions.Fraction`; other exact number types (for example sympy
expressions carrying a factor of pi) pass through untouched, which is enough
for the operations that only move coefficients around (derivatives, minors).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial, prod
from typing import Iterable, Mapping, Sequence

from .errors import DimensionError
from .rational import format_fraction, to_fraction

Exponent = tuple[int, ...]


def _coerce(c):
    if isinstance(c, (int, str, Fraction)) and not isinstance(c, bool):
        return to_fraction(c)
    return c


def _is_zero(c) -> bool:
    return c == 0


def multi_factorial(alpha: Sequence[int]) -> int:
    return prod(factorial(a) for a in alpha)


def multinomial_ratio(gamma: Sequence[int], alpha: Sequence[int]) -> int:
    """prod gamma_i! / (alpha_i! (gamma_i - alpha_i)!)."""
    return prod(comb(g, a) for g, a in zip(gamma, alpha))


def simplex_points(n: int, d: int) -> Iterable[Exponent]:
    """All exponent vectors of length n with entry sum d, in ascending lex order."""
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in simplex_points(n - 1, d - first):
            yield (first,) + rest


class HomogeneousPoly:
    """Immutable homogeneous polynomial with normalized coefficients.

    ``terms`` maps exponent tuples to the normalized coefficient ``p_alpha``;
    zero coefficients are dropped. The zero polynomial keeps its degree tag.
    """

    __slots__ = ("num_vars", "degree", "_terms", "_hash")

    def __init__(self, num_vars: int, degree: int, terms: Mapping[Sequence[int], object] | None = None):
        if num_vars < 1:
            raise DimensionError("num_vars must be positive")
        if degree < 0:
            raise DimensionError("degree must be nonnegative")
        clean: dict[Exponent, object] = {}
        for alpha, c in (terms or {}).items():
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != num_vars:
                raise DimensionError(f"exponent {alpha} has length {len(alpha)}, expected {num_vars}")
            if any(a < 0 for a in alpha) or sum(alpha) != degree:
                raise DimensionError(f"exponent {alpha} is not in the degree-{degree} simplex")
            c = _coerce(c)
            if alpha in clean:
                c = clean[alpha] + c
            clean[alpha] = c
        self.num_vars = num_vars
        self.degree = degree
        self._terms = {a: clean[a] for a in sorted(clean) if not _is_zero(clean[a])}
        self._hash = None

    # construction helpers

    @classmethod
    def zero(cls, num_vars: int, degree: int) -> "HomogeneousPoly":
        return cls(num_vars, degree, {})

    @classmethod
    def from_monomials(cls, num_vars: int, monomials: Mapping[Sequence[int], object], degree: int | None = None):
        """Build from ordinary coefficients: ``{alpha: c}`` means ``c * x^alpha``."""
        if degree is None:
            if not monomials:
                raise DimensionError("degree is required for the zero polynomial")
            degree = sum(next(iter(monomials)))
        terms = {tuple(a): _coerce(c) * multi_factorial(a) for a, c in monomials.items()}
        return cls(num_vars, degree, terms)

    @classmethod
    def variable(cls, num_vars: int, i: int) -> "HomogeneousPoly":
        return cls(num_vars, 1, {tuple(int(k == i) for k in range(num_vars)): 1})

    @classmethod
    def linear(cls, coeffs: Sequence) -> "HomogeneousPoly":
        n = len(coeffs)
        return cls(n, 1, {tuple(int(k == i) for k in range(n)): c for i, c in enumerate(coeffs)})

    # basic protocol

    @property
    def terms(self) -> dict[Exponent, object]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomogeneousPoly):
            return NotImplemented
        return (self.num_vars, self.degree, self._terms) == (other.num_vars, other.degree, other._terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num_vars, self.degree, tuple(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        if not self._terms:
            return f"HomogeneousPoly(0, n={self.num_vars}, d={self.degree})"
        parts = []
        for alpha, c in self._terms.items():
            mono = "*".join(
                f"x{i + 1}" + (f"^[{a}]" if a > 1 else "") for i, a in enumerate(alpha) if a
            ) or "1"
            parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    def _check_same_vars(self, other: "HomogeneousPoly"):
        if self.num_vars != other.num_vars:
            raise DimensionError(f"{self.num_vars} vs {other.num_vars} variables")

    # coefficient access

    def normalized_coeff(self, alpha: Sequence[int]):
        alpha = tuple(alpha)
        if len(alpha) != self.num_vars or sum(alpha) != self.degree:
            raise DimensionError(f"{alpha} is not in the degree-{self.degree} simplex")
        return self._terms.get(alpha, Fraction(0))

    def monomial_coeff(self, alpha: Sequence[int]):
        """Ordinary coefficient of ``x^alpha``."""
        return self.normalized_coeff(alpha) / multi_factorial(alpha)

    def support(self) -> frozenset[Exponent]:
        return frozenset(self._terms)

    # arithmetic

    def __add__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        self._check_same_vars(other)
        if self.degree != other.degree:
            raise DimensionError("cannot add polynomials of different degree")
        terms = dict(self._terms)
        for a, c in other._terms.items():
            terms[a] = terms[a] + c if a in terms else c
        return HomogeneousPoly(self.num_vars, self.degree, terms)

    def __neg__(self) -> "HomogeneousPoly":
        return HomogeneousPoly(self.num_vars, self.degree, {a: -c for a, c in self._terms.items()})

    def __sub__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        return self + (-other)

    def scale(self, c) -> "HomogeneousPoly":
        c = _coerce(c)
        return HomogeneousPoly(self.num_vars, self.degree, {a: c * v for a, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, HomogeneousPoly):
            return product(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def eval(self, point: Sequence) -> object:
        if len(point) != self.num_vars:
            raise DimensionError(f"point has length {len(point)}, expected {self.num_vars}")
        point = [_coerce(x) for x in point]
        total = Fraction(0)
        for alpha, c in self._terms.items():
            total += c * prod(x**a for x, a in zip(point, alpha)) / multi_factorial(alpha)
        return total

    __call__ = eval

    # calculus

    def partial(self, i: int) -> "HomogeneousPoly":
        if self.degree == 0:
            raise DimensionError("cannot differentiate a constant")
        if not 0 <= i < self.num_vars:
            raise DimensionError(f"variable index {i} out of range")
        terms = {}
        for alpha, c in self._terms.items():
            if alpha[i]:
                beta = alpha[:i] + (alpha[i] - 1,) + alpha[i + 1:]
                terms[beta] = c
        return HomogeneousPoly(self.num_vars, self.degree - 1, terms)

    def partial_multi(self, delta: Sequence[int]) -> "HomogeneousPoly":
        """``d^delta f``: shift every exponent down by delta."""
        delta = tuple(delta)
        k = sum(delta)
        if k > self.degree:
            raise DimensionError("derivative order exceeds degree")
        terms = {}
        for alpha, c in self._terms.items():
            if all(a >= b for a, b in zip(alpha, delta)):
                terms[tuple(a - b for a, b in zip(alpha, delta))] = c
        return HomogeneousPoly(self.num_vars, self.degree - k, terms)

    def directional(self, v: Sequence) -> "HomogeneousPoly":
        if len(v) != self.num_vars:
            raise DimensionError(f"direction has length {len(v)}, expected {self.num_vars}")
        if self.degree == 0:
            raise DimensionError("cannot differentiate a constant")
        v = [_coerce(x) for x in v]
        terms: dict[Exponent, object] = {}
        for alpha, c in self._terms.items():
            for i, vi in enumerate(v):
                if alpha[i] and vi != 0:
                    beta = alpha[:i] + (alpha[i] - 1,) + alpha[i + 1:]
                    terms[beta] = terms.get(beta, 0) + vi * c
        return HomogeneousPoly(self.num_vars, self.degree - 1, terms)

    def hessian(self) -> list[list]:
        """Hessian of a quadratic form: ``H[i][j] = p_{e_i + e_j}``."""
        if self.degree != 2:
            raise DimensionError("hessian() needs a quadratic form")
        n = self.num_vars
        H = [[Fraction(0)] * n for _ in range(n)]
        for alpha, c in self._terms.items():
            idx = [i for i, a in enumerate(alpha) for _ in range(a)]
            i, j = idx
            H[i][j] = c
            H[j][i] = c
        return H

    # minors

    def _x_powers(self, j: int) -> tuple[int, int]:
        if self.is_zero():
            raise DimensionError("minors of the zero polynomial are undefined")
        if not 0 <= j < self.num_vars:
            raise DimensionError(f"variable index {j} out of range")
        powers = [alpha[j] for alpha in self._terms]
        return min(powers), max(powers)

    def delete(self, j: int) -> "HomogeneousPoly":
        """Drop the terms carrying the top power of ``x_j``; degree is kept."""
        _, e_max = self._x_powers(j)
        terms = {a: c for a, c in self._terms.items() if a[j] < e_max}
        return HomogeneousPoly(self.num_vars, self.degree, terms)

    def contract(self, j: int) -> "HomogeneousPoly":
        """Drop the bottom power of ``x_j`` and differentiate the rest once in ``x_j``."""
        e_min, _ = self._x_powers(j)
        terms = {}
        for a, c in self._terms.items():
            if a[j] > e_min:
                terms[a[:j] + (a[j] - 1,) + a[j + 1:]] = c
        return HomogeneousPoly(self.num_vars, self.degree - 1, terms)

    # transformations used by tests and the operator module

    def permute(self, perm: Sequence[int]) -> "HomogeneousPoly":
        """Rename variable ``i`` to ``perm[i]``."""
        n = self.num_vars
        terms = {}
        for alpha, c in self._terms.items():
            beta = [0] * n
            for i, a in enumerate(alpha):
                beta[perm[i]] = a
            terms[tuple(beta)] = c
        return HomogeneousPoly(n, self.degree, terms)

    def rescale(self, weights: Sequence) -> "HomogeneousPoly":
        """Substitute ``x_i -> w_i x_i``."""
        w = [_coerce(x) for x in weights]
        return HomogeneousPoly(
            self.num_vars,
            self.degree,
            {a: c * prod(wi**ai for wi, ai in zip(w, a)) for a, c in self._terms.items()},
        )

    def pad(self, num_vars: int) -> "HomogeneousPoly":
        """Same polynomial viewed in more variables."""
        extra = (0,) * (num_vars - self.num_vars)
        return HomogeneousPoly(num_vars, self.degree, {a + extra: c for a, c in self._terms.items()})

    # serialization

    def to_json(self) -> dict:
        return {
            "num_vars": self.num_vars,
            "degree": self.degree,
            "terms": [{"alpha": list(a), "p": format_fraction(c)} for a, c in self._terms.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "HomogeneousPoly":
        try:
            n = int(data["num_vars"])
            d = int(data["degree"])
            raw = data.get("terms", [])
        except (KeyError, TypeError) as exc:
            raise DimensionError(f"malformed polynomial: {exc}") from exc
        terms: dict[Exponent, Fraction] = {}
        for t in raw:
            alpha = tuple(int(a) for a in t["alpha"])
            if alpha in terms:
                raise DimensionError(f"duplicate exponent {alpha}")
            terms[alpha] = to_fraction(t["p"])
        return cls(n, d, terms)


def product(f: HomogeneousPoly, g: HomogeneousPoly) -> HomogeneousPoly:
    """Polynomial product; ``p_gamma = sum binom(gamma; alpha) p_alpha q_beta``."""
    f._check_same_vars(g)
    terms: dict[Exponent, object] = {}
    for a, c in f.items():
        for b, e in g.items():
            gamma = tuple(x + y for x, y in zip(a, b))
            v = multinomial_ratio(gamma, a) * c * e
            terms[gamma] = terms[gamma] + v if gamma in terms else v
    return HomogeneousPoly(f.num_vars, f.degree + g.degree, terms)


def apply_diff(g: HomogeneousPoly, f: HomogeneousPoly) -> HomogeneousPoly:
    """Act by ``g(d)`` on ``f`` using ``d^alpha o x^[beta] = x^[beta - alpha]``.

    ``g`` is read in the same normalized form, so its ordinary coefficient on
    ``d^alpha`` is ``p_alpha / alpha!``.  When ``deg g > deg f`` every term
    vanishes and the result is the zero polynomial tagged with degree 0.
    """
    g._check_same_vars(f)
    n = f.num_vars
    out_deg = max(f.degree - g.degree, 0)
    if g.degree > f.degree:
        return HomogeneousPoly.zero(n, 0)
    terms: dict[Exponent, object] = {}
    for alpha, c in g.items():
        weight = c / multi_factorial(alpha)
        for beta, e in f.items():
            if all(b >= a for a, b in zip(alpha, beta)):
                gamma = tuple(b - a for a, b in zip(alpha, beta))
                v = weight * e
                terms[gamma] = terms[gamma] + v if gamma in terms else v
    return HomogeneousPoly(n, out_deg, terms)

