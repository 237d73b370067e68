"""Linear operators on bounded monomial boxes, and coefficient-inequality scanners.

A :class:`MonomialOperator` sends polynomials in ``x_1..x_n`` supported in
the box ``alpha <= mu`` to polynomials in ``y_1..y_m`` supported in
``beta <= nu``.  Its matrix is written in the ordinary monomial basis:
``T(x^alpha) = sum_beta T[beta, alpha] y^beta``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product as cartesian
from math import comb
from typing import Iterable, Mapping, Sequence

from .errors import DimensionError
from .lorentzian import CoefficientViolation, af_violations
from .poly import HomogeneousPoly, multi_factorial, product
from .rational import format_fraction, to_fraction

Exponent = tuple[int, ...]


def box(bound: Sequence[int]) -> Iterable[Exponent]:
    """All exponent vectors ``0 <= alpha <= bound`` in lex order."""
    return cartesian(*(range(b + 1) for b in bound))


def _leq(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


@dataclass(frozen=True)
class MonomialOperator:
    mu: Exponent
    nu: Exponent
    shift: int
    entries: tuple[tuple[Exponent, Exponent, Fraction], ...]

    def __init__(self, mu: Sequence[int], nu: Sequence[int], shift: int, entries: Mapping | Iterable = ()):
        mu = tuple(int(a) for a in mu)
        nu = tuple(int(a) for a in nu)
        if not mu or not nu or min(mu + nu) < 0:
            raise DimensionError("bounds must be nonempty nonnegative vectors")
        items = entries.items() if isinstance(entries, Mapping) else ((tuple(k[:2]), k[2]) for k in entries)
        table: dict[tuple[Exponent, Exponent], Fraction] = {}
        for (beta, alpha), v in items:
            beta = tuple(int(b) for b in beta)
            alpha = tuple(int(a) for a in alpha)
            if len(beta) != len(nu) or len(alpha) != len(mu):
                raise DimensionError(f"entry ({beta}, {alpha}) has the wrong number of variables")
            if not _leq(beta, nu) or not _leq(alpha, mu) or min(alpha + beta) < 0:
                raise DimensionError(f"entry ({beta}, {alpha}) lies outside the bounding boxes")
            v = to_fraction(v)
            if v and sum(beta) != sum(alpha) + shift:
                raise DimensionError(f"entry ({beta}, {alpha}) breaks homogeneity with shift {shift}")
            table[(beta, alpha)] = table.get((beta, alpha), Fraction(0)) + v
        clean = tuple(sorted((b, a, v) for (b, a), v in table.items() if v))
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "nu", nu)
        object.__setattr__(self, "shift", int(shift))
        object.__setattr__(self, "entries", clean)

    @property
    def source_vars(self) -> int:
        return len(self.mu)

    @property
    def target_vars(self) -> int:
        return len(self.nu)

    def column(self, alpha: Sequence[int]) -> dict[Exponent, Fraction]:
        """``T(x^alpha)`` as ``{beta: ordinary coefficient}``."""
        alpha = tuple(alpha)
        return {b: v for b, a, v in self.entries if a == alpha}

    def to_json(self) -> dict:
        return {
            "mu": list(self.mu),
            "nu": list(self.nu),
            "shift": self.shift,
            "entries": [{"beta": list(b), "alpha": list(a), "v": format_fraction(v)} for b, a, v in self.entries],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "MonomialOperator":
        try:
            entries = {(tuple(e["beta"]), tuple(e["alpha"])): e["v"] for e in data.get("entries", [])}
            return cls(data["mu"], data["nu"], int(data["shift"]), entries)
        except (KeyError, TypeError) as exc:
            raise DimensionError(f"malformed operator: {exc}") from exc


# ------------------------------------------------------------------ builders


def zero_operator(mu: Sequence[int], nu: Sequence[int], shift: int = 0) -> MonomialOperator:
    return MonomialOperator(mu, nu, shift, {})


def identity_operator(mu: Sequence[int]) -> MonomialOperator:
    return MonomialOperator(mu, mu, 0, {(a, a): 1 for a in box(mu)})


def diff_operator(mu: Sequence[int], j: int) -> MonomialOperator:
    """``d/dx_j`` on the box ``mu``."""
    entries = {}
    for a in box(mu):
        if a[j]:
            entries[(a[:j] + (a[j] - 1,) + a[j + 1:], a)] = a[j]
    return MonomialOperator(mu, mu, -1, entries)


def multiplication_operator(mu: Sequence[int], i: int) -> MonomialOperator:
    """Multiplication by ``x_i``; the target box grows by one in coordinate ``i``."""
    nu = tuple(m + (k == i) for k, m in enumerate(mu))
    entries = {(a[:i] + (a[i] + 1,) + a[i + 1:], a): 1 for a in box(mu)}
    return MonomialOperator(mu, nu, 1, entries)


def interlacing_operator(mu: Sequence[int], i: int, j: int, t) -> MonomialOperator:
    """``1 + t x_i d/dx_j`` as a degree-preserving operator on the box ``mu``.

    The target box is ``mu + e_i`` when ``i != j`` and ``mu`` otherwise.
    """
    t = to_fraction(t)
    nu = tuple(m + (k == i and i != j) for k, m in enumerate(mu))
    entries: dict = {}
    for a in box(mu):
        entries[(a, a)] = entries.get((a, a), 0) + 1
        if a[j] and t:
            b = list(a)
            b[j] -= 1
            b[i] += 1
            key = (tuple(b), a)
            entries[key] = entries.get(key, 0) + t * a[j]
    return MonomialOperator(mu, nu, 0, entries)


# ---------------------------------------------------------------- algebra


def apply_operator(T: MonomialOperator, f: HomogeneousPoly) -> HomogeneousPoly:
    """``T(f)`` in the target variables; ``f`` must sit inside the source box."""
    if f.num_vars != T.source_vars:
        raise DimensionError(f"operator acts on {T.source_vars} variables, polynomial has {f.num_vars}")
    for alpha in f.support():
        if not _leq(alpha, T.mu):
            raise DimensionError(f"monomial {alpha} exceeds the source bound {T.mu}")
    out_deg = f.degree + T.shift
    if out_deg < 0:
        return HomogeneousPoly.zero(T.target_vars, 0)
    terms: dict[Exponent, Fraction] = {}
    coeffs = {a: c for a, c in f.items()}
    for beta, alpha, v in T.entries:
        if alpha in coeffs:
            # ordinary coefficient of f is p_alpha / alpha!; output is renormalized by beta!
            w = coeffs[alpha] * v * multi_factorial(beta) / multi_factorial(alpha)
            terms[beta] = terms.get(beta, 0) + w
    return HomogeneousPoly(T.target_vars, out_deg, terms)


def compose(S: MonomialOperator, T: MonomialOperator) -> MonomialOperator:
    """``S o T``; the target box of ``T`` must fit in the source box of ``S``."""
    if T.target_vars != S.source_vars or not _leq(T.nu, S.mu):
        raise DimensionError(f"cannot compose: target box {T.nu} does not fit source box {S.mu}")
    by_source: dict[Exponent, list[tuple[Exponent, Fraction]]] = {}
    for g, b, v in S.entries:
        by_source.setdefault(b, []).append((g, v))
    entries: dict = {}
    for b, a, v in T.entries:
        for g, w in by_source.get(b, ()):
            entries[(g, a)] = entries.get((g, a), 0) + w * v
    return MonomialOperator(T.mu, S.nu, S.shift + T.shift, entries)


def symbol(T: MonomialOperator) -> HomogeneousPoly:
    """``sum_{alpha <= mu} T(x^[alpha]) x^[mu - alpha]`` in the variables ``(x, y)``.

    With ``T(x^[alpha]) = sum_beta T[beta, alpha] beta!/alpha! y^[beta]``,
    the normalized coefficient on ``x^[mu - alpha] y^[beta]`` is
    ``T[beta, alpha] beta! / alpha!``.
    """
    n, m = T.source_vars, T.target_vars
    degree = sum(T.mu) + T.shift
    if degree < 0:
        return HomogeneousPoly.zero(n + m, 0)
    terms = {}
    for beta, alpha, v in T.entries:
        rest = tuple(u - a for u, a in zip(T.mu, alpha))
        terms[rest + beta] = v * multi_factorial(beta) / multi_factorial(alpha)
    return HomogeneousPoly(n + m, degree, terms)


def interlacing_apply(f: HomogeneousPoly, i: int, j: int, t) -> HomogeneousPoly:
    """``f + t x_i d_j f``."""
    t = to_fraction(t)
    if t < 0:
        raise DimensionError("interlacing parameter must be nonnegative")
    if f.degree == 0 or not t:
        return f
    return f + product(HomogeneousPoly.variable(f.num_vars, i), f.partial(j)).scale(t)


# ------------------------------------------------------------------ scanners


@dataclass(frozen=True)
class RktViolation:
    """One failing instance of the reverse Khovanskii-Teissier inequality."""

    e: int
    triple: tuple[int, int, int]
    lhs: Fraction  # binom(d,e) p((d-e)a + e b) p(e a + (d-e) c)
    rhs: Fraction  # p(d a) p(e b + (d-e) c)

    def to_json(self) -> dict:
        return {"e": self.e, "triple": list(self.triple), "lhs": format_fraction(self.lhs), "rhs": format_fraction(self.rhs)}


def rkt_sides(f: HomogeneousPoly, triple: Sequence[int], e: int) -> tuple[Fraction, Fraction]:
    n, d = f.num_vars, f.degree
    a, b, c = triple

    def p(**powers):
        alpha = [0] * n
        for key, k in powers.items():
            alpha[{"a": a, "b": b, "c": c}[key]] += k
        return f.normalized_coeff(alpha)

    lhs = comb(d, e) * p(a=d - e, b=e) * p(a=e, c=d - e)
    rhs = p(a=d) * p(b=e, c=d - e)
    return lhs, rhs


def rkt_scan(f: HomogeneousPoly) -> list[RktViolation]:
    """Every ordered triple of distinct variables and ``1 <= e <= d-1`` where
    ``binom(d,e) p((d-e)a+eb) p(ea+(d-e)c) < p(da) p(eb+(d-e)c)``.

    Coordinate directions stand in for the divisors; this is a necessary
    condition for being a volume polynomial, not a decision procedure.
    """
    if f.num_vars < 3:
        raise DimensionError("rkt_scan needs at least three variables")
    out = []
    for triple in permutations(range(f.num_vars), 3):
        for e in range(1, f.degree):
            lhs, rhs = rkt_sides(f, triple, e)
            if lhs < rhs:
                out.append(RktViolation(e, triple, lhs, rhs))
    return out


def kt_scan(f: HomogeneousPoly) -> list[CoefficientViolation]:
    """Failures of ``p_{a+e_i-e_j} p_{a-e_i+e_j} <= p_a^2``."""
    return af_violations(f)
