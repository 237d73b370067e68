"""Exact certification and falsification of the Lorentzian property.

Everything on the certification path is rational: symmetric-matrix inertia
comes from the characteristic polynomial (Faddeev-LeVerrier over the
integers after clearing denominators) and Descartes' rule of signs, which is
exact because symmetric matrices have real spectra.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

from .discrete import MConvexSet, is_mconvex
from .errors import DimensionError
from .poly import HomogeneousPoly, simplex_points
from .rational import format_fraction, to_fraction


@dataclass(frozen=True)
class SymMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    def __init__(self, rows: Sequence[Sequence]):
        ent = tuple(tuple(to_fraction(x) for x in r) for r in rows)
        n = len(ent)
        if n == 0:
            raise DimensionError("empty matrix")
        if any(len(r) != n for r in ent):
            raise DimensionError("matrix is not square")
        for i in range(n):
            for j in range(i):
                if ent[i][j] != ent[j][i]:
                    raise DimensionError(f"matrix is not symmetric at ({i}, {j})")
        object.__setattr__(self, "entries", ent)

    @property
    def size(self) -> int:
        return len(self.entries)

    def principal(self, idx: Sequence[int]) -> "SymMatrix":
        return SymMatrix([[self.entries[i][j] for j in idx] for i in idx])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


def charpoly(M: SymMatrix | Sequence[Sequence]) -> list[Fraction]:
    """Coefficients ``c_0..c_n`` of ``det(lambda I - M)``, constant term first."""
    if not isinstance(M, SymMatrix):
        M = SymMatrix(M)
    n = M.size
    den = lcm(*(x.denominator for r in M.entries for x in r))
    A = [[int(x * den) for x in r] for r in M.entries]
    c = [0] * (n + 1)
    c[n] = 1
    Mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # Mk <- A @ Mk + c[n-k+1] I
        prev = Mk
        Mk = [[sum(A[i][t] * prev[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            Mk[i][i] += c[n - k + 1]
        tr = sum(A[i][t] * Mk[t][i] for i in range(n) for t in range(n))
        q, r = divmod(-tr, k)
        assert r == 0, "Faddeev-LeVerrier division must be exact on integer matrices"
        c[n - k] = q
    # undo the scaling: roots of the scaled matrix are den times the true roots
    return [Fraction(ci, den ** (n - i)) for i, ci in enumerate(c)]


def _sign_changes(coeffs: Sequence) -> int:
    signs = [1 if x > 0 else -1 for x in coeffs if x != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def inertia(M: SymMatrix | Sequence[Sequence]) -> tuple[int, int, int]:
    """``(n_pos, n_zero, n_neg)`` of a rational symmetric matrix, exactly."""
    c = charpoly(M)
    k = next(i for i, x in enumerate(c) if x != 0)
    q = c[k:]
    n_pos = _sign_changes(q)
    n_neg = _sign_changes([x if i % 2 == 0 else -x for i, x in enumerate(q)])
    return n_pos, k, n_neg


# --------------------------------------------------------------- verdicts


@dataclass(frozen=True)
class LorentzianFailure:
    kind: str  # negative-coefficient | support-not-mconvex | hessian-signature
    delta: tuple[int, ...]
    witness: object

    def to_json(self) -> dict:
        return {"kind": self.kind, "delta": list(self.delta), "witness": jsonable(self.witness)}


@dataclass(frozen=True)
class LorentzianVerdict:
    accepted: bool
    failure: LorentzianFailure | None = None

    def __post_init__(self):
        if self.accepted != (self.failure is None):
            raise ValueError("accepted must hold exactly when there is no failure")

    def __bool__(self) -> bool:
        return self.accepted

    def to_json(self) -> dict:
        return {"accepted": self.accepted, "failure": self.failure.to_json() if self.failure else None}


def jsonable(x):
    if isinstance(x, Fraction):
        return format_fraction(x)
    if isinstance(x, dict):
        return {k: jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, (int, str, bool)) or x is None:
        return x
    return str(x)


def is_lorentzian(f: HomogeneousPoly) -> LorentzianVerdict:
    """Decide membership in the recursively defined Lorentzian class.

    Degree <= 1: nonnegative coefficients.  Degree 2: additionally a Hessian
    with at most one positive eigenvalue.  Degree >= 3: nonnegative,
    M-convex support, and every first partial Lorentzian.  The recursion is
    unrolled over derivative multi-indices ``delta`` (``d^delta f`` depends
    only on ``delta``), so each derivative is certified once.  The zero
    polynomial is accepted.
    """
    n, d = f.num_vars, f.degree
    zero = (0,) * n
    for alpha, c in f.items():
        if c < 0:
            return LorentzianVerdict(False, LorentzianFailure("negative-coefficient", zero, {"alpha": alpha, "p": c}))
    if d <= 1:
        return LorentzianVerdict(True)
    for k in range(d - 1):
        for delta in simplex_points(n, k):
            g = f.partial_multi(delta)
            if g.is_zero():
                continue
            if g.degree >= 3:
                verdict = is_mconvex(MConvexSet(n, g.support()))
                if not verdict:
                    a, b, i = verdict.witness
                    return LorentzianVerdict(
                        False,
                        LorentzianFailure("support-not-mconvex", delta, {"alpha": a, "beta": b, "i": i}),
                    )
            else:
                H = g.hessian()
                signature = inertia(H)
                if signature[0] > 1:
                    return LorentzianVerdict(
                        False,
                        LorentzianFailure("hessian-signature", delta, {"hessian": H, "inertia": signature}),
                    )
    return LorentzianVerdict(True)


# ------------------------------------------------------------ falsifier


@dataclass(frozen=True)
class DefinitionWitness:
    directions: tuple[tuple[int, ...], ...]
    lhs: Fraction  # (d_v1 d_v1 ... f)(d_v2 d_v2 ... f)
    rhs: Fraction  # (d_v1 d_v2 ... f)^2

    def to_json(self) -> dict:
        return {"directions": [list(v) for v in self.directions], "lhs": format_fraction(self.lhs), "rhs": format_fraction(self.rhs)}


def definition_sides(f: HomogeneousPoly, directions: Sequence[Sequence]) -> tuple[Fraction, Fraction]:
    """Both sides of the directional-derivative inequality for ``v_1..v_d``."""
    d = f.degree
    if d < 2:
        raise DimensionError("the defining inequality needs degree >= 2")
    if len(directions) != d:
        raise DimensionError(f"need {d} directions, got {len(directions)}")
    g = f
    for v in directions[2:]:
        g = g.directional(v)
    H = g.hessian()
    n = f.num_vars
    v1 = [to_fraction(x) for x in directions[0]]
    v2 = [to_fraction(x) for x in directions[1]]

    def form(u, w):
        return sum(u[i] * H[i][j] * w[j] for i in range(n) for j in range(n) if u[i] and w[j])

    return form(v1, v1) * form(v2, v2), form(v1, v2) ** 2


def falsify_definition(f: HomogeneousPoly, num_samples: int, seed: int) -> DefinitionWitness | None:
    """Search for nonnegative directions violating the defining inequality.

    Directions have independent uniform integer entries in ``[0, 9]`` drawn
    from ``random.Random(seed)``; the first violating tuple is returned.
    """
    if f.degree < 2:
        raise DimensionError("falsify_definition needs degree >= 2")
    rng = random.Random(seed)
    n, d = f.num_vars, f.degree
    for _ in range(num_samples):
        vs = tuple(tuple(rng.randint(0, 9) for _ in range(n)) for _ in range(d))
        lhs, rhs = definition_sides(f, vs)
        if lhs > rhs:
            return DefinitionWitness(vs, lhs, rhs)
    return None


# ----------------------------------------------------- coefficient tests


def bivariate_lorentzian(f: HomogeneousPoly) -> bool:
    """Nonnegative, no internal zeros, and log-concave normalized coefficients."""
    if f.num_vars != 2:
        raise DimensionError("bivariate_lorentzian needs exactly two variables")
    d = f.degree
    p = [f.normalized_coeff((a, d - a)) for a in range(d + 1)]
    if any(x < 0 for x in p):
        return False
    nz = [a for a, x in enumerate(p) if x != 0]
    if nz and len(nz) != nz[-1] - nz[0] + 1:
        return False
    return all(p[a - 1] * p[a + 1] <= p[a] ** 2 for a in range(1, d))


@dataclass(frozen=True)
class CoefficientViolation:
    alpha: tuple[int, ...]
    i: int
    j: int
    lhs: Fraction  # p_{alpha+e_i-e_j} p_{alpha-e_i+e_j}
    rhs: Fraction  # p_alpha^2

    def to_json(self) -> dict:
        return {"alpha": list(self.alpha), "i": self.i, "j": self.j, "lhs": format_fraction(self.lhs), "rhs": format_fraction(self.rhs)}


@dataclass(frozen=True)
class CoefficientVerdict:
    ok: bool
    violation: CoefficientViolation | None = None

    def __bool__(self) -> bool:
        return self.ok


def af_violations(f: HomogeneousPoly) -> list[CoefficientViolation]:
    """All ``(alpha, i<j)`` with ``p_{a+e_i-e_j} p_{a-e_i+e_j} > p_a^2``.

    Only alpha adjacent to the support can violate, so candidates are
    generated from support points rather than the whole simplex.
    """
    n = f.num_vars
    terms = f.terms
    candidates = set()
    for g in terms:
        for i in range(n):
            if not g[i]:
                continue
            for j in range(n):
                if j == i:
                    continue
                alpha = list(g)
                alpha[i] -= 1
                alpha[j] += 1
                candidates.add((tuple(alpha), min(i, j), max(i, j)))
    zero = Fraction(0)
    out = []
    for alpha, i, j in sorted(candidates):
        if not alpha[i] or not alpha[j]:
            continue
        up = list(alpha)
        up[i] += 1
        up[j] -= 1
        down = list(alpha)
        down[i] -= 1
        down[j] += 1
        lhs = terms.get(tuple(up), zero) * terms.get(tuple(down), zero)
        rhs = terms.get(alpha, zero) ** 2
        if lhs > rhs:
            out.append(CoefficientViolation(alpha, i, j, lhs, rhs))
    return out


def coefficient_af_check(f: HomogeneousPoly) -> CoefficientVerdict:
    violations = af_violations(f)
    if violations:
        return CoefficientVerdict(False, violations[0])
    return CoefficientVerdict(True)
