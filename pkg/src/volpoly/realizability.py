"""Exact checkers for the pair-vector conditions on projection areas.

Inputs are vectors ``p_ij`` indexed by unordered pairs.  Square roots are
never formed: ``sqrt(A) <= sqrt(B) + sqrt(C)`` is decided by squaring on the
correct side of the case split, which keeps boundary cases exact.

These functions decide the *conditions* only.  At four indices the triangle
condition characterizes realizable projection vectors; for larger index
sets the matrix conditions are necessary, and their sufficiency is open.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .errors import DimensionError
from .lorentzian import SymMatrix, inertia
from .polytope import RationalPolytope, hull_volume, project
from .rational import format_fraction, to_fraction

Pair = tuple[int, int]

STRICT = "strict"
DEGENERATE = "degenerate"
FAIL = "fail"


def all_pairs(n: int) -> list[Pair]:
    return list(combinations(range(n), 2))


def _pair_key(i: int, j: int) -> str:
    return f"{i + 1}{j + 1}" if j < 9 else f"{i + 1},{j + 1}"


def _parse_key(key: str) -> Pair:
    parts = key.split(",") if "," in key else list(key)
    if len(parts) != 2:
        raise DimensionError(f"bad pair key {key!r}")
    i, j = sorted(int(x) - 1 for x in parts)
    return i, j


@dataclass(frozen=True)
class PairVector:
    """Nonnegative rationals on the pairs ``i < j`` of ``range(n)``."""

    n: int
    values: tuple[tuple[Pair, Fraction], ...]
    _lookup: dict = field(compare=False, repr=False, hash=False)

    def __init__(self, n: int, values: Mapping[Pair, object] | Sequence):
        if n < 2:
            raise DimensionError("a pair vector needs n >= 2")
        pairs = all_pairs(n)
        if isinstance(values, Mapping):
            vals = {}
            for (i, j), v in values.items():
                key = (min(i, j), max(i, j))
                if i == j or not 0 <= key[0] or key[1] >= n:
                    raise DimensionError(f"bad pair {(i, j)} for n={n}")
                vals[key] = to_fraction(v)
        else:
            values = list(values)
            if len(values) != len(pairs):
                raise DimensionError(f"expected {len(pairs)} values in lex pair order, got {len(values)}")
            vals = {pq: to_fraction(v) for pq, v in zip(pairs, values)}
        missing = [pq for pq in pairs if pq not in vals]
        if missing:
            raise DimensionError(f"missing pair values for {[_pair_key(*pq) for pq in missing]}")
        neg = [pq for pq in pairs if vals[pq] < 0]
        if neg:
            raise DimensionError(f"negative pair value at {_pair_key(*neg[0])}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "values", tuple((pq, vals[pq]) for pq in pairs))
        object.__setattr__(self, "_lookup", {pq: vals[pq] for pq in pairs})

    def __getitem__(self, ij: Pair) -> Fraction:
        i, j = ij
        return self._lookup[(i, j) if i < j else (j, i)]

    def as_list(self) -> list[Fraction]:
        return [v for _, v in self.values]

    def restrict(self, idx: Sequence[int]) -> "PairVector":
        return PairVector(len(idx), [self[idx[a], idx[b]] for a, b in all_pairs(len(idx))])

    def scaled(self, lam) -> "PairVector":
        lam = to_fraction(lam)
        return PairVector(self.n, [lam * v for v in self.as_list()])

    def to_json(self) -> dict:
        return {"n": self.n, "pairs": {_pair_key(*pq): format_fraction(v) for pq, v in self.values}}

    @classmethod
    def from_json(cls, data: Mapping) -> "PairVector":
        try:
            n = int(data["n"])
            raw = data["pairs"]
            return cls(n, {_parse_key(k): v for k, v in raw.items()})
        except (KeyError, TypeError, AttributeError) as exc:
            raise DimensionError(f"malformed pair vector: {exc}") from exc


def sqrt_compare(a, b, c) -> tuple[bool, bool]:
    """``(sqrt(a) <= sqrt(b) + sqrt(c), equality)`` for nonnegative rationals."""
    diff = a - b - c
    if diff < 0:
        return True, False
    lhs, rhs = diff * diff, 4 * b * c
    return lhs <= rhs, lhs == rhs


def triangle_products(p: PairVector) -> tuple[Fraction, Fraction, Fraction]:
    """``(p12 p34, p13 p24, p14 p23)``: squares of the candidate side lengths."""
    return p[0, 1] * p[2, 3], p[0, 2] * p[1, 3], p[0, 3] * p[1, 2]


def triangle_condition(p: PairVector) -> str:
    """Whether the three square-rooted products form a triangle.

    ``strict`` when every triangle inequality is strict, ``degenerate`` when
    all hold with at least one equality, ``fail`` otherwise.
    """
    if p.n != 4:
        raise DimensionError("triangle_condition needs n = 4")
    A, B, C = triangle_products(p)
    results = [sqrt_compare(A, B, C), sqrt_compare(B, A, C), sqrt_compare(C, A, B)]
    if not all(ok for ok, _ in results):
        return FAIL
    return DEGENERATE if any(eq for _, eq in results) else STRICT


def pair_matrix(p: PairVector) -> SymMatrix:
    """Zero diagonal, ``p_ij`` off the diagonal."""
    M = [[Fraction(0)] * p.n for _ in range(p.n)]
    for (i, j), v in p.values:
        M[i][j] = M[j][i] = v
    return SymMatrix(M)


def one_positive_condition(p: PairVector) -> bool:
    return inertia(pair_matrix(p))[0] <= 1


def principal_4x4_violations(p: PairVector) -> list[tuple[int, ...]]:
    """Index 4-subsets whose principal submatrix has two or more positive eigenvalues."""
    if p.n < 4:
        raise DimensionError("principal_4x4_condition needs n >= 4")
    M = pair_matrix(p)
    return [idx for idx in combinations(range(p.n), 4) if inertia(M.principal(idx))[0] > 1]


def principal_4x4_condition(p: PairVector) -> bool:
    return not principal_4x4_violations(p)


def t2_plucker_violations(q: PairVector) -> list[tuple[int, int, int, int]]:
    """Failing ``(i, j, k, l)``: ``sqrt(q_ij q_kl) > sqrt(q_ik q_jl) + sqrt(q_il q_jk)``.

    Every 4-subset is tried with each of its three pairings on the left.
    """
    if q.n < 4:
        raise DimensionError("t2_plucker_condition needs n >= 4")
    out = []
    for i, j, k, l in combinations(range(q.n), 4):
        for a, b, c, e in ((i, j, k, l), (i, k, j, l), (i, l, j, k)):
            # left pairing {a,b}{c,e}; the other two pairings on the right
            ok, _ = sqrt_compare(q[a, b] * q[c, e], q[a, c] * q[b, e], q[a, e] * q[b, c])
            if not ok:
                out.append((a, b, c, e))
    return out


def t2_plucker_condition(q: PairVector) -> bool:
    return not t2_plucker_violations(q)


def projection_pair_vector(P: RationalPolytope, mode: str) -> PairVector:
    """Areas of the 2-dimensional coordinate projections of ``P``, one per pair.

    ``keep`` retains coordinates ``i, j``; ``drop`` omits them and needs
    ``P`` to live in ``R^4`` so that the image is planar.
    """
    if mode == "drop" and P.dim != 4:
        raise DimensionError("drop projections to the plane need a polytope in R^4")
    return PairVector(P.dim, {pq: hull_volume(project(P, pq, mode)) for pq in all_pairs(P.dim)})
