"""Exact rational polytopes: Minkowski sums, volumes, projections, mixed volumes.

Polytopes are kept in V-representation with :class:`~fractions.Fraction`
coordinates.  Volumes are computed on an integer rescaling by the common
denominator, through the exact hull kernel in :mod:`volpoly.hull`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, lcm, prod
from typing import Iterable, Mapping, Sequence

from .errors import CapError, DimensionError
from .hull import hull_points_int, hull_volume_int
from .poly import HomogeneousPoly, simplex_points
from .rational import format_fraction, to_fraction

MAX_DIM = 6

Vector = tuple[Fraction, ...]


@dataclass(frozen=True)
class RationalPolytope:
    """``conv(vertices)`` in ``R^dim``; the vertex list need not be minimal."""

    dim: int
    vertices: tuple[Vector, ...]

    def __init__(self, dim: int, vertices: Iterable[Sequence]):
        if dim < 1:
            raise DimensionError("ambient dimension must be positive")
        verts = tuple(sorted({tuple(to_fraction(x) for x in v) for v in vertices}))
        if not verts:
            raise DimensionError("a polytope needs at least one vertex")
        for v in verts:
            if len(v) != dim:
                raise DimensionError(f"vertex of length {len(v)} in R^{dim}")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "vertices", verts)

    def __len__(self) -> int:
        return len(self.vertices)

    def _integer_points(self) -> tuple[int, list[tuple[int, ...]]]:
        L = lcm(*(x.denominator for v in self.vertices for x in v))
        return L, [tuple(int(x * L) for x in v) for v in self.vertices]

    def reduced(self) -> "RationalPolytope":
        """Same polytope with interior and non-vertex points discarded.

        Points in the relative interior of a boundary face may survive; the
        hull is unchanged either way.
        """
        if len(self.vertices) <= 1:
            return self
        L, pts = self._integer_points()
        kept = hull_points_int(pts)
        return RationalPolytope(self.dim, [[Fraction(x, L) for x in p] for p in kept])

    def to_json(self) -> dict:
        return {"dim": self.dim, "vertices": [[format_fraction(x) for x in v] for v in self.vertices]}

    @classmethod
    def from_json(cls, data: Mapping) -> "RationalPolytope":
        try:
            return cls(int(data["dim"]), data["vertices"])
        except (KeyError, TypeError) as exc:
            raise DimensionError(f"malformed polytope: {exc}") from exc

    @classmethod
    def cube(cls, dim: int) -> "RationalPolytope":
        return cls(dim, [[(m >> k) & 1 for k in range(dim)] for m in range(2**dim)])

    @classmethod
    def simplex(cls, dim: int) -> "RationalPolytope":
        return cls(dim, [[0] * dim] + [[int(k == i) for k in range(dim)] for i in range(dim)])

    @classmethod
    def segment(cls, dim: int, i: int) -> "RationalPolytope":
        """The unit segment ``[0, e_i]``."""
        return cls(dim, [[0] * dim, [int(k == i) for k in range(dim)]])


@dataclass(frozen=True)
class BodyCollection:
    dim: int
    bodies: tuple[RationalPolytope, ...]

    def __init__(self, bodies: Iterable[RationalPolytope], dim: int | None = None):
        bodies = tuple(bodies)
        if not bodies:
            raise DimensionError("empty body collection")
        dim = bodies[0].dim if dim is None else dim
        if any(P.dim != dim for P in bodies):
            raise DimensionError("all bodies must share the ambient dimension")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "bodies", bodies)

    def __len__(self) -> int:
        return len(self.bodies)

    def __getitem__(self, i: int) -> RationalPolytope:
        return self.bodies[i]

    def to_json(self) -> dict:
        return {"dim": self.dim, "bodies": [P.to_json() for P in self.bodies]}

    @classmethod
    def from_json(cls, data: Mapping) -> "BodyCollection":
        try:
            dim = int(data["dim"])
            bodies = [RationalPolytope.from_json(b) for b in data["bodies"]]
        except (KeyError, TypeError) as exc:
            raise DimensionError(f"malformed body collection: {exc}") from exc
        return cls(bodies, dim)


def _check_cap(dim: int):
    if dim > MAX_DIM:
        raise CapError("dim", MAX_DIM, dim)


def minkowski_sum(P: RationalPolytope, Q: RationalPolytope) -> RationalPolytope:
    """All pairwise vertex sums; call :meth:`RationalPolytope.reduced` to prune."""
    if P.dim != Q.dim:
        raise DimensionError(f"cannot add polytopes in R^{P.dim} and R^{Q.dim}")
    return RationalPolytope(P.dim, [[a + b for a, b in zip(p, q)] for p in P.vertices for q in Q.vertices])


def scale(P: RationalPolytope, lam) -> RationalPolytope:
    lam = to_fraction(lam)
    if lam < 0:
        raise DimensionError("scale factor must be nonnegative")
    return RationalPolytope(P.dim, [[lam * x for x in v] for v in P.vertices])


def hull_volume(P: RationalPolytope) -> Fraction:
    """Exact ``dim``-volume of the hull; 0 for lower-dimensional hulls."""
    _check_cap(P.dim)
    L, pts = P._integer_points()
    return Fraction(hull_volume_int(pts), factorial(P.dim) * L**P.dim)


def project(P: RationalPolytope, coords: Sequence[int], mode: str = "keep") -> RationalPolytope:
    """Coordinate projection: keep exactly ``coords`` or drop exactly ``coords``."""
    coords = list(coords)
    if len(set(coords)) != len(coords):
        raise DimensionError("projection coordinates must be distinct")
    if any(not 0 <= c < P.dim for c in coords):
        raise DimensionError(f"projection coordinate out of range for R^{P.dim}")
    if mode == "keep":
        keep = sorted(coords)
    elif mode == "drop":
        keep = [c for c in range(P.dim) if c not in coords]
    else:
        raise DimensionError(f"unknown projection mode {mode!r}")
    if not keep:
        raise DimensionError("projection onto zero coordinates")
    return RationalPolytope(len(keep), [[v[c] for c in keep] for v in P.vertices])


# ------------------------------------------------------------ mixed volumes


class _SumVolumes:
    """``vol(sum_i beta_i C_i)`` keyed by ``beta``, shared across one computation."""

    def __init__(self, collection: BodyCollection):
        _check_cap(collection.dim)
        self.collection = collection
        self.reduced = [P.reduced() for P in collection.bodies]
        self._sums: dict[tuple[int, ...], RationalPolytope] = {}
        self._vols: dict[tuple[int, ...], Fraction] = {}

    def body(self, beta: tuple[int, ...]) -> RationalPolytope:
        if beta in self._sums:
            return self._sums[beta]
        last = max(i for i, b in enumerate(beta) if b)
        rest = beta[:last] + (0,) * (len(beta) - last)
        # b * C equals the b-fold Minkowski sum of a convex C
        piece = scale(self.reduced[last], beta[last])
        if any(rest):
            piece = minkowski_sum(self.body(rest), piece).reduced()
        self._sums[beta] = piece
        return piece

    def volume(self, beta: tuple[int, ...]) -> Fraction:
        if beta not in self._vols:
            self._vols[beta] = hull_volume(self.body(beta))
        return self._vols[beta]


def _sub_multisets(alpha: Sequence[int]):
    if not alpha:
        yield ()
        return
    for b in range(alpha[0] + 1):
        for rest in _sub_multisets(alpha[1:]):
            yield (b,) + rest


def _mixed_volume(vols: _SumVolumes, alpha: tuple[int, ...]) -> Fraction:
    d = sum(alpha)
    total = Fraction(0)
    for beta in _sub_multisets(alpha):
        k = sum(beta)
        if k == 0:
            continue
        weight = prod(comb(a, b) for a, b in zip(alpha, beta))
        v = vols.volume(beta)
        if v:
            total += (-1) ** (d - k) * weight * v
    return total / factorial(d)


def mixed_volume(collection: BodyCollection, alpha: Sequence[int]) -> Fraction:
    """Mixed volume of the multiset taking ``C_i`` with multiplicity ``alpha_i``.

    Inclusion-exclusion over sub-multisets ``0 != beta <= alpha``; the
    ``prod binom(alpha_i, beta_i)`` subsets sharing a multiset are merged.
    """
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != len(collection):
        raise DimensionError(f"multiplicity vector has length {len(alpha)}, expected {len(collection)}")
    if any(a < 0 for a in alpha) or sum(alpha) != collection.dim:
        raise DimensionError(f"multiplicities must be nonnegative and sum to {collection.dim}")
    return _mixed_volume(_SumVolumes(collection), alpha)


def volume_polynomial(collection: BodyCollection) -> HomogeneousPoly:
    """``vol(x_1 C_1 + ... + x_n C_n) / d!`` with ``p_alpha`` the mixed volumes."""
    vols = _SumVolumes(collection)
    n, d = len(collection), collection.dim
    terms = {alpha: _mixed_volume(vols, alpha) for alpha in simplex_points(n, d)}
    return HomogeneousPoly(n, d, terms)


def weighted_sum(collection: BodyCollection, weights: Sequence) -> RationalPolytope:
    """``sum_i w_i C_i`` for nonnegative rational weights, reduced."""
    if len(weights) != len(collection):
        raise DimensionError("one weight per body is required")
    out = RationalPolytope(collection.dim, [[0] * collection.dim])
    for w, P in zip(weights, collection.bodies):
        out = minkowski_sum(out, scale(P.reduced(), w)).reduced()
    return out
