"""M-convex sets, polymatroid rank functions and matroid constructions.

Ground-set elements are indexed from 0.  Rank functions are stored as full
tables indexed by subset bitmask (bit ``i`` set means element ``i`` is in the
subset), so every axiom check is an exact enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial, prod
from typing import Callable, Iterable, Sequence

from .errors import AxiomError, CapError, DimensionError
from .poly import HomogeneousPoly
from .rational import to_fraction

MAX_GROUND = 20

Point = tuple[int, ...]


# ---------------------------------------------------------------- M-convex sets


@dataclass(frozen=True)
class MConvexSet:
    """A finite set of nonnegative integer vectors of constant entry sum.

    The name reflects intended use; membership in the M-convex class is
    decided by :func:`is_mconvex`, not enforced at construction.
    """

    ground_size: int
    points: frozenset[Point]

    def __init__(self, ground_size: int, points: Iterable[Sequence[int]]):
        pts = frozenset(tuple(int(x) for x in p) for p in points)
        if ground_size < 1:
            raise DimensionError("ground_size must be positive")
        for p in pts:
            if len(p) != ground_size:
                raise DimensionError(f"point {p} has length {len(p)}, expected {ground_size}")
            if min(p) < 0:
                raise DimensionError(f"point {p} has a negative entry")
        if len({sum(p) for p in pts}) > 1:
            raise DimensionError("points have mixed coordinate sums")
        object.__setattr__(self, "ground_size", ground_size)
        object.__setattr__(self, "points", pts)

    @property
    def rank(self) -> int | None:
        return sum(next(iter(self.points))) if self.points else None

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, p) -> bool:
        return tuple(p) in self.points

    def __iter__(self):
        return iter(sorted(self.points))

    def to_json(self) -> dict:
        return {"ground_size": self.ground_size, "points": [list(p) for p in sorted(self.points)]}

    @classmethod
    def from_json(cls, data) -> "MConvexSet":
        return cls(int(data["ground_size"]), data["points"])


@dataclass(frozen=True)
class ExchangeVerdict:
    ok: bool
    witness: tuple[Point, Point, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def _shift(p: Point, minus: int, plus: int) -> Point:
    q = list(p)
    q[minus] -= 1
    q[plus] += 1
    return tuple(q)


def is_mconvex(J: MConvexSet | Iterable[Sequence[int]]) -> ExchangeVerdict:
    """Symmetric basis exchange test.

    For every alpha, beta in J and i with alpha_i > beta_i there must be j with
    alpha_j < beta_j such that alpha - e_i + e_j and beta - e_j + e_i both lie
    in J.  Points are scanned in descending lex order; the first failing
    ``(alpha, beta, i)`` is returned as the witness.  The empty set passes.
    """
    if not isinstance(J, MConvexSet):
        pts = [tuple(p) for p in J]
        J = MConvexSet(len(pts[0]) if pts else 1, pts)
    pts = J.points
    order = sorted(pts, reverse=True)
    n = J.ground_size
    for alpha in order:
        for beta in order:
            if alpha == beta:
                continue
            for i in range(n):
                if alpha[i] <= beta[i]:
                    continue
                if not any(
                    alpha[j] < beta[j] and _shift(alpha, i, j) in pts and _shift(beta, j, i) in pts
                    for j in range(n)
                ):
                    return ExchangeVerdict(False, (alpha, beta, i))
    return ExchangeVerdict(True)


def matroid_status(J: MConvexSet) -> str:
    """``"matroid"``, ``"not-matroid"`` or ``"empty"`` (no bases at all)."""
    if not J.points:
        return "empty"
    if any(x > 1 for p in J.points for x in p):
        return "not-matroid"
    return "matroid" if is_mconvex(J) else "not-matroid"


def is_matroid(J: MConvexSet) -> bool:
    return matroid_status(J) == "matroid"


def dual_mconvex(J: MConvexSet, mu: Sequence[int]) -> MConvexSet:
    mu = tuple(int(m) for m in mu)
    if len(mu) != J.ground_size:
        raise DimensionError("mu has the wrong length")
    out = []
    for a in J.points:
        if any(x > m for x, m in zip(a, mu)):
            raise DimensionError(f"mu={mu} does not dominate {a}")
        out.append(tuple(m - x for x, m in zip(a, mu)))
    return MConvexSet(J.ground_size, out)


def duality_vector(J: MConvexSet) -> Point:
    """Coordinatewise sup plus inf of J."""
    cols = list(zip(*J.points))
    return tuple(max(c) + min(c) for c in cols)


# ----------------------------------------------------------- rank functions


def _mask(A: Iterable[int]) -> int:
    m = 0
    for i in A:
        m |= 1 << i
    return m


def _members(mask: int, n: int) -> frozenset[int]:
    return frozenset(i for i in range(n) if mask >> i & 1)


@dataclass(frozen=True)
class PolymatroidRank:
    """Integer set function on subsets of ``{0, ..., ground_size - 1}``.

    ``values[mask]`` is the rank of the subset encoded by ``mask``.
    """

    ground_size: int
    values: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.ground_size <= MAX_GROUND:
            raise CapError("ground_size", MAX_GROUND, self.ground_size)
        if len(self.values) != 1 << self.ground_size:
            raise DimensionError("rank table must have 2**ground_size entries")

    @classmethod
    def from_function(cls, n: int, h: Callable[[frozenset[int]], int]) -> "PolymatroidRank":
        if not 1 <= n <= MAX_GROUND:
            raise CapError("ground_size", MAX_GROUND, n)
        return cls(n, tuple(int(h(_members(m, n))) for m in range(1 << n)))

    def __call__(self, A: Iterable[int]) -> int:
        return self.values[_mask(A)]

    def to_json(self) -> dict:
        return {"ground_size": self.ground_size, "values": list(self.values)}

    @classmethod
    def from_json(cls, data) -> "PolymatroidRank":
        return cls(int(data["ground_size"]), tuple(int(v) for v in data["values"]))


@dataclass(frozen=True)
class RankVerdict:
    ok: bool
    is_matroid: bool = False
    axiom: str | None = None
    witness: tuple = field(default=())

    def __bool__(self) -> bool:
        return self.ok


def is_polymatroid_rank(h: PolymatroidRank) -> RankVerdict:
    """Check normalization, monotonicity and submodularity exhaustively.

    Monotonicity and submodularity are checked in their local forms
    (single-element extensions, and pairs ``A+i``, ``A+j``), which are
    equivalent to the global statements and keep the scan at ``O(2^n n^2)``.
    Witness sets are returned as sorted tuples of element indices.
    """
    n, v = h.ground_size, h.values
    if v[0] != 0:
        return RankVerdict(False, axiom="normalization", witness=((),))
    for m in range(1 << n):
        if v[m] < 0:
            return RankVerdict(False, axiom="nonnegativity", witness=(tuple(sorted(_members(m, n))),))
    for m in range(1 << n):
        for i in range(n):
            if not m >> i & 1 and v[m] > v[m | 1 << i]:
                A = tuple(sorted(_members(m, n)))
                B = tuple(sorted(_members(m | 1 << i, n)))
                return RankVerdict(False, axiom="monotonicity", witness=(A, B))
    for m in range(1 << n):
        for i in range(n):
            if m >> i & 1:
                continue
            for j in range(i + 1, n):
                if m >> j & 1:
                    continue
                a, b = m | 1 << i, m | 1 << j
                if v[a | b] + v[m] > v[a] + v[b]:
                    A = tuple(sorted(_members(a, n)))
                    B = tuple(sorted(_members(b, n)))
                    return RankVerdict(False, axiom="submodularity", witness=(A, B))
    matroid = all(v[m] <= bin(m).count("1") for m in range(1 << n))
    return RankVerdict(True, is_matroid=matroid)


def rank_from_bases(J: MConvexSet) -> PolymatroidRank:
    """``h_J(A) = max{beta_A : beta <= alpha in J}``, i.e. ``max_alpha alpha_A``."""
    if not J.points:
        raise DimensionError("rank_from_bases needs a nonempty set")
    verdict = is_mconvex(J)
    if not verdict:
        raise DimensionError(f"input is not M-convex: witness {verdict.witness}")
    n = J.ground_size
    if n > MAX_GROUND:
        raise CapError("ground_size", MAX_GROUND, n)
    pts = list(J.points)
    values = [0] * (1 << n)
    for m in range(1, 1 << n):
        members = [i for i in range(n) if m >> i & 1]
        values[m] = max(sum(p[i] for i in members) for p in pts)
    return PolymatroidRank(n, tuple(values))


def _bounded_compositions(total: int, caps: Sequence[int]):
    if not caps:
        if total == 0:
            yield ()
        return
    head, rest = caps[0], caps[1:]
    room = sum(rest)
    for x in range(max(0, total - room), min(head, total) + 1):
        for tail in _bounded_compositions(total - x, rest):
            yield (x,) + tail


def bases_from_rank(h: PolymatroidRank) -> MConvexSet:
    """``J_h = {alpha >= 0 : alpha_E = h(E), alpha_A <= h(A) for all A}``."""
    verdict = is_polymatroid_rank(h)
    if not verdict:
        raise AxiomError(verdict.axiom, verdict.witness)
    n, v = h.ground_size, h.values
    full = (1 << n) - 1
    caps = [v[1 << i] for i in range(n)]
    out = []
    for alpha in _bounded_compositions(v[full], caps):
        ok = True
        for m in range(1, full):
            if sum(alpha[i] for i in range(n) if m >> i & 1) > v[m]:
                ok = False
                break
        if ok:
            out.append(alpha)
    return MConvexSet(n, out)


# ---------------------------------------------------------------- graphs


@dataclass(frozen=True)
class SimpleGraph:
    """Multigraph on vertices ``0..num_vertices-1``; edge ``k`` is labelled ``k``."""

    num_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, num_vertices: int, edges: Iterable[Sequence[int]]):
        es = tuple((int(a), int(b)) for a, b in edges)
        for a, b in es:
            if not (0 <= a < num_vertices and 0 <= b < num_vertices):
                raise DimensionError(f"edge ({a}, {b}) leaves the vertex range")
        object.__setattr__(self, "num_vertices", int(num_vertices))
        object.__setattr__(self, "edges", es)

    def is_connected(self) -> bool:
        return _components(self.num_vertices, self.edges) == 1

    def to_json(self) -> dict:
        return {"vertices": self.num_vertices, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data) -> "SimpleGraph":
        return cls(int(data["vertices"]), data["edges"])


def _components(n: int, edges: Iterable[tuple[int, int]]) -> int:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = n
    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            count -= 1
    return count


def _spanning_trees(n: int, edges: list[tuple[int, int, int]]) -> list[frozenset[int]]:
    # edges: (label, u, v) with vertices relabelled into 0..n-1
    edges = [e for e in edges if e[1] != e[2]]
    if n == 1:
        return [frozenset()]
    if not edges:
        return []
    (label, u, v), rest = edges[0], edges[1:]
    # contraction: merge v into u, then compact vertex labels
    def relabel(x):
        x = u if x == v else x
        return x - 1 if x > v else x

    contracted = [(l, relabel(a), relabel(b)) for l, a, b in rest]
    trees = [t | {label} for t in _spanning_trees(n - 1, contracted)]
    if _components(n, [(a, b) for _, a, b in rest]) == 1:
        trees += _spanning_trees(n, rest)
    return trees


def graphic_matroid(G: SimpleGraph) -> MConvexSet:
    """Indicator vectors of spanning trees, by deletion/contraction recursion."""
    if not G.is_connected():
        raise DimensionError("graph is disconnected")
    m = len(G.edges)
    if m == 0:
        raise DimensionError("graph has no edges")
    trees = _spanning_trees(G.num_vertices, [(k, a, b) for k, (a, b) in enumerate(G.edges)])
    return MConvexSet(m, [tuple(int(k in t) for k in range(m)) for t in trees])


def signed_incidence(G: SimpleGraph) -> "PrimeFieldMatrix":
    """Vertex-by-edge incidence matrix over the rationals (loops give zero columns)."""
    rows = [[0] * len(G.edges) for _ in range(G.num_vertices)]
    for k, (a, b) in enumerate(G.edges):
        if a != b:
            rows[a][k] = 1
            rows[b][k] = -1
    return PrimeFieldMatrix(0, rows)


# ------------------------------------------------------ linear matroids


@dataclass(frozen=True)
class PrimeFieldMatrix:
    """Matrix over GF(prime), or over the rationals when ``prime == 0``.

    Columns index the ground set.
    """

    prime: int
    rows: tuple[tuple, ...]

    def __init__(self, prime: int, rows: Iterable[Sequence]):
        prime = int(prime)
        if prime < 0 or prime == 1:
            raise DimensionError(f"invalid modulus {prime}")
        if prime:
            rs = tuple(tuple(int(x) % prime for x in r) for r in rows)
        else:
            rs = tuple(tuple(to_fraction(x) for x in r) for r in rows)
        if len({len(r) for r in rs}) > 1:
            raise DimensionError("ragged matrix")
        object.__setattr__(self, "prime", prime)
        object.__setattr__(self, "rows", rs)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def columns(self, idx: Sequence[int]) -> list[list]:
        return [[r[j] for j in idx] for r in self.rows]

    def to_json(self) -> dict:
        rows = [[x if self.prime else f"{x.numerator}/{x.denominator}" for x in r] for r in self.rows]
        return {"prime": self.prime, "rows": rows}

    @classmethod
    def from_json(cls, data) -> "PrimeFieldMatrix":
        return cls(int(data.get("prime", 0)), data["rows"])


def matrix_rank(rows: Sequence[Sequence], prime: int = 0) -> int:
    """Rank by Gaussian elimination over GF(prime) or over Q."""
    M = [list(r) for r in rows]
    if not M or not M[0]:
        return 0
    if not prime:
        M = [[Fraction(x) for x in r] for r in M]
    nrows, ncols = len(M), len(M[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if M[r][col] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        if prime:
            inv = pow(M[rank][col], -1, prime)
            M[rank] = [x * inv % prime for x in M[rank]]
        else:
            lead = M[rank][col]
            M[rank] = [x / lead for x in M[rank]]
        for r in range(nrows):
            if r != rank and M[r][col] != 0:
                f = M[r][col]
                if prime:
                    M[r] = [(x - f * y) % prime for x, y in zip(M[r], M[rank])]
                else:
                    M[r] = [x - f * y for x, y in zip(M[r], M[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def linear_matroid(M: PrimeFieldMatrix) -> MConvexSet:
    """Column subsets of size rank(M) that are linearly independent."""
    nrows, ncols = M.shape
    if ncols == 0:
        raise DimensionError("matrix has no columns")
    if ncols > MAX_GROUND:
        raise CapError("ground_size", MAX_GROUND, ncols)
    r = matrix_rank(M.rows, M.prime)
    bases = []
    for B in combinations(range(ncols), r):
        if matrix_rank(M.columns(B), M.prime) == r:
            bases.append(tuple(int(k in B) for k in range(ncols)))
    return MConvexSet(ncols, bases)


def basis_generating_poly(J: MConvexSet) -> HomogeneousPoly:
    """``sum_{alpha in J} x^alpha``; the normalized coefficient is ``alpha!``."""
    if not J.points:
        raise DimensionError("basis generating polynomial of the empty set")
    terms = {a: prod(factorial(x) for x in a) for a in J.points}
    return HomogeneousPoly(J.ground_size, J.rank, terms)
