"""Distinguished polynomial families: elementary symmetric, normalized Schur,
the Fano basis polynomial and spanning-tree polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .discrete import (
    PrimeFieldMatrix,
    SimpleGraph,
    basis_generating_poly,
    graphic_matroid,
    linear_matroid,
)
from .errors import DimensionError
from .poly import HomogeneousPoly, simplex_points


@dataclass(frozen=True)
class YoungDiagram:
    parts: tuple[int, ...]

    def __init__(self, parts: Sequence[int]):
        parts = tuple(int(x) for x in parts)
        if not parts:
            raise DimensionError("a Young diagram needs at least one part")
        if any(x <= 0 for x in parts):
            raise DimensionError("parts must be positive")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise DimensionError("parts must be weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def cells(self) -> Iterator[tuple[int, int]]:
        for r, length in enumerate(self.parts):
            for c in range(length):
                yield r, c

    def to_json(self) -> dict:
        return {"parts": list(self.parts)}

    @classmethod
    def from_json(cls, data) -> "YoungDiagram":
        return cls(data["parts"])


def partitions(total: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` in reverse lex order."""
    if total == 0:
        yield ()
        return
    top = total if max_part is None else min(total, max_part)
    for first in range(top, 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest


def elementary_symmetric(n: int, d: int) -> HomogeneousPoly:
    """Sum of all squarefree degree-``d`` monomials in ``n`` variables."""
    if not 1 <= d <= n:
        raise DimensionError(f"need 1 <= d <= n, got d={d}, n={n}")
    terms = {tuple(int(i in S) for i in range(n)): 1 for S in combinations(range(n), d)}
    return HomogeneousPoly(n, d, terms)


def _horizontal_strips(shape: list[int], outer: Sequence[int], size: int) -> Iterator[list[int]]:
    # shapes nu with shape <= nu <= outer, nu/shape a horizontal strip of the given size
    rows = len(outer)

    def grow(i: int, left: int, acc: list[int]):
        if i == rows:
            if left == 0:
                yield list(acc)
            return
        cap = outer[i] if i == 0 else min(outer[i], shape[i - 1])
        for v in range(shape[i], min(cap, shape[i] + left) + 1):
            acc.append(v)
            yield from grow(i + 1, left - (v - shape[i]), acc)
            acc.pop()

    yield from grow(0, size, [])


def kostka(lam: YoungDiagram | Sequence[int], mu: Sequence[int]) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``mu``.

    A tableau is built entry by entry: the cells holding ``k`` form a
    horizontal strip of size ``mu_k`` on top of the cells holding smaller
    entries, and every tableau arises from exactly one chain of strips.
    """
    if not isinstance(lam, YoungDiagram):
        lam = YoungDiagram(lam)
    mu = [int(m) for m in mu]
    if any(m < 0 for m in mu):
        raise DimensionError("content must be nonnegative")
    if sum(mu) != lam.size:
        raise DimensionError(f"|lambda| = {lam.size} but |mu| = {sum(mu)}")
    outer = lam.parts

    def count(k: int, shape: list[int]) -> int:
        if k == len(mu):
            return int(tuple(shape) == outer)
        return sum(count(k + 1, nxt) for nxt in _horizontal_strips(shape, outer, mu[k]))

    return count(0, [0] * len(outer))


def normalized_schur(lam: YoungDiagram | Sequence[int], n: int) -> HomogeneousPoly:
    """``sum_mu K_{lam,mu} x^[mu]`` over compositions ``mu`` of length ``n``."""
    if not isinstance(lam, YoungDiagram):
        lam = YoungDiagram(lam)
    if n < len(lam):
        raise DimensionError(f"{len(lam)} parts need at least that many variables, got {n}")
    terms = {mu: kostka(lam, mu) for mu in simplex_points(n, lam.size)}
    return HomogeneousPoly(n, lam.size, terms)


def fano_matrix() -> PrimeFieldMatrix:
    """The seven nonzero vectors of ``GF(2)^3`` as columns."""
    cols = [[(m >> k) & 1 for k in range(3)] for m in range(1, 8)]
    return PrimeFieldMatrix(2, [[c[r] for c in cols] for r in range(3)])


def fano_poly() -> HomogeneousPoly:
    return basis_generating_poly(linear_matroid(fano_matrix()))


def spanning_tree_poly(G: SimpleGraph) -> HomogeneousPoly:
    """Basis generating polynomial of the cycle matroid; one variable per edge."""
    return basis_generating_poly(graphic_matroid(G))


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, list(combinations(range(n), 2)))
