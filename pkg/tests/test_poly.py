from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import polys, same_shape_polys
from volpoly.discrete import MConvexSet, basis_generating_poly, graphic_matroid, is_matroid, SimpleGraph
from volpoly.errors import DimensionError
from volpoly.poly import HomogeneousPoly as H
from volpoly.poly import apply_diff, product, simplex_points
from volpoly.special import complete_graph, elementary_symmetric, spanning_tree_poly


def test_eval_basics(cubic):
    assert H.from_monomials(2, {(1, 1): 1})((2, 3)) == 6
    assert H.zero(3, 2)((5, 6, 7)) == 0
    # sum of the six monomial coefficients
    assert cubic((1, 1, 1)) == 65
    with pytest.raises(DimensionError):
        cubic((1, 1))


def test_partial_hessians(cubic):
    H1 = cubic.partial(0).hessian()
    H2 = cubic.partial(1).hessian()
    assert H1 == [[84, 12, 48], [12, 0, 12], [48, 12, 12]]
    assert H2 == [[12, 0, 12], [0, 0, 0], [12, 0, 6]]
    assert H.from_monomials(2, {(0, 3): 1}).partial(0).is_zero()
    with pytest.raises(DimensionError):
        H(2, 0, {(0, 0): 1}).partial(0)


def test_directional():
    f = H.from_monomials(2, {(3, 0): 1, (0, 3): 1})
    assert f.directional((1, 0)) == f.partial(0)
    assert f.directional((1, 1)) == H.from_monomials(2, {(2, 0): 3, (0, 2): 3})
    g = f.directional((0, 0))
    assert g.is_zero() and g.degree == 2


def test_product_examples():
    x1, x2 = H.variable(2, 0), H.variable(2, 1)
    assert (x1 * x2).terms == {(1, 1): 1}
    sq = product(x1 + x2, x1 + x2)
    assert sq.terms == {(2, 0): 2, (1, 1): 2, (0, 2): 2}
    assert product(x1, H.zero(2, 3)).is_zero()


def test_support_and_coefficients(cubic):
    assert cubic.support() == {(3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 1, 1), (1, 0, 2), (0, 1, 2)}
    assert H.from_monomials(2, {(3, 0): 1, (0, 3): 1}).support() == {(3, 0), (0, 3)}
    assert H.zero(2, 3).support() == frozenset()
    assert cubic.normalized_coeff((3, 0, 0)) == 84
    assert cubic.normalized_coeff((1, 1, 1)) == 12
    assert cubic.normalized_coeff((0, 3, 0)) == 0
    with pytest.raises(DimensionError):
        cubic.normalized_coeff((1, 1, 0))


def test_delete_contract_examples():
    f = H.from_monomials(2, {(2, 0): Fraction(1, 2), (1, 1): 1, (0, 2): Fraction(1, 2)})
    assert f.delete(1) == H.from_monomials(2, {(2, 0): Fraction(1, 2), (1, 1): 1})
    assert f.contract(1) == H.from_monomials(2, {(1, 0): 1, (0, 1): 1})
    g = H.from_monomials(2, {(3, 0): 1})
    assert g.delete(1).is_zero()
    assert g.contract(1).is_zero()
    # a pure power of x_j has e_min == e_max, so both minors are empty sums
    top = H(3, 3, {(0, 3, 0): 1})
    assert top.contract(1) == H.zero(3, 2)
    assert top.delete(1) == H.zero(3, 3)
    mixed = H(3, 3, {(0, 3, 0): 1, (1, 2, 0): 1})
    assert mixed.contract(1) == H(3, 2, {(0, 2, 0): 1})
    with pytest.raises(DimensionError):
        H.zero(2, 2).delete(0)


def test_contract_triangle_edge():
    # contracting an edge of K3 leaves two parallel edges
    f = spanning_tree_poly(complete_graph(3))
    two_cycle = spanning_tree_poly(SimpleGraph(2, [(0, 1), (0, 1)]))
    g = f.contract(0)
    assert g.degree == 1
    assert g == H(3, 1, {(0, 1, 0): 1, (0, 0, 1): 1})
    assert g.terms == {(0,) + a: c for a, c in two_cycle.items()}


def test_apply_diff_examples():
    g = H(3, 2, {(1, 1, 0): 1})
    f = H(3, 3, {(1, 1, 1): 1})
    assert apply_diff(g, f) == H(3, 1, {(0, 0, 1): 1})
    # d^alpha on x^[beta] with alpha not below beta vanishes
    assert apply_diff(H(3, 2, {(2, 0, 0): 1}), f).is_zero()
    # degree overflow is zero by rule
    assert apply_diff(H(3, 3, {(3, 0, 0): 1}), H(3, 2, {(2, 0, 0): 1})).is_zero()


def test_json_roundtrip(cubic):
    data = cubic.to_json()
    assert data["terms"][0] == {"alpha": [0, 1, 2], "p": "6/1"}
    assert H.from_json(data) == cubic
    with pytest.raises(DimensionError):
        H.from_json({"num_vars": 2})


@given(polys(min_degree=1), st.data())
def test_partial_shifts_coefficients(f, data):
    i = data.draw(st.integers(0, f.num_vars - 1))
    g = f.partial(i)
    for beta in simplex_points(f.num_vars, f.degree - 1):
        up = list(beta)
        up[i] += 1
        assert g.normalized_coeff(beta) == f.normalized_coeff(up)


@given(same_shape_polys(count=3), st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_product_ring_laws(fs, point):
    f, g, h = fs
    x = point[: f.num_vars]
    assert product(f, g) == product(g, f)
    assert product(product(f, g), h) == product(f, product(g, h))
    assert product(f, g)(x) == f(x) * g(x)


@given(same_shape_polys(count=3, max_degree=3))
def test_apply_diff_composes(fs):
    g, h, f = fs
    assert apply_diff(g, apply_diff(h, f)) == apply_diff(product(g, h), f)


@given(polys(min_degree=1, lo=-3, hi=3), st.data())
def test_delete_splits_off_top_power(f, data):
    if f.is_zero():
        return
    j = data.draw(st.integers(0, f.num_vars - 1))
    powers = [a[j] for a in f.support()]
    top = {a: c for a, c in f.items() if a[j] == max(powers)}
    rest = f.delete(j)
    assert rest + H(f.num_vars, f.degree, top) == f
    # contraction carries everything above the bottom power, shifted by one
    low = min(powers)
    shifted = {a[:j] + (a[j] + 1,) + a[j + 1:]: c for a, c in f.contract(j).items()}
    assert shifted == {a: c for a, c in f.items() if a[j] > low}


def _matroid_delete(bases, j):
    return {b for b in bases if not b[j]}


def _matroid_contract(bases, j):
    return {b[:j] + (0,) + b[j + 1:] for b in bases if b[j]}


@pytest.mark.parametrize("n,r", [(4, 2), (5, 2), (5, 3), (6, 3)])
def test_minors_match_matroid_minors(n, r):
    # uniform matroids and a graphic one; elements that are neither loops nor coloops
    bases = {tuple(int(i in S) for i in range(n)) for S in combinations(range(n), r)}
    f = basis_generating_poly(MConvexSet(n, bases))
    for j in range(n):
        assert f.delete(j).support() == _matroid_delete(bases, j)
        assert f.contract(j).support() == _matroid_contract(bases, j)
        assert is_matroid(MConvexSet(n, f.delete(j).support()))


def test_minor_coloop_convention():
    # a bridge is a coloop: x_j divides every term, so the literal rules give 0
    # for both minors, while matroid contraction keeps the other edges
    G = SimpleGraph(3, [(0, 1), (1, 2), (1, 2)])
    bases = set(graphic_matroid(G).points)
    f = spanning_tree_poly(G)
    assert f.delete(0).is_zero()
    assert f.contract(0).is_zero()
    assert _matroid_contract(bases, 0) == {(0, 1, 0), (0, 0, 1)}


def test_elementary_symmetric_minors():
    e = elementary_symmetric(5, 3)
    # deleting x1 leaves e_3 in the remaining four variables
    assert e.delete(0) == H(5, 3, {(0,) + a: c for a, c in elementary_symmetric(4, 3).items()})
    assert e.contract(0) == H(5, 2, {(0,) + a: c for a, c in elementary_symmetric(4, 2).items()})
    assert e.delete(0).support() == {a for a in e.support() if a[0] == 0}
    assert e.contract(0).degree == 2
