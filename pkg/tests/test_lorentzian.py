import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import polys
from oracles import congruence_inertia, det
from volpoly import fixtures
from volpoly.errors import DimensionError
from volpoly.lorentzian import (
    SymMatrix,
    bivariate_lorentzian,
    charpoly,
    coefficient_af_check,
    definition_sides,
    falsify_definition,
    inertia,
    is_lorentzian,
)
from volpoly.poly import HomogeneousPoly as H
from volpoly.poly import product
from volpoly.special import elementary_symmetric


def linear_form_product(rng, n, d):
    f = H(n, 0, {(0,) * n: 1})
    for _ in range(d):
        f = product(f, H.linear([rng.randint(0, 3) for _ in range(n)]))
    return f


def certified_corpus(seed=11, size=25):
    """Products of nonnegative linear forms and elementary symmetric polynomials."""
    rng = random.Random(seed)
    out = []
    while len(out) < size:
        n, d = rng.randint(2, 4), rng.randint(2, 4)
        f = linear_form_product(rng, n, d)
        if rng.random() < 0.3 and d <= n:
            f = elementary_symmetric(n, d)
        if not f.is_zero() and is_lorentzian(f):
            out.append(f)
    return out


def test_inertia_examples():
    data = fixtures.load("separating_five_matrix")
    M = SymMatrix(data["matrix"])
    assert charpoly(M) == data["charpoly"]
    assert inertia(M) == tuple(data["inertia"])
    assert inertia([[0] * 3] * 3) == (0, 3, 0)
    ones = [[int(i != j) for j in range(4)] for i in range(4)]
    assert inertia(ones) == (1, 0, 3)
    with pytest.raises(DimensionError):
        SymMatrix([[0, 1], [2, 0]])


@given(st.integers(1, 5), st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=3), min_size=15, max_size=15))
def test_inertia_matches_congruence(n, raw):
    it = iter(raw)
    M = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            M[i][j] = M[j][i] = next(it)
    assert inertia(M) == congruence_inertia(M)


@given(st.integers(1, 4), st.lists(st.integers(-5, 5), min_size=10, max_size=10), st.integers(-3, 3))
def test_charpoly_vanishes_at_shift(n, raw, lam):
    it = iter(raw)
    M = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            M[i][j] = M[j][i] = next(it)
    c = charpoly(M)
    value = sum(ci * lam**i for i, ci in enumerate(c))
    assert value == det([[(lam if i == j else 0) - M[i][j] for j in range(n)] for i in range(n)])


def test_certified_and_rejected_examples(cubic):
    assert is_lorentzian(cubic)
    v = is_lorentzian(H.from_monomials(2, {(3, 0): 1, (0, 3): 1}))
    assert not v and v.failure.kind == "support-not-mconvex"
    v = is_lorentzian(H.from_monomials(3, {(2, 0, 1): 1, (0, 3, 0): 1}))
    assert not v and v.failure.kind == "support-not-mconvex"
    v = is_lorentzian(H.from_monomials(4, {(1, 1, 0, 0): 1, (0, 0, 1, 1): 1}))
    assert v.failure.kind == "hessian-signature" and v.failure.witness["inertia"] == (2, 0, 2)
    v = is_lorentzian(H(2, 2, {(2, 0): 1, (0, 2): -1}))
    assert v.failure.kind == "negative-coefficient"
    assert is_lorentzian(H.zero(3, 4))
    assert is_lorentzian(H.linear([0, 2, 1]))


def test_verdict_json(cubic):
    v = is_lorentzian(H.from_monomials(2, {(3, 0): 1, (0, 3): 1}))
    assert v.to_json() == {
        "accepted": False,
        "failure": {"kind": "support-not-mconvex", "delta": [0, 0], "witness": {"alpha": [3, 0], "beta": [0, 3], "i": 0}},
    }
    assert is_lorentzian(cubic).to_json() == {"accepted": True, "failure": None}


def test_definition_sides_sum_of_cubes():
    f = H.from_monomials(2, {(3, 0): 1, (0, 3): 1})
    lhs, rhs = definition_sides(f, [(1, 0), (0, 1), (1, 1)])
    assert (lhs, rhs) == (36, 0)
    w = falsify_definition(f, 200, seed=1)
    assert w is not None and w.lhs > w.rhs


def test_falsify_is_deterministic():
    f = H.from_monomials(3, {(2, 0, 1): 1, (0, 3, 0): 1})
    a = falsify_definition(f, 300, seed=4)
    b = falsify_definition(f, 300, seed=4)
    assert a == b


def test_falsify_cubic_finds_nothing(cubic):
    assert falsify_definition(cubic, 10_000, seed=0) is None


def test_falsify_certified_quadratics():
    q = product(H.linear([1, 2, 0]), H.linear([0, 1, 3]))
    assert is_lorentzian(q)
    assert falsify_definition(q, 500, seed=3) is None
    with pytest.raises(DimensionError):
        falsify_definition(H.linear([1, 1]), 5, seed=0)


def test_soundness_pairing():
    for k, f in enumerate(certified_corpus()):
        assert falsify_definition(f, 1000, seed=k) is None, f


def test_bivariate_examples():
    assert bivariate_lorentzian(H(2, 5, dict(zip([(5 - a, a) for a in range(6)], [1, 2, 3, 4, 2, 1]))))
    assert not bivariate_lorentzian(H(2, 2, {(2, 0): 1, (0, 2): 1}))
    assert not bivariate_lorentzian(H(2, 2, {(2, 0): 1, (1, 1): 1, (0, 2): 3}))
    with pytest.raises(DimensionError):
        bivariate_lorentzian(H.linear([1, 1, 1]))


@given(st.integers(0, 8), st.data())
def test_bivariate_agreement(d, data):
    p = data.draw(st.lists(st.integers(0, 9), min_size=d + 1, max_size=d + 1))
    f = H(2, d, {(d - a, a): c for a, c in enumerate(p)})
    assert bool(is_lorentzian(f)) == bivariate_lorentzian(f)


def test_coefficient_check_examples(cubic):
    assert coefficient_af_check(cubic)
    assert coefficient_af_check(H(2, 2, {(2, 0): 1, (1, 1): 3, (0, 2): 1}))
    v = coefficient_af_check(H(2, 2, {(2, 0): 3, (1, 1): 1, (0, 2): 3}))
    assert not v and v.violation.alpha == (1, 1) and (v.violation.lhs, v.violation.rhs) == (9, 1)


@given(polys(max_vars=4, max_degree=4))
def test_certified_polys_pass_coefficient_check(f):
    if is_lorentzian(f):
        assert coefficient_af_check(f)


@pytest.mark.parametrize("n", range(1, 7))
def test_elementary_symmetric_hessians(n):
    for d in range(1, n + 1):
        e = elementary_symmetric(n, d)
        assert is_lorentzian(e)
        if d < 2:
            continue
        lam = n - d + 1
        for delta in combinations(range(n), d - 2):
            q = e
            for i in delta:
                q = q.partial(i)
            Hs = q.hessian()
            m = len(Hs)
            pos, _, _ = inertia(Hs)
            assert pos == 1
            assert det([[Hs[i][j] - (lam if i == j else 0) for j in range(m)] for i in range(m)]) == 0


def test_product_and_minor_closure():
    corpus = certified_corpus(seed=3, size=16)
    rng = random.Random(8)
    for f in corpus:
        g = rng.choice([h for h in corpus if h.num_vars == f.num_vars] or [f])
        assert is_lorentzian(product(f, g))
        for j in range(f.num_vars):
            if f.degree > 1:
                assert is_lorentzian(f.delete(j))
                assert is_lorentzian(f.contract(j))


@given(polys(max_vars=3, max_degree=4, hi=4), st.permutations(range(3)), st.lists(st.integers(1, 5), min_size=3, max_size=3))
def test_verdict_invariant_under_relabeling(f, perm, weights):
    n = f.num_vars
    perm = [p for p in perm if p < n]
    base = bool(is_lorentzian(f))
    assert bool(is_lorentzian(f.permute(perm))) == base
    assert bool(is_lorentzian(f.rescale(weights[:n]))) == base
