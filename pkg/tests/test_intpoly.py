from itertools import combinations
from math import comb

import pytest
from hypothesis import given, strategies as st

from orthdet.intpoly import (
    IntPoly,
    cyclotomic,
    cyclotomic_at_one,
    gaussian_binomial,
    q_int,
)

small_polys = st.lists(st.integers(-9, 9), max_size=6).map(IntPoly)


def test_q_int_values():
    assert q_int(1) == IntPoly([1])
    assert q_int(4) == IntPoly([1, 1, 1, 1])
    assert q_int(5)(3) == 121 == (3**5 - 1) // 2


def test_q_int_rejects_nonpositive():
    with pytest.raises(ValueError):
        q_int(0)
    with pytest.raises(ValueError):
        q_int(-2)


def test_cyclotomic_base_cases():
    assert cyclotomic(1) == IntPoly([-1, 1])
    assert cyclotomic(2) == IntPoly([1, 1])
    assert cyclotomic(4) == IntPoly([1, 0, 1])
    assert cyclotomic(6) == IntPoly([1, -1, 1])


def test_cyclotomic_two_power_form():
    for e in range(1, 8):
        expected = IntPoly.monomial(2 ** (e - 1)) + 1
        assert cyclotomic(2**e) == expected


def test_cyclotomic_product_identity():
    for n in range(1, 61):
        product = IntPoly.one()
        for d in range(1, n + 1):
            if n % d == 0:
                product = product * cyclotomic(d)
        assert product == IntPoly.monomial(n) - 1


def test_cyclotomic_at_one_examples():
    assert cyclotomic_at_one(9) == 3
    assert cyclotomic_at_one(1) == 0
    assert cyclotomic_at_one(12) == 1


def test_cyclotomic_at_one_matches_evaluation():
    for n in range(1, 201):
        assert cyclotomic(n)(1) == cyclotomic_at_one(n)


def _span_f3(v1, v2):
    return frozenset(
        tuple((a * x + b * y) % 3 for x, y in zip(v1, v2)) for a in range(3) for b in range(3)
    )


def _count_planes_f3_dim4():
    vectors = [
        (a, b, c, d) for a in range(3) for b in range(3) for c in range(3) for d in range(3)
    ]
    nonzero = [v for v in vectors if any(v)]
    planes = set()
    for v1, v2 in combinations(nonzero, 2):
        span = _span_f3(v1, v2)
        if len(span) == 9:
            planes.add(span)
    return len(planes)


def test_gaussian_binomial_counts_subspaces():
    # independent oracle: enumerate the 2-dim subspaces of F_3^4 directly
    assert gaussian_binomial(4, 2, 3) == _count_planes_f3_dim4() == 130


def test_gaussian_binomial_small_cases():
    for q in (2, 3, 5, 9):
        assert gaussian_binomial(2, 1, q) == q + 1
    assert gaussian_binomial(3, 1, 5) == 31 == (5**3 - 1) // 4
    assert gaussian_binomial(5, 0, 3) == 1
    assert gaussian_binomial(5, 5, 3) == 1


def test_gaussian_binomial_symmetry():
    for n in range(7):
        for k in range(n + 1):
            assert gaussian_binomial(n, k, 3) == gaussian_binomial(n, n - k, 3)


def test_gaussian_binomial_mod_two_matches_binomial():
    for q in (3, 5, 7, 9):
        for n in range(11):
            for k in range(n + 1):
                assert gaussian_binomial(n, k, q) % 2 == comb(n, k) % 2


def test_gaussian_binomial_rejects_bad_arguments():
    with pytest.raises(ValueError):
        gaussian_binomial(3, 4, 5)
    with pytest.raises(ValueError):
        gaussian_binomial(3, 1, 1)


def test_evaluation_examples():
    assert IntPoly()(12345) == 0
    assert cyclotomic(4)(3) == 10
    assert (IntPoly([2, 0, -1]))(5) == 2 - 25


def test_exact_division_guard():
    with pytest.raises(ValueError):
        (IntPoly.monomial(2) + 1).exact_div(IntPoly([1, 1]))


def test_divmod_reconstructs():
    a = q_int(6) * cyclotomic(4) + IntPoly([3])
    quotient, rem = divmod(a, cyclotomic(4))
    assert quotient * cyclotomic(4) + rem == a


@given(small_polys, small_polys, st.integers(-50, 50))
def test_evaluation_is_ring_morphism(p, r, x):
    assert (p + r)(x) == p(x) + r(x)
    assert (p * r)(x) == p(x) * r(x)


@given(small_polys, st.sampled_from([3, 5, 7, 9, 27, 81]))
def test_values_at_one_and_odd_q_agree_mod_two(p, q):
    assert (p(1) - p(q)) % 2 == 0


@given(small_polys, st.integers(0, 5))
def test_power_matches_repeated_product(p, e):
    expected = IntPoly.one()
    for _ in range(e):
        expected = expected * p
    assert p**e == expected


def test_json_round_trip():
    p = IntPoly([10**30, -2, 0, 7])
    data = p.to_json()
    assert data == {"coeffs": [str(10**30), "-2", "0", "7"]}
    assert IntPoly.from_json(data) == p
