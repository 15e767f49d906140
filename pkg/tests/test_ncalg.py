import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from osdeform.ncalg import (
    EmptyPolynomialError,
    GroundOrder,
    InvalidInputError,
    NonSpecializableError,
    OrderMismatchError,
    ParseError,
    Poly,
    QEvaluation,
    deglex_compare,
    evaluate_q,
    parse_poly,
    print_poly,
)
from osdeform.osgb import del_minus

from oracles import all_keys, padded_compare, random_order, random_poly

O3 = GroundOrder.natural(3)
O4 = GroundOrder.natural(4)


def t(order, *labels):
    """Monomial in 1-based labels, as in the text syntax."""
    return Poly.monomial(order, tuple(x - 1 for x in labels))


# deglex

@pytest.mark.parametrize("a, b, expected", [
    ((0, (0, 1)), (0, (0,)), 1),
    ((0, (1, 0)), (0, (0, 1)), 1),
    ((2, ()), (0, (0, 1)), -1),
    ((1, (0,)), (1, (0,)), 0),
])
def test_deglex_examples(a, b, expected):
    assert deglex_compare(a, b, O3) == expected


def test_deglex_rejects_bad_labels():
    with pytest.raises(InvalidInputError):
        deglex_compare((0, (3,)), (0, ()), O3)
    with pytest.raises(InvalidInputError):
        deglex_compare((-1, ()), (0, ()), O3)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_deglex_matches_padded_oracle_exhaustively(n):
    rng = random.Random(n)
    for order in {GroundOrder.natural(n), random_order(rng, n)}:
        keys = list(all_keys(n, 3))
        for a in keys:
            for b in keys:
                assert deglex_compare(a, b, order) == padded_compare(a, b, order)


def test_deglex_total_and_wellfounded():
    # n = 4, degree <= 4: sorted keys form a chain and each key has finitely many predecessors
    keys = list(all_keys(4, 4))
    keys.sort(key=O4.sort_key)
    for a, b in zip(keys, keys[1:]):
        assert deglex_compare(a, b, O4) == -1
    # every key of degree d sits above all keys of lower degree
    by_degree = {}
    for i, (e, w) in enumerate(keys):
        by_degree.setdefault(e + len(w), []).append(i)
    for d in range(1, 5):
        assert min(by_degree[d]) == max(by_degree[d - 1]) + 1


def test_deglex_compatible_with_multiplication():
    rng = random.Random(7)
    for _ in range(500):
        order = random_order(rng, 4)
        d = rng.randint(0, 3)
        keys = [k for k in all_keys(4, 3) if k[0] + len(k[1]) == d]
        a, b = rng.choice(keys), rng.choice(keys)
        u = tuple(rng.randrange(4) for _ in range(rng.randint(0, 2)))
        v = tuple(rng.randrange(4) for _ in range(rng.randint(0, 2)))
        e = rng.randint(0, 2)
        wa = (a[0] + e, u + a[1] + v)
        wb = (b[0] + e, u + b[1] + v)
        assert deglex_compare(wa, wb, order) == deglex_compare(a, b, order)


# arithmetic

def test_add_examples():
    assert t(O3, 1, 2) + (-t(O3, 1, 2)) == 0
    s = t(O3, 1) + t(O3, 2)
    assert [x.word for x in s.terms()] == [(1,), (0,)]
    s = Poly.q(O3) + t(O3, 1, 1)
    assert print_poly(s) == "t1*t1 + q"


def test_multiply_examples():
    assert t(O3, 1) * t(O3, 2) != t(O3, 2) * t(O3, 1)
    assert (t(O3, 1) * t(O3, 2)).terms()[0].word == (0, 1)
    t0 = Poly.monomial(O3, (), t0exp=1)
    assert t0 * t(O3, 1) == t(O3, 1) * t0 == Poly.monomial(O3, (0,), t0exp=1)
    lhs = (t(O3, 1) - t(O3, 2)) * (t(O3, 1) + t(O3, 2))
    assert lhs == t(O3, 1, 1) + t(O3, 1, 2) - t(O3, 2, 1) - t(O3, 2, 2)


def test_order_mismatch():
    with pytest.raises(OrderMismatchError):
        t(O3, 1) + Poly.var(O3.reversed(), 0)
    with pytest.raises(OrderMismatchError):
        t(O3, 1) * Poly.var(O3.reversed(), 0)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_ring_laws(seed):
    rng = random.Random(seed)
    order = random_order(rng, 3)
    f, g, h = (random_poly(rng, order) for _ in range(3))
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f + g) * h == f * h + g * h
    assert f + g == g + f
    assert f - f == 0


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_t0_is_central(seed):
    rng = random.Random(seed)
    order = random_order(rng, 3)
    f = random_poly(rng, order, even=False)
    z = Poly.monomial(order, (), t0exp=rng.randint(1, 3), coeff=rng.choice([-2, 1, 5]))
    assert z * f == f * z


def test_leading():
    d = del_minus([0, 1, 2], O3)
    lt = d.leading()
    assert (lt.coeff, lt.t0exp, lt.word) == (1, 0, (1, 2))
    assert Poly.const(O3, 5).leading() == (5, 0, ())
    assert del_minus(range(4), O4).leading().word == (1, 2, 3)
    with pytest.raises(EmptyPolynomialError):
        Poly.zero(O3).leading()


def test_terms_sorted_decreasing():
    rng = random.Random(1)
    for _ in range(50):
        order = random_order(rng, 3)
        f = random_poly(rng, order, max_terms=8)
        keys = [x.key for x in f.terms()]
        for a, b in zip(keys, keys[1:]):
            assert padded_compare(a, b, order) == 1


# specialisation

def test_evaluate_q():
    assert evaluate_q(t(O3, 1, 1) - Poly.q(O3), QEvaluation(0)) == t(O3, 1, 1)
    assert evaluate_q(Poly.q(O3), 3) == 3
    assert evaluate_q(Poly.q(O3) ** 2, 3) == 9
    d = del_minus([0, 1, 2], O3)
    assert evaluate_q(d, 1) == t(O3, 2, 3) - t(O3, 1, 3) + t(O3, 1, 2) - 1
    with pytest.raises(NonSpecializableError):
        evaluate_q(Poly.monomial(O3, (0,), t0exp=1), 1)


# text I/O

def test_parse_examples():
    p = parse_poly("t1*t2 - t2*t1", O3)
    assert len(p) == 2 and p == t(O3, 1, 2) - t(O3, 2, 1)
    p = parse_poly("q^2*t3 + 2", O3)
    assert p == Poly.monomial(O3, (2,), t0exp=4) + 2
    text = "t2*t3*t4 - t1*t3*t4 + t1*t2*t4 - t1*t2*t3 - q*t4 + q*t3 - q*t2 + q*t1"
    assert parse_poly(text, O4) == del_minus(range(4), O4)


def test_parse_exponents_and_constants():
    assert parse_poly("t1^2", O3) == t(O3, 1, 1)
    assert parse_poly("3*t2*2", O3) == 6 * t(O3, 2)
    assert parse_poly("-t1 + t1", O3) == 0
    assert parse_poly(" t0^3 * t1 ", O3) == Poly.monomial(O3, (0,), t0exp=3)
    assert parse_poly("q*t1*q", O3) == Poly.monomial(O3, (0,), t0exp=4)


@pytest.mark.parametrize("text, pos", [
    ("t1 +", 4),
    ("t1 ** t2", 4),
    ("x1", 0),
    ("t1 t2", 3),
    ("", 0),
    ("q^", 2),
])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_poly(text, O3)
    assert info.value.pos == pos


def test_parse_unknown_variable():
    with pytest.raises(ParseError, match="unknown variable t4"):
        parse_poly("t1*t4", O3)


def test_print_examples():
    assert print_poly(Poly.zero(O3)) == "0"
    assert print_poly(Poly.q(O3)) == "q"
    assert print_poly(-2 * Poly.q(O3) + t(O3, 2, 1)) == "t2*t1 - 2*q"
    assert print_poly(Poly.monomial(O3, (0,), t0exp=3, coeff=-1)) == "-q*t0*t1"
    assert print_poly(Poly.const(O3, -4)) == "-4"


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32), st.booleans())
def test_parse_print_round_trip(seed, even):
    rng = random.Random(seed)
    order = random_order(rng, 4)
    f = random_poly(rng, order, max_terms=6, even=even)
    assert parse_poly(print_poly(f), order) == f


def test_round_trip_on_generated_polys():
    for k in range(1, 5):
        for J in combinations(range(4), k):
            f = del_minus(J, O4)
            assert parse_poly(print_poly(f), O4) == f
