import random
from fractions import Fraction

from hopfgraphs.qpoly import MINUS_ONE, ONE, Q, ZERO, QPoly, parse_rational


def rand_poly(rng, deg=4):
    terms = {}
    for _ in range(rng.randint(0, 4)):
        terms[rng.randint(0, deg)] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    out = ZERO
    for e, c in terms.items():
        out = out + QPoly.q_power(e).scale(c)
    return out


def test_normalization_unique():
    a = Q + ONE
    b = ONE + Q
    assert a == b
    assert hash(a) == hash(b)
    assert (Q - Q) == ZERO
    assert not (Q - Q)
    assert ZERO.terms == ()


def test_basic_arithmetic():
    assert Q * Q == QPoly.q_power(2)
    assert (Q + ONE) * (Q - ONE) == QPoly.q_power(2) - ONE
    assert MINUS_ONE * MINUS_ONE == ONE
    assert (Q + ONE) ** 2 == QPoly.q_power(2) + Q.scale(2) + ONE


def test_ring_axioms_random_triples():
    rng = random.Random(7)
    for _ in range(200):
        a, b, c = rand_poly(rng), rand_poly(rng), rand_poly(rng)
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)


def test_eval_is_ring_morphism():
    rng = random.Random(11)
    for r in (Fraction(0), Fraction(1), Fraction(1, 2), Fraction(-3)):
        for _ in range(50):
            a, b = rand_poly(rng), rand_poly(rng)
            assert (a * b).eval_at(r) == a.eval_at(r) * b.eval_at(r)
            assert (a + b).eval_at(r) == a.eval_at(r) + b.eval_at(r)


def test_eval_examples():
    assert Q.eval_at(0) == 0
    assert (QPoly.q_power(2) + ONE).eval_at(1) == 2
    assert Q.scale(3).eval_at(Fraction(1, 2)) == Fraction(3, 2)


def test_json_roundtrip():
    rng = random.Random(3)
    for _ in range(50):
        a = rand_poly(rng)
        assert QPoly.from_json(a.to_json()) == a
    assert (Q + ONE).to_json() == [[0, "1/1"], [1, "1/1"]]


def test_str_forms():
    assert str(ZERO) == "0"
    assert str(ONE) == "1"
    assert str(Q + ONE) == "q+1"
    assert str(QPoly.q_power(2).scale(2) - Q) == "2q^2-q"


def test_parse_rational():
    assert parse_rational("3") == 3
    assert parse_rational("-2/5") == Fraction(-2, 5)
