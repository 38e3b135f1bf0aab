from fractions import Fraction

import pytest
from hypothesis import given
from strategies import gaussians, nonzero_gaussians, rationals

from su3kit import linalg
from su3kit.numbers import SQRT2, GaussianRational, I, ONE, SurdGaussian, format_rational, parse_rational


def test_parse_and_format_rational():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert parse_rational(" -7 ") == -7
    assert format_rational(Fraction(4, 2)) == "2/1"
    for bad in ("0.5", "1e3", "1/0x", ""):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_parse_gaussian():
    assert GaussianRational.parse("1/2-3/4*i") == GaussianRational(Fraction(1, 2), Fraction(-3, 4))
    assert GaussianRational.parse("-i") == -I
    assert I * I == -ONE


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a * b) * c == a * (b * c)


@given(nonzero_gaussians)
def test_inverse(a):
    assert a * a.inverse() == ONE
    assert (a * a.conj()).is_real()


@given(gaussians)
def test_json_round_trip(a):
    assert GaussianRational.from_json(a.to_json()) == a


def test_surd_arithmetic():
    assert SQRT2 * SQRT2 == SurdGaussian(2)
    x = SurdGaussian(GaussianRational(1, 1), GaussianRational(2))
    assert x * x.inverse() == SurdGaussian(1)
    assert x.conj().conj() == x
    assert SurdGaussian(-1, 1).is_positive_real()
    assert not SurdGaussian(1, -1).is_positive_real()


@given(rationals, rationals)
def test_surd_sign(a, b):
    x = SurdGaussian(a, b)
    if x.is_zero():
        return
    assert x.is_positive_real() == (float(a) + float(b) * 2 ** 0.5 > 0)


def test_linalg_basics():
    a = [[Fraction(2), Fraction(1)], [Fraction(4), Fraction(2)]]
    assert linalg.rank(a) == 1
    assert linalg.det(a) == 0
    assert linalg.solve(a, [Fraction(1), Fraction(3)]) is None
    b = [[GaussianRational(1, 1), ONE], [ONE, -I]]
    inv = linalg.inverse(b, one=ONE, zero=GaussianRational(0))
    prod = linalg.matmul(b, inv, zero=GaussianRational(0))
    assert prod == [[ONE, GaussianRational(0)], [GaussianRational(0), ONE]]
    null = linalg.nullspace([[Fraction(1), Fraction(1), Fraction(0)]], one=Fraction(1), zero=Fraction(0))
    assert len(null) == 2
