from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from strategies import R4, R6, UNITARY, forms, gaussians, vectors

from su3kit.exterior import (
    Form,
    GeneratorSpace,
    NotDegreeOne,
    ParamCoeff,
    ParametricInput,
    SpaceMismatch,
    UnsupportedSpace,
    VectorSlot,
    complex_param,
    conjugate,
    contract,
    evaluate,
    exterior_derivative,
    hodge_star,
    interior,
    rank_one_forms,
    substitute,
    volume_form,
    wedge,
)
from su3kit.numbers import GaussianRational, I, ONE


def _deg(f):
    return next(iter(f.degrees())) if f.terms else 0


@given(forms(), forms())
def test_graded_antisymmetry(a, b):
    sign = (-1) ** (_deg(a) * _deg(b))
    assert wedge(a, b) == wedge(b, a) * sign


@given(forms(max_terms=3), forms(max_terms=3), forms(max_terms=3))
@settings(max_examples=50)
def test_wedge_associative(a, b, c):
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


@given(vectors(), forms(), forms())
def test_interior_antiderivation(v, a, b):
    lhs = interior(v, wedge(a, b))
    rhs = wedge(interior(v, a), b) + wedge(a, interior(v, b)) * (-1) ** _deg(a)
    assert lhs == rhs


@given(vectors(), forms())
def test_interior_squares_to_zero(v, a):
    assert interior(v, interior(v, a)).is_zero()


@given(forms(space=UNITARY))
def test_conjugation_is_involution(f):
    assert conjugate(conjugate(f)) == f


@given(forms(space=UNITARY), forms(space=UNITARY))
def test_conjugation_multiplicative(a, b):
    assert conjugate(wedge(a, b)) == wedge(conjugate(a), conjugate(b))


@pytest.mark.parametrize("space", [R4, R6])
@given(data=st.data())
def test_hodge_star_squared(space, data):
    n = len(space)
    k = data.draw(st.integers(0, n))
    f = data.draw(forms(space=space, degree=k))
    assert hodge_star(hodge_star(f)) == f * (-1) ** (k * (n - k))


def test_contraction_uses_first_slot():
    dx1, dx2, dx3 = R6.gens("dx1", "dx2", "dx3")
    e1 = VectorSlot(R6, {0: 1})
    e2 = VectorSlot(R6, {1: 1})
    f = wedge(dx1, dx2, dx3)
    assert contract([e1], f) == wedge(dx2, dx3)
    assert contract([e2], f) == -wedge(dx1, dx3)
    # v ^ w = v (x) w - w (x) v
    assert evaluate(wedge(dx1, dx2), [e1, e2]).constant == 1


def test_hodge_star_examples():
    dx = R6.gens(*(f"dx{k}" for k in range(1, 7)))
    assert hodge_star(dx[0]) == wedge(*dx[1:])
    assert hodge_star(R6.one()) == volume_form(R6)
    with pytest.raises(UnsupportedSpace):
        hodge_star(UNITARY.gen("w1"))


def test_exterior_derivative_and_substitution():
    sp = GeneratorSpace.real(3, prefix="e")
    e1, e2, e3 = sp.gens("e1", "e2", "e3")
    # so(3)-type structure equations: d e1 = e2 ^ e3 and cyclic
    d = {0: wedge(e2, e3), 1: wedge(e3, e1), 2: wedge(e1, e2)}
    for g in (e1, e2, e3):
        assert exterior_derivative(exterior_derivative(g, d), d).is_zero()
    swapped = substitute(wedge(e1, e2), {0: e2, 1: e1})
    assert swapped == -wedge(e1, e2)


def test_parametric_coefficients():
    z, zb = complex_param("z")
    f = Form.from_names(UNITARY, {("w1", "w2"): ParamCoeff(0, {z: I})})
    g = conjugate(f)
    assert g.coeff("wb1", "wb2") == ParamCoeff(0, {zb: -I})
    assert f.coeff("w2", "w1") == ParamCoeff(0, {z: -I})
    val = f.evaluate_params({z: GaussianRational(2, 1), zb: GaussianRational(2, -1)})
    assert val.coeff("w1", "w2").constant == GaussianRational(-1, 2)
    with pytest.raises(ParametricInput):
        exterior_derivative(f, {})


@given(forms(space=UNITARY, coeffs=gaussians))
def test_json_round_trip(f):
    assert Form.from_json(f.to_json(), UNITARY) == f
    assert Form.from_json(f.to_json()).terms == f.terms


def test_json_round_trip_with_params():
    z, _ = complex_param("A_123")
    f = Form.from_names(UNITARY, {("w1", "wb1"): ParamCoeff(Fraction(1, 2), {z: ONE})})
    back = Form.from_json(f.to_json())
    assert back.terms == f.terms
    assert next(iter(back.params())).conj_name == "A_123*"


def test_errors():
    with pytest.raises(SpaceMismatch):
        wedge(R4.gen("dx1"), R6.gen("dx1"))
    with pytest.raises(NotDegreeOne):
        rank_one_forms([wedge(*R4.gens("dx1", "dx2"))])
    with pytest.raises(ValueError):
        GeneratorSpace(("a", "b"), (1, 1))
    assert rank_one_forms(R6.gens("dx1", "dx2") + [R6.gen("dx1") * 3]) == 2
