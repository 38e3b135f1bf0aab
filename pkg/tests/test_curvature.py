from fractions import Fraction

import pytest
from hypothesis import given
from strategies import curvatures, rationals

from su3kit.curvature import (
    CurvatureMinus,
    decompose,
    is_self_dual_einstein,
    normalization,
    twistor_space,
    twistor_structure_equation,
    twistor_torsion,
)
from su3kit.exterior import conjugate, hodge_star
from su3kit.numbers import GaussianRational, ZERO
from su3kit.su3 import ADMISSIBLE, GENERIC, NEARLY_CY_STRICT, NEARLY_KAHLER, sigma_basis, theta_basis


def _is_zero(m):
    return all(x.is_zero() for row in m for x in row)


def test_zero_input():
    d = decompose(CurvatureMinus())
    assert _is_zero(d.Z) and _is_zero(d.Wminus) and d.s == 0


@pytest.mark.parametrize("c2,s", [(1, 24), (-2, -48)])
def test_self_dual_einstein_examples(c2, s):
    rm = CurvatureMinus(C2=c2, a=-c2)
    assert is_self_dual_einstein(rm)
    d = decompose(rm)
    assert d.s == s and _is_zero(d.Z) and _is_zero(d.Wminus)


def test_not_self_dual_einstein():
    assert not is_self_dual_einstein(CurvatureMinus(C1=1, C2=1, a=-1))
    assert not is_self_dual_einstein(CurvatureMinus(C2=GaussianRational(1, 1), a=-1))


def test_real_parts_required():
    with pytest.raises(ValueError):
        CurvatureMinus(a=GaussianRational(0, 1))


@given(curvatures())
def test_decomposition_identities(rm):
    d = decompose(rm)
    assert d.Wminus[0][0] + d.Wminus[1][1] + d.Wminus[2][2] == ZERO
    assert d.reassemble() == rm.matrix()


@given(curvatures())
def test_two_form_round_trip(rm):
    r1, r2 = rm.two_forms()
    # the first component is purely imaginary
    assert conjugate(r1) == -r1
    assert CurvatureMinus.from_two_forms(r1, r2) == rm


@given(curvatures())
def test_json_round_trip(rm):
    assert CurvatureMinus.from_json(rm.to_json()) == rm


def test_bases_duality():
    assert all(hodge_star(f) == -f for f in theta_basis())
    assert all(hodge_star(f) == f for f in sigma_basis())


def test_twistor_examples():
    N, cls = twistor_torsion(24)
    assert N == [[1, 0, 0], [0, 1, 0], [0, 0, 1]] and cls.tag == NEARLY_KAHLER
    N, cls = twistor_torsion(-48)
    assert [N[i][i] for i in range(3)] == [1, 1, -2] and cls.tag == NEARLY_CY_STRICT
    N, cls = twistor_torsion(0)
    assert [N[i][i] for i in range(3)] == [1, 1, 0] and cls.tag == ADMISSIBLE


def test_twistor_structure_equation():
    sp = twistor_space()
    d = twistor_structure_equation(-48, sp)
    assert d[2].coeff("wb1", "wb2").constant == -2
    w = {sp.idx(f"w{k}") for k in (1, 2, 3)}
    wb = {sp.idx(f"wb{k}") for k in (1, 2, 3)}
    for form in d:
        for key in form.terms:
            # torsion columns only involve the conjugate coframe
            assert not (set(key) & w and set(key) <= w | wb)


@given(rationals)
def test_twistor_trace(s):
    N, cls = twistor_torsion(s)
    assert all(N[i][j] == N[j][i].conj() for i in range(3) for j in range(3))
    assert N[0][0] + N[1][1] + N[2][2] == 2 + s / 24
    assert cls.tag != GENERIC
    assert (cls.tag == NEARLY_CY_STRICT) == (s == -48)


@pytest.mark.parametrize("s,target", [(48, 24), (3, 24), (-96, -48), (Fraction(-1, 2), -48), (0, 0)])
def test_normalization(s, target):
    assert Fraction(s) / normalization(s) == target
