"""Acceptance criteria. Each test carries a ``criterion`` marker and the
terminal summary prints one PASS/FAIL line per criterion."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from strategies import R4, R6, UNITARY, curvatures, forms, rationals, vectors

from su3kit import calibration as cal
from su3kit.cartan import (
    build_admissible_system,
    build_nearly_cy_system,
    cartan_test,
    default_flag,
    gens,
    im,
    polar_rank,
    polar_relation_check,
    polar_relation_terms,
    random_flag,
    re,
)
from su3kit.curvature import CurvatureMinus, decompose, twistor_torsion
from su3kit.exterior import conjugate, contract, fiber_projection, hodge_star, interior, rank_one_forms, substitute, wedge
from su3kit.numbers import I, ONE, ZERO
from su3kit.quaternion import (
    GROUPS,
    SP2,
    SP11,
    Quaternion,
    consistency_defects,
    component_map,
    d_squared,
    induced_generator_map,
    involution_action,
    match_structure_equation,
    maurer_cartan_derive,
    sample_fixed_locus,
)
from su3kit.su3 import NEARLY_CY_STRICT, NEARLY_KAHLER, model_forms, su_forms

criterion = pytest.mark.criterion


@pytest.fixture(scope="module")
def ncy():
    return build_nearly_cy_system()


# 1 -------------------------------------------------------------------------


@criterion(1, "nearly Calabi-Yau Cartan test: rank 34, characters (0,0,1,3,6,9,9), involutive")
def test_nearly_cy_cartan(ncy):
    r = cartan_test(ncy)
    assert r.integral_rank == 34
    assert r.s == (0, 0, 1, 3, 6, 9, 9)
    s = r.s
    assert 6 * s[0] + 5 * s[1] + 4 * s[2] + 3 * s[3] + 2 * s[4] + s[5] == 34
    assert r.involutive and r.test_lhs == r.test_rhs == 34


# 2 -------------------------------------------------------------------------


@criterion(2, "admissible Cartan test: a0=1 involutive with (0,0,1,3,6,10,15); a0=0 not involutive")
def test_admissible_cartan_regular():
    r = cartan_test(build_admissible_system(a0=1, u0=(0, 0, 0)))
    assert r.integral_rank == 35
    assert r.s == (0, 0, 1, 3, 6, 10, 15)
    assert (r.c[3], r.c[4], r.c[5]) == (4, 10, 20)
    assert r.involutive


@criterion(2, "admissible Cartan test: a0=1 involutive with (0,0,1,3,6,10,15); a0=0 not involutive")
def test_admissible_cartan_degenerate():
    r = cartan_test(build_admissible_system(a0=0))
    assert r.c[5] <= 17
    assert not r.involutive


# 3 -------------------------------------------------------------------------


def _listed_polar_forms(G):
    k, b, mu = G.k, G.b, G.mu
    tr = k[1, 1] + k[2, 2] + k[3, 3]
    return [
        -2 * im(k[1, 2]) - im(b[1, 2] - b[2, 1]),
        -2 * im(k[1, 3]) - im(b[1, 3] - b[3, 1]),
        -2 * im(k[2, 3]) - im(b[2, 3] - b[3, 2]),
        mu + im(b[1, 1] + b[2, 2] + b[3, 3]),
        -2 * k[1, 1],
        -2 * re(k[1, 2]) - re(b[1, 2] - b[2, 1]),
        -2 * re(k[1, 3]) - re(b[1, 3] - b[3, 1]),
        -2 * re(b[3, 1]),
        2 * re(b[2, 1]),
        -1 * tr + re(-1 * b[1, 1] + b[2, 2] + b[3, 3]),
        -2 * re(k[1, 2]) + re(b[1, 2] - b[2, 1]),
        -2 * k[2, 2],
        -2 * re(k[3, 2]) + re(b[3, 2] - b[2, 3]),
        -2 * im(k[1, 2]) + im(b[1, 2] - b[2, 1]),
        -2 * re(b[3, 2]),
        -1 * tr + re(-1 * b[1, 1] + b[2, 2] - b[3, 3]),
        2 * im(b[3, 1]),
        -2 * re(b[1, 2]),
        2 * im(b[3, 2]),
        -1 * mu + im(b[1, 1] + b[2, 2] - b[3, 3]),
    ]


@criterion(3, "polar relation vanishes exactly; the 20 listed polar forms have rank 19")
def test_polar_relation(ncy):
    terms = polar_relation_terms(ncy)
    assert sum(terms[1:], terms[0]).is_zero()
    assert polar_relation_check(ncy)
    listed = _listed_polar_forms(gens(ncy.space))
    assert len(listed) == 20
    assert rank_one_forms(listed) == 19
    assert polar_rank(ncy, default_flag(ncy.space)[:5]) == 19


# 4 -------------------------------------------------------------------------


@criterion(4, "random rational flags reproduce the nearly Calabi-Yau characters")
@settings(max_examples=20, deadline=None, derandomize=True)
@given(st.integers(0, 2**31))
def test_flag_genericity(ncy, seed):
    flag = random_flag(ncy.space, random.Random(seed))
    r = cartan_test(ncy, flag)
    assert r.c == (0, 0, 1, 4, 10, 19)
    assert r.s == (0, 0, 1, 3, 6, 9, 9)


@criterion(4, "random rational flags reproduce the nearly Calabi-Yau characters")
def test_flag_genericity_seeded(ncy):
    seen = set()
    for seed in range(20):
        flag = random_flag(ncy.space, random.Random(seed))
        seen.add(tuple(polar_rank(ncy, flag[:k]) for k in range(6)))
    assert seen == {(0, 0, 1, 4, 10, 19)}


# 5 -------------------------------------------------------------------------


@criterion(5, "curvature decomposition: traceless Weyl part, exact reassembly, self-dual Einstein case")
@settings(max_examples=1000, deadline=None)
@given(curvatures())
def test_curvature_decomposition(rm):
    d = decompose(rm)
    assert d.Wminus[0][0] + d.Wminus[1][1] + d.Wminus[2][2] == ZERO
    assert d.reassemble() == rm.matrix()


@criterion(5, "curvature decomposition: traceless Weyl part, exact reassembly, self-dual Einstein case")
@given(rationals)
def test_self_dual_einstein(c2):
    rm = CurvatureMinus(C2=c2, a=-c2)
    d = decompose(rm)
    assert all(x.is_zero() for row in d.Z + d.Wminus for x in row)
    assert d.s == 24 * c2


# 6 -------------------------------------------------------------------------


@criterion(6, "twistor torsion: s=24 nearly Kahler, s=-48 strictly nearly Calabi-Yau, trace 2+s/24")
def test_twistor_torsion():
    N, cls = twistor_torsion(24)
    assert N == [[ONE if i == j else ZERO for j in range(3)] for i in range(3)]
    assert cls.tag == NEARLY_KAHLER
    N, cls = twistor_torsion(-48)
    assert N == [[ONE, ZERO, ZERO], [ZERO, ONE, ZERO], [ZERO, ZERO, ONE * -2]]
    assert cls.tag == NEARLY_CY_STRICT
    rng = random.Random(6)
    for _ in range(20):
        s = Fraction(rng.randint(-500, 500), rng.randint(1, 30))
        N, _ = twistor_torsion(s)
        assert N[0][0] + N[1][1] + N[2][2] == 2 + s / 24


# 7 -------------------------------------------------------------------------


@criterion(7, "Maurer-Cartan structure equations match for Sp(2) and Sp(1,1); d^2 = 0")
@pytest.mark.parametrize("group,torsion", [(SP2, 1), (SP11, -2)])
def test_maurer_cartan(group, torsion):
    rep = match_structure_equation(group)
    assert rep.match, rep.diffs
    assert maurer_cartan_derive(group)["w3"].coeff("wb1", "wb2").constant == torsion
    assert consistency_defects(component_map(group)) == []
    assert all(f.is_zero() for f in d_squared(group).values())


# 8 -------------------------------------------------------------------------


@criterion(8, "involution C: omega_i to conjugates, automorphism on 100 pairs, C*Omega=-Omega, C*Psi=conj Psi")
@pytest.mark.parametrize("group", GROUPS)
def test_involution(group):
    rep = involution_action(group, samples=100, seed=8)
    assert rep.automorphism_samples == 100
    assert rep.omega_to_conjugate and rep.automorphism_ok and rep.squares_to_identity
    basis = component_map(group)
    sp = basis.space
    images = induced_generator_map(basis)
    for k in (1, 2, 3):
        assert images[sp.idx(f"w{k}")] == sp.gen(f"wb{k}")
    Omega, Psi = su_forms(sp.gens("w1", "w2", "w3"), sp.gens("wb1", "wb2", "wb3"))
    assert substitute(Omega, images) == -Omega
    assert substitute(Psi, images) == conjugate(Psi)


@criterion(8, "involution C: omega_i to conjugates, automorphism on 100 pairs, C*Omega=-Omega, C*Psi=conj Psi")
def test_involution_automorphism_pairs():
    rng = random.Random(88)

    def q():
        return Quaternion(
            Fraction(rng.randint(-9, 9), rng.randint(1, 9)) + I * Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
            Fraction(rng.randint(-9, 9), rng.randint(1, 9)) + I * Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
        )

    for _ in range(100):
        p, r = q(), q()
        assert (p * r).C() == p.C() * r.C()


# 9 -------------------------------------------------------------------------


@criterion(9, "fixed loci: 100 exact samples each on RP^3 and the pseudo-projective space")
@pytest.mark.parametrize("group", GROUPS)
def test_fixed_loci(group):
    records = sample_fixed_locus(group, 100, seed=9)
    assert len(records) == 100
    assert len({r.point for r in records}) > 90
    bad = [r.to_json() for r in records if not r.ok]
    assert not bad, bad[:3]


# 10 ------------------------------------------------------------------------


@criterion(10, "calibration: lambda(R^3)=1, SU(3) invariance, McLean identity, witness residuals")
def test_calibration():
    assert cal.lambda_phase(cal.STANDARD_PLANE) == ONE
    twisted = cal.Plane3(((0, 0, 0, 1, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0)))
    rng = random.Random(10)
    for _ in range(50):
        U = cal.random_su3(rng)
        assert cal.is_special_unitary(U)
        E = cal.apply_to_plane(U, cal.STANDARD_PLANE)
        assert cal.lambda_phase(E) == ONE
        assert cal.lambda_phase(cal.apply_to_plane(U, twisted)) == I
        coeffs = [rng.randint(-5, 5) for _ in range(3)]
        if not any(coeffs):
            coeffs[0] = 1
        normals = cal.normal_vectors(E)
        V = tuple(sum(c * n[i] for c, n in zip(coeffs, normals)) for i in range(6))
        assert cal.mclean_identity(E, V)
        A = cal.su3_witness(E)
        assert max(cal.witness_residuals(A, E).values()) < 1e-9


# 11 ------------------------------------------------------------------------


def _deg(f):
    return next(iter(f.degrees())) if f.terms else 0


@criterion(11, "core algebra identities: antisymmetry, antiderivation, conjugation, Hodge, model volumes")
@given(forms(), forms(), vectors())
def test_core_wedge_and_interior(a, b, v):
    assert wedge(a, b) == wedge(b, a) * (-1) ** (_deg(a) * _deg(b))
    assert interior(v, wedge(a, b)) == wedge(interior(v, a), b) + wedge(a, interior(v, b)) * (-1) ** _deg(a)


@criterion(11, "core algebra identities: antisymmetry, antiderivation, conjugation, Hodge, model volumes")
@given(forms(space=UNITARY), st.sampled_from([R4, R6]), st.data())
def test_core_conjugation_and_hodge(f, space, data):
    assert conjugate(conjugate(f)) == f
    n = len(space)
    k = data.draw(st.integers(0, n))
    g = data.draw(forms(space=space, degree=k))
    assert hodge_star(hodge_star(g)) == g * (-1) ** (k * (n - k))


@criterion(11, "core algebra identities: antisymmetry, antiderivation, conjugation, Hodge, model volumes")
def test_core_model_volumes():
    m = model_forms(3)
    dx = m.space.gens(*(f"dx{k}" for k in range(1, 7)))
    # dx1 ^ dy1 ^ dx2 ^ dy2 ^ dx3 ^ dy3
    vol = wedge(dx[0], dx[3], dx[1], dx[4], dx[2], dx[5])
    assert wedge(m.Omega0, m.Omega0, m.Omega0) == vol * 6
    assert wedge(m.Psi0, conjugate(m.Psi0)) * I == vol * 8
