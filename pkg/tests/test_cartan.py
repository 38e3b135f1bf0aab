import random
from fractions import Fraction
from dataclasses import replace
from itertools import combinations

import pytest

from su3kit.cartan import (
    EDSSystem,
    _d_psi_beta,
    build_admissible_system,
    build_nearly_cy_system,
    cartan_test,
    characters,
    default_flag,
    derived_admissible,
    derived_nearly_cy,
    gens,
    im,
    integral_element_rank,
    polar_forms,
    polar_rank,
    polar_relation_check,
    polar_relation_terms,
    random_flag,
    re,
)
from su3kit.exterior import VectorSlot, conjugate, contract, fiber_projection, rank_one_forms
from su3kit.numbers import GaussianRational


@pytest.fixture(scope="module")
def ncy():
    return build_nearly_cy_system()


@pytest.fixture(scope="module")
def adm():
    return build_admissible_system(a0=1)


def test_generator_count(ncy):
    # 6 independence + 9 kappa + 18 beta + 1 mu
    assert len(ncy.space) == 34
    assert len(ncy.space.independence) == 6
    assert ncy.real_fiber_dimension() == 28


def test_ideal_is_real_and_parameter_free(ncy, adm):
    for sys_ in (ncy, adm):
        for g in sys_.ideal_gens:
            assert conjugate(g) == g
            assert g.is_constant()
        assert sys_.check_substitution()


def test_displayed_coefficients(ncy, adm):
    assert ncy.ideal_gens[1].coeff("mu", "w1", "w2", "w3").constant == Fraction(-1, 2)
    assert adm.ideal_gens[1].coeff("mu", "w1", "w2", "w3").constant == Fraction(-1, 2)


def test_ideal_matches_structure_equations(ncy):
    dOmega, dpsi = derived_nearly_cy(gens(ncy.space))
    assert (dOmega, dpsi) == ncy.ideal_gens


@pytest.mark.parametrize(
    "a0,u0", [(1, (0, 0, 0)), (Fraction(3, 2), (GaussianRational(1, 2), -1, GaussianRational(0, 3)))]
)
def test_admissible_ideal_matches_structure_equations(a0, u0):
    sys_ = build_admissible_system(a0, u0)
    assert derived_admissible(gens(sys_.space), a0, u0) == sys_.ideal_gens


def test_admissible_rejects_complex_a0():
    with pytest.raises(ValueError):
        build_admissible_system(GaussianRational(0, 1))


def test_zero_ideal_has_rank_zero(ncy):
    z = ncy.space.zero()
    sys_ = EDSSystem("zero", ncy.space, (z, z), ncy.substitution)
    assert integral_element_rank(sys_).rank == 0


def test_polar_ranks_along_default_flag(ncy, adm):
    e = default_flag(ncy.space)
    assert polar_rank(ncy, e[:3]) == 4
    assert polar_rank(ncy, e[:5]) == 19
    assert polar_rank(adm, default_flag(adm.space)[:5]) == 20


def test_characters_bookkeeping():
    assert characters((0, 0, 1, 4, 10, 19), 28) == (0, 0, 1, 3, 6, 9, 9)
    assert characters((0, 0, 1, 4, 10, 20), 35) == (0, 0, 1, 3, 6, 10, 15)


def test_monotone_and_conjugation_symmetric(ncy):
    rng = random.Random(11)
    for _ in range(3):
        flag = random_flag(ncy.space, rng)
        c = [polar_rank(ncy, flag[:k]) for k in range(6)]
        assert c == sorted(c)
        cc = [VectorSlot(v.space, {i: x.conj() for i, x in v.components.items()}) for v in flag]
        assert [polar_rank(ncy, cc[:k]) for k in range(6)] == c


def test_perturbed_system_breaks_relation(ncy):
    g3, g4 = ncy.ideal_gens
    perturbed = replace(ncy, ideal_gens=(g3, g4 + _d_psi_beta(gens(ncy.space))))
    assert not polar_relation_check(perturbed)


def test_mu_coefficient_drops_out_of_relation():
    # mu only enters dpsi through mu ^ Psi, which the four contractions do not see
    assert polar_relation_check(build_nearly_cy_system(mu_coeff=-1))


def test_admissible_relation_is_reported(adm):
    terms = polar_relation_terms(adm)
    assert len(terms) == 4
    assert not polar_relation_check(adm)


def test_admissible_degenerate_locus():
    sys_ = build_admissible_system(a0=0)
    e = default_flag(sys_.space)
    pi4 = [fiber_projection(contract([e[i] for i in c], sys_.ideal_gens[1]), sys_.fiber) for c in combinations(range(5), 3)]
    allowed = {sys_.space.idx(n) for n in ("Du1", "Du2", "Du3", "Dub1", "Dub2", "Dub3", "Da")}
    assert all(set(k[0] for k in f.terms) <= allowed for f in pi4)
    assert rank_one_forms(pi4) <= 7
    r = cartan_test(sys_)
    assert r.c[5] <= 17 and not r.involutive


def _reference_polar_forms(G):
    k, b = G.k, G.b
    tr = k[1, 1] + k[2, 2] + k[3, 3]
    return {
        (1, 2): -2 * im(k[1, 2]) - im(b[1, 2] - b[2, 1]),
        (1, 3): -2 * im(k[1, 3]) - im(b[1, 3] - b[3, 1]),
        (2, 3): -2 * im(k[2, 3]) - im(b[2, 3] - b[3, 2]),
        (1, 2, 3): G.mu + im(b[1, 1] + b[2, 2] + b[3, 3]),
        (1, 4): -2 * k[1, 1],
        (2, 4): -2 * re(k[1, 2]) - re(b[1, 2] - b[2, 1]),
        (3, 4): -2 * re(k[1, 3]) - re(b[1, 3] - b[3, 1]),
        (1, 2, 4): -2 * re(b[3, 1]),
        (1, 3, 4): 2 * re(b[2, 1]),
        (1, 5): -2 * re(k[1, 2]) + re(b[1, 2] - b[2, 1]),
        (2, 5): -2 * k[2, 2],
        (3, 5): -2 * re(k[3, 2]) + re(b[3, 2] - b[2, 3]),
        (4, 5): -2 * im(k[1, 2]) + im(b[1, 2] - b[2, 1]),
        (1, 2, 5): -2 * re(b[3, 2]),
        (1, 3, 5): -1 * tr + re(-1 * b[1, 1] + b[2, 2] - b[3, 3]),
        (2, 3, 5): -2 * re(b[1, 2]),
        (3, 4, 5): -1 * G.mu + im(b[1, 1] + b[2, 2] - b[3, 3]),
        # hand-derived: Psi(e2, e3, e4) = i, and the beta_3l terms of dpsi evaluate to -2 on (e1|e2, e4, e5)
        (2, 3, 4): tr + re(-1 * b[1, 1] + b[2, 2] + b[3, 3]),
        (1, 4, 5): -2 * im(b[3, 1]),
        (2, 4, 5): -2 * im(b[3, 2]),
    }


def test_polar_forms_of_e5(ncy):
    G = gens(ncy.space)
    e = default_flag(ncy.space)
    ref = _reference_polar_forms(G)
    for key, expected in ref.items():
        g = ncy.ideal_gens[0] if len(key) == 2 else ncy.ideal_gens[1]
        got = fiber_projection(contract([e[i - 1] for i in key], g), ncy.fiber)
        assert got == expected, key
    assert rank_one_forms(list(ref.values())) == 19
    assert rank_one_forms(polar_forms(ncy, e[:5])) == 19


def test_report_json(ncy):
    rep = cartan_test(ncy)
    data = rep.to_json()
    assert data["s"] == [0, 0, 1, 3, 6, 9, 9]
    assert data["test_lhs"] == data["test_rhs"] == 34
